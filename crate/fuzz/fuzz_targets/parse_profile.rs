#![no_main]

use gordian::signature::{signature_profile, SignatureProfile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(profile) = SignatureProfile::from_json_str(text) else {
        return;
    };
    let back = SignatureProfile::from_json_str(&profile.to_json_string())
        .expect("serialized profile reparses");
    assert_eq!(back, profile);
    for theta in profile.midpoints() {
        assert!(profile.value_at(theta).is_some());
    }
    // structurally valid is weaker than correct; only the true profile must match
    if profile.knot.seifert_rank() <= 4096 {
        let truth = signature_profile(profile.knot);
        if truth.breakpoints == profile.breakpoints && truth.values == profile.values {
            assert_eq!(truth, profile);
        }
    }
});
