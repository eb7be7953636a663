#![no_main]

use gordian::braid::cert::{verify_certificate_with_limits, VerifyLimits};
use gordian::braid::Certificate;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cert) = Certificate::from_json_str(text) else {
        return;
    };
    let back = Certificate::from_json_str(&cert.to_json_string())
        .expect("serialized certificate reparses");
    assert_eq!(back, cert);
    let limits = VerifyLimits {
        max_strands: 8,
        max_letters: 256,
        max_steps: 512,
    };
    let report = verify_certificate_with_limits(&cert, &limits);
    if report.valid {
        assert_eq!(report.crossing_changes, cert.crossing_changes);
    }
});
