#![no_main]

use gordian::TorusKnot;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(knot) = text.parse::<TorusKnot>() else {
        return;
    };
    assert!(knot.p() <= knot.q());
    let again: TorusKnot = knot.to_string().parse().expect("display form reparses");
    assert_eq!(again, knot);
});
