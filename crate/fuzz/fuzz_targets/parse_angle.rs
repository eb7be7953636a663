#![no_main]

use gordian::angle::{fraction_string, parse_fraction};
use gordian::Angle;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_fraction(text) {
        assert_eq!(parse_fraction(&fraction_string(&r)).ok(), Some(r));
    }
    let Ok(angle) = text.parse::<Angle>() else {
        return;
    };
    assert_eq!(angle.to_string(), text.trim());
    assert_eq!(angle.conjugate().conjugate(), angle);
});
