#![no_main]

use gordian::braid::{braid_equal, garside_normal_form};
use gordian::BraidWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = text.parse::<BraidWord>() else {
        return;
    };
    let again: BraidWord = word.to_string().parse().expect("display form reparses");
    assert_eq!(again, word);
    // normal forms grow quickly with strands and length
    if word.strands() <= 8 && word.len() <= 64 {
        let nf = garside_normal_form(&word);
        assert!(braid_equal(&nf.to_word(), &word));
    }
});
