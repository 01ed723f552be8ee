#![no_main]

use libfuzzer_sys::fuzz_target;
use nilext_core::{BilinearForm, FieldSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(7)] {
        if let Ok(form) = BilinearForm::parse(text, field, 6) {
            let again = BilinearForm::parse(&form.to_string(), field, 6).expect("printed form parses");
            assert_eq!(again, form);
        }
    }
});
