#![no_main]

use libfuzzer_sys::fuzz_target;
use nilext_core::{FieldSpec, Scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(11)] {
        if let Ok(x) = Scalar::parse(field, text) {
            let again = Scalar::parse(field, &x.to_string()).expect("printed scalar parses");
            assert_eq!(again, x);
        }
    }
    let _ = text.parse::<FieldSpec>();
});
