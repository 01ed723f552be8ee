#![no_main]

use std::collections::HashMap;

use libfuzzer_sys::fuzz_target;
use nilext_core::expr::Expr;
use nilext_core::{FieldSpec, Scalar};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(e) = Expr::parse(text) else {
        return;
    };
    let again = Expr::parse(&e.to_string()).expect("printed expression parses");
    let field = FieldSpec::Prime(7);
    let vars: HashMap<String, Scalar> =
        e.variables().into_iter().map(|v| (v, Scalar::from_i64(field, 3))).collect();
    assert_eq!(e.eval(field, &vars).ok(), again.eval(field, &vars).ok());
});
