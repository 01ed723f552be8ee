#![no_main]

use libfuzzer_sys::fuzz_target;
use nilext_core::format::{parse_algebra, AlgebraFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = AlgebraFile::parse(text) {
        // printing a parsed file must give text that parses to the same file
        let printed = file.to_string();
        let reparsed = AlgebraFile::parse(&printed).expect("printed file parses");
        assert_eq!(reparsed.to_string(), printed);
    }
    if let Ok((name, a)) = parse_algebra(text) {
        let printed = AlgebraFile::from_algebra(&name, &a).to_string();
        let (_, b) = parse_algebra(&printed).expect("printed algebra parses");
        assert_eq!(a, b);
    }
});
