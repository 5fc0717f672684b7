#![no_main]

use girard::UniPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = UniPoly::parse(s, "q") else { return };
    let text = p.to_string();
    let back = UniPoly::parse(&text, p.name()).unwrap();
    assert_eq!(back, p, "{text}");
    if let Some(d) = p.degree() {
        assert!(!p.coeffs()[d].is_zero());
    }
});
