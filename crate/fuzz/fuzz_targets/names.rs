#![no_main]

use girard::families::parse_size_range;
use girard::suite::Suite;
use girard::{FamilyKind, PairBasis};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(k) = s.parse::<FamilyKind>() {
        assert_eq!(k.to_string().parse::<FamilyKind>().unwrap(), k);
    }
    if let Ok(b) = s.parse::<PairBasis>() {
        assert_eq!(b.to_string().parse::<PairBasis>().unwrap(), b);
    }
    if let Ok(suite) = s.parse::<Suite>() {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    if let Ok(r) = parse_size_range(s) {
        assert!(!r.is_empty());
        assert!(r.windows(2).all(|w| w[1] == w[0] + 1));
    }
});
