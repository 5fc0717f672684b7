#![no_main]

use girard::{FamilyKind, FamilySpec};
use libfuzzer_sys::fuzz_target;

// First byte picks the kind, the rest is `k=v,...` text.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let kind = FamilyKind::ALL[sel as usize % FamilyKind::ALL.len()];
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let Ok(spec) = FamilySpec::from_kv(kind, text) else { return };
    if let Ok(family) = spec.validate() {
        assert_eq!(family.kind(), kind);
        assert_eq!(family.to_spec().validate().unwrap(), family);
    }
});
