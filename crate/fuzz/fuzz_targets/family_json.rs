#![no_main]

use girard::{family_alphabet, FamilySpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(spec) = FamilySpec::from_json(s) else { return };
    let Ok(family) = spec.validate() else { return };
    assert_eq!(family.to_spec().validate().unwrap(), family);
    let wire = serde_json::to_string(&family.to_spec()).unwrap();
    assert_eq!(FamilySpec::from_json(&wire).unwrap().validate().unwrap(), family);
    let small = family.with_size(3);
    let _ = family_alphabet(&small);
});
