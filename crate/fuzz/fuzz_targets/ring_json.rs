#![no_main]

use girard::{RingElem, UniPoly};
use libfuzzer_sys::fuzz_target;

// Decoders for ring elements and polynomial coefficient arrays.
fuzz_target!(|data: &[u8]| {
    if let Ok(v) = serde_json::from_slice::<RingElem>(data) {
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<RingElem>(&json).unwrap(), v);
        assert_eq!(RingElem::parse(&v.to_string()).unwrap(), v);
    }
    if let Ok(p) = serde_json::from_slice::<UniPoly>(data) {
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<UniPoly>(&json).unwrap(), p);
    }
});
