#![no_main]

use girard::series::{series_inverse, series_mul};
use girard::TruncatedSeries;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(a) = serde_json::from_slice::<TruncatedSeries>(data) else { return };
    let json = serde_json::to_string(&a).unwrap();
    assert_eq!(serde_json::from_str::<TruncatedSeries>(&json).unwrap(), a);
    let small = a.coeffs().iter().all(|c| c.to_string().len() < 24);
    if a.order() <= 8 && small {
        if let Ok(inv) = series_inverse(&a) {
            let one = series_mul(&a, &inv).unwrap();
            assert!(one.series_eq(&TruncatedSeries::one(a.order())).unwrap());
        }
    }
});
