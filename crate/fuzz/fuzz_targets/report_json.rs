#![no_main]

use girard::suite::SuiteSummary;
use girard::VerificationReport;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(r) = serde_json::from_slice::<VerificationReport>(data) {
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&json).unwrap(), r);
    }
    if let Ok(s) = serde_json::from_slice::<SuiteSummary>(data) {
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<SuiteSummary>(&json).unwrap(), s);
    }
});
