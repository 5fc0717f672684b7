#![no_main]

use girard::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(x) = s.parse::<Scalar>() {
        let text = x.to_string();
        assert_eq!(text.parse::<Scalar>().unwrap(), x, "{text}");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
    }
});
