#![no_main]

use girard::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(p) = serde_json::from_slice::<Partition>(data) else { return };
    assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
    assert!(p.parts().iter().all(|&x| x > 0));
    let total: usize = p.multiplicities().iter().map(|(part, m)| part * m).sum();
    assert_eq!(total, p.size());
    let json = serde_json::to_string(&p).unwrap();
    assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
});
