#![no_main]

use girard::symfun::{basis_table, bruteforce_table};
use girard::VariableSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(x) = s.parse::<VariableSet>() else { return };
    assert_eq!(x.to_string().parse::<VariableSet>().unwrap(), x);
    let small = x.values().iter().all(|v| v.to_string().len() < 40);
    if x.len() <= 4 && small {
        assert_eq!(basis_table(&x, 4), bruteforce_table(&x, 4));
    }
});
