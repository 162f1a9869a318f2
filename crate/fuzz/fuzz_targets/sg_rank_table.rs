#![no_main]

use libfuzzer_sys::fuzz_target;
use rk3::families::SGRankTable;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = SGRankTable::parse(text) {
        let again = SGRankTable::parse(&t.to_text()).expect("written table parses");
        assert_eq!(again, t);
    }
});
