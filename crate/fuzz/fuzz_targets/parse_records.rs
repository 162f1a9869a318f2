#![no_main]

use libfuzzer_sys::fuzz_target;
use rk3::store;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((st, _)) = store::parse_records(text, None) {
        let (again, _) = store::parse_records(&store::write_records(&st), None).expect("written store parses");
        assert_eq!(again, st);
    }
});
