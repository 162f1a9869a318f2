#![no_main]

use libfuzzer_sys::fuzz_target;
use rk3::ks;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(entries) = ks::parse_ks(text) {
        // whatever parses must survive a round trip
        let again = ks::parse_ks(&ks::emit_ks(&entries)).expect("emitted text parses");
        assert_eq!(again, entries);
    }
});
