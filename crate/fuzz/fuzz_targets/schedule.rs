#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::generators::GrowthSchedule;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 64 {
        return;
    }
    if let Ok(s) = text.parse::<GrowthSchedule>() {
        let again: GrowthSchedule = s.to_string().parse().expect("display parses");
        assert_eq!(again, s);
    }
});
