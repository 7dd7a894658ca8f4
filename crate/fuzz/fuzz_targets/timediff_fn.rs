#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::generators::TimeDiffFunction;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(f) = text.parse::<TimeDiffFunction>() {
        let again: TimeDiffFunction = f.to_string().parse().expect("display parses");
        assert_eq!(again, f);
        for t in 0..4 {
            let v = f.eval(t);
            assert!(v.is_finite() && v >= 0.0);
        }
    }
});
