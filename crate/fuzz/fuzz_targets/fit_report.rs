#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::fitting::FitReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = text.parse::<FitReport>() {
        let again: FitReport = report.to_string().parse().expect("display parses");
        assert_eq!(again.to_string(), report.to_string());
    }
});
