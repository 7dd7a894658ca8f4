#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet_cli::config::{parse_config, splice_config};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(config) = parse_config(text) {
        let args: Vec<String> = ["tempnet", "analyze", "--out", "x"]
            .map(String::from)
            .to_vec();
        let spliced = splice_config(&args, &config);
        assert!(spliced.len() >= args.len());
    }
});
