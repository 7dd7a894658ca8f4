#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::edge_list::{edge_list_string, read_edge_list};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = read_edge_list(data) {
        let text = edge_list_string(&g);
        let back = read_edge_list(text.as_bytes()).expect("written edge lists parse");
        assert_eq!(back, g);
    }
});
