#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::temporal::{build_ujc, categorize_ujc, read_join_events};

fuzz_target!(|data: &[u8]| {
    if let Ok(communities) = read_join_events(data) {
        for events in communities.values().take(4) {
            if let Ok(curve) = build_ujc(events) {
                if curve.samples.len() <= 512 {
                    categorize_ujc(&curve);
                }
            }
        }
    }
});
