#![no_main]

use bipartite_ramsey::format::{parse_homogeneous, write_homogeneous};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(h) = parse_homogeneous(text) {
        assert_eq!(parse_homogeneous(&write_homogeneous(&h)), Ok(h));
    }
});
