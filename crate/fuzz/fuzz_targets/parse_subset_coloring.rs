#![no_main]

use bipartite_ramsey::format::{parse_subset_coloring, write_subset_coloring};
use bipartite_ramsey::hyper::find_homogeneous_set;
use bipartite_ramsey::Budget;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(c) = parse_subset_coloring(text) {
        assert_eq!(parse_subset_coloring(&write_subset_coloring(&c)).as_ref(), Ok(&c));
        for s in 1..=c.n().min(6) {
            let _ = find_homogeneous_set(&c, s, Budget::new(10_000));
        }
    }
});
