#![no_main]

use bipartite_ramsey::format::{parse_graph, write_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(g) = parse_graph(text) {
        let written = write_graph(&g);
        assert_eq!(parse_graph(&written).as_ref(), Ok(&g));
    }
});
