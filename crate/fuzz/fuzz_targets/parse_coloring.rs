#![no_main]

use bipartite_ramsey::format::{parse_coloring, parse_graph, write_coloring};
use libfuzzer_sys::fuzz_target;

// Input is a graph and a coloring separated by a line containing `---`.
fuzz_target!(|text: &str| {
    let Some((graph, coloring)) = text.split_once("\n---\n") else {
        return;
    };
    let Ok(g) = parse_graph(graph) else {
        return;
    };
    if let Ok(c) = parse_coloring(coloring, &g) {
        assert_eq!(parse_coloring(&write_coloring(&g, &c), &g).as_ref(), Ok(&c));
    }
});
