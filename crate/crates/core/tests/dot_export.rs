use bipartite_ramsey::constructions::set_bipartite;
use bipartite_ramsey::dot::export_dot;
use bipartite_ramsey::format::{parse_witness, write_witness, HostSpec};
use bipartite_ramsey::graph::{Color, EdgeColoring};
use bipartite_ramsey::hyper::DerivedColor;
use bipartite_ramsey::induced::extract_induced;
use bipartite_ramsey::subset::Subset;

/// The (1,3) case: RED at the first and third sorted position of each triple.
#[test]
fn extracted_copy_is_highlighted() {
    let host = set_bipartite(9, 3).unwrap();
    let coloring = EdgeColoring::from_fn(&host, |l, r| {
        let x = host.set_label(r).unwrap();
        if x.nth(2) == Some(l) {
            Color::Blue
        } else {
            Color::Red
        }
    });
    let derived = DerivedColor {
        color: Color::Red,
        positions: Subset::from_elements([1, 3]).unwrap(),
    };
    let w = extract_induced(Subset::prefix(9), derived, 4, 2, &host, &coloring).unwrap();

    // The witness survives a trip through its text form.
    let doc = parse_witness(&write_witness(&w, Some(HostSpec::SetGraph { n: 9, k: 3 }))).unwrap();
    let w = doc.resolve(&host).unwrap();

    let dot = export_dot(&host, Some(&coloring), Some(&w)).unwrap();
    let bold_nodes: Vec<&str> = dot.lines().filter(|l| l.contains("style=bold")).collect();
    assert_eq!(bold_nodes.iter().filter(|l| l.trim_start().starts_with('l')).count(), 4);
    assert_eq!(bold_nodes.iter().filter(|l| l.trim_start().starts_with('r')).count(), 6);
    assert!(dot.contains("r29 [label=\"2, 3, 4\", style=bold"));

    let bold_edges: Vec<&str> = dot.lines().filter(|l| l.contains("--") && l.contains("penwidth=2")).collect();
    assert_eq!(bold_edges.len(), 12);
    assert!(bold_edges.iter().all(|l| l.contains("color=red")));
    assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 9 * 28);
}

#[test]
fn dangling_witness_is_an_error() {
    let host = set_bipartite(4, 2).unwrap();
    let doc = parse_witness("bipartite 1 1\ne 1 1\nwitness\nwleft 1 5\nwright 1 1,2\n").unwrap();
    let w = doc.resolve(&host).unwrap();
    assert!(export_dot(&host, None, Some(&w)).is_err());
}
