//! The bundled graph files parse to the same graphs the library samples
//! construct, and survive the canonical emitter round trip.

use artin::{samples, CoxeterGraph, Label};

fn bundled(name: &str) -> CoxeterGraph {
    let text = std::fs::read_to_string(format!(
        "{}/examples/graphs/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap();
    CoxeterGraph::parse_json(&text).unwrap()
}

#[test]
fn bundled_files_match_samples() {
    assert_eq!(bundled("a2.json"), samples::a2());
    assert_eq!(bundled("a3.json"), samples::a_n(3));
    assert_eq!(bundled("d4.json"), samples::d4());
    assert_eq!(bundled("a3_tilde.json"), samples::cycle4());
    assert_eq!(
        bundled("edge_m4.json"),
        samples::single_edge(Label::Finite(4))
    );
    assert_eq!(
        bundled("edge_m5.json"),
        samples::single_edge(Label::Finite(5))
    );
    assert_eq!(
        bundled("edge_minf.json"),
        samples::single_edge(Label::Infinite)
    );
}

#[test]
fn bundled_files_round_trip_canonically() {
    for name in [
        "a2.json",
        "a3.json",
        "d4.json",
        "a3_tilde.json",
        "edge_m4.json",
        "edge_m5.json",
        "edge_minf.json",
    ] {
        let graph = bundled(name);
        let emitted = graph.to_json_string();
        assert_eq!(CoxeterGraph::parse_json(&emitted).unwrap(), graph);
    }
}
