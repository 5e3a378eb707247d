//! Coxeter graphs: parsing the JSON interchange format, the canonical
//! emitter, and the structural predicates.
//!
//! ```bash
//! cargo run -p artin --example graph_basics
//! ```

use artin::{samples, CoxeterGraph};

fn main() {
    // graphs parse from a small JSON document; labels of 2 stay implicit
    let a2 = CoxeterGraph::parse_json(include_str!("graphs/a2.json")).unwrap();
    println!("A_2 vertices: {:?}", a2.vertices());
    println!("A_2 canonical JSON:\n{}", a2.to_json_string());

    // structural predicates
    for (name, graph) in [
        ("A_2", a2),
        ("D_4", samples::d4()),
        ("triangle", samples::triangle()),
        ("affine 4-cycle", samples::cycle4()),
        (
            "single edge m=5",
            CoxeterGraph::parse_json(include_str!("graphs/edge_m5.json")).unwrap(),
        ),
    ] {
        let all: Vec<&String> = graph.vertices().iter().collect();
        println!(
            "{name:16} small-type: {:5}  no-triangle: {:5}  spherical: {}",
            graph.is_small_type(),
            graph.has_no_triangle(),
            graph.is_spherical(&all).unwrap(),
        );
    }

    // spherical type is decided per subset against the classification
    let d4 = samples::d4();
    println!(
        "D_4 restricted to {{c, u}}: spherical = {}",
        d4.is_spherical(&["c", "u"]).unwrap()
    );
}
