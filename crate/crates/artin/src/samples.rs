//! Ready-made Coxeter graphs used by the examples, the test suites and
//! the bundled JSON files.

use crate::graph::{CoxeterGraph, Label};

fn build(vertices: &[&str], edges: &[(&str, &str, Label)]) -> CoxeterGraph {
    CoxeterGraph::new(
        vertices.iter().map(|v| v.to_string()),
        edges
            .iter()
            .map(|(u, v, m)| (u.to_string(), v.to_string(), *m)),
    )
    .expect("sample graph")
}

/// The `A_2` graph on vertices `s`, `t` with `m(s, t) = 3`.
pub fn a2() -> CoxeterGraph {
    build(&["s", "t"], &[("s", "t", Label::Finite(3))])
}

/// The chain `A_n` on vertices `s1, …, sn`, all labels 3. Supports `n <= 9`.
pub fn a_n(n: usize) -> CoxeterGraph {
    assert!((1..=9).contains(&n));
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let edges: Vec<(String, String, Label)> = (1..n)
        .map(|i| (format!("s{i}"), format!("s{}", i + 1), Label::Finite(3)))
        .collect();
    CoxeterGraph::new(names, edges).expect("A_n")
}

/// The `D_4` graph: a center `c` joined to three leaves `u`, `v`, `w`.
pub fn d4() -> CoxeterGraph {
    build(
        &["c", "u", "v", "w"],
        &[
            ("c", "u", Label::Finite(3)),
            ("c", "v", Label::Finite(3)),
            ("c", "w", Label::Finite(3)),
        ],
    )
}

/// The affine 4-cycle `i1 – j1 – i2 – j2 – i1` with all labels 3
/// (the Coxeter graph of affine type `Ã_3`).
pub fn cycle4() -> CoxeterGraph {
    build(
        &["i1", "i2", "j1", "j2"],
        &[
            ("i1", "j1", Label::Finite(3)),
            ("j1", "i2", Label::Finite(3)),
            ("i2", "j2", Label::Finite(3)),
            ("j2", "i1", Label::Finite(3)),
        ],
    )
}

/// Two vertices `s`, `t` joined by a single edge with the given label.
pub fn single_edge(m: Label) -> CoxeterGraph {
    build(&["s", "t"], &[("s", "t", m)])
}

/// Two vertices `s`, `t` with no edge (`m = 2`).
pub fn two_commuting() -> CoxeterGraph {
    build(&["s", "t"], &[])
}

/// A triangle with all labels 3.
pub fn triangle() -> CoxeterGraph {
    build(
        &["x", "y", "z"],
        &[
            ("x", "y", Label::Finite(3)),
            ("x", "z", Label::Finite(3)),
            ("y", "z", Label::Finite(3)),
        ],
    )
}

/// A path `p1 – p2 – …` whose consecutive labels are given; length <= 9.
pub fn path_with_labels(labels: &[u32]) -> CoxeterGraph {
    assert!(labels.len() < 9);
    let n = labels.len() + 1;
    let names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let edges: Vec<(String, String, Label)> = labels
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            (
                format!("p{}", i + 1),
                format!("p{}", i + 2),
                Label::Finite(m),
            )
        })
        .collect();
    CoxeterGraph::new(names, edges).expect("path")
}

/// A star: center `c` joined to `k` leaves, all labels 3.
pub fn star(k: usize) -> CoxeterGraph {
    assert!(k <= 9);
    let mut names = vec!["c".to_string()];
    names.extend((1..=k).map(|i| format!("l{i}")));
    let edges: Vec<(String, String, Label)> = (1..=k)
        .map(|i| ("c".to_string(), format!("l{i}"), Label::Finite(3)))
        .collect();
    CoxeterGraph::new(names, edges).expect("star")
}

/// The `E_n` diagram for `n in 6..=9` (`E_9` is the affine `Ẽ_8`): a chain
/// `c1 – … – c(n-1)` with an extra vertex `x` attached to `c3`.
pub fn e_n(n: usize) -> CoxeterGraph {
    assert!((6..=9).contains(&n));
    let mut names: Vec<String> = (1..n).map(|i| format!("c{i}")).collect();
    names.push("x".to_string());
    let mut edges: Vec<(String, String, Label)> = (1..n - 1)
        .map(|i| (format!("c{i}"), format!("c{}", i + 1), Label::Finite(3)))
        .collect();
    edges.push(("x".to_string(), "c3".to_string(), Label::Finite(3)));
    CoxeterGraph::new(names, edges).expect("E_n")
}
