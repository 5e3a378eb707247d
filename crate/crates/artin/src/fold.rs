//! Folding a Coxeter graph into small type with no triangle, together
//! with the generator-multiplying monoid morphism.
//!
//! One fold replaces each vertex `s` by a block `I(s)` of `2N` fresh
//! vertices, where `N` is the least common multiple of `{m(s,t) − 1}` over
//! the finite labels `>= 3` (`N = 1` when there are none). Pairs inside a
//! block commute, and the subgraph spanned by `I(s) ⊔ I(t)` realizes, per
//! source edge:
//!
//! * `m = 2`: no edges;
//! * `3 <= m < ∞`: `(2N/(m−1))` disjoint copies of the bipartite graph
//!   `Γ(m)` (two `A_{m−1}` chains with alternating classes), classes
//!   landing in `I(s)` and `I(t)`;
//! * `m = ∞`: `N` disjoint copies of the 4-cycle `Γ(∞)`.
//!
//! The outcome is always small type, and folding a small-type graph gives
//! a graph 2-colored by block-index parity, hence triangle-free; folding
//! twice therefore lands in small type with no triangle. The morphism
//! sends `σ_s` to the (commuting) product of the generators in `I(s)`; it
//! respects lcm's, which `check_respects_lcm` certifies computationally
//! edge by edge.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::closed;
use crate::graph::{CoxeterGraph, GraphError, Label};
use crate::monoid::{self, MonoidWord};
use crate::report::{Check, VerificationReport};
use crate::roots::RootSystem;

#[derive(Debug, Error)]
pub enum FoldError {
    #[error("Γ(m) requires a finite m >= 3, got {0}")]
    BadM(u64),
    #[error("disjoint copies require k >= 1")]
    BadK,
    #[error("letter {0} is not a vertex of the morphism source")]
    UnknownLetter(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Monoid(#[from] monoid::MonoidError),
    #[error(transparent)]
    Closed(#[from] closed::ClosedError),
}

fn pad_width(count: usize) -> usize {
    count.saturating_sub(1).max(1).to_string().len()
}

fn indexed(parent: &str, idx: usize, width: usize) -> String {
    format!("{parent}#{idx:0width$}")
}

/// `Γ(m)`: two disjoint `A_{m−1}` chains with the bipartition classes
/// phased oppositely, so `|I| = |J| = m − 1`. Returns the graph and the
/// two classes.
pub fn build_gamma_m(m: u32) -> Result<(CoxeterGraph, Vec<String>, Vec<String>), FoldError> {
    if m < 3 {
        return Err(FoldError::BadM(m as u64));
    }
    let len = (m - 1) as usize;
    let width = pad_width(len);
    let chain_a: Vec<String> = (0..len).map(|p| indexed("a", p, width)).collect();
    let chain_b: Vec<String> = (0..len).map(|p| indexed("b", p, width)).collect();
    let mut edges = Vec::new();
    for chain in [&chain_a, &chain_b] {
        for p in 0..len - 1 {
            edges.push((chain[p].clone(), chain[p + 1].clone(), Label::Finite(3)));
        }
    }
    let mut class_i = Vec::new();
    let mut class_j = Vec::new();
    for (p, name) in chain_a.iter().enumerate() {
        if p % 2 == 0 {
            class_i.push(name.clone());
        } else {
            class_j.push(name.clone());
        }
    }
    for (p, name) in chain_b.iter().enumerate() {
        if p % 2 == 0 {
            class_j.push(name.clone());
        } else {
            class_i.push(name.clone());
        }
    }
    class_i.sort();
    class_j.sort();
    let vertices = chain_a.into_iter().chain(chain_b);
    Ok((CoxeterGraph::new(vertices, edges)?, class_i, class_j))
}

/// `Γ(∞)`: the 4-cycle `i1 – j1 – i2 – j2 – i1` with all labels 3; a
/// bipartite small-type graph that is not spherical, so the two class
/// products have no common multiple.
pub fn build_gamma_inf() -> (CoxeterGraph, Vec<String>, Vec<String>) {
    let names = ["i1", "i2", "j1", "j2"].map(str::to_owned);
    let edges = [("i1", "j1"), ("j1", "i2"), ("i2", "j2"), ("j2", "i1")]
        .map(|(u, v)| (u.to_owned(), v.to_owned(), Label::Finite(3)));
    let graph = CoxeterGraph::new(names.clone(), edges).expect("Γ(∞)");
    (
        graph,
        vec!["i1".to_owned(), "i2".to_owned()],
        vec!["j1".to_owned(), "j2".to_owned()],
    )
}

/// The disjoint union of `k` relabeled copies of a graph; copy `c` of
/// vertex `v` is named `v#c`.
pub fn disjoint_copies(k: usize, graph: &CoxeterGraph) -> Result<CoxeterGraph, FoldError> {
    if k < 1 {
        return Err(FoldError::BadK);
    }
    let width = pad_width(k);
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for c in 0..k {
        for v in graph.vertices() {
            vertices.push(indexed(v, c, width));
        }
        for (i, j, m) in graph.edges() {
            edges.push((
                indexed(graph.vertex_name(i), c, width),
                indexed(graph.vertex_name(j), c, width),
                m,
            ));
        }
    }
    Ok(CoxeterGraph::new(vertices, edges)?)
}

/// A generator-multiplying monoid morphism attached to a fold: the data
/// of the source, the target, and the blocks `I(s)`.
#[derive(Debug, Clone)]
pub struct FoldMorphism {
    source: CoxeterGraph,
    target: CoxeterGraph,
    map: BTreeMap<String, Vec<String>>,
}

impl FoldMorphism {
    pub fn source(&self) -> &CoxeterGraph {
        &self.source
    }

    pub fn target(&self) -> &CoxeterGraph {
        &self.target
    }

    /// The block `I(s)` for a source vertex, in vertex order.
    pub fn block(&self, source_vertex: &str) -> Option<&[String]> {
        self.map.get(source_vertex).map(Vec::as_slice)
    }

    /// Structural invariants: blocks are nonempty, pairwise disjoint,
    /// partition the target vertex set, and commute internally.
    pub fn check_invariants(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for block in self.map.values() {
            if block.is_empty() {
                return false;
            }
            for name in block {
                if !seen.insert(name.clone()) {
                    return false;
                }
            }
            for (a, u) in block.iter().enumerate() {
                for v in &block[a + 1..] {
                    let iu = self.target.vertex_index(u).unwrap();
                    let iv = self.target.vertex_index(v).unwrap();
                    if self.target.label(iu, iv) != Label::Finite(2) {
                        return false;
                    }
                }
            }
        }
        seen.len() == self.target.vertex_count() && self.map.len() == self.source.vertex_count()
    }

    /// Letterwise substitution `σ_s ↦ ∏_{i ∈ I(s)} σ_i`, blocks emitted in
    /// the fixed vertex order.
    pub fn apply(&self, f: &MonoidWord) -> Result<MonoidWord, FoldError> {
        let mut letters = Vec::new();
        for &s in f.letters() {
            if s >= self.source.vertex_count() {
                return Err(FoldError::UnknownLetter(s));
            }
            let block = &self.map[self.source.vertex_name(s)];
            for name in block {
                letters.push(self.target.vertex_index(name).expect("target vertex"));
            }
        }
        Ok(MonoidWord::new(letters))
    }

    /// Composition `second ∘ first` (apply `first`, then `second`).
    pub fn compose(second: &FoldMorphism, first: &FoldMorphism) -> FoldMorphism {
        let mut map = BTreeMap::new();
        for (s, mid) in &first.map {
            let mut block: Vec<String> = mid
                .iter()
                .flat_map(|v| second.map[v].iter().cloned())
                .collect();
            block.sort();
            map.insert(s.clone(), block);
        }
        FoldMorphism {
            source: first.source.clone(),
            target: second.target.clone(),
            map,
        }
    }

    /// JSON form `{"target": <graph>, "map": {"s": ["s#0", …]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "target": self.target.to_json(),
            "map": self.map,
        })
    }

    /// Certifies, pair by pair, that the morphism respects lcm's:
    /// images of generators are nontrivial; for finite `m` the image of
    /// `prod(σ_s, σ_t; m)` equals `Δ` of the image support subgraph (the
    /// lcm of the two images); for `m = ∞` the image support subgraph is
    /// not spherical, so the images have no common multiple.
    pub fn check_respects_lcm(&self, cap: usize) -> Result<VerificationReport, FoldError> {
        let started = std::time::Instant::now();
        let mut report = VerificationReport::new("respects-lcm", &self.source);

        let nonempty = self.map.values().all(|b| !b.is_empty());
        report.push(Check::new("φ(σ_s) ≠ 1 for every generator", nonempty, None));

        let decodable = self.target.is_small_type() && self.target.has_no_triangle();
        let sys = if decodable {
            Some(RootSystem::new(self.target.clone()).expect("small type"))
        } else {
            None
        };

        let n = self.source.vertex_count();
        for s in 0..n {
            for t in s + 1..n {
                let pair = format!(
                    "({}, {})",
                    self.source.vertex_name(s),
                    self.source.vertex_name(t)
                );
                let support: Vec<usize> = [s, t]
                    .iter()
                    .flat_map(|&v| {
                        self.map[self.source.vertex_name(v)]
                            .iter()
                            .map(|name| self.target.vertex_index(name).expect("target vertex"))
                    })
                    .collect();
                match self.source.label(s, t) {
                    Label::Finite(m) => {
                        let image = self.apply(&monoid::prod_word(
                            &monoid::generator(s),
                            &monoid::generator(t),
                            m,
                        ))?;
                        let delta = monoid::delta(&self.target, &support)?;
                        let outcome = if let Some(sys) = &sys {
                            let mut budget = cap;
                            closed::eq_via_decode(sys, &image, &delta, &mut budget)
                                .map_err(FoldError::from)
                        } else {
                            monoid::monoid_eq_bfs(&self.target, &image, &delta, cap)
                                .map_err(FoldError::from)
                        };
                        match outcome {
                            Ok(equal) => report.push(Check::new(
                                format!("φ(σ_s ∨ σ_t) = φ(σ_s) ∨ φ(σ_t) on {pair}, m = {m}"),
                                equal,
                                None,
                            )),
                            Err(FoldError::Monoid(monoid::MonoidError::CapExceeded { cap })) => {
                                report.push(Check::new(
                                    format!("φ(σ_s ∨ σ_t) = φ(σ_s) ∨ φ(σ_t) on {pair}, m = {m}"),
                                    false,
                                    Some(
                                        serde_json::json!({"error": format!("cap {cap} exceeded")}),
                                    ),
                                ))
                            }
                            Err(e) => return Err(e),
                        }
                    }
                    Label::Infinite => {
                        let spherical = self.target.is_spherical_indices(&support);
                        report.push(Check::new(
                            format!("image support of {pair} (m = ∞) is not spherical"),
                            !spherical,
                            None,
                        ));
                    }
                }
            }
        }
        report.finish(started);
        Ok(report)
    }
}

/// One fold of an arbitrary Coxeter graph. The target is always small
/// type; when the source is small type, the target is additionally
/// bipartite by block-index parity, hence has no triangle.
pub fn fold_once(graph: &CoxeterGraph) -> FoldMorphism {
    let mut n_fold: u64 = 1;
    for (_, _, label) in graph.edges() {
        if let Label::Finite(m) = label {
            n_fold = lcm_u64(n_fold, (m - 1) as u64);
        }
    }
    let block_size = 2 * n_fold as usize;
    let width = pad_width(block_size);

    let mut map: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut vertices = Vec::new();
    for s in graph.vertices() {
        let block: Vec<String> = (0..block_size).map(|k| indexed(s, k, width)).collect();
        vertices.extend(block.iter().cloned());
        map.insert(s.clone(), block);
    }

    let mut edges = Vec::new();
    for (i, j, label) in graph.edges() {
        let bs = &map[graph.vertex_name(i)];
        let bt = &map[graph.vertex_name(j)];
        match label {
            Label::Finite(3) => {
                // perfect matching s#k – t#(k xor 1): N copies of Γ(3),
                // joining opposite index parities
                for k in (0..block_size).step_by(2) {
                    edges.push((bs[k].clone(), bt[k + 1].clone(), Label::Finite(3)));
                    edges.push((bs[k + 1].clone(), bt[k].clone(), Label::Finite(3)));
                }
            }
            Label::Finite(m) => {
                // 2N/(m−1) copies of Γ(m): pairs of alternating chains
                let len = (m - 1) as usize;
                debug_assert_eq!(block_size % len, 0, "N is the lcm of the m−1");
                let copies = block_size / len;
                let mut si = 0;
                let mut ti = 0;
                for _ in 0..copies {
                    for start_with_s in [true, false] {
                        let chain: Vec<String> = (0..len)
                            .map(|p| {
                                if (p % 2 == 0) == start_with_s {
                                    let name = bs[si].clone();
                                    si += 1;
                                    name
                                } else {
                                    let name = bt[ti].clone();
                                    ti += 1;
                                    name
                                }
                            })
                            .collect();
                        for p in 0..len - 1 {
                            edges.push((chain[p].clone(), chain[p + 1].clone(), Label::Finite(3)));
                        }
                    }
                }
            }
            Label::Infinite => {
                // N copies of the 4-cycle Γ(∞)
                for c in 0..n_fold as usize {
                    let (i1, i2) = (&bs[2 * c], &bs[2 * c + 1]);
                    let (j1, j2) = (&bt[2 * c], &bt[2 * c + 1]);
                    for (u, v) in [(i1, j1), (j1, i2), (i2, j2), (j2, i1)] {
                        edges.push((u.clone(), v.clone(), Label::Finite(3)));
                    }
                }
            }
        }
    }

    let target = CoxeterGraph::new(vertices, edges).expect("fold target");
    debug_assert!(target.is_small_type());
    FoldMorphism {
        source: graph.clone(),
        target,
        map,
    }
}

/// Two folds composed: the target is small type with no triangle, for any
/// source graph.
pub fn fold_to_small_no_triangle(graph: &CoxeterGraph) -> FoldMorphism {
    let first = fold_once(graph);
    let second = fold_once(first.target());
    let composite = FoldMorphism::compose(&second, &first);
    debug_assert!(composite.target.is_small_type() && composite.target.has_no_triangle());
    composite
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    }
    a / gcd(a, b) * b
}
