//! Positive root systems of small-type Coxeter graphs, with exact integer
//! arithmetic.
//!
//! For a small-type graph (all labels 2 or 3) every root is an integer
//! combination `β = Σ λ_s α_s` of the simple roots, and the bilinear form
//! takes integer values: `⟨α_s, α_s⟩ = 2`, `⟨α_s, α_t⟩ = 0` when
//! `m(s, t) = 2` and `−1` when `m(s, t) = 3`.
//!
//! Roots are enumerated breadth-first by *depth*: the simple roots have
//! depth 1, and a positive root `β` of depth `d + 1` is `s(γ)` for some
//! positive root `γ` of depth `d` with `⟨α_s, γ⟩ < 0`. The depth step rule
//! (depth decreases, stays, or grows with the sign of `⟨α_s, β⟩`) makes
//! the search complete level by level, so the enumeration works unchanged
//! for affine graphs with infinitely many roots: the horizon is extended
//! lazily and memoized.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;

use thiserror::Error;

use crate::graph::{CoxeterGraph, Label};

/// A vector in the root lattice, as dense integer coordinates over the
/// graph's vertex order. Values handed out by [`RootSystem`] are always
/// actual roots; arbitrary vectors can be tested with
/// [`RootSystem::is_positive_root`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The simple root `α_s` in an `n`-vertex system.
    pub fn simple(n: usize, s: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[s] = 1;
        Root { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Root { coeffs: vec![0; n] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, s: usize) -> i64 {
        self.coeffs[s]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// All coefficients `>= 0` and not the zero vector.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c >= 0)
    }

    /// All coefficients `<= 0` and not the zero vector.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|&c| c <= 0)
    }

    pub fn negate(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Coefficient sum; for a positive root this bounds its depth.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// JSON form: a map from vertex name to coefficient, zeros omitted.
    pub fn to_json(&self, graph: &CoxeterGraph) -> serde_json::Value {
        let map: BTreeMap<&str, i64> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (graph.vertex_name(i), c))
            .collect();
        serde_json::to_value(map).expect("root JSON")
    }

    pub fn to_json_string(&self, graph: &CoxeterGraph) -> String {
        self.to_json(graph).to_string()
    }

    pub fn from_json(graph: &CoxeterGraph, value: &serde_json::Value) -> Result<Root, RootError> {
        let obj = value
            .as_object()
            .ok_or_else(|| RootError::BadRootJson(value.to_string()))?;
        let mut coeffs = vec![0i64; graph.vertex_count()];
        for (name, c) in obj {
            let i = graph
                .vertex_index(name)
                .ok_or_else(|| RootError::BadRootJson(format!("unknown vertex {name:?}")))?;
            coeffs[i] = c
                .as_i64()
                .ok_or_else(|| RootError::BadRootJson(format!("non-integer coefficient {c}")))?;
        }
        Ok(Root { coeffs })
    }
}

#[derive(Debug, Error)]
pub enum RootError {
    #[error("graph is not of small type (a label outside {{2, 3}} is present)")]
    NotSmallType,
    #[error("{0} is not a positive root of this system")]
    NotAPositiveRoot(String),
    #[error("invalid root JSON: {0}")]
    BadRootJson(String),
}

#[derive(Default)]
struct Tables {
    /// `by_depth[d - 1]`: the sorted positive roots of depth `d`.
    by_depth: Vec<Vec<Root>>,
    depth_of: HashMap<Root, u32>,
    /// Set once a BFS level comes out empty (finite systems only).
    exhausted: bool,
}

/// Shared, lazily extended context for root computations over one
/// small-type graph. Read-mostly: concurrent readers are fine and horizon
/// extension is serialized behind a write lock, so results are identical
/// regardless of interleaving.
pub struct RootSystem {
    graph: CoxeterGraph,
    form: Vec<Vec<i64>>,
    tables: RwLock<Tables>,
}

impl RootSystem {
    pub fn new(graph: CoxeterGraph) -> Result<Self, RootError> {
        if !graph.is_small_type() {
            return Err(RootError::NotSmallType);
        }
        let n = graph.vertex_count();
        let mut form = vec![vec![0i64; n]; n];
        for (i, row) in form.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = match graph.label(i, j) {
                    Label::Finite(1) => 2,
                    Label::Finite(2) => 0,
                    Label::Finite(3) => -1,
                    _ => unreachable!("small type"),
                };
            }
        }
        Ok(RootSystem {
            graph,
            form,
            tables: RwLock::new(Tables::default()),
        })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn simple(&self, s: usize) -> Root {
        Root::simple(self.rank(), s)
    }

    /// The symmetric bilinear form, extended bilinearly from the
    /// simple-root table.
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        let mut total = 0;
        for (i, &x) in a.coeffs().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs().iter().enumerate() {
                if y != 0 {
                    total += x * y * self.form[i][j];
                }
            }
        }
        total
    }

    /// `⟨α_s, x⟩`, a single row of the form.
    pub fn pairing_simple(&self, s: usize, x: &Root) -> i64 {
        x.coeffs()
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.form[s][j])
            .sum()
    }

    /// The simple reflection `s(x) = x − ⟨α_s, x⟩ α_s`.
    pub fn reflect_simple(&self, s: usize, x: &Root) -> Root {
        let a = self.pairing_simple(s, x);
        let mut coeffs = x.coeffs().to_vec();
        coeffs[s] -= a;
        Root { coeffs }
    }

    /// The reflection along a root: `r_β(x) = x − ⟨x, β⟩ β`.
    /// Callers must pass a positive root `β`.
    pub fn reflect_by_root(&self, beta: &Root, x: &Root) -> Root {
        let a = self.pairing(x, beta);
        let coeffs = x
            .coeffs()
            .iter()
            .zip(beta.coeffs())
            .map(|(xc, bc)| xc - a * bc)
            .collect();
        Root { coeffs }
    }

    fn ensure_depth(&self, d: u32) {
        {
            let t = self.tables.read().unwrap();
            if t.exhausted || t.by_depth.len() >= d as usize {
                return;
            }
        }
        let mut t = self.tables.write().unwrap();
        if t.by_depth.is_empty() {
            let mut simples: Vec<Root> = (0..self.rank()).map(|s| self.simple(s)).collect();
            simples.sort();
            for r in &simples {
                t.depth_of.insert(r.clone(), 1);
            }
            t.by_depth.push(simples);
        }
        while t.by_depth.len() < d as usize && !t.exhausted {
            let depth = t.by_depth.len() as u32;
            let mut next = BTreeSet::new();
            for beta in t.by_depth.last().unwrap() {
                for s in 0..self.rank() {
                    if self.pairing_simple(s, beta) < 0 {
                        let gamma = self.reflect_simple(s, beta);
                        if !t.depth_of.contains_key(&gamma) {
                            next.insert(gamma);
                        }
                    }
                }
            }
            if next.is_empty() {
                t.exhausted = true;
            } else {
                for r in &next {
                    t.depth_of.insert(r.clone(), depth + 1);
                }
                t.by_depth.push(next.into_iter().collect());
            }
        }
    }

    /// Depth of a positive root: 1 for simple roots, and the BFS level
    /// otherwise. Fails if the vector is not a positive root.
    pub fn depth(&self, beta: &Root) -> Result<u32, RootError> {
        self.lookup_depth(beta)
            .ok_or_else(|| RootError::NotAPositiveRoot(format!("{:?}", beta.coeffs())))
    }

    fn lookup_depth(&self, beta: &Root) -> Option<u32> {
        if !beta.is_positive() {
            return None;
        }
        // Each step down in depth lowers the height by at least 1, so
        // dp(β) <= height(β); enumerating that far decides membership.
        self.ensure_depth(beta.height() as u32);
        self.tables.read().unwrap().depth_of.get(beta).copied()
    }

    pub fn is_positive_root(&self, candidate: &Root) -> bool {
        self.lookup_depth(candidate).is_some()
    }

    /// Is the vector a root at all (positive or negative)?
    pub fn is_root(&self, candidate: &Root) -> bool {
        self.is_positive_root(candidate) || self.is_positive_root(&candidate.negate())
    }

    /// All positive roots of depth at most `max_depth`, each exactly once,
    /// sorted by `(depth, lexicographic coefficients)`.
    pub fn positive_roots_up_to(&self, max_depth: u32) -> Vec<Root> {
        self.ensure_depth(max_depth);
        let t = self.tables.read().unwrap();
        let mut out = Vec::new();
        for level in t.by_depth.iter().take(max_depth as usize) {
            out.extend(level.iter().cloned());
        }
        out
    }

    /// The positive roots of exactly the given depth (possibly empty for
    /// finite systems).
    pub fn roots_at_depth(&self, depth: u32) -> Vec<Root> {
        self.ensure_depth(depth);
        let t = self.tables.read().unwrap();
        t.by_depth
            .get(depth as usize - 1)
            .cloned()
            .unwrap_or_default()
    }

    /// True once the whole (finite) root system has been enumerated.
    pub fn is_exhausted(&self) -> bool {
        self.tables.read().unwrap().exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn system(g: CoxeterGraph) -> RootSystem {
        RootSystem::new(g).unwrap()
    }

    fn root(coeffs: &[i64]) -> Root {
        Root::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn rejects_non_small_type() {
        let g = samples::single_edge(Label::Finite(4));
        assert!(matches!(RootSystem::new(g), Err(RootError::NotSmallType)));
    }

    #[test]
    fn pairing_on_simple_roots() {
        let sys = system(samples::a2());
        let (s, t) = (sys.simple(0), sys.simple(1));
        assert_eq!(sys.pairing(&s, &t), -1);
        assert_eq!(sys.pairing(&s, &s), 2);
        let sum = s.add(&t);
        assert_eq!(sys.pairing(&sum, &sum), 2);
    }

    #[test]
    fn simple_reflections() {
        let sys = system(samples::a2());
        let (s, t) = (sys.simple(0), sys.simple(1));
        assert_eq!(sys.reflect_simple(0, &t), root(&[1, 1]));
        assert_eq!(sys.reflect_simple(0, &s), root(&[-1, 0]));
        assert_eq!(sys.reflect_simple(0, &root(&[1, 1])), t);
    }

    #[test]
    fn reflection_by_root() {
        let sys = system(samples::a2());
        let beta = root(&[1, 1]);
        // r_β reduces to the simple reflection when β is simple
        let x = root(&[1, 1]);
        assert_eq!(
            sys.reflect_by_root(&sys.simple(0), &x),
            sys.reflect_simple(0, &x)
        );
        assert_eq!(sys.reflect_by_root(&beta, &sys.simple(0)), root(&[0, -1]));
        assert_eq!(sys.reflect_by_root(&beta, &beta), beta.negate());
    }

    #[test]
    fn depth_of_small_roots() {
        let sys = system(samples::a2());
        assert_eq!(sys.depth(&sys.simple(0)).unwrap(), 1);
        assert_eq!(sys.depth(&root(&[1, 1])).unwrap(), 2);

        // depth follows the BFS level rule in the A_3 chain
        let sys3 = system(samples::a_n(3));
        assert_eq!(sys3.depth(&root(&[1, 1, 0])).unwrap(), 2);
        assert_eq!(sys3.depth(&root(&[0, 1, 1])).unwrap(), 2);
        assert_eq!(sys3.depth(&root(&[1, 1, 1])).unwrap(), 3);
    }

    #[test]
    fn depth_rejects_non_roots() {
        let sys = system(samples::a2());
        assert!(sys.depth(&root(&[2, 0])).is_err());
        assert!(sys.depth(&root(&[1, -1])).is_err());
        assert!(sys.depth(&root(&[0, 0])).is_err());
        assert!(!sys.is_positive_root(&root(&[2, 1])));
        assert!(sys.is_root(&root(&[-1, -1])));
    }

    #[test]
    fn enumeration_counts_classical_systems() {
        // |Φ⁺| = 3, 6, 12 for A_2, A_3, D_4; A_2 is exhausted by depth 2
        assert_eq!(system(samples::a2()).positive_roots_up_to(2).len(), 3);
        assert_eq!(system(samples::a2()).positive_roots_up_to(10).len(), 3);
        assert_eq!(system(samples::a_n(3)).positive_roots_up_to(10).len(), 6);
        assert_eq!(system(samples::d4()).positive_roots_up_to(10).len(), 12);

        // the affine 4-cycle has exactly its 4 simple roots at depth 1
        let affine = system(samples::cycle4());
        assert_eq!(affine.positive_roots_up_to(1).len(), 4);
        assert!(!affine.is_exhausted());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let sys = system(samples::a_n(3));
        let roots = sys.positive_roots_up_to(6);
        let mut keys: Vec<(u32, Root)> = roots
            .iter()
            .map(|r| (sys.depth(r).unwrap(), r.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        keys.dedup();
        assert_eq!(keys.len(), roots.len());
    }

    /// Every root at depth d+1 is s(γ) for some γ at depth d with
    /// `⟨α_s, γ⟩ < 0`, and the three-way depth step rule holds for every
    /// enumerated pair.
    #[test]
    fn bfs_frontier_and_depth_step_rule() {
        for graph in [samples::a_n(3), samples::cycle4()] {
            let sys = system(graph);
            let max_depth = 5;
            let roots = sys.positive_roots_up_to(max_depth);
            for beta in &roots {
                let d = sys.depth(beta).unwrap();
                if d > 1 {
                    let found = (0..sys.rank()).any(|s| {
                        let gamma = sys.reflect_simple(s, beta);
                        gamma.is_positive()
                            && sys.depth(&gamma).unwrap() == d - 1
                            && sys.pairing_simple(s, &gamma) < 0
                    });
                    assert!(found, "no frontier parent for {beta:?}");
                }
                for s in 0..sys.rank() {
                    if *beta == sys.simple(s) {
                        continue;
                    }
                    let image = sys.reflect_simple(s, beta);
                    let expected = match sys.pairing_simple(s, beta).signum() {
                        1 => d - 1,
                        0 => d,
                        _ => d + 1,
                    };
                    assert_eq!(sys.depth(&image).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn reflections_preserve_the_form_and_are_involutive() {
        let sys = system(samples::a_n(3));
        let roots = sys.positive_roots_up_to(6);
        for x in &roots {
            for y in &roots {
                for s in 0..sys.rank() {
                    assert_eq!(
                        sys.pairing(&sys.reflect_simple(s, x), &sys.reflect_simple(s, y)),
                        sys.pairing(x, y)
                    );
                }
            }
            for beta in &roots {
                let twice = sys.reflect_by_root(beta, &sys.reflect_by_root(beta, x));
                assert_eq!(&twice, x);
            }
        }
    }

    #[test]
    fn lazy_horizon_extension_on_affine_graph() {
        let sys = system(samples::cycle4());
        let shallow = sys.positive_roots_up_to(2);
        assert!(!shallow.is_empty());
        // query a root beyond the current horizon; found transparently
        let deep = sys.positive_roots_up_to(6);
        let last = deep.last().unwrap().clone();
        let fresh = system(samples::cycle4());
        assert_eq!(fresh.depth(&last).unwrap(), sys.depth(&last).unwrap());
        assert!(deep.len() > shallow.len());
    }

    #[test]
    fn concurrent_horizon_extension_is_consistent() {
        // readers on several threads extend the horizon of one shared
        // system; results agree with a single-threaded reference
        let shared = system(samples::cycle4());
        let reference = system(samples::cycle4());
        let expected = reference.positive_roots_up_to(7);
        std::thread::scope(|scope| {
            for depth in [3u32, 5, 7, 4, 6, 7] {
                let sys = &shared;
                scope.spawn(move || {
                    let roots = sys.positive_roots_up_to(depth);
                    for r in &roots {
                        assert!(sys.depth(r).is_ok());
                    }
                });
            }
        });
        assert_eq!(shared.positive_roots_up_to(7), expected);
    }

    #[test]
    fn root_json_round_trip() {
        let g = samples::a2();
        let sys = system(g.clone());
        let beta = root(&[1, 1]);
        let json = beta.to_json(&g);
        assert_eq!(json.to_string(), r#"{"s":1,"t":1}"#);
        assert_eq!(Root::from_json(&g, &json).unwrap(), beta);
        assert_eq!(sys.depth(&beta).unwrap(), 2);
    }
}
