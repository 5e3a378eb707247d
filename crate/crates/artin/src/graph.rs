//! Coxeter graphs: construction, JSON interchange, structural predicates,
//! and the classification of spherical (finite) type.
//!
//! A Coxeter graph over a vertex set `S` records a symmetric label
//! `m(s, t) ∈ {2, 3, 4, …} ∪ {∞}` for each pair of distinct vertices,
//! with `m = 2` the default for pairs that carry no edge. Vertices are
//! arbitrary strings and are kept in lexicographic order throughout, so
//! every iteration, tie-break and serialization in this crate is
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

/// Edge label of a Coxeter graph. Stored labels are always `>= 3` or
/// infinite; the label 2 is implicit for unlisted pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    /// The numeric value for finite labels, `None` for `∞`.
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("edge {u:?}-{v:?} listed more than once")]
    DuplicateEdge { u: String, v: String },
    #[error("edge {u:?}-{v:?} is a self-loop")]
    SelfLoop { u: String, v: String },
    #[error("edge {u:?}-{v:?} has label {m} < 3; labels of 2 must be implicit")]
    ExplicitSmallLabel { u: String, v: String, m: u64 },
    #[error("edge {u:?}-{v:?} has invalid label {found}; expected an integer >= 3 or \"inf\"")]
    BadLabel { u: String, v: String, found: String },
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vertex {0:?} in subset")]
    UnknownSubsetVertex(String),
}

/// A Coxeter graph: an ordered vertex set together with the symmetric
/// label map. Immutable after construction; safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    vertices: Vec<String>,
    /// Labels `>= 3` keyed by index pairs `(i, j)` with `i < j`.
    labels: BTreeMap<(usize, usize), Label>,
}

impl CoxeterGraph {
    /// Builds a graph from vertex names and explicit edges. Edges with
    /// label 2 are rejected (the default label is implicit), as are
    /// duplicate vertices, duplicate pairs and self-loops.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, Label)>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut seen = BTreeSet::new();
        for v in vertices {
            if !seen.insert(v.clone()) {
                return Err(GraphError::DuplicateVertex(v));
            }
            names.push(v);
        }
        names.sort();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();

        let mut labels = BTreeMap::new();
        for (u, v, m) in edges {
            let iu = *index
                .get(u.as_str())
                .ok_or_else(|| GraphError::UnknownVertex(u.clone()))?;
            let iv = *index
                .get(v.as_str())
                .ok_or_else(|| GraphError::UnknownVertex(v.clone()))?;
            if iu == iv {
                return Err(GraphError::SelfLoop { u, v });
            }
            if let Label::Finite(k) = m {
                if k < 3 {
                    return Err(GraphError::ExplicitSmallLabel { u, v, m: k as u64 });
                }
            }
            let key = (iu.min(iv), iu.max(iv));
            if labels.insert(key, m).is_some() {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        Ok(CoxeterGraph {
            vertices: names,
            labels,
        })
    }

    /// Vertex names in the fixed (lexicographic) order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    /// Index of a vertex in the fixed order.
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(name))
            .ok()
    }

    /// The label `m(i, j)`; `Finite(2)` for unlisted pairs, `Finite(1)` on
    /// the diagonal.
    pub fn label(&self, i: usize, j: usize) -> Label {
        if i == j {
            return Label::Finite(1);
        }
        let key = (i.min(j), i.max(j));
        self.labels.get(&key).copied().unwrap_or(Label::Finite(2))
    }

    /// Explicit edges `(i, j, m)` with `i < j`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.labels.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    /// True iff every label is 2 or 3.
    pub fn is_small_type(&self) -> bool {
        self.labels.values().all(|&m| m == Label::Finite(3))
    }

    /// True iff no triple of vertices is pairwise joined (all three labels >= 3).
    pub fn has_no_triangle(&self) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.label(i, j) == Label::Finite(2) {
                    continue;
                }
                for k in j + 1..n {
                    if self.label(i, k) != Label::Finite(2) && self.label(j, k) != Label::Finite(2)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the standard parabolic subgroup `W_T` is finite, decided
    /// against the classification of finite Coxeter groups: each connected
    /// component of the full subgraph on `T` must be one of
    /// `A_n`, `B_n`, `D_n`, `E_6`, `E_7`, `E_8`, `F_4`, `H_3`, `H_4`,
    /// or `I_2(m)` with `m` finite.
    pub fn is_spherical<S: AsRef<str>>(&self, subset: &[S]) -> Result<bool, GraphError> {
        let mut t = Vec::new();
        for name in subset {
            let i = self
                .vertex_index(name.as_ref())
                .ok_or_else(|| GraphError::UnknownSubsetVertex(name.as_ref().to_owned()))?;
            t.push(i);
        }
        t.sort_unstable();
        t.dedup();
        Ok(self
            .components_of(&t)
            .iter()
            .all(|c| self.component_is_finite_type(c)))
    }

    /// `is_spherical` over vertex indices; panics on out-of-range indices.
    pub fn is_spherical_indices(&self, subset: &[usize]) -> bool {
        let mut t = subset.to_vec();
        t.sort_unstable();
        t.dedup();
        self.components_of(&t)
            .iter()
            .all(|c| self.component_is_finite_type(c))
    }

    /// Connected components (edges = labels >= 3) of the full subgraph on `t`.
    fn components_of(&self, t: &[usize]) -> Vec<Vec<usize>> {
        let mut unvisited: BTreeSet<usize> = t.iter().copied().collect();
        let mut components = Vec::new();
        while let Some(&start) = unvisited.iter().next() {
            unvisited.remove(&start);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let next: Vec<usize> = unvisited
                    .iter()
                    .copied()
                    .filter(|&w| self.label(v, w) != Label::Finite(2))
                    .collect();
                for w in next {
                    unvisited.remove(&w);
                    comp.push(w);
                    stack.push(w);
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    fn component_is_finite_type(&self, comp: &[usize]) -> bool {
        let n = comp.len();
        if n == 1 {
            return true; // A_1
        }
        // Collect component edges; any infinite label disqualifies.
        let mut edges = Vec::new();
        for (a, &i) in comp.iter().enumerate() {
            for &j in &comp[a + 1..] {
                match self.label(i, j) {
                    Label::Finite(2) => {}
                    Label::Finite(m) => edges.push((i, j, m)),
                    Label::Infinite => return false,
                }
            }
        }
        // Every finite-type diagram is a tree.
        if edges.len() != n - 1 {
            return false;
        }
        let mut degree: BTreeMap<usize, usize> = comp.iter().map(|&v| (v, 0)).collect();
        for &(i, j, _) in &edges {
            *degree.get_mut(&i).unwrap() += 1;
            *degree.get_mut(&j).unwrap() += 1;
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|v| degree[v] >= 3).collect();
        let high: Vec<(usize, usize, u32)> =
            edges.iter().copied().filter(|&(_, _, m)| m >= 4).collect();

        if high.len() > 1 || (!high.is_empty() && !branch.is_empty()) {
            return false;
        }

        if !branch.is_empty() {
            // All labels 3; a unique degree-3 vertex with arms matching D or E.
            if branch.len() != 1 || degree[&branch[0]] != 3 {
                return false;
            }
            let mut arms = self.arm_lengths(comp, branch[0]);
            arms.sort_unstable();
            let [p, q, r] = match arms.as_slice() {
                [p, q, r] => [*p, *q, *r],
                _ => return false,
            };
            return (p == 1 && q == 1) // D_n
                || (p == 1 && q == 2 && (2..=4).contains(&r)); // E_6, E_7, E_8
        }

        // No branch vertex: the component is a path.
        if n == 2 {
            // I_2(m) for any finite m (covers A_2, B_2, H_2, G_2, ...).
            return true;
        }
        if high.is_empty() {
            return true; // A_n
        }
        // A path of length >= 3 with one label >= 4: B_n, F_4, H_3 or H_4.
        let (hi, hj, m) = high[0];
        let end_edge = degree[&hi] == 1 || degree[&hj] == 1;
        match m {
            4 => {
                if end_edge {
                    true // B_n
                } else {
                    // F_4: a path on 4 vertices with the 4 in the middle.
                    n == 4 && degree[&hi] == 2 && degree[&hj] == 2
                }
            }
            5 => end_edge && n <= 4, // H_3, H_4
            _ => false,
        }
    }

    /// Arm lengths (edge counts) of the three paths leaving `center`
    /// inside the all-label-3 tree component `comp`.
    fn arm_lengths(&self, comp: &[usize], center: usize) -> Vec<usize> {
        let mut arms = Vec::new();
        for &start in comp {
            if start == center || self.label(center, start) == Label::Finite(2) {
                continue;
            }
            let mut len = 1;
            let mut prev = center;
            let mut cur = start;
            loop {
                let next = comp
                    .iter()
                    .copied()
                    .find(|&w| w != prev && w != cur && self.label(cur, w) != Label::Finite(2));
                match next {
                    Some(w) => {
                        len += 1;
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms
    }

    /// Parses the JSON interchange format:
    /// `{"vertices": [...], "edges": [{"u": .., "v": .., "m": ..}, ...]}`
    /// where `m` is an integer `>= 3` or the string `"inf"`.
    pub fn parse_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        let mut edges = Vec::new();
        for e in doc.edges {
            let m = match e.m {
                LabelDoc::Int(k) if k >= 3 => {
                    Label::Finite(u32::try_from(k).map_err(|_| GraphError::BadLabel {
                        u: e.u.clone(),
                        v: e.v.clone(),
                        found: k.to_string(),
                    })?)
                }
                LabelDoc::Int(k) => {
                    return Err(GraphError::ExplicitSmallLabel {
                        u: e.u,
                        v: e.v,
                        m: k,
                    })
                }
                LabelDoc::Str(s) if s == "inf" => Label::Infinite,
                LabelDoc::Str(s) => {
                    return Err(GraphError::BadLabel {
                        u: e.u,
                        v: e.v,
                        found: format!("{s:?}"),
                    })
                }
            };
            edges.push((e.u, e.v, m));
        }
        CoxeterGraph::new(doc.vertices, edges)
    }

    /// Emits the canonical JSON form: vertices sorted, edges sorted by
    /// `(u, v)`, `"inf"` spelled exactly so, labels of 2 omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges()
            .map(|(i, j, m)| {
                let m = match m {
                    Label::Finite(k) => serde_json::json!(k),
                    Label::Infinite => serde_json::json!("inf"),
                };
                serde_json::json!({
                    "u": self.vertices[i],
                    "v": self.vertices[j],
                    "m": m,
                })
            })
            .collect();
        serde_json::json!({ "vertices": self.vertices, "edges": edges })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("graph JSON")
    }
}

#[derive(Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
}

#[derive(Deserialize)]
struct EdgeDoc {
    u: String,
    v: String,
    m: LabelDoc,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LabelDoc {
    Int(u64),
    Str(String),
}
