//! Artin monoid elements over an arbitrary Coxeter graph: equality,
//! left-divisibility, least common multiples, `Δ_T`, and the map `L`
//! sending a positive word to the maximal group element whose lift
//! left-divides it.
//!
//! All defining relations `prod(σ_s, σ_t; m) = prod(σ_t, σ_s; m)` are
//! homogeneous, so word length is an invariant and the braid-move closure
//! of a word is exactly its equality class. Two routes are implemented:
//!
//! * a breadth-first search over the braid closure (works on any graph,
//!   capped, used as the oracle), and
//! * a recursive left-division that peels one generator at a time using
//!   the lcm lattice structure (`σ_s` divides `σ_r g` iff
//!   `prod(σ_s, σ_r; m−1)` divides `g`, and never when `m = ∞`); this is
//!   the efficient path used by the closed-set decoding.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::coxeter::{self, GroupElement, WAction};
use crate::graph::{CoxeterGraph, Label};
use crate::report::{Check, VerificationReport};
use crate::roots::RootSystem;

/// Default node cap for braid-closure searches.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A positive word over the generators, one letter per vertex index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonoidWord {
    letters: Vec<usize>,
}

impl MonoidWord {
    pub fn new(letters: Vec<usize>) -> Self {
        MonoidWord { letters }
    }

    pub fn empty() -> Self {
        MonoidWord {
            letters: Vec::new(),
        }
    }

    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Self, coxeter::WordError> {
        Ok(MonoidWord {
            letters: coxeter::parse_letters(graph, text)?,
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &MonoidWord) -> MonoidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MonoidWord { letters }
    }

    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        MonoidWordDisplay { graph, word: self }
    }

    pub fn to_text(&self, graph: &CoxeterGraph) -> String {
        coxeter::letters_to_string(graph, &self.letters)
    }
}

struct MonoidWordDisplay<'a> {
    graph: &'a CoxeterGraph,
    word: &'a MonoidWord,
}

impl fmt::Display for MonoidWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.to_text(self.graph))
    }
}

#[derive(Debug, Error)]
pub enum MonoidError {
    #[error("search cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("lcm search undecided within length cap {cap}")]
    Undecided { cap: usize },
    #[error("subset is not of spherical type; Δ_T does not exist")]
    NotSpherical,
    #[error("Δ_T for a non-small-type component on {0} vertices is not supported")]
    UnsupportedDelta(usize),
}

/// `prod(a, b; m)`: the alternating product `aba…` with `m` factors.
pub fn prod_word(a: &MonoidWord, b: &MonoidWord, m: u32) -> MonoidWord {
    let mut letters = Vec::new();
    for k in 0..m {
        let part = if k % 2 == 0 { a } else { b };
        letters.extend_from_slice(part.letters());
    }
    MonoidWord { letters }
}

/// Single-letter convenience constructor.
pub fn generator(s: usize) -> MonoidWord {
    MonoidWord { letters: vec![s] }
}

/// Breadth-first search over the braid-move closure of `start`, stopping
/// early when `found` matches. Returns the matching word, or `None` when
/// the closure is exhausted. Errs when more than `cap` words are visited.
fn closure_search<F>(
    graph: &CoxeterGraph,
    start: &[usize],
    cap: usize,
    mut found: F,
) -> Result<Option<Vec<usize>>, MonoidError>
where
    F: FnMut(&[usize]) -> bool,
{
    if found(start) {
        return Ok(Some(start.to_vec()));
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(start.to_vec());
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    queue.push_back(start.to_vec());
    while let Some(word) = queue.pop_front() {
        for pos in 0..word.len() {
            let a = word[pos];
            let rest = word.len() - pos;
            if rest < 2 {
                continue;
            }
            let b = word[pos + 1];
            if a == b {
                continue;
            }
            let m = match graph.label(a, b) {
                Label::Finite(m) => m as usize,
                Label::Infinite => continue,
            };
            if m > rest {
                continue;
            }
            // does prod(a, b; m) occur literally at pos?
            let alternates = (0..m).all(|k| word[pos + k] == if k % 2 == 0 { a } else { b });
            if !alternates {
                continue;
            }
            let mut rewritten = word.clone();
            for (k, slot) in rewritten[pos..pos + m].iter_mut().enumerate() {
                *slot = if k % 2 == 0 { b } else { a };
            }
            if seen.contains(&rewritten) {
                continue;
            }
            if found(&rewritten) {
                return Ok(Some(rewritten));
            }
            if seen.len() >= cap {
                return Err(MonoidError::CapExceeded { cap });
            }
            seen.insert(rewritten.clone());
            queue.push_back(rewritten);
        }
    }
    Ok(None)
}

/// The full braid-move closure of a word (its monoid equality class).
pub fn braid_closure(
    graph: &CoxeterGraph,
    word: &[usize],
    cap: usize,
) -> Result<BTreeSet<Vec<usize>>, MonoidError> {
    let mut all = BTreeSet::new();
    closure_search(graph, word, cap, |w| {
        all.insert(w.to_vec());
        false
    })?;
    Ok(all)
}

/// Exact equality in the monoid by braid-closure search. Never wrong:
/// exceeding the cap is an explicit error.
pub fn monoid_eq_bfs(
    graph: &CoxeterGraph,
    f1: &MonoidWord,
    f2: &MonoidWord,
    cap: usize,
) -> Result<bool, MonoidError> {
    if f1.len() != f2.len() {
        return Ok(false);
    }
    let target = f2.letters();
    Ok(closure_search(graph, f1.letters(), cap, |w| w == target)?.is_some())
}

/// Left-divisibility via the braid-closure route: `σ_s` divides `f` iff
/// some word in the closure of `f` starts with `s`; then cancel and
/// recurse on the tail.
pub fn left_divides(
    graph: &CoxeterGraph,
    d: &MonoidWord,
    f: &MonoidWord,
    cap: usize,
) -> Result<bool, MonoidError> {
    if d.len() > f.len() {
        return Ok(false);
    }
    let mut current = f.letters().to_vec();
    for &s in d.letters() {
        match closure_search(graph, &current, cap, |w| w[0] == s)? {
            Some(w) => current = w[1..].to_vec(),
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Cancels a single generator on the left, without any closure search:
/// for `f = σ_r g`, the generator `σ_s` divides `f` iff `r = s`, or
/// `m(r, s)` is finite and `prod(σ_s, σ_r; m−1)` divides `g`; the
/// remainder is then `prod(σ_r, σ_s; m−1) · h`. Returns `None` exactly
/// when `σ_s` does not divide `f`. The budget bounds the recursion work.
pub fn cancel_generator(
    graph: &CoxeterGraph,
    s: usize,
    f: &MonoidWord,
    budget: &mut usize,
) -> Result<Option<MonoidWord>, MonoidError> {
    cancel_generator_letters(graph, s, f.letters(), budget).map(|r| r.map(MonoidWord::new))
}

fn cancel_generator_letters(
    graph: &CoxeterGraph,
    s: usize,
    f: &[usize],
    budget: &mut usize,
) -> Result<Option<Vec<usize>>, MonoidError> {
    if *budget == 0 {
        return Err(MonoidError::CapExceeded { cap: 0 });
    }
    *budget -= 1;
    let (&r, g) = match f.split_first() {
        Some(split) => split,
        None => return Ok(None),
    };
    if r == s {
        return Ok(Some(g.to_vec()));
    }
    let m = match graph.label(r, s) {
        Label::Finite(m) => m,
        // no common multiple of σ_r and σ_s, so σ_s cannot divide σ_r g
        Label::Infinite => return Ok(None),
    };
    // peel prod(σ_s, σ_r; m−1) off g, letter by letter
    let mut current = g.to_vec();
    for k in 0..m - 1 {
        let letter = if k % 2 == 0 { s } else { r };
        match cancel_generator_letters(graph, letter, &current, budget)? {
            Some(rest) => current = rest,
            None => return Ok(None),
        }
    }
    // f = prod(σ_r, σ_s; m) h = σ_s prod(σ_r, σ_s; m−1) h
    let mut out = Vec::with_capacity(f.len() - 1);
    for k in 0..m - 1 {
        out.push(if k % 2 == 0 { r } else { s });
    }
    out.extend_from_slice(&current);
    Ok(Some(out))
}

/// Left-quotient of `f` by the word `d`: `Some(h)` with `d · h ≡ f` when
/// `d` left-divides `f`, `None` otherwise.
pub fn left_quotient(
    graph: &CoxeterGraph,
    d: &MonoidWord,
    f: &MonoidWord,
    budget: &mut usize,
) -> Result<Option<MonoidWord>, MonoidError> {
    if d.len() > f.len() {
        return Ok(None);
    }
    let mut current = f.letters().to_vec();
    for &s in d.letters() {
        match cancel_generator_letters(graph, s, &current, budget)? {
            Some(rest) => current = rest,
            None => return Ok(None),
        }
    }
    Ok(Some(MonoidWord::new(current)))
}

/// `L(f)`: the unique maximal `w ∈ W` with `τ(w)` left-dividing `f`.
/// Greedy: extend by the least `s` with `l(ws) = l(w) + 1` whose lift
/// still divides `f`; the down-set structure of `{v : τ(v) < f}` makes
/// greedy complete regardless of extension order.
pub fn el_l(
    sys: &RootSystem,
    f: &MonoidWord,
    budget: &mut usize,
) -> Result<GroupElement, MonoidError> {
    let graph = sys.graph();
    let mut act = WAction::identity(sys);
    let mut word: Vec<usize> = Vec::new();
    let mut remainder = f.clone();
    'outer: loop {
        for s in 0..sys.rank() {
            if !act.right_ascent(s) {
                continue;
            }
            // τ(ws) = τ(w) σ_s since the length goes up; test σ_s on the
            // remainder of f after τ(w)
            if let Some(rest) = cancel_generator(graph, s, &remainder, budget)? {
                word.push(s);
                act.mul_right_gen(sys, s);
                remainder = rest;
                continue 'outer;
            }
        }
        break;
    }
    Ok(coxeter::canonicalize_letters(sys, &word))
}

/// Least common multiple of two positive words, bounded search.
///
/// * `Ok(Some(h))`: the lcm, a word of minimal length with both inputs as
///   left divisors.
/// * `Ok(None)`: provably no common multiple (for single generators via
///   `m = ∞`; in general, when the generators dividing the inputs span a
///   non-spherical subset).
/// * `Err(Undecided)`: the bounded search was inconclusive.
pub fn lcm(
    graph: &CoxeterGraph,
    f1: &MonoidWord,
    f2: &MonoidWord,
    length_cap: usize,
    budget: &mut usize,
) -> Result<Option<MonoidWord>, MonoidError> {
    if f1.is_empty() {
        return Ok(Some(f2.clone()));
    }
    if f2.is_empty() {
        return Ok(Some(f1.clone()));
    }
    // closed form for generator pairs
    if let (&[s], &[t]) = (f1.letters(), f2.letters()) {
        if s == t {
            return Ok(Some(generator(s)));
        }
        return Ok(match graph.label(s, t) {
            Label::Finite(m) => Some(prod_word(&generator(s), &generator(t), m)),
            Label::Infinite => None,
        });
    }
    // nonexistence certificate: every generator dividing f1 or f2 divides
    // any common multiple, so those generators must span a spherical subset
    let mut divisor_gens: Vec<usize> = Vec::new();
    for s in 0..graph.vertex_count() {
        let in_f1 = cancel_generator(graph, s, f1, budget)?.is_some();
        let in_f2 = in_f1 || cancel_generator(graph, s, f2, budget)?.is_some();
        if in_f1 || in_f2 {
            divisor_gens.push(s);
        }
    }
    if !graph.is_spherical_indices(&divisor_gens) {
        return Ok(None);
    }
    // bounded breadth-first search over right extensions of f1
    if f1.len() <= length_cap {
        let mut frontier: BTreeSet<Vec<usize>> = BTreeSet::new();
        frontier.insert(f1.letters().to_vec());
        loop {
            for word in &frontier {
                let candidate = MonoidWord::new(word.clone());
                if left_quotient(graph, f2, &candidate, budget)?.is_some() {
                    return Ok(Some(candidate));
                }
            }
            let len = frontier.iter().next().map_or(0, |w| w.len());
            if len >= length_cap {
                break;
            }
            let mut next = BTreeSet::new();
            for word in &frontier {
                for s in 0..graph.vertex_count() {
                    let mut w = word.clone();
                    w.push(s);
                    next.insert(w);
                }
            }
            frontier = next;
        }
    }
    Err(MonoidError::Undecided { cap: length_cap })
}

/// `Δ_T = τ(w_T)`, the lcm of the generators in a spherical subset `T`.
/// Components of size 1 or 2 use the closed dihedral forms; larger
/// components must be small type and go through the longest element.
pub fn delta(graph: &CoxeterGraph, t_subset: &[usize]) -> Result<MonoidWord, MonoidError> {
    if !graph.is_spherical_indices(t_subset) {
        return Err(MonoidError::NotSpherical);
    }
    let mut subset = t_subset.to_vec();
    subset.sort_unstable();
    subset.dedup();

    // split into connected components (in vertex order)
    let mut remaining: BTreeSet<usize> = subset.iter().copied().collect();
    let mut letters = Vec::new();
    while let Some(&start) = remaining.iter().next() {
        let mut comp = vec![start];
        remaining.remove(&start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let adjacent: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&w| graph.label(v, w) != Label::Finite(2))
                .collect();
            for w in adjacent {
                remaining.remove(&w);
                comp.push(w);
                stack.push(w);
            }
        }
        comp.sort_unstable();
        letters.extend(delta_component(graph, &comp)?);
    }
    Ok(MonoidWord::new(letters))
}

fn delta_component(graph: &CoxeterGraph, comp: &[usize]) -> Result<Vec<usize>, MonoidError> {
    match *comp {
        [s] => Ok(vec![s]),
        [s, t] => {
            let m = graph
                .label(s, t)
                .finite()
                .expect("spherical dihedral component");
            Ok(prod_word(&generator(s), &generator(t), m)
                .letters()
                .to_vec())
        }
        _ => {
            let all_simply_laced = comp.iter().enumerate().all(|(a, &i)| {
                comp[a + 1..]
                    .iter()
                    .all(|&j| matches!(graph.label(i, j), Label::Finite(2) | Label::Finite(3)))
            });
            if !all_simply_laced {
                return Err(MonoidError::UnsupportedDelta(comp.len()));
            }
            // longest element of the induced (small-type) component
            let names: Vec<String> = comp
                .iter()
                .map(|&i| graph.vertex_name(i).to_owned())
                .collect();
            let edges = comp.iter().enumerate().flat_map(|(a, &i)| {
                comp[a + 1..]
                    .iter()
                    .filter_map(move |&j| match graph.label(i, j) {
                        Label::Finite(3) => Some((
                            graph.vertex_name(i).to_owned(),
                            graph.vertex_name(j).to_owned(),
                            Label::Finite(3),
                        )),
                        _ => None,
                    })
            });
            let induced = CoxeterGraph::new(names.clone(), edges).expect("induced subgraph");
            let sys = RootSystem::new(induced).expect("small type");
            let indices: Vec<usize> = (0..sys.rank()).collect();
            let w =
                coxeter::longest_element(&sys, &indices).map_err(|_| MonoidError::NotSpherical)?;
            // map letters back to the ambient graph
            Ok(w.word()
                .iter()
                .map(|&k| {
                    graph
                        .vertex_index(sys.graph().vertex_name(k))
                        .expect("component vertex")
                })
                .collect())
        }
    }
}

/// The order-theory verification suite: Prop-2.3-style recursion law for
/// `L`, `|Φ_w| = l(w)`, closedness of inversion sets, and compatibility
/// of the weak order with monoid divisibility, over all words up to
/// `max_len` letters.
pub fn verify_order_laws(
    sys: &RootSystem,
    max_len: usize,
    cap: usize,
) -> Result<VerificationReport, MonoidError> {
    let started = std::time::Instant::now();
    let graph = sys.graph();
    let n = sys.rank();
    let mut report = VerificationReport::new("order", graph);
    report.param("max_len", max_len.to_string());

    let words = all_words(n, max_len);

    // L(fg) = L(f · τ(L(g))) for all pairs
    let mut law_fail = None;
    'law: for f in &words {
        for g in &words {
            let mut budget = cap;
            let fg = f.concat(g);
            let lhs = el_l(sys, &fg, &mut budget)?;
            let rhs = el_l(
                sys,
                &f.concat(&el_l(sys, g, &mut budget)?.tau()),
                &mut budget,
            )?;
            if lhs != rhs {
                law_fail = Some(serde_json::json!({
                    "f": f.to_text(graph),
                    "g": g.to_text(graph),
                    "L(fg)": lhs.display(graph).to_string(),
                    "L(f tau(L(g)))": rhs.display(graph).to_string(),
                }));
                break 'law;
            }
        }
    }
    report.push(Check::new(
        format!("L(fg) = L(f·τ(L(g))) for words up to length {max_len}"),
        law_fail.is_none(),
        law_fail,
    ));

    // element-level laws over all elements reachable from the words
    let mut elements: Vec<GroupElement> = words
        .iter()
        .map(|w| coxeter::canonicalize_letters(sys, w.letters()))
        .collect();
    elements.sort();
    elements.dedup();

    let mut inv_fail = None;
    let mut closed_fail = None;
    for e in &elements {
        let inv = coxeter::inversion_set(sys, e);
        if inv.len() != e.length() && inv_fail.is_none() {
            inv_fail = Some(serde_json::json!({
                "w": e.display(graph).to_string(),
                "l(w)": e.length(),
                "|Phi_w|": inv.len(),
            }));
        }
        if !crate::closed::is_closed(sys, &inv) && closed_fail.is_none() {
            closed_fail = Some(serde_json::json!({
                "w": e.display(graph).to_string(),
            }));
        }
    }
    report.push(Check::new("|Φ_w| = l(w)", inv_fail.is_none(), inv_fail));
    report.push(Check::new(
        "Φ_w is a closed subset",
        closed_fail.is_none(),
        closed_fail,
    ));

    // u < v in the weak order iff τ(u) left-divides τ(v)
    let mut tau_fail = None;
    'tau: for u in &elements {
        for v in &elements {
            let mut budget = cap;
            let weak = coxeter::weak_le(sys, u, v);
            let divides = left_quotient(graph, &u.tau(), &v.tau(), &mut budget)?.is_some();
            if weak != divides {
                tau_fail = Some(serde_json::json!({
                    "u": u.display(graph).to_string(),
                    "v": v.display(graph).to_string(),
                    "weak_le": weak,
                    "tau_divides": divides,
                }));
                break 'tau;
            }
        }
    }
    report.push(Check::new(
        "u ≤ v ⟺ τ(u) | τ(v)",
        tau_fail.is_none(),
        tau_fail,
    ));

    report.finish(started);
    Ok(report)
}

/// All words over `n` letters with length `0..=max_len`, in length-then-lex
/// order.
pub fn all_words(n: usize, max_len: usize) -> Vec<MonoidWord> {
    let mut out = vec![MonoidWord::empty()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for s in 0..n {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(MonoidWord::new));
        level = next;
    }
    out
}
