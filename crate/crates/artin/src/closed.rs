//! Closed subsets of the positive roots and the combinatorial calculus on
//! them: the maximal element `C(A)`, the action `g ∗ A` of positive words,
//! and the decoding procedure that turns the action into a complete
//! invariant for monoid equality.
//!
//! A finite `A ⊆ Φ⁺` is *closed* when every pairing `⟨α, β⟩` of its
//! elements is `>= −1` and `α + β ∈ A` whenever the pairing is exactly
//! `−1`. Inversion sets `Φ_w` are closed, `C(A)` is the maximal `w` with
//! `Φ_w ⊆ A`, and the single-generator action is
//!
//! ```text
//! σ_s ∗ A = {α_s} ∪ {β : ⟨α_s, β⟩ = 0, β ∈ A}
//!                 ∪ {β : ⟨α_s, β⟩ = a > 0, β ≠ α_s, β − a α_s ∈ A}
//!                 ∪ {β : ⟨α_s, β⟩ = −a < 0, β ∈ A, β + a α_s ∈ A}
//! ```
//!
//! extended to words with the last letter acting first. The key law
//! `C(g ∗ A) = L(g · τ(C(A)))` makes `decode` below recover, from `f`
//! alone, the sequence `u₁, u₂, …` with `f = τ(u₁) τ(u₂) ⋯` and
//! `u_i = L(remaining suffix)`; two positive words are equal in the
//! monoid iff they decode identically.
//!
//! The Hilbert-space picture behind the action is replaced by its finite
//! shadow: `star_word_via_support` recomputes `g ∗ A` from the supports of
//! the `x = 0`, `y = 1/2` specialization of the representation, with exact
//! dyadic arithmetic, and serves as an independent cross-check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use thiserror::Error;

use crate::coxeter::{self, GroupElement, WAction};
use crate::monoid::{self, MonoidWord};
use crate::report::{Check, VerificationReport};
use crate::roots::{Root, RootSystem};
use crate::util::SplitMix64;

#[derive(Debug, Error)]
pub enum ClosedError {
    #[error(transparent)]
    Monoid(#[from] monoid::MonoidError),
    #[error("set is not closed")]
    NotClosed,
    #[error("internal decode failure: τ({element}) does not divide the remaining word")]
    InternalStrip { element: String },
}

/// A finite closed set of positive roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ClosedSet {
    roots: BTreeSet<Root>,
}

impl ClosedSet {
    pub fn empty() -> Self {
        ClosedSet::default()
    }

    /// Validates closedness on construction.
    pub fn new(sys: &RootSystem, roots: BTreeSet<Root>) -> Result<Self, ClosedError> {
        if is_closed(sys, &roots) {
            Ok(ClosedSet { roots })
        } else {
            Err(ClosedError::NotClosed)
        }
    }

    pub(crate) fn from_unchecked(roots: BTreeSet<Root>) -> Self {
        ClosedSet { roots }
    }

    pub fn roots(&self) -> &BTreeSet<Root> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, beta: &Root) -> bool {
        self.roots.contains(beta)
    }

    /// JSON: an array of root objects sorted by `(depth, lex)`.
    pub fn to_json(&self, sys: &RootSystem) -> serde_json::Value {
        let mut keyed: Vec<(u32, &Root)> = self
            .roots
            .iter()
            .map(|r| (sys.depth(r).expect("closed-set member"), r))
            .collect();
        keyed.sort();
        serde_json::Value::Array(
            keyed
                .into_iter()
                .map(|(_, r)| r.to_json(sys.graph()))
                .collect(),
        )
    }
}

/// The three-condition closedness test. Elements must already be positive
/// roots of the system.
pub fn is_closed(sys: &RootSystem, roots: &BTreeSet<Root>) -> bool {
    let items: Vec<&Root> = roots.iter().collect();
    for (i, alpha) in items.iter().enumerate() {
        for beta in &items[i + 1..] {
            let p = sys.pairing(alpha, beta);
            if p < -1 {
                return false;
            }
            if p == -1 && !roots.contains(&alpha.add(beta)) {
                return false;
            }
        }
    }
    true
}

/// `C(A)`: the unique maximal `w` in the weak order with `Φ_w ⊆ A`,
/// computed greedily; each extension appends the least `s` with
/// `l(ws) = l(w) + 1` and `w(α_s) ∈ A`.
pub fn cmax(sys: &RootSystem, a: &ClosedSet) -> GroupElement {
    let mut act = WAction::identity(sys);
    let mut word = Vec::new();
    'outer: loop {
        for s in 0..sys.rank() {
            if act.right_ascent(s) && a.contains(&act.img[s]) {
                word.push(s);
                act.mul_right_gen(sys, s);
                continue 'outer;
            }
        }
        break;
    }
    coxeter::canonicalize_letters(sys, &word)
}

/// The single-generator action `σ_s ∗ A`, per-element: keep the
/// orthogonal part of `A`, reflect the part pairing negatively (keeping
/// the original when its reflection also lies in `A`), and adjoin `α_s`.
pub fn star(sys: &RootSystem, s: usize, a: &ClosedSet) -> ClosedSet {
    let mut out = BTreeSet::new();
    out.insert(sys.simple(s));
    for gamma in a.roots() {
        let p = sys.pairing_simple(s, gamma);
        if p == 0 {
            out.insert(gamma.clone());
        } else if p < 0 {
            let reflected = sys.reflect_simple(s, gamma);
            if a.contains(&reflected) {
                out.insert(gamma.clone());
            }
            out.insert(reflected);
        }
    }
    let out = ClosedSet::from_unchecked(out);
    debug_assert!(is_closed(sys, out.roots()));
    out
}

/// The action of a word, last letter first (operator composition).
pub fn star_word(sys: &RootSystem, g: &MonoidWord, a: &ClosedSet) -> ClosedSet {
    let mut current = a.clone();
    for &s in g.letters().iter().rev() {
        current = star(sys, s, &current);
    }
    current
}

/// `{α_s} ∪ s(A ∖ {α_s})`, the envelope that always contains `σ_s ∗ A`.
pub fn star_envelope(sys: &RootSystem, s: usize, a: &ClosedSet) -> BTreeSet<Root> {
    let alpha_s = sys.simple(s);
    let mut out: BTreeSet<Root> = a
        .roots()
        .iter()
        .filter(|r| **r != alpha_s)
        .map(|r| sys.reflect_simple(s, r))
        .collect();
    out.insert(alpha_s);
    out
}

/// Splits `f` into the sequence `u₁, u₂, …` with `f = τ(u₁) τ(u₂) ⋯` and
/// each `u_i` maximal for the remaining suffix. The sequence is a complete
/// invariant: `decode(f) = decode(g)` iff `f` and `g` are equal in the
/// monoid. The budget bounds the letter-cancellation work.
pub fn decode(
    sys: &RootSystem,
    f: &MonoidWord,
    budget: &mut usize,
) -> Result<Vec<GroupElement>, ClosedError> {
    let graph = sys.graph();
    let mut remainder = f.clone();
    let mut out = Vec::new();
    while !remainder.is_empty() {
        let shadow = star_word(sys, &remainder, &ClosedSet::empty());
        let head = cmax(sys, &shadow);
        if head.is_identity() {
            return Err(ClosedError::InternalStrip {
                element: "1".to_owned(),
            });
        }
        for &s in head.word() {
            remainder =
                monoid::cancel_generator(graph, s, &remainder, budget)?.ok_or_else(|| {
                    ClosedError::InternalStrip {
                        element: head.display(graph).to_string(),
                    }
                })?;
        }
        out.push(head);
    }
    Ok(out)
}

/// Monoid equality through the complete decode invariant.
pub fn eq_via_decode(
    sys: &RootSystem,
    f: &MonoidWord,
    g: &MonoidWord,
    budget: &mut usize,
) -> Result<bool, ClosedError> {
    if f.len() != g.len() {
        return Ok(false);
    }
    Ok(decode(sys, f, budget)? == decode(sys, g, budget)?)
}

/// Exact nonnegative dyadic number `num / 2^scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Dyadic {
    num: BigInt,
    scale: u32,
}

impl Dyadic {
    fn one() -> Self {
        Dyadic {
            num: BigInt::from(1),
            scale: 0,
        }
    }

    fn half_of(&self) -> Self {
        Dyadic {
            num: self.num.clone(),
            scale: self.scale + 1,
        }
    }

    fn add(&self, other: &Dyadic) -> Dyadic {
        let scale = self.scale.max(other.scale);
        let num = &self.num * BigInt::from(2u8).pow(scale - self.scale)
            + &other.num * BigInt::from(2u8).pow(scale - other.scale);
        Dyadic { num, scale }
    }

    fn is_zero(&self) -> bool {
        self.num == BigInt::ZERO
    }
}

/// Recomputes `g ∗ A` from the supports of the specialized representation
/// (`x = 0`, `y = 1/2`, exact dyadic arithmetic): for the complement `A'`
/// of `A`, the image supports `Supp_g(e_β)` are unioned into `B'` and the
/// result is the complement of `B'`. All sets are cut to a window of
/// depths large enough to contain `g ∗ A` and every support that could
/// reach it.
pub fn star_word_via_support(sys: &RootSystem, g: &MonoidWord, a: &ClosedSet) -> ClosedSet {
    let depth_of_a = a
        .roots()
        .iter()
        .map(|r| sys.depth(r).expect("closed-set member"))
        .max()
        .unwrap_or(0);
    let window = depth_of_a + g.len() as u32 + 1;
    let source_depth = window + g.len() as u32;

    let mut complement_support: BTreeSet<Root> = BTreeSet::new();
    for beta in sys.positive_roots_up_to(source_depth) {
        if a.contains(&beta) {
            continue;
        }
        // ψ₀(g) e_β with y = 1/2: apply the specialized φ letters
        let mut vector: BTreeMap<Root, Dyadic> = BTreeMap::new();
        vector.insert(beta, Dyadic::one());
        for &s in g.letters().iter().rev() {
            let alpha_s = sys.simple(s);
            let mut next: BTreeMap<Root, Dyadic> = BTreeMap::new();
            let mut add = |key: Root, value: Dyadic| {
                let entry = next.remove(&key);
                let merged = match entry {
                    Some(existing) => existing.add(&value),
                    None => value,
                };
                next.insert(key, merged);
            };
            for (gamma, coeff) in &vector {
                if *gamma == alpha_s {
                    continue;
                }
                match sys.pairing_simple(s, gamma).signum() {
                    0 => add(gamma.clone(), coeff.clone()),
                    1 => add(sys.reflect_simple(s, gamma), coeff.half_of()),
                    _ => {
                        add(gamma.clone(), coeff.half_of());
                        add(sys.reflect_simple(s, gamma), coeff.clone());
                    }
                }
            }
            vector = next;
        }
        for (gamma, coeff) in vector {
            if !coeff.is_zero() {
                complement_support.insert(gamma);
            }
        }
    }

    let result: BTreeSet<Root> = sys
        .positive_roots_up_to(window)
        .into_iter()
        .filter(|r| !complement_support.contains(r))
        .collect();
    ClosedSet::from_unchecked(result)
}

/// All closed subsets made of roots with depth at most `max_depth`.
/// Exponential in the window size; callers keep the window tiny.
pub fn enumerate_closed_subsets(sys: &RootSystem, max_depth: u32) -> Vec<ClosedSet> {
    let roots = sys.positive_roots_up_to(max_depth);
    assert!(roots.len() <= 16, "window too large to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..(1 << roots.len()) {
        let set: BTreeSet<Root> = roots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, r)| r.clone())
            .collect();
        if is_closed(sys, &set) {
            out.push(ClosedSet::from_unchecked(set));
        }
    }
    out
}

/// Seeded sampling of closed subsets: draw a random subset of the window
/// and close it under the sum rule, discarding draws that hit a pairing
/// below −1. Duplicates are possible; this is a sampling harness.
pub fn sample_closed_subsets(
    sys: &RootSystem,
    max_depth: u32,
    count: usize,
    seed: u64,
) -> Vec<ClosedSet> {
    let roots = sys.positive_roots_up_to(max_depth);
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < count * 20 {
        attempts += 1;
        let mut set: BTreeSet<Root> = roots.iter().filter(|_| rng.chance(1, 3)).cloned().collect();
        // close under the sum rule
        let mut ok = true;
        'closure: loop {
            let items: Vec<Root> = set.iter().cloned().collect();
            let mut grew = false;
            for (i, alpha) in items.iter().enumerate() {
                for beta in &items[i + 1..] {
                    let p = sys.pairing(alpha, beta);
                    if p < -1 {
                        ok = false;
                        break 'closure;
                    }
                    if p == -1 {
                        let sum = alpha.add(beta);
                        if set.insert(sum) {
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        if ok {
            debug_assert!(is_closed(sys, &set));
            out.push(ClosedSet::from_unchecked(set));
        }
    }
    out
}

/// The closed-set verification suite: the star action's containments and
/// closedness, the descent law, the sandwich law, the recursion law
/// `C(g ∗ A) = L(g·τ(C(A)))`, inversion-set round-trips, and the
/// support-calculus cross-check.
pub fn verify_closed_laws(
    sys: &RootSystem,
    max_depth: u32,
    word_len: usize,
    seed: u64,
    samples: usize,
    budget_cap: usize,
) -> Result<VerificationReport, ClosedError> {
    let started = std::time::Instant::now();
    let graph = sys.graph().clone();
    let mut report = VerificationReport::new("closed", &graph);
    report.param("max_depth", max_depth.to_string());
    report.param("word_len", word_len.to_string());
    report.param("seed", seed.to_string());

    let window = sys.positive_roots_up_to(max_depth);
    let mut sets: Vec<ClosedSet> = if window.len() <= 12 {
        enumerate_closed_subsets(sys, max_depth)
    } else {
        Vec::new()
    };
    sets.extend(sample_closed_subsets(sys, max_depth, samples, seed));
    report.param("closed_sets", sets.len().to_string());

    // star: closed, contains α_s, inside the envelope
    let mut star_fail = None;
    'star: for a in &sets {
        for s in 0..sys.rank() {
            let b = star(sys, s, a);
            let envelope = star_envelope(sys, s, a);
            if !is_closed(sys, b.roots())
                || !b.contains(&sys.simple(s))
                || !b.roots().is_subset(&envelope)
            {
                star_fail = Some(serde_json::json!({
                    "s": graph.vertex_name(s),
                    "A": a.to_json(sys),
                }));
                break 'star;
            }
        }
    }
    report.push(Check::new(
        "σ_s ∗ A is closed, contains α_s, and lies in {α_s} ∪ s(A∖{α_s})",
        star_fail.is_none(),
        star_fail,
    ));

    // elements reachable by short words
    let words = monoid::all_words(sys.rank(), word_len);
    let mut elements: Vec<GroupElement> = words
        .iter()
        .map(|w| coxeter::canonicalize_letters(sys, w.letters()))
        .collect();
    elements.sort();
    elements.dedup();

    // descent law: for l(sw) = l(w) − 1,
    // Φ_w ⊆ {α_s} ∪ s(A∖{α_s})  ⟺  w ≤ L(σ_s·τ(C(A)))
    let mut descent_fail = None;
    'descent: for a in &sets {
        let c_of_a = cmax(sys, a);
        for s in 0..sys.rank() {
            let mut budget = budget_cap;
            let lift = monoid::generator(s).concat(&c_of_a.tau());
            let bound = monoid::el_l(sys, &lift, &mut budget)?;
            let envelope = star_envelope(sys, s, a);
            for w in &elements {
                let mut letters = vec![s];
                letters.extend_from_slice(w.word());
                let sw = coxeter::canonicalize_letters(sys, &letters);
                if sw.length() + 1 != w.length() {
                    continue;
                }
                let phi_w = coxeter::inversion_set(sys, w);
                let included = phi_w.is_subset(&envelope);
                let le = coxeter::weak_le(sys, w, &bound);
                if included != le {
                    descent_fail = Some(serde_json::json!({
                        "s": graph.vertex_name(s),
                        "w": w.display(&graph).to_string(),
                        "A": a.to_json(sys),
                        "included": included,
                        "le": le,
                    }));
                    break 'descent;
                }
            }
        }
    }
    report.push(Check::new(
        "Φ_w ⊆ {α_s} ∪ s(A∖{α_s}) ⟺ w ≤ L(σ_s·τ(C(A))) on descents",
        descent_fail.is_none(),
        descent_fail,
    ));

    // sandwich law: closed B with {α_s} ⊆ B ⊆ envelope ⇒ B ⊆ σ_s ∗ A
    let mut sandwich_fail = None;
    'sandwich: for a in &sets {
        for s in 0..sys.rank() {
            let envelope = star_envelope(sys, s, a);
            let image = star(sys, s, a);
            for b in &sets {
                if !b.contains(&sys.simple(s)) || !b.roots().is_subset(&envelope) {
                    continue;
                }
                if !b.roots().is_subset(image.roots()) {
                    sandwich_fail = Some(serde_json::json!({
                        "s": graph.vertex_name(s),
                        "A": a.to_json(sys),
                        "B": b.to_json(sys),
                    }));
                    break 'sandwich;
                }
            }
        }
    }
    report.push(Check::new(
        "closed B with {α_s} ⊆ B ⊆ {α_s} ∪ s(A∖{α_s}) satisfies B ⊆ σ_s ∗ A",
        sandwich_fail.is_none(),
        sandwich_fail,
    ));

    // recursion law: C(g ∗ A) = L(g·τ(C(A)))
    let mut law_fail = None;
    'law: for a in &sets {
        let tail = cmax(sys, a).tau();
        for g in &words {
            let mut budget = budget_cap;
            let lhs = cmax(sys, &star_word(sys, g, a));
            let rhs = monoid::el_l(sys, &g.concat(&tail), &mut budget)?;
            if lhs != rhs {
                law_fail = Some(serde_json::json!({
                    "g": g.to_text(&graph),
                    "A": a.to_json(sys),
                    "C(g*A)": lhs.display(&graph).to_string(),
                    "L(g tau(C(A)))": rhs.display(&graph).to_string(),
                }));
                break 'law;
            }
        }
    }
    report.push(Check::new(
        "C(g ∗ A) = L(g·τ(C(A)))",
        law_fail.is_none(),
        law_fail,
    ));

    // round-trips through inversion sets
    let mut trip_fail = None;
    for w in &elements {
        let phi_w: BTreeSet<Root> = coxeter::inversion_set(sys, w);
        let by_star = star_word(sys, &w.tau(), &ClosedSet::empty());
        let back = cmax(sys, &ClosedSet::from_unchecked(phi_w.clone()));
        if by_star.roots() != &phi_w || &back != w {
            trip_fail = Some(serde_json::json!({
                "w": w.display(&graph).to_string(),
            }));
            break;
        }
    }
    report.push(Check::new(
        "τ(w) ∗ ∅ = Φ_w and C(Φ_w) = w",
        trip_fail.is_none(),
        trip_fail,
    ));

    // support-calculus cross-check on a sample
    let mut rng = SplitMix64::new(seed ^ 0x5eed);
    let support_depth = max_depth.min(4);
    let support_sets = sample_closed_subsets(sys, support_depth, 8, seed ^ 1);
    let mut support_fail = None;
    'support: for a in &support_sets {
        for _ in 0..4 {
            let len = rng.below(word_len.min(4) + 1);
            let letters: Vec<usize> = (0..len).map(|_| rng.below(sys.rank())).collect();
            let g = MonoidWord::new(letters);
            let combinatorial = star_word(sys, &g, a);
            let by_support = star_word_via_support(sys, &g, a);
            if combinatorial != by_support {
                support_fail = Some(serde_json::json!({
                    "g": g.to_text(&graph),
                    "A": a.to_json(sys),
                }));
                break 'support;
            }
        }
    }
    report.push(Check::new(
        "g ∗ A agrees with the specialized-representation support calculus",
        support_fail.is_none(),
        support_fail,
    ));

    report.finish(started);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn system(graph: crate::graph::CoxeterGraph) -> RootSystem {
        RootSystem::new(graph).unwrap()
    }

    fn root(coeffs: &[i64]) -> Root {
        Root::from_coeffs(coeffs.to_vec())
    }

    fn set(sys_: &RootSystem, roots: &[&[i64]]) -> ClosedSet {
        let roots: BTreeSet<Root> = roots.iter().map(|c| root(c)).collect();
        ClosedSet::new(sys_, roots).unwrap()
    }

    fn word(graph: &crate::graph::CoxeterGraph, text: &str) -> MonoidWord {
        MonoidWord::parse(graph, text).unwrap()
    }

    #[test]
    fn closedness_examples() {
        let sys = system(samples::a2());
        assert!(is_closed(&sys, &BTreeSet::new()));

        let missing_sum: BTreeSet<Root> = [root(&[1, 0]), root(&[0, 1])].into_iter().collect();
        assert!(!is_closed(&sys, &missing_sum));

        let full: BTreeSet<Root> = [root(&[1, 0]), root(&[0, 1]), root(&[1, 1])]
            .into_iter()
            .collect();
        assert!(is_closed(&sys, &full));
    }

    #[test]
    fn cmax_examples() {
        let sys = system(samples::a2());
        assert!(cmax(&sys, &ClosedSet::empty()).is_identity());

        let just_s = set(&sys, &[&[1, 0]]);
        assert_eq!(cmax(&sys, &just_s).word(), &[0]);

        let all = set(&sys, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(cmax(&sys, &all).length(), 3);

        // C(Φ_w) = w over all of W(A_2)
        for text in ["", "s", "t", "s t", "t s", "s t s"] {
            let w =
                coxeter::canonicalize(&sys, &coxeter::GroupWord::parse(sys.graph(), text).unwrap());
            let phi_w = coxeter::inversion_set(&sys, &w);
            assert_eq!(cmax(&sys, &ClosedSet::from_unchecked(phi_w)), w);
        }
    }

    #[test]
    fn star_examples() {
        let sys = system(samples::a2());
        let from_empty = star(&sys, 0, &ClosedSet::empty());
        assert_eq!(from_empty, set(&sys, &[&[1, 0]]));

        let image = star(&sys, 0, &set(&sys, &[&[0, 1]]));
        assert_eq!(image, set(&sys, &[&[1, 0], &[1, 1]]));

        let commuting = RootSystem::new(samples::two_commuting()).unwrap();
        let a = ClosedSet::new(&commuting, [root(&[0, 1])].into_iter().collect()).unwrap();
        let image = star(&commuting, 0, &a);
        assert_eq!(
            image.roots().iter().cloned().collect::<Vec<_>>(),
            vec![root(&[0, 1]), root(&[1, 0])]
        );
    }

    #[test]
    fn star_word_examples() {
        let sys = system(samples::a2());
        let graph = sys.graph().clone();
        let a = set(&sys, &[&[1, 0]]);
        assert_eq!(star_word(&sys, &MonoidWord::empty(), &a), a);

        let phi_st = star_word(&sys, &word(&graph, "s t"), &ClosedSet::empty());
        assert_eq!(phi_st, set(&sys, &[&[1, 0], &[1, 1]]));

        // braid-equivalent words act identically on every closed subset
        for a in enumerate_closed_subsets(&sys, 2) {
            assert_eq!(
                star_word(&sys, &word(&graph, "s t s"), &a),
                star_word(&sys, &word(&graph, "t s t"), &a)
            );
        }
    }

    #[test]
    fn decode_examples() {
        let sys = system(samples::a2());
        let graph = sys.graph().clone();
        let mut budget = 100_000;

        assert!(decode(&sys, &MonoidWord::empty(), &mut budget)
            .unwrap()
            .is_empty());

        let ss = decode(&sys, &word(&graph, "s s"), &mut budget).unwrap();
        let names: Vec<String> = ss.iter().map(|u| u.display(&graph).to_string()).collect();
        assert_eq!(names, ["s", "s"]);

        let braid = decode(&sys, &word(&graph, "t s t"), &mut budget).unwrap();
        let names: Vec<String> = braid
            .iter()
            .map(|u| u.display(&graph).to_string())
            .collect();
        assert_eq!(names, ["s t s"]);

        // no factor is trivial, and the concatenation reproduces the word
        for text in ["s", "s s t", "t t s s", "s t s t s"] {
            let f = word(&graph, text);
            let parts = decode(&sys, &f, &mut budget).unwrap();
            assert!(parts.iter().all(|u| !u.is_identity()));
            let mut rebuilt = MonoidWord::empty();
            for u in &parts {
                rebuilt = rebuilt.concat(&u.tau());
            }
            assert!(monoid::monoid_eq_bfs(&graph, &rebuilt, &f, 100_000).unwrap());
        }
    }

    #[test]
    fn decode_head_is_el_l() {
        let sys = system(samples::a_n(3));
        let graph = sys.graph().clone();
        for f in monoid::all_words(3, 4) {
            let mut budget = 1_000_000;
            let by_star = cmax(&sys, &star_word(&sys, &f, &ClosedSet::empty()));
            let greedy = monoid::el_l(&sys, &f, &mut budget).unwrap();
            assert_eq!(by_star, greedy, "f = {}", f.to_text(&graph));
        }
    }

    #[test]
    fn eq_via_decode_matches_bfs() {
        let sys = system(samples::a2());
        let graph = sys.graph().clone();
        let mut budget = 10_000_000;

        let f = word(&graph, "s t s");
        assert!(eq_via_decode(&sys, &f, &f, &mut budget).unwrap());
        assert!(eq_via_decode(&sys, &f, &word(&graph, "t s t"), &mut budget).unwrap());
        assert!(!eq_via_decode(
            &sys,
            &word(&graph, "s t"),
            &word(&graph, "t s"),
            &mut budget
        )
        .unwrap());

        for f in monoid::all_words(2, 4) {
            for g in monoid::all_words(2, 4) {
                let by_decode = eq_via_decode(&sys, &f, &g, &mut budget).unwrap();
                let by_bfs = monoid::monoid_eq_bfs(&graph, &f, &g, 100_000).unwrap();
                assert_eq!(by_decode, by_bfs);
            }
        }
    }

    #[test]
    fn support_oracle_agrees_with_star() {
        let sys = system(samples::a2());
        let graph = sys.graph().clone();
        for a in enumerate_closed_subsets(&sys, 2) {
            for text in ["", "s", "t s", "s t s", "t t s s"] {
                let g = word(&graph, text);
                assert_eq!(
                    star_word(&sys, &g, &a),
                    star_word_via_support(&sys, &g, &a),
                    "g = {text}"
                );
            }
        }
    }

    #[test]
    fn closed_subset_enumeration_and_sampling() {
        let sys = system(samples::a2());
        assert_eq!(enumerate_closed_subsets(&sys, 2).len(), 7);

        let sys3 = system(samples::a_n(3));
        let sampled = sample_closed_subsets(&sys3, 3, 100, 7);
        assert_eq!(sampled.len(), 100);
        for a in &sampled {
            assert!(is_closed(&sys3, a.roots()));
        }
    }

    #[test]
    fn closed_suite_passes_on_a2() {
        let sys = system(samples::a2());
        let report = verify_closed_laws(&sys, 2, 4, 11, 50, 1_000_000).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn closed_suite_passes_on_a3() {
        // exercises the descent and recursion laws on sampled closed
        // subsets of A_3 up to depth 3 (the whole system)
        let sys = system(samples::a_n(3));
        let report = verify_closed_laws(&sys, 3, 3, 23, 60, 1_000_000).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn closed_suite_passes_on_the_affine_cycle() {
        let sys = system(samples::cycle4());
        let report = verify_closed_laws(&sys, 2, 3, 5, 40, 1_000_000).unwrap();
        assert!(report.passed(), "{report}");
    }
}
