//! The generalized Lawrence–Krammer representation for small-type graphs
//! with no triangle.
//!
//! The module `V` has basis `{e_β : β ∈ Φ⁺}` over the Laurent polynomials
//! in `x`, `y`. A generator acts by
//!
//! ```text
//! ψ_s(e_β) = φ_s(e_β) + x·T(s, β)·e_{α_s}
//! ```
//!
//! where `φ_s` is the four-case rule driven by the sign of `⟨α_s, β⟩` and
//! `T(s, β) ∈ Z[y]` is defined by a depth recursion with nine cases
//! (depth-1 base cases, then a dispatch on the sign of `⟨α_s, β⟩`, the
//! pairing `⟨α_s, α_t⟩` with the chosen descent `t`, and the comparison of
//! the two pairing values). The recursion's value is independent of the
//! choice of `t`; `verify_tpoly_lemmas` re-checks this exhaustively.
//!
//! The infinite-dimensional `V` is never materialized: vectors are finitely
//! supported maps and the support grows by at most one reflection per
//! letter applied, with the root horizon extended lazily underneath.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use thiserror::Error;

use crate::graph::{CoxeterGraph, Label};
use crate::laurent::LaurentPoly;
use crate::monoid::MonoidWord;
use crate::report::{Check, VerificationReport};
use crate::roots::{Root, RootError, RootSystem};

/// A finitely supported vector over the basis `{e_β}`, with no zero
/// polynomials stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVector {
    entries: BTreeMap<Root, LaurentPoly>,
}

impl SparseVector {
    pub fn zero() -> Self {
        SparseVector::default()
    }

    pub fn basis(beta: Root) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(beta, LaurentPoly::one());
        SparseVector { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn coeff(&self, beta: &Root) -> LaurentPoly {
        self.entries.get(beta).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Root, &LaurentPoly)> {
        self.entries.iter()
    }

    pub fn add_term(&mut self, beta: Root, poly: LaurentPoly) {
        use std::collections::btree_map::Entry;
        if poly.is_zero() {
            return;
        }
        match self.entries.entry(beta) {
            Entry::Vacant(e) => {
                e.insert(poly);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&poly);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        let mut out = self.clone();
        for (beta, p) in &other.entries {
            out.add_term(beta.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, factor: &LaurentPoly) -> SparseVector {
        let mut out = SparseVector::zero();
        for (beta, p) in &self.entries {
            out.add_term(beta.clone(), p * factor);
        }
        out
    }

    /// True iff every coefficient lies in the polynomial subring (no
    /// negative exponents in either variable).
    pub fn is_polynomial(&self) -> bool {
        self.entries.values().all(|p| !p.has_negative_exponents())
    }

    /// JSON form `{root JSON text: polynomial text}`.
    pub fn to_json(&self, graph: &CoxeterGraph) -> serde_json::Value {
        let map: BTreeMap<String, String> = self
            .entries
            .iter()
            .map(|(beta, p)| (beta.to_json_string(graph), p.to_string()))
            .collect();
        serde_json::to_value(map).expect("vector JSON")
    }
}

#[derive(Debug, Error)]
pub enum RepError {
    #[error("graph is not of small type")]
    NotSmallType,
    #[error("graph has a triangle")]
    HasTriangle,
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("internal inconsistency in the T recursion: {0}")]
    InternalInconsistency(String),
}

/// Shared context for one small-type, no-triangle graph: the root system
/// plus the memo table for `T(s, β)`.
pub struct RepContext {
    sys: RootSystem,
    tmemo: RwLock<HashMap<(usize, Root), LaurentPoly>>,
}

impl RepContext {
    pub fn new(graph: CoxeterGraph) -> Result<Self, RepError> {
        if !graph.is_small_type() {
            return Err(RepError::NotSmallType);
        }
        if !graph.has_no_triangle() {
            return Err(RepError::HasTriangle);
        }
        Ok(RepContext {
            sys: RootSystem::new(graph).map_err(RepError::Root)?,
            tmemo: RwLock::new(HashMap::new()),
        })
    }

    pub fn roots(&self) -> &RootSystem {
        &self.sys
    }

    pub fn graph(&self) -> &CoxeterGraph {
        self.sys.graph()
    }

    /// `T(s, β)`, memoized. `β` must be a positive root.
    pub fn tpoly(&self, s: usize, beta: &Root) -> Result<LaurentPoly, RepError> {
        if let Some(hit) = self.tmemo.read().unwrap().get(&(s, beta.clone())) {
            return Ok(hit.clone());
        }
        let value = self.tpoly_dispatch(s, beta, None)?;
        self.tmemo
            .write()
            .unwrap()
            .insert((s, beta.clone()), value.clone());
        Ok(value)
    }

    /// `T(s, β)` recomputed at top level with a forced choice of descent
    /// `t` (sub-calls are still memoized). Used to certify that the
    /// recursion does not depend on the choice.
    pub fn tpoly_with_choice(
        &self,
        s: usize,
        beta: &Root,
        t: usize,
    ) -> Result<LaurentPoly, RepError> {
        self.tpoly_dispatch(s, beta, Some(t))
    }

    fn checked_root(&self, coeffs: Vec<i64>, context: &str) -> Result<Root, RepError> {
        let root = Root::from_coeffs(coeffs);
        if self.sys.is_positive_root(&root) {
            Ok(root)
        } else {
            Err(RepError::InternalInconsistency(format!(
                "{context} produced the non-root {:?}",
                root.coeffs()
            )))
        }
    }

    /// `β − c·α_t`, validated as a positive root.
    fn step(&self, beta: &Root, c: i64, t: usize, label: &str) -> Result<Root, RepError> {
        let mut coeffs = beta.coeffs().to_vec();
        coeffs[t] -= c;
        self.checked_root(coeffs, label)
    }

    fn tpoly_dispatch(
        &self,
        s: usize,
        beta: &Root,
        forced_t: Option<usize>,
    ) -> Result<LaurentPoly, RepError> {
        let dp = self.sys.depth(beta)?;
        if dp == 1 {
            // β = α_t: y² on the diagonal, 0 otherwise
            return Ok(if *beta == self.sys.simple(s) {
                LaurentPoly::y_power(2)
            } else {
                LaurentPoly::zero()
            });
        }
        let t = match forced_t {
            Some(t) => {
                if self.sys.pairing_simple(t, beta) <= 0 {
                    return Err(RepError::InternalInconsistency(format!(
                        "vertex {t} is not a descent of {:?}",
                        beta.coeffs()
                    )));
                }
                t
            }
            None => (0..self.sys.rank())
                .find(|&t| self.sys.pairing_simple(t, beta) > 0)
                .expect("a positive root of depth >= 2 has a descent"),
        };
        let b = self.sys.pairing_simple(t, beta);
        let a = self.sys.pairing_simple(s, beta);
        let y = LaurentPoly::y_power(1);

        if a > 0 {
            // depth goes down on the s side as well
            return Ok(LaurentPoly::y_power(dp as i64) * LaurentPoly::y_minus_one());
        }

        let st = self.sys.pairing_simple(s, &self.sys.simple(t));
        if a == 0 {
            if st == 0 {
                let down = self.step(beta, b, t, "orthogonal step")?;
                return Ok(y * self.tpoly(s, &down)?);
            }
            // st == −1
            let down = self.step(beta, b, t, "adjacent step")?;
            let mut both = beta.coeffs().to_vec();
            both[s] -= b;
            both[t] -= b;
            let double = self.checked_root(both, "double step")?;
            return Ok(
                LaurentPoly::y_minus_one() * self.tpoly(s, &down)? + y * self.tpoly(t, &double)?
            );
        }

        // a < 0; write a = −⟨α_s, β⟩ > 0 as in the case split
        let a_abs = -a;
        if st == 0 {
            let down = self.step(beta, b, t, "orthogonal step")?;
            return Ok(y * self.tpoly(s, &down)?);
        }
        // st == −1
        let down = self.step(beta, b, t, "adjacent step")?;
        if b > a_abs {
            let mut both = beta.coeffs().to_vec();
            both[s] -= b - a_abs;
            both[t] -= b;
            let mixed = self.checked_root(both, "mixed step")?;
            Ok(LaurentPoly::y_minus_one() * self.tpoly(s, &down)? + y * self.tpoly(t, &mixed)?)
        } else if b == a_abs {
            Ok(self.tpoly(t, &down)? + LaurentPoly::y_minus_one() * self.tpoly(s, &down)?)
        } else {
            Ok(y * self.tpoly(s, &down)?
                + self.tpoly(t, &down)?
                + LaurentPoly::y_power(dp as i64 - 1) * LaurentPoly::one_minus_y())
        }
    }

    /// The `x = 0` part of the action:
    ///
    /// ```text
    /// φ_s(e_β) = 0                     if β = α_s
    ///          = e_β                   if ⟨α_s, β⟩ = 0
    ///          = y·e_{β−aα_s}          if ⟨α_s, β⟩ = a > 0, β ≠ α_s
    ///          = (1−y)·e_β + e_{β+aα_s} if ⟨α_s, β⟩ = −a < 0
    /// ```
    pub fn phi(&self, s: usize, v: &SparseVector) -> SparseVector {
        let alpha_s = self.sys.simple(s);
        let mut out = SparseVector::zero();
        for (beta, coeff) in v.iter() {
            if *beta == alpha_s {
                continue;
            }
            let p = self.sys.pairing_simple(s, beta);
            match p.signum() {
                0 => out.add_term(beta.clone(), coeff.clone()),
                1 => out.add_term(
                    self.sys.reflect_simple(s, beta),
                    coeff.mul_monomial(0, 1, 1),
                ),
                _ => {
                    out.add_term(beta.clone(), coeff * &LaurentPoly::one_minus_y());
                    out.add_term(self.sys.reflect_simple(s, beta), coeff.clone());
                }
            }
        }
        out
    }

    /// `ψ_s(v) = φ_s(v) + x·(Σ_β v_β·T(s, β))·e_{α_s}`.
    pub fn psi(&self, s: usize, v: &SparseVector) -> Result<SparseVector, RepError> {
        let mut out = self.phi(s, v);
        let mut head = LaurentPoly::zero();
        for (beta, coeff) in v.iter() {
            head.add_assign(&(coeff * &self.tpoly(s, beta)?));
        }
        out.add_term(self.sys.simple(s), head.mul_monomial(1, 0, 1));
        Ok(out)
    }

    /// The inverse `ρ_s` of `ψ_s`, exact over Laurent polynomials.
    pub fn rho(&self, s: usize, v: &SparseVector) -> Result<SparseVector, RepError> {
        let alpha_s = self.sys.simple(s);
        let mut out = SparseVector::zero();
        for (beta, coeff) in v.iter() {
            if *beta == alpha_s {
                out.add_term(alpha_s.clone(), coeff.mul_monomial(-1, -2, 1));
                continue;
            }
            let p = self.sys.pairing_simple(s, beta);
            match p.signum() {
                0 => {
                    out.add_term(beta.clone(), coeff.clone());
                    out.add_term(
                        alpha_s.clone(),
                        (coeff * &self.tpoly(s, beta)?).mul_monomial(0, -2, -1),
                    );
                }
                1 => {
                    let reflected = self.sys.reflect_simple(s, beta);
                    let one_minus_yinv = LaurentPoly::one() - LaurentPoly::monomial(0, -1, 1);
                    out.add_term(beta.clone(), coeff * &one_minus_yinv);
                    out.add_term(reflected.clone(), coeff.clone());
                    out.add_term(
                        alpha_s.clone(),
                        (coeff * &self.tpoly(s, &reflected)?).mul_monomial(0, -2, -1),
                    );
                    let yinv_factor =
                        LaurentPoly::monomial(0, -3, 1) - LaurentPoly::monomial(0, -2, 1);
                    out.add_term(alpha_s.clone(), coeff * &self.tpoly(s, beta)? * yinv_factor);
                }
                _ => {
                    let reflected = self.sys.reflect_simple(s, beta);
                    out.add_term(reflected.clone(), coeff.mul_monomial(0, -1, 1));
                    out.add_term(
                        alpha_s.clone(),
                        (coeff * &self.tpoly(s, &reflected)?).mul_monomial(0, -3, -1),
                    );
                }
            }
        }
        Ok(out)
    }

    /// Applies a positive word, last letter first, so that words act as
    /// operator composition: `ψ(f₁ f₂ … f_k) = ψ_{f₁} ∘ … ∘ ψ_{f_k}`.
    pub fn psi_word(&self, f: &MonoidWord, v: &SparseVector) -> Result<SparseVector, RepError> {
        let mut out = v.clone();
        for &s in f.letters().iter().rev() {
            out = self.psi(s, &out)?;
        }
        Ok(out)
    }

    /// Checks the defining relations on every basis vector up to
    /// `max_depth`: `ψ_s ψ_t = ψ_t ψ_s` when `m(s, t) = 2` and
    /// `ψ_s ψ_t ψ_s = ψ_t ψ_s ψ_t` when `m(s, t) = 3`, by exact
    /// polynomial equality.
    pub fn verify_relations(&self, max_depth: u32) -> Result<VerificationReport, RepError> {
        let started = std::time::Instant::now();
        let graph = self.graph();
        let mut report = VerificationReport::new("relations", graph);
        report.param("max_depth", max_depth.to_string());
        let roots = self.sys.positive_roots_up_to(max_depth);
        let n = self.sys.rank();
        for s in 0..n {
            for t in s + 1..n {
                let m = match graph.label(s, t) {
                    Label::Finite(m) => m,
                    Label::Infinite => unreachable!("small type"),
                };
                let (lhs, rhs) = match m {
                    2 => (vec![s, t], vec![t, s]),
                    _ => (vec![s, t, s], vec![t, s, t]),
                };
                let mut fail = None;
                let mut checked = 0usize;
                for beta in &roots {
                    let base = SparseVector::basis(beta.clone());
                    let left = self.psi_word(&MonoidWord::new(lhs.clone()), &base)?;
                    let right = self.psi_word(&MonoidWord::new(rhs.clone()), &base)?;
                    checked += 1;
                    if left != right {
                        fail = Some(serde_json::json!({
                            "pair": [graph.vertex_name(s), graph.vertex_name(t)],
                            "root": beta.to_json(graph),
                        }));
                        break;
                    }
                }
                report.push(Check::new(
                    format!(
                        "ψ relation on ({}, {}), m = {m}, {checked} basis vectors",
                        graph.vertex_name(s),
                        graph.vertex_name(t)
                    ),
                    fail.is_none(),
                    fail,
                ));
            }
        }
        report.finish(started);
        Ok(report)
    }

    /// Certifies the well-definedness facts behind the `T` recursion:
    /// every admissible choice of descent gives the same polynomial, and
    /// `T(s, β) = T(t, β)` whenever `s`, `t` are adjacent and both
    /// orthogonal to `β`.
    pub fn verify_tpoly_lemmas(&self, max_depth: u32) -> Result<VerificationReport, RepError> {
        let started = std::time::Instant::now();
        let graph = self.graph();
        let mut report = VerificationReport::new("tpoly", graph);
        report.param("max_depth", max_depth.to_string());
        let roots = self.sys.positive_roots_up_to(max_depth);
        let n = self.sys.rank();

        let mut choice_fail = None;
        let mut choice_checked = 0usize;
        'choice: for beta in &roots {
            if self.sys.depth(beta)? < 2 {
                continue;
            }
            let descents: Vec<usize> = (0..n)
                .filter(|&t| self.sys.pairing_simple(t, beta) > 0)
                .collect();
            for s in 0..n {
                let reference = self.tpoly_with_choice(s, beta, descents[0])?;
                choice_checked += 1;
                for &t in &descents[1..] {
                    if self.tpoly_with_choice(s, beta, t)? != reference {
                        choice_fail = Some(serde_json::json!({
                            "s": graph.vertex_name(s),
                            "root": beta.to_json(graph),
                            "choices": [
                                graph.vertex_name(descents[0]),
                                graph.vertex_name(t),
                            ],
                        }));
                        break 'choice;
                    }
                }
            }
        }
        report.push(Check::new(
            format!("T(s, β) independent of the descent choice ({choice_checked} pairs)"),
            choice_fail.is_none(),
            choice_fail,
        ));

        let mut orth_fail = None;
        let mut orth_checked = 0usize;
        'orth: for s in 0..n {
            for t in s + 1..n {
                if graph.label(s, t) != Label::Finite(3) {
                    continue;
                }
                for beta in &roots {
                    if self.sys.pairing_simple(s, beta) == 0
                        && self.sys.pairing_simple(t, beta) == 0
                    {
                        orth_checked += 1;
                        if self.tpoly(s, beta)? != self.tpoly(t, beta)? {
                            orth_fail = Some(serde_json::json!({
                                "pair": [graph.vertex_name(s), graph.vertex_name(t)],
                                "root": beta.to_json(graph),
                            }));
                            break 'orth;
                        }
                    }
                }
            }
        }
        report.push(Check::new(
            format!("T(s, β) = T(t, β) on doubly orthogonal roots ({orth_checked} triples)"),
            orth_fail.is_none(),
            orth_fail,
        ));

        report.finish(started);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn ctx(graph: CoxeterGraph) -> RepContext {
        RepContext::new(graph).unwrap()
    }

    fn root(coeffs: &[i64]) -> Root {
        Root::from_coeffs(coeffs.to_vec())
    }

    fn y_pow(k: i64) -> LaurentPoly {
        LaurentPoly::y_power(k)
    }

    #[test]
    fn context_rejects_bad_graphs() {
        assert!(matches!(
            RepContext::new(samples::single_edge(Label::Finite(4))),
            Err(RepError::NotSmallType)
        ));
        assert!(matches!(
            RepContext::new(samples::triangle()),
            Err(RepError::HasTriangle)
        ));
    }

    #[test]
    fn tpoly_base_cases() {
        let ctx = ctx(samples::a2());
        assert_eq!(ctx.tpoly(0, &root(&[1, 0])).unwrap(), y_pow(2));
        assert_eq!(ctx.tpoly(0, &root(&[0, 1])).unwrap(), LaurentPoly::zero());
        // T(s, α_s + α_t) = y²(y−1) for m = 3
        let expected = y_pow(2) * LaurentPoly::y_minus_one();
        assert_eq!(ctx.tpoly(0, &root(&[1, 1])).unwrap(), expected);
        assert_eq!(ctx.tpoly(1, &root(&[1, 1])).unwrap(), expected);
    }

    #[test]
    fn tpoly_rejects_non_roots() {
        let ctx = ctx(samples::a2());
        assert!(ctx.tpoly(0, &root(&[2, 0])).is_err());
    }

    #[test]
    fn tpoly_values_are_y_polynomials_with_bounded_degree() {
        for graph in [samples::a_n(3), samples::cycle4()] {
            let ctx = ctx(graph);
            let roots = ctx.roots().positive_roots_up_to(5);
            for beta in &roots {
                let dp = ctx.roots().depth(beta).unwrap() as i64;
                for s in 0..ctx.roots().rank() {
                    let t = ctx.tpoly(s, beta).unwrap();
                    assert!(t.is_y_only(), "T involves x at ({s}, {beta:?})");
                    assert!(!t.has_negative_exponents());
                    assert!(
                        t.y_degree().unwrap_or(0) <= dp + 1,
                        "deg T = {:?} exceeds dp+1 = {} at ({s}, {:?})",
                        t.y_degree(),
                        dp + 1,
                        beta.coeffs()
                    );
                }
            }
        }
    }

    #[test]
    fn phi_cases() {
        let ctx = ctx(samples::a2());
        let alpha_s = root(&[1, 0]);
        let alpha_t = root(&[0, 1]);

        assert!(ctx.phi(0, &SparseVector::basis(alpha_s.clone())).is_zero());

        let image = ctx.phi(0, &SparseVector::basis(alpha_t.clone()));
        let mut expected = SparseVector::zero();
        expected.add_term(alpha_t.clone(), LaurentPoly::one_minus_y());
        expected.add_term(root(&[1, 1]), LaurentPoly::one());
        assert_eq!(image, expected);

        let ctx2 = ctx2_commuting();
        let fixed = ctx2.phi(0, &SparseVector::basis(alpha_t.clone()));
        assert_eq!(fixed, SparseVector::basis(alpha_t));
    }

    fn ctx2_commuting() -> RepContext {
        RepContext::new(samples::two_commuting()).unwrap()
    }

    #[test]
    fn psi_cases() {
        let ctx = ctx(samples::a2());
        let alpha_s = root(&[1, 0]);
        let alpha_t = root(&[0, 1]);

        // ψ_s(e_{α_s}) = x y² e_{α_s}
        let image = ctx.psi(0, &SparseVector::basis(alpha_s.clone())).unwrap();
        let mut expected = SparseVector::zero();
        expected.add_term(alpha_s.clone(), LaurentPoly::monomial(1, 2, 1));
        assert_eq!(image, expected);

        // no x-term when T vanishes
        let image = ctx.psi(0, &SparseVector::basis(alpha_t.clone())).unwrap();
        let mut expected = SparseVector::zero();
        expected.add_term(alpha_t.clone(), LaurentPoly::one_minus_y());
        expected.add_term(root(&[1, 1]), LaurentPoly::one());
        assert_eq!(image, expected);

        let ctx2 = ctx2_commuting();
        let fixed = ctx2.psi(0, &SparseVector::basis(alpha_t.clone())).unwrap();
        assert_eq!(fixed, SparseVector::basis(alpha_t));
    }

    #[test]
    fn rho_cases() {
        let ctx = ctx(samples::a2());
        let alpha_s = root(&[1, 0]);

        let image = ctx.rho(0, &SparseVector::basis(alpha_s.clone())).unwrap();
        let mut expected = SparseVector::zero();
        expected.add_term(alpha_s, LaurentPoly::monomial(-1, -2, 1));
        assert_eq!(image, expected);

        let ctx2 = ctx2_commuting();
        let alpha_t = root(&[0, 1]);
        let fixed = ctx2.rho(0, &SparseVector::basis(alpha_t.clone())).unwrap();
        assert_eq!(fixed, SparseVector::basis(alpha_t));
    }

    #[test]
    fn rho_inverts_psi_exactly() {
        for graph in [samples::a_n(3), samples::cycle4()] {
            let ctx = ctx(graph);
            for beta in ctx.roots().positive_roots_up_to(4) {
                let base = SparseVector::basis(beta.clone());
                for s in 0..ctx.roots().rank() {
                    let there = ctx.rho(s, &ctx.psi(s, &base).unwrap()).unwrap();
                    let back = ctx.psi(s, &ctx.rho(s, &base).unwrap()).unwrap();
                    assert_eq!(there, base, "ρψ ≠ id at s={s}, β={beta:?}");
                    assert_eq!(back, base, "ψρ ≠ id at s={s}, β={beta:?}");
                }
            }
        }
    }

    #[test]
    fn word_action_is_braid_invariant() {
        let ctx = ctx(samples::a2());
        let graph = ctx.graph().clone();
        let lhs = MonoidWord::parse(&graph, "s t s").unwrap();
        let rhs = MonoidWord::parse(&graph, "t s t").unwrap();
        for beta in ctx.roots().positive_roots_up_to(5) {
            let base = SparseVector::basis(beta.clone());
            assert_eq!(
                ctx.psi_word(&lhs, &base).unwrap(),
                ctx.psi_word(&rhs, &base).unwrap()
            );
        }
        // empty word acts as the identity
        let beta = ctx.roots().simple(0);
        let base = SparseVector::basis(beta);
        assert_eq!(ctx.psi_word(&MonoidWord::empty(), &base).unwrap(), base);

        let ctx2 = ctx2_commuting();
        let graph2 = ctx2.graph().clone();
        let lhs = MonoidWord::parse(&graph2, "s t").unwrap();
        let rhs = MonoidWord::parse(&graph2, "t s").unwrap();
        for beta in ctx2.roots().positive_roots_up_to(3) {
            let base = SparseVector::basis(beta.clone());
            assert_eq!(
                ctx2.psi_word(&lhs, &base).unwrap(),
                ctx2.psi_word(&rhs, &base).unwrap()
            );
        }
    }

    #[test]
    fn monoid_action_stays_polynomial_and_specializes_to_phi() {
        let ctx = ctx(samples::a_n(3));
        let graph = ctx.graph().clone();
        let words = ["s1", "s1 s2", "s3 s2 s1", "s1 s2 s3 s1 s2", "s2 s2 s2"];
        for text in words {
            let f = MonoidWord::parse(&graph, text).unwrap();
            for s in 0..3 {
                let base = SparseVector::basis(ctx.roots().simple(s));
                let image = ctx.psi_word(&f, &base).unwrap();
                assert!(image.is_polynomial(), "negative exponents for {text}");

                // x = 0 collapses ψ to φ, term by term
                let mut by_phi = base.clone();
                for &letter in f.letters().iter().rev() {
                    by_phi = ctx.phi(letter, &by_phi);
                }
                let mut specialized = SparseVector::zero();
                for (beta, p) in image.iter() {
                    specialized.add_term(beta.clone(), p.specialize_x0());
                }
                assert_eq!(specialized, by_phi);
            }
        }
    }

    #[test]
    fn relation_suite_on_a2() {
        let ctx = ctx(samples::a2());
        let report = ctx.verify_relations(3).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checks.len(), 1);
    }

    #[test]
    fn tpoly_suite_on_small_graphs() {
        let ctx1 = ctx(samples::a2());
        let report = ctx1.verify_tpoly_lemmas(2).unwrap();
        assert!(report.passed(), "{report}");

        let ctx2 = ctx(samples::a_n(3));
        let report = ctx2.verify_tpoly_lemmas(4).unwrap();
        assert!(report.passed(), "{report}");
    }

    /// A non-vacuous, nonzero instance of the doubly-orthogonal law: in
    /// the A_5 chain, β = α1+α2+α3+α4 pairs to zero with both s2 and s3,
    /// which are adjacent, and the two recursion routes evaluate to the
    /// same nonzero polynomial y³(y−1)².
    #[test]
    fn orthogonal_law_is_nonzero_on_a5() {
        let ctx = ctx(samples::a_n(5));
        let beta = root(&[1, 1, 1, 1, 0]);
        assert_eq!(ctx.roots().pairing_simple(1, &beta), 0);
        assert_eq!(ctx.roots().pairing_simple(2, &beta), 0);
        let t2 = ctx.tpoly(1, &beta).unwrap();
        let t3 = ctx.tpoly(2, &beta).unwrap();
        let expected =
            y_pow(3) * LaurentPoly::y_minus_one() * LaurentPoly::y_minus_one();
        assert_eq!(t2, expected);
        assert_eq!(t3, expected);

        let report = ctx.verify_tpoly_lemmas(4).unwrap();
        assert!(report.passed(), "{report}");
    }

    /// On A_2 the module has exactly three basis vectors, so the images
    /// of those determine ψ(f) as an operator. Two positive words of
    /// length ≤ 4 are equal in the monoid iff their operators agree —
    /// the faithfulness of the action, checked as exact operator
    /// equality against the braid-closure oracle.
    #[test]
    fn operator_equality_decides_word_equality_on_a2() {
        let ctx = ctx(samples::a2());
        let graph = ctx.graph().clone();
        let basis: Vec<SparseVector> = ctx
            .roots()
            .positive_roots_up_to(2)
            .into_iter()
            .map(SparseVector::basis)
            .collect();
        assert_eq!(basis.len(), 3);
        let words = crate::monoid::all_words(2, 4);
        let operators: Vec<Vec<SparseVector>> = words
            .iter()
            .map(|f| basis.iter().map(|e| ctx.psi_word(f, e).unwrap()).collect())
            .collect();
        for (f, op_f) in words.iter().zip(&operators) {
            for (g, op_g) in words.iter().zip(&operators) {
                let equal_words = crate::monoid::monoid_eq_bfs(&graph, f, g, 1_000_000).unwrap();
                assert_eq!(
                    equal_words,
                    op_f == op_g,
                    "ψ mismatch on {:?} vs {:?}",
                    f.letters(),
                    g.letters()
                );
            }
        }
    }
}
