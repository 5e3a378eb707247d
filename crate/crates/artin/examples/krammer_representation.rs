//! The generalized Lawrence–Krammer action: `T(s, β)` polynomials, the
//! images of basis vectors under `ψ` and its inverse `ρ`, and a braid
//! relation verified by exact polynomial equality.
//!
//! ```bash
//! cargo run -p artin --example krammer_representation
//! ```

use artin::monoid::MonoidWord;
use artin::rep::{RepContext, SparseVector};
use artin::samples;

fn main() {
    let ctx = RepContext::new(samples::a2()).unwrap();
    let graph = ctx.graph().clone();

    println!("T(s, β) for all roots of A_2:");
    for beta in ctx.roots().positive_roots_up_to(3) {
        println!(
            "  T(s, {}) = {}",
            beta.to_json_string(&graph),
            ctx.tpoly(0, &beta).unwrap()
        );
    }

    // the action of one generator on a basis vector
    let alpha_t = ctx.roots().simple(1);
    let image = ctx.psi(0, &SparseVector::basis(alpha_t.clone())).unwrap();
    println!(
        "ψ_s(e_αt) = {}",
        serde_json::to_string(&image.to_json(&graph)).unwrap()
    );

    // ρ_s inverts ψ_s exactly (Laurent polynomials, no rounding anywhere)
    let round_trip = ctx.rho(0, &image).unwrap();
    println!(
        "ρ_s(ψ_s(e_αt)) = {}",
        serde_json::to_string(&round_trip.to_json(&graph)).unwrap()
    );

    // a braid relation on a deep basis vector, as exact vector equality
    let deep = ctx.roots().positive_roots_up_to(2).pop().unwrap();
    let base = SparseVector::basis(deep.clone());
    let lhs = ctx
        .psi_word(&MonoidWord::parse(&graph, "s t s").unwrap(), &base)
        .unwrap();
    let rhs = ctx
        .psi_word(&MonoidWord::parse(&graph, "t s t").unwrap(), &base)
        .unwrap();
    println!(
        "ψ_s ψ_t ψ_s (e_β) = ψ_t ψ_s ψ_t (e_β) on β = {}: {}",
        deep.to_json_string(&graph),
        lhs == rhs
    );
    println!(
        "  both sides = {}",
        serde_json::to_string(&lhs.to_json(&graph)).unwrap()
    );
}
