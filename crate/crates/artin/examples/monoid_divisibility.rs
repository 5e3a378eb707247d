//! Artin monoid order theory: equality by braid-closure search,
//! left-divisibility along two independent routes, the head map `L`,
//! least common multiples, and `Δ_T`.
//!
//! ```bash
//! cargo run -p artin --example monoid_divisibility
//! ```

use artin::monoid::{self, MonoidWord};
use artin::{samples, Label, RootSystem};

fn main() {
    let graph = samples::a2();
    let word = |text: &str| MonoidWord::parse(&graph, text).unwrap();

    // the defining relation identifies the two lifts of w_0
    let lhs = word("s t s");
    let rhs = word("t s t");
    println!(
        "σ_s σ_t σ_s = σ_t σ_s σ_t: {}",
        monoid::monoid_eq_bfs(&graph, &lhs, &rhs, 1_000_000).unwrap()
    );

    // σ_t divides σ_s σ_t σ_s (rewrite first, then cancel)
    println!(
        "σ_t | σ_s σ_t σ_s: {}",
        monoid::left_divides(&graph, &word("t"), &lhs, 1_000_000).unwrap()
    );
    // the closure-free route also returns the quotient
    let mut budget = 1_000_000;
    let quotient = monoid::left_quotient(&graph, &word("t"), &lhs, &mut budget)
        .unwrap()
        .unwrap();
    println!("σ_s σ_t σ_s / σ_t = {}", quotient.display(&graph));

    // L(f): the maximal group element whose lift divides f
    let sys = RootSystem::new(graph.clone()).unwrap();
    for text in ["s s", "s t s", "s t t s"] {
        let l = monoid::el_l(&sys, &word(text), &mut budget).unwrap();
        println!("L({text}) = \"{}\"", l.display(&graph));
    }

    // lcm's: the dihedral closed form, and certified nonexistence
    let l = monoid::lcm(&graph, &word("s"), &word("t"), 10, &mut budget).unwrap();
    println!("σ_s ∨ σ_t in A_2: {}", l.unwrap().display(&graph));

    let inf = samples::single_edge(Label::Infinite);
    let l = monoid::lcm(
        &inf,
        &MonoidWord::parse(&inf, "s").unwrap(),
        &MonoidWord::parse(&inf, "t").unwrap(),
        10,
        &mut budget,
    )
    .unwrap();
    println!(
        "σ_s ∨ σ_t with m = ∞: {:?}",
        l.map(|w| w.display(&inf).to_string())
    );

    // Δ_T = τ(w_T) is the lcm of the generators in a spherical subset
    let a3 = samples::a_n(3);
    let delta = monoid::delta(&a3, &[0, 1, 2]).unwrap();
    println!("Δ(A_3) = {} (length {})", delta.display(&a3), delta.len());
}
