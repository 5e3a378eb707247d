//! Positive roots of small-type graphs: exact integer coordinates, the
//! bilinear pairing, reflections, and depth-indexed enumeration — also
//! for affine graphs, where the enumeration is lazy and unbounded.
//!
//! ```bash
//! cargo run -p artin --example positive_roots
//! ```

use artin::{samples, RootSystem};

fn main() {
    let sys = RootSystem::new(samples::a_n(3)).unwrap();
    let graph = sys.graph().clone();

    println!("all positive roots of A_3, by (depth, lex):");
    for root in sys.positive_roots_up_to(6) {
        println!(
            "  depth {}  {}",
            sys.depth(&root).unwrap(),
            root.to_json_string(&graph)
        );
    }

    // pairing and reflection on explicit roots
    let alpha_1 = sys.simple(0);
    let alpha_2 = sys.simple(1);
    println!("⟨α_s1, α_s2⟩ = {}", sys.pairing(&alpha_1, &alpha_2));
    let reflected = sys.reflect_simple(1, &alpha_1);
    println!(
        "s2(α_s1) = {}  (depth {})",
        reflected.to_json_string(&graph),
        sys.depth(&reflected).unwrap()
    );

    // the affine 4-cycle has infinitely many roots; ask for a window
    let affine = RootSystem::new(samples::cycle4()).unwrap();
    for depth in 1..=6 {
        println!(
            "affine 4-cycle: {} roots of depth exactly {depth}",
            affine.roots_at_depth(depth).len()
        );
    }
}
