//! Folding arbitrary Coxeter graphs into small type with no triangle:
//! the building blocks Γ(m) and Γ(∞), single and double folds, the
//! generator-multiplying morphism, and its respects-lcm certification.
//!
//! ```bash
//! cargo run -p artin --example folding
//! ```

use artin::fold;
use artin::monoid::MonoidWord;
use artin::{samples, Label};

fn main() {
    // the building block Γ(4): two A_3 chains, classes of size 3 each
    let (gamma4, class_i, class_j) = fold::build_gamma_m(4).unwrap();
    println!(
        "Γ(4): {} vertices, I = {:?}, J = {:?}",
        gamma4.vertex_count(),
        class_i,
        class_j
    );

    // one fold of the m = 4 edge: N = 3, so blocks of 6 and 12 vertices
    let graph = samples::single_edge(Label::Finite(4));
    let first = fold::fold_once(&graph);
    println!(
        "fold once of the m=4 edge: {} vertices, I(s) = {:?}",
        first.target().vertex_count(),
        first.block("s").unwrap()
    );

    // the image of a word multiplies its length by the block size
    let f = MonoidWord::parse(&graph, "s t").unwrap();
    let image = first.apply(&f).unwrap();
    println!(
        "φ(σ_s σ_t) = {} ({} letters)",
        image.display(first.target()),
        image.len()
    );

    // folding twice reaches small type with no triangle, for any input
    let double = fold::fold_to_small_no_triangle(&graph);
    println!(
        "double fold: {} vertices, small-type: {}, no-triangle: {}",
        double.target().vertex_count(),
        double.target().is_small_type(),
        double.target().has_no_triangle()
    );

    // the morphism respects lcm's; each generator pair is certified
    let report = first.check_respects_lcm(10_000_000).unwrap();
    println!("{report}");

    // an m = ∞ edge folds onto copies of the non-spherical Γ(∞)
    let inf = samples::single_edge(Label::Infinite);
    let fold_inf = fold::fold_once(&inf);
    let report = fold_inf.check_respects_lcm(1_000_000).unwrap();
    println!("{report}");
}
