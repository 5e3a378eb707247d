//! The Coxeter group word problem through the integer root action:
//! canonical reduced words, lengths, inversion sets, the weak order, and
//! longest elements of spherical parabolics.
//!
//! ```bash
//! cargo run -p artin --example word_problem
//! ```

use artin::coxeter::{self, GroupWord};
use artin::{samples, RootSystem};

fn main() {
    let sys = RootSystem::new(samples::a2()).unwrap();
    let graph = sys.graph().clone();

    for text in ["s t s", "t s t", "s s", "s t s t"] {
        let word = GroupWord::parse(&graph, text).unwrap();
        let element = coxeter::canonicalize(&sys, &word);
        println!(
            "{text:10} canonicalizes to {:10} (length {})",
            format!("\"{}\"", element.display(&graph)),
            element.length()
        );
    }

    // inversion sets grow with the length: |Φ_w| = l(w)
    let st = coxeter::canonicalize(&sys, &GroupWord::parse(&graph, "s t").unwrap());
    println!("Φ_st:");
    for root in coxeter::inversion_set(&sys, &st) {
        println!("  {}", root.to_json_string(&graph));
    }

    // weak order: s ≤ st but s ≰ ts
    let s = coxeter::canonicalize(&sys, &GroupWord::parse(&graph, "s").unwrap());
    let ts = coxeter::canonicalize(&sys, &GroupWord::parse(&graph, "t s").unwrap());
    println!("s ≤ st: {}", coxeter::weak_le(&sys, &s, &st));
    println!("s ≤ ts: {}", coxeter::weak_le(&sys, &s, &ts));

    // the longest element of a spherical parabolic
    let sys3 = RootSystem::new(samples::a_n(3)).unwrap();
    let w0 = coxeter::longest_element(&sys3, &[0, 1, 2]).unwrap();
    println!(
        "w_0(A_3) = \"{}\", length {}",
        w0.display(sys3.graph()),
        w0.length()
    );

    // W is enumerable when finite
    println!(
        "|W(A_3)| = {:?}",
        coxeter::enumerate_group(&samples::a_n(3), 1000)
    );
    println!(
        "|W(affine 4-cycle)| within 10^4: {:?}",
        coxeter::enumerate_group(&samples::cycle4(), 10_000)
    );
}
