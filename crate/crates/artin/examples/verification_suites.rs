//! The four verification suites run programmatically: representation
//! relations, T-recursion well-definedness, closed-set laws, and the
//! monoid order laws. Each returns a report that renders as text or JSON
//! and carries counterexamples on failure (none are expected).
//!
//! ```bash
//! cargo run -p artin --example verification_suites
//! ```

use artin::rep::RepContext;
use artin::{closed, monoid, samples, RootSystem};

fn main() {
    let ctx = RepContext::new(samples::a_n(3)).unwrap();
    println!("{}\n", ctx.verify_relations(5).unwrap());
    println!("{}\n", ctx.verify_tpoly_lemmas(5).unwrap());

    let sys = RootSystem::new(samples::a2()).unwrap();
    let report = closed::verify_closed_laws(&sys, 2, 4, 0xA2C0FFEE, 100, 1_000_000).unwrap();
    println!("{report}\n");

    let report = monoid::verify_order_laws(&sys, 4, 1_000_000).unwrap();
    println!("{report}\n");

    // the affine 4-cycle exercises the lazy (infinite) root system
    let affine = RepContext::new(samples::cycle4()).unwrap();
    let report = affine.verify_relations(4).unwrap();
    println!("{report}");

    // machine-readable form of the same data
    let json = report.to_json();
    println!(
        "\nrelations on the 4-cycle, as JSON: suite={}, passed={}",
        json["suite"],
        report.passed()
    );
}
