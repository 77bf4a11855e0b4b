//! Rational 2-connectivity of corpus homomorphisms and the rank consequences.

use tfds::cli::corpus;
use tfds::homcheck::{check_abelianized, check_rational_two_connected, consequence_report};

fn main() {
    for name in ["noniso", "trefoil-ab", "doubling", "broken"] {
        let (h, onto) = corpus::map(name).unwrap();
        if let Err(e) = check_abelianized(&h) {
            println!("{name}: rejected ({e})");
            continue;
        }
        let mut v = check_rational_two_connected(&h);
        if onto {
            v = v.with_onto_assertion(&h);
        }
        let report = consequence_report(&h, &v);
        println!("{name}: H1 iso {}, H2 epi {}, certified {}", v.h1_iso, v.h2_epi.code(), v.certified());
        for c in &report.ranks {
            println!("  r{}: {:?} -> {:?}", c.level, c.source, c.target);
        }
        for c in &report.claims {
            println!("  claim: {}", c.statement);
        }
    }
}
