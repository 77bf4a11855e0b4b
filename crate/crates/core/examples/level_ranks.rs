//! Ranks r_n of the torsion-free derived quotients at levels 0, 1 and 2.

use tfds::cli::corpus;
use tfds::series::{rank_report, LevelOutcome};

fn main() {
    for name in corpus::ENTRY_NAMES {
        let p = corpus::presentation(name).unwrap();
        let report = rank_report(&p, 2);
        let ranks: Vec<String> = report
            .levels
            .iter()
            .map(|l| match l {
                LevelOutcome::Computed(r) => format!("r{} = {} ({:?})", r.level, r.rank, r.method),
                LevelOutcome::Unsupported(u) => format!("unsupported: {u}"),
            })
            .collect();
        println!("{name:>14}: {}; stabilized at {:?}", ranks.join(", "), report.stabilization.stabilized_at);
    }
}
