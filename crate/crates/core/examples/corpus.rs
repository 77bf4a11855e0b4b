//! Runs the bundled corpus and prints one line per entry.

use tfds::cli::corpus::run_corpus;

fn main() {
    let run = run_corpus();
    for r in &run.results {
        println!("{:<12} {:<14} {}", r.kind, r.name, if r.pass { "ok" } else { "MISMATCH" });
    }
    for m in &run.mismatches {
        println!("mismatch: {m}");
    }
}
