//! Rational completion towers of corpus groups.

use tfds::cli::corpus;
use tfds::series::completion_descriptor;

fn main() {
    for name in ["cyclic3", "trefoil", "heisenberg", "free2", "noniso-E"] {
        let p = corpus::presentation(name).unwrap();
        let t = completion_descriptor(&p, 2).unwrap();
        let dims: Vec<String> = t.levels.iter().map(|l| format!("{}:{}", l.n, l.dimension)).collect();
        println!("{name:>10}: dimensions [{}], stabilized {:?}, limit {:?}", dims.join(" "), t.stabilized, t.limit);
    }
}
