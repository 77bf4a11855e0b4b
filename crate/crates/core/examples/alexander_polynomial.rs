//! Alexander polynomials and Smith forms over Z and Q[t^{+-1}].

use tfds::cli::corpus;
use tfds::laurent::{alexander_data, snf_int, IntMatrix};

fn main() {
    for name in ["unknot", "trefoil", "figure8"] {
        let p = corpus::presentation(name).unwrap();
        let a = alexander_data(&p).unwrap();
        println!("{name}: delta = {}", a.delta);
    }
    let m = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    let diag: Vec<String> = snf_int(&m).diagonal().iter().map(ToString::to_string).collect();
    println!("invariant factors of the integer example: {}", diag.join(", "));
}
