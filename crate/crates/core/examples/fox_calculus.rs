//! Fox derivatives of a relator and the fundamental identity.

use tfds::presentations::{fox_derivative, fundamental_identity_defect, parse_word};

fn main() {
    let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let w = parse_word("x y x Y X Y", &names).unwrap();
    println!("w = {}", w.display_with(&names));
    for (i, g) in names.iter().enumerate() {
        let d = fox_derivative(&w, i);
        let terms: Vec<String> = d.terms().map(|(u, c)| format!("{c}*[{}]", u.display_with(&names))).collect();
        println!("d w / d {g} = {}", terms.join(" + "));
    }
    let defect = fundamental_identity_defect(&w, names.len());
    println!("sum_i (d w / d x_i)(x_i - 1) - (w - 1) is zero: {}", defect.is_zero());
}
