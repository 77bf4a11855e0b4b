//! Arithmetic in the Ore field of Q[V x| Z^b] and a rank computed over it.

use num_rational::BigRational;
use tfds::laurent::{LaurentPoly, Matrix};
use tfds::skewfield::{skew_matrix_rank, ExtensionTower, MElt};

fn main() {
    let tower = ExtensionTower::standard(2, 1);
    let one = BigRational::from_integer(1.into());
    let u = MElt(vec![LaurentPoly::one(2)]);
    let zero = MElt(vec![LaurentPoly::zero(2)]);
    let s = tower.group_ring_element(&[(zero.clone(), vec![1, 0], one.clone())]);
    let v = tower.group_ring_element(&[(u, vec![0, 0], one.clone())]);
    println!("s1 u == u s1: {}", tower.eq(&tower.mul(&s, &v), &tower.mul(&v, &s)));

    let a = tower.add(&s, &tower.group_ring_element(&[(zero.clone(), vec![0, 0], -one.clone())]));
    let b = tower.add(&v, &tower.group_ring_element(&[(zero, vec![0, 0], -one)]));
    let q = tower.mul(&tower.inv(&a).unwrap(), &b);
    println!("(s1 - 1) ((s1 - 1)^-1 (u - 1)) == u - 1: {}", tower.eq(&tower.mul(&a, &q), &b));

    let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![tower.mul(&b, &a), tower.mul(&b, &b)]], 2);
    println!("rank of [[s1 - 1, u - 1], [(u - 1)(s1 - 1), (u - 1)^2]] = {}", skew_matrix_rank(&tower, &m));
}
