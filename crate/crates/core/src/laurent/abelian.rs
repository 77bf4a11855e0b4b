use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::matrix::{IntMatrix, Matrix};
use super::poly::LaurentPoly;
use super::snf::snf_int;
use crate::presentations::{FreeRingElt, Presentation, Word};

/// `H_1(G; Z)` split as `Z^b` plus torsion, with the projection of every
/// generator onto the free part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianizationData {
    pub b: usize,
    pub torsion: Vec<BigInt>,
    /// One row per generator, `b` integer coordinates each.
    pub projection: Vec<Vec<i64>>,
}

impl AbelianizationData {
    pub fn betti(&self) -> usize {
        self.b
    }

    /// Free-part coordinates of a word.
    pub fn project_word(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0i64; self.b];
        for &(g, e) in w.letters() {
            for (k, x) in self.projection[g].iter().enumerate() {
                v[k] += e * x;
            }
        }
        v
    }

    pub fn project_vector(&self, exps: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.b];
        for (g, &e) in exps.iter().enumerate() {
            for (k, x) in self.projection[g].iter().enumerate() {
                v[k] += e * x;
            }
        }
        v
    }

    pub fn monomial_of(&self, w: &Word) -> Vec<i64> {
        self.project_word(w)
    }
}

/// Column-style Hermite form: right-multiplies by a unimodular matrix so the
/// result is lower echelon with positive pivots and reduced entries to the
/// left of each pivot. Used to make the free-part basis canonical.
fn column_hermite(p: &IntMatrix) -> IntMatrix {
    let mut a = p.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pc = 0;
    let mut pivots = Vec::new();
    for i in 0..rows {
        if pc == cols {
            break;
        }
        loop {
            let nz: Vec<usize> = (pc..cols).filter(|&j| !a.get(i, j).is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let m = *nz.iter().min_by_key(|&&j| a.get(i, j).abs()).unwrap();
            a.swap_cols(pc, m);
            let mut done = true;
            for j in pc + 1..cols {
                if a.get(i, j).is_zero() {
                    continue;
                }
                let q = a.get(i, j).div_floor(a.get(i, pc));
                for r in 0..rows {
                    let v = a.get(r, j) - &q * a.get(r, pc);
                    a.set(r, j, v);
                }
                if !a.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if (pc..cols).all(|j| a.get(i, j).is_zero()) {
            continue;
        }
        if a.get(i, pc).is_negative() {
            for r in 0..rows {
                let v = -a.get(r, pc);
                a.set(r, pc, v);
            }
        }
        pivots.push((i, pc));
        pc += 1;
    }
    for (k, &(i, c)) in pivots.iter().enumerate() {
        for &(_, c2) in &pivots[..k] {
            let q = a.get(i, c2).div_floor(a.get(i, c));
            if q.is_zero() {
                continue;
            }
            for r in 0..rows {
                let v = a.get(r, c2) - &q * a.get(r, c);
                a.set(r, c2, v);
            }
        }
    }
    a
}

/// Abelianization from the Smith normal form of the relator exponent matrix.
pub fn abelianization(p: &Presentation) -> AbelianizationData {
    let g = p.num_generators();
    let m = IntMatrix::from_i64(&p.exponent_matrix(), g);
    let snf = snf_int(&m);
    let diag = snf.diagonal();
    let k = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_zero() && *d != &BigInt::from(1)).cloned().collect();
    let b = g - k;
    let free_cols: Vec<usize> = (k..g).collect();
    let proj = snf.v.select_cols(&free_cols);
    let proj = column_hermite(&proj);
    let projection =
        (0..g).map(|i| (0..b).map(|j| proj.get(i, j).to_i64().expect("projection fits in i64")).collect()).collect();
    AbelianizationData { b, torsion, projection }
}

/// Pushes free-group-ring entries to `Z[Z^b]`: each word maps to the
/// monomial of its free-part coordinates.
pub fn specialize_jacobian(j: &[Vec<FreeRingElt>], ab: &AbelianizationData, cols: usize) -> Matrix<LaurentPoly> {
    let rows: Vec<Vec<LaurentPoly>> = j.iter().map(|row| row.iter().map(|e| specialize(e, ab)).collect()).collect();
    Matrix::from_rows(rows, cols)
}

pub fn specialize(e: &FreeRingElt, ab: &AbelianizationData) -> LaurentPoly {
    let mut out = LaurentPoly::zero(ab.b);
    for (w, c) in e.terms() {
        out.add_term(ab.monomial_of(w), c);
    }
    out
}

/// The boundary column `(x_i - 1)` pushed to `Z[Z^b]`.
pub fn boundary_column(p: &Presentation, ab: &AbelianizationData) -> Matrix<LaurentPoly> {
    let rows = (0..p.num_generators())
        .map(|i| {
            let m = LaurentPoly::monomial(ab.b, ab.projection[i].clone(), BigRational::one());
            vec![&m - &LaurentPoly::one(ab.b)]
        })
        .collect();
    Matrix::from_rows(rows, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{fox_jacobian, parse_presentation};

    #[test]
    fn trefoil() {
        let p = parse_presentation("gens x y\nrel x y x y^-1 x^-1 y^-1").unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab.b, 1);
        assert!(ab.torsion.is_empty());
        assert_eq!(ab.projection, vec![vec![1], vec![1]]);
        let j = specialize_jacobian(&fox_jacobian(&p), &ab, 2);
        assert_eq!(j.get(0, 0).to_string(), "1 - t + t^2");
        assert_eq!(j.get(0, 1).to_string(), "-1 + t - t^2");
    }

    #[test]
    fn cyclic_three() {
        let p = parse_presentation("gens a\nrel a^3").unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab.b, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(3)]);
        let j = specialize_jacobian(&fox_jacobian(&p), &ab, 1);
        assert_eq!(j.get(0, 0).to_string(), "3");
    }

    #[test]
    fn free_group() {
        let p = Presentation::free(["x", "y"]);
        let ab = abelianization(&p);
        assert_eq!(ab.b, 2);
        assert_eq!(ab.projection, vec![vec![1, 0], vec![0, 1]]);
        let col = boundary_column(&p, &ab);
        assert_eq!(col.get(0, 0).to_string(), "-1 + t1");
        assert_eq!(col.get(1, 0).to_string(), "-1 + t2");
    }

    #[test]
    fn mixed_torsion() {
        // Z/2 x Z/4 x Z
        let p = parse_presentation("gens a b c\nrel a^2\nrel b^4\nrel a b a^-1 b^-1").unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab.b, 1);
        assert_eq!(ab.torsion, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(ab.projection, vec![vec![0], vec![0], vec![1]]);
    }
}
