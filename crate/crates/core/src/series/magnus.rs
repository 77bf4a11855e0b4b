use num_rational::BigRational;
use num_traits::One;

use crate::laurent::{right_null_space, AbelianizationData, LaurentPoly, Matrix};
use crate::presentations::{fox_jacobian, FreeRingElt, Presentation, Word};
use crate::skewfield::{ExtensionTower, MElt, SkewFieldElt};

/// A homomorphism `G -> V x| Z^b` with `V = Q[Z^b]^d` whose kernel is
/// `G^(2)_H`.
///
/// Generator `x_i` goes to `(N_i, p_i)` where `p_i` is its free-part image
/// and `N_i` is row `i` of a basis of the right kernel of the specialized
/// Fox Jacobian `J`. A word `w` then maps to `(D(w) N, p(w))` with `D(w)`
/// its vector of specialized Fox derivatives, so relators die (`J N = 0`)
/// and on `G^(1)_H` the map is the projection of `H_1(G; Z[Z^b])` onto its
/// torsion-free quotient.
#[derive(Clone, Debug)]
pub struct MagnusEmbedding {
    tower: ExtensionTower,
    images: Vec<(MElt, Vec<i64>)>,
}

impl MagnusEmbedding {
    /// `jacobian` is the Fox Jacobian specialized along `ab`.
    pub fn new(ab: &AbelianizationData, jacobian: &Matrix<LaurentPoly>) -> Self {
        let b = ab.b;
        let kernel = right_null_space(jacobian, b);
        let d = kernel.cols();
        let images = (0..jacobian.cols())
            .map(|i| {
                let v = MElt((0..d).map(|k| kernel.get(i, k).clone()).collect());
                (v, ab.projection[i].clone())
            })
            .collect();
        MagnusEmbedding { tower: ExtensionTower::standard(b, d), images }
    }

    pub fn tower(&self) -> &ExtensionTower {
        &self.tower
    }

    /// Rank `d` of the free module `V`.
    pub fn ambient_rank(&self) -> usize {
        self.tower.module_rank()
    }

    pub fn generator_images(&self) -> &[(MElt, Vec<i64>)] {
        &self.images
    }

    /// Image of a word, multiplying with `(a, g)(c, h) = (a + t^g c, g + h)`.
    pub fn word_image(&self, w: &Word) -> (MElt, Vec<i64>) {
        let (r, b) = (self.tower.module_rank(), self.tower.b());
        let mut a = MElt::zero(r, b);
        let mut g = vec![0i64; b];
        for &(i, e) in w.letters() {
            let (v, h) = &self.images[i];
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    a = a.add(&translate(v, &g));
                    add_into(&mut g, h, 1);
                } else {
                    add_into(&mut g, h, -1);
                    a = a.sub(&translate(v, &g));
                }
            }
        }
        (a, g)
    }

    pub fn ring_image(&self, e: &FreeRingElt) -> SkewFieldElt {
        let terms: Vec<(MElt, Vec<i64>, BigRational)> = e
            .terms()
            .map(|(w, c)| {
                let (a, g) = self.word_image(w);
                (a, g, c.clone())
            })
            .collect();
        self.tower.group_ring_element(&terms)
    }

    /// The boundary map `d2`: Fox Jacobian pushed to the group ring.
    pub fn jacobian(&self, p: &Presentation) -> Matrix<SkewFieldElt> {
        let rows: Vec<Vec<SkewFieldElt>> =
            fox_jacobian(p).iter().map(|row| row.iter().map(|e| self.ring_image(e)).collect()).collect();
        Matrix::from_rows(rows, p.num_generators())
    }

    /// The boundary map `d1`: the column `(x_i - 1)`.
    pub fn boundary_column(&self) -> Matrix<SkewFieldElt> {
        let one = BigRational::one();
        let zero = MElt::zero(self.tower.module_rank(), self.tower.b());
        let rows = self
            .images
            .iter()
            .map(|(v, g)| {
                vec![self.tower.group_ring_element(&[
                    (v.clone(), g.clone(), one.clone()),
                    (zero.clone(), vec![0; g.len()], -one.clone()),
                ])]
            })
            .collect();
        Matrix::from_rows(rows, 1)
    }
}

fn translate(v: &MElt, g: &[i64]) -> MElt {
    MElt(v.0.iter().map(|p| p.shift(g)).collect())
}

fn add_into(g: &mut [i64], h: &[i64], sign: i64) {
    for (x, y) in g.iter_mut().zip(h) {
        *x += sign * y;
    }
}
