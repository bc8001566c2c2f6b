//! Symmetric 3x3 strain matrices over any scalar tower, with the determinant
//! compatibility test.
//!
//! Only the six independent entries are stored, so symmetry is structural.
//! Two strains on the same trace slice are compatible exactly when the
//! determinant of their difference vanishes; the test refuses trace-mismatched
//! inputs because that criterion only holds on a trace-constant slice.

use crate::algebraic::Algebraic;
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::ring::{OrderedField, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrainError {
    #[error("compatibility test requires equal traces")]
    TraceMismatch,
}

/// A symmetric 3x3 matrix with entries in a scalar ring.
#[derive(Debug, Clone, PartialEq)]
pub struct SymStrain<R> {
    pub e11: R,
    pub e22: R,
    pub e33: R,
    pub e12: R,
    pub e13: R,
    pub e23: R,
}

impl<R: Ring> SymStrain<R> {
    pub fn new(e11: R, e22: R, e33: R, e12: R, e13: R, e23: R) -> SymStrain<R> {
        SymStrain { e11, e22, e33, e12, e13, e23 }
    }

    /// Entries in the fixed order `(e11, e22, e33, e12, e13, e23)`.
    pub fn entries(&self) -> [&R; 6] {
        [&self.e11, &self.e22, &self.e33, &self.e12, &self.e13, &self.e23]
    }

    pub fn from_entries(v: [R; 6]) -> SymStrain<R> {
        let [e11, e22, e33, e12, e13, e23] = v;
        SymStrain { e11, e22, e33, e12, e13, e23 }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SymStrain<S> {
        SymStrain {
            e11: f(&self.e11),
            e22: f(&self.e22),
            e33: f(&self.e33),
            e12: f(&self.e12),
            e13: f(&self.e13),
            e23: f(&self.e23),
        }
    }

    pub fn zero_like(&self) -> SymStrain<R> {
        self.map(|e| e.zero_like())
    }

    pub fn add(&self, other: &SymStrain<R>) -> SymStrain<R> {
        SymStrain {
            e11: self.e11.add_ref(&other.e11),
            e22: self.e22.add_ref(&other.e22),
            e33: self.e33.add_ref(&other.e33),
            e12: self.e12.add_ref(&other.e12),
            e13: self.e13.add_ref(&other.e13),
            e23: self.e23.add_ref(&other.e23),
        }
    }

    pub fn sub(&self, other: &SymStrain<R>) -> SymStrain<R> {
        SymStrain {
            e11: self.e11.sub_ref(&other.e11),
            e22: self.e22.sub_ref(&other.e22),
            e33: self.e33.sub_ref(&other.e33),
            e12: self.e12.sub_ref(&other.e12),
            e13: self.e13.sub_ref(&other.e13),
            e23: self.e23.sub_ref(&other.e23),
        }
    }

    pub fn scale(&self, c: &R) -> SymStrain<R> {
        self.map(|e| e.mul_ref(c))
    }

    pub fn neg(&self) -> SymStrain<R> {
        self.map(|e| e.neg_ref())
    }

    pub fn trace(&self) -> R {
        self.e11.add_ref(&self.e22).add_ref(&self.e33)
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.vanishes())
    }

    /// Exact determinant.
    pub fn det(&self) -> R {
        // e11(e22 e33 - e23^2) - e12(e12 e33 - e23 e13) + e13(e12 e23 - e22 e13)
        let m1 = self.e22.mul_ref(&self.e33).sub_ref(&self.e23.mul_ref(&self.e23));
        let m2 = self.e12.mul_ref(&self.e33).sub_ref(&self.e23.mul_ref(&self.e13));
        let m3 = self.e12.mul_ref(&self.e23).sub_ref(&self.e22.mul_ref(&self.e13));
        self.e11
            .mul_ref(&m1)
            .sub_ref(&self.e12.mul_ref(&m2))
            .add_ref(&self.e13.mul_ref(&m3))
    }

    /// Cofactor (adjugate) matrix; symmetric for symmetric input.
    pub fn cof(&self) -> SymStrain<R> {
        SymStrain {
            e11: self.e22.mul_ref(&self.e33).sub_ref(&self.e23.mul_ref(&self.e23)),
            e22: self.e11.mul_ref(&self.e33).sub_ref(&self.e13.mul_ref(&self.e13)),
            e33: self.e11.mul_ref(&self.e22).sub_ref(&self.e12.mul_ref(&self.e12)),
            e12: self.e13.mul_ref(&self.e23).sub_ref(&self.e12.mul_ref(&self.e33)),
            e13: self.e12.mul_ref(&self.e23).sub_ref(&self.e13.mul_ref(&self.e22)),
            e23: self.e12.mul_ref(&self.e13).sub_ref(&self.e11.mul_ref(&self.e23)),
        }
    }

    /// Inner product `Tr(ef)` = sum of diagonal products plus twice the
    /// off-diagonal products.
    pub fn inner(&self, other: &SymStrain<R>) -> R {
        let diag = self
            .e11
            .mul_ref(&other.e11)
            .add_ref(&self.e22.mul_ref(&other.e22))
            .add_ref(&self.e33.mul_ref(&other.e33));
        let off = self
            .e12
            .mul_ref(&other.e12)
            .add_ref(&self.e13.mul_ref(&other.e13))
            .add_ref(&self.e23.mul_ref(&other.e23));
        diag.add_ref(&off).add_ref(&off)
    }

    pub fn norm_sq(&self) -> R {
        self.inner(self)
    }

    /// Full 3x3 matrix view, row major.
    pub fn to_matrix(&self) -> [[R; 3]; 3] {
        [
            [self.e11.clone(), self.e12.clone(), self.e13.clone()],
            [self.e12.clone(), self.e22.clone(), self.e23.clone()],
            [self.e13.clone(), self.e23.clone(), self.e33.clone()],
        ]
    }

    /// Compatibility on a trace-constant slice: `det(e - f) = 0`.
    pub fn is_compatible(&self, other: &SymStrain<R>) -> Result<bool, StrainError> {
        if !self.trace().sub_ref(&other.trace()).vanishes() {
            return Err(StrainError::TraceMismatch);
        }
        Ok(self.sub(other).det().vanishes())
    }

    /// Convex combination `t*self + (1-t)*other`.
    pub fn lerp(&self, other: &SymStrain<R>, t: &R) -> SymStrain<R> {
        let one_minus = t.one_like().sub_ref(t);
        self.scale(t).add(&other.scale(&one_minus))
    }
}

impl SymStrain<Rat> {
    pub fn diag_i64(a: i64, b: i64, c: i64) -> SymStrain<Rat> {
        use crate::rat::rat_i64;
        SymStrain::new(rat_i64(a), rat_i64(b), rat_i64(c), rat_i64(0), rat_i64(0), rat_i64(0))
    }

    pub fn identity() -> SymStrain<Rat> {
        SymStrain::diag_i64(1, 1, 1)
    }

    /// Lifts rational entries into a polynomial ring as constants.
    pub fn to_polynomial(&self, vars: &crate::poly::VarSet) -> SymStrain<Polynomial> {
        self.map(|e| Polynomial::constant(vars, e.clone()))
    }

    /// Lifts rational entries into an algebraic field as rationals.
    pub fn to_algebraic(&self) -> SymStrain<Algebraic> {
        self.map(|e| Algebraic::from_rational(e.clone()))
    }
}

/// Conjugation `R e R^T` by an integer 3x3 matrix, exact in the scalar ring.
pub fn conjugate<R: Ring>(rot: &[[i64; 3]; 3], e: &SymStrain<R>) -> SymStrain<R> {
    let m = e.to_matrix();
    let zero = e.e11.zero_like();
    let scale_int = |x: &R, k: i64| -> R {
        // entries of cube rotations are in {-1, 0, 1}
        match k {
            0 => zero.clone(),
            1 => x.clone(),
            -1 => x.neg_ref(),
            _ => {
                let mut acc = zero.clone();
                let (mag, neg) = (k.unsigned_abs(), k < 0);
                for _ in 0..mag {
                    acc = acc.add_ref(x);
                }
                if neg {
                    acc.neg_ref()
                } else {
                    acc
                }
            }
        }
    };
    let mut out = [[zero.clone(), zero.clone(), zero.clone()], [zero.clone(), zero.clone(), zero.clone()], [zero.clone(), zero.clone(), zero.clone()]];
    for (i, out_row) in out.iter_mut().enumerate() {
        for (j, out_ij) in out_row.iter_mut().enumerate() {
            let mut acc = zero.clone();
            for a in 0..3 {
                if rot[i][a] == 0 {
                    continue;
                }
                for (b, m_ab) in m[a].iter().enumerate() {
                    if rot[j][b] == 0 {
                        continue;
                    }
                    acc = acc.add_ref(&scale_int(m_ab, rot[i][a] * rot[j][b]));
                }
            }
            *out_ij = acc;
        }
    }
    SymStrain {
        e11: out[0][0].clone(),
        e22: out[1][1].clone(),
        e33: out[2][2].clone(),
        e12: out[0][1].clone(),
        e13: out[0][2].clone(),
        e23: out[1][2].clone(),
    }
}

/// Exact rank of the span of a family of strains, by Gaussian elimination on
/// the six entry coordinates.
pub fn rank<F: OrderedField>(vectors: &[SymStrain<F>]) -> usize {
    let rows: Vec<Vec<F>> = vectors
        .iter()
        .map(|v| v.entries().iter().map(|e| (*e).clone()).collect())
        .collect();
    crate::linalg::rank(rows)
}

/// Dimension of the affine span of a point family.
pub fn affine_dim<F: OrderedField>(points: &[SymStrain<F>]) -> usize {
    match points.split_first() {
        None | Some((_, [])) => 0,
        Some((base, rest)) => {
            let diffs: Vec<SymStrain<F>> = rest.iter().map(|p| p.sub(base)).collect();
            rank(&diffs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, ratio};

    #[test]
    fn determinant_of_diag_and_zero() {
        assert_eq!(SymStrain::diag_i64(0, 0, 0).det(), rat_i64(0));
        assert_eq!(SymStrain::diag_i64(2, 3, 5).det(), rat_i64(30));
    }

    #[test]
    fn cofactor_of_identity_and_diag() {
        assert_eq!(SymStrain::identity().cof(), SymStrain::identity());
        assert_eq!(SymStrain::diag_i64(2, 3, 5).cof(), SymStrain::diag_i64(15, 10, 6));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn adjugate_identity_on_random_strains() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 13) as i64 - 6
        };
        for _ in 0..100 {
            let e = SymStrain::new(
                ratio(next(), 3),
                ratio(next(), 2),
                ratio(next(), 5),
                ratio(next(), 3),
                ratio(next(), 4),
                ratio(next(), 7),
            );
            let det = e.det();
            let cof = e.cof();
            // e * cof^T = det * I, checked entry by entry
            let em = e.to_matrix();
            let cm = cof.to_matrix();
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = rat_i64(0);
                    for (k, cm_k) in cm.iter().enumerate() {
                        acc += &em[i][k] * &cm_k[j];
                    }
                    let expect = if i == j { det.clone() } else { rat_i64(0) };
                    assert_eq!(acc, expect);
                }
            }
        }
    }

    #[test]
    fn inner_product_weights_off_diagonals() {
        let i = SymStrain::identity();
        assert_eq!(i.inner(&i), rat_i64(3));
        let e = SymStrain::new(rat_i64(0), rat_i64(0), rat_i64(0), rat_i64(1), rat_i64(0), rat_i64(0));
        assert_eq!(e.norm_sq(), rat_i64(2));
    }

    #[test]
    fn compatibility_demands_equal_traces() {
        let a = SymStrain::diag_i64(1, 1, 1);
        let b = SymStrain::diag_i64(1, 1, 2);
        assert_eq!(a.is_compatible(&b), Err(StrainError::TraceMismatch));
        assert_eq!(a.is_compatible(&a), Ok(true));
    }

    #[test]
    fn det_antisymmetry() {
        let a = SymStrain::new(ratio(1, 2), rat_i64(2), ratio(-5, 2), rat_i64(1), rat_i64(0), rat_i64(3));
        let b = SymStrain::new(rat_i64(1), rat_i64(-1), rat_i64(0), ratio(1, 3), rat_i64(2), rat_i64(1));
        assert_eq!(a.sub(&b).det(), -b.sub(&a).det());
    }

    #[test]
    fn conjugation_by_identity_is_identity() {
        let e = SymStrain::new(rat_i64(1), rat_i64(2), rat_i64(3), rat_i64(4), rat_i64(5), rat_i64(6));
        let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert_eq!(conjugate(&id, &e), e);
    }

    #[test]
    fn rank_and_affine_dim() {
        let a = SymStrain::diag_i64(1, 0, 0);
        let b = SymStrain::diag_i64(0, 1, 0);
        let c = SymStrain::diag_i64(1, 1, 0);
        assert_eq!(rank(&[a.clone(), b.clone(), c.clone()]), 2);
        assert_eq!(affine_dim(&[a.clone(), b.clone(), c.clone()]), 2);
        assert_eq!(affine_dim(std::slice::from_ref(&a)), 0);
        assert_eq!(affine_dim(&[a.clone(), a.clone()]), 0);
    }
}
