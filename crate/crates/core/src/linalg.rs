//! Exact dense linear algebra over an ordered field: rank, nullspace, and
//! linear solves by fraction-exact Gaussian elimination.

use crate::ring::OrderedField;

/// Reduced row echelon form; returns pivot column indices.
#[allow(clippy::needless_range_loop)]
pub fn row_reduce<F: OrderedField>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].vanishes()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv_ref();
        for k in c..ncols {
            rows[r][k] = rows[r][k].mul_ref(&inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].vanishes() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    rows[i][k] = rows[i][k].sub_ref(&rows[r][k].mul_ref(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<F: OrderedField>(mut rows: Vec<Vec<F>>) -> usize {
    row_reduce(&mut rows).len()
}

/// Basis of the right nullspace of the row system.
pub fn nullspace<F: OrderedField>(mut rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    let zero = rows[0][0].zero_like();
    let one = rows[0][0].one_like();
    let pivots = row_reduce(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![zero.clone(); ncols];
        v[fc] = one.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[i][fc].neg_ref();
        }
        basis.push(v);
    }
    basis
}

/// Solves `A x = b` for one solution; `None` when inconsistent.
pub fn solve<F: OrderedField>(rows: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    assert_eq!(rows.len(), rhs.len());
    if rows.is_empty() {
        return Some(vec![]);
    }
    let ncols = rows[0].len();
    let zero = rhs[0].zero_like();
    let mut aug: Vec<Vec<F>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![zero; ncols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][ncols].clone();
    }
    Some(x)
}

/// Row basis grown one vector at a time, kept in echelon form so membership
/// tests cost one reduction pass instead of a fresh elimination.
#[derive(Debug, Clone)]
pub struct IncrementalBasis<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: OrderedField> IncrementalBasis<F> {
    pub fn new() -> Self {
        IncrementalBasis { rows: vec![], pivots: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis; if independent, normalises and keeps
    /// it, returning `true`.
    pub fn try_add(&mut self, mut row: Vec<F>) -> bool {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].vanishes() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    *x = x.sub_ref(&y.mul_ref(&f));
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.vanishes()) else {
            return false;
        };
        let inv = row[p].inv_ref();
        for x in row.iter_mut() {
            *x = x.mul_ref(&inv);
        }
        self.rows.push(row);
        self.pivots.push(p);
        true
    }
}

impl<F: OrderedField> Default for IncrementalBasis<F> {
    fn default() -> Self {
        Self::new()
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix; consumes
/// the workspace.
pub fn bareiss_det(mat: &mut [Vec<num_bigint::BigInt>]) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !mat[i][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = num / &prev; // exact by the Bareiss identity
            }
            mat[i][k] = BigInt::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// One-dimensional kernel of a full-rank 5x6 integer row system, as the
/// alternating vector of maximal minors; `None` when the rank drops (all
/// minors vanish).
pub fn integer_kernel_vector(rows: &[Vec<num_bigint::BigInt>]) -> Option<Vec<num_bigint::BigInt>> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let ncols = rows.first().map_or(0, |r| r.len());
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    debug_assert_eq!(rows.len() + 1, ncols);
    let mut kernel = Vec::with_capacity(ncols);
    let mut any_nonzero = false;
    for drop in 0..ncols {
        let mut minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != drop)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut det = bareiss_det(&mut minor);
        if drop % 2 == 1 {
            det = -det;
        }
        if !det.is_zero() {
            any_nonzero = true;
        }
        kernel.push(det);
    }
    any_nonzero.then_some(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, Rat};

    fn row(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_i64(x)).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn nullspace_annihilates() {
        let rows = vec![row(&[1, 2, 3]), row(&[0, 1, 1])];
        let ns = nullspace(rows.clone());
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: Rat = r.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert_eq!(dot, rat_i64(0));
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        use num_bigint::BigInt;
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            BigInt::from((state % 19) as i64 - 9)
        };
        for _ in 0..50 {
            let m: Vec<Vec<BigInt>> = (0..3).map(|_| (0..3).map(|_| next()).collect()).collect();
            let direct = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
            let mut work = m.clone();
            assert_eq!(bareiss_det(&mut work), direct);
        }
    }

    #[test]
    fn integer_kernel_annihilates_rows() {
        use num_bigint::BigInt;
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1, 1, 1, 0, 0, 0],
            vec![2, -1, 0, 3, 0, 1],
            vec![0, 4, -2, 1, 1, 0],
            vec![1, 0, 0, 0, 2, -1],
            vec![0, 0, 3, -1, 0, 2],
        ]
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
        let kernel = integer_kernel_vector(&rows).expect("full rank system");
        for r in &rows {
            let dot: BigInt = r.iter().zip(&kernel).map(|(a, b)| a * b).sum();
            assert_eq!(dot, BigInt::from(0));
        }
        // rank-deficient system has no unique kernel direction
        let mut dependent = rows.clone();
        dependent[4] = rows[0].clone();
        assert!(integer_kernel_vector(&dependent).is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let rows = vec![row(&[1, 1]), row(&[2, 2])];
        assert!(solve(&rows, &row(&[1, 3])).is_none());
        let x = solve(&rows, &row(&[1, 2])).unwrap();
        assert_eq!(&x[0] + &x[1], rat_i64(1));
    }
}
