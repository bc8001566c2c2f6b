//! Permutation symmetries of the variant index set: the rotation group of the
//! cube acting by quarter-turn conjugations, the inversion, and the distance/
//! compatibility preservation predicates.

use crate::poly::{Polynomial, VarSet};
use crate::ring::Ring;
use crate::strain::{conjugate, SymStrain};
use crate::variants::{symbolic_variants, VariantSet};
use std::collections::BTreeSet;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymmetryError {
    #[error("tuple family is not closed under the permutation")]
    FamilyNotClosed,
}

/// A permutation of the variant indices `1..=12`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    /// `image[i-1]` is the image of `i`.
    image: [usize; 12],
}

impl Permutation {
    pub fn new(image: [usize; 12]) -> Permutation {
        let mut seen = [false; 12];
        for &v in &image {
            assert!((1..=12).contains(&v), "index out of range");
            assert!(!seen[v - 1], "not a bijection");
            seen[v - 1] = true;
        }
        Permutation { image }
    }

    pub fn identity() -> Permutation {
        Permutation { image: [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12] }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut image = [0; 12];
        for i in 1..=12 {
            image[i - 1] = self.apply(other.apply(i));
        }
        Permutation { image }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = [0; 12];
        for i in 1..=12 {
            image[self.apply(i) - 1] = i;
        }
        Permutation { image }
    }

    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.apply(i)).collect();
        out.sort_unstable();
        out
    }

    pub fn image(&self) -> &[usize; 12] {
        &self.image
    }
}

/// Quarter-turn rotation matrices about the coordinate axes.
pub const ROTATIONS: [[[i64; 3]; 3]; 3] = [
    [[1, 0, 0], [0, 0, -1], [0, 1, 0]],
    [[0, 0, 1], [0, 1, 0], [-1, 0, 0]],
    [[0, -1, 0], [1, 0, 0], [0, 0, 1]],
];

/// Conjugation `e -> R_i e R_i^T` for `i` in `{1,2,3}`.
pub fn rotation_action<R: Ring>(i: usize, e: &SymStrain<R>) -> SymStrain<R> {
    assert!((1..=3).contains(&i), "rotation index out of range");
    conjugate(&ROTATIONS[i - 1], e)
}

/// The permutation a rotation matrix induces on the symbolic variant list, or
/// `None` if conjugation does not permute the variants.
pub fn permutation_from_rotation(rot: &[[i64; 3]; 3]) -> Option<Permutation> {
    let (vars, strains) = symbolic_universe();
    let mut image = [0usize; 12];
    for i in 1..=12 {
        let conj = conjugate(rot, &strains[i - 1]);
        let j = (1..=12).find(|&j| conj == strains[j - 1])?;
        image[i - 1] = j;
    }
    let _ = vars;
    Some(Permutation::new(image))
}

fn symbolic_universe() -> (&'static VarSet, &'static Vec<SymStrain<Polynomial>>) {
    static UNIVERSE: OnceLock<(VarSet, Vec<SymStrain<Polynomial>>)> = OnceLock::new();
    let (vars, strains) = UNIVERSE.get_or_init(|| {
        let vars = VarSet::new(&["alpha", "beta", "delta", "epsilon"]);
        let strains = symbolic_variants(&vars, ["alpha", "beta", "delta", "epsilon"]);
        (vars, strains)
    });
    (vars, strains)
}

/// Index action of `r1`, `r2`, `r3`, derived once from the rotation matrices.
pub fn rotation_generator(i: usize) -> &'static Permutation {
    static GENERATORS: OnceLock<[Permutation; 3]> = OnceLock::new();
    let gens = GENERATORS.get_or_init(|| {
        [
            permutation_from_rotation(&ROTATIONS[0]).expect("r1 permutes the variants"),
            permutation_from_rotation(&ROTATIONS[1]).expect("r2 permutes the variants"),
            permutation_from_rotation(&ROTATIONS[2]).expect("r3 permutes the variants"),
        ]
    });
    &gens[i - 1]
}

/// The inversion: swaps each variant with its `epsilon -> -epsilon` partner.
pub fn inversion() -> Permutation {
    Permutation::new([2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11])
}

/// A finite permutation group with its elements listed explicitly.
#[derive(Debug, Clone)]
pub struct PermGroup {
    elements: Vec<Permutation>,
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }
}

/// Closure of the generators under composition, breadth first.
pub fn generate_group(generators: &[Permutation]) -> PermGroup {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    seen.insert(Permutation::identity());
    let mut frontier = vec![Permutation::identity()];
    while let Some(g) = frontier.pop() {
        for gen in generators {
            let h = gen.compose(&g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    PermGroup { elements: seen.into_iter().collect() }
}

/// The rotation group of the cube acting on variant indices (order 24).
pub fn rotation_group() -> &'static PermGroup {
    static GROUP: OnceLock<PermGroup> = OnceLock::new();
    GROUP.get_or_init(|| {
        generate_group(&[
            rotation_generator(1).clone(),
            rotation_generator(2).clone(),
            rotation_generator(3).clone(),
        ])
    })
}

/// The full cube symmetry group including the inversion (order 48).
pub fn full_group() -> &'static PermGroup {
    static GROUP: OnceLock<PermGroup> = OnceLock::new();
    GROUP.get_or_init(|| {
        generate_group(&[
            rotation_generator(1).clone(),
            rotation_generator(2).clone(),
            rotation_generator(3).clone(),
            inversion(),
        ])
    })
}

/// All 24 cube rotation matrices together with their index actions.
pub fn cube_rotations() -> &'static Vec<([[i64; 3]; 3], Permutation)> {
    static ROTS: OnceLock<Vec<([[i64; 3]; 3], Permutation)>> = OnceLock::new();
    ROTS.get_or_init(|| {
        let mul = |a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]| {
            let mut out = [[0i64; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
                }
            }
            out
        };
        let identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        let mut seen = vec![identity];
        let mut frontier = vec![identity];
        while let Some(m) = frontier.pop() {
            for r in &ROTATIONS {
                let n = mul(r, &m);
                if !seen.contains(&n) {
                    seen.push(n);
                    frontier.push(n);
                }
            }
        }
        let mut out: Vec<([[i64; 3]; 3], Permutation)> = seen
            .into_iter()
            .map(|m| {
                let p = permutation_from_rotation(&m).expect("cube rotation permutes variants");
                (m, p)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    })
}

/// The rotation matrix whose conjugation realises a rotation-group element.
pub fn matrix_for(p: &Permutation) -> Option<&'static [[i64; 3]; 3]> {
    cube_rotations().iter().find(|(_, q)| q == p).map(|(m, _)| m)
}

/// How a symmetry claim was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum CheckMode {
    Numeric,
    SymbolicVerified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub holds: bool,
    pub mode: CheckMode,
}

/// Does `p` preserve distance and |det| on the whole variant set?
pub fn is_symmetry(p: &Permutation, v: &VariantSet) -> SymmetryCheck {
    for i in 1..=12 {
        for j in i + 1..=12 {
            let d = v.strain(i).sub(v.strain(j));
            let dp = v.strain(p.apply(i)).sub(v.strain(p.apply(j)));
            if d.norm_sq() != dp.norm_sq() {
                return SymmetryCheck { holds: false, mode: CheckMode::Numeric };
            }
            let det = d.det();
            let detp = dp.det();
            if det != detp && det != -detp {
                return SymmetryCheck { holds: false, mode: CheckMode::Numeric };
            }
        }
    }
    SymmetryCheck { holds: true, mode: CheckMode::Numeric }
}

/// Symbolic variant of [`is_symmetry`]: the same predicates as polynomial
/// identities in the lattice parameters.
pub fn is_symmetry_symbolic(p: &Permutation) -> SymmetryCheck {
    let (_, strains) = symbolic_universe();
    for i in 1..=12 {
        for j in i + 1..=12 {
            let d = strains[i - 1].sub(&strains[j - 1]);
            let dp = strains[p.apply(i) - 1].sub(&strains[p.apply(j) - 1]);
            if !d.norm_sq().sub(&dp.norm_sq()).is_zero() {
                return SymmetryCheck { holds: false, mode: CheckMode::SymbolicVerified };
            }
            let det = d.det();
            let detp = dp.det();
            if !det.sub(&detp).is_zero() && !det.add(&detp).is_zero() {
                return SymmetryCheck { holds: false, mode: CheckMode::SymbolicVerified };
            }
        }
    }
    SymmetryCheck { holds: true, mode: CheckMode::SymbolicVerified }
}

/// Distance/|det| preservation restricted to the tuples of a family. The
/// family must be closed under `p` as index sets.
pub fn is_tuple_symmetry(
    p: &Permutation,
    family: &[Vec<usize>],
    v: &VariantSet,
) -> Result<bool, SymmetryError> {
    let family_sets: BTreeSet<Vec<usize>> = family
        .iter()
        .map(|t| {
            let mut s = t.clone();
            s.sort_unstable();
            s
        })
        .collect();
    for t in &family_sets {
        if !family_sets.contains(&p.apply_set(t)) {
            return Err(SymmetryError::FamilyNotClosed);
        }
    }
    for t in &family_sets {
        for (a_pos, &a) in t.iter().enumerate() {
            for &b in &t[a_pos + 1..] {
                let d = v.strain(a).sub(v.strain(b));
                let dp = v.strain(p.apply(a)).sub(v.strain(p.apply(b)));
                if d.norm_sq() != dp.norm_sq() {
                    return Ok(false);
                }
                let det = d.det();
                let detp = dp.det();
                if det != detp && det != -detp {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Orbit of an index tuple (as a set) under a group.
pub fn orbit(tuple: &[usize], group: &PermGroup) -> BTreeSet<Vec<usize>> {
    group.elements().iter().map(|p| p.apply_set(tuple)).collect()
}

/// Rank witness that no linear operator on `Sym(3)` maps every variant to its
/// inversion partner: the 72x36 system `L e_i = e_{r0 i}` is inconsistent.
pub fn inversion_has_no_linear_representation(v: &VariantSet) -> bool {
    use crate::rat::Rat;
    let r0 = inversion();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(72);
    let mut rhs: Vec<Rat> = Vec::with_capacity(72);
    for i in 1..=12 {
        let src: Vec<Rat> = v.strain(i).entries().iter().map(|e| (*e).clone()).collect();
        let dst: Vec<Rat> = v.strain(r0.apply(i)).entries().iter().map(|e| (*e).clone()).collect();
        for comp in 0..6 {
            let mut row = vec![Rat::zero_like(&src[0]); 36];
            row[comp * 6..(comp + 1) * 6].clone_from_slice(&src);
            rows.push(row);
            rhs.push(dst[comp].clone());
        }
    }
    crate::linalg::solve(&rows, &rhs).is_none()
}
