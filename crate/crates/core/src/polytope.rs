//! Facet enumeration for the convex polytope of the twelve variants, plus
//! face-lattice queries and the edge-compatibility criterion for lamination
//! hull equality.
//!
//! The enumeration follows the three-stage scheme: collect the five-point
//! subsets with four-dimensional affine span, keep those whose supporting
//! hyperplane has all remaining vertices weakly on one side, then merge
//! coplanar subsets. Merging is done by grouping on the exact canonical
//! (normal, offset) pair, which coincides with the pairwise
//! `dim aff span(S1 u S2) = 4` criterion but is order-independent. Exterior
//! vertices that land exactly on the hyperplane join the facet rather than
//! rejecting it; that is how the nine-vertex facets appear on the regime
//! boundary.

use crate::rat::{Rat, Sign};
use crate::strain::{affine_dim, SymStrain};
use crate::symmetry::{inversion, rotation_group};
use crate::variants::{compatibility_table, VariantSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    #[error("polytope is flat (affine dimension {0}, expected 5); facet enumeration needs alpha != beta")]
    FlatPolytope(usize),
    #[error("parameters are degenerate: all variants pairwise compatible")]
    DegenerateParams,
}

/// Orbit-group label of a facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum FacetGroup {
    /// Five-vertex facets (the monoclinic-Ia family or its mirror images).
    FiveVertex,
    /// The second five-vertex family, present only for `epsilon > delta`;
    /// closed under the inversion as a family.
    FiveVertexB,
    /// Six vertices forming a T3 together with its dual.
    T3Pair,
    /// Six vertices forming two pairwise-compatible triples.
    CompatibleTriplePair,
    EightVertex,
    NineVertex,
}

impl FacetGroup {
    pub fn label(self) -> &'static str {
        match self {
            FacetGroup::FiveVertex => "five-vertex",
            FacetGroup::FiveVertexB => "five-vertex-b",
            FacetGroup::T3Pair => "t3-pair",
            FacetGroup::CompatibleTriplePair => "compatible-triple-pair",
            FacetGroup::EightVertex => "eight-vertex",
            FacetGroup::NineVertex => "nine-vertex",
        }
    }
}

/// A four-dimensional facet of the variant polytope.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet {
    /// Sorted 1-based variant indices on the facet.
    pub vertices: Vec<usize>,
    /// Exact trace-free normal, integer entries with content one, oriented so
    /// exterior vertices evaluate strictly below `offset`.
    pub normal: SymStrain<Rat>,
    pub offset: Rat,
    pub group: FacetGroup,
}

impl Facet {
    pub fn contains(&self, index: usize) -> bool {
        self.vertices.binary_search(&index).is_ok()
    }
}

fn five_subsets() -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(792);
    for a in 1..=8 {
        for b in a + 1..=9 {
            for c in b + 1..=10 {
                for d in c + 1..=11 {
                    for e in d + 1..=12 {
                        out.push([a, b, c, d, e]);
                    }
                }
            }
        }
    }
    out
}

/// Trace-free normal to the affine span of the subset, unique up to scale
/// when the span is four-dimensional. Each row is scaled to integers (row
/// scaling leaves the kernel unchanged) and the kernel comes out of
/// fraction-free maximal minors.
fn hyperplane_normal(points: &[&SymStrain<Rat>]) -> Option<SymStrain<Rat>> {
    let base = points[0];
    let mut rows: Vec<Vec<BigInt>> =
        vec![vec![1.into(), 1.into(), 1.into(), 0.into(), 0.into(), 0.into()]];
    for p in &points[1..] {
        let d = p.sub(base);
        // weighted row so that the row dot n equals <n, d> = Tr(n d)
        let two = Rat::from_integer(2.into());
        let entries = [
            d.e11.clone(),
            d.e22.clone(),
            d.e33.clone(),
            &d.e12 * &two,
            &d.e13 * &two,
            &d.e23 * &two,
        ];
        let mut lcm = BigInt::one();
        for e in &entries {
            lcm = lcm.lcm(e.denom());
        }
        rows.push(
            entries
                .iter()
                .map(|e| (e * Rat::from_integer(lcm.clone())).to_integer())
                .collect(),
        );
    }
    let kernel = crate::linalg::integer_kernel_vector(&rows)?;
    Some(SymStrain::from_entries([
        Rat::from_integer(kernel[0].clone()),
        Rat::from_integer(kernel[1].clone()),
        Rat::from_integer(kernel[2].clone()),
        Rat::from_integer(kernel[3].clone()),
        Rat::from_integer(kernel[4].clone()),
        Rat::from_integer(kernel[5].clone()),
    ]))
}

/// Orientation-free dedup key for a supporting-hyperplane candidate: the
/// canonicalised `(normal, offset)` with the leading sign fixed positive.
fn unsigned_plane_key(normal: &SymStrain<Rat>, on_plane_point: &SymStrain<Rat>) -> Vec<BigInt> {
    let offset = normal.inner(on_plane_point);
    let (mut ints, off) = canonicalise(normal, &offset);
    ints.push(off);
    let flip = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    if flip {
        for v in ints.iter_mut() {
            *v = -v.clone();
        }
    }
    ints
}

/// Scales `(normal, offset)` to coprime integers, keeping orientation.
fn canonicalise(normal: &SymStrain<Rat>, offset: &Rat) -> (Vec<BigInt>, BigInt) {
    let mut values: Vec<Rat> = normal.entries().iter().map(|e| (*e).clone()).collect();
    values.push(offset.clone());
    let mut lcm = BigInt::one();
    for v in &values {
        lcm = lcm.lcm(v.denom());
    }
    let ints: Vec<BigInt> =
        values.iter().map(|v| (v * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for i in &ints {
        content = content.gcd(i);
    }
    let mut scaled: Vec<BigInt> = ints.iter().map(|i| i / &content).collect();
    let off = scaled.pop().unwrap();
    (scaled, off)
}

/// Enumerates the four-dimensional facets of the variant polytope.
pub fn enumerate_facets(v: &VariantSet) -> Result<Vec<Facet>, PolytopeError> {
    if v.params().all_compatible() {
        return Err(PolytopeError::DegenerateParams);
    }
    let all: Vec<SymStrain<Rat>> = v.strains().to_vec();
    let dim = affine_dim(&all);
    if dim != 5 {
        return Err(PolytopeError::FlatPolytope(dim));
    }

    let mut by_plane: BTreeMap<(Vec<BigInt>, BigInt), Vec<usize>> = BTreeMap::new();
    let mut seen_planes: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for subset in five_subsets() {
        let pts: Vec<&SymStrain<Rat>> = subset.iter().map(|&i| v.strain(i)).collect();
        // a unique trace-free normal direction exists exactly when the
        // subset spans an affine 4-plane, so one elimination covers both
        // the G1 dimension filter and the normal computation
        let Some(normal) = hyperplane_normal(&pts) else {
            continue;
        };
        // many admissible subsets share one supporting hyperplane; the
        // one-sided test and on-plane vertex set only depend on the plane
        let unsigned_key = unsigned_plane_key(&normal, pts[0]);
        if !seen_planes.insert(unsigned_key) {
            continue;
        }
        let offset = normal.inner(pts[0]);
        let values: Vec<Rat> = (1..=12).map(|j| normal.inner(v.strain(j))).collect();
        let mut above = false;
        let mut below = false;
        for (j, val) in values.iter().enumerate() {
            if subset.contains(&(j + 1)) {
                continue;
            }
            match val.cmp(&offset) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        if above && below {
            continue;
        }
        // orient so the exterior sits strictly below the offset
        let (normal, offset, values) = if above {
            (normal.neg(), -offset, values.into_iter().map(|v| -v).collect())
        } else {
            (normal, offset, values)
        };
        let on_plane: Vec<usize> =
            (1..=12).filter(|&j| values[j - 1] == offset).collect();
        let key = canonicalise(&normal, &offset);
        by_plane.entry(key).or_insert(on_plane);
    }

    let mut facets: Vec<Facet> = by_plane
        .into_iter()
        .map(|((normal_ints, offset_int), vertices)| {
            let normal = SymStrain::from_entries([
                Rat::from_integer(normal_ints[0].clone()),
                Rat::from_integer(normal_ints[1].clone()),
                Rat::from_integer(normal_ints[2].clone()),
                Rat::from_integer(normal_ints[3].clone()),
                Rat::from_integer(normal_ints[4].clone()),
                Rat::from_integer(normal_ints[5].clone()),
            ]);
            Facet {
                vertices,
                normal,
                offset: Rat::from_integer(offset_int),
                group: FacetGroup::FiveVertex, // relabelled below
            }
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    label_orbit_groups(v, &mut facets);
    Ok(facets)
}

/// Splits the facet list into rotation-group orbits and assigns each orbit a
/// structural label; nothing here depends on the printed facet lists.
fn label_orbit_groups(v: &VariantSet, facets: &mut [Facet]) {
    let table = compatibility_table(v);
    let vertex_sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
    let s4 = rotation_group();
    let r0 = inversion();

    let mut orbit_of: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for f in facets.iter() {
        let orbit: BTreeSet<Vec<usize>> =
            s4.elements().iter().map(|p| p.apply_set(&f.vertices)).collect();
        orbit_of.insert(f.vertices.clone(), orbit.into_iter().collect());
    }

    for f in facets.iter_mut() {
        let orbit = &orbit_of[&f.vertices];
        f.group = match f.vertices.len() {
            8 => FacetGroup::EightVertex,
            9 => FacetGroup::NineVertex,
            6 => {
                if has_triple_split(&f.vertices, |a, b| !table.are_compatible(a, b)) {
                    FacetGroup::T3Pair
                } else if has_triple_split(&f.vertices, |a, b| table.are_compatible(a, b)) {
                    FacetGroup::CompatibleTriplePair
                } else {
                    unreachable!("six-vertex facet splits into neither triple kind")
                }
            }
            5 => {
                let closed_under_inversion =
                    orbit.iter().all(|set| vertex_sets.contains(&r0.apply_set(set)));
                if closed_under_inversion {
                    FacetGroup::FiveVertexB
                } else {
                    FacetGroup::FiveVertex
                }
            }
            n => unreachable!("facet with unexpected vertex count {n}"),
        };
    }
}

/// Does the six-element set split into two disjoint triples with `pred`
/// holding inside both?
fn has_triple_split(six: &[usize], pred: impl Fn(usize, usize) -> bool) -> bool {
    debug_assert_eq!(six.len(), 6);
    let pairwise = |t: &[usize; 3]| {
        pred(t[0], t[1]) && pred(t[0], t[2]) && pred(t[1], t[2])
    };
    for b in 1..6 {
        for c in 1..6 {
            if c == b {
                continue;
            }
            let first = [six[0], six[b], six[c]];
            if b > c {
                continue;
            }
            let second: Vec<usize> =
                six.iter().copied().filter(|x| !first.contains(x)).collect();
            let second = [second[0], second[1], second[2]];
            if pairwise(&first) && pairwise(&second) {
                return true;
            }
        }
    }
    false
}

/// Result of a face-lattice query.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FaceQueryResult {
    pub input: Vec<usize>,
    /// Intersection of the vertex sets of all facets containing the input;
    /// the whole polytope (all twelve indices) when no facet contains it.
    pub smallest: Vec<usize>,
    pub is_vertex: bool,
    pub is_edge: bool,
}

pub fn smallest_face(indices: &[usize], facets: &[Facet]) -> FaceQueryResult {
    let mut input: Vec<usize> = indices.to_vec();
    input.sort_unstable();
    input.dedup();
    let mut smallest: Option<BTreeSet<usize>> = None;
    for f in facets {
        if input.iter().all(|&i| f.contains(i)) {
            let vs: BTreeSet<usize> = f.vertices.iter().copied().collect();
            smallest = Some(match smallest {
                None => vs,
                Some(acc) => acc.intersection(&vs).copied().collect(),
            });
        }
    }
    let smallest: Vec<usize> = match smallest {
        Some(s) => s.into_iter().collect(),
        None => (1..=12).collect(),
    };
    let is_vertex = input.len() == 1 && smallest == input;
    let is_edge = input.len() == 2 && smallest == input;
    FaceQueryResult { input, smallest, is_vertex, is_edge }
}

/// Number of facets containing each vertex pair.
pub fn edge_facet_counts(facets: &[Facet]) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for i in 1..=12 {
        for j in i + 1..=12 {
            let count = facets.iter().filter(|f| f.contains(i) && f.contains(j)).count();
            out.insert((i, j), count);
        }
    }
    out
}

/// Facet-group multiset containing a given pair.
pub fn pair_group_counts(facets: &[Facet], i: usize, j: usize) -> BTreeMap<FacetGroup, usize> {
    let mut out = BTreeMap::new();
    for f in facets {
        if f.contains(i) && f.contains(j) {
            *out.entry(f.group).or_insert(0) += 1;
        }
    }
    out
}

/// The lamination hull equals the convex hull exactly when every edge of the
/// polytope joins a compatible pair. Degenerate (all-compatible) parameters
/// short-circuit to `true` without facets.
pub fn lamination_equals_convex(
    v: &VariantSet,
    facets: Option<&[Facet]>,
) -> Result<bool, PolytopeError> {
    if v.params().all_compatible() {
        return Ok(true);
    }
    let facets = match facets {
        Some(f) => f,
        None => return Err(PolytopeError::DegenerateParams),
    };
    let table = compatibility_table(v);
    for (i, j) in table.incompatible_pairs() {
        if smallest_face(&[i, j], facets).is_edge {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two-point special case: the hull of a pair is laminated exactly
/// when the pair is compatible.
pub fn pair_lamination_equals_convex(
    a: &SymStrain<Rat>,
    b: &SymStrain<Rat>,
) -> Result<bool, crate::strain::StrainError> {
    if a == b {
        return Ok(true);
    }
    a.is_compatible(b)
}

/// Supporting-hyperplane soundness: every vertex weakly below, facet vertices
/// exactly on the plane, others strictly below.
pub fn facet_is_sound(v: &VariantSet, f: &Facet) -> bool {
    for j in 1..=12 {
        let val = f.normal.inner(v.strain(j));
        let on = f.contains(j);
        match val.cmp(&f.offset) {
            std::cmp::Ordering::Equal if on => {}
            std::cmp::Ordering::Less if !on => {}
            _ => return false,
        }
    }
    if affine_dim(&f.vertices.iter().map(|&i| v.strain(i).clone()).collect::<Vec<_>>()) != 4 {
        return false;
    }
    Sign::of(&f.normal.trace().clone()) == Sign::Zero
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::variants::{build_variants, builtin_registry, LatticeParams};

    fn niti() -> VariantSet {
        build_variants(builtin_registry().lookup("NiTi").unwrap())
    }

    fn ib_synthetic() -> VariantSet {
        build_variants(LatticeParams::parse("0.0243", "-0.0437", "0.04", "0.06").unwrap())
    }

    fn boundary_synthetic() -> VariantSet {
        build_variants(LatticeParams::parse("0.0243", "-0.0437", "0.05", "0.05").unwrap())
    }

    fn group_counts(facets: &[Facet]) -> BTreeMap<FacetGroup, usize> {
        let mut out = BTreeMap::new();
        for f in facets {
            *out.entry(f.group).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn affine_dimensions_of_named_subsets() {
        let v = niti();
        assert_eq!(affine_dim(v.strains()), 5);
        let subset: Vec<_> = [1, 2, 5, 6].iter().map(|&i| v.strain(i).clone()).collect();
        assert_eq!(affine_dim(&subset), 3);

        let b = boundary_synthetic();
        let subset: Vec<_> = [1, 5, 6].iter().map(|&i| b.strain(i).clone()).collect();
        assert_eq!(affine_dim(&subset), 2);

        let flat = build_variants(LatticeParams::parse("0.02", "0.02", "0.058", "0.0427").unwrap());
        assert_eq!(affine_dim(flat.strains()), 3);
    }

    #[test]
    fn niti_has_25_facets_in_four_groups() {
        let facets = enumerate_facets(&niti()).unwrap();
        assert_eq!(facets.len(), 25);
        let counts = group_counts(&facets);
        assert_eq!(counts[&FacetGroup::FiveVertex], 12);
        assert_eq!(counts[&FacetGroup::T3Pair], 4);
        assert_eq!(counts[&FacetGroup::CompatibleTriplePair], 6);
        assert_eq!(counts[&FacetGroup::EightVertex], 3);
        assert!(facets.iter().any(|f| f.vertices == vec![1, 2, 3, 7, 10]));
    }

    #[test]
    fn boundary_has_7_facets() {
        let facets = enumerate_facets(&boundary_synthetic()).unwrap();
        assert_eq!(facets.len(), 7);
        let counts = group_counts(&facets);
        assert_eq!(counts[&FacetGroup::NineVertex], 4);
        assert_eq!(counts[&FacetGroup::EightVertex], 3);
    }

    #[test]
    fn ib_has_33_facets() {
        let facets = enumerate_facets(&ib_synthetic()).unwrap();
        assert_eq!(facets.len(), 33);
        let counts = group_counts(&facets);
        assert_eq!(counts[&FacetGroup::FiveVertex], 12);
        assert_eq!(counts[&FacetGroup::FiveVertexB], 12);
        assert_eq!(counts[&FacetGroup::CompatibleTriplePair], 6);
        assert_eq!(counts[&FacetGroup::EightVertex], 3);
        assert!(!facets.iter().any(|f| f.vertices == vec![1, 2, 3, 7, 10]));
    }

    #[test]
    fn facets_are_sound_supporting_hyperplanes() {
        let v = niti();
        for f in enumerate_facets(&v).unwrap() {
            assert!(facet_is_sound(&v, &f), "unsound facet {:?}", f.vertices);
        }
    }

    #[test]
    fn flat_and_degenerate_are_refused() {
        let flat = build_variants(LatticeParams::parse("0.02", "0.02", "0.058", "0.0427").unwrap());
        assert_eq!(enumerate_facets(&flat), Err(PolytopeError::FlatPolytope(3)));
        let degenerate =
            build_variants(LatticeParams::new(ratio(3, 8), Rat::zero(), ratio(1, 2), ratio(1, 4)).unwrap());
        assert_eq!(enumerate_facets(&degenerate), Err(PolytopeError::DegenerateParams));
    }

    #[test]
    fn vertices_and_edges_via_smallest_face() {
        let v = niti();
        let facets = enumerate_facets(&v).unwrap();
        let q = smallest_face(&[1], &facets);
        assert!(q.is_vertex);
        assert_eq!(q.smallest, vec![1]);
        let q = smallest_face(&[1, 6], &facets);
        assert!(q.is_edge);
        let q = smallest_face(&[1, 2], &facets);
        assert!(q.is_edge);
        let q = smallest_face(&[1, 2, 3], &facets);
        assert_eq!(q.smallest, vec![1, 2, 3]);
        assert!(!q.is_edge && !q.is_vertex);
    }

    #[test]
    fn every_edge_lies_in_at_least_four_facets() {
        let v = niti();
        let facets = enumerate_facets(&v).unwrap();
        let counts = edge_facet_counts(&facets);
        assert!(counts.values().all(|&c| c >= 4));
        // each incompatible edge is in exactly one facet from each group
        let table = compatibility_table(&v);
        for (i, j) in table.incompatible_pairs() {
            let groups = pair_group_counts(&facets, i, j);
            assert!(groups.values().all(|&c| c == 1), "pair ({i},{j}): {groups:?}");
            assert_eq!(groups.len(), 4);
        }
    }

    #[test]
    fn facet_list_is_rotation_invariant() {
        let facets = enumerate_facets(&niti()).unwrap();
        let sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
        for p in rotation_group().elements() {
            let mapped: BTreeSet<Vec<usize>> =
                sets.iter().map(|s| p.apply_set(s)).collect();
            assert_eq!(mapped, sets);
        }
    }

    #[test]
    fn merge_fixpoint_holds() {
        // distinct facets never share a four-dimensional affine span
        let v = niti();
        let facets = enumerate_facets(&v).unwrap();
        for (a, fa) in facets.iter().enumerate() {
            for fb in &facets[a + 1..] {
                let union: BTreeSet<usize> =
                    fa.vertices.iter().chain(&fb.vertices).copied().collect();
                let pts: Vec<_> = union.iter().map(|&i| v.strain(i).clone()).collect();
                assert_eq!(affine_dim(&pts), 5);
            }
        }
    }

    #[test]
    fn lamination_vs_convex() {
        let v = niti();
        let facets = enumerate_facets(&v).unwrap();
        assert_eq!(lamination_equals_convex(&v, Some(&facets)), Ok(false));
        let degenerate =
            build_variants(LatticeParams::new(ratio(3, 8), Rat::zero(), ratio(1, 2), ratio(1, 4)).unwrap());
        assert_eq!(lamination_equals_convex(&degenerate, None), Ok(true));
        // two-point case: e1 and e2 are compatible
        assert_eq!(pair_lamination_equals_convex(v.strain(1), v.strain(2)), Ok(true));
    }

    #[test]
    fn eight_vertex_facets_appear_in_all_regimes() {
        let expected: Vec<Vec<usize>> = vec![
            vec![1, 2, 3, 4, 5, 6, 7, 8],
            vec![1, 2, 3, 4, 9, 10, 11, 12],
            vec![5, 6, 7, 8, 9, 10, 11, 12],
        ];
        for v in [niti(), boundary_synthetic(), ib_synthetic()] {
            let facets = enumerate_facets(&v).unwrap();
            for e in &expected {
                assert!(facets.iter().any(|f| &f.vertices == e));
            }
        }
    }
}
