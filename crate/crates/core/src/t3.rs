//! T3 configurations: detection, exact scaffold parameters and nodes, the
//! hull skeleton, the shifted three-parameter continuum, dual pairings,
//! level-2 constructions from nodes, and the five-dimensional witness set.

use crate::algebraic::{embed, relate_generators, Algebraic, AlgebraicError, ExtField};
use crate::interval::Interval;
use crate::poly::{Polynomial, VarSet};
use crate::rat::{rat_i64, ratio, Rat, Sign};
use crate::ring::Ring;
use crate::strain::{affine_dim, conjugate, StrainError, SymStrain};
use crate::symmetry::{inversion, matrix_for, rotation_group, Permutation};
use crate::unipoly::{RootError, UniPoly};
use crate::variants::{compatibility_table, symbolic_variants, VariantSet};
use num_traits::Zero;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum T3Error {
    #[error(transparent)]
    Strain(#[from] StrainError),
    #[error("the three strains do not form a T3")]
    NotT3,
    #[error("scaffold cubic has {0} roots in the unit interval, expected exactly one")]
    MultipleRootsInUnitInterval(usize),
    #[error("shift centre is incompatible with a vertex")]
    IncompatibleCenter,
    #[error("shift parameter must lie in [0,1)")]
    DegenerateLambda,
    #[error("determinant vanishes at the given barycentric point")]
    DegenerateT3,
    #[error("parameters are degenerate: all variants pairwise compatible")]
    DegenerateParams,
    #[error("scaffold parameters live in fields that do not embed into one another")]
    MixedLambdaFields,
    #[error("sample budget {budget} exhausted at affine dimension {reached}")]
    InsufficientSamples { budget: usize, reached: usize },
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Common sign of the three pairwise determinants of a T3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum DetSign {
    Positive,
    Negative,
}

impl DetSign {
    fn from_sign(s: Sign) -> Option<DetSign> {
        match s {
            Sign::Positive => Some(DetSign::Positive),
            Sign::Negative => Some(DetSign::Negative),
            Sign::Zero => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DetSign::Positive => "+",
            DetSign::Negative => "-",
        }
    }
}

fn common_sign(signs: [Sign; 3]) -> Option<DetSign> {
    let first = DetSign::from_sign(signs[0])?;
    if signs[1] == signs[0] && signs[2] == signs[0] {
        Some(first)
    } else {
        None
    }
}

/// The sign test: three equal-trace strains form a T3 exactly when their
/// pairwise determinants share one nonzero sign.
pub fn is_t3(
    e1: &SymStrain<Rat>,
    e2: &SymStrain<Rat>,
    e3: &SymStrain<Rat>,
) -> Result<Option<DetSign>, T3Error> {
    check_traces(&[e1, e2, e3])?;
    Ok(common_sign([
        Sign::of(&e1.sub(e2).det()),
        Sign::of(&e2.sub(e3).det()),
        Sign::of(&e3.sub(e1).det()),
    ]))
}

/// The same test with entries in an algebraic field.
pub fn is_t3_field(
    e1: &SymStrain<Algebraic>,
    e2: &SymStrain<Algebraic>,
    e3: &SymStrain<Algebraic>,
) -> Result<Option<DetSign>, T3Error> {
    let t12 = e1.trace().sub_ref(&e2.trace());
    let t23 = e2.trace().sub_ref(&e3.trace());
    if !t12.vanishes() || !t23.vanishes() {
        return Err(StrainError::TraceMismatch.into());
    }
    Ok(common_sign([
        e1.sub(e2).det().sign(),
        e2.sub(e3).det().sign(),
        e3.sub(e1).det().sign(),
    ]))
}

fn check_traces(strains: &[&SymStrain<Rat>]) -> Result<(), StrainError> {
    let t0 = strains[0].trace();
    if strains[1..].iter().any(|s| s.trace() != t0) {
        return Err(StrainError::TraceMismatch);
    }
    Ok(())
}

/// The eight pairwise-incompatible index triples, each verified by the sign
/// test; errors out on degenerate parameters.
pub fn enumerate_incompatible_triples(v: &VariantSet) -> Result<Vec<[usize; 3]>, T3Error> {
    if v.params().all_compatible() {
        return Err(T3Error::DegenerateParams);
    }
    let table = compatibility_table(v);
    let mut out = Vec::new();
    for a in 1..=12 {
        for b in a + 1..=12 {
            if table.are_compatible(a, b) {
                continue;
            }
            for c in b + 1..=12 {
                if table.are_compatible(a, c) || table.are_compatible(b, c) {
                    continue;
                }
                let sign = is_t3(v.strain(a), v.strain(b), v.strain(c))?;
                debug_assert!(sign.is_some(), "incompatible triple fails the sign test");
                out.push([a, b, c]);
            }
        }
    }
    Ok(out)
}

/// A solved T3: scaffold parameters, scaffold points, and (when the scaffold
/// parameters embed in one cubic field) the nodes.
#[derive(Debug, Clone)]
pub struct T3Record {
    pub vertices: [SymStrain<Rat>; 3],
    /// Variant indices when the vertices come from the variant set.
    pub indices: Option<[usize; 3]>,
    pub det_sign: DetSign,
    /// `(lambda_12, lambda_23, lambda_31)`, each the unique root in the open
    /// unit interval of its scaffold cubic.
    pub lambdas: [Algebraic; 3],
    pub lambda_cubics: [UniPoly; 3],
    /// Scaffold points `(e_{1,1}, e_{2,2}, e_{3,3})`, each in its own
    /// parameter's field.
    pub scaffold: [SymStrain<Algebraic>; 3],
    /// All three scaffold parameters are the same algebraic number.
    pub is_symmetric: bool,
    pub nodes: Option<T3Nodes>,
}

/// Node data in a single scalar field.
#[derive(Debug, Clone)]
pub struct T3Nodes {
    /// `None` when every coordinate is rational.
    pub field: Option<Arc<ExtField>>,
    /// `(e_{1,2}, e_{2,3}, e_{3,1})`.
    pub points: [SymStrain<Algebraic>; 3],
    /// Barycentric coordinates of each node with respect to the vertices.
    pub barycentric: [[Algebraic; 3]; 3],
}

/// The cubic `lambda -> det(lambda a + (1-lambda) b - c)`.
pub fn scaffold_cubic(
    a: &SymStrain<Rat>,
    b: &SymStrain<Rat>,
    c: &SymStrain<Rat>,
) -> UniPoly {
    let vars = VarSet::new(&["lam"]);
    let lam = Polynomial::var(&vars, 0);
    let one = Polynomial::constant(&vars, Rat::from_integer(1.into()));
    let one_minus = one.sub(&lam);
    let a_p = a.to_polynomial(&vars);
    let b_p = b.to_polynomial(&vars);
    let c_p = c.to_polynomial(&vars);
    let combo = a_p.scale(&lam).add(&b_p.scale(&one_minus)).sub(&c_p);
    combo.det().to_unipoly_in(0).expect("univariate by construction")
}

/// Unique root of the scaffold cubic strictly inside `(0,1)`.
fn unit_interval_root(cubic: &UniPoly) -> Result<Algebraic, T3Error> {
    let window = Interval::new(Rat::zero(), Rat::from_integer(1.into()));
    let roots = crate::unipoly::isolate_roots(cubic, &window)?;
    let interior: Vec<_> = roots
        .into_iter()
        .filter(|r| match &r.rational {
            Some(q) => !q.is_zero() && q != &Rat::from_integer(1.into()),
            None => true,
        })
        .collect();
    match interior.as_slice() {
        [only] => Ok(Algebraic::from_root(cubic, &only.interval)?),
        other => Err(T3Error::MultipleRootsInUnitInterval(other.len())),
    }
}

/// Solves a T3: isolates each scaffold parameter, builds the scaffold points,
/// and intersects the scaffold segments to obtain the nodes.
pub fn solve_t3(
    e1: &SymStrain<Rat>,
    e2: &SymStrain<Rat>,
    e3: &SymStrain<Rat>,
) -> Result<T3Record, T3Error> {
    let det_sign = is_t3(e1, e2, e3)?.ok_or(T3Error::NotT3)?;

    let q12 = scaffold_cubic(e1, e2, e3);
    let q23 = scaffold_cubic(e2, e3, e1);
    let q31 = scaffold_cubic(e3, e1, e2);
    // rotation-generated triples share one scaffold cubic; reuse its root so
    // the three parameters come out as the identical field element
    let l12 = unit_interval_root(&q12)?;
    let l23 = if q23 == q12 { l12.clone() } else { unit_interval_root(&q23)? };
    let l31 = if q31 == q12 {
        l12.clone()
    } else if q31 == q23 {
        l23.clone()
    } else {
        unit_interval_root(&q31)?
    };

    let is_symmetric = l12 == l23 && l23 == l31;

    let scaffold = [
        lerp_field(e2, e3, &l23), // e_{1,1} on (e2, e3)
        lerp_field(e3, e1, &l31), // e_{2,2} on (e3, e1)
        lerp_field(e1, e2, &l12), // e_{3,3} on (e1, e2)
    ];

    let lambdas = [l12, l23, l31];
    let nodes = compute_nodes(e1, e2, e3, &lambdas).ok();

    Ok(T3Record {
        vertices: [e1.clone(), e2.clone(), e3.clone()],
        indices: None,
        det_sign,
        lambdas,
        lambda_cubics: [q12, q23, q31],
        scaffold,
        is_symmetric,
        nodes,
    })
}

/// Solves the T3 on variant indices, recording them.
pub fn solve_t3_indices(v: &VariantSet, triple: [usize; 3]) -> Result<T3Record, T3Error> {
    let mut record = solve_t3(v.strain(triple[0]), v.strain(triple[1]), v.strain(triple[2]))?;
    record.indices = Some(triple);
    Ok(record)
}

fn lerp_field(a: &SymStrain<Rat>, b: &SymStrain<Rat>, t: &Algebraic) -> SymStrain<Algebraic> {
    a.to_algebraic().lerp(&b.to_algebraic(), t)
}

/// Rewrites the three scaffold parameters as elements of one field.
fn unify_lambdas(lambdas: &[Algebraic; 3]) -> Result<(Option<Arc<ExtField>>, [Algebraic; 3]), T3Error> {
    let base = lambdas.iter().find_map(|l| l.field()).cloned();
    let Some(base_field) = base else {
        return Ok((None, lambdas.clone()));
    };
    let mut unified = Vec::with_capacity(3);
    for l in lambdas {
        match l.field() {
            None => unified.push(l.clone()),
            Some(f) => {
                let rel = relate_generators(&base_field, f).ok_or(T3Error::MixedLambdaFields)?;
                unified.push(embed(l, &base_field, &rel));
            }
        }
    }
    Ok((Some(base_field), [unified[0].clone(), unified[1].clone(), unified[2].clone()]))
}

/// Node `e_{i,j}` as the intersection of two scaffold segments, solved in
/// barycentric coordinates over the common field. The two independent
/// coordinate equations are solved in closed form and the third is checked
/// exactly.
fn compute_nodes(
    e1: &SymStrain<Rat>,
    e2: &SymStrain<Rat>,
    e3: &SymStrain<Rat>,
    lambdas: &[Algebraic; 3],
) -> Result<T3Nodes, T3Error> {
    let (field, [l12, l23, l31]) = unify_lambdas(lambdas)?;
    let one = Algebraic::one;

    // bary(node on line_i meeting line_j), cyclically: the line from v1
    // through e_{1,1} = (0, l23, 1-l23), from v2 through (1-l31, 0, l31),
    // from v3 through (l12, 1-l12, 0)
    let node_bary = |la: &Algebraic, lb: &Algebraic| -> Result<[Algebraic; 3], T3Error> {
        // s = lb / (1 - la + la*lb), t = 1 - s*la, along the two lines
        let denom = one().try_sub(la)?.try_add(&la.try_mul(lb)?)?;
        let s = lb.try_mul(&denom.try_invert()?)?;
        let t = one().try_sub(&s.try_mul(la)?)?;
        let first = one().try_sub(&s)?;
        let second = s.try_mul(la)?;
        let third = s.try_mul(&one().try_sub(la)?)?;
        // consistency of the remaining coordinate equation
        let residual = third.try_sub(&t.try_mul(lb)?)?;
        if !residual.is_zero() {
            return Err(T3Error::NotT3);
        }
        Ok([first, second, third])
    };

    // node_{1,2}: lines from v1 (parameter l23) and v2 (parameter l31);
    // coordinates come out in the (v1, v2, v3) order of the first line
    let b12 = node_bary(&l23, &l31)?;
    let b23 = node_bary(&l31, &l12)?;
    let b31 = node_bary(&l12, &l23)?;

    // rotate each solution into the fixed (v1, v2, v3) coordinate order
    let bary12 = [b12[0].clone(), b12[1].clone(), b12[2].clone()];
    let bary23 = [b23[2].clone(), b23[0].clone(), b23[1].clone()];
    let bary31 = [b31[1].clone(), b31[2].clone(), b31[0].clone()];

    let verts = [e1.to_algebraic(), e2.to_algebraic(), e3.to_algebraic()];
    let point = |b: &[Algebraic; 3]| {
        verts[0]
            .scale(&b[0])
            .add(&verts[1].scale(&b[1]))
            .add(&verts[2].scale(&b[2]))
    };

    Ok(T3Nodes {
        field,
        points: [point(&bary12), point(&bary23), point(&bary31)],
        barycentric: [bary12, bary23, bary31],
    })
}

/// Per-claim certification of the node structure of a solved T3.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NodeChecks {
    pub nodes_pairwise_compatible: bool,
    pub nodes_compatible_with_their_vertices: bool,
    pub nodes_distinct: bool,
    pub barycentre_incompatible_with_vertices: bool,
}

impl NodeChecks {
    pub fn all_pass(&self) -> bool {
        self.nodes_pairwise_compatible
            && self.nodes_compatible_with_their_vertices
            && self.nodes_distinct
            && self.barycentre_incompatible_with_vertices
    }
}

pub fn t3_nodes_checks(record: &T3Record) -> Result<NodeChecks, T3Error> {
    let nodes = record.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;
    let [n12, n23, n31] = &nodes.points;
    let verts = record.vertices.clone().map(|v| v.to_algebraic());

    let compat = |a: &SymStrain<Algebraic>, b: &SymStrain<Algebraic>| a.sub(b).det().vanishes();
    let nodes_pairwise_compatible =
        compat(n12, n23) && compat(n23, n31) && compat(n31, n12);
    let nodes_compatible_with_their_vertices = compat(n12, &verts[0])
        && compat(n12, &verts[1])
        && compat(n23, &verts[1])
        && compat(n23, &verts[2])
        && compat(n31, &verts[2])
        && compat(n31, &verts[0]);
    let nodes_distinct = n12 != n23 && n23 != n31 && n31 != n12;

    let third = ratio(1, 3);
    let bary = record.vertices[0]
        .add(&record.vertices[1])
        .add(&record.vertices[2])
        .scale(&third);
    let barycentre_incompatible_with_vertices = record
        .vertices
        .iter()
        .all(|v| !bary.sub(v).det().is_zero());

    Ok(NodeChecks {
        nodes_pairwise_compatible,
        nodes_compatible_with_their_vertices,
        nodes_distinct,
        barycentre_incompatible_with_vertices,
    })
}

/// The hull skeleton: one segment per vertex, reaching the farther of the two
/// nodes on its scaffold segment, plus the node triangle.
#[derive(Debug, Clone)]
pub struct T3Skeleton {
    /// `(vertex position 0..3, node position 0..3)` per segment; node
    /// positions index `(e_{1,2}, e_{2,3}, e_{3,1})`.
    pub segments: [(usize, usize); 3],
    pub triangle: [SymStrain<Algebraic>; 3],
    pub orientation: DetSign,
}

pub fn t3_skeleton(record: &T3Record) -> Result<T3Skeleton, T3Error> {
    let nodes = record.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;
    // the two nodes on the segment from v_i are e_{i,i+1} and e_{i-1,i}; the
    // one with the smaller barycentric weight on v_i sits farther out
    let node_positions: [[usize; 2]; 3] = [[0, 2], [1, 0], [2, 1]];
    let mut segments = [(0usize, 0usize); 3];
    for vi in 0..3 {
        let [na, nb] = node_positions[vi];
        let wa = &nodes.barycentric[na][vi];
        let wb = &nodes.barycentric[nb][vi];
        let far = match wa.try_sub(wb)?.sign() {
            Sign::Negative => na,
            Sign::Positive => nb,
            Sign::Zero => return Err(T3Error::DegenerateT3),
        };
        segments[vi] = (vi, far);
    }
    // the far choices must form one cyclic family
    let reaches_next = segments.iter().all(|&(vi, n)| n == vi);
    let reaches_prev = segments.iter().all(|&(vi, n)| n == (vi + 2) % 3);
    if !(reaches_next || reaches_prev) {
        return Err(T3Error::NotT3);
    }
    Ok(T3Skeleton {
        segments,
        triangle: nodes.points.clone(),
        orientation: record.det_sign,
    })
}

/// Shift the T3 towards a centre compatible with all three vertices:
/// `e_i -> lam e0 + (1-lam) e_i`. The pairwise determinants scale exactly by
/// `(1-lam)^3`, which is asserted, and the shifted triple is re-solved.
pub fn continuum_t3(
    record: &T3Record,
    center: &SymStrain<Rat>,
    lam: &Rat,
) -> Result<T3Record, T3Error> {
    if lam < &Rat::zero() || lam >= &Rat::from_integer(1.into()) {
        return Err(T3Error::DegenerateLambda);
    }
    for v in &record.vertices {
        if !center.is_compatible(v)? {
            return Err(T3Error::IncompatibleCenter);
        }
    }
    let shifted: Vec<SymStrain<Rat>> =
        record.vertices.iter().map(|v| center.lerp(v, lam)).collect();
    let factor = {
        let f = Rat::from_integer(1.into()) - lam;
        &f * &f * &f
    };
    for (a, b) in [(0, 1), (1, 2), (2, 0)] {
        let before = record.vertices[a].sub(&record.vertices[b]).det();
        let after = shifted[a].sub(&shifted[b]).det();
        assert_eq!(after, &factor * &before, "determinant cube-scaling identity");
    }
    solve_t3(&shifted[0], &shifted[1], &shifted[2])
}

fn seven_var_universe() -> (VarSet, Vec<SymStrain<Polynomial>>, [Polynomial; 3]) {
    let vars = VarSet::new(&["x", "y", "z", "alpha", "beta", "delta", "epsilon"]);
    let strains = symbolic_variants(&vars, ["alpha", "beta", "delta", "epsilon"]);
    let x = Polynomial::var_named(&vars, "x");
    let y = Polynomial::var_named(&vars, "y");
    let z = Polynomial::var_named(&vars, "z");
    (vars, strains, [x, y, z])
}

fn symbolic_combo(
    strains: &[SymStrain<Polynomial>],
    indices: [usize; 3],
    coeffs: &[Polynomial; 3],
) -> SymStrain<Polynomial> {
    strains[indices[0] - 1]
        .scale(&coeffs[0])
        .add(&strains[indices[1] - 1].scale(&coeffs[1]))
        .add(&strains[indices[2] - 1].scale(&coeffs[2]))
}

/// Report of the dual-pair structure of a T3 and its inversion image.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DualPairReport {
    pub triple: [usize; 3],
    pub dual: [usize; 3],
    /// The cyclic coefficient alignment against the dual that vanishes
    /// identically, as image lists of the dual vertices.
    pub alignments: [[usize; 3]; 3],
    /// All three alignment determinants vanish in
    /// `(x, y, z, alpha, beta, delta, epsilon)`.
    pub identities_vanish: bool,
    /// The dual scaffold parameter lives in the same cubic field (checked).
    pub shared_field: bool,
    /// All fifteen node pairs across the two T3s are compatible.
    pub six_nodes_pairwise_compatible: bool,
    /// Exact affine dimension of the six-node hull.
    pub hull_dimension: usize,
    /// A 4x4 minor determinant was certified nonzero by interval refinement.
    pub interval_rank_certificate: bool,
}

/// Verifies the displayed determinant identities for a T3 and its dual and
/// certifies the six-node hull dimension.
pub fn dual_pair_identities(v: &VariantSet, triple: [usize; 3]) -> Result<DualPairReport, T3Error> {
    let r0 = inversion();
    let dual_images = [r0.apply(triple[0]), r0.apply(triple[1]), r0.apply(triple[2])];
    let mut dual_sorted = dual_images;
    dual_sorted.sort_unstable();

    // cyclic rotations of (r0 t1, r0 t3, r0 t2); the mirrored family is the
    // one the identities hold for
    let (_, strains, coeffs) = seven_var_universe();
    let base = symbolic_combo(&strains, triple, &coeffs);
    let mirrored = [dual_images[0], dual_images[2], dual_images[1]];
    let alignments = [
        mirrored,
        [mirrored[2], mirrored[0], mirrored[1]],
        [mirrored[1], mirrored[2], mirrored[0]],
    ];
    let identities_vanish = alignments
        .iter()
        .all(|&a| base.sub(&symbolic_combo(&strains, a, &coeffs)).det().is_zero());

    // solve both T3s and pull the dual nodes into the base field
    let rec = solve_t3_indices(v, triple)?;
    let dual_rec = solve_t3_indices(v, dual_sorted)?;
    let nodes = rec.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;
    let dual_nodes = dual_rec.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;

    let mut six: Vec<SymStrain<Algebraic>> = nodes.points.to_vec();
    let shared_field = match (&nodes.field, &dual_nodes.field) {
        (Some(f), Some(g)) => {
            let rel = relate_generators(f, g).ok_or(T3Error::MixedLambdaFields)?;
            for p in &dual_nodes.points {
                six.push(p.map(|c| embed(c, f, &rel)));
            }
            true
        }
        (None, None) => {
            six.extend(dual_nodes.points.iter().cloned());
            true
        }
        _ => return Err(T3Error::MixedLambdaFields),
    };

    let mut six_nodes_pairwise_compatible = true;
    for i in 0..6 {
        for j in i + 1..6 {
            if !six[i].sub(&six[j]).det().vanishes() {
                six_nodes_pairwise_compatible = false;
            }
        }
    }

    let hull_dimension = affine_dim(&six);
    let interval_rank_certificate = interval_rank_at_least(&six, 4);

    Ok(DualPairReport {
        triple,
        dual: dual_sorted,
        alignments,
        identities_vanish,
        shared_field,
        six_nodes_pairwise_compatible,
        hull_dimension,
        interval_rank_certificate,
    })
}

/// Certifies `affine dim >= target` by exhibiting a `target x target` minor
/// of the difference matrix whose determinant excludes zero under interval
/// refinement; independent of the exact elimination route.
fn interval_rank_at_least(points: &[SymStrain<Algebraic>], target: usize) -> bool {
    if points.len() <= target {
        return false;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Algebraic>> = points[1..]
        .iter()
        .map(|p| p.sub(base).entries().iter().map(|e| (*e).clone()).collect())
        .collect();
    let rows_all: Vec<usize> = (0..diffs.len()).collect();
    let cols: Vec<usize> = (0..6).collect();
    for row_subset in combinations(&rows_all, target) {
        for col_subset in combinations(&cols, target) {
            let det = minor_det(&diffs, &row_subset, &col_subset);
            // sign() refines the isolating interval until zero is excluded,
            // so a nonzero sign is exactly the interval certificate
            if !det.is_zero() && det.sign() != Sign::Zero {
                return true;
            }
        }
    }
    false
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn minor_det(rows: &[Vec<Algebraic>], ri: &[usize], ci: &[usize]) -> Algebraic {
    // Laplace expansion; minors here are at most 4x4
    if ri.len() == 1 {
        return rows[ri[0]][ci[0]].clone();
    }
    let mut acc = Algebraic::zero();
    let rest_rows = &ri[1..];
    for (pos, &c) in ci.iter().enumerate() {
        let sub_cols: Vec<usize> = ci.iter().copied().filter(|&x| x != c).collect();
        let minor = minor_det(rows, rest_rows, &sub_cols);
        let term = rows[ri[0]][c].mul_ref(&minor);
        acc = if pos % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
    }
    acc
}

/// The three incompatible triples adjacent to `tau` on the T3 cube: those
/// sharing exactly one variant index.
pub fn level2_neighbors(v: &VariantSet, tau: [usize; 3]) -> Result<Vec<[usize; 3]>, T3Error> {
    let triples = enumerate_incompatible_triples(v)?;
    let tau_set: std::collections::BTreeSet<usize> = tau.iter().copied().collect();
    Ok(triples
        .into_iter()
        .filter(|t| t.iter().filter(|i| tau_set.contains(i)).count() == 1)
        .collect())
}

/// The order-3 rotation fixing `tau` setwise (one of the two, chosen
/// deterministically as the lexicographically smaller image array).
pub fn level2_rotation(tau: [usize; 3]) -> Permutation {
    let tau_set: std::collections::BTreeSet<usize> = tau.iter().copied().collect();
    let mut candidates: Vec<&Permutation> = rotation_group()
        .elements()
        .iter()
        .filter(|p| {
            **p != Permutation::identity()
                && p.compose(p).compose(p) == Permutation::identity()
                && tau.iter().all(|&i| tau_set.contains(&p.apply(i)))
        })
        .collect();
    candidates.sort();
    (*candidates.first().expect("every triple has an order-3 stabiliser")).clone()
}

/// A level-2 T3 certificate at one barycentric point of a neighbour T3.
#[derive(Debug, Clone)]
pub struct Level2T3 {
    pub base: [usize; 3],
    pub neighbor: [usize; 3],
    pub rotation: Permutation,
    /// Vertex index lists: the neighbour and its two rotation images, in the
    /// coefficient order matching the barycentric input.
    pub vertex_indices: [[usize; 3]; 3],
    pub vertices: [SymStrain<Algebraic>; 3],
    pub common_det: Algebraic,
    pub det_sign: DetSign,
    pub barycentre_incompatible: bool,
}

/// Builds the triple `(n, r n, r^2 n)` at barycentric `(x, y, z)` on the
/// neighbour `tau_k`, certifying the determinant chain in the field and
/// rejecting points where it vanishes.
pub fn level2_t3_at(
    v: &VariantSet,
    tau: [usize; 3],
    neighbor: [usize; 3],
    bary: &[Algebraic; 3],
) -> Result<Level2T3, T3Error> {
    let sum = bary[0].try_add(&bary[1])?.try_add(&bary[2])?;
    if sum != Algebraic::one() {
        return Err(T3Error::DegenerateT3);
    }
    let r = level2_rotation(tau);
    let rr = r.compose(&r);
    let idx0 = neighbor;
    let idx1 = [r.apply(idx0[0]), r.apply(idx0[1]), r.apply(idx0[2])];
    let idx2 = [rr.apply(idx0[0]), rr.apply(idx0[1]), rr.apply(idx0[2])];

    let combo = |idx: [usize; 3]| -> SymStrain<Algebraic> {
        v.strain(idx[0])
            .to_algebraic()
            .scale(&bary[0])
            .add(&v.strain(idx[1]).to_algebraic().scale(&bary[1]))
            .add(&v.strain(idx[2]).to_algebraic().scale(&bary[2]))
    };
    let n0 = combo(idx0);
    let n1 = combo(idx1);
    let n2 = combo(idx2);

    // n1 - n2 = r(n0 - n1) and n2 - n0 = r^2(n0 - n1), so conjugation
    // invariance of det makes the chain equality automatic; one determinant
    // decides the triple
    let d01 = n0.sub(&n1).det();
    let det_sign = DetSign::from_sign(d01.sign()).ok_or(T3Error::DegenerateT3)?;

    // the centre is rotation-invariant, so n1 - centre and n2 - centre are
    // conjugates of n0 - centre and share its determinant
    let third = Algebraic::from_rational(ratio(1, 3));
    let centre = n0.add(&n1).add(&n2).scale(&third);
    let barycentre_incompatible = !n0.sub(&centre).det().vanishes();

    Ok(Level2T3 {
        base: tau,
        neighbor,
        rotation: r,
        vertex_indices: [idx0, idx1, idx2],
        vertices: [n0, n1, n2],
        common_det: d01,
        det_sign,
        barycentre_incompatible,
    })
}

/// The determinant-equality chain of the level-2 construction as a polynomial
/// identity in `(x, y, z, alpha, beta, delta, epsilon)`.
pub fn level2_identity_holds(tau: [usize; 3], neighbor: [usize; 3]) -> bool {
    let r = level2_rotation(tau);
    let rr = r.compose(&r);
    let idx1 = [r.apply(neighbor[0]), r.apply(neighbor[1]), r.apply(neighbor[2])];
    let idx2 = [rr.apply(neighbor[0]), rr.apply(neighbor[1]), rr.apply(neighbor[2])];
    let (_, strains, coeffs) = seven_var_universe();
    let n0 = symbolic_combo(&strains, neighbor, &coeffs);
    let n1 = symbolic_combo(&strains, idx1, &coeffs);
    let n2 = symbolic_combo(&strains, idx2, &coeffs);
    let d01 = n0.sub(&n1).det();
    let d12 = n1.sub(&n2).det();
    let d20 = n2.sub(&n0).det();
    d01.sub(&d12).is_zero() && d12.sub(&d20).is_zero()
}

/// All level-2 T3s at the nodes of the neighbour T3s: three per base triple,
/// 24 in total, certified in the scaffold field.
pub fn enumerate_level2(v: &VariantSet) -> Result<Vec<Level2T3>, T3Error> {
    let triples = enumerate_incompatible_triples(v)?;
    let mut out = Vec::new();
    for tau in triples {
        let neighbors = level2_neighbors(v, tau)?;
        let neighbor = neighbors[0];
        let rec = solve_t3_indices(v, neighbor)?;
        let nodes = rec.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;
        for bary in &nodes.barycentric {
            out.push(level2_t3_at(v, tau, neighbor, bary)?);
        }
    }
    Ok(out)
}

/// Low-discrepancy rational points on the 5-simplex: radical-inverse
/// coordinates sorted into spacings. The first six samples are the simplex
/// vertices.
pub fn simplex_samples(n: usize, seed: u64) -> Vec<[Rat; 6]> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if k < 6 {
            let mut mu = [(); 6].map(|_| Rat::zero());
            mu[k] = Rat::from_integer(1.into());
            out.push(mu);
            continue;
        }
        let index = (k - 6) as u64 + seed + 1;
        let mut coords: Vec<Rat> = [2u64, 3, 5, 7, 11]
            .iter()
            .map(|&b| radical_inverse(index, b))
            .collect();
        coords.sort();
        let mut mu = Vec::with_capacity(6);
        let mut prev = Rat::zero();
        for c in &coords {
            mu.push(c - &prev);
            prev = c.clone();
        }
        mu.push(Rat::from_integer(1.into()) - prev);
        out.push([
            mu[0].clone(),
            mu[1].clone(),
            mu[2].clone(),
            mu[3].clone(),
            mu[4].clone(),
            mu[5].clone(),
        ]);
    }
    out
}

fn radical_inverse(mut k: u64, base: u64) -> Rat {
    let mut num = Rat::zero();
    let mut scale = ratio(1, base as i64);
    while k > 0 {
        num += &scale * rat_i64((k % base) as i64);
        k /= base;
        scale = &scale * ratio(1, base as i64);
    }
    num
}

/// Witness report for the five-dimensional family of level-2 T3s.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FiveDimWitness {
    pub base: [usize; 3],
    pub neighbor: [usize; 3],
    pub samples: usize,
    pub all_samples_are_t3: bool,
    /// Affine dimension reached by the sampled T3 points.
    pub affine_dimension: usize,
    /// Sample/point positions of six affinely independent points.
    pub certificate_points: Vec<usize>,
    /// Under `epsilon <= delta`: the pair facet containing the construction.
    pub boundary_facet: Option<Vec<usize>>,
}

/// Samples points of the four-dimensional node hull of the neighbour T3 and
/// its dual, forms the rotation triple at each, certifies each triple as a
/// T3 in the field, and certifies the affine dimension of the union.
pub fn five_dim_witness(
    v: &VariantSet,
    tau: [usize; 3],
    budget: usize,
    seed: u64,
) -> Result<FiveDimWitness, T3Error> {
    let neighbors = level2_neighbors(v, tau)?;
    let neighbor = neighbors[0];
    let r0 = inversion();
    let mut dual = [r0.apply(neighbor[0]), r0.apply(neighbor[1]), r0.apply(neighbor[2])];
    dual.sort_unstable();

    let rec = solve_t3_indices(v, neighbor)?;
    let dual_rec = solve_t3_indices(v, dual)?;
    let nodes = rec.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;
    let dual_nodes = dual_rec.nodes.as_ref().ok_or(T3Error::MixedLambdaFields)?;

    let mut six: Vec<SymStrain<Algebraic>> = nodes.points.to_vec();
    match (&nodes.field, &dual_nodes.field) {
        (Some(f), Some(g)) => {
            let rel = relate_generators(f, g).ok_or(T3Error::MixedLambdaFields)?;
            for p in &dual_nodes.points {
                six.push(p.map(|c| embed(c, f, &rel)));
            }
        }
        (None, None) => six.extend(dual_nodes.points.iter().cloned()),
        _ => return Err(T3Error::MixedLambdaFields),
    }

    let r = level2_rotation(tau);
    let rot = matrix_for(&r).expect("rotation-group element has a matrix");

    let mut all_t3 = true;
    let mut base_point: Option<SymStrain<Algebraic>> = None;
    let mut echelon = crate::linalg::IncrementalBasis::new();
    let mut basis: Vec<usize> = Vec::new();
    let samples = simplex_samples(budget, seed);
    let mut position = 0usize;
    for mu in &samples {
        let mut p = six[0].scale(&Algebraic::from_rational(mu[0].clone()));
        for (i, m) in mu.iter().enumerate().skip(1) {
            p = p.add(&six[i].scale(&Algebraic::from_rational(m.clone())));
        }
        let p1 = conjugate(rot, &p);
        let p2 = conjugate(rot, &p1);
        // the other two pairwise differences are conjugates of p - p1, so
        // their determinants coincide; one exact sign decides the triple
        if p.sub(&p1).det().sign() == Sign::Zero {
            all_t3 = false;
        }
        for q in [p, p1, p2] {
            match &base_point {
                None => {
                    base_point = Some(q);
                    basis.push(position);
                }
                Some(base) => {
                    if basis.len() < 6 {
                        let diff = q.sub(base);
                        let row: Vec<Algebraic> =
                            diff.entries().iter().map(|e| (*e).clone()).collect();
                        if echelon.try_add(row) {
                            basis.push(position);
                        }
                    }
                }
            }
            position += 1;
        }
    }

    let affine_dimension = echelon.rank();
    if affine_dimension < 5 {
        return Err(T3Error::InsufficientSamples { budget, reached: affine_dimension });
    }

    let boundary_facet = if v.params().epsilon <= v.params().delta {
        let mut pair: Vec<usize> = neighbor.iter().chain(dual.iter()).copied().collect();
        pair.sort_unstable();
        match crate::polytope::enumerate_facets(v) {
            Ok(facets) => facets.iter().find(|f| f.vertices == pair).map(|f| f.vertices.clone()),
            Err(_) => None,
        }
    } else {
        None
    };

    Ok(FiveDimWitness {
        base: tau,
        neighbor,
        samples: samples.len(),
        all_samples_are_t3: all_t3,
        affine_dimension,
        certificate_points: basis,
        boundary_facet,
    })
}

/// Are all solved T3s similar: equal scaffold parameter multisets, allowing
/// the orientation reversal `lambda -> 1 - lambda`?
pub fn all_similar(records: &[T3Record]) -> bool {
    let Some(first) = records.first() else {
        return true;
    };
    let reference = &first.lambdas[0];
    let one_minus_ref = Algebraic::one().try_sub(reference).expect("field arithmetic");
    records.iter().all(|r| {
        r.lambdas
            .iter()
            .all(|l| l == reference || *l == one_minus_ref)
    })
}
