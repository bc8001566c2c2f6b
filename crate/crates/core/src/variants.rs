//! The twelve monoclinic-I transformation strains, their regime
//! classification, and the compatibility / distance / linear-functional
//! tables.

use crate::poly::{Polynomial, VarSet};
use crate::rat::{parse_rational, rat_i64, Rat};
use crate::strain::SymStrain;
use num_traits::Zero;
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VariantError {
    #[error("invalid lattice parameters: {0}")]
    InvalidParams(String),
    #[error("unknown material `{0}`")]
    UnknownMaterial(String),
    #[error("parameters are degenerate (all variants pairwise compatible)")]
    DegenerateParams,
}

/// Which side of the `epsilon = delta` divide the material sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Regime {
    /// `epsilon < delta` (all materials tabulated in the literature).
    Ia,
    /// `epsilon = delta`.
    Boundary,
    /// `epsilon > delta`.
    Ib,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Ia => "Ia",
            Regime::Boundary => "boundary",
            Regime::Ib => "Ib",
        }
    }
}

/// Exact lattice parameters; construction enforces the sign conventions
/// `epsilon > 0`, `delta > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeParams {
    pub alpha: Rat,
    pub beta: Rat,
    pub delta: Rat,
    pub epsilon: Rat,
}

impl LatticeParams {
    pub fn new(alpha: Rat, beta: Rat, delta: Rat, epsilon: Rat) -> Result<LatticeParams, VariantError> {
        if delta <= Rat::zero() {
            return Err(VariantError::InvalidParams("delta must be positive".into()));
        }
        if epsilon <= Rat::zero() {
            return Err(VariantError::InvalidParams("epsilon must be positive".into()));
        }
        Ok(LatticeParams { alpha, beta, delta, epsilon })
    }

    pub fn parse(alpha: &str, beta: &str, delta: &str, epsilon: &str) -> Result<LatticeParams, VariantError> {
        let p = |s: &str| parse_rational(s).map_err(|e| VariantError::InvalidParams(e.to_string()));
        LatticeParams::new(p(alpha)?, p(beta)?, p(delta)?, p(epsilon)?)
    }

    pub fn regime(&self) -> Regime {
        match self.epsilon.cmp(&self.delta) {
            std::cmp::Ordering::Less => Regime::Ia,
            std::cmp::Ordering::Equal => Regime::Boundary,
            std::cmp::Ordering::Greater => Regime::Ib,
        }
    }

    /// The degeneracy quantity `(alpha - beta) delta + epsilon^2 - delta^2`;
    /// its vanishing makes all twelve variants pairwise compatible.
    pub fn degeneracy(&self) -> Rat {
        (&self.alpha - &self.beta) * &self.delta + &self.epsilon * &self.epsilon
            - &self.delta * &self.delta
    }

    pub fn all_compatible(&self) -> bool {
        self.degeneracy().is_zero()
    }

    /// `alpha = beta` collapses the strain polytope to three dimensions.
    pub fn flat_polytope(&self) -> bool {
        self.alpha == self.beta
    }

    /// Generic in the sense the tables assume: neither degenerate nor flat.
    pub fn is_generic(&self) -> bool {
        !self.all_compatible() && !self.flat_polytope()
    }

    /// The pairwise determinant scale `4 epsilon ((alpha-beta) delta + epsilon^2 - delta^2)`.
    pub fn det_scale(&self) -> Rat {
        rat_i64(4) * &self.epsilon * self.degeneracy()
    }
}

/// Entry pattern of the twelve variants, shared by numeric and symbolic construction.
/// Codes: 0 = alpha, 1 = beta, 2 = delta, 3 = epsilon; signs multiply.
const VARIANT_PATTERN: [[(usize, i64); 6]; 12] = [
    [(0, 1), (0, 1), (1, 1), (2, 1), (3, 1), (3, 1)],
    [(0, 1), (0, 1), (1, 1), (2, 1), (3, -1), (3, -1)],
    [(0, 1), (0, 1), (1, 1), (2, -1), (3, -1), (3, 1)],
    [(0, 1), (0, 1), (1, 1), (2, -1), (3, 1), (3, -1)],
    [(0, 1), (1, 1), (0, 1), (3, 1), (2, 1), (3, 1)],
    [(0, 1), (1, 1), (0, 1), (3, -1), (2, 1), (3, -1)],
    [(0, 1), (1, 1), (0, 1), (3, -1), (2, -1), (3, 1)],
    [(0, 1), (1, 1), (0, 1), (3, 1), (2, -1), (3, -1)],
    [(1, 1), (0, 1), (0, 1), (3, 1), (3, 1), (2, 1)],
    [(1, 1), (0, 1), (0, 1), (3, -1), (3, -1), (2, 1)],
    [(1, 1), (0, 1), (0, 1), (3, -1), (3, 1), (2, -1)],
    [(1, 1), (0, 1), (0, 1), (3, 1), (3, -1), (2, -1)],
];

/// The twelve transformation strains for one material.
#[derive(Debug, Clone)]
pub struct VariantSet {
    params: LatticeParams,
    strains: Vec<SymStrain<Rat>>,
}

pub fn build_variants(params: LatticeParams) -> VariantSet {
    let values = [&params.alpha, &params.beta, &params.delta, &params.epsilon];
    let strains = VARIANT_PATTERN
        .iter()
        .map(|pat| {
            let entry = |k: usize| {
                let (which, sign) = pat[k];
                values[which] * rat_i64(sign)
            };
            SymStrain::from_entries([entry(0), entry(1), entry(2), entry(3), entry(4), entry(5)])
        })
        .collect();
    VariantSet { params, strains }
}

impl VariantSet {
    pub fn params(&self) -> &LatticeParams {
        &self.params
    }

    /// Variant `i`, 1-based as in the tables.
    pub fn strain(&self, i: usize) -> &SymStrain<Rat> {
        &self.strains[i - 1]
    }

    pub fn strains(&self) -> &[SymStrain<Rat>] {
        &self.strains
    }

    /// `det(e_j - e_i)`, exact.
    pub fn pair_det(&self, j: usize, i: usize) -> Rat {
        self.strain(j).sub(self.strain(i)).det()
    }
}

/// The same twelve strains with symbolic entries drawn from `vars`;
/// `names` gives the variable names bound to alpha, beta, delta, epsilon.
pub fn symbolic_variants(vars: &VarSet, names: [&str; 4]) -> Vec<SymStrain<Polynomial>> {
    let values: Vec<Polynomial> = names.iter().map(|n| Polynomial::var_named(vars, n)).collect();
    VARIANT_PATTERN
        .iter()
        .map(|pat| {
            let entry = |k: usize| {
                let (which, sign) = pat[k];
                let v = values[which].clone();
                if sign < 0 {
                    v.neg()
                } else {
                    v
                }
            };
            SymStrain::from_entries([entry(0), entry(1), entry(2), entry(3), entry(4), entry(5)])
        })
        .collect()
}

/// Per-variant partition of the other eleven by the sign of
/// `det(e_j - e_i)` relative to the determinant scale.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CompatRow {
    pub index: usize,
    /// `det = 0`: compatible partners.
    pub zero: Vec<usize>,
    /// `det = +4 eps ((a-b)d + e^2 - d^2)`.
    pub plus: Vec<usize>,
    /// `det = -4 eps ((a-b)d + e^2 - d^2)`.
    pub minus: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CompatibilityTable {
    pub rows: Vec<CompatRow>,
    /// All pairs compatible; `plus`/`minus` are then empty.
    pub degenerate: bool,
}

pub fn compatibility_table(v: &VariantSet) -> CompatibilityTable {
    let scale = v.params.det_scale();
    let degenerate = scale.is_zero();
    let mut rows = Vec::with_capacity(12);
    for i in 1..=12 {
        let mut row = CompatRow { index: i, zero: vec![], plus: vec![], minus: vec![] };
        for j in 1..=12 {
            if i == j {
                continue;
            }
            let det = v.pair_det(j, i);
            if det.is_zero() {
                row.zero.push(j);
            } else if det == scale {
                row.plus.push(j);
            } else if det == -scale.clone() {
                row.minus.push(j);
            } else {
                unreachable!("pairwise determinant outside {{0, +-scale}}");
            }
        }
        rows.push(row);
    }
    CompatibilityTable { rows, degenerate }
}

impl CompatibilityTable {
    pub fn row(&self, i: usize) -> &CompatRow {
        &self.rows[i - 1]
    }

    pub fn are_compatible(&self, i: usize, j: usize) -> bool {
        i == j || self.row(i).zero.contains(&j)
    }

    pub fn compatible_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for i in 1..=12 {
            for &j in &self.row(i).zero {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn incompatible_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for i in 1..=12 {
            for j in i + 1..=12 {
                if !self.are_compatible(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The five exact squared-distance classes between distinct variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum DistanceClass {
    /// `16 eps^2` (the r0-partner).
    SixteenEpsSq,
    /// `8 (delta^2 + eps^2)` (parallel cube edges sharing a face).
    EightDeltaEpsSq,
    /// `2 (alpha-beta)^2 + 4 (delta-eps)^2`.
    MixedMinus,
    /// `2 (alpha-beta)^2 + 4 (delta+eps)^2`.
    MixedPlus,
    /// `2 (alpha-beta)^2 + 4 delta^2 + 12 eps^2`; all incompatible pairs.
    Incompatible,
}

impl DistanceClass {
    pub fn label(self) -> &'static str {
        match self {
            DistanceClass::SixteenEpsSq => "16e^2",
            DistanceClass::EightDeltaEpsSq => "8(d^2+e^2)",
            DistanceClass::MixedMinus => "2(a-b)^2+4(d-e)^2",
            DistanceClass::MixedPlus => "2(a-b)^2+4(d+e)^2",
            DistanceClass::Incompatible => "2(a-b)^2+4d^2+12e^2",
        }
    }

    /// The class value as a polynomial in (alpha, beta, delta, epsilon).
    pub fn polynomial(self, vars: &VarSet, names: [&str; 4]) -> Polynomial {
        let [a, b, d, e] = names.map(|n| Polynomial::var_named(vars, n));
        let c = |k: i64| Polynomial::constant(vars, rat_i64(k));
        let sq = |p: &Polynomial| p.mul(p);
        let ab = a.sub(&b);
        match self {
            DistanceClass::SixteenEpsSq => sq(&e).scale(&rat_i64(16)),
            DistanceClass::EightDeltaEpsSq => sq(&d).add(&sq(&e)).scale(&rat_i64(8)),
            DistanceClass::MixedMinus => {
                sq(&ab).scale(&rat_i64(2)).add(&sq(&d.sub(&e)).scale(&rat_i64(4)))
            }
            DistanceClass::MixedPlus => {
                sq(&ab).scale(&rat_i64(2)).add(&sq(&d.add(&e)).scale(&rat_i64(4)))
            }
            DistanceClass::Incompatible => sq(&ab)
                .scale(&rat_i64(2))
                .add(&sq(&d).scale(&rat_i64(4)))
                .add(&sq(&e).scale(&rat_i64(12)))
                .mul(&c(1)),
        }
    }

    /// Exact numeric value of the class for the given parameters.
    pub fn value(self, p: &LatticeParams) -> Rat {
        let two = rat_i64(2);
        let four = rat_i64(4);
        let ab = &p.alpha - &p.beta;
        match self {
            DistanceClass::SixteenEpsSq => rat_i64(16) * &p.epsilon * &p.epsilon,
            DistanceClass::EightDeltaEpsSq => {
                rat_i64(8) * (&p.delta * &p.delta + &p.epsilon * &p.epsilon)
            }
            DistanceClass::MixedMinus => {
                let dm = &p.delta - &p.epsilon;
                &two * &ab * &ab + &four * &dm * &dm
            }
            DistanceClass::MixedPlus => {
                let dp = &p.delta + &p.epsilon;
                &two * &ab * &ab + &four * &dp * &dp
            }
            DistanceClass::Incompatible => {
                &two * &ab * &ab + &four * &p.delta * &p.delta
                    + rat_i64(12) * &p.epsilon * &p.epsilon
            }
        }
    }

    pub const ALL: [DistanceClass; 5] = [
        DistanceClass::SixteenEpsSq,
        DistanceClass::EightDeltaEpsSq,
        DistanceClass::MixedMinus,
        DistanceClass::MixedPlus,
        DistanceClass::Incompatible,
    ];
}

/// Classifies every unordered pair by matching its squared distance as a
/// polynomial identity in the lattice parameters, so classes stay separated
/// even at parameter values where their numeric values collide.
pub fn distance_table() -> BTreeMap<(usize, usize), DistanceClass> {
    static TABLE: OnceLock<BTreeMap<(usize, usize), DistanceClass>> = OnceLock::new();
    TABLE
        .get_or_init(|| {
            let vars = VarSet::new(&["alpha", "beta", "delta", "epsilon"]);
            let names = ["alpha", "beta", "delta", "epsilon"];
            let strains = symbolic_variants(&vars, names);
            let classes: Vec<(DistanceClass, Polynomial)> = DistanceClass::ALL
                .iter()
                .map(|&c| (c, c.polynomial(&vars, names)))
                .collect();
            let mut out = BTreeMap::new();
            for i in 1..=12 {
                for j in i + 1..=12 {
                    let n2 = strains[i - 1].sub(&strains[j - 1]).norm_sq();
                    let class = classes
                        .iter()
                        .find(|(_, p)| n2.sub(p).is_zero())
                        .map(|(c, _)| *c)
                        .expect("squared distance outside the five classes");
                    out.insert((i, j), class);
                }
            }
            out
        })
        .clone()
}

/// A linear functional on strain entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctional {
    pub name: String,
    /// Coefficients on `(e11, e22, e33, e12, e13, e23)`.
    pub coeffs: [Rat; 6],
}

impl LinearFunctional {
    pub fn apply(&self, e: &SymStrain<Rat>) -> Rat {
        self.coeffs
            .iter()
            .zip(e.entries())
            .map(|(c, v)| c * v)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    fn named(name: &str, coeffs: [i64; 6]) -> LinearFunctional {
        LinearFunctional { name: name.to_string(), coeffs: coeffs.map(rat_i64) }
    }

    /// `H0 e = -e12 - e23 - e31` and its rotations `Hi = H0 . ri`.
    pub fn h(i: usize) -> LinearFunctional {
        match i {
            0 => Self::named("H0", [0, 0, 0, -1, -1, -1]),
            1 => Self::named("H1", [0, 0, 0, -1, 1, 1]),
            2 => Self::named("H2", [0, 0, 0, 1, 1, -1]),
            3 => Self::named("H3", [0, 0, 0, 1, -1, 1]),
            _ => panic!("H index out of range"),
        }
    }

    /// Coordinate functional `H_ij e = e_ij`.
    pub fn entry(i: usize, j: usize) -> LinearFunctional {
        let name = format!("H{}{}", i, j);
        let slot = match (i, j) {
            (1, 1) => 0,
            (2, 2) => 1,
            (3, 3) => 2,
            (1, 2) | (2, 1) => 3,
            (1, 3) | (3, 1) => 4,
            (2, 3) | (3, 2) => 5,
            _ => panic!("entry functional index out of range"),
        };
        let mut coeffs = [0i64; 6];
        coeffs[slot] = 1;
        LinearFunctional { name, coeffs: coeffs.map(rat_i64) }
    }
}

/// Index sets of the exact minimisers and maximisers of `i -> H e_i`.
pub fn functional_extremisers(
    v: &VariantSet,
    h: &LinearFunctional,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let values: Vec<Rat> = (1..=12).map(|i| h.apply(v.strain(i))).collect();
    let min = values.iter().min().unwrap().clone();
    let max = values.iter().max().unwrap().clone();
    let minimisers = (1..=12).filter(|&i| values[i - 1] == min).collect();
    let maximisers = (1..=12).filter(|&i| values[i - 1] == max).collect();
    (minimisers, maximisers)
}

#[derive(Debug, Deserialize)]
struct RegistryFile {
    version: u32,
    materials: Vec<MaterialEntry>,
}

#[derive(Debug, Deserialize)]
struct MaterialEntry {
    name: String,
    alpha: String,
    beta: String,
    delta: String,
    epsilon: String,
}

/// The shipped material registry (literature lattice parameters, exact decimals).
#[derive(Debug, Clone)]
pub struct MaterialsRegistry {
    pub version: u32,
    entries: BTreeMap<String, LatticeParams>,
}

impl MaterialsRegistry {
    pub fn from_json(text: &str) -> Result<MaterialsRegistry, VariantError> {
        let file: RegistryFile = serde_json::from_str(text)
            .map_err(|e| VariantError::InvalidParams(format!("registry parse error: {e}")))?;
        let mut entries = BTreeMap::new();
        for m in file.materials {
            let params = LatticeParams::parse(&m.alpha, &m.beta, &m.delta, &m.epsilon)?;
            entries.insert(m.name, params);
        }
        Ok(MaterialsRegistry { version: file.version, entries })
    }

    pub fn lookup(&self, name: &str) -> Result<LatticeParams, VariantError> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| VariantError::UnknownMaterial(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|s| s.as_str())
    }
}

pub fn builtin_registry() -> &'static MaterialsRegistry {
    static REGISTRY: OnceLock<MaterialsRegistry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        MaterialsRegistry::from_json(include_str!("../data/materials.json"))
            .expect("shipped registry is valid")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn niti() -> VariantSet {
        build_variants(builtin_registry().lookup("NiTi").unwrap())
    }

    #[test]
    fn first_variant_matches_table_entry() {
        let vars = VarSet::new(&["alpha", "beta", "delta", "epsilon"]);
        let s = symbolic_variants(&vars, ["alpha", "beta", "delta", "epsilon"]);
        let a = Polynomial::var_named(&vars, "alpha");
        let b = Polynomial::var_named(&vars, "beta");
        let d = Polynomial::var_named(&vars, "delta");
        let e = Polynomial::var_named(&vars, "epsilon");
        assert_eq!(s[0].e11, a);
        assert_eq!(s[0].e22, a);
        assert_eq!(s[0].e33, b);
        assert_eq!(s[0].e12, d);
        assert_eq!(s[0].e13, e);
        assert_eq!(s[0].e23, e);
    }

    #[test]
    fn every_trace_is_two_alpha_plus_beta() {
        let vars = VarSet::new(&["alpha", "beta", "delta", "epsilon"]);
        let s = symbolic_variants(&vars, ["alpha", "beta", "delta", "epsilon"]);
        let a = Polynomial::var_named(&vars, "alpha");
        let b = Polynomial::var_named(&vars, "beta");
        let expected = a.scale(&rat_i64(2)).add(&b);
        for e in &s {
            assert!(e.trace().sub(&expected).is_zero());
        }
    }

    #[test]
    fn niti_is_regime_ia() {
        let v = niti();
        assert_eq!(v.params().regime(), Regime::Ia);
        assert!(v.params().is_generic());
        assert_eq!(v.params().alpha, ratio(243, 10000));
    }

    #[test]
    fn rejects_nonpositive_shears() {
        assert!(LatticeParams::parse("0.1", "0.0", "0", "0.1").is_err());
        assert!(LatticeParams::parse("0.1", "0.0", "0.1", "-0.2").is_err());
    }

    #[test]
    fn table3_row_one() {
        let t = compatibility_table(&niti());
        let row = t.row(1);
        assert_eq!(row.zero, vec![2, 3, 4, 5, 7, 9, 11]);
        assert_eq!(row.plus, vec![8, 12]);
        assert_eq!(row.minus, vec![6, 10]);
        assert!(!t.degenerate);
    }

    #[test]
    fn degenerate_params_make_all_pairs_compatible() {
        // (alpha-beta) delta + eps^2 - delta^2 = 0 with delta=1/2, eps=1/4
        let p = LatticeParams::new(ratio(3, 8), Rat::zero(), ratio(1, 2), ratio(1, 4)).unwrap();
        assert!(p.all_compatible());
        let t = compatibility_table(&build_variants(p));
        assert!(t.degenerate);
        for row in &t.rows {
            assert_eq!(row.zero.len(), 11);
            assert!(row.plus.is_empty() && row.minus.is_empty());
        }
    }

    #[test]
    fn distance_classes_row_one() {
        let table = distance_table();
        assert_eq!(table[&(1, 2)], DistanceClass::SixteenEpsSq);
        assert_eq!(table[&(1, 3)], DistanceClass::EightDeltaEpsSq);
        assert_eq!(table[&(1, 4)], DistanceClass::EightDeltaEpsSq);
        assert_eq!(table[&(1, 5)], DistanceClass::MixedMinus);
        assert_eq!(table[&(1, 7)], DistanceClass::MixedPlus);
        assert_eq!(table[&(1, 6)], DistanceClass::Incompatible);
    }

    #[test]
    fn each_variant_has_four_incompatible_partners() {
        let t = compatibility_table(&niti());
        for row in &t.rows {
            assert_eq!(row.plus.len() + row.minus.len(), 4);
        }
    }

    #[test]
    fn h0_extremisers_by_regime() {
        let (min, max) = functional_extremisers(&niti(), &LinearFunctional::h(0));
        assert_eq!(min, BTreeSet::from([1, 5, 9]));
        assert_eq!(max, BTreeSet::from([3, 4, 7, 8, 11, 12]));

        let ib = build_variants(
            LatticeParams::parse("0.0243", "-0.0437", "0.04", "0.06").unwrap(),
        );
        let (min, max) = functional_extremisers(&ib, &LinearFunctional::h(0));
        assert_eq!(min, BTreeSet::from([1, 5, 9]));
        assert_eq!(max, BTreeSet::from([2, 6, 10]));
    }

    #[test]
    fn boundary_extremisers_are_the_union_of_both_regimes() {
        let ia = niti();
        let ib = build_variants(
            LatticeParams::parse("0.0243", "-0.0437", "0.04", "0.06").unwrap(),
        );
        let boundary = build_variants(
            LatticeParams::parse("0.0243", "-0.0437", "0.05", "0.05").unwrap(),
        );
        for i in 0..=3 {
            let h = LinearFunctional::h(i);
            let (min_ia, max_ia) = functional_extremisers(&ia, &h);
            let (min_ib, max_ib) = functional_extremisers(&ib, &h);
            let (min_b, max_b) = functional_extremisers(&boundary, &h);
            assert_eq!(min_b, min_ia.union(&min_ib).copied().collect());
            assert_eq!(max_b, max_ia.union(&max_ib).copied().collect());
        }
    }

    #[test]
    fn corner_functionals_compose_with_rotations() {
        // H_i e = H_0 (r_i e) for i = 1, 2, 3
        let v = niti();
        for i in 1..=3usize {
            let hi = LinearFunctional::h(i);
            let h0 = LinearFunctional::h(0);
            for j in 1..=12 {
                let rotated = crate::symmetry::rotation_action(i, v.strain(j));
                assert_eq!(hi.apply(v.strain(j)), h0.apply(&rotated), "H{i} at variant {j}");
            }
        }
        // H_ij picks out the matching entry
        let e = v.strain(5);
        assert_eq!(LinearFunctional::entry(1, 2).apply(e), e.e12);
        assert_eq!(LinearFunctional::entry(3, 3).apply(e), e.e33);
    }

    #[test]
    fn registry_ships_three_materials() {
        let reg = builtin_registry();
        assert_eq!(reg.version, 1);
        let names: Vec<&str> = reg.names().collect();
        assert_eq!(names, vec!["CuZr", "NiTi", "TiNiCu"]);
        assert!(matches!(reg.lookup("XYZ"), Err(VariantError::UnknownMaterial(_))));
        let cuzr = reg.lookup("CuZr").unwrap();
        assert_eq!(cuzr.epsilon, ratio(929, 10000));
        assert_eq!(cuzr.regime(), Regime::Ia);
    }
}
