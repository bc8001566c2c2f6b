//! Real algebraic numbers presented by a defining cubic (or quadratic) with an
//! isolating interval, plus exact field arithmetic in the quotient ring.
//!
//! Construction always attempts rational-root extraction first, so a stored
//! extension field has an irreducible defining polynomial: squarefree, degree
//! two or three, and free of rational roots (a reducible polynomial of degree
//! <= 3 over Q has a rational root). This makes `is_zero` a plain reduced-
//! representation test and keeps sign decisions terminating.

use crate::interval::Interval;
use crate::rat::{rat_i64, Rat, Sign};
use crate::unipoly::{isolate_roots, refine_root, IsolatedRoot, RootError, UniPoly};
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraicError {
    #[error("operands live in different extension fields")]
    MixedField,
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("interval isolates no root ({0} roots found)")]
    NotIsolating(usize),
}

/// A real cubic (or quadratic) extension field Q(theta), with theta pinned by
/// an isolating interval. Refinements are cached so repeated sign decisions
/// continue bisecting where the last one stopped.
#[derive(Debug)]
pub struct ExtField {
    /// Primitive integer form, irreducible over Q, degree 2 or 3.
    defining: UniPoly,
    /// Isolating interval for theta; endpoints are never roots.
    isolating: Interval,
    refined: std::sync::Mutex<Interval>,
}

impl Clone for ExtField {
    fn clone(&self) -> Self {
        let current = self.refined.lock().unwrap().clone();
        ExtField {
            defining: self.defining.clone(),
            isolating: self.isolating.clone(),
            refined: std::sync::Mutex::new(current),
        }
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.defining == other.defining && self.isolating == other.isolating
    }
}

impl Eq for ExtField {}

impl ExtField {
    fn new(defining: UniPoly, isolating: Interval) -> ExtField {
        let refined = std::sync::Mutex::new(isolating.clone());
        ExtField { defining, isolating, refined }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn isolating(&self) -> &Interval {
        &self.isolating
    }

    pub fn degree(&self) -> usize {
        self.defining.degree().unwrap()
    }

    /// Isolating interval refined to at most `width`, continuing from the
    /// best refinement seen so far.
    pub fn refined(&self, width: &Rat) -> Interval {
        let mut cached = self.refined.lock().unwrap();
        if &cached.width() > width {
            *cached = refine_root(&self.defining, &cached, width);
        }
        cached.clone()
    }
}

/// Do two (defining, interval) pairs pin the same real root? The polynomials
/// must already be in primitive integer form, squarefree and free of rational
/// roots, so the interval endpoints are never roots.
fn same_root(p: &UniPoly, i1: &Interval, q: &UniPoly, i2: &Interval) -> bool {
    if p != q {
        // irreducible and distinct => coprime => no shared root
        return false;
    }
    let mut a = i1.clone();
    let mut b = i2.clone();
    loop {
        match a.intersect(&b) {
            None => return false,
            Some(_) => {
                let hull = a.hull(&b);
                if crate::unipoly::count_roots_squarefree(p, &hull) == 1 {
                    return true;
                }
            }
        }
        let half_a = a.width() / rat_i64(2);
        let half_b = b.width() / rat_i64(2);
        a = refine_root(p, &a, &half_a);
        b = refine_root(q, &b, &half_b);
    }
}

/// An exact real algebraic number: either rational, or an element of a cubic
/// or quadratic extension field represented by a residue polynomial.
#[derive(Debug, Clone)]
pub enum Algebraic {
    Rational(Rat),
    Ext {
        field: Arc<ExtField>,
        /// Residue of degree < deg(defining); nonconstant (constants degrade
        /// to `Rational`).
        rep: UniPoly,
    },
}

impl Algebraic {
    pub fn from_rational(r: Rat) -> Algebraic {
        Algebraic::Rational(r)
    }

    pub fn from_i64(n: i64) -> Algebraic {
        Algebraic::Rational(rat_i64(n))
    }

    pub fn zero() -> Algebraic {
        Algebraic::Rational(Rat::zero())
    }

    pub fn one() -> Algebraic {
        Algebraic::Rational(Rat::one())
    }

    /// The root of `p` isolated by `interval`. Degrades to a rational scalar
    /// when that root is rational (rational-root extraction runs first).
    pub fn from_root(p: &UniPoly, interval: &Interval) -> Result<Algebraic, AlgebraicError> {
        let roots = isolate_roots(p, interval)?;
        let only: &IsolatedRoot = match roots.as_slice() {
            [r] => r,
            other => return Err(AlgebraicError::NotIsolating(other.len())),
        };
        if let Some(r) = &only.rational {
            return Ok(Algebraic::Rational(r.clone()));
        }
        let (_, irrational_part) = crate::unipoly::extract_rational_roots(p);
        let defining = irrational_part.primitive_integer();
        debug_assert!(matches!(defining.degree(), Some(2) | Some(3)));
        let field = Arc::new(ExtField::new(defining, only.interval.clone()));
        Ok(Algebraic::generator(field))
    }

    /// theta itself as a field element.
    pub fn generator(field: Arc<ExtField>) -> Algebraic {
        Algebraic::Ext { field, rep: UniPoly::var() }
    }

    pub fn field(&self) -> Option<&Arc<ExtField>> {
        match self {
            Algebraic::Rational(_) => None,
            Algebraic::Ext { field, .. } => Some(field),
        }
    }

    pub fn rep(&self) -> Option<&UniPoly> {
        match self {
            Algebraic::Rational(_) => None,
            Algebraic::Ext { rep, .. } => Some(rep),
        }
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            Algebraic::Rational(r) => Some(r),
            Algebraic::Ext { .. } => None,
        }
    }

    /// Builds `rep(theta)` in the given field, degrading constants.
    pub fn from_rep(field: &Arc<ExtField>, rep: UniPoly) -> Algebraic {
        let (_, reduced) = rep.div_rem(&field.defining);
        if reduced.is_constant() {
            Algebraic::Rational(reduced.coeff(0))
        } else {
            Algebraic::Ext { field: field.clone(), rep: reduced }
        }
    }

    fn fields_match(a: &Arc<ExtField>, b: &Arc<ExtField>) -> bool {
        Arc::ptr_eq(a, b)
            || same_root(&a.defining, &a.isolating, &b.defining, &b.isolating)
    }

    pub fn try_add(&self, other: &Algebraic) -> Result<Algebraic, AlgebraicError> {
        self.combine(other, |a, b| a.add(b))
    }

    pub fn try_sub(&self, other: &Algebraic) -> Result<Algebraic, AlgebraicError> {
        self.combine(other, |a, b| a.sub(b))
    }

    pub fn try_mul(&self, other: &Algebraic) -> Result<Algebraic, AlgebraicError> {
        match (self, other) {
            (Algebraic::Rational(a), Algebraic::Rational(b)) => Ok(Algebraic::Rational(a * b)),
            (Algebraic::Rational(a), Algebraic::Ext { field, rep }) |
            (Algebraic::Ext { field, rep }, Algebraic::Rational(a)) => {
                Ok(Algebraic::from_rep(field, rep.scale(a)))
            }
            (Algebraic::Ext { field: fa, rep: ra }, Algebraic::Ext { field: fb, rep: rb }) => {
                if !Self::fields_match(fa, fb) {
                    return Err(AlgebraicError::MixedField);
                }
                Ok(Algebraic::from_rep(fa, ra.mul(rb)))
            }
        }
    }

    fn combine(
        &self,
        other: &Algebraic,
        op: impl Fn(&UniPoly, &UniPoly) -> UniPoly,
    ) -> Result<Algebraic, AlgebraicError> {
        match (self, other) {
            (Algebraic::Rational(a), Algebraic::Rational(b)) => {
                let res = op(&UniPoly::constant(a.clone()), &UniPoly::constant(b.clone()));
                Ok(Algebraic::Rational(res.coeff(0)))
            }
            (Algebraic::Rational(a), Algebraic::Ext { field, rep }) => {
                Ok(Algebraic::from_rep(field, op(&UniPoly::constant(a.clone()), rep)))
            }
            (Algebraic::Ext { field, rep }, Algebraic::Rational(b)) => {
                Ok(Algebraic::from_rep(field, op(rep, &UniPoly::constant(b.clone()))))
            }
            (Algebraic::Ext { field: fa, rep: ra }, Algebraic::Ext { field: fb, rep: rb }) => {
                if !Self::fields_match(fa, fb) {
                    return Err(AlgebraicError::MixedField);
                }
                Ok(Algebraic::from_rep(fa, op(ra, rb)))
            }
        }
    }

    pub fn try_invert(&self) -> Result<Algebraic, AlgebraicError> {
        match self {
            Algebraic::Rational(r) => {
                if r.is_zero() {
                    Err(AlgebraicError::DivisionByZero)
                } else {
                    Ok(Algebraic::Rational(Rat::one() / r))
                }
            }
            Algebraic::Ext { field, rep } => {
                // defining irreducible and rep nonconstant => gcd is 1
                let (g, _, t) = field.defining.extended_gcd(rep);
                debug_assert!(g.is_constant() && !g.is_zero());
                Ok(Algebraic::from_rep(field, t))
            }
        }
    }

    pub fn neg(&self) -> Algebraic {
        match self {
            Algebraic::Rational(r) => Algebraic::Rational(-r.clone()),
            Algebraic::Ext { field, rep } => Algebraic::Ext { field: field.clone(), rep: rep.neg() },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Algebraic::Rational(r) => r.is_zero(),
            // rep is reduced and nonconstant, and the defining polynomial is
            // the minimal polynomial of theta
            Algebraic::Ext { .. } => false,
        }
    }

    /// Exact sign, decided by interval refinement; zero only via `is_zero`.
    pub fn sign(&self) -> Sign {
        match self {
            Algebraic::Rational(r) => Sign::of(r),
            Algebraic::Ext { field, rep } => {
                let mut width = field.isolating.width();
                loop {
                    let theta = field.refined(&width);
                    let value = rep.eval_interval(&theta);
                    if !value.contains_zero() {
                        return Sign::of(value.lo());
                    }
                    width /= rat_i64(4);
                }
            }
        }
    }

    /// Interval around the value, refined to width at most `width`.
    pub fn refined_interval(&self, width: &Rat) -> Interval {
        match self {
            Algebraic::Rational(r) => Interval::point(r.clone()),
            Algebraic::Ext { field, rep } => {
                let mut theta_width = field.isolating.width();
                loop {
                    let theta = field.refined(&theta_width);
                    let value = rep.eval_interval(&theta);
                    if &value.width() <= width {
                        return value;
                    }
                    theta_width /= rat_i64(4);
                }
            }
        }
    }

    /// Characteristic polynomial of this value over Q (primitive integer
    /// form). For a nonconstant residue in an irreducible field this is the
    /// minimal polynomial.
    pub fn char_poly(&self) -> UniPoly {
        match self {
            Algebraic::Rational(r) => {
                UniPoly::new(vec![-r.clone(), Rat::one()]).primitive_integer()
            }
            Algebraic::Ext { field, rep } => {
                let n = field.degree();
                // multiplication-by-rep matrix in the power basis
                let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(n);
                let mut basis = UniPoly::one();
                for _ in 0..n {
                    let prod = rep.mul(&basis);
                    let (_, reduced) = prod.div_rem(&field.defining);
                    cols.push((0..n).map(|k| reduced.coeff(k)).collect());
                    basis = basis.mul(&UniPoly::var());
                }
                // det(x*I - M) expanded over UniPoly entries
                let entry = |i: usize, j: usize| -> UniPoly {
                    let m = UniPoly::constant(-cols[j][i].clone());
                    if i == j {
                        m.add(&UniPoly::var())
                    } else {
                        m
                    }
                };
                let det = match n {
                    2 => entry(0, 0).mul(&entry(1, 1)).sub(&entry(0, 1).mul(&entry(1, 0))),
                    3 => {
                        let minor = |a: usize, b: usize, c: usize, d: usize| {
                            entry(a, b).mul(&entry(c, d)).sub(&entry(a, d).mul(&entry(c, b)))
                        };
                        entry(0, 0)
                            .mul(&minor(1, 1, 2, 2))
                            .sub(&entry(0, 1).mul(&entry(1, 0).mul(&entry(2, 2)).sub(&entry(1, 2).mul(&entry(2, 0)))))
                            .add(&entry(0, 2).mul(&entry(1, 0).mul(&entry(2, 1)).sub(&entry(1, 1).mul(&entry(2, 0)))))
                    }
                    _ => unreachable!("field degree is 2 or 3"),
                };
                det.primitive_integer()
            }
        }
    }

    /// An interval around the value containing exactly one root of its
    /// minimal polynomial (irreducible, hence no rational roots).
    fn isolating_value_interval(&self, min_poly: &UniPoly) -> Interval {
        let mut width = rat_i64(1);
        loop {
            let iv = self.refined_interval(&width);
            if !min_poly.eval(iv.lo()).is_zero()
                && !min_poly.eval(iv.hi()).is_zero()
                && crate::unipoly::count_roots_squarefree(min_poly, &iv) == 1
            {
                return iv;
            }
            width /= rat_i64(4);
        }
    }

    /// Exact equality across arbitrary fields.
    pub fn eq_exact(&self, other: &Algebraic) -> bool {
        match (self, other) {
            (Algebraic::Rational(a), Algebraic::Rational(b)) => a == b,
            (Algebraic::Rational(_), Algebraic::Ext { .. })
            | (Algebraic::Ext { .. }, Algebraic::Rational(_)) => false,
            (Algebraic::Ext { field: fa, rep: ra }, Algebraic::Ext { field: fb, rep: rb }) => {
                if Self::fields_match(fa, fb) {
                    return ra == rb;
                }
                let pa = self.char_poly();
                let pb = other.char_poly();
                if pa != pb {
                    return false;
                }
                let ia = self.isolating_value_interval(&pa);
                let ib = other.isolating_value_interval(&pb);
                same_root(&pa, &ia, &pb, &ib)
            }
        }
    }

    pub fn render(&self, width: &Rat, digits: usize) -> String {
        match self {
            Algebraic::Rational(r) => format!("{} ~ {}", r, crate::rat::decimal_string(r, digits)),
            Algebraic::Ext { .. } => self.refined_interval(width).render(digits),
        }
    }
}

impl PartialEq for Algebraic {
    fn eq(&self, other: &Self) -> bool {
        self.eq_exact(other)
    }
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algebraic::Rational(r) => write!(f, "{}", r),
            Algebraic::Ext { field, rep } => {
                write!(f, "({}) at theta in {}", rep, field.isolating.render(6))
            }
        }
    }
}

/// Affine relation `theta_other = offset + scale * theta_base` between field
/// generators. Used to pull values from one cubic field into another when the
/// defining polynomials are mirror images (`x -> 1-x`), as happens for dual
/// T3 scaffold parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRelation {
    pub offset: Rat,
    pub scale: Rat,
}

/// Finds how `other`'s generator sits inside `base`'s field, trying the
/// identity and the `x -> 1-x` mirror.
pub fn relate_generators(base: &Arc<ExtField>, other: &Arc<ExtField>) -> Option<AffineRelation> {
    let candidates = [
        AffineRelation { offset: Rat::zero(), scale: Rat::one() },
        AffineRelation { offset: Rat::one(), scale: -Rat::one() },
    ];
    for rel in candidates {
        // theta_other = offset + scale*theta_base is a root of
        // q(x) := defining_other(offset + scale*x)
        let q = other.defining.compose_linear(&rel.offset, &rel.scale).primitive_integer();
        if q != base.defining {
            continue;
        }
        // interval for offset + scale*theta_base must pin the same root as
        // other's isolating interval pins for defining_other; map other's
        // interval back through the inverse affine map instead
        let inv_scale = Rat::one() / &rel.scale;
        let mapped = other
            .isolating
            .shift(&-rel.offset.clone())
            .scale(&inv_scale);
        if same_root(&base.defining, &base.isolating, &base.defining, &mapped) {
            return Some(rel);
        }
    }
    None
}

/// Rewrites `value` (an element of `other`'s field or a rational) as an
/// element of `base`'s field using the generator relation.
pub fn embed(value: &Algebraic, base: &Arc<ExtField>, rel: &AffineRelation) -> Algebraic {
    match value {
        Algebraic::Rational(r) => Algebraic::Rational(r.clone()),
        Algebraic::Ext { rep, .. } => {
            let image = rep.compose_linear(&rel.offset, &rel.scale);
            Algebraic::from_rep(base, image)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn cbrt2() -> Algebraic {
        let p = UniPoly::from_i64(&[-2, 0, 0, 1]);
        Algebraic::from_root(&p, &Interval::new(rat_i64(1), rat_i64(2))).unwrap()
    }

    #[test]
    fn defining_relation_is_zero() {
        // theta^3 - 2 must vanish
        let t = cbrt2();
        let cube = t.try_mul(&t).unwrap().try_mul(&t).unwrap();
        let expr = cube.try_sub(&Algebraic::from_i64(2)).unwrap();
        assert!(expr.is_zero());
    }

    #[test]
    fn sign_by_bisection() {
        let t = cbrt2();
        let shifted = t.try_sub(&Algebraic::one()).unwrap();
        assert_eq!(shifted.sign(), Sign::Positive);
        let shifted = t.try_sub(&Algebraic::from_i64(2)).unwrap();
        assert_eq!(shifted.sign(), Sign::Negative);
    }

    #[test]
    fn inverse_times_self_is_one() {
        let t = cbrt2();
        let prod = t.try_invert().unwrap().try_mul(&t).unwrap();
        assert_eq!(prod, Algebraic::one());
    }

    #[test]
    fn rational_root_degrades() {
        // x^2 - 4, interval [1,3] isolates 2
        let p = UniPoly::from_i64(&[-4, 0, 1]);
        let v = Algebraic::from_root(&p, &Interval::new(rat_i64(1), rat_i64(3))).unwrap();
        assert_eq!(v.as_rational(), Some(&rat_i64(2)));
    }

    #[test]
    fn mixed_field_rejected() {
        let t = cbrt2();
        let s = Algebraic::from_root(
            &UniPoly::from_i64(&[-3, 0, 0, 1]),
            &Interval::new(rat_i64(1), rat_i64(2)),
        )
        .unwrap();
        assert_eq!(t.try_add(&s), Err(AlgebraicError::MixedField));
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(Algebraic::zero().try_invert(), Err(AlgebraicError::DivisionByZero));
    }

    #[test]
    fn interval_refinement_hits_width() {
        let t = cbrt2();
        let w = ratio(1, 1_000_000_000);
        let iv = t.refined_interval(&w);
        assert!(iv.width() <= w);
        // 2^(1/3) = 1.2599210498948...
        assert!(iv.lo() <= &ratio(12_599_210_499, 10_000_000_000));
        assert!(iv.hi() >= &ratio(12_599_210_498, 10_000_000_000));
    }

    #[test]
    fn mirror_fields_relate() {
        // q(x) with root r in (0,1), and its mirror q(1-x)
        let q = UniPoly::from_i64(&[-1, 3, 0, -1]); // -x^3 + 3x - 1, root in (0,1)
        let a = Algebraic::from_root(&q, &Interval::new(rat_i64(0), rat_i64(1))).unwrap();
        let mirrored = q.compose_linear(&Rat::one(), &-Rat::one());
        let b = Algebraic::from_root(&mirrored, &Interval::new(rat_i64(0), rat_i64(1))).unwrap();
        let fa = a.field().unwrap();
        let fb = b.field().unwrap();
        let rel = relate_generators(fa, fb).expect("mirror relation");
        assert_eq!(rel, AffineRelation { offset: Rat::one(), scale: -Rat::one() });
        let b_in_a = embed(&b, fa, &rel);
        let sum = a.try_add(&b_in_a).unwrap();
        assert_eq!(sum, Algebraic::one());
        // total equality agrees
        let one_minus_a = Algebraic::one().try_sub(&a).unwrap();
        assert!(one_minus_a.eq_exact(&b));
        assert!(!a.eq_exact(&b) || a == b);
    }

    #[test]
    fn cross_field_equality_distinguishes_roots() {
        let p = UniPoly::from_i64(&[1, -3, 0, 1]); // three real roots
        let r1 = Algebraic::from_root(&p, &Interval::new(rat_i64(-3), rat_i64(-1))).unwrap();
        let r2 = Algebraic::from_root(&p, &Interval::new(ratio(1, 4), rat_i64(1))).unwrap();
        let r2b = Algebraic::from_root(&p, &Interval::new(ratio(1, 3), ratio(2, 3))).unwrap();
        assert!(!r1.eq_exact(&r2));
        assert!(r2.eq_exact(&r2b));
    }
}
