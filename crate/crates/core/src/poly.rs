//! Sparse multivariate polynomials over the rationals, used for the symbolic
//! identities: pairwise determinants of the variant strains, distance
//! classes, and the dual-pair and level-2 determinant identities.

use crate::rat::{Rat, Sign};
use crate::ring::Ring;
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered variable universe shared by all polynomials in a computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> VarSet {
        VarSet { names: Arc::new(names.iter().map(|s| s.as_ref().to_string()).collect()) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Terms keyed by exponent vector; zero coefficients are never stored, terms
/// are kept in a canonical (BTreeMap) order, and equality is term equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Polynomial {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: Rat) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        Polynomial { vars: vars.clone(), terms }
    }

    pub fn var(vars: &VarSet, i: usize) -> Polynomial {
        assert!(i < vars.len());
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rat::one());
        Polynomial { vars: vars.clone(), terms }
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Polynomial {
        Polynomial::var(vars, vars.index(name).expect("unknown variable"))
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    fn assert_same_universe(&self, other: &Polynomial) {
        assert_eq!(self.vars, other.vars, "polynomials from different variable universes");
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_universe(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_universe(other);
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(exps).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Full substitution; `values` indexed like the variable universe.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Views the polynomial as univariate in variable `i`; fails when any
    /// other variable occurs.
    pub fn to_unipoly_in(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (exps, c) in &self.terms {
            for (j, &e) in exps.iter().enumerate() {
                if j != i && e != 0 {
                    return None;
                }
            }
            let k = exps[i] as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Substitutes `-v` for variable `v`: each term picks up `(-1)^exponent`.
    pub fn negate_var(&self, i: usize) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let c = if e[i] % 2 == 1 { -c.clone() } else { c.clone() };
                    (e.clone(), c)
                })
                .collect(),
        }
    }
}

impl Ring for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Polynomial::constant(&self.vars, Rat::one())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Polynomial::add(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Polynomial::sub(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Polynomial::mul(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        Polynomial::neg(self)
    }
    fn vanishes(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

/// Exact determinant of a 3x3 matrix over any scalar ring, expanded along the
/// first row.
pub fn det3<R: Ring>(m: &[[R; 3]; 3]) -> R {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        m[a][b].mul_ref(&m[c][d]).sub_ref(&m[a][d].mul_ref(&m[c][b]))
    };
    m[0][0]
        .mul_ref(&minor(1, 1, 2, 2))
        .sub_ref(&m[0][1].mul_ref(&minor(1, 0, 2, 2)))
        .add_ref(&m[0][2].mul_ref(&minor(1, 0, 2, 1)))
}

/// Determinant of a 3x3 polynomial matrix ([`det3`] specialised to the
/// symbolic ring).
pub fn poly_det3(m: &[[Polynomial; 3]; 3]) -> Polynomial {
    det3(m)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            use num_traits::Signed;
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let mag = c.abs();
            let is_const_term = exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const_term {
                write!(f, "{}", mag)?;
                if !is_const_term {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Sign of a polynomial that must be constant (used after full classification).
pub fn constant_sign(p: &Polynomial) -> Option<Sign> {
    if p.is_zero() {
        return Some(Sign::Zero);
    }
    if p.is_constant() {
        return Some(Sign::of(p.terms.values().next().unwrap()));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat_i64, ratio};

    fn vars() -> VarSet {
        VarSet::new(&["x", "y"])
    }

    #[test]
    fn ring_laws_on_random_instances() {
        // deterministic xorshift; checks commutativity/associativity/
        // distributivity against term-by-term recomputation
        let vs = vars();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut rand_poly = || {
            let mut p = Polynomial::zero(&vs);
            for _ in 0..4 {
                let e = vec![(next() % 3) as u32, (next() % 3) as u32];
                let c = ratio((next() % 11) as i64 - 5, 1 + (next() % 4) as i64);
                let mut t = BTreeMap::new();
                if !c.is_zero() {
                    t.insert(e, c);
                }
                p = p.add(&Polynomial { vars: vs.clone(), terms: t });
            }
            p
        };
        for _ in 0..50 {
            let (a, b, c) = (rand_poly(), rand_poly(), rand_poly());
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }

    #[test]
    fn identity_determinant() {
        let vs = vars();
        let one = Polynomial::constant(&vs, rat_i64(1));
        let zero = Polynomial::zero(&vs);
        let m = [
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(poly_det3(&m), one);
    }

    #[test]
    fn determinant_matches_numeric_substitution() {
        let vs = vars();
        let x = Polynomial::var(&vs, 0);
        let y = Polynomial::var(&vs, 1);
        let c = |n: i64| Polynomial::constant(&vs, rat_i64(n));
        let m = [
            [x.clone(), y.clone(), c(1)],
            [c(2), x.mul(&y), c(3)],
            [y.clone(), c(4), x.clone()],
        ];
        let det = poly_det3(&m);
        let mut state = 0xdeadbeefu64;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let xv = ratio((state % 17) as i64 - 8, 3);
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let yv = ratio((state % 19) as i64 - 9, 5);
            let vals = vec![xv.clone(), yv.clone()];
            let numeric = [
                [xv.clone(), yv.clone(), rat_i64(1)],
                [rat_i64(2), &xv * &yv, rat_i64(3)],
                [yv.clone(), rat_i64(4), xv.clone()],
            ];
            let direct = &numeric[0][0] * (&numeric[1][1] * &numeric[2][2] - &numeric[1][2] * &numeric[2][1])
                - &numeric[0][1] * (&numeric[1][0] * &numeric[2][2] - &numeric[1][2] * &numeric[2][0])
                + &numeric[0][2] * (&numeric[1][0] * &numeric[2][1] - &numeric[1][1] * &numeric[2][0]);
            assert_eq!(det.eval(&vals), direct);
        }
    }

    #[test]
    fn unipoly_view() {
        let vs = VarSet::new(&["lam"]);
        let l = Polynomial::var(&vs, 0);
        let p = l.mul(&l).sub(&Polynomial::constant(&vs, rat_i64(2)));
        let u = p.to_unipoly_in(0).unwrap();
        assert_eq!(u, UniPoly::from_i64(&[-2, 0, 1]));
    }
}
