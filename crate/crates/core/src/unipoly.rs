//! Dense univariate polynomials over the rationals, with exact real-root
//! isolation for degrees up to three.
//!
//! Isolation splits the window at the critical points and reads each
//! monotone piece off its endpoint signs. Multiple roots of a degree <= 3
//! rational polynomial are rational and fall out of `gcd(p, p')`; whether an
//! isolated simple root is rational is decided by integer bisection on the
//! monic transform, whose rational roots are integers.

use crate::interval::Interval;
use crate::rat::{rat_i64, Rat, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Maximum degree accepted by the root-isolation entry points.
pub const MAX_ISOLATION_DEGREE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("cannot isolate roots of the zero polynomial")]
    ZeroPolynomial,
    #[error("root isolation is only supported up to degree {MAX_ISOLATION_DEGREE}, got degree {0}")]
    DegreeTooHigh(usize),
}

/// Coefficients stored little-endian with no trailing zeros; the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::new(vec![c])
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn var() -> UniPoly {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - other.coeff(k));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat_i64(k as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        // integer-coefficient fast path: p(n/d) = (integer Horner) / d^deg
        if !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.is_integer()) {
            let d = self.degree().unwrap();
            let n = x.numer();
            let den = x.denom();
            let mut acc = self.coeffs[d].to_integer();
            let mut dpow = BigInt::one();
            for k in (0..d).rev() {
                dpow *= den;
                acc = acc * n + self.coeffs[k].to_integer() * &dpow;
            }
            return Rat::new(acc, dpow);
        }
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> Sign {
        // integer-coefficient fast path: sign(p(n/d)) = sign of the integer
        // Horner sum of a_i n^i d^(deg-i), no rational normalisation at all
        if self.coeffs.iter().all(|c| c.is_integer()) {
            let Some(d) = self.degree() else { return Sign::Zero };
            let n = x.numer();
            let den = x.denom();
            let mut acc = self.coeffs[d].to_integer();
            let mut dpow = BigInt::one();
            for k in (0..d).rev() {
                dpow *= den;
                acc = acc * n + self.coeffs[k].to_integer() * &dpow;
            }
            return if acc.is_zero() {
                Sign::Zero
            } else if acc.is_negative() {
                Sign::Negative
            } else {
                Sign::Positive
            };
        }
        Sign::of(&self.eval(x))
    }

    /// Interval extension by Horner evaluation.
    pub fn eval_interval(&self, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).shift(c);
        }
        acc
    }

    /// Composition with a linear map: returns `p(a + b*x)`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> UniPoly {
        let mut acc = UniPoly::zero();
        let lin = UniPoly::new(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&UniPoly::new(sub));
        }
        (UniPoly::new(quot), rem)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading().unwrap().clone();
            a.scale(&(Rat::one() / lead))
        }
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = UniPoly::one();
        let mut s1 = UniPoly::zero();
        let mut t0 = UniPoly::zero();
        let mut t1 = UniPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.leading().unwrap().clone();
        let inv = Rat::one() / lead;
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            let lead = self.leading().unwrap().clone();
            return self.scale(&(Rat::one() / lead));
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        let lead = q.leading().unwrap().clone();
        q.scale(&(Rat::one() / lead))
    }

    /// Clears denominators and the content: integer coefficients, gcd one,
    /// positive leading coefficient. Canonical form for field comparisons.
    pub fn primitive_integer(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
        let mut content = BigInt::zero();
        for i in &ints {
            content = content.gcd(i);
        }
        let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
        let divisor = content * sign;
        UniPoly::new(ints.iter().map(|i| Rat::from_integer(i / &divisor)).collect())
    }

    /// Cauchy bound: all real roots lie in `[-B, B]`.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading().expect("root bound of zero polynomial");
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rat::one()
    }

    /// A power-of-two root bound (Fujiwara-style, computed on bit lengths).
    /// Dyadic endpoints keep every bisection midpoint dyadic, which keeps the
    /// rational arithmetic small, and the k-th-root weighting keeps the
    /// bound tight when the leading coefficient is small.
    pub fn root_bound_pow2(&self) -> Rat {
        let prim = self.primitive_integer();
        let coeffs = prim.coeffs();
        let d = prim.degree().expect("root bound of zero polynomial");
        let lead_bits = coeffs[d].numer().bits();
        let mut exponent: u64 = 1;
        for k in 1..=d {
            let c = &coeffs[d - k];
            if c.is_zero() {
                continue;
            }
            let delta = c.numer().bits().saturating_sub(lead_bits) + 1;
            let e = delta.div_ceil(k as u64) + 1;
            exponent = exponent.max(e);
        }
        let mut b = Rat::one();
        for _ in 0..exponent {
            b *= rat_i64(2);
        }
        b
    }
}

/// One isolated real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    /// Interval containing exactly this root of the input polynomial. A point
    /// interval when the root is rational.
    pub interval: Interval,
    pub multiplicity: u32,
    /// Set when the root is exactly rational.
    pub rational: Option<Rat>,
}

/// Decides whether the unique root of squarefree `p` inside the sign-change
/// interval `(lo, hi)` is rational; returns it if so.
///
/// Works on the monic transform `m(y) = a_d^(d-1) p(y / a_d)`, whose rational
/// roots are integers, so the root is rational exactly when the scaled
/// interval pins an integer zero of `m`. The bisection only ever evaluates
/// `m` at integers, so the loop is pure big-integer arithmetic.
fn probe_rational_root(p: &UniPoly, lo: &Rat, hi: &Rat) -> Option<Rat> {
    let sign_low = p.sign_at(lo);
    debug_assert!(sign_low != Sign::Zero && p.sign_at(hi) != Sign::Zero);
    let prim = p.primitive_integer();
    let d = prim.degree().unwrap();
    let lead = prim.leading().unwrap().to_integer();
    // m(y) = y^d + sum_{i<d} a_i lead^(d-1-i) y^i, big-endian for Horner
    let mut monic: Vec<BigInt> = Vec::with_capacity(d + 1);
    monic.push(BigInt::one());
    for (i, c) in prim.coeffs().iter().enumerate().rev().skip(1) {
        let mut scaled = c.to_integer();
        for _ in 0..(d - 1 - i) {
            scaled *= &lead;
        }
        monic.push(scaled);
    }
    let eval_int = |y: &BigInt| -> Sign {
        let mut acc = BigInt::zero();
        for c in &monic {
            acc = acc * y + c;
        }
        if acc.is_zero() {
            Sign::Zero
        } else if acc.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    };

    // the scaled open interval (lo_r, hi_r) always contains the scaled root,
    // with sign(m) = sign_low on its left flank
    let mut lo_r = lo * Rat::from_integer(lead.clone());
    let mut hi_r = hi * Rat::from_integer(lead.clone());
    while hi_r.clone() - &lo_r > rat_i64(2) {
        // width > 2 guarantees an integer strictly inside
        let mid = ((&lo_r + &hi_r) / rat_i64(2)).floor().to_integer();
        match eval_int(&mid) {
            Sign::Zero => return Some(Rat::new(mid, lead)),
            s if s == sign_low => lo_r = Rat::from_integer(mid),
            _ => hi_r = Rat::from_integer(mid),
        }
    }
    // at most two integer candidates remain in the open interval
    let mut candidate = lo_r.floor().to_integer() + BigInt::one();
    while Rat::from_integer(candidate.clone()) < hi_r {
        if Rat::from_integer(candidate.clone()) > lo_r && eval_int(&candidate) == Sign::Zero {
            return Some(Rat::new(candidate, lead));
        }
        candidate += BigInt::one();
    }
    None
}

/// Sign-change intervals (plus exact bisection hits) for the distinct real
/// roots of a squarefree polynomial in the closed window.
///
/// Works by splitting the window at the critical points: the roots of the
/// squarefree part of `p'` are isolated recursively (the recursion loses a
/// degree each step), irrational critical points are shrunk to zones on
/// which an interval evaluation of `p` excludes zero, and each remaining
/// piece is strictly monotone, so a sign comparison at its ends decides it.
/// Depth depends only on coefficient sizes, never on clustering of complex
/// roots.
pub fn isolate_squarefree(p: &UniPoly, lo: &Rat, hi: &Rat) -> Vec<(Interval, Option<Rat>)> {
    debug_assert!(!p.is_zero());
    if lo > hi {
        return vec![];
    }
    if p.eval(lo).is_zero() {
        let mut out = vec![(Interval::point(lo.clone()), Some(lo.clone()))];
        let (q, rem) = p.div_rem(&UniPoly::new(vec![-lo.clone(), Rat::one()]));
        debug_assert!(rem.is_zero());
        if q.degree().unwrap_or(0) >= 1 {
            out.extend(isolate_squarefree(&q, lo, hi));
        }
        out.sort_by(|x, y| x.0.lo().cmp(y.0.lo()));
        return out;
    }
    if hi > lo && p.eval(hi).is_zero() {
        let mut out = vec![(Interval::point(hi.clone()), Some(hi.clone()))];
        let (q, rem) = p.div_rem(&UniPoly::new(vec![-hi.clone(), Rat::one()]));
        debug_assert!(rem.is_zero());
        if q.degree().unwrap_or(0) >= 1 {
            out.extend(isolate_squarefree(&q, lo, hi));
        }
        out.sort_by(|x, y| x.0.lo().cmp(y.0.lo()));
        return out;
    }
    if p.degree().unwrap_or(0) == 0 || lo == hi {
        return vec![];
    }
    if p.degree() == Some(1) {
        let root = -p.coeff(0) / p.coeff(1);
        if &root > lo && &root < hi {
            return vec![(Interval::point(root.clone()), Some(root))];
        }
        return vec![];
    }

    // window boundaries: the ends plus every critical point, either exactly
    // (rational) or bracketed by a root-free zone (irrational)
    let mut boundaries: Vec<Rat> = vec![lo.clone(), hi.clone()];
    let deriv = p.derivative();
    if deriv.degree().unwrap_or(0) >= 1 {
        let crit = deriv.squarefree_part().primitive_integer();
        for (iv, exact) in isolate_squarefree(&crit, lo, hi) {
            match exact {
                // a critical point of a squarefree p is never a root of p
                Some(c) => boundaries.push(c),
                None => {
                    let zone = shrink_to_root_free_zone(p, &crit, &iv);
                    boundaries.push(zone.lo().clone());
                    boundaries.push(zone.hi().clone());
                }
            }
        }
    }
    boundaries.sort();
    boundaries.dedup();
    boundaries.retain(|b| b >= lo && b <= hi);

    let mut out = Vec::new();
    for pair in boundaries.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let sa = p.sign_at(a);
        let sb = p.sign_at(b);
        debug_assert!(sa != Sign::Zero && sb != Sign::Zero);
        if sa != sb {
            out.push((Interval::new(a.clone(), b.clone()), None));
        }
    }
    out
}

/// Shrinks an isolating bracket of a critical point of `p` until `p` is
/// certified nonzero on it, by the Lipschitz bound
/// `|p(x)| >= |p(mid)| - sup|p'| * width`.
fn shrink_to_root_free_zone(p: &UniPoly, crit: &UniPoly, bracket: &Interval) -> Interval {
    use num_traits::Signed;
    let deriv = p.derivative();
    let mut zone = refine_root(crit, bracket, &Rat::one());
    loop {
        let mid = zone.midpoint();
        let pm = p.eval(&mid).abs();
        if !pm.is_zero() {
            // sup |p'| over the zone via a power-of-two magnitude bound
            let mut radius = Rat::one();
            let extent = zone.lo().abs().max(zone.hi().abs());
            while radius < extent {
                radius *= rat_i64(2);
            }
            let mut slope = Rat::zero();
            let mut power = Rat::one();
            for c in deriv.coeffs() {
                slope += c.abs() * &power;
                power *= &radius;
            }
            if slope.is_zero() || zone.width() * &slope < pm {
                return zone;
            }
            let target = pm / (slope * rat_i64(2));
            zone = refine_root(crit, &zone, &target);
        } else {
            // the midpoint hit a root of p; split it away from the critical
            // point and keep shrinking
            let half = zone.width() / rat_i64(2);
            zone = refine_root(crit, &zone, &half);
        }
    }
}

/// Rational roots with multiplicities, plus the rational-root-free cofactor.
///
/// Multiple roots of a degree <= 3 rational polynomial are rational and fall
/// out of `gcd(p, p')` by linear algebra alone; simple rational roots are
/// found by isolating the squarefree part and probing each isolating interval
/// with its simplest rational. No divisor enumeration is involved.
pub fn extract_rational_roots(p: &UniPoly) -> (Vec<(Rat, u32)>, UniPoly) {
    let (found, rest, _) = extract_rational_roots_with_intervals(p);
    (found, rest)
}

/// [`extract_rational_roots`] plus the isolating intervals of the cofactor's
/// (simple, irrational) roots, so callers that need both do the isolation
/// work once.
pub fn extract_rational_roots_with_intervals(
    p: &UniPoly,
) -> (Vec<(Rat, u32)>, UniPoly, Vec<Interval>) {
    assert!(!p.is_zero());
    let mut found: Vec<(Rat, u32)> = Vec::new();
    let p = p.primitive_integer();
    let mut rest = p.clone();

    let g = p.gcd(&p.derivative());
    match g.degree() {
        Some(1) => {
            // one multiple root, g monic linear
            let r = -g.coeff(0);
            let mut mult = 0;
            let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            debug_assert!(mult >= 2);
            found.push((r, mult));
        }
        Some(2) => {
            // a triple root: g = (x - r)^2, monic
            let r = -g.coeff(1) / rat_i64(2);
            debug_assert!(g.eval(&r).is_zero());
            let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
            for _ in 0..3 {
                let (q, rem) = rest.div_rem(&lin);
                debug_assert!(rem.is_zero());
                rest = q;
            }
            found.push((r, 3));
        }
        _ => {}
    }

    // rest is squarefree now; pick off its rational roots. Removing a root
    // by division does not move the others, so the surviving intervals
    // isolate exactly the irrational roots of the final cofactor.
    rest = rest.primitive_integer();
    let mut leftovers: Vec<Interval> = Vec::new();
    if rest.degree().unwrap_or(0) >= 1 {
        let bound = rest.root_bound_pow2();
        for (interval, exact) in isolate_squarefree(&rest, &-bound.clone(), &bound) {
            let root = match exact {
                Some(r) => Some(r),
                None => probe_rational_root(&rest, interval.lo(), interval.hi()),
            };
            if let Some(r) = root {
                let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
                let (q, rem) = rest.div_rem(&lin);
                debug_assert!(rem.is_zero());
                rest = q;
                found.push((r, 1));
            } else {
                leftovers.push(interval);
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    (found, rest, leftovers)
}

/// Isolates the distinct real roots of `p` inside the closed `window`,
/// with multiplicities. Degree is capped at [`MAX_ISOLATION_DEGREE`].
pub fn isolate_roots(p: &UniPoly, window: &Interval) -> Result<Vec<IsolatedRoot>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let deg = p.degree().unwrap();
    if deg > MAX_ISOLATION_DEGREE {
        return Err(RootError::DegreeTooHigh(deg));
    }
    let (rational_roots, rest, leftovers) = extract_rational_roots_with_intervals(p);
    let mut out: Vec<IsolatedRoot> = rational_roots
        .into_iter()
        .filter(|(r, _)| window.contains(r))
        .map(|(r, m)| IsolatedRoot {
            interval: Interval::point(r.clone()),
            multiplicity: m,
            rational: Some(r),
        })
        .collect();

    for interval in leftovers {
        // narrow each isolating interval into the window; the root stays
        // bracketed because window endpoints are tested by sign
        if interval.hi() < window.lo() || interval.lo() > window.hi() {
            continue;
        }
        let lo = interval.lo().max(window.lo()).clone();
        let hi = interval.hi().min(window.hi()).clone();
        if lo == hi {
            continue;
        }
        let sign_lo = rest.sign_at(&lo);
        let sign_hi = rest.sign_at(&hi);
        if sign_lo == Sign::Zero || sign_hi == Sign::Zero {
            // window endpoint is irrational-root-free (rest has no rational
            // roots and window endpoints are rational), so this is dead code,
            // but stay conservative
            continue;
        }
        if sign_lo != sign_hi {
            out.push(IsolatedRoot {
                interval: Interval::new(lo, hi),
                multiplicity: 1,
                rational: None,
            });
        }
    }
    out.sort_by(|x, y| x.interval.lo().cmp(y.interval.lo()));
    Ok(out)
}

/// Exact count of distinct real roots of a squarefree polynomial inside the
/// closed interval; endpoints must not be roots.
pub fn count_roots_squarefree(p: &UniPoly, window: &Interval) -> usize {
    debug_assert!(!p.eval(window.lo()).is_zero() && !p.eval(window.hi()).is_zero());
    isolate_squarefree(p, window.lo(), window.hi()).len()
}

/// Shrinks an isolating interval of `p` (squarefree, no rational roots in the
/// interval) by bisection until its width is at most `width`.
pub fn refine_root(p: &UniPoly, interval: &Interval, width: &Rat) -> Interval {
    if interval.is_point() {
        return interval.clone();
    }
    let mut lo = interval.lo().clone();
    let mut hi = interval.hi().clone();
    let sign_lo = p.sign_at(&lo);
    if sign_lo.is_zero() {
        // endpoint root: callers keep irrational roots strictly interior,
        // but guard anyway
        return Interval::point(lo);
    }
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / rat_i64(2);
        let sign_mid = p.sign_at(&mid);
        if sign_mid.is_zero() {
            return Interval::point(mid);
        }
        if sign_mid == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval::new(lo, hi)
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", k)?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn interval(a: i64, b: i64) -> Interval {
        Interval::new(rat_i64(a), rat_i64(b))
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let p = UniPoly::from_i64(&[2, -3, 1]);
        let d = UniPoly::from_i64(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[-2, 1]));
        let g = p.gcd(&UniPoly::from_i64(&[-1, 1]));
        assert_eq!(g, UniPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        // (x-1)^2 (x+3)
        let p = UniPoly::from_i64(&[-1, 1]).mul(&UniPoly::from_i64(&[-1, 1])).mul(&UniPoly::from_i64(&[3, 1]));
        let s = p.squarefree_part();
        assert_eq!(s, UniPoly::from_i64(&[-3, 2, 1]).scale(&ratio(1, 1)));
        assert_eq!(s.degree(), Some(2));
    }

    #[test]
    fn isolates_lambda_times_lambda_minus_one() {
        let p = UniPoly::from_i64(&[0, -1, 1]); // x(x-1) = x^2 - x
        let roots = isolate_roots(&p, &interval(-2, 2)).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].rational, Some(Rat::zero()));
        assert_eq!(roots[1].rational, Some(Rat::one()));
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn isolates_cube_root_of_two() {
        let p = UniPoly::from_i64(&[-2, 0, 0, 1]);
        let roots = isolate_roots(&p, &interval(0, 2)).unwrap();
        assert_eq!(roots.len(), 1);
        let root = &roots[0];
        assert_eq!(root.multiplicity, 1);
        assert!(root.rational.is_none());
        let refined = refine_root(&p, &root.interval, &ratio(1, 100));
        // bracket [5/4, 13/10] contains 2^(1/3) = 1.2599...
        assert!(refined.lo() >= &ratio(5, 4) || refined.lo() >= &ratio(124, 100));
        assert!(*refined.lo() <= ratio(13, 10) && ratio(5, 4) <= *refined.hi());
        let tight = refine_root(&p, &root.interval, &ratio(1, 1_000_000_000));
        assert!(tight.width() <= ratio(1, 1_000_000_000));
        assert!(tight.contains(&ratio(1_259_921_049, 1_000_000_000)) || tight.lo() > &ratio(1_259_921_049, 1_000_000_000));
    }

    #[test]
    fn multiplicity_reported_for_multiple_roots() {
        // (x-1)^2 (x-3)
        let p = UniPoly::from_i64(&[-1, 1]).mul(&UniPoly::from_i64(&[-1, 1])).mul(&UniPoly::from_i64(&[-3, 1]));
        let roots = isolate_roots(&p, &interval(-10, 10)).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 2);
        assert_eq!(roots[0].rational, Some(Rat::one()));
        assert_eq!(roots[1].multiplicity, 1);
        assert_eq!(roots[1].rational, Some(rat_i64(3)));
    }

    #[test]
    fn window_excludes_outside_roots() {
        let p = UniPoly::from_i64(&[2, -3, 1]); // roots 1, 2
        let roots = isolate_roots(&p, &interval(0, 1)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].rational, Some(Rat::one()));
    }

    #[test]
    fn rejects_zero_and_high_degree() {
        assert_eq!(isolate_roots(&UniPoly::zero(), &interval(0, 1)), Err(RootError::ZeroPolynomial));
        let quartic = UniPoly::from_i64(&[1, 0, 0, 0, 1]);
        assert_eq!(isolate_roots(&quartic, &interval(0, 1)), Err(RootError::DegreeTooHigh(4)));
    }

    #[test]
    fn three_irrational_roots_are_separated() {
        // x^3 - 3x + 1: three irrational roots (disc = 81 > 0)
        let p = UniPoly::from_i64(&[1, -3, 0, 1]);
        let roots = isolate_roots(&p, &interval(-3, 3)).unwrap();
        assert_eq!(roots.len(), 3);
        for w in roots.windows(2) {
            assert!(w[0].interval.hi() <= w[1].interval.lo() || w[0].interval.intersect(&w[1].interval).is_none());
        }
        for r in &roots {
            let refined = refine_root(&p, &r.interval, &ratio(1, 1000));
            assert_ne!(p.sign_at(refined.lo()), p.sign_at(refined.hi()));
        }
    }

    #[test]
    fn primitive_integer_is_canonical() {
        let p = UniPoly::new(vec![ratio(1, 2), ratio(-3, 4), ratio(1, 4)]);
        let q = p.primitive_integer();
        assert_eq!(q, UniPoly::from_i64(&[2, -3, 1]));
        let r = p.scale(&ratio(-7, 3)).primitive_integer();
        assert_eq!(r, UniPoly::from_i64(&[2, -3, 1]));
    }
}
