//! Closed intervals with exact rational endpoints.

use crate::rat::{decimal_string, Rat};
use num_traits::Zero;

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Interval {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Rat) -> Interval {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / crate::rat::rat_i64(2)
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= Rat::zero() && Rat::zero() <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Interval { lo, hi }
    }

    // Interval arithmetic. Endpoint monotonicity is handled case by case.

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Interval {
        if c >= &Rat::zero() {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        } else {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        }
    }

    pub fn shift(&self, c: &Rat) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    /// `[lo, hi]` rendered as exact fractions plus a truncated decimal of the
    /// midpoint, for reports.
    pub fn render(&self, digits: usize) -> String {
        format!("[{}, {}] ~ {}", self.lo, self.hi, decimal_string(&self.midpoint(), digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn arithmetic_covers_products() {
        let a = Interval::new(ratio(-1, 2), ratio(1, 3));
        let b = Interval::new(ratio(2, 1), ratio(3, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo(), &ratio(-3, 2));
        assert_eq!(p.hi(), &ratio(1, 1));
        assert!(a.contains_zero());
        assert!(!b.contains_zero());
    }

    #[test]
    fn intersection_and_hull() {
        let a = Interval::new(ratio(0, 1), ratio(2, 1));
        let b = Interval::new(ratio(1, 1), ratio(3, 1));
        assert_eq!(a.intersect(&b).unwrap(), Interval::new(ratio(1, 1), ratio(2, 1)));
        assert_eq!(a.hull(&b), Interval::new(ratio(0, 1), ratio(3, 1)));
        let c = Interval::new(ratio(5, 1), ratio(6, 1));
        assert!(a.intersect(&c).is_none());
    }
}
