//! Rational functions in one variable `q` over Q.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::Rational;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Builds and normalizes `num / den`. Returns `None` if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFun::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().cloned().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(RatFun { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        RatFun::from_poly(Poly::constant(r))
    }

    pub fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFun::from_poly(Poly::x())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFun::from_poly(m)
        } else {
            RatFun {
                num: Poly::one(),
                den: m,
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFun::new(&self.num + &other.num, self.den.clone()).expect("nonzero den");
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            return RatFun::new(num, &self.den * &other.den).expect("nonzero den");
        }
        let a = self.den.exact_div(&g);
        let b = other.den.exact_div(&g);
        let num = &(&self.num * &b) + &(&other.num * &a);
        RatFun::new(num, &(&a * &b) * &g).expect("nonzero den")
    }

    pub fn neg(&self) -> Self {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = other.den.exact_div(&g1);
        let n2 = other.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        RatFun::new(&n1 * &n2, &d1 * &d2).expect("nonzero den")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            RatFun::new(self.den.clone(), self.num.clone())
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    /// `"q + 1"`, or `"(num)/(den)"` with parentheses only around multi-term parts.
    pub fn canonical_string(&self) -> String {
        let num = self.num.format_descending("q");
        if self.den.is_one() {
            return num;
        }
        let wrap = |p: &Poly, s: String| {
            if p.term_count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        let den = self.den.format_descending("q");
        // A lone numerator term like "-2*q" is still unambiguous on the left of '/'.
        format!("{}/{}", wrap(&self.num, num), wrap(&self.den, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let num = Poly::from_i64(&[-1, 0, 1]);
        let den = Poly::from_i64(&[-1, 1]);
        let r = RatFun::new(num, den).unwrap();
        assert_eq!(r, RatFun::from_poly(Poly::from_i64(&[1, 1])));
        assert_eq!(r.canonical_string(), "q + 1");
    }

    #[test]
    fn denominator_is_monic() {
        let r = RatFun::new(Poly::from_i64(&[1]), Poly::from_i64(&[0, 2])).unwrap();
        assert!(r.den().leading().unwrap().is_one());
        assert_eq!(r.canonical_string(), "1/2/q");
    }

    #[test]
    fn q_inverse_times_q() {
        assert_eq!(RatFun::q_pow(-3).mul(&RatFun::q_pow(3)), RatFun::one());
        assert_eq!(RatFun::q_pow(-1).add(&RatFun::q_pow(-1)).canonical_string(), "2/q");
    }
}
