//! Elements of the cyclotomic field `Q(ζ_n)`, reduced modulo `Φ_n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::poly::{format_terms, Poly};
use super::Rational;

/// Returns `Φ_n`, obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d` of `n`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: u32) -> Poly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    (*modulus(n)).clone()
}

fn compute_cyclotomic(n: u32) -> Poly {
    let mut p = &Poly::monomial(Rational::one(), n as usize) - &Poly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.exact_div(&modulus(d));
        }
    }
    p
}

fn modulus(n: u32) -> Arc<Poly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    // Computed outside the lock: the recursion re-enters `modulus` for divisors.
    let p = Arc::new(compute_cyclotomic(n));
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(p)
        .clone()
}

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: u32) -> usize {
    modulus(n).degree().unwrap_or(0)
}

/// An element `Σ c_i ζ^i` with `i < φ(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_poly(order: u32, p: &Poly) -> Self {
        let m = modulus(order);
        let (_, r) = p.div_rem(&m);
        let len = m.degree().unwrap_or(0);
        let mut coeffs = r.into_coeffs();
        coeffs.resize(len, Rational::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        Cyclotomic::from_poly(order, &Poly::constant(r))
    }

    pub fn zero(order: u32) -> Self {
        Cyclotomic::from_poly(order, &Poly::zero())
    }

    /// The primitive root `ζ_n`.
    pub fn zeta(order: u32) -> Self {
        Cyclotomic::from_poly(order, &Poly::x())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `Some(r)` when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        Cyclotomic::from_poly(self.order, &(&self.to_poly() * &other.to_poly()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_n`.
    /// `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = self.to_poly().ext_gcd(&modulus(self.order));
        // Φ_n is irreducible, so any nonzero reduced element is coprime to it.
        debug_assert!(g.is_one());
        Some(Cyclotomic::from_poly(self.order, &s))
    }

    /// Ascending powers of `z`, e.g. `"-1/2 + z"`.
    pub fn canonical_string(&self) -> String {
        let terms: Vec<(usize, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        format_terms(&terms, "z")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), Poly::from_i64(&[1, 0, 1]));
        // x^6 - 1 divided by Φ_1 Φ_2 Φ_3 = (x-1)(x+1)(x^2+x+1)
        assert_eq!(cyclotomic_poly(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), Poly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_1() {
        for n in 1..=60u32 {
            let mut prod = Poly::one();
            for d in 1..=n {
                if n.is_multiple_of(d) {
                    prod = &prod * &cyclotomic_poly(d);
                }
            }
            let expected = &Poly::monomial(Rational::one(), n as usize) - &Poly::one();
            assert_eq!(prod, expected, "n = {n}");
        }
    }

    #[test]
    fn zeta_powers() {
        let i = Cyclotomic::zeta(4);
        assert_eq!(i.mul(&i).as_rational(), Some(-Rational::one()));
        let w = Cyclotomic::zeta(3);
        let w3 = w.mul(&w).mul(&w);
        assert_eq!(w3.as_rational(), Some(Rational::one()));
        let winv = w.inv().unwrap();
        assert_eq!(winv, w.mul(&w));
    }
}
