//! Exact coefficient arithmetic: prime fields F_p (p a machine word) and the
//! rationals with arbitrary-precision integers. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a ring: F_p for a prime p, or Q.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefField {
    Prime(u64),
    Rationals,
}

/// A field element. Prime-field values are kept reduced in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coef {
    Fp(u64),
    Rat(BigRational),
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'wit: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'wit;
            }
        }
        return false;
    }
    true
}

impl CoefField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NonPrimeChar(p));
        }
        Ok(CoefField::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefField::Prime(p) => *p,
            CoefField::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coef {
        match self {
            CoefField::Prime(_) => Coef::Fp(0),
            CoefField::Rationals => Coef::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Coef {
        match self {
            CoefField::Prime(_) => Coef::Fp(1),
            CoefField::Rationals => Coef::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Coef {
        match self {
            CoefField::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Coef::Fp(r)
            }
            CoefField::Rationals => Coef::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn is_zero(&self, a: &Coef) -> bool {
        match a {
            Coef::Fp(x) => *x == 0,
            Coef::Rat(x) => x.is_zero(),
        }
    }

    pub fn add(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (CoefField::Prime(p), Coef::Fp(x), Coef::Fp(y)) => Coef::Fp((x + y) % p),
            (CoefField::Rationals, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x + y),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Coef, b: &Coef) -> Coef {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coef) -> Coef {
        match (self, a) {
            (CoefField::Prime(p), Coef::Fp(x)) => Coef::Fp(if *x == 0 { 0 } else { p - x }),
            (CoefField::Rationals, Coef::Rat(x)) => Coef::Rat(-x),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Coef, b: &Coef) -> Coef {
        match (self, a, b) {
            (CoefField::Prime(p), Coef::Fp(x), Coef::Fp(y)) => Coef::Fp(mulmod(*x, *y, *p)),
            (CoefField::Rationals, Coef::Rat(x), Coef::Rat(y)) => Coef::Rat(x * y),
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Coef) -> Coef {
        match (self, a) {
            (CoefField::Prime(p), Coef::Fp(x)) => {
                assert!(*x != 0, "division by zero");
                Coef::Fp(powmod(*x, p - 2, *p))
            }
            (CoefField::Rationals, Coef::Rat(x)) => {
                assert!(!x.is_zero(), "division by zero");
                Coef::Rat(x.recip())
            }
            _ => panic!("coefficient/field mismatch"),
        }
    }

    pub fn div(&self, a: &Coef, b: &Coef) -> Coef {
        self.mul(a, &self.inv(b))
    }

    /// Canonical display; prime-field values print as 0..p-1, rationals as n or n/d.
    pub fn fmt_coef(&self, a: &Coef) -> String {
        match a {
            Coef::Fp(x) => x.to_string(),
            Coef::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }

    /// True when the value is a positive-sign representative (used by display).
    pub fn is_negative_display(&self, a: &Coef) -> bool {
        match a {
            Coef::Fp(_) => false,
            Coef::Rat(x) => x.is_negative(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
        assert!(is_prime_u64(u64::MAX - 58)); // 2^64 - 59 is prime
        assert!(CoefField::prime(6).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = CoefField::prime(101).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Coef::Fp(100));
        let b = f.inv(&Coef::Fp(2));
        assert_eq!(f.mul(&b, &Coef::Fp(2)), Coef::Fp(1));
    }

    #[test]
    fn rational_arithmetic() {
        let f = CoefField::Rationals;
        let a = f.from_i64(3);
        let b = f.inv(&a);
        assert_eq!(f.mul(&a, &b), f.one());
        assert_eq!(f.fmt_coef(&b), "1/3");
    }
}
