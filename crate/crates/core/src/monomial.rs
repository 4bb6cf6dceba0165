//! Monomials with weighted degrees and the monomial orders used by the engine.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, weights: &[u32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial order tag. `ElimFirst` is a block order used internally for the
/// one-variable elimination constructions: the first `k` variables are
/// compared by total degree then reverse-lex among themselves, ties broken by
/// the base order on the remaining variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    DegLex,
    Lex,
    ElimFirst(usize),
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degrevlex" | "grevlex" => Some(MonomialOrder::DegRevLex),
            "deglex" => Some(MonomialOrder::DegLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::DegRevLex => "degrevlex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::Lex => "lex",
            MonomialOrder::ElimFirst(_) => "elim",
        }
    }

    /// Compare monomials; `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => cmp_degrevlex(&a.exps, &b.exps, weights),
            MonomialOrder::DegLex => {
                let da = a.degree(weights);
                let db = b.degree(weights);
                da.cmp(&db).then_with(|| cmp_lex(&a.exps, &b.exps))
            }
            MonomialOrder::Lex => cmp_lex(&a.exps, &b.exps),
            MonomialOrder::ElimFirst(k) => {
                let k = *k;
                cmp_degrevlex(&a.exps[..k], &b.exps[..k], &weights[..k]).then_with(|| {
                    cmp_degrevlex(&a.exps[k..], &b.exps[k..], &weights[k..])
                })
            }
        }
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn cmp_degrevlex(a: &[u32], b: &[u32], weights: &[u32]) -> Ordering {
    let da: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    let db: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Reverse lex: the last variable with a differing exponent decides;
    // the monomial with the smaller exponent there is the larger one.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial { exps: e.to_vec() }
    }

    #[test]
    fn degrevlex_classic() {
        let w = [1u32, 1, 1];
        let o = MonomialOrder::DegRevLex;
        // x^2 y > x y z > y^2 z in degrevlex with x > y > z
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 1, 1]), &w), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 1]), &m(&[0, 2, 1]), &w), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0]), &w), Ordering::Greater);
    }

    #[test]
    fn lex_and_deglex() {
        let w = [1u32, 1];
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5]), &w),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::DegLex.cmp(&m(&[0, 5]), &m(&[1, 0]), &w),
            Ordering::Greater
        );
    }

    #[test]
    fn weighted_degree() {
        let w = [2u32, 3];
        assert_eq!(m(&[1, 1]).degree(&w), 5);
        let o = MonomialOrder::DegRevLex;
        // weight makes y^2 (deg 6) beat x^2 (deg 4)
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[2, 0]), &w), Ordering::Greater);
    }

    #[test]
    fn elim_block_dominates() {
        let w = [1u32, 1, 1];
        let o = MonomialOrder::ElimFirst(1);
        // any positive power of the first variable beats any monomial without it
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9]), &w), Ordering::Greater);
    }
}
