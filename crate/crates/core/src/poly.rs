//! Sparse multivariate polynomials in canonical form: terms sorted strictly
//! decreasing in the ring's monomial order, no zero coefficients.

use crate::field::Coef;
use crate::monomial::Monomial;
use crate::ring::RingSpec;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub terms: Vec<(Coef, Monomial)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn one(ring: &RingSpec) -> Self {
        Poly {
            terms: vec![(ring.field.one(), Monomial::one(ring.nvars()))],
        }
    }

    pub fn constant(ring: &RingSpec, n: i64) -> Self {
        let c = ring.field.from_i64(n);
        if ring.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(c, Monomial::one(ring.nvars()))],
            }
        }
    }

    pub fn var(ring: &RingSpec, i: usize) -> Self {
        Poly {
            terms: vec![(ring.field.one(), Monomial::var(ring.nvars(), i, 1))],
        }
    }

    pub fn monomial(ring: &RingSpec, c: Coef, m: Monomial) -> Self {
        if ring.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(c, m)] }
        }
    }

    pub fn leading(&self) -> Option<&(Coef, Monomial)> {
        self.terms.first()
    }

    /// Build canonical form from arbitrary (coef, monomial) pairs.
    pub fn from_terms(ring: &RingSpec, mut terms: Vec<(Coef, Monomial)>) -> Self {
        terms.sort_by(|a, b| ring.cmp_mono(&b.1, &a.1));
        let mut out: Vec<(Coef, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = ring.field.add(&last.0, &c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !ring.field.is_zero(c));
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly, ring: &RingSpec) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ring.cmp_mono(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.field.add(&self.terms[i].0, &other.terms[j].0);
                    if !ring.field.is_zero(&c) {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, ring: &RingSpec) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (ring.field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, ring: &RingSpec) -> Poly {
        self.add(&other.neg(ring), ring)
    }

    pub fn scale(&self, c: &Coef, ring: &RingSpec) -> Poly {
        if ring.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (ring.field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    /// Multiply by a single term c*m; preserves canonical order.
    pub fn mul_term(&self, c: &Coef, m: &Monomial, ring: &RingSpec) -> Poly {
        if ring.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, n)| (ring.field.mul(a, c), n.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly, ring: &RingSpec) -> Poly {
        let mut acc = Poly::zero();
        for (c, m) in &other.terms {
            acc = acc.add(&self.mul_term(c, m, ring), ring);
        }
        acc
    }

    pub fn pow(&self, e: u32, ring: &RingSpec) -> Poly {
        let mut acc = Poly::one(ring);
        for _ in 0..e {
            acc = acc.mul(self, ring);
        }
        acc
    }

    /// Weighted degree of the highest term, or None for the zero polynomial.
    pub fn degree(&self, ring: &RingSpec) -> Option<i64> {
        self.terms
            .iter()
            .map(|(_, m)| m.degree(&ring.weights))
            .max()
    }

    pub fn is_homogeneous(&self, ring: &RingSpec) -> bool {
        let mut deg = None;
        for (_, m) in &self.terms {
            let d = m.degree(&ring.weights);
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return false,
                _ => {}
            }
        }
        true
    }

    /// A unit of the graded ring: a nonzero constant.
    pub fn constant_coef(&self) -> Option<&Coef> {
        if self.terms.len() == 1 && self.terms[0].1.is_one() {
            Some(&self.terms[0].0)
        } else {
            None
        }
    }

    pub fn display(&self, ring: &RingSpec) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = ring.field.is_negative_display(c);
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let cabs = if neg { ring.field.neg(c) } else { c.clone() };
            let cs = ring.field.fmt_coef(&cabs);
            let ms = ring.fmt_monomial(m);
            if m.is_one() {
                out.push_str(&cs);
            } else if cs == "1" {
                out.push_str(&ms);
            } else {
                out.push_str(&cs);
                out.push('*');
                out.push_str(&ms);
            }
        }
        out
    }
}
