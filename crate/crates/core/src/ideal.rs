//! Ideals of R given by generating sets, with products, powers, bracket
//! powers, sums, and intersection via the standard one-variable elimination
//! construction.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{self, MatrixGB, SpanGB};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    pub ring: Arc<RingSpec>,
    pub gens: Vec<Poly>,
}

impl Ideal {
    /// Normalize: reduce generators modulo J, drop zeros and duplicates.
    pub fn new(ring: Arc<RingSpec>, gens: Vec<Poly>) -> Ideal {
        let mut out: Vec<Poly> = Vec::new();
        for g in gens {
            let nf = ring.normal_form(&g);
            if !nf.is_zero() && !out.contains(&nf) {
                out.push(nf);
            }
        }
        Ideal { ring, gens: out }
    }

    pub fn zero(ring: Arc<RingSpec>) -> Ideal {
        Ideal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Arc<RingSpec>) -> Ideal {
        let one = Poly::one(&ring);
        Ideal {
            ring,
            gens: vec![one],
        }
    }

    pub fn span(&self) -> SpanGB {
        let cols: Vec<_> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        SpanGB::new(&self.ring, &cols, 1)
    }

    pub fn matrix_gb(&self) -> MatrixGB {
        let cols: Vec<_> = self.gens.iter().map(|g| vec![g.clone()]).collect();
        MatrixGB::new(&self.ring, &cols, 1)
    }

    /// The canonical reduced basis over R (pure-J elements filtered).
    pub fn reduced_basis(&self) -> Vec<Poly> {
        self.span()
            .canonical_gens()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    pub fn canonicalized(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            gens: self.reduced_basis(),
        }
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.span().contains(&vec![f.clone()])
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let span = self.span();
        other.gens.iter().all(|g| span.contains(&vec![g.clone()]))
    }

    /// Membership witness: coefficients c with sum c_i gens_i ≡ f (mod J).
    pub fn lift(&self, f: &Poly) -> Option<Vec<Poly>> {
        self.matrix_gb().lift(&vec![f.clone()])
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(&Poly::one(&self.ring))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b, &self.ring));
            }
        }
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// I^k; the 0th power is the unit ideal.
    pub fn power(&self, k: u32) -> Ideal {
        if k == 0 {
            return Ideal::unit(self.ring.clone());
        }
        // all degree-k products of the generators (multiset combinations)
        let g = self.gens.len();
        let mut out: Vec<Poly> = Vec::new();
        let mut idx = vec![0usize; k as usize];
        if g == 0 {
            return Ideal::zero(self.ring.clone());
        }
        loop {
            let mut p = Poly::one(&self.ring);
            for &i in &idx {
                p = p.mul(&self.gens[i], &self.ring);
            }
            out.push(p);
            // next non-decreasing index tuple
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return Ideal::new(self.ring.clone(), out);
                }
                pos -= 1;
                if idx[pos] + 1 < g {
                    idx[pos] += 1;
                    for t in pos + 1..idx.len() {
                        idx[t] = idx[pos];
                    }
                    break;
                }
            }
        }
    }

    /// Bracket power (s̃^r): r-th powers of the declared generating sequence.
    pub fn bracket_power(&self, r: u32) -> Ideal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.pow(r, &self.ring))
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// Intersection via the one-variable elimination construction:
    /// (I ∩ I')·lift = (t·(I+J) + (1-t)·(I'+J)) ∩ k[x] computed with a block
    /// order eliminating t, then reduced back modulo J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let ring = &self.ring;
        let next = elimination_ring(ring);
        let t = Poly::var(&next, 0);
        let one_minus_t = Poly::one(&next).sub(&t, &next);
        let mut gens = Vec::new();
        for f in self.gens.iter().chain(&ring.quotient_gb) {
            gens.push(t.mul(&promote(f, &next), &next));
        }
        for f in other.gens.iter().chain(&ring.quotient_gb) {
            gens.push(one_minus_t.mul(&promote(f, &next), &next));
        }
        let gb = groebner::ideal_groebner(&next, &gens);
        let mut out = Vec::new();
        for g in gb {
            if g.terms.iter().all(|(_, m)| m.exps[0] == 0) {
                out.push(demote(&g, ring));
            }
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }
}

/// The ambient ring with one fresh elimination variable prepended.
fn elimination_ring(ring: &RingSpec) -> Arc<RingSpec> {
    let mut vars = vec!["@t".to_string()];
    vars.extend(ring.vars.iter().cloned());
    let mut weights = vec![1u32];
    weights.extend_from_slice(&ring.weights);
    Arc::new(RingSpec {
        field: ring.field.clone(),
        vars,
        weights,
        order: MonomialOrder::ElimFirst(1),
        quotient: Vec::new(),
        quotient_gb: Vec::new(),
    })
}

fn promote(f: &Poly, next: &RingSpec) -> Poly {
    let terms = f
        .terms
        .iter()
        .map(|(c, m)| {
            let mut exps = vec![0u32];
            exps.extend_from_slice(&m.exps);
            (c.clone(), Monomial { exps })
        })
        .collect();
    Poly::from_terms(next, terms)
}

fn demote(f: &Poly, ring: &RingSpec) -> Poly {
    let terms = f
        .terms
        .iter()
        .map(|(c, m)| {
            (
                c.clone(),
                Monomial {
                    exps: m.exps[1..].to_vec(),
                },
            )
        })
        .collect();
    Poly::from_terms(ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ideal(r: &Arc<RingSpec>, gens: &[&str]) -> Ideal {
        Ideal::new(
            r.clone(),
            gens.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
        )
    }

    #[test]
    fn power_and_bracket() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let m = ideal(&r, &["x", "y"]);
        let sq = m.power(2);
        let shown: Vec<String> = sq.gens.iter().map(|g| g.display(&r)).collect();
        assert_eq!(shown, vec!["x^2", "x*y", "y^2"]);
        let br = m.bracket_power(3);
        let shown: Vec<String> = br.gens.iter().map(|g| g.display(&r)).collect();
        assert_eq!(shown, vec!["x^3", "y^3"]);
        // bracket power inside ordinary power, ordinary d-th power inside bracket
        assert!(m.power(3).contains_ideal(&br));
        assert!(br.contains_ideal(&m.power(6)));
    }

    #[test]
    fn intersection_by_elimination() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let meet = a.intersection(&b).unwrap();
        assert_eq!(meet.gens.len(), 1);
        assert_eq!(meet.gens[0].display(&r), "x*y");
    }

    #[test]
    fn intersection_in_quotient_ring() {
        let r = RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let meet = a.intersection(&b).unwrap();
        // in R = F2[x,y]/(xy), (x) ∩ (y) = 0
        assert!(meet.is_zero(), "got {:?}", meet.gens);
    }

    #[test]
    fn proper_and_membership() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let m = ideal(&r, &["x", "y"]);
        assert!(m.is_proper());
        assert!(!Ideal::unit(r.clone()).is_proper());
        let f = parse_poly("x^2 + x*y", &r).unwrap();
        let w = m.lift(&f).unwrap();
        // witness recombines to f
        let mut acc = Poly::zero();
        for (c, g) in w.iter().zip(&m.gens) {
            acc = acc.add(&c.mul(g, &r), &r);
        }
        assert_eq!(acc, f);
    }
}
