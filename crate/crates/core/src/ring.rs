//! Graded quotient rings R = k[x_1..x_m]/J with a fixed monomial order and a
//! cached reduced Groebner basis of J. All values are immutable after
//! construction; a `RingSpec` is shared behind `Arc` and operations are pure.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coef, CoefField};
use crate::groebner;
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse;
use crate::poly::Poly;

#[derive(Debug)]
pub struct RingSpec {
    pub field: CoefField,
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
    /// Generators of the quotient ideal J as given (reduced, nonzero).
    pub quotient: Vec<Poly>,
    /// The unique reduced Groebner basis of J for the declared order.
    pub quotient_gb: Vec<Poly>,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.weights == other.weights
            && self.order == other.order
            && self.quotient_gb == other.quotient_gb
    }
}

impl RingSpec {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 1 {
                parts.push(self.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars[i], e));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Build a validated ring. Quotient generators must be homogeneous with
    /// respect to the declared weights; the reduced Groebner basis of J is
    /// computed here and cached for the life of the ring.
    pub fn new(
        field: CoefField,
        vars: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
        quotient: Vec<Poly>,
    ) -> Result<Arc<RingSpec>> {
        if vars.is_empty() {
            return Err(Error::Parse("ring needs at least one variable".into()));
        }
        {
            let mut sorted = vars.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != vars.len() {
                return Err(Error::Parse("duplicate variable names".into()));
            }
        }
        if weights.len() != vars.len() || weights.iter().any(|&w| w == 0) {
            return Err(Error::Parse("weights must be positive, one per variable".into()));
        }
        // A quotient-free copy used while computing the basis of J itself.
        let ambient = Arc::new(RingSpec {
            field: field.clone(),
            vars: vars.clone(),
            weights: weights.clone(),
            order,
            quotient: Vec::new(),
            quotient_gb: Vec::new(),
        });
        let mut gens = Vec::new();
        for g in quotient {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous(&ambient) {
                return Err(Error::NonHomogeneous(g.display(&ambient)));
            }
            gens.push(g);
        }
        let gb = groebner::ideal_groebner(&ambient, &gens);
        if gb.iter().any(|g| g.constant_coef().is_some()) {
            return Err(Error::Parse("quotient ideal is the unit ideal".into()));
        }
        Ok(Arc::new(RingSpec {
            field,
            vars,
            weights,
            order,
            quotient: gens,
            quotient_gb: gb,
        }))
    }

    /// Parse the ring description text format:
    /// ```text
    /// char: 101
    /// vars: x, y:2
    /// order: degrevlex
    /// quotient: x*y, x^3
    /// ```
    pub fn parse_text(text: &str) -> Result<Arc<RingSpec>> {
        let mut ch: Option<u64> = None;
        let mut vars: Vec<String> = Vec::new();
        let mut weights: Vec<u32> = Vec::new();
        let mut order = MonomialOrder::default();
        let mut quotient_src: Vec<String> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, val) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `key: value`, got `{line}`")))?;
            let val = val.trim();
            match key.trim() {
                "char" => {
                    ch = Some(
                        val.parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad characteristic `{val}`")))?,
                    )
                }
                "vars" => {
                    for item in val.split(',') {
                        let item = item.trim();
                        if item.is_empty() {
                            continue;
                        }
                        if let Some((name, w)) = item.split_once(':') {
                            vars.push(name.trim().to_string());
                            weights.push(
                                w.trim()
                                    .parse::<u32>()
                                    .map_err(|_| Error::Parse(format!("bad weight `{w}`")))?,
                            );
                        } else {
                            vars.push(item.to_string());
                            weights.push(1);
                        }
                    }
                }
                "order" => {
                    order = MonomialOrder::parse(val)
                        .ok_or_else(|| Error::Parse(format!("unknown order `{val}`")))?
                }
                "quotient" => {
                    for item in parse::split_top_level_commas(val) {
                        if !item.trim().is_empty() {
                            quotient_src.push(item.trim().to_string());
                        }
                    }
                }
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let ch = ch.ok_or_else(|| Error::Parse("missing `char`".into()))?;
        let field = if ch == 0 {
            CoefField::Rationals
        } else {
            CoefField::prime(ch)?
        };
        let probe = Arc::new(RingSpec {
            field: field.clone(),
            vars: vars.clone(),
            weights: weights.clone(),
            order,
            quotient: Vec::new(),
            quotient_gb: Vec::new(),
        });
        let mut quotient = Vec::new();
        for src in &quotient_src {
            quotient.push(parse::parse_poly(src, &probe)?);
        }
        RingSpec::new(field, vars, weights, order, quotient)
    }

    /// Render the ring in the same text format accepted by `parse_text`.
    pub fn to_text(&self) -> String {
        let mut out = format!("char: {}\n", self.field.characteristic());
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&self.weights)
            .map(|(v, &w)| if w == 1 { v.clone() } else { format!("{v}:{w}") })
            .collect();
        out.push_str(&format!("vars: {}\n", vars.join(", ")));
        out.push_str(&format!("order: {}\n", self.order.name()));
        if !self.quotient.is_empty() {
            let q: Vec<String> = self.quotient.iter().map(|g| g.display(self)).collect();
            out.push_str(&format!("quotient: {}\n", q.join(", ")));
        }
        out
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The unique remainder of `f` modulo the reduced Groebner basis of J.
    /// Idempotent and k-linear; polynomials are equal in R iff their normal
    /// forms are identical term sequences.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        reduce_poly(f, &self.quotient_gb, self)
    }

    pub fn is_zero_in_r(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Multivariate division: the remainder of `f` by `basis` (no term of the
/// remainder is divisible by any leading monomial of the basis).
pub fn reduce_poly(f: &Poly, basis: &[Poly], ring: &RingSpec) -> Poly {
    reduce_poly_with(f, basis, ring).0
}

/// Division with quotients: returns (remainder, q) with
/// f = sum q_i * basis_i + remainder.
pub fn reduce_poly_with(f: &Poly, basis: &[Poly], ring: &RingSpec) -> (Poly, Vec<Poly>) {
    let mut rem: Vec<(Coef, Monomial)> = Vec::new();
    let mut quot = vec![Poly::zero(); basis.len()];
    let mut cur = f.clone();
    'outer: while let Some((c, m)) = cur.leading().cloned() {
        for (bi, b) in basis.iter().enumerate() {
            if let Some((bc, bm)) = b.leading() {
                if bm.divides(&m) {
                    let q = bm.quotient(&m);
                    let factor = ring.field.div(&c, bc);
                    cur = cur.sub(&b.mul_term(&factor, &q, ring), ring);
                    quot[bi] = quot[bi].add(&Poly::monomial(ring, factor, q), ring);
                    continue 'outer;
                }
            }
        }
        rem.push((c.clone(), m.clone()));
        cur.terms.remove(0);
    }
    (Poly { terms: rem }, quot)
}

/// Arithmetic in R: exact result, reduced modulo J.
pub fn poly_arith(f: &Poly, g: &Poly, op: ArithOp, ring: &RingSpec) -> Poly {
    let raw = match op {
        ArithOp::Add => f.add(g, ring),
        ArithOp::Sub => f.sub(g, ring),
        ArithOp::Mul => f.mul(g, ring),
    };
    ring.normal_form(&raw)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}
