//! Submodule-level utilities shared across the library: membership with
//! witnesses, kernels, intersections, products with ideals, and minimal
//! generating sets of graded submodules.

use std::sync::Arc;

use crate::error::Result;
use crate::groebner::{MatrixGB, SpanGB};
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::vector::{vec_add, vec_is_zero, vec_mul_poly, vec_normal_form, vec_zero, Vector};

/// Generators of {c in R^k : cols·c = 0 in R^rank}, the syzygy module.
pub fn kernel_of_columns(ring: &Arc<RingSpec>, cols: &[Vector], tgt_rank: usize) -> Vec<Vector> {
    MatrixGB::new(ring, cols, tgt_rank).kernel()
}

/// Apply a list of columns to a coefficient vector: sum c_j cols_j, reduced.
pub fn combine(ring: &RingSpec, cols: &[Vector], coefs: &[Poly], tgt_rank: usize) -> Vector {
    let mut acc = vec_zero(tgt_rank);
    for (col, q) in cols.iter().zip(coefs) {
        if q.is_zero() {
            continue;
        }
        acc = vec_add(&acc, &vec_mul_poly(col, q, ring), ring);
    }
    vec_normal_form(&acc, ring)
}

/// Generators of span(a) ∩ span(b) inside R^rank, via syzygies of [a | b].
pub fn intersect_submodules(
    ring: &Arc<RingSpec>,
    a: &[Vector],
    b: &[Vector],
    rank: usize,
) -> Vec<Vector> {
    let mut cols = a.to_vec();
    cols.extend_from_slice(b);
    let ker = kernel_of_columns(ring, &cols, rank);
    let mut out = Vec::new();
    for syz in ker {
        let v = combine(ring, a, &syz[..a.len()], rank);
        if !vec_is_zero(&v) {
            out.push(v);
        }
    }
    // canonicalize
    SpanGB::new(ring, &out, rank).canonical_gens()
}

/// Generators of I · span(gens): products of ideal generators with module
/// generators.
pub fn ideal_times(
    ring: &Arc<RingSpec>,
    ideal_gens: &[Poly],
    gens: &[Vector],
) -> Vec<Vector> {
    let mut out = Vec::new();
    for f in ideal_gens {
        for g in gens {
            let v = vec_normal_form(&vec_mul_poly(g, f, ring), ring);
            if !vec_is_zero(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Minimal generating set of the graded submodule generated by `gens`
/// modulo the span of `extra` (used with `extra` = relations to minimally
/// generate a subquotient). Candidates are the canonical reduced basis, taken
/// greedily in increasing degree; sound by graded Nakayama. Errors if a
/// candidate is not homogeneous with respect to `shifts`.
pub fn minimal_generators(
    ring: &Arc<RingSpec>,
    shifts: &[i64],
    gens: &[Vector],
    extra: &[Vector],
) -> Result<Vec<Vector>> {
    let rank = shifts.len();
    let span = SpanGB::new(ring, gens, rank);
    let mut cands = span.canonical_gens();
    let fm = crate::vector::FreeModule::new(ring.clone(), shifts.to_vec());
    let mut keyed: Vec<(i64, Vector)> = Vec::with_capacity(cands.len());
    for c in cands.drain(..) {
        let d = fm.degree_of(&c)?.unwrap_or(0);
        keyed.push((d, c));
    }
    // canonical_gens is already sorted by leading term; stable sort by degree
    keyed.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<Vector> = Vec::new();
    for (_, c) in keyed {
        let mut test = kept.clone();
        test.extend_from_slice(extra);
        if !SpanGB::new(ring, &test, rank).contains(&c) {
            kept.push(c);
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingSpec;

    #[test]
    fn intersect_principal_ideals() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let a = vec![vec![parse_poly("x", &r).unwrap()]];
        let b = vec![vec![parse_poly("y", &r).unwrap()]];
        let meet = intersect_submodules(&r, &a, &b, 1);
        assert_eq!(meet.len(), 1);
        assert_eq!(meet[0][0].display(&r), "x*y");
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let gens = vec![vec![parse_poly("x^2 + x", &r).unwrap()]];
        let gens2 = vec![
            vec![parse_poly("x", &r).unwrap()],
            vec![parse_poly("x^2", &r).unwrap()],
            vec![parse_poly("y", &r).unwrap()],
        ];
        let min = minimal_generators(&r, &[0], &gens2, &[]).unwrap();
        let shown: Vec<String> = min.iter().map(|v| v[0].display(&r)).collect();
        assert_eq!(shown, vec!["x", "y"]);
        assert!(minimal_generators(&r, &[0], &gens, &[]).is_err());
    }
}
