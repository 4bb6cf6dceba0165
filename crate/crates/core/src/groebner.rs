//! Buchberger engine for submodules of free modules over R = k[x]/J.
//!
//! Computations lift to the ambient polynomial ring with the generators of J
//! adjoined in every coordinate. The module order is position-over-term with
//! lower positions greater, which doubles as the elimination order used by
//! the lift/kernel constructions. Pair selection uses the sugar strategy with
//! deterministic tie-breaking, so outputs are reproducible; reduced bases are
//! unique for a fixed order.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::field::Coef;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::vector::{vec_is_zero, vec_mul_term, vec_normal_form, vec_sub, vec_zero, Vector};

/// Leading term of a vector under POT: the nonzero component with the
/// smallest index, then the ring order inside that component.
pub fn leading_term(v: &Vector) -> Option<(usize, &Coef, &Monomial)> {
    for (i, p) in v.iter().enumerate() {
        if let Some((c, m)) = p.leading() {
            return Some((i, c, m));
        }
    }
    None
}

fn cmp_mod_mono(ring: &RingSpec, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    // smaller component index is greater
    match a.0.cmp(&b.0) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => ring.cmp_mono(a.1, b.1),
    }
}

fn sugar_of(v: &Vector, ring: &RingSpec) -> i64 {
    v.iter()
        .filter_map(|p| p.degree(ring))
        .max()
        .unwrap_or(0)
}

/// Full reduction of `v` by `basis`; every term of the remainder is reduced.
pub fn reduce_vector(v: &Vector, basis: &[Vector], ring: &RingSpec) -> Vector {
    reduce_vector_with(v, basis, ring).0
}

/// Reduction with quotient tracking: v = sum q_j basis_j + remainder.
pub fn reduce_vector_with(v: &Vector, basis: &[Vector], ring: &RingSpec) -> (Vector, Vec<Poly>) {
    let rank = v.len();
    let mut quot = vec![Poly::zero(); basis.len()];
    let mut rem = vec![Vec::new(); rank];
    let mut cur = v.clone();
    let leads: Vec<Option<(usize, Coef, Monomial)>> = basis
        .iter()
        .map(|b| leading_term(b).map(|(i, c, m)| (i, c.clone(), m.clone())))
        .collect();
    'outer: while let Some((comp, c, m)) = leading_term(&cur).map(|(i, c, m)| (i, c.clone(), m.clone())) {
        for (bi, lead) in leads.iter().enumerate() {
            if let Some((bc, blc, blm)) = lead {
                if *bc == comp && blm.divides(&m) {
                    let q = blm.quotient(&m);
                    let factor = ring.field.div(&c, blc);
                    cur = vec_sub(&cur, &vec_mul_term(&basis[bi], &factor, &q, ring), ring);
                    quot[bi] = quot[bi].add(&Poly::monomial(ring, factor, q), ring);
                    continue 'outer;
                }
            }
        }
        // irreducible leading term: move it to the remainder
        rem[comp].push((c, m.clone()));
        cur[comp].terms.remove(0);
    }
    let rem = rem
        .into_iter()
        .map(|terms| Poly { terms })
        .collect::<Vector>();
    (rem, quot)
}

struct Pair {
    i: usize,
    j: usize,
    sugar: i64,
    lcm_deg: i64,
}

/// Buchberger with sugar selection. Input vectors over the ambient ring;
/// returns the unique reduced Groebner basis of their span (over k[x], with
/// whatever columns the caller adjoined). Output sorted by descending leading
/// module monomial, leading coefficients 1.
pub fn buchberger(ring: &RingSpec, input: Vec<Vector>, rank: usize) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut sugars: Vec<i64> = Vec::new();
    for v in input {
        if !vec_is_zero(&v) {
            sugars.push(sugar_of(&v, ring));
            basis.push(v);
        }
    }
    let _ = rank;
    let mut pairs: Vec<Pair> = Vec::new();
    let add_pairs = |pairs: &mut Vec<Pair>, basis: &[Vector], sugars: &[i64], t: usize| {
        let (tc, _, tm) = match leading_term(&basis[t]) {
            Some(x) => x,
            None => return,
        };
        for i in 0..t {
            if let Some((ic, _, im)) = leading_term(&basis[i]) {
                if ic != tc {
                    continue;
                }
                // product criterion, valid for the rank-one (ideal) case only
                if basis[t].len() == 1 && im.coprime(tm) {
                    continue;
                }
                let lcm = im.lcm(tm);
                let lcm_deg = lcm.degree(&ring.weights);
                let s = (sugars[i] + (lcm_deg - im.degree(&ring.weights)))
                    .max(sugars[t] + (lcm_deg - tm.degree(&ring.weights)));
                pairs.push(Pair {
                    i,
                    j: t,
                    sugar: s,
                    lcm_deg,
                });
            }
        }
    };
    for t in 0..basis.len() {
        add_pairs(&mut pairs, &basis, &sugars, t);
    }
    while !pairs.is_empty() {
        // deterministic sugar-first selection
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            if (a.sugar, a.lcm_deg, a.i, a.j) < (b.sugar, b.lcm_deg, b.i, b.j) {
                best = k;
            }
        }
        let Pair { i, j, sugar, .. } = pairs.swap_remove(best);
        let (ic, icf, im) = match leading_term(&basis[i]) {
            Some(x) => (x.0, x.1.clone(), x.2.clone()),
            None => continue,
        };
        let (_, jcf, jm) = match leading_term(&basis[j]) {
            Some(x) => (x.0, x.1.clone(), x.2.clone()),
            None => continue,
        };
        // chain criterion: an already-present element strictly dividing the
        // lcm in the same component lets both sub-pairs cover this one
        let lcm = im.lcm(&jm);
        let mut skip = false;
        for (k, b) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if let Some((kc, _, km)) = leading_term(b) {
                if kc == ic && km.divides(&lcm) && *km != lcm {
                    let covered = |a: usize, b2: usize| {
                        !pairs.iter().any(|p| {
                            (p.i == a.min(b2) && p.j == a.max(b2)) || (p.i == a.max(b2) && p.j == a.min(b2))
                        })
                    };
                    if covered(i, k) && covered(j, k) {
                        skip = true;
                        break;
                    }
                }
            }
        }
        if skip {
            continue;
        }
        let qi = im.quotient(&lcm);
        let qj = jm.quotient(&lcm);
        let one = ring.field.one();
        let a = vec_mul_term(&basis[i], &ring.field.div(&one, &icf), &qi, ring);
        let b = vec_mul_term(&basis[j], &ring.field.div(&one, &jcf), &qj, ring);
        let s_vec = vec_sub(&a, &b, ring);
        let red = reduce_vector(&s_vec, &basis, ring);
        if !vec_is_zero(&red) {
            let t = basis.len();
            basis.push(red);
            sugars.push(sugar.max(sugar_of(&basis[t], ring)));
            add_pairs(&mut pairs, &basis, &sugars, t);
        }
    }
    interreduce(ring, basis)
}

/// Tail-reduce every element against the others, normalize leading
/// coefficients and sort: the unique reduced Groebner basis.
fn interreduce(ring: &RingSpec, mut basis: Vec<Vector>) -> Vec<Vector> {
    // drop elements whose leading term another element's leading term divides
    loop {
        let mut removed = false;
        'scan: for i in 0..basis.len() {
            let (ic, _, im) = match leading_term(&basis[i]) {
                Some(x) => (x.0, x.1.clone(), x.2.clone()),
                None => {
                    basis.remove(i);
                    removed = true;
                    break 'scan;
                }
            };
            for (k, b) in basis.iter().enumerate() {
                if k == i {
                    continue;
                }
                if let Some((kc, _, km)) = leading_term(b) {
                    if kc == ic && km.divides(&im) {
                        basis.remove(i);
                        removed = true;
                        break 'scan;
                    }
                }
            }
        }
        if !removed {
            break;
        }
    }
    // full tail reduction
    let mut out: Vec<Vector> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<Vector> = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.clone())
            .collect();
        let red = reduce_vector(&basis[i], &others, ring);
        if !vec_is_zero(&red) {
            out.push(red);
        }
    }
    // monic
    for v in &mut out {
        if let Some((_, c, _)) = leading_term(v) {
            let inv = ring.field.inv(c);
            for p in v.iter_mut() {
                *p = p.scale(&inv, ring);
            }
        }
    }
    out.sort_by(|a, b| {
        let la = leading_term(a).map(|(i, _, m)| (i, m.clone()));
        let lb = leading_term(b).map(|(i, _, m)| (i, m.clone()));
        match (la, lb) {
            (Some((ia, ma)), Some((ib, mb))) => cmp_mod_mono(ring, (ib, &mb), (ia, &ma)),
            _ => Ordering::Equal,
        }
    });
    out
}

/// Reduced Groebner basis of an ideal of the ambient polynomial ring.
pub fn ideal_groebner(ring: &RingSpec, gens: &[Poly]) -> Vec<Poly> {
    let input: Vec<Vector> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| vec![g.clone()])
        .collect();
    buchberger(ring, input, 1)
        .into_iter()
        .map(|mut v| v.remove(0))
        .collect()
}

/// Adjoin the quotient generators in every coordinate: the lift of a
/// submodule of (R = k[x]/J)^rank to the ambient polynomial ring.
pub fn with_quotient_columns(ring: &RingSpec, gens: &[Vector], rank: usize) -> Vec<Vector> {
    let mut all: Vec<Vector> = gens.to_vec();
    for g in &ring.quotient_gb {
        for t in 0..rank {
            let mut v = vec_zero(rank);
            v[t] = g.clone();
            all.push(v);
        }
    }
    all
}

/// Groebner basis of the span of `gens` + J·F inside F = R^rank;
/// normal forms against it decide membership over R.
#[derive(Debug, Clone)]
pub struct SpanGB {
    pub ring: Arc<RingSpec>,
    pub rank: usize,
    pub gb: Vec<Vector>,
}

impl SpanGB {
    pub fn new(ring: &Arc<RingSpec>, gens: &[Vector], rank: usize) -> Self {
        let all = with_quotient_columns(ring, gens, rank);
        let gb = buchberger(ring, all, rank);
        SpanGB {
            ring: ring.clone(),
            rank,
            gb,
        }
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        reduce_vector(v, &self.gb, &self.ring)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        vec_is_zero(&self.normal_form(v))
    }

    pub fn contains_all(&self, vs: &[Vector]) -> bool {
        vs.iter().all(|v| self.contains(v))
    }

    /// Same submodule of R^rank: mutual containment of generators.
    pub fn equals(&self, other: &SpanGB) -> bool {
        self.gb == other.gb
    }

    /// The reduced basis with elements lying in J·F filtered out: the
    /// canonical generators of the submodule over R.
    pub fn canonical_gens(&self) -> Vec<Vector> {
        self.gb
            .iter()
            .filter(|v| !vec_is_zero(&vec_normal_form(v, &self.ring)))
            .cloned()
            .collect()
    }
}

/// Witness-producing engine for one matrix: membership lifts and the kernel
/// over R, via a Groebner basis of {(col_j, e_j)} ∪ {(J g e_t, 0)} in
/// F ⊕ R^k under the block order with F dominating.
#[derive(Debug, Clone)]
pub struct MatrixGB {
    pub ring: Arc<RingSpec>,
    pub tgt_rank: usize,
    pub src_rank: usize,
    gb: Vec<Vector>,
}

impl MatrixGB {
    pub fn new(ring: &Arc<RingSpec>, cols: &[Vector], tgt_rank: usize) -> Self {
        let k = cols.len();
        let total = tgt_rank + k;
        let mut gens: Vec<Vector> = Vec::with_capacity(k);
        for (j, c) in cols.iter().enumerate() {
            let mut v = c.clone();
            v.resize(total, Poly::zero());
            v[tgt_rank + j] = Poly::one(ring);
            gens.push(v);
        }
        for g in &ring.quotient_gb {
            for t in 0..tgt_rank {
                let mut v = vec_zero(total);
                v[t] = g.clone();
                gens.push(v);
            }
        }
        let gb = buchberger(ring, gens, total);
        MatrixGB {
            ring: ring.clone(),
            tgt_rank,
            src_rank: k,
            gb,
        }
    }

    /// If `target` lies in the column span modulo J, the canonical witness
    /// coefficients c with cols·c ≡ target (mod J); otherwise None.
    pub fn lift(&self, target: &Vector) -> Option<Vec<Poly>> {
        let mut v = target.clone();
        v.resize(self.tgt_rank + self.src_rank, Poly::zero());
        let red = reduce_vector(&v, &self.gb, &self.ring);
        if red[..self.tgt_rank].iter().all(|p| p.is_zero()) {
            Some(red[self.tgt_rank..].iter().map(|p| p.neg(&self.ring)).collect())
        } else {
            None
        }
    }

    /// Generators of {c in R^k : cols·c ≡ 0 mod J}, reduced mod J,
    /// zero columns dropped.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for v in &self.gb {
            if v[..self.tgt_rank].iter().all(|p| p.is_zero()) {
                let tail: Vector = vec_normal_form(&v[self.tgt_rank..].to_vec(), &self.ring);
                if !vec_is_zero(&tail) {
                    out.push(tail);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::RingSpec;

    fn qq_xy() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 0\nvars: x, y").unwrap()
    }

    fn f2_mod_xy() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap()
    }

    #[test]
    fn ideal_gb_examples() {
        let r = qq_xy();
        let gens = vec![
            parse_poly("x", &r).unwrap(),
            parse_poly("x + y", &r).unwrap(),
        ];
        let gb = ideal_groebner(&r, &gens);
        let shown: Vec<String> = gb.iter().map(|g| g.display(&r)).collect();
        assert_eq!(shown, vec!["x", "y"]);

        // permuted input gives the identical reduced basis
        let gb2 = ideal_groebner(&r, &[gens[1].clone(), gens[0].clone()]);
        assert_eq!(gb, gb2);

        // zero submodule
        assert!(ideal_groebner(&r, &[]).is_empty());
    }

    #[test]
    fn quotient_ring_canonical_gens() {
        let r = f2_mod_xy();
        let g = parse_poly("x^2 + x*y", &r).unwrap();
        let span = SpanGB::new(&r, &[vec![g]], 1);
        let gens = span.canonical_gens();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0][0].display(&r), "x^2");
    }

    #[test]
    fn lift_examples() {
        let r = qq_xy();
        let x = parse_poly("x", &r).unwrap();
        let y = parse_poly("y", &r).unwrap();
        let m = MatrixGB::new(&r, &[vec![x.clone()]], 1);
        let c = m.lift(&vec![parse_poly("x*y", &r).unwrap()]).unwrap();
        assert_eq!(c[0].display(&r), "y");

        let m2 = MatrixGB::new(&r, &[vec![x.clone()], vec![y.clone()]], 1);
        assert!(m2.lift(&vec![Poly::one(&r)]).is_none());

        let r2 = f2_mod_xy();
        let g = parse_poly("x^2 + x*y", &r2).unwrap();
        let m3 = MatrixGB::new(&r2, &[vec![g]], 1);
        let c3 = m3.lift(&vec![parse_poly("x^2", &r2).unwrap()]).unwrap();
        assert_eq!(c3[0].display(&r2), "1");
    }

    #[test]
    fn kernel_examples() {
        let r = qq_xy();
        let x = parse_poly("x", &r).unwrap();
        let y = parse_poly("y", &r).unwrap();
        // m = (x y): kernel generated by the Koszul syzygy (y, -x)
        let m = MatrixGB::new(&r, &[vec![x.clone()], vec![y.clone()]], 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0][0].display(&r), "y");
        assert_eq!(ker[0][1].display(&r), "-x");

        // identity has zero kernel over R
        let r2 = f2_mod_xy();
        let id = MatrixGB::new(&r2, &[vec![Poly::one(&r2)]], 1);
        assert!(id.kernel().is_empty());

        // m = (x) over F2[x,y]/(xy): Ann(x) = (y)
        let xm = MatrixGB::new(&r2, &[vec![parse_poly("x", &r2).unwrap()]], 1);
        let ker2 = xm.kernel();
        assert_eq!(ker2.len(), 1);
        assert_eq!(ker2[0][0].display(&r2), "y");
    }

    #[test]
    fn lift_round_trip_property() {
        let r = f2_mod_xy();
        let cols = vec![
            vec![parse_poly("x^2 + y", &r).unwrap()],
            vec![parse_poly("y^3", &r).unwrap()],
        ];
        let m = MatrixGB::new(&r, &cols, 1);
        let target = vec![parse_poly("x^2*y + y^2 + y^3", &r).unwrap()];
        if let Some(c) = m.lift(&target) {
            // verify cols·c - target ≡ 0 mod J
            let mut acc = Poly::zero();
            for (col, q) in cols.iter().zip(&c) {
                acc = acc.add(&col[0].mul(q, &r), &r);
            }
            let diff = acc.sub(&target[0], &r);
            assert!(r.is_zero_in_r(&diff));
        } else {
            panic!("expected member");
        }
    }
}
