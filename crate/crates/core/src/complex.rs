//! Bounded chain complexes of finitely presented modules, chain maps,
//! homology as subquotients, induced-map tests, cones, shifts, pullbacks and
//! the width statistics. Every constructed complex has ∂∘∂ ≡ 0 and every
//! chain map has commuting squares, verified by normal forms on construction.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fpmodule::{check_well_defined, FPModule};
use crate::groebner::{MatrixGB, SpanGB};
use crate::ring::RingSpec;
use crate::submodule;
use crate::vector::{vec_is_zero, FreeModule, ModMap, Vector};

#[derive(Debug, Clone, PartialEq)]
pub struct Complex {
    pub ring: Arc<RingSpec>,
    pub terms: BTreeMap<i64, FPModule>,
    /// diffs[n]: terms[n] -> terms[n-1], matrices on ambient free modules.
    pub diffs: BTreeMap<i64, ModMap>,
}

impl Complex {
    pub fn empty(ring: Arc<RingSpec>) -> Complex {
        Complex {
            ring,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    /// Build and verify: shapes line up, differentials are well defined on
    /// the subquotients, and ∂∘∂ ≡ 0.
    pub fn build(
        ring: Arc<RingSpec>,
        lo: i64,
        terms: Vec<FPModule>,
        diffs: Vec<ModMap>,
    ) -> Result<Complex> {
        let mut tm = BTreeMap::new();
        for (k, t) in terms.into_iter().enumerate() {
            if t.ambient.rank() > 0 {
                tm.insert(lo + k as i64, t);
            }
        }
        let mut dm = BTreeMap::new();
        for (k, d) in diffs.into_iter().enumerate() {
            let n = lo + k as i64 + 1;
            if d.ncols() > 0 && d.nrows() > 0 {
                dm.insert(n, d);
            }
        }
        let c = Complex {
            ring,
            terms: tm,
            diffs: dm,
        };
        c.verify()?;
        Ok(c)
    }

    pub fn verify(&self) -> Result<()> {
        for (&n, d) in &self.diffs {
            let src = self.term(n);
            let tgt = self.term(n - 1);
            if d.ncols() != src.ambient.rank() || d.nrows() != tgt.ambient.rank() {
                return Err(Error::Internal(format!(
                    "differential at degree {n} has wrong shape"
                )));
            }
            check_well_defined(d, &src, &tgt)?;
            if let Some(d2) = self.diffs.get(&(n + 1)) {
                let comp = d.compose(d2);
                let low = self.term(n - 1);
                for col in &comp.cols {
                    if !low.element_is_zero(col) {
                        return Err(Error::Internal(format!("∂∘∂ ≠ 0 at degree {}", n + 1)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lo(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn hi(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn term(&self, n: i64) -> FPModule {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| FPModule::free(FreeModule::zero(self.ring.clone())))
    }

    pub fn has_term(&self, n: i64) -> bool {
        self.terms.contains_key(&n)
    }

    /// The differential terms[n] -> terms[n-1]; a zero map of the right
    /// shape when absent.
    pub fn diff(&self, n: i64) -> ModMap {
        match self.diffs.get(&n) {
            Some(d) => d.clone(),
            None => ModMap::zero(self.term(n).ambient.clone(), self.term(n - 1).ambient.clone()),
        }
    }

    pub fn all_terms_free(&self) -> bool {
        self.terms.values().all(|t| t.is_free_presentation())
    }

    /// Σ^k: (shift(C,k))_n = C_{n+k}, differential scaled by (-1)^k.
    pub fn shift(&self, k: i64) -> Complex {
        let mut terms = BTreeMap::new();
        for (&n, t) in &self.terms {
            terms.insert(n - k, t.clone());
        }
        let mut diffs = BTreeMap::new();
        for (&n, d) in &self.diffs {
            let d = if k.rem_euclid(2) == 1 { d.neg() } else { d.clone() };
            diffs.insert(n - k, d);
        }
        Complex {
            ring: self.ring.clone(),
            terms,
            diffs,
        }
    }

    pub fn direct_sum(&self, other: &Complex) -> Result<Complex> {
        let lo = match (self.lo(), other.lo()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => return Ok(Complex::empty(self.ring.clone())),
        };
        let hi = self.hi().unwrap_or(lo).max(other.hi().unwrap_or(lo));
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            terms.push(self.term(n).direct_sum(&other.term(n)));
            if n > lo {
                diffs.push(self.diff(n).direct_sum(&other.diff(n)));
            }
        }
        // direct_sum of ModMaps pads shapes: rebuild with correct ambient blocks
        Complex::build(self.ring.clone(), lo, terms, diffs)
    }

    /// C ⊗ F for a free module F.
    pub fn tensor_free(&self, f: &FreeModule) -> Result<Complex> {
        let idf = ModMap::identity(f);
        let mut terms = BTreeMap::new();
        for (&n, t) in &self.terms {
            terms.insert(n, t.tensor_free(f));
        }
        let mut diffs = BTreeMap::new();
        for (&n, d) in &self.diffs {
            diffs.insert(n, d.tensor(&idf));
        }
        let c = Complex {
            ring: self.ring.clone(),
            terms,
            diffs,
        };
        c.verify()?;
        Ok(c)
    }

    /// Tensor with a cyclic module R/I: same ambients, relations extended by
    /// I times each basis vector.
    pub fn tensor_cyclic(&self, ideal: &crate::ideal::Ideal) -> Result<Complex> {
        let mut terms = BTreeMap::new();
        for (&n, t) in &self.terms {
            terms.insert(n, t.quotient_by_ideal(ideal));
        }
        let c = Complex {
            ring: self.ring.clone(),
            terms,
            diffs: self.diffs.clone(),
        };
        c.verify()?;
        Ok(c)
    }
}

/// Homology H_n = ker ∂_n / (im ∂_{n+1} + relations), as a subquotient with
/// certified cycle generators and boundary relations.
#[derive(Debug, Clone)]
pub struct HomologyModule {
    pub degree: i64,
    pub module: FPModule,
}

impl HomologyModule {
    pub fn cycle_gens(&self) -> Vec<Vector> {
        self.module.gen_vectors()
    }

    pub fn boundary_span(&self) -> &SpanGB {
        self.module.rels_span()
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero_module()
    }
}

pub fn homology(c: &Complex, n: i64) -> HomologyModule {
    let ring = &c.ring;
    let t = c.term(n);
    let rank = t.ambient.rank();
    if rank == 0 {
        return HomologyModule {
            degree: n,
            module: t,
        };
    }
    let below = c.term(n - 1);
    let d_n = c.diff(n);
    let gens = t.gen_vectors();
    // cycles: {v in span(gens) : ∂v ∈ rels(term n-1)}
    let zgens: Vec<Vector> = if below.ambient.rank() == 0 {
        gens.clone()
    } else {
        let mut cols: Vec<Vector> = gens.iter().map(|g| d_n.apply(g)).collect();
        let ng = cols.len();
        cols.extend(below.rels.iter().cloned());
        let ker = MatrixGB::new(ring, &cols, below.ambient.rank()).kernel();
        let mut out = Vec::new();
        for syz in ker {
            let v = submodule::combine(ring, &gens, &syz[..ng], rank);
            if !vec_is_zero(&v) {
                out.push(v);
            }
        }
        out
    };
    let zgens = SpanGB::new(ring, &zgens, rank).canonical_gens();
    // boundaries + relations of the term
    let mut bgens: Vec<Vector> = Vec::new();
    let above = c.term(n + 1);
    if above.ambient.rank() > 0 {
        let d_up = c.diff(n + 1);
        for g in above.gen_vectors() {
            let v = d_up.apply(&g);
            if !vec_is_zero(&v) {
                bgens.push(v);
            }
        }
    }
    bgens.extend(t.rels.iter().cloned());
    let module = FPModule::subquotient(t.ambient.clone(), zgens, bgens);
    // boundaries are cycles: relations must lie in the numerator span
    let num = module.numerator_span();
    for r in &module.rels {
        if !num.contains(r) {
            panic!("internal: boundary is not a cycle at degree {n}");
        }
    }
    HomologyModule { degree: n, module }
}

pub fn is_homology_zero(c: &Complex, n: i64) -> bool {
    homology(c, n).is_zero()
}

/// A degreewise map of complexes with verified commuting squares.
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub source: Complex,
    pub target: Complex,
    pub comps: BTreeMap<i64, ModMap>,
}

impl ChainMap {
    pub fn new(source: Complex, target: Complex, comps: BTreeMap<i64, ModMap>) -> Result<ChainMap> {
        let f = ChainMap {
            source,
            target,
            comps,
        };
        f.verify()?;
        Ok(f)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.source.ring
    }

    /// Component at degree n; zero map of the right shape when absent.
    pub fn comp(&self, n: i64) -> ModMap {
        match self.comps.get(&n) {
            Some(m) => m.clone(),
            None => ModMap::zero(
                self.source.term(n).ambient.clone(),
                self.target.term(n).ambient.clone(),
            ),
        }
    }

    pub fn verify(&self) -> Result<()> {
        let degrees: Vec<i64> = {
            let mut d: Vec<i64> = self.source.terms.keys().copied().collect();
            d.extend(self.comps.keys().copied());
            d.sort();
            d.dedup();
            d
        };
        for &n in &degrees {
            let f_n = self.comp(n);
            if f_n.ncols() != self.source.term(n).ambient.rank()
                || f_n.nrows() != self.target.term(n).ambient.rank()
            {
                return Err(Error::Internal(format!(
                    "chain map component at degree {n} has wrong shape"
                )));
            }
            check_well_defined(&f_n, &self.source.term(n), &self.target.term(n))?;
            // commuting square at n: ∂^tgt f_n ≡ f_{n-1} ∂^src
            let lhs = self.target.diff(n).compose(&f_n);
            let rhs = self.comp(n - 1).compose(&self.source.diff(n));
            let below = self.target.term(n - 1);
            for (a, b) in lhs.cols.iter().zip(&rhs.cols) {
                let d = crate::vector::vec_sub(a, b, self.ring());
                if !below.element_is_zero(&d) {
                    return Err(Error::Internal(format!(
                        "chain map square does not commute at degree {n}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(c: &Complex) -> ChainMap {
        let comps = c
            .terms
            .iter()
            .map(|(&n, t)| (n, ModMap::identity(&t.ambient)))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            comps,
        }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        let mut comps = BTreeMap::new();
        let degrees: Vec<i64> = other.source.terms.keys().copied().collect();
        for n in degrees {
            comps.insert(n, self.comp(n).compose(&other.comp(n)));
        }
        ChainMap::new(other.source.clone(), self.target.clone(), comps)
    }

    pub fn shift(&self, k: i64) -> Result<ChainMap> {
        let comps = self
            .comps
            .iter()
            .map(|(&n, m)| (n - k, m.clone()))
            .collect();
        ChainMap::new(self.source.shift(k), self.target.shift(k), comps)
    }

    /// Tensor every component (and both complexes) with a free module.
    pub fn tensor_free(&self, f: &FreeModule) -> Result<ChainMap> {
        let idf = ModMap::identity(f);
        let comps = self
            .comps
            .iter()
            .map(|(&n, m)| (n, m.tensor(&idf)))
            .collect();
        ChainMap::new(
            self.source.tensor_free(f)?,
            self.target.tensor_free(f)?,
            comps,
        )
    }

    pub fn is_zero_map(&self) -> bool {
        self.comps.iter().all(|(&n, m)| {
            let tgt = self.target.term(n);
            m.cols.iter().all(|c| tgt.element_is_zero(c))
        })
    }
}

/// The induced map on homology at degree n, with zero and surjectivity tests
/// certified by lift witnesses.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub degree: i64,
    pub source: HomologyModule,
    pub target: HomologyModule,
    /// Images of the source cycle generators (target ambient coordinates).
    pub images: Vec<Vector>,
}

impl InducedMap {
    /// Every image of a source homology generator is a boundary.
    pub fn is_zero(&self) -> bool {
        let b = self.target.boundary_span();
        self.images.iter().all(|v| b.contains(v))
    }

    /// Every target homology generator lifts to image + boundaries.
    pub fn is_surjective(&self) -> bool {
        let ring = self.source.module.ring();
        let rank = self.target.module.ambient.rank();
        let mut cols = self.images.clone();
        cols.extend(self.target.module.rels.iter().cloned());
        let span = SpanGB::new(ring, &cols, rank);
        self.target.cycle_gens().iter().all(|z| span.contains(z))
    }

    /// Coordinates of each image in the target's cycle generators, modulo
    /// boundaries (a presentation of the induced map).
    pub fn matrix(&self) -> Option<ModMap> {
        let ring = self.source.module.ring();
        let rank = self.target.module.ambient.rank();
        let zgens = self.target.cycle_gens();
        let mut cols = zgens.clone();
        cols.extend(self.target.module.rels.iter().cloned());
        let gb = MatrixGB::new(ring, &cols, rank);
        let mut out_cols = Vec::new();
        for im in &self.images {
            let c = gb.lift(im)?;
            out_cols.push(c[..zgens.len()].to_vec());
        }
        let src = FreeModule::std(ring.clone(), self.images.len());
        let tgt = FreeModule::std(ring.clone(), zgens.len());
        Some(ModMap::new(src, tgt, out_cols))
    }
}

pub fn induced_map(f: &ChainMap, n: i64) -> InducedMap {
    let src_h = homology(&f.source, n);
    let tgt_h = homology(&f.target, n);
    let fc = f.comp(n);
    let images = src_h.cycle_gens().iter().map(|z| fc.apply(z)).collect();
    InducedMap {
        degree: n,
        source: src_h,
        target: tgt_h,
        images,
    }
}

/// Mapping cone with the convention ∂(t, x) = (−∂t, f(t) + ∂x); the source of
/// f sits in degree n-1 inside cone degree n.
pub fn cone(f: &ChainMap) -> Result<Complex> {
    let ring = f.ring().clone();
    let t = &f.source;
    let x = &f.target;
    let lo = match (t.lo(), x.lo()) {
        (Some(a), Some(b)) => (a + 1).min(b),
        (Some(a), None) => a + 1,
        (None, Some(b)) => b,
        (None, None) => return Ok(Complex::empty(ring)),
    };
    let hi = t.hi().map(|h| h + 1).unwrap_or(lo).max(x.hi().unwrap_or(lo));
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for n in lo..=hi {
        terms.push(t.term(n - 1).direct_sum(&x.term(n)));
        if n > lo {
            // block matrix [[-∂^T, 0], [f, ∂^X]]
            let dt = t.diff(n - 1).neg();
            let dx = x.diff(n);
            let fc = f.comp(n - 1);
            let rows = dt.nrows() + dx.nrows();
            let mut cols: Vec<Vector> = Vec::new();
            for j in 0..dt.ncols() {
                let mut v = dt.cols[j].clone();
                v.extend_from_slice(&fc.cols[j]);
                debug_assert_eq!(v.len(), rows);
                cols.push(v);
            }
            for j in 0..dx.ncols() {
                let mut v = crate::vector::vec_zero(dt.nrows());
                v.extend_from_slice(&dx.cols[j]);
                cols.push(v);
            }
            let src = terms[(n - lo) as usize].ambient.clone();
            let tgt = terms[(n - 1 - lo) as usize].ambient.clone();
            diffs.push(ModMap::new(src, tgt, cols));
        }
    }
    Complex::build(ring, lo, terms, diffs)
}

/// min_c, min, supph, wid, width of a bounded complex.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthStats {
    /// Least degree with a nonzero term (None for the zero complex).
    pub min_c: Option<i64>,
    /// Least degree with nonzero homology (None for an exact complex).
    pub min: Option<i64>,
    pub supph: Vec<i64>,
    /// None encodes wid = -infinity (acyclic complex).
    pub wid: Option<i64>,
    pub width: i64,
}

pub fn width_stats(c: &Complex) -> WidthStats {
    let mut min_c = None;
    for (&n, t) in &c.terms {
        if !t.is_zero_module() {
            min_c = Some(n);
            break;
        }
    }
    let mut supph = Vec::new();
    if let (Some(lo), Some(hi)) = (c.lo(), c.hi()) {
        for n in lo..=hi {
            if !is_homology_zero(c, n) {
                supph.push(n);
            }
        }
    }
    let min = supph.first().copied();
    let wid = if supph.is_empty() {
        None
    } else {
        Some(supph[supph.len() - 1] - supph[0])
    };
    WidthStats {
        min_c,
        min,
        supph,
        wid,
        width: wid.unwrap_or(0),
    }
}

/// Degreewise pullback of g: Q -> Y and b: M -> Y, presented as
/// ker(Q ⊕ M -> Y) via syzygies, with the two projections.
pub fn pullback_complex(g: &ChainMap, b: &ChainMap) -> Result<(Complex, ChainMap, ChainMap)> {
    if g.target != b.target {
        return Err(Error::Precondition("pullback requires a common target".into()));
    }
    let ring = g.ring().clone();
    let q = &g.source;
    let m = &b.source;
    let y = &g.target;
    let lo = match (q.lo(), m.lo()) {
        (Some(a), Some(c)) => a.min(c),
        (Some(a), None) => a,
        (None, Some(c)) => c,
        (None, None) => {
            let e = Complex::empty(ring.clone());
            let id = ChainMap::identity(&e);
            return Ok((e, id.clone(), id));
        }
    };
    let hi = q.hi().unwrap_or(lo).max(m.hi().unwrap_or(lo));
    let mut terms = Vec::new();
    let mut diffs: Vec<ModMap> = Vec::new();
    let mut nu_comps = BTreeMap::new();
    let mut mu_comps = BTreeMap::new();
    for n in lo..=hi {
        let qt = q.term(n);
        let mt = m.term(n);
        let yt = y.term(n);
        let qa = qt.ambient.rank();
        let ma = mt.ambient.rank();
        let ambient = qt.ambient.direct_sum(&mt.ambient);
        // kernel generators: pairs (u, v) with g(u) - b(v) ≡ 0 in Y_n
        let qgens = qt.gen_vectors();
        let mgens = mt.gen_vectors();
        let mut cols: Vec<Vector> = Vec::new();
        for u in &qgens {
            cols.push(g.comp(n).apply(u));
        }
        for v in &mgens {
            cols.push(crate::vector::vec_neg(&b.comp(n).apply(v), &ring));
        }
        let ncoef = cols.len();
        cols.extend(yt.rels.iter().cloned());
        let gens: Vec<Vector> = if yt.ambient.rank() == 0 {
            // everything is a cycle pair
            let mut gens = Vec::new();
            for u in &qgens {
                let mut w = u.clone();
                w.extend(crate::vector::vec_zero(ma));
                gens.push(w);
            }
            for v in &mgens {
                let mut w = crate::vector::vec_zero(qa);
                w.extend_from_slice(v);
                gens.push(w);
            }
            gens
        } else {
            let ker = MatrixGB::new(&ring, &cols, yt.ambient.rank()).kernel();
            let mut gens = Vec::new();
            for syz in ker {
                let cu = &syz[..qgens.len()];
                let cv = &syz[qgens.len()..ncoef];
                let mut w = submodule::combine(&ring, &qgens, cu, qa);
                w.extend(submodule::combine(&ring, &mgens, cv, ma));
                if !vec_is_zero(&w) {
                    gens.push(w);
                }
            }
            gens
        };
        let mut rels: Vec<Vector> = Vec::new();
        for r in &qt.rels {
            let mut w = r.clone();
            w.extend(crate::vector::vec_zero(ma));
            rels.push(w);
        }
        for r in &mt.rels {
            let mut w = crate::vector::vec_zero(qa);
            w.extend_from_slice(r);
            rels.push(w);
        }
        let gens = SpanGB::new(&ring, &gens, ambient.rank()).canonical_gens();
        terms.push(FPModule::subquotient(ambient.clone(), gens, rels));
        if n > lo {
            diffs.push(q.diff(n).direct_sum(&m.diff(n)));
        }
        // projections
        let mut nu_cols = Vec::new();
        let mut mu_cols = Vec::new();
        for j in 0..ambient.rank() {
            let mut u = crate::vector::vec_zero(qa);
            let mut v = crate::vector::vec_zero(ma);
            if j < qa {
                u[j] = crate::poly::Poly::one(&ring);
            } else {
                v[j - qa] = crate::poly::Poly::one(&ring);
            }
            nu_cols.push(u);
            mu_cols.push(v);
        }
        nu_comps.insert(n, ModMap::new(ambient.clone(), qt.ambient.clone(), nu_cols));
        mu_comps.insert(n, ModMap::new(ambient, mt.ambient.clone(), mu_cols));
    }
    let pb = Complex::build(ring.clone(), lo, terms, diffs)?;
    let nu = ChainMap::new(pb.clone(), q.clone(), nu_comps)?;
    let mu = ChainMap::new(pb.clone(), m.clone(), mu_comps)?;
    // universal square: g∘nu ≡ b∘mu on the pullback's generators
    for (&n, _) in &pb.terms {
        let lhs = g.comp(n).compose(&nu.comp(n));
        let rhs = b.comp(n).compose(&mu.comp(n));
        let yt = y.term(n);
        for gen in pb.term(n).gen_vectors() {
            let d = crate::vector::vec_sub(&lhs.apply(&gen), &rhs.apply(&gen), &ring);
            if !yt.element_is_zero(&d) {
                return Err(Error::Internal("pullback square does not commute".into()));
            }
        }
    }
    Ok((pb, nu, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn two_term(r: &Arc<RingSpec>, p: &str) -> Complex {
        // [R --p--> R] in degrees 1, 0
        let f1 = FreeModule::std(r.clone(), 1);
        let f0 = FreeModule::std(r.clone(), 1);
        let d = ModMap::new(
            f1.clone(),
            f0.clone(),
            vec![vec![parse_poly(p, r).unwrap()]],
        );
        Complex::build(
            r.clone(),
            0,
            vec![FPModule::free(f0), FPModule::free(f1)],
            vec![d],
        )
        .unwrap()
    }

    #[test]
    fn homology_of_multiplication() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = two_term(&r, "x");
        // H_0 = R/(x) ≠ 0, H_1 = ker(x) = 0
        assert!(!is_homology_zero(&c, 0));
        assert!(is_homology_zero(&c, 1));

        let r2 = RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap();
        let c2 = two_term(&r2, "x");
        let h1 = homology(&c2, 1);
        assert!(!h1.is_zero());
        let gens = h1.cycle_gens();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0][0].display(&r2), "y");
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = two_term(&r, "x");
        let id = ChainMap::identity(&c);
        let cn = cone(&id).unwrap();
        let stats = width_stats(&cn);
        assert!(stats.supph.is_empty());
        assert_eq!(stats.width, 0);
        assert_eq!(stats.wid, None);
    }

    #[test]
    fn shift_and_width() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let c = two_term(&r, "x");
        let s = c.shift(2);
        assert_eq!(s.term(-2).ambient.rank(), 1);
        assert_eq!(s.term(-1).ambient.rank(), 1);
        let sum = c.direct_sum(&c.shift(-2)).unwrap();
        let st = width_stats(&sum);
        assert_eq!(st.supph, vec![0, 2]);
        assert_eq!(st.width, 2);
        assert_eq!(st.min, Some(0));
        assert_eq!(st.min_c, Some(0));
    }

    #[test]
    fn induced_map_identity_surjective() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = two_term(&r, "x");
        let id = ChainMap::identity(&c);
        let ind = induced_map(&id, 0);
        assert!(ind.is_surjective());
        assert!(!ind.is_zero());
    }

    #[test]
    fn pullback_along_identity() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = two_term(&r, "x");
        let id = ChainMap::identity(&c);
        let g = ChainMap::identity(&c);
        let (pb, nu, _mu) = pullback_complex(&g, &id).unwrap();
        // Q' ≅ source of g: homology agrees in all degrees
        for n in 0..=1 {
            let h_pb = homology(&pb, n);
            let h_c = homology(&c, n);
            assert_eq!(h_pb.is_zero(), h_c.is_zero(), "degree {n}");
        }
        let ind = induced_map(&nu, 0);
        assert!(ind.is_surjective());
    }

    #[test]
    fn pullback_of_zero_maps_is_direct_sum() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = two_term(&r, "x");
        let zero_to = two_term(&r, "x^2");
        let z1 = ChainMap::new(
            c.clone(),
            zero_to.clone(),
            BTreeMap::new(),
        )
        .unwrap();
        let z2 = ChainMap::new(c.clone(), zero_to.clone(), BTreeMap::new()).unwrap();
        let (pb, _, _) = pullback_complex(&z1, &z2).unwrap();
        for n in 0..=1 {
            assert_eq!(pb.term(n).ambient.rank(), 2);
        }
    }
}
