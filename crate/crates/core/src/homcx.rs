//! Hom complexes of bounded complexes of free modules, the annihilator of
//! End up to homotopy, and null-homotopy witnesses solved as one lift through
//! the Hom-complex differential.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{homology, ChainMap, Complex, HomologyModule};
use crate::error::{Error, Result};
use crate::groebner::MatrixGB;
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::vector::{vec_zero, FreeModule, ModMap, Vector};

/// Basis bookkeeping for Hom(F, G)_n = ⊕_i Hom(F_i, G_{i+n}): block per
/// source degree i, inside a block the matrix entries in column-major order
/// (index = c·rank(G_{i+n}) + r).
#[derive(Debug, Clone)]
pub struct HomBlocks {
    pub n: i64,
    /// (source degree i, rank F_i, rank G_{i+n}, offset)
    pub blocks: Vec<(i64, usize, usize, usize)>,
    pub total: usize,
}

impl HomBlocks {
    fn new(f: &Complex, g: &Complex, n: i64) -> HomBlocks {
        let mut blocks = Vec::new();
        let mut off = 0usize;
        if let (Some(lo), Some(hi)) = (f.lo(), f.hi()) {
            for i in lo..=hi {
                let rf = f.term(i).ambient.rank();
                let rg = g.term(i + n).ambient.rank();
                if rf > 0 && rg > 0 {
                    blocks.push((i, rf, rg, off));
                    off += rf * rg;
                }
            }
        }
        HomBlocks {
            n,
            blocks,
            total: off,
        }
    }

    pub fn index(&self, i: i64, row: usize, col: usize) -> Option<usize> {
        for &(bi, rf, rg, off) in &self.blocks {
            if bi == i {
                debug_assert!(col < rf && row < rg);
                return Some(off + col * rg + row);
            }
        }
        None
    }

    /// Flatten a degree-n collection of components (maps F_i -> G_{i+n}).
    pub fn flatten(&self, comps: &BTreeMap<i64, ModMap>) -> Vector {
        let mut v = vec_zero(self.total);
        for &(i, rf, rg, off) in &self.blocks {
            if let Some(m) = comps.get(&i) {
                for c in 0..rf {
                    for r in 0..rg {
                        v[off + c * rg + r] = m.entry(r, c).clone();
                    }
                }
            }
        }
        v
    }

    /// Expand a flat vector back into per-degree matrices.
    pub fn unflatten(
        &self,
        ring: &Arc<RingSpec>,
        f: &Complex,
        g: &Complex,
        v: &Vector,
    ) -> BTreeMap<i64, ModMap> {
        let _ = ring;
        let mut out = BTreeMap::new();
        for &(i, rf, rg, off) in &self.blocks {
            let mut cols = Vec::with_capacity(rf);
            for c in 0..rf {
                let col: Vector = (0..rg).map(|r| v[off + c * rg + r].clone()).collect();
                cols.push(col);
            }
            out.insert(
                i,
                ModMap::new(
                    f.term(i).ambient.clone(),
                    g.term(i + self.n).ambient.clone(),
                    cols,
                ),
            );
        }
        out
    }
}

/// The Hom complex with blocks recorded for translating between flat vectors
/// and degreewise maps.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub complex: Complex,
    pub f: Complex,
    pub g: Complex,
    pub blocks: BTreeMap<i64, HomBlocks>,
}

/// Hom(F, G) for bounded complexes of free modules, with differential
/// D(φ)_i = ∂^G ∘ φ_i − (−1)^n φ_{i−1} ∘ ∂^F_i on degree-n elements.
pub fn hom_complex(f: &Complex, g: &Complex) -> Result<HomComplex> {
    if !f.all_terms_free() || !g.all_terms_free() {
        return Err(Error::Precondition(
            "hom complex requires complexes of free modules".into(),
        ));
    }
    let ring = f.ring.clone();
    let (flo, fhi) = match (f.lo(), f.hi()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Ok(HomComplex {
                complex: Complex::empty(ring),
                f: f.clone(),
                g: g.clone(),
                blocks: BTreeMap::new(),
            })
        }
    };
    let (glo, ghi) = match (g.lo(), g.hi()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Ok(HomComplex {
                complex: Complex::empty(ring),
                f: f.clone(),
                g: g.clone(),
                blocks: BTreeMap::new(),
            })
        }
    };
    let nlo = glo - fhi;
    let nhi = ghi - flo;
    let mut blocks = BTreeMap::new();
    for n in nlo..=nhi {
        blocks.insert(n, HomBlocks::new(f, g, n));
    }
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for n in nlo..=nhi {
        let b = &blocks[&n];
        // internal degrees: shift of E_{rc}: F_i -> G_{i+n} is tgt - src
        let mut shifts = vec![0i64; b.total];
        for &(i, rf, rg, off) in &b.blocks {
            let fs = &f.term(i).ambient.shifts.clone();
            let gs = &g.term(i + n).ambient.shifts.clone();
            for c in 0..rf {
                for r in 0..rg {
                    shifts[off + c * rg + r] = gs[r] - fs[c];
                }
            }
        }
        terms.push(crate::fpmodule::FPModule::free(FreeModule::new(
            ring.clone(),
            shifts,
        )));
        if n > nlo {
            let bsrc = &blocks[&n];
            let btgt = &blocks[&(n - 1)];
            let sign_neg = n.rem_euclid(2) == 1; // −(−1)^n: negate the second term iff n even
            let mut cols: Vec<Vector> = Vec::with_capacity(bsrc.total);
            for &(i, rf, rg, _off) in &bsrc.blocks {
                let dg = g.diff(i + n); // G_{i+n} -> G_{i+n-1}
                let df = f.diff(i + 1); // F_{i+1} -> F_i
                for c in 0..rf {
                    for r in 0..rg {
                        let mut col = vec_zero(btgt.total);
                        // ∂^G ∘ E_{rc}: column c of block i picks up col r of ∂^G
                        for r2 in 0..dg.nrows() {
                            if let Some(ix) = btgt.index(i, r2, c) {
                                col[ix] = dg.entry(r2, r).clone();
                            }
                        }
                        // −(−1)^n E_{rc} ∘ ∂^F_{i+1}: block i+1 entries
                        for j in 0..df.ncols() {
                            if let Some(ix) = btgt.index(i + 1, r, j) {
                                let e = df.entry(c, j);
                                let val = if sign_neg { e.clone() } else { e.neg(&ring) };
                                col[ix] = col[ix].add(&val, &ring);
                            }
                        }
                        cols.push(col);
                    }
                }
            }
            let src = terms[(n - nlo) as usize].ambient.clone();
            let tgt = terms[(n - 1 - nlo) as usize].ambient.clone();
            diffs.push(ModMap::new(src, tgt, cols));
        }
    }
    let complex = Complex::build(ring, nlo, terms, diffs)?;
    Ok(HomComplex {
        complex,
        f: f.clone(),
        g: g.clone(),
        blocks,
    })
}

/// H_0(Hom(F, F)): chain endomorphisms modulo homotopy.
pub fn end_h0(f: &Complex) -> Result<(HomComplex, HomologyModule)> {
    let hc = hom_complex(f, f)?;
    let h0 = homology(&hc.complex, 0);
    Ok((hc, h0))
}

/// Ann(End_{K(R)}(F_•)) = annihilator of H_0(Hom(F,F)).
pub fn end_annihilator(f: &Complex) -> Result<Ideal> {
    let (_, h0) = end_h0(f)?;
    Ok(h0.module.annihilator())
}

/// A homotopy witness: maps h_n : T_n -> T_{n+1} with
/// f_n = ∂_{n+1} h_n + h_{n−1} ∂_n on the support window.
#[derive(Debug, Clone)]
pub struct Homotopy {
    pub comps: BTreeMap<i64, ModMap>,
}

/// Reusable solver for null-homotopy questions on one complex: the lift goes
/// through the degree-1 differential of Hom(T, T).
#[derive(Debug)]
pub struct HomotopySolver {
    pub hom: HomComplex,
    d1: MatrixGB,
}

impl HomotopySolver {
    pub fn new(t: &Complex) -> Result<HomotopySolver> {
        let hom = hom_complex(t, t)?;
        let d1 = MatrixGB::new(
            &t.ring,
            &hom.complex.diff(1).cols,
            hom.complex.term(0).ambient.rank(),
        );
        Ok(HomotopySolver { hom, d1 })
    }

    /// Solve f = ∂h + h∂ for a degree-0 endomorphism collection; the
    /// returned witness is verified degreewise before handing it out.
    pub fn solve(&self, comps: &BTreeMap<i64, ModMap>) -> Result<Option<Homotopy>> {
        let t = &self.hom.f;
        let ring = &t.ring;
        let b0 = &self.hom.blocks[&0];
        let flat = b0.flatten(comps);
        let coefs = match self.d1.lift(&flat) {
            None => return Ok(None),
            Some(c) => c,
        };
        let b1 = &self.hom.blocks[&1];
        let hcomps = b1.unflatten(ring, t, t, &coefs);
        // verify: f_n ≡ ∂_{n+1} h_n + h_{n-1} ∂_n modulo J
        if let (Some(lo), Some(hi)) = (t.lo(), t.hi()) {
            for n in lo..=hi {
                let f_n = comps
                    .get(&n)
                    .cloned()
                    .unwrap_or_else(|| ModMap::zero(t.term(n).ambient.clone(), t.term(n).ambient.clone()));
                let h_n = hcomps.get(&n).cloned().unwrap_or_else(|| {
                    ModMap::zero(t.term(n).ambient.clone(), t.term(n + 1).ambient.clone())
                });
                let h_prev = hcomps.get(&(n - 1)).cloned().unwrap_or_else(|| {
                    ModMap::zero(t.term(n - 1).ambient.clone(), t.term(n).ambient.clone())
                });
                let rhs = t.diff(n + 1).compose(&h_n).add(&h_prev.compose(&t.diff(n)));
                let diff = f_n.sub(&rhs);
                if !diff.is_zero() {
                    return Err(Error::Internal(
                        "homotopy witness failed verification".into(),
                    ));
                }
            }
        }
        Ok(Some(Homotopy { comps: hcomps }))
    }

    /// Null-homotopy of multiplication by a ring element.
    pub fn solve_scalar(&self, s: &Poly) -> Result<Option<Homotopy>> {
        let t = &self.hom.f;
        let mut comps = BTreeMap::new();
        for (&n, term) in &t.terms {
            comps.insert(n, ModMap::identity(&term.ambient).scale_poly(s));
        }
        self.solve(&comps)
    }
}

/// Null-homotopy witness for an endo chain map, or None when the global
/// linear system on the bounded window has no solution.
pub fn null_homotopy(f: &ChainMap) -> Result<Option<Homotopy>> {
    if f.source != f.target {
        return Err(Error::Precondition(
            "null homotopy requires an endo chain map".into(),
        ));
    }
    let solver = HomotopySolver::new(&f.source)?;
    let comps: BTreeMap<i64, ModMap> = f.comps.clone();
    solver.solve(&comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::width_stats;
    use crate::fpmodule::FPModule;
    use crate::koszul::{koszul, KoszulSpec};
    use crate::parse::parse_poly;

    fn ring_q() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 0\nvars: x, y").unwrap()
    }

    fn kos(r: &Arc<RingSpec>, gens: &[&str]) -> Complex {
        let spec = KoszulSpec::new(
            r.clone(),
            gens.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
            1,
            None,
        )
        .unwrap();
        koszul(&spec).unwrap().complex
    }

    #[test]
    fn end_of_single_free_module() {
        let r = ring_q();
        let c = Complex::build(
            r.clone(),
            0,
            vec![FPModule::free(FreeModule::std(r.clone(), 1))],
            vec![],
        )
        .unwrap();
        let ann = end_annihilator(&c).unwrap();
        assert!(ann.is_zero());
    }

    #[test]
    fn end_of_contractible_complex() {
        // [R --1--> R]: H_0(Hom) = 0, annihilator = (1)
        let r = ring_q();
        let f = FreeModule::std(r.clone(), 1);
        let d = ModMap::new(f.clone(), f.clone(), vec![vec![Poly::one(&r)]]);
        let c = Complex::build(
            r.clone(),
            0,
            vec![FPModule::free(f.clone()), FPModule::free(f.clone())],
            vec![d],
        )
        .unwrap();
        let ann = end_annihilator(&c).unwrap();
        assert!(ann.contains(&Poly::one(&r)));
    }

    #[test]
    fn end_annihilator_of_koszul_contains_ideal() {
        let r = ring_q();
        let c = kos(&r, &["x", "y"]);
        let (hc, h0) = end_h0(&c).unwrap();
        // the identity endomorphism is a nonzero class
        let b0 = &hc.blocks[&0];
        let mut id_comps = BTreeMap::new();
        for (&n, t) in &c.terms {
            id_comps.insert(n, ModMap::identity(&t.ambient));
        }
        let idv = b0.flatten(&id_comps);
        assert!(!h0.module.element_is_zero(&idv));
        let ann = end_annihilator(&c).unwrap();
        assert!(ann.contains(&parse_poly("x", &r).unwrap()));
        assert!(ann.contains(&parse_poly("y", &r).unwrap()));
        assert!(!ann.contains(&Poly::one(&r)));
    }

    #[test]
    fn null_homotopy_examples() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let c = kos(&r, &["x"]);
        // f = 0 has the zero homotopy
        let z = ChainMap::new(c.clone(), c.clone(), BTreeMap::new()).unwrap();
        let h = null_homotopy(&z).unwrap().unwrap();
        for (_, m) in &h.comps {
            assert!(m.is_zero());
        }
        // f = x·id on K(x) is null-homotopic: h_0(1) = e1
        let solver = HomotopySolver::new(&c).unwrap();
        let h = solver
            .solve_scalar(&parse_poly("x", &r).unwrap())
            .unwrap()
            .expect("x·id is null-homotopic on K(x)");
        let h0 = &h.comps[&0];
        assert_eq!(h0.entry(0, 0).display(&r), "1");
        // identity on a non-acyclic complex is not null-homotopic
        let rq = ring_q();
        let k = kos(&rq, &["x", "y"]);
        assert!(!width_stats(&k).supph.is_empty());
        let solver = HomotopySolver::new(&k).unwrap();
        assert!(solver.solve_scalar(&Poly::one(&rq)).unwrap().is_none());
    }
}
