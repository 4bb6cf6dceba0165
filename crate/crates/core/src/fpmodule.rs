//! Finitely presented modules as subquotients of free modules:
//! M = span(gens)/span(rels) inside an ambient free module, both taken over
//! R (the quotient ideal is adjoined in every computation). The cokernel
//! presentation is the special case gens = ambient basis.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{MatrixGB, SpanGB};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::submodule;
use crate::vector::{vec_is_zero, vec_normal_form, FreeModule, ModMap, Vector};

#[derive(Debug, Clone)]
pub struct FPModule {
    pub ambient: FreeModule,
    /// None means the ambient basis (cokernel presentation).
    pub gens: Option<Vec<Vector>>,
    pub rels: Vec<Vector>,
    rels_span: OnceLock<SpanGB>,
}

impl PartialEq for FPModule {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.gens == other.gens && self.rels == other.rels
    }
}

impl FPModule {
    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ambient.ring
    }

    /// The free module R^rank as an FPModule.
    pub fn free(ambient: FreeModule) -> FPModule {
        FPModule {
            ambient,
            gens: None,
            rels: Vec::new(),
            rels_span: OnceLock::new(),
        }
    }

    /// coker(rels -> ambient).
    pub fn coker(ambient: FreeModule, rels: Vec<Vector>) -> FPModule {
        let ring = ambient.ring.clone();
        let rels = rels
            .into_iter()
            .map(|v| vec_normal_form(&v, &ring))
            .filter(|v| !vec_is_zero(v))
            .collect();
        FPModule {
            ambient,
            gens: None,
            rels,
            rels_span: OnceLock::new(),
        }
    }

    /// R/I as a cyclic module.
    pub fn cyclic(ring: Arc<RingSpec>, ideal: &Ideal) -> FPModule {
        let ambient = FreeModule::std(ring, 1);
        let rels = ideal.gens.iter().map(|g| vec![g.clone()]).collect();
        FPModule::coker(ambient, rels)
    }

    /// Subquotient span(gens)/span(rels). Relations must lie in the span of
    /// the generators; this is the caller's responsibility and is verified
    /// where certificates demand it.
    pub fn subquotient(ambient: FreeModule, gens: Vec<Vector>, rels: Vec<Vector>) -> FPModule {
        let ring = ambient.ring.clone();
        let norm = |vs: Vec<Vector>| -> Vec<Vector> {
            vs.into_iter()
                .map(|v| vec_normal_form(&v, &ring))
                .filter(|v| !vec_is_zero(v))
                .collect()
        };
        FPModule {
            ambient,
            gens: Some(norm(gens)),
            rels: norm(rels),
            rels_span: OnceLock::new(),
        }
    }

    pub fn is_free_presentation(&self) -> bool {
        self.gens.is_none() && self.rels.is_empty()
    }

    /// Explicit generator vectors (ambient coordinates).
    pub fn gen_vectors(&self) -> Vec<Vector> {
        match &self.gens {
            Some(g) => g.clone(),
            None => ModMap::identity(&self.ambient).cols,
        }
    }

    pub fn num_gens(&self) -> usize {
        match &self.gens {
            Some(g) => g.len(),
            None => self.ambient.rank(),
        }
    }

    pub fn rels_span(&self) -> &SpanGB {
        self.rels_span
            .get_or_init(|| SpanGB::new(self.ring(), &self.rels, self.ambient.rank()))
    }

    /// Zero test for an element given by its ambient representative.
    pub fn element_is_zero(&self, v: &Vector) -> bool {
        self.rels_span().contains(v)
    }

    pub fn elements_equal(&self, a: &Vector, b: &Vector) -> bool {
        let d = crate::vector::vec_sub(a, b, self.ring());
        self.element_is_zero(&d)
    }

    pub fn is_zero_module(&self) -> bool {
        self.gen_vectors().iter().all(|g| self.element_is_zero(g))
    }

    /// {f in R : f·M = 0} as a canonicalized ideal.
    pub fn annihilator(&self) -> Ideal {
        let ring = self.ring();
        let gens = self.gen_vectors();
        let g = gens.len();
        let a = self.ambient.rank();
        if g == 0 {
            return Ideal::unit(ring.clone());
        }
        // kernel of R -> ⊕_i M, 1 ↦ (g_1,…,g_g), i.e. of the stacked column
        // against block-diagonal relations
        let mut stacked = Vec::with_capacity(g * a);
        for gen in &gens {
            stacked.extend_from_slice(gen);
        }
        let mut cols = vec![stacked];
        for i in 0..g {
            for rel in &self.rels {
                let mut v = crate::vector::vec_zero(g * a);
                v[i * a..(i + 1) * a].clone_from_slice(rel);
                cols.push(v);
            }
        }
        let ker = MatrixGB::new(ring, &cols, g * a).kernel();
        let ann_gens: Vec<Poly> = ker.into_iter().map(|mut v| v.remove(0)).collect();
        Ideal::new(ring.clone(), ann_gens).canonicalized()
    }

    /// The submodule (0:_M s^t) in subquotient form.
    pub fn colon_power(&self, s: &Poly, t: u32) -> FPModule {
        let ring = self.ring();
        let st = s.pow(t, ring);
        let gens = self.gen_vectors();
        let rank = self.ambient.rank();
        // kernel of mult-by-s^t on M: {c : s^t · (G c) ∈ rels-span}
        let mut cols: Vec<Vector> = gens
            .iter()
            .map(|g| vec_normal_form(&crate::vector::vec_mul_poly(g, &st, ring), ring))
            .collect();
        let ngens = cols.len();
        cols.extend(self.rels.iter().cloned());
        let ker = MatrixGB::new(ring, &cols, rank).kernel();
        let mut zgens = Vec::new();
        for syz in ker {
            let v = submodule::combine(ring, &gens, &syz[..ngens], rank);
            if !vec_is_zero(&v) {
                zgens.push(v);
            }
        }
        let zgens = SpanGB::new(ring, &zgens, rank).canonical_gens();
        FPModule::subquotient(self.ambient.clone(), zgens, self.rels.clone())
    }

    /// Canonical Groebner basis of the subquotient's numerator span
    /// (generators together with relations); equal subquotients of the same
    /// ambient have equal numerator and denominator bases.
    pub fn numerator_span(&self) -> SpanGB {
        let mut gens = self.gen_vectors();
        gens.extend(self.rels.iter().cloned());
        SpanGB::new(self.ring(), &gens, self.ambient.rank())
    }

    /// Equality of subquotients of the same ambient free module, decided by
    /// mutual membership of numerators modulo matching denominators.
    pub fn equals_subquotient(&self, other: &FPModule) -> bool {
        if self.ambient.rank() != other.ambient.rank() {
            return false;
        }
        self.numerator_span().equals(&other.numerator_span())
            && self.rels_span().equals(other.rels_span())
    }

    /// Presentation R^{num_gens} / W with W the module of coefficient
    /// relations; returns the presenting free module (with shifts read off
    /// the generators when homogeneous) and the relation columns.
    pub fn presentation(&self) -> Result<(FreeModule, Vec<Vector>)> {
        let ring = self.ring();
        match &self.gens {
            None => Ok((self.ambient.clone(), self.rels.clone())),
            Some(gens) => {
                let ngens = gens.len();
                let shifts: Vec<i64> = gens
                    .iter()
                    .map(|g| {
                        self.ambient
                            .degree_of(g)
                            .unwrap_or(Some(0))
                            .unwrap_or(0)
                    })
                    .collect();
                let f0 = FreeModule::new(ring.clone(), shifts);
                let mut cols = gens.clone();
                cols.extend(self.rels.iter().cloned());
                let ker = MatrixGB::new(ring, &cols, self.ambient.rank()).kernel();
                let mut rels = Vec::new();
                for syz in ker {
                    let head: Vector = syz[..ngens].to_vec();
                    if !vec_is_zero(&head) {
                        rels.push(head);
                    }
                }
                Ok((f0, rels))
            }
        }
    }

    /// The same module with all ambient shifts moved by delta.
    pub fn shifted(&self, delta: i64) -> FPModule {
        let mut out = self.clone();
        out.ambient = FreeModule::new(
            self.ring().clone(),
            self.ambient.shifts.iter().map(|s| s + delta).collect(),
        );
        out.rels_span = OnceLock::new();
        out
    }

    /// Direct sum, ambient-blockwise.
    pub fn direct_sum(&self, other: &FPModule) -> FPModule {
        let ambient = self.ambient.direct_sum(&other.ambient);
        let a = self.ambient.rank();
        let b = other.ambient.rank();
        let pad_left = |v: &Vector| -> Vector {
            let mut out = v.clone();
            out.extend(crate::vector::vec_zero(b));
            out
        };
        let pad_right = |v: &Vector| -> Vector {
            let mut out = crate::vector::vec_zero(a);
            out.extend_from_slice(v);
            out
        };
        let mut rels: Vec<Vector> = self.rels.iter().map(pad_left).collect();
        rels.extend(other.rels.iter().map(pad_right));
        match (&self.gens, &other.gens) {
            (None, None) => FPModule::coker(ambient, rels),
            _ => {
                let mut gens: Vec<Vector> =
                    self.gen_vectors().iter().map(pad_left).collect();
                gens.extend(other.gen_vectors().iter().map(pad_right));
                FPModule::subquotient(ambient, gens, rels)
            }
        }
    }

    /// M ⊗ F for a free module F; basis ordering (m, j) -> m*rank(F)+j.
    pub fn tensor_free(&self, f: &FreeModule) -> FPModule {
        let idf = ModMap::identity(f);
        let amb_map = ModMap::identity(&self.ambient).tensor(&idf);
        let ambient = amb_map.target;
        let arank = ambient.rank();
        let expand = |vs: &[Vector]| -> Vec<Vector> {
            let mut out = Vec::new();
            for v in vs {
                for j in 0..f.rank() {
                    let mut w = crate::vector::vec_zero(arank);
                    for (i, p) in v.iter().enumerate() {
                        w[i * f.rank() + j] = p.clone();
                    }
                    out.push(w);
                }
            }
            out
        };
        let rels = expand(&self.rels);
        match &self.gens {
            None => FPModule::coker(ambient, rels),
            Some(g) => FPModule::subquotient(ambient, expand(g), rels),
        }
    }

    /// M/(I·M) as a subquotient with the same generators.
    pub fn quotient_by_ideal(&self, ideal: &Ideal) -> FPModule {
        let ring = self.ring();
        let gens = self.gen_vectors();
        let mut rels = self.rels.clone();
        rels.extend(submodule::ideal_times(ring, &ideal.gens, &gens));
        match &self.gens {
            None => FPModule::coker(self.ambient.clone(), rels),
            Some(g) => FPModule::subquotient(self.ambient.clone(), g.clone(), rels),
        }
    }
}

/// Check that a matrix on ambient free modules induces a well-defined map of
/// subquotients: generators map into the target numerator, relations into the
/// target denominator.
pub fn check_well_defined(map: &ModMap, src: &FPModule, tgt: &FPModule) -> Result<()> {
    let num = tgt.numerator_span();
    for g in src.gen_vectors() {
        if !num.contains(&map.apply(&g)) {
            return Err(Error::Internal(
                "map does not carry generators into the target module".into(),
            ));
        }
    }
    let den = tgt.rels_span();
    for r in &src.rels {
        if !den.contains(&map.apply(r)) {
            return Err(Error::Internal(
                "map does not respect relations".into(),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q_x() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 0\nvars: x").unwrap()
    }

    #[test]
    fn annihilator_examples() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let i = Ideal::new(r.clone(), vec![parse_poly("x", &r).unwrap()]);
        let m = FPModule::cyclic(r.clone(), &i);
        let ann = m.annihilator();
        assert_eq!(ann.gens.len(), 1);
        assert_eq!(ann.gens[0].display(&r), "x");

        let r2 = RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap();
        let free = FPModule::free(FreeModule::std(r2.clone(), 1));
        assert!(free.annihilator().is_zero());
    }

    #[test]
    fn colon_power_examples() {
        // (0:_R x) in F2[x,y]/(xy) = (y)
        let r = RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap();
        let m = FPModule::free(FreeModule::std(r.clone(), 1));
        let x = parse_poly("x", &r).unwrap();
        let c = m.colon_power(&x, 1);
        let gens = c.gen_vectors();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0][0].display(&r), "y");

        // M = Q[x]/(x^2): (0:_M x) = (x)/(x^2), (0:_M x^2) = M
        let r2 = q_x();
        let i = Ideal::new(r2.clone(), vec![parse_poly("x^2", &r2).unwrap()]);
        let m2 = FPModule::cyclic(r2.clone(), &i);
        let x2 = parse_poly("x", &r2).unwrap();
        let c1 = m2.colon_power(&x2, 1);
        assert_eq!(c1.gen_vectors().len(), 1);
        assert_eq!(c1.gen_vectors()[0][0].display(&r2), "x");
        let c2 = m2.colon_power(&x2, 2);
        // all of M: generator 1
        assert!(c2
            .gen_vectors()
            .iter()
            .any(|g| g[0].display(&r2) == "1"));
    }

    #[test]
    fn annihilator_chain_monotone() {
        let r = q_x();
        let i = Ideal::new(r.clone(), vec![parse_poly("x^2", &r).unwrap()]);
        let m = FPModule::cyclic(r.clone(), &i);
        let x = parse_poly("x", &r).unwrap();
        let mut prev: Option<FPModule> = None;
        for t in 0..4 {
            let c = m.colon_power(&x, t);
            if let Some(p) = &prev {
                // (0:_M x^t) ⊆ (0:_M x^{t+1})
                let num = c.numerator_span();
                assert!(p.gen_vectors().iter().all(|g| num.contains(g)));
            }
            prev = Some(c);
        }
    }

    #[test]
    fn presentation_of_subquotient() {
        // (x)/(x^2) in Q[x]: presentation R/(x)
        let r = q_x();
        let x = parse_poly("x", &r).unwrap();
        let x2 = parse_poly("x^2", &r).unwrap();
        let m = FPModule::subquotient(
            FreeModule::std(r.clone(), 1),
            vec![vec![x]],
            vec![vec![x2]],
        );
        let (f0, rels) = m.presentation().unwrap();
        assert_eq!(f0.rank(), 1);
        assert_eq!(f0.shifts, vec![1]);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0][0].display(&r), "x");
    }
}
