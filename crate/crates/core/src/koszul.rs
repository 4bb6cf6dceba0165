//! Koszul complexes K(s̃^n; M) on subset-indexed bases, the comparison maps
//! κ^{n,k}, Koszul duals, grade via depth sensitivity, and the stabilization
//! exponent l of the annihilator chains (0:_M s^t).

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{is_homology_zero, ChainMap, Complex};
use crate::error::{Error, Result};
use crate::fpmodule::FPModule;
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::vector::{FreeModule, ModMap};

/// Ordered m-subsets of {0..d-1} in lexicographic order.
pub fn subsets(d: usize, m: usize) -> Vec<Vec<usize>> {
    if m > d {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic m-subset
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 <= d - (m - i) {
                cur[i] += 1;
                for j in i + 1..m {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Position (1-based) of k in the ordered set j̃ ⊔ k.
pub fn tau(k: usize, js: &[usize]) -> usize {
    js.iter().filter(|&&j| j < k).count() + 1
}

#[derive(Debug, Clone)]
pub struct KoszulSpec {
    pub ring: Arc<RingSpec>,
    pub elements: Vec<Poly>,
    pub exponent: u32,
    pub coefficients: FPModule,
}

impl KoszulSpec {
    pub fn new(
        ring: Arc<RingSpec>,
        elements: Vec<Poly>,
        exponent: u32,
        coefficients: Option<FPModule>,
    ) -> Result<KoszulSpec> {
        if elements.is_empty() {
            return Err(Error::Precondition("empty Koszul sequence".into()));
        }
        if exponent == 0 {
            return Err(Error::Precondition("Koszul exponent must be ≥ 1".into()));
        }
        let elements: Vec<Poly> = elements.iter().map(|s| ring.normal_form(s)).collect();
        let coefficients =
            coefficients.unwrap_or_else(|| FPModule::free(FreeModule::std(ring.clone(), 1)));
        if *coefficients.ring() != ring {
            return Err(Error::RingMismatch);
        }
        Ok(KoszulSpec {
            ring,
            elements,
            exponent,
            coefficients,
        })
    }

    pub fn d(&self) -> usize {
        self.elements.len()
    }

    /// Zero entries are permitted but worth flagging: they contribute split
    /// exterior factors.
    pub fn has_zero_element(&self) -> bool {
        self.elements.iter().any(|s| s.is_zero())
    }
}

/// A built Koszul complex together with its subset bookkeeping.
#[derive(Debug, Clone)]
pub struct Koszul {
    pub spec: KoszulSpec,
    pub complex: Complex,
    /// Differential of the scalar complex (coefficients R) in each degree m,
    /// indexed by m-1: R^{C(d,m)} -> R^{C(d,m-1)}.
    pub scalar_diffs: Vec<ModMap>,
}

impl Koszul {
    pub fn d(&self) -> usize {
        self.spec.d()
    }

    /// Shift (internal degree) of the subset basis element e_ĩ.
    fn subset_shift(spec: &KoszulSpec, sub: &[usize]) -> i64 {
        let ring = &spec.ring;
        sub.iter()
            .map(|&i| {
                spec.elements[i]
                    .degree(ring)
                    .map(|deg| deg * spec.exponent as i64)
                    .unwrap_or(0)
            })
            .sum()
    }
}

/// Build K(s̃^n; M): degrees 0..d, terms M^{C(d,m)} on the lexicographic
/// subset basis, differential e_ĩ ↦ Σ_j (-1)^{j+1} s_{i_j}^n e_{ĩ∖i_j}.
pub fn koszul(spec: &KoszulSpec) -> Result<Koszul> {
    let ring = spec.ring.clone();
    let d = spec.d();
    let n = spec.exponent;
    let graded = spec.elements.iter().all(|s| s.is_homogeneous(&ring));
    let powers: Vec<Poly> = spec.elements.iter().map(|s| s.pow(n, &ring)).collect();
    // scalar free modules and differentials
    let mut scalar_mods: Vec<FreeModule> = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let shifts: Vec<i64> = subsets(d, m)
            .iter()
            .map(|sub| if graded { Koszul::subset_shift(spec, sub) } else { 0 })
            .collect();
        scalar_mods.push(FreeModule::new(ring.clone(), shifts));
    }
    let mut scalar_diffs: Vec<ModMap> = Vec::with_capacity(d);
    for m in 1..=d {
        let rows = subsets(d, m - 1);
        let cols = subsets(d, m);
        let row_index: BTreeMap<Vec<usize>, usize> = rows
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let mut mat_cols = Vec::with_capacity(cols.len());
        for sub in &cols {
            let mut col = crate::vector::vec_zero(rows.len());
            for (j, &i_j) in sub.iter().enumerate() {
                let mut rest = sub.clone();
                rest.remove(j);
                let ri = row_index[&rest];
                // sign (-1)^{j+1} with j 1-based: even positions negate
                let negate = (j + 1) % 2 == 0;
                col[ri] = if negate {
                    powers[i_j].neg(&ring)
                } else {
                    powers[i_j].clone()
                };
            }
            mat_cols.push(col);
        }
        scalar_diffs.push(ModMap::new(
            scalar_mods[m].clone(),
            scalar_mods[m - 1].clone(),
            mat_cols,
        ));
    }
    // terms: M^{C(d,m)} as block direct sums with the subset shifts applied
    let coeff = &spec.coefficients;
    let mut terms: Vec<FPModule> = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let subs = subsets(d, m);
        let mut term: Option<FPModule> = None;
        for sub in &subs {
            let delta = if graded { Koszul::subset_shift(spec, sub) } else { 0 };
            let copy = coeff.shifted(delta);
            term = Some(match term {
                None => copy,
                Some(t) => t.direct_sum(&copy),
            });
        }
        terms.push(term.unwrap_or_else(|| FPModule::free(FreeModule::zero(ring.clone()))));
    }
    let id_m = ModMap::identity(&coeff.ambient);
    let diffs: Vec<ModMap> = scalar_diffs.iter().map(|dm| dm.tensor(&id_m)).collect();
    let complex = Complex::build(ring, 0, terms, diffs)?;
    Ok(Koszul {
        spec: spec.clone(),
        complex,
        scalar_diffs,
    })
}

/// κ^{n,k}: K(s̃^n;M) -> K(s̃^k;M), mapping e_ĩ to (∏_{i∈ĩ} s_i)^{n-k} e_ĩ.
/// κ^{n,n} is the identity; H_0(κ^{n,k}) is the natural surjection
/// M/(s̃^n)M → M/(s̃^k)M.
pub fn kappa(from: &Koszul, to: &Koszul) -> Result<ChainMap> {
    let n = from.spec.exponent;
    let k = to.spec.exponent;
    if n < k {
        return Err(Error::Precondition("kappa requires n ≥ k".into()));
    }
    if from.spec.elements != to.spec.elements {
        return Err(Error::Precondition("kappa requires the same sequence".into()));
    }
    if from.spec.coefficients != to.spec.coefficients {
        return Err(Error::Precondition(
            "kappa requires the same coefficient module".into(),
        ));
    }
    let ring = &from.spec.ring;
    let d = from.d();
    let id_m = ModMap::identity(&from.spec.coefficients.ambient);
    let mut comps = BTreeMap::new();
    for m in 0..=d {
        let subs = subsets(d, m);
        let mut cols = Vec::with_capacity(subs.len());
        for (j, sub) in subs.iter().enumerate() {
            let mut prod = Poly::one(ring);
            for &i in sub {
                prod = prod.mul(&from.spec.elements[i], ring);
            }
            let factor = ring.normal_form(&prod.pow(n - k, ring));
            let mut col = crate::vector::vec_zero(subs.len());
            col[j] = factor;
            cols.push(col);
        }
        let scalar = ModMap::new(
            FreeModule::std(ring.clone(), subs.len()),
            FreeModule::std(ring.clone(), subs.len()),
            cols,
        );
        comps.insert(m as i64, scalar.tensor(&id_m));
    }
    ChainMap::new(from.complex.clone(), to.complex.clone(), comps)
}

/// The dual cochain complex Hom(K(s̃^r), N) in cohomological degrees 0..d,
/// stored flipped so the existing homology machinery applies:
/// chain degree i holds C^{d-i}.
#[derive(Debug, Clone)]
pub struct Cochain {
    pub flipped: Complex,
    pub top: i64,
}

impl Cochain {
    pub fn cohomology(&self, i: i64) -> crate::complex::HomologyModule {
        crate::complex::homology(&self.flipped, self.top - i)
    }

    pub fn is_cohomology_zero(&self, i: i64) -> bool {
        is_homology_zero(&self.flipped, self.top - i)
    }

    pub fn term_cohomological(&self, i: i64) -> FPModule {
        self.flipped.term(self.top - i)
    }
}

/// K(s̃^r; N)^∨ = Hom(K(s̃^r), N): transposed differentials acting on N.
pub fn koszul_dual(kos: &Koszul, coefficients: Option<FPModule>) -> Result<Cochain> {
    let ring = kos.spec.ring.clone();
    let n_mod = coefficients
        .unwrap_or_else(|| FPModule::free(FreeModule::std(ring.clone(), 1)));
    if *n_mod.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let d = kos.d();
    let id_n = ModMap::identity(&n_mod.ambient);
    // cochain differential δ^m = (∂_{m+1})^T ⊗ N : C^m -> C^{m+1}
    // flipped chain: term_i = C^{d-i}, ∂_i = δ^{d-i} : term_i -> term_{i-1}
    let mut terms: Vec<FPModule> = Vec::with_capacity(d + 1);
    for i in 0..=(d as i64) {
        let m = (d as i64 - i) as usize;
        let count = subsets(d, m).len();
        let mut term: Option<FPModule> = None;
        for _ in 0..count {
            term = Some(match term {
                None => n_mod.clone(),
                Some(t) => t.direct_sum(&n_mod),
            });
        }
        terms.push(term.unwrap_or_else(|| FPModule::free(FreeModule::zero(ring.clone()))));
    }
    let mut diffs: Vec<ModMap> = Vec::with_capacity(d);
    for i in 1..=(d as i64) {
        let m = (d as i64 - i) as usize; // δ^m : C^m -> C^{m+1}
        let scalar_t = kos.scalar_diffs[m].transpose();
        // transpose shifts are negated; rebuild with plain shapes
        let scalar = ModMap::new(
            FreeModule::std(ring.clone(), scalar_t.ncols()),
            FreeModule::std(ring.clone(), scalar_t.nrows()),
            scalar_t.cols.clone(),
        );
        diffs.push(scalar.tensor(&id_n));
    }
    let flipped = Complex::build(ring, 0, terms, diffs)?;
    Ok(Cochain {
        flipped,
        top: d as i64,
    })
}

/// grade(I) on R by Koszul depth sensitivity:
/// grade = d − max{ i ≥ 1 : H_i(K(s̃;R)) ≠ 0 }, and d when all vanish.
pub fn grade(ideal: &Ideal) -> Result<usize> {
    if !ideal.is_proper() {
        return Err(Error::Precondition("grade of the unit ideal".into()));
    }
    if ideal.gens.is_empty() {
        return Ok(0);
    }
    let spec = KoszulSpec::new(ideal.ring.clone(), ideal.gens.clone(), 1, None)?;
    let kos = koszul(&spec)?;
    let d = kos.d();
    for i in (1..=d).rev() {
        if !is_homology_zero(&kos.complex, i as i64) {
            return Ok(d - i);
        }
    }
    Ok(d)
}

/// Stabilization exponents: l_i is the least t with (0:_M s_i^t) equal to
/// (0:_M s_i^{t+1}); the chains are detected stable by comparing canonical
/// bases of consecutive colon modules, one equality step sufficing over a
/// noetherian ring, and confirmed by one extra step.
pub fn stabilization_l(
    ring: &Arc<RingSpec>,
    elements: &[Poly],
    m: &FPModule,
    budget: u32,
) -> Result<(Vec<u32>, u32)> {
    let mut ls = Vec::with_capacity(elements.len());
    for s in elements {
        let s = ring.normal_form(s);
        let mut prev = m.colon_power(&s, 0);
        let mut found = None;
        for t in 0..budget {
            let next = m.colon_power(&s, t + 1);
            if prev.equals_subquotient(&next) {
                let confirm = m.colon_power(&s, t + 2);
                if !next.equals_subquotient(&confirm) {
                    return Err(Error::Internal(
                        "annihilator chain not monotone stable".into(),
                    ));
                }
                found = Some(t);
                break;
            }
            prev = next;
        }
        match found {
            Some(t) => ls.push(t),
            None => {
                return Err(Error::Budget(format!(
                    "annihilator chain did not stabilize within {budget} steps"
                )))
            }
        }
    }
    let l = ls.iter().copied().max().unwrap_or(0);
    Ok((ls, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::homology;
    use crate::parse::parse_poly;

    fn ring_q2() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 0\nvars: x, y").unwrap()
    }

    fn e2_ring() -> Arc<RingSpec> {
        RingSpec::parse_text("char: 2\nvars: x, y\nquotient: x*y").unwrap()
    }

    #[test]
    fn subset_enumeration_and_tau() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert_eq!(tau(1, &[0, 2]), 2);
        assert_eq!(tau(0, &[1, 2]), 1);
    }

    #[test]
    fn koszul_one_variable() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let spec = KoszulSpec::new(r.clone(), vec![parse_poly("x", &r).unwrap()], 1, None).unwrap();
        let k = koszul(&spec).unwrap();
        assert_eq!(k.complex.term(0).ambient.rank(), 1);
        assert_eq!(k.complex.term(1).ambient.rank(), 1);
        assert_eq!(k.complex.diff(1).entry(0, 0).display(&r), "x");
    }

    #[test]
    fn koszul_sign_rule() {
        let r = ring_q2();
        let spec = KoszulSpec::new(
            r.clone(),
            vec![
                parse_poly("x^2", &r).unwrap(),
                parse_poly("y^3", &r).unwrap(),
            ],
            1,
            None,
        )
        .unwrap();
        let k = koszul(&spec).unwrap();
        // ∂_2(e_{12}) = s_1 e_2 - s_2 e_1
        let d2 = k.complex.diff(2);
        assert_eq!(d2.entry(1, 0).display(&r), "x^2");
        assert_eq!(d2.entry(0, 0).display(&r), "-y^3");
    }

    #[test]
    fn koszul_homology_regular_sequence() {
        let r = ring_q2();
        let spec = KoszulSpec::new(
            r.clone(),
            vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()],
            1,
            None,
        )
        .unwrap();
        let k = koszul(&spec).unwrap();
        assert!(is_homology_zero(&k.complex, 1));
        assert!(is_homology_zero(&k.complex, 2));
        assert!(!is_homology_zero(&k.complex, 0));
        // H_0 = R/(x,y)
        let h0 = homology(&k.complex, 0);
        let ann = h0.module.annihilator();
        let gens: Vec<String> = ann.gens.iter().map(|g| g.display(&r)).collect();
        assert_eq!(gens, vec!["x", "y"]);
    }

    #[test]
    fn koszul_homology_on_quotient() {
        // H_1(K(x; F2[x,y]/(xy))) generated by y·e1
        let r = e2_ring();
        let spec = KoszulSpec::new(r.clone(), vec![parse_poly("x", &r).unwrap()], 1, None).unwrap();
        let k = koszul(&spec).unwrap();
        let h1 = homology(&k.complex, 1);
        assert!(!h1.is_zero());
        let gens = h1.cycle_gens();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0][0].display(&r), "y");
    }

    #[test]
    fn koszul_with_module_coefficients() {
        // K(x; F2[x,y]/(xy); M = R/(y)): x regular on M, H_1 = 0
        let r = e2_ring();
        let m = FPModule::cyclic(
            r.clone(),
            &Ideal::new(r.clone(), vec![parse_poly("y", &r).unwrap()]),
        );
        let spec =
            KoszulSpec::new(r.clone(), vec![parse_poly("x", &r).unwrap()], 1, Some(m)).unwrap();
        let k = koszul(&spec).unwrap();
        assert!(is_homology_zero(&k.complex, 1));
        assert!(!is_homology_zero(&k.complex, 0));
    }

    #[test]
    fn kappa_identity_and_composition() {
        let r = ring_q2();
        let mk = |n: u32| {
            let spec = KoszulSpec::new(
                r.clone(),
                vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()],
                n,
                None,
            )
            .unwrap();
            koszul(&spec).unwrap()
        };
        let k4 = mk(4);
        let k2 = mk(2);
        let k1 = mk(1);
        let id = kappa(&k1, &k1).unwrap();
        for (_, m) in &id.comps {
            assert_eq!(m.cols, ModMap::identity(&m.source).cols);
        }
        // κ^{4,1} = κ^{2,1} ∘ κ^{4,2} entrywise
        let k41 = kappa(&k4, &k1).unwrap();
        let k21 = kappa(&k2, &k1).unwrap();
        let k42 = kappa(&k4, &k2).unwrap();
        let comp = k21.compose(&k42).unwrap();
        for n in 0..=2i64 {
            assert_eq!(k41.comp(n).cols, comp.comp(n).cols);
        }
        // κ^{3,1} on K(x;Q[x]): degree-1 component is x^2
        let rx = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let mk1 = |n: u32| {
            let spec =
                KoszulSpec::new(rx.clone(), vec![parse_poly("x", &rx).unwrap()], n, None).unwrap();
            koszul(&spec).unwrap()
        };
        let k31 = kappa(&mk1(3), &mk1(1)).unwrap();
        assert_eq!(k31.comp(1).entry(0, 0).display(&rx), "x^2");
    }

    #[test]
    fn dual_of_one_variable() {
        let r = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let spec = KoszulSpec::new(r.clone(), vec![parse_poly("x", &r).unwrap()], 1, None).unwrap();
        let k = koszul(&spec).unwrap();
        let dual = koszul_dual(&k, None).unwrap();
        // H^1 = R/(x) ≠ 0, H^0 = ker(x) = 0
        assert!(!dual.is_cohomology_zero(1));
        assert!(dual.is_cohomology_zero(0));
        // rank of degree-m dual term = C(d, m)
        assert_eq!(dual.term_cohomological(0).ambient.rank(), 1);
        assert_eq!(dual.term_cohomological(1).ambient.rank(), 1);
    }

    #[test]
    fn grade_examples() {
        let r = ring_q2();
        let m = Ideal::new(
            r.clone(),
            vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()],
        );
        assert_eq!(grade(&m).unwrap(), 2);

        let r2 = e2_ring();
        let i = Ideal::new(r2.clone(), vec![parse_poly("x", &r2).unwrap()]);
        assert_eq!(grade(&i).unwrap(), 0);

        assert!(grade(&Ideal::unit(r.clone())).is_err());
    }

    #[test]
    fn grade_invariant_under_generating_set() {
        let r = ring_q2();
        let a = Ideal::new(
            r.clone(),
            vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()],
        );
        let b = Ideal::new(
            r.clone(),
            vec![
                parse_poly("x + y", &r).unwrap(),
                parse_poly("y", &r).unwrap(),
                parse_poly("x", &r).unwrap(),
            ],
        );
        assert_eq!(grade(&a).unwrap(), grade(&b).unwrap());
    }

    #[test]
    fn stabilization_examples() {
        let r = ring_q2();
        let free = FPModule::free(FreeModule::std(r.clone(), 1));
        let (_, l) = stabilization_l(
            &r,
            &[parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()],
            &free,
            8,
        )
        .unwrap();
        assert_eq!(l, 0);

        let r2 = e2_ring();
        let free2 = FPModule::free(FreeModule::std(r2.clone(), 1));
        let (_, l2) =
            stabilization_l(&r2, &[parse_poly("x", &r2).unwrap()], &free2, 8).unwrap();
        assert_eq!(l2, 1);

        let rx = RingSpec::parse_text("char: 0\nvars: x").unwrap();
        let m = FPModule::cyclic(
            rx.clone(),
            &Ideal::new(rx.clone(), vec![parse_poly("x^2", &rx).unwrap()]),
        );
        let (_, l3) = stabilization_l(&rx, &[parse_poly("x", &rx).unwrap()], &m, 8).unwrap();
        assert_eq!(l3, 2);
    }
}
