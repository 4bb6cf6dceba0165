//! The comparison map Ψ : K(s̃^r; P_0) → P_• for a bounded complex of free
//! modules whose homologies are supported on V(s̃): each s_i acts
//! null-homotopically after raising to a power; the witnessing homotopies
//! assemble into a chain map with Ψ_0 the identity.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complex::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::fpmodule::FPModule;
use crate::homcx::{Homotopy, HomotopySolver};
use crate::koszul::{koszul, subsets, KoszulSpec};
use crate::poly::Poly;
use crate::ring::RingSpec;
use crate::vector::{vec_zero, ModMap};

/// Search the least power t ≤ budget with s^t·id null-homotopic on the
/// complex behind `solver`.
fn power_witness(
    solver: &HomotopySolver,
    ring: &Arc<RingSpec>,
    s: &Poly,
    budget: u32,
) -> Result<(u32, Homotopy)> {
    for t in 1..=budget {
        let st = ring.normal_form(&s.pow(t, ring));
        if let Some(h) = solver.solve_scalar(&st)? {
            return Ok((t, h));
        }
    }
    Err(Error::Budget(format!(
        "no power of {} up to {} acts null-homotopically (homology support not inside V of the sequence, or budget too small)",
        s.display(ring),
        budget
    )))
}

/// Scale a homotopy for s^t into one for s^r, r ≥ t.
fn scale_homotopy(h: &Homotopy, factor: &Poly) -> Homotopy {
    Homotopy {
        comps: h
            .comps
            .iter()
            .map(|(&n, m)| (n, m.scale_poly(factor)))
            .collect(),
    }
}

pub struct FoxbyWitness {
    pub power: u32,
    pub psi: ChainMap,
    pub koszul_complex: Complex,
}

/// Lemma-style construction: P a bounded complex of free modules with
/// min_c(P) = 0; returns r and a verified chain map Ψ: K(s̃^r; P_0) → P with
/// Ψ_0 the identity. Ψ(e_ĩ ⊗ c) = h^(i_1)(h^(i_2)(… h^(i_m)(c) …)) for the
/// null-homotopies h^(i) of s_i^r·id.
pub fn foxby_halvorsen(p: &Complex, elements: &[Poly], budget: u32) -> Result<FoxbyWitness> {
    if p.lo() != Some(0) {
        return Err(Error::Precondition(
            "foxby_halvorsen requires the complex to start at degree 0".into(),
        ));
    }
    if !p.all_terms_free() {
        return Err(Error::Precondition(
            "foxby_halvorsen requires free terms".into(),
        ));
    }
    let ring = p.ring.clone();
    let solver = HomotopySolver::new(p)?;
    let mut powers = Vec::new();
    let mut homotopies = Vec::new();
    for s in elements {
        let (t, h) = power_witness(&solver, &ring, s, budget)?;
        powers.push(t);
        homotopies.push(h);
    }
    let r = powers.iter().copied().max().unwrap_or(1);
    let homotopies: Vec<Homotopy> = homotopies
        .iter()
        .zip(&powers)
        .zip(elements)
        .map(|((h, &t), s)| {
            if t == r {
                h.clone()
            } else {
                scale_homotopy(h, &ring.normal_form(&s.pow(r - t, &ring)))
            }
        })
        .collect();
    // homotopy component at level l: P_l -> P_{l+1}
    let hcomp = |i: usize, l: i64| -> ModMap {
        homotopies[i].comps.get(&l).cloned().unwrap_or_else(|| {
            ModMap::zero(p.term(l).ambient.clone(), p.term(l + 1).ambient.clone())
        })
    };
    let p0 = p.term(0).ambient.clone();
    let spec = KoszulSpec::new(
        ring.clone(),
        elements.to_vec(),
        r,
        Some(FPModule::free(p0.clone())),
    )?;
    let kos = koszul(&spec)?;
    let d = elements.len();
    let mut comps = BTreeMap::new();
    comps.insert(0i64, ModMap::identity(&p0));
    for m in 1..=d {
        let subs = subsets(d, m);
        let tgt = p.term(m as i64).ambient.clone();
        let mut cols = Vec::with_capacity(subs.len() * p0.rank());
        for sub in &subs {
            // composite h^(i_1) ∘ … ∘ h^(i_m): P_0 -> P_m
            let mut acc = hcomp(sub[m - 1], 0);
            for (level, &i) in sub[..m - 1].iter().rev().enumerate() {
                acc = hcomp(i, (level + 1) as i64).compose(&acc);
            }
            for col in &acc.cols {
                cols.push(col.clone());
            }
        }
        if tgt.rank() == 0 {
            comps.insert(m as i64, ModMap::zero(kos.complex.term(m as i64).ambient.clone(), tgt));
        } else {
            comps.insert(
                m as i64,
                ModMap::new(kos.complex.term(m as i64).ambient.clone(), tgt, cols),
            );
        }
    }
    let psi = ChainMap::new(kos.complex.clone(), p.clone(), comps)?;
    Ok(FoxbyWitness {
        power: r,
        psi,
        koszul_complex: kos.complex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::induced_map;
    use crate::ideal::Ideal;
    use crate::parse::parse_poly;
    use crate::resolution::min_free_resolution;

    #[test]
    fn koszul_itself_admits_identity() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let gens = vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()];
        let spec = KoszulSpec::new(r.clone(), gens.clone(), 1, None).unwrap();
        let k = koszul(&spec).unwrap();
        let w = foxby_halvorsen(&k.complex, &gens, 8).unwrap();
        assert_eq!(w.power, 1);
        // Ψ_0 is the identity
        let psi0 = w.psi.comp(0);
        assert_eq!(psi0.cols, ModMap::identity(&k.complex.term(0).ambient).cols);
        let ind = induced_map(&w.psi, 0);
        assert!(ind.is_surjective());
    }

    #[test]
    fn resolution_with_torsion_homology() {
        // P = min free resolution of Q[x,y]/(x^2, xy), s̃ = (x, y)
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let i = Ideal::new(
            r.clone(),
            vec![
                parse_poly("x^2", &r).unwrap(),
                parse_poly("x*y", &r).unwrap(),
            ],
        );
        let m = FPModule::cyclic(r.clone(), &i);
        let res = min_free_resolution(&m, 4).unwrap();
        let complex = crate::tate::resolution_complex(&res).unwrap();
        let gens = vec![parse_poly("x", &r).unwrap(), parse_poly("y", &r).unwrap()];
        let w = foxby_halvorsen(&complex, &gens, 8).unwrap();
        assert!(w.power <= 2);
        assert_eq!(
            w.psi.comp(0).cols,
            ModMap::identity(&complex.term(0).ambient).cols
        );
    }

    #[test]
    fn support_mismatch_exhausts_budget() {
        // P with H_0 = R/(x), s̃ = (y): no power of y annihilates
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let i = Ideal::new(r.clone(), vec![parse_poly("x", &r).unwrap()]);
        let m = FPModule::cyclic(r.clone(), &i);
        let res = min_free_resolution(&m, 3).unwrap();
        let complex = crate::tate::resolution_complex(&res).unwrap();
        let err = foxby_halvorsen(&complex, &[parse_poly("y", &r).unwrap()], 4).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
