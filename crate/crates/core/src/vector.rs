//! Free modules with degree shifts, elements of free modules, and matrices of
//! ring elements (the universal carrier for differentials and chain maps).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Coef;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::RingSpec;

/// An element of a free module, one polynomial per basis component.
pub type Vector = Vec<Poly>;

pub fn vec_zero(rank: usize) -> Vector {
    vec![Poly::zero(); rank]
}

pub fn vec_is_zero(v: &Vector) -> bool {
    v.iter().all(|p| p.is_zero())
}

pub fn vec_add(a: &Vector, b: &Vector, ring: &RingSpec) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y, ring)).collect()
}

pub fn vec_sub(a: &Vector, b: &Vector, ring: &RingSpec) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y, ring)).collect()
}

pub fn vec_neg(a: &Vector, ring: &RingSpec) -> Vector {
    a.iter().map(|x| x.neg(ring)).collect()
}

pub fn vec_mul_term(a: &Vector, c: &Coef, m: &Monomial, ring: &RingSpec) -> Vector {
    a.iter().map(|x| x.mul_term(c, m, ring)).collect()
}

pub fn vec_mul_poly(a: &Vector, f: &Poly, ring: &RingSpec) -> Vector {
    a.iter().map(|x| x.mul(f, ring)).collect()
}

pub fn vec_normal_form(a: &Vector, ring: &RingSpec) -> Vector {
    a.iter().map(|x| ring.normal_form(x)).collect()
}

/// A free module R^rank with integer degree shifts, one per basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeModule {
    pub ring: Arc<RingSpec>,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Arc<RingSpec>, shifts: Vec<i64>) -> Self {
        FreeModule { ring, shifts }
    }

    pub fn std(ring: Arc<RingSpec>, rank: usize) -> Self {
        FreeModule {
            ring,
            shifts: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn zero(ring: Arc<RingSpec>) -> Self {
        FreeModule {
            ring,
            shifts: Vec::new(),
        }
    }

    /// Degree of a homogeneous element, None for zero. Errors if the element
    /// is not homogeneous with respect to the shifts.
    pub fn degree_of(&self, v: &Vector) -> Result<Option<i64>> {
        let mut deg = None;
        for (i, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous(&self.ring) {
                return Err(Error::Precondition("element is not homogeneous".into()));
            }
            let d = p.degree(&self.ring).unwrap() + self.shifts[i];
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => {
                    return Err(Error::Precondition("element is not homogeneous".into()))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut shifts = self.shifts.clone();
        shifts.extend_from_slice(&other.shifts);
        FreeModule {
            ring: self.ring.clone(),
            shifts,
        }
    }
}

/// A matrix of ring elements in normal form, columns are images of the source
/// basis. `cols[j][i]` is the entry in row i, column j.
#[derive(Debug, Clone, PartialEq)]
pub struct ModMap {
    pub source: FreeModule,
    pub target: FreeModule,
    pub cols: Vec<Vector>,
}

impl ModMap {
    pub fn new(source: FreeModule, target: FreeModule, cols: Vec<Vector>) -> Self {
        assert_eq!(cols.len(), source.rank(), "column count must match source rank");
        for c in &cols {
            assert_eq!(c.len(), target.rank(), "column length must match target rank");
        }
        let ring = source.ring.clone();
        let cols = cols
            .into_iter()
            .map(|c| c.iter().map(|p| ring.normal_form(p)).collect())
            .collect();
        ModMap {
            source,
            target,
            cols,
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.source.ring
    }

    pub fn identity(fm: &FreeModule) -> Self {
        let n = fm.rank();
        let ring = &fm.ring;
        let cols = (0..n)
            .map(|j| {
                let mut v = vec_zero(n);
                v[j] = Poly::one(ring);
                v
            })
            .collect();
        ModMap {
            source: fm.clone(),
            target: fm.clone(),
            cols,
        }
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> Self {
        let cols = vec![vec_zero(target.rank()); source.rank()];
        ModMap {
            source,
            target,
            cols,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.cols[j][i]
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(vec_is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let ring = self.ring();
        let mut out = vec_zero(self.nrows());
        for (j, p) in v.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            out = vec_add(&out, &vec_mul_poly(&self.cols[j], p, ring), ring);
        }
        vec_normal_form(&out, ring)
    }

    /// self ∘ other (other first, then self).
    pub fn compose(&self, other: &ModMap) -> ModMap {
        assert_eq!(self.ncols(), other.nrows(), "composition shape mismatch");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        ModMap {
            source: other.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        let ring = self.ring();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| vec_normal_form(&vec_add(a, b, ring), ring))
            .collect();
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    pub fn sub(&self, other: &ModMap) -> ModMap {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ModMap {
        let ring = self.ring();
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: self.cols.iter().map(|c| vec_neg(c, ring)).collect(),
        }
    }

    pub fn scale_poly(&self, f: &Poly) -> ModMap {
        let ring = self.ring();
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: self
                .cols
                .iter()
                .map(|c| vec_normal_form(&vec_mul_poly(c, f, ring), ring))
                .collect(),
        }
    }

    pub fn transpose(&self) -> ModMap {
        let cols = (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        ModMap {
            source: FreeModule::new(
                self.ring().clone(),
                self.target.shifts.iter().map(|s| -s).collect(),
            ),
            target: FreeModule::new(
                self.ring().clone(),
                self.source.shifts.iter().map(|s| -s).collect(),
            ),
            cols,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &ModMap) -> ModMap {
        let source = self.source.direct_sum(&other.source);
        let target = self.target.direct_sum(&other.target);
        let mut cols = Vec::with_capacity(source.rank());
        for c in &self.cols {
            let mut v = c.clone();
            v.extend(vec_zero(other.nrows()));
            cols.push(v);
        }
        for c in &other.cols {
            let mut v = vec_zero(self.nrows());
            v.extend_from_slice(c);
            cols.push(v);
        }
        ModMap {
            source,
            target,
            cols,
        }
    }

    /// Kronecker product self ⊗ other: entry blocks self[i][j] * other.
    /// Basis ordering: index (a, b) -> a * rank(other) + b.
    pub fn tensor(&self, other: &ModMap) -> ModMap {
        let ring = self.ring();
        let src_shifts: Vec<i64> = self
            .source
            .shifts
            .iter()
            .flat_map(|s| other.source.shifts.iter().map(move |t| s + t))
            .collect();
        let tgt_shifts: Vec<i64> = self
            .target
            .shifts
            .iter()
            .flat_map(|s| other.target.shifts.iter().map(move |t| s + t))
            .collect();
        let source = FreeModule::new(ring.clone(), src_shifts);
        let target = FreeModule::new(ring.clone(), tgt_shifts);
        let mut cols = Vec::with_capacity(source.rank());
        for j in 0..self.ncols() {
            for jb in 0..other.ncols() {
                let mut col = vec_zero(target.rank());
                for i in 0..self.nrows() {
                    if self.entry(i, j).is_zero() {
                        continue;
                    }
                    for ib in 0..other.nrows() {
                        let prod = self.entry(i, j).mul(other.entry(ib, jb), ring);
                        col[i * other.nrows() + ib] = ring.normal_form(&prod);
                    }
                }
                cols.push(col);
            }
        }
        ModMap {
            source,
            target,
            cols,
        }
    }

    /// All entries homogeneous of the degree forced by the shifts (degree-0 map).
    pub fn is_degree_zero(&self) -> bool {
        let ring = self.ring();
        for j in 0..self.ncols() {
            for i in 0..self.nrows() {
                let e = self.entry(i, j);
                if e.is_zero() {
                    continue;
                }
                if !e.is_homogeneous(ring) {
                    return false;
                }
                let want = self.source.shifts[j] - self.target.shifts[i];
                if e.degree(ring).unwrap() != want {
                    return false;
                }
            }
        }
        true
    }

    /// Every entry has zero constant term (lies in the irrelevant maximal ideal).
    pub fn is_minimal(&self) -> bool {
        self.cols
            .iter()
            .flatten()
            .all(|p| p.is_zero() || p.constant_coef().is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn compose_and_tensor() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let f1 = FreeModule::std(r.clone(), 1);
        let f2 = FreeModule::std(r.clone(), 2);
        let x = parse_poly("x", &r).unwrap();
        let y = parse_poly("y", &r).unwrap();
        // d1 = (x y): R^2 -> R, d2 = (y, -x)^T : R -> R^2
        let d1 = ModMap::new(f2.clone(), f1.clone(), vec![vec![x.clone()], vec![y.clone()]]);
        let d2 = ModMap::new(
            f1.clone(),
            f2.clone(),
            vec![vec![y.clone(), x.neg(&r)]],
        );
        let c = d1.compose(&d2);
        assert!(c.is_zero());

        let id2 = ModMap::identity(&f2);
        let t = d1.tensor(&id2);
        assert_eq!(t.nrows(), 2);
        assert_eq!(t.ncols(), 4);
        assert_eq!(t.entry(0, 0).display(&r), "x");
        assert_eq!(t.entry(1, 1).display(&r), "x");
        assert_eq!(t.entry(0, 2).display(&r), "y");
    }

    #[test]
    fn degree_zero_check() {
        let r = RingSpec::parse_text("char: 0\nvars: x, y").unwrap();
        let src = FreeModule::new(r.clone(), vec![1]);
        let tgt = FreeModule::new(r.clone(), vec![0]);
        let x = parse_poly("x", &r).unwrap();
        let m = ModMap::new(src, tgt, vec![vec![x]]);
        assert!(m.is_degree_zero());
        assert!(m.is_minimal());
    }
}
