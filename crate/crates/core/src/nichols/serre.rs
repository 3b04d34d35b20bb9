//! Braided adjoint action, quantum Serre elements and comparison of the
//! ideal they generate with the symmetrizer kernels.

use std::fmt;

use rayon::prelude::*;

use super::symmetrizer::SymmetrizerEngine;
use super::{contents, ContentBlock, NicholsError, TensorVector};
use crate::braiding::{CartanData, DiagonalBraiding};
use crate::linalg::Echelon;
use crate::scalars::Scalar;

/// ad(x_i)(u) = x_i u − (Π_j q_ij^{γ_j}) u x_i for u of content γ.
pub fn braided_adjoint(b: &DiagonalBraiding, i: usize, u: &TensorVector) -> Result<TensorVector, NicholsError> {
    let n = b.rank();
    if i >= n {
        return Err(NicholsError::InvalidLetter(i));
    }
    let Some(gamma) = u.content(n) else {
        return Ok(u.clone());
    };
    let c = gamma.iter().enumerate().fold(b.field.one(), |p, (j, &g)| &p * &b.q[i][j].pow(g as i64));
    let x = [i as u8];
    Ok(u.sandwich(&x, &[]).sub(&u.sandwich(&[], &x).scale(&c)))
}

/// ad(x_i)^{1−a_ij}(x_j).
pub fn serre_element(b: &DiagonalBraiding, a: &CartanData, i: usize, j: usize) -> Result<TensorVector, NicholsError> {
    let n = b.rank();
    if i == j {
        return Err(NicholsError::SameIndex);
    }
    if let Some(&k) = [i, j].iter().find(|&&k| k >= n || k >= a.a.len()) {
        return Err(NicholsError::InvalidLetter(k));
    }
    let mut u = TensorVector::letter(&b.field, j);
    for _ in 0..(1 - a.a[i][j]) {
        u = braided_adjoint(b, i, &u)?;
    }
    Ok(u)
}

/// Rescales a vector of T(V) along a twist: the word w is multiplied by
/// Π_{p<p'} σ(w_p, w_p')^{-1}, with σ(a, b) = sigma[a][b] for a < b and 1
/// otherwise. Maps kernels of Wor for q onto kernels of Wor for q'.
pub fn twist_scale(sigma: &[Vec<Scalar>], v: &TensorVector) -> TensorVector {
    let field = v.field();
    let mut out = TensorVector::zero(field);
    for (w, c) in v.terms() {
        let mut f = field.one();
        for p in 0..w.len() {
            for r in p + 1..w.len() {
                let (a, b) = (w[p] as usize, w[r] as usize);
                if a < b {
                    f = &f * &sigma[a][b];
                }
            }
        }
        out.add_term(w.clone(), &(c / &f));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealStatus {
    Equal,
    IdealProperSubset,
    KernelProperSubset,
    Incomparable,
}

impl fmt::Display for IdealStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealStatus::Equal => "equal",
            IdealStatus::IdealProperSubset => "ideal ⊊ kernel",
            IdealStatus::KernelProperSubset => "kernel ⊊ ideal",
            IdealStatus::Incomparable => "incomparable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    pub status: IdealStatus,
    pub ideal_dim: usize,
    pub kernel_dim: usize,
    /// Kernel vectors outside the ideal.
    pub missing_from_ideal: Vec<TensorVector>,
    /// Ideal vectors outside the kernel.
    pub outside_kernel: Vec<TensorVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub max_degree: usize,
    pub degrees: Vec<DegreeComparison>,
}

impl IdealReport {
    pub fn all_equal(&self) -> bool {
        self.degrees.iter().all(|d| d.status == IdealStatus::Equal)
    }
}

struct BlockCmp {
    ideal_dim: usize,
    kernel_dim: usize,
    missing: Vec<TensorVector>,
    outside: Vec<TensorVector>,
}

fn compare_block(eng: &SymmetrizerEngine, gens: &[(Vec<usize>, TensorVector)], content: &[usize]) -> BlockCmp {
    let b = eng.braiding();
    let field = &b.field;
    let block = ContentBlock::new(content.to_vec());
    let mut ideal = Echelon::new(field, block.len());
    for (c, r) in gens {
        if c.iter().zip(content).any(|(x, y)| x > y) {
            continue;
        }
        let rest: Vec<usize> = content.iter().zip(c).map(|(y, x)| y - x).collect();
        for w in ContentBlock::new(rest).words {
            for s in 0..=w.len() {
                if ideal.rank() == block.len() {
                    break;
                }
                ideal.insert(&block.coordinates(&r.sandwich(&w[..s], &w[s..])));
            }
        }
    }
    let data = eng.analyse(content);
    let mut kernel = Echelon::new(field, block.len());
    for v in &data.kernel {
        kernel.insert(&block.coordinates(v));
    }
    let missing = data.kernel.iter().filter(|v| !ideal.contains(&block.coordinates(v))).cloned().collect();
    let outside = ideal
        .basis()
        .iter()
        .filter(|v| !kernel.contains(v))
        .map(|v| block.vector(field, v).normalized())
        .collect();
    BlockCmp { ideal_dim: ideal.rank(), kernel_dim: kernel.rank(), missing, outside }
}

/// Compares, degree by degree through D, the span of {x·r·y} with ker Wor_d.
pub fn verify_ideal_equality(
    b: &DiagonalBraiding,
    gens: &[TensorVector],
    max_degree: usize,
) -> Result<IdealReport, NicholsError> {
    let n = b.rank();
    let mut tagged = Vec::new();
    for g in gens {
        let c = g.content(n).ok_or(NicholsError::DegreeTooSmall)?;
        if g.degree().unwrap_or(0) < 2 {
            return Err(NicholsError::DegreeTooSmall);
        }
        if g.terms().keys().flatten().any(|&a| a as usize >= n) {
            return Err(NicholsError::InvalidLetter(n));
        }
        tagged.push((c, g.clone()));
    }
    let mut eng = SymmetrizerEngine::new(b);
    eng.build_through(max_degree);
    let mut degrees = Vec::new();
    for d in 2..=max_degree {
        let cmp: Vec<BlockCmp> = contents(n, d).par_iter().map(|c| compare_block(&eng, &tagged, c)).collect();
        let missing: Vec<TensorVector> = cmp.iter().flat_map(|x| x.missing.iter().cloned()).collect();
        let outside: Vec<TensorVector> = cmp.iter().flat_map(|x| x.outside.iter().cloned()).collect();
        let status = match (missing.is_empty(), outside.is_empty()) {
            (true, true) => IdealStatus::Equal,
            (false, true) => IdealStatus::IdealProperSubset,
            (true, false) => IdealStatus::KernelProperSubset,
            (false, false) => IdealStatus::Incomparable,
        };
        degrees.push(DegreeComparison {
            degree: d,
            status,
            ideal_dim: cmp.iter().map(|x| x.ideal_dim).sum(),
            kernel_dim: cmp.iter().map(|x| x.kernel_dim).sum(),
            missing_from_ideal: missing,
            outside_kernel: outside,
        });
    }
    Ok(IdealReport { max_degree, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nichols::{hilbert_dims, nichols_relations};
    use crate::scalars::{Field, FieldSpec};

    fn braiding(f: &Field, rows: &[&[&str]]) -> DiagonalBraiding {
        let q = rows.iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect();
        DiagonalBraiding::new(f.clone(), q).unwrap()
    }

    fn a2(f: &Field) -> DiagonalBraiding {
        braiding(f, &[&["q^2", "q^-1"], &["q^-1", "q^2"]])
    }

    #[test]
    fn adjoint_examples() {
        let f = Field::new(FieldSpec::rational(&["a", "b", "c", "d"])).unwrap();
        let b = braiding(&f, &[&["a", "b"], &["c", "d"]]);
        let x2 = TensorVector::letter(&f, 1);
        let once = braided_adjoint(&b, 0, &x2).unwrap();
        assert_eq!(once.to_string(), "x1x2 - (b)*x2x1");
        let twice = braided_adjoint(&b, 0, &once).unwrap();
        assert_eq!(twice.coeff(&[0, 0, 1]), f.one());
        assert_eq!(twice.coeff(&[0, 1, 0]), -&f.parse("b + a*b").unwrap());
        assert_eq!(twice.coeff(&[1, 0, 0]), f.parse("a*b^2").unwrap());
        let x1 = TensorVector::letter(&f, 0);
        let same = braided_adjoint(&b, 0, &x1).unwrap();
        assert_eq!(same.coeff(&[0, 0]), f.parse("1 - a").unwrap());
    }

    #[test]
    fn serre_elements() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let b = braiding(&f, &[&["q", "q^-1"], &["q^-1", "-q"]]);
        let a = CartanData::from_matrix(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let s = serre_element(&b, &a, 0, 1).unwrap();
        assert_eq!(s.terms().len(), 4);
        assert_eq!(serre_element(&b, &a, 1, 1), Err(NicholsError::SameIndex));
        let a0 = CartanData::from_matrix(vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(serre_element(&b, &a0, 0, 1).unwrap().to_string(), "x1x2 - (q^-1)*x2x1");
    }

    #[test]
    fn serre_element_spans_the_cubic_kernel() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let b = a2(&f);
        let a = CartanData::from_matrix(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let s = serre_element(&b, &a, 0, 1).unwrap().normalized();
        let rel = nichols_relations(&b, 3).unwrap();
        assert_eq!(rel[0], s);
    }

    #[test]
    fn a2_serre_generation() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let b = a2(&f);
        let a = CartanData::from_matrix(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let gens = vec![serre_element(&b, &a, 0, 1).unwrap(), serre_element(&b, &a, 1, 0).unwrap()];
        let r = verify_ideal_equality(&b, &gens, 4).unwrap();
        assert!(r.all_equal(), "{r:?}");
        let one = verify_ideal_equality(&b, &gens[..1], 3).unwrap();
        let d3 = &one.degrees[1];
        assert_eq!(d3.status, IdealStatus::IdealProperSubset);
        assert_eq!(d3.missing_from_ideal, vec![gens[1].normalized()]);
    }

    #[test]
    fn truncated_polynomial_ring() {
        let f = Field::new(FieldSpec::new(3, &[])).unwrap();
        let b = DiagonalBraiding::new(f.clone(), vec![vec![f.zeta(1)]]).unwrap();
        let gens = vec![TensorVector::word(&f, vec![0, 0, 0])];
        assert!(verify_ideal_equality(&b, &gens, 5).unwrap().all_equal());
        let too_big = vec![TensorVector::word(&f, vec![0, 0])];
        let r = verify_ideal_equality(&b, &too_big, 3).unwrap();
        assert_eq!(r.degrees[0].status, IdealStatus::KernelProperSubset);
    }

    #[test]
    fn twist_maps_kernels() {
        let f = Field::new(FieldSpec::rational(&["q", "t"])).unwrap();
        let b = a2(&f);
        let b2 = braiding(&f, &[&["q^2", "t*q^-1"], &["t^-1*q^-1", "q^2"]]);
        let sigma = match crate::braiding::is_twist_equivalent(&b, &b2).unwrap() {
            crate::braiding::TwistResult::Yes(s) => s,
            other => panic!("{other:?}"),
        };
        assert_eq!(hilbert_dims(&b, 4), hilbert_dims(&b2, 4));
        for d in 2..=4 {
            let k2 = nichols_relations(&b2, d).unwrap();
            for v in nichols_relations(&b, d).unwrap() {
                let w = twist_scale(&sigma, &v);
                let c = ContentBlock::new(w.content(2).unwrap());
                let mut e = Echelon::new(&f, c.len());
                for u in k2.iter().filter(|u| u.content(2) == w.content(2)) {
                    e.insert(&c.coordinates(u));
                }
                assert!(e.contains(&c.coordinates(&w)), "degree {d}: {w}");
            }
        }
    }
}
