//! Diagonal braidings Ψ(v_i ⊗ v_j) = q_ij v_j ⊗ v_i, their Yetter–Drinfeld
//! realizations over abelian groups, classification and twist equivalence.

mod cartan;
mod classify;
mod group;
mod twist;

pub use cartan::{connected_components, finite_cartan_type, symmetrizer, CartanData, FiniteTypeResult};
pub use classify::{classify, format_matrix, ClassifyOptions, ClassificationReport, DjData, DjRoot, Positivity};
pub use group::{AbelianGroup, Character, GroupElem};
pub use twist::{is_twist_equivalent, TwistResult};

use thiserror::Error;

use crate::scalars::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidingError {
    #[error("character compatibility fails at ({i}, {j}): lambda_{j}(k_{i}) * lambda_{i}(l_{j}) = {value}")]
    CompatibilityViolated { i: usize, j: usize, value: String },
    #[error("Cartan exponent for ({i}, {j}) not determined within |a| <= {amax}")]
    NotDetermined { i: usize, j: usize, amax: u32 },
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid realization: {0}")]
    InvalidRealization(String),
    #[error("invalid braiding matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
}

/// Yetter–Drinfeld realization: v_i has degree k_i and G acts on it by λ_i.
/// The degrees l_i belong to the dual generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub field: Field,
    pub group: AbelianGroup,
    pub degrees_k: Vec<GroupElem>,
    pub degrees_l: Vec<GroupElem>,
    pub characters: Vec<Character>,
}

impl Realization {
    pub fn new(
        field: Field,
        group: AbelianGroup,
        degrees_k: Vec<GroupElem>,
        degrees_l: Vec<GroupElem>,
        characters: Vec<Character>,
    ) -> Result<Self, BraidingError> {
        let n = characters.len();
        if degrees_k.len() != n || degrees_l.len() != n {
            return Err(BraidingError::InvalidRealization(format!(
                "{} characters but {} k-degrees and {} l-degrees",
                n,
                degrees_k.len(),
                degrees_l.len()
            )));
        }
        if n == 0 {
            return Err(BraidingError::InvalidRealization("rank must be positive".into()));
        }
        for g in degrees_k.iter().chain(&degrees_l) {
            if g.0.len() != group.ngens() {
                return Err(BraidingError::InvalidRealization("degree has wrong length".into()));
            }
        }
        for c in &characters {
            Character::new(&group, c.values.clone())?;
            if c.values.iter().any(|v| v.field() != &field) {
                return Err(BraidingError::InvalidRealization("character value from another field".into()));
            }
        }
        let degrees_k = degrees_k.into_iter().map(|g| group.reduce(g.0)).collect();
        let degrees_l = degrees_l.into_iter().map(|g| group.reduce(g.0)).collect();
        Ok(Realization { field, group, degrees_k, degrees_l, characters })
    }

    pub fn rank(&self) -> usize {
        self.characters.len()
    }

    /// λ_j(g).
    pub fn act(&self, j: usize, g: &GroupElem) -> Scalar {
        self.characters[j].eval(g)
    }

    /// First (i, j) with λ_j(k_i)·λ_i(l_j) ≠ 1, 0-based, with the product.
    pub fn compatibility_failure(&self) -> Option<(usize, usize, Scalar)> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                let p = &self.act(j, &self.degrees_k[i]) * &self.act(i, &self.degrees_l[j]);
                if !p.is_one() {
                    return Some((i, j, p));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalBraiding {
    pub field: Field,
    pub q: Vec<Vec<Scalar>>,
    pub realization: Option<Realization>,
}

impl DiagonalBraiding {
    pub fn new(field: Field, q: Vec<Vec<Scalar>>) -> Result<Self, BraidingError> {
        let n = q.len();
        if n == 0 {
            return Err(BraidingError::InvalidMatrix("empty matrix".into()));
        }
        for (i, row) in q.iter().enumerate() {
            if row.len() != n {
                return Err(BraidingError::InvalidMatrix(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, x) in row.iter().enumerate() {
                if x.is_zero() {
                    return Err(BraidingError::InvalidMatrix(format!("entry ({}, {}) is zero", i + 1, j + 1)));
                }
                if x.field() != &field {
                    return Err(BraidingError::InvalidMatrix("entry from another field".into()));
                }
            }
        }
        Ok(DiagonalBraiding { field, q, realization: None })
    }

    /// q_ij = λ_j(k_i), after checking λ_j(k_i)·λ_i(l_j) = 1.
    pub fn from_realization(real: Realization) -> Result<Self, BraidingError> {
        if let Some((i, j, p)) = real.compatibility_failure() {
            return Err(BraidingError::CompatibilityViolated { i: i + 1, j: j + 1, value: p.to_string() });
        }
        let n = real.rank();
        let q = (0..n).map(|i| (0..n).map(|j| real.act(j, &real.degrees_k[i])).collect()).collect();
        Ok(DiagonalBraiding { field: real.field.clone(), q, realization: Some(real) })
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.q[i][j]
    }

    /// The braiding Ψ^{-1} read on the dual letters: q*_ij = q_ji^{-1}.
    pub fn inverse_braiding(&self) -> DiagonalBraiding {
        let n = self.rank();
        let q = (0..n).map(|i| (0..n).map(|j| self.q[j][i].inv().expect("nonzero")).collect()).collect();
        DiagonalBraiding { field: self.field.clone(), q, realization: None }
    }

    /// Same matrix without the realization.
    pub fn bare(&self) -> DiagonalBraiding {
        DiagonalBraiding { field: self.field.clone(), q: self.q.clone(), realization: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn trivial_characters_give_trivial_braiding() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(2);
        let real = Realization::new(
            f.clone(),
            g.clone(),
            vec![g.generator(0), g.generator(1)],
            vec![g.generator(1), g.generator(0)],
            vec![Character::trivial(&f, &g), Character::trivial(&f, &g)],
        )
        .unwrap();
        let b = DiagonalBraiding::from_realization(real).unwrap();
        assert!(b.q.iter().flatten().all(|x| x.is_one()));
    }

    #[test]
    fn incompatible_realization_is_rejected() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let q = f.param("q").unwrap();
        let g = AbelianGroup::free(1);
        let ch = Character::new(&g, vec![q.clone()]).unwrap();
        // l = k gives λ(k)λ(l) = q² ≠ 1.
        let real = Realization::new(f, g.clone(), vec![g.generator(0)], vec![g.generator(0)], vec![ch]).unwrap();
        assert!(matches!(
            DiagonalBraiding::from_realization(real),
            Err(BraidingError::CompatibilityViolated { i: 1, j: 1, .. })
        ));
    }

    #[test]
    fn two_by_two_example_realization() {
        // k₁ acts by (q, q⁻¹), k₂ by (q⁻¹, −q) on (v₁, v₂).
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let q = f.param("q").unwrap();
        let qi = q.inv().unwrap();
        let g = AbelianGroup::free(2);
        let chars = vec![
            Character::new(&g, vec![q.clone(), qi.clone()]).unwrap(),
            Character::new(&g, vec![qi.clone(), -&q]).unwrap(),
        ];
        let k = vec![g.generator(0), g.generator(1)];
        let l = k.iter().map(|x| g.inverse(x)).collect();
        let b = DiagonalBraiding::from_realization(Realization::new(f, g, k, l, chars).unwrap()).unwrap();
        assert_eq!(b.q, vec![vec![q.clone(), qi.clone()], vec![qi, -&q]]);
    }
}
