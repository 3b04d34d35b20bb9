//! Finitely generated abelian groups Z^r × Z/m₁ × … × Z/m_s and their characters.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidingError;
use crate::scalars::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion_orders: Vec<u32>,
}

/// Exponent vector: free slots first, then torsion slots reduced into [0, m).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElem(pub Vec<i64>);

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<u32>) -> Result<Self, BraidingError> {
        if let Some(m) = torsion_orders.iter().find(|&&m| m < 2) {
            return Err(BraidingError::InvalidRealization(format!("torsion order {m} must be at least 2")));
        }
        Ok(AbelianGroup { free_rank, torsion_orders })
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion_orders: Vec::new() }
    }

    pub fn cyclic(m: u32) -> Self {
        AbelianGroup { free_rank: 0, torsion_orders: vec![m] }
    }

    pub fn ngens(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    /// Order of generator `g`, or None for a free generator.
    pub fn generator_order(&self, g: usize) -> Option<u32> {
        g.checked_sub(self.free_rank).map(|t| self.torsion_orders[t])
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.ngens()])
    }

    pub fn generator(&self, g: usize) -> GroupElem {
        let mut v = vec![0; self.ngens()];
        v[g] = 1;
        self.reduce(v)
    }

    pub fn reduce(&self, mut v: Vec<i64>) -> GroupElem {
        for (t, m) in self.torsion_orders.iter().enumerate() {
            let s = self.free_rank + t;
            v[s] = v[s].rem_euclid(*m as i64);
        }
        GroupElem(v)
    }

    pub fn element(&self, v: Vec<i64>) -> Result<GroupElem, BraidingError> {
        if v.len() != self.ngens() {
            return Err(BraidingError::InvalidRealization(format!(
                "group element has {} entries, expected {}",
                v.len(),
                self.ngens()
            )));
        }
        Ok(self.reduce(v))
    }

    pub fn compose(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn inverse(&self, a: &GroupElem) -> GroupElem {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    pub fn power(&self, a: &GroupElem, k: i64) -> GroupElem {
        self.reduce(a.0.iter().map(|x| x * k).collect())
    }

    pub fn is_identity(&self, a: &GroupElem) -> bool {
        a.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| if e == 1 { format!("g{}", g + 1) } else { format!("g{}^{}", g + 1, e) })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A character G → K^×, given by its values on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<Scalar>,
}

impl Character {
    pub fn new(group: &AbelianGroup, values: Vec<Scalar>) -> Result<Self, BraidingError> {
        if values.len() != group.ngens() {
            return Err(BraidingError::InvalidRealization(format!(
                "character has {} values, expected {}",
                values.len(),
                group.ngens()
            )));
        }
        for (g, v) in values.iter().enumerate() {
            if v.is_zero() {
                return Err(BraidingError::InvalidRealization(format!("character value on generator {} is zero", g + 1)));
            }
            if let Some(m) = group.generator_order(g) {
                if !v.pow(m as i64).is_one() {
                    return Err(BraidingError::InvalidRealization(format!(
                        "character value {v} on generator {} of order {m} is not an {m}-th root of unity",
                        g + 1
                    )));
                }
            }
        }
        Ok(Character { values })
    }

    pub fn trivial(field: &Field, group: &AbelianGroup) -> Self {
        Character { values: vec![field.one(); group.ngens()] }
    }

    pub fn eval(&self, g: &GroupElem) -> Scalar {
        let field = self.values[0].field();
        let mut acc = field.one();
        for (v, &e) in self.values.iter().zip(&g.0) {
            if e != 0 {
                acc = &acc * &v.pow(e);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn torsion_reduction() {
        let g = AbelianGroup::new(1, vec![3]).unwrap();
        let a = g.element(vec![2, 5]).unwrap();
        assert_eq!(a.0, vec![2, 2]);
        assert_eq!(g.compose(&a, &g.inverse(&a)), g.identity());
    }

    #[test]
    fn character_order_enforced() {
        let f = Field::new(FieldSpec::new(3, &[])).unwrap();
        let g = AbelianGroup::cyclic(3);
        assert!(Character::new(&g, vec![f.zeta(1)]).is_ok());
        assert!(Character::new(&g, vec![f.int(2)]).is_err());
        let c = Character::new(&g, vec![f.zeta(1)]).unwrap();
        assert_eq!(c.eval(&g.element(vec![2]).unwrap()), f.zeta(2));
    }
}
