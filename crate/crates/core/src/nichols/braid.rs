//! Braid group action on tensor powers and its Matsumoto lift of S_d.

use std::collections::{HashMap, VecDeque};

use super::{ContentBlock, NicholsError, Word};
use crate::braiding::DiagonalBraiding;
use crate::scalars::{Field, Scalar};

/// Ψ_i on a basis word: swaps slots i, i+1 (0-based) and returns q_{w_i w_{i+1}}.
pub fn braid_generator_action(b: &DiagonalBraiding, i: usize, w: &[u8]) -> Result<(Word, Scalar), NicholsError> {
    if i + 1 >= w.len() {
        return Err(NicholsError::SlotOutOfRange { slot: i, len: w.len() });
    }
    let mut out = w.to_vec();
    out.swap(i, i + 1);
    Ok((out, b.q[w[i] as usize][w[i + 1] as usize].clone()))
}

/// A monomial matrix on a content block: column `u` has a single entry
/// `coeff` in row `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub columns: Vec<(usize, Scalar)>,
}

impl MonomialMatrix {
    pub fn identity(field: &Field, m: usize) -> Self {
        MonomialMatrix { columns: (0..m).map(|u| (u, field.one())).collect() }
    }

    /// Dense form, rows indexed by target word.
    pub fn to_dense(&self, field: &Field) -> Vec<Vec<Scalar>> {
        let m = self.columns.len();
        let mut d = vec![vec![field.zero(); m]; m];
        for (u, (t, c)) in self.columns.iter().enumerate() {
            d[*t][u] = c.clone();
        }
        d
    }
}

fn apply_simple(b: &DiagonalBraiding, block: &ContentBlock, i: usize, m: &MonomialMatrix) -> MonomialMatrix {
    let columns = m
        .columns
        .iter()
        .map(|(t, c)| {
            let (w, s) = braid_generator_action(b, i, &block.words[*t]).expect("slot in range");
            (block.index_of(&w).expect("content preserved"), c * &s)
        })
        .collect();
    MonomialMatrix { columns }
}

/// Lift of s_{i₁} s_{i₂} ⋯ s_{i_k} as Ψ_{i₁} ∘ ⋯ ∘ Ψ_{i_k}. Only a reduced
/// expression gives the Matsumoto lift.
pub fn lift_along(b: &DiagonalBraiding, simples: &[usize], block: &ContentBlock) -> Result<MonomialMatrix, NicholsError> {
    let d = block.degree();
    if let Some(&i) = simples.iter().find(|&&i| i + 1 >= d) {
        return Err(NicholsError::SlotOutOfRange { slot: i, len: d });
    }
    let mut m = MonomialMatrix::identity(&b.field, block.len());
    for &i in simples.iter().rev() {
        m = apply_simple(b, block, i, &m);
    }
    Ok(m)
}

fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

/// A reduced expression for `perm`, where perm[k] is the slot that the letter
/// in slot k moves to. The result lists simple transpositions s_i (0-based)
/// left to right.
pub fn reduced_word(perm: &[usize]) -> Result<Vec<usize>, NicholsError> {
    let d = perm.len();
    let mut seen = vec![false; d];
    for &x in perm {
        if x >= d || seen[x] {
            return Err(NicholsError::InvalidPermutation(d));
        }
        seen[x] = true;
    }
    // Peel off left factors: if some letter destined for slot i+1 currently
    // sits before the one destined for slot i, then perm = s_i ∘ (s_i perm).
    let mut p = perm.to_vec();
    let mut out = Vec::new();
    while let Some(i) = (0..d.saturating_sub(1)).find(|&i| {
        let a = p.iter().position(|&x| x == i).unwrap();
        let b = p.iter().position(|&x| x == i + 1).unwrap();
        a > b
    }) {
        out.push(i);
        for x in p.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
    debug_assert_eq!(out.len(), inversions(perm));
    Ok(out)
}

pub fn braid_lift(b: &DiagonalBraiding, perm: &[usize], block: &ContentBlock) -> Result<MonomialMatrix, NicholsError> {
    if perm.len() != block.degree() {
        return Err(NicholsError::InvalidPermutation(block.degree()));
    }
    lift_along(b, &reduced_word(perm)?, block)
}

/// All of S_d, each with one reduced expression, in breadth-first order of
/// the weak order (by length).
pub fn permutations(d: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let id: Vec<usize> = (0..d).collect();
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([(id, Vec::new())]);
    let mut out = Vec::new();
    while let Some((p, word)) = queue.pop_front() {
        for i in 0..d.saturating_sub(1) {
            // s_i ∘ p: swap destinations i and i+1
            let q: Vec<usize> = p.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect();
            if inversions(&q) == word.len() + 1 && !seen.contains_key(&q) {
                seen.insert(q.clone(), ());
                let mut w = vec![i];
                w.extend_from_slice(&word);
                queue.push_back((q, w));
            }
        }
        out.push((p, word));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn example() -> DiagonalBraiding {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let q = [["q", "q^-1"], ["q^-1", "-q"]].iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect();
        DiagonalBraiding::new(f, q).unwrap()
    }

    #[test]
    fn generator_action() {
        let b = example();
        assert_eq!(braid_generator_action(&b, 0, &[0, 1]).unwrap(), (vec![1, 0], b.q[0][1].clone()));
        assert_eq!(braid_generator_action(&b, 0, &[0, 0]).unwrap(), (vec![0, 0], b.q[0][0].clone()));
        let (w, c) = braid_generator_action(&b, 1, &[0, 1, 0]).unwrap();
        assert_eq!(w, vec![0, 0, 1]);
        assert_eq!(c.to_string(), "q^-1");
        assert!(braid_generator_action(&b, 2, &[0, 1, 0]).is_err());
    }

    #[test]
    fn symmetric_group_enumeration() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        for (p, w) in &ps {
            assert_eq!(w.len(), inversions(p));
            assert_eq!(reduced_word(p).unwrap().len(), w.len());
        }
    }

    #[test]
    fn longest_element_two_ways() {
        let f = Field::new(FieldSpec::rational(&["a", "b", "c"])).unwrap();
        let names = ["a", "b", "c"];
        let q: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| f.parse(&format!("{}^{}*{}", names[i], j + 1, names[j])).unwrap()).collect())
            .collect();
        let b = DiagonalBraiding::new(f, q).unwrap();
        let block = ContentBlock::new(vec![1, 1, 1]);
        let x = lift_along(&b, &[0, 1, 0], &block).unwrap();
        let y = lift_along(&b, &[1, 0, 1], &block).unwrap();
        assert_eq!(x, y);
        assert_eq!(braid_lift(&b, &[2, 1, 0], &block).unwrap(), x);
    }

    #[test]
    fn simple_transposition_matrix() {
        let b = example();
        let block = ContentBlock::new(vec![1, 1]);
        let m = braid_lift(&b, &[1, 0], &block).unwrap().to_dense(&b.field);
        // e_(1,2) ↦ q₁₂ e_(2,1), e_(2,1) ↦ q₂₁ e_(1,2)
        assert_eq!(m[1][0], b.q[0][1]);
        assert_eq!(m[0][1], b.q[1][0]);
        assert!(m[0][0].is_zero());
        let id = braid_lift(&b, &[0, 1], &block).unwrap();
        assert_eq!(id, MonomialMatrix::identity(&b.field, 2));
    }
}
