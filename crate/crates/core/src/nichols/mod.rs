//! Tensor algebra T(V) of a diagonally braided space, Woronowicz symmetrizers
//! and the relations of the Nichols algebra through a fixed degree.
//!
//! Letters are 0-based internally. Ψ preserves the content (multiset of
//! letters) of a word, so every computation is done one content block at a
//! time.

mod braid;
mod serre;
mod symmetrizer;

pub use braid::{braid_generator_action, braid_lift, lift_along, permutations, reduced_word, MonomialMatrix};
pub use serre::{
    braided_adjoint, serre_element, twist_scale, verify_ideal_equality, DegreeComparison, IdealReport, IdealStatus,
};
pub use symmetrizer::{
    hilbert_dims, nichols_analysis, nichols_relations, symmetrizer_by_lifts, woronowicz_symmetrizer, BlockData,
    DegreeData, NicholsReport, SymmetrizerEngine,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("slot {slot} out of range for a word of length {len}")]
    SlotOutOfRange { slot: usize, len: usize },
    #[error("indices must differ")]
    SameIndex,
    #[error("letter {0} out of range")]
    InvalidLetter(usize),
    #[error("tensor vector is not homogeneous")]
    NotHomogeneous,
    #[error("relations must have degree at least 2")]
    DegreeTooSmall,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
}

/// A word in the letters 0..n.
pub type Word = Vec<u8>;

/// Content vector of a word: multiplicity of each letter.
pub fn content_of(w: &[u8], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for &a in w {
        c[a as usize] += 1;
    }
    c
}

pub fn format_word(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|a| format!("x{}", a + 1)).collect::<Vec<_>>().join("")
}

/// The basis of T(V) in one content, in lexicographic word order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentBlock {
    pub content: Vec<usize>,
    pub words: Vec<Word>,
}

impl ContentBlock {
    pub fn new(content: Vec<usize>) -> Self {
        let mut words = Vec::new();
        let mut cur = Vec::with_capacity(content.iter().sum());
        let mut rem = content.clone();
        fn rec(rem: &mut Vec<usize>, cur: &mut Word, out: &mut Vec<Word>, left: usize) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for a in 0..rem.len() {
                if rem[a] > 0 {
                    rem[a] -= 1;
                    cur.push(a as u8);
                    rec(rem, cur, out, left - 1);
                    cur.pop();
                    rem[a] += 1;
                }
            }
        }
        let total = content.iter().sum();
        rec(&mut rem, &mut cur, &mut words, total);
        ContentBlock { content, words }
    }

    pub fn degree(&self) -> usize {
        self.content.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.words.binary_search_by(|x| x.as_slice().cmp(w)).ok()
    }

    /// Coordinates of a vector supported in this block.
    pub fn coordinates(&self, v: &TensorVector) -> Vec<Scalar> {
        let mut out = vec![v.field.zero(); self.len()];
        for (w, c) in &v.terms {
            let idx = self.index_of(w).expect("word outside block");
            out[idx] = c.clone();
        }
        out
    }

    pub fn vector(&self, field: &Field, coords: &[Scalar]) -> TensorVector {
        let terms = self.words.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(w, c)| (w.clone(), c.clone())).collect();
        TensorVector { field: field.clone(), terms }
    }
}

/// All content vectors of rank n and degree d, in descending lexicographic order.
pub fn contents(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n - 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=left).rev() {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// A finite linear combination of words of one length and one content.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    field: Field,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorVector {
    pub fn zero(field: &Field) -> Self {
        TensorVector { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn word(field: &Field, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        TensorVector { field: field.clone(), terms }
    }

    pub fn letter(field: &Field, a: usize) -> Self {
        Self::word(field, vec![a as u8])
    }

    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Result<Self, NicholsError> {
        let mut v = TensorVector::zero(field);
        for (w, c) in terms {
            v.add_term(w, &c);
        }
        if !v.is_homogeneous() {
            return Err(NicholsError::NotHomogeneous);
        }
        Ok(v)
    }

    fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return true };
        let mut c0 = first.clone();
        c0.sort_unstable();
        it.all(|w| {
            let mut c = w.clone();
            c.sort_unstable();
            c == c0
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.len())
    }

    pub fn content(&self, n: usize) -> Option<Vec<usize>> {
        self.terms.keys().next().map(|w| content_of(w, n))
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = &*x + c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &TensorVector) -> TensorVector {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero(&self.field);
        }
        TensorVector { field: self.field.clone(), terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Concatenation product in T(V).
    pub fn mul(&self, other: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero(&self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(x * y));
            }
        }
        out
    }

    /// x · self · y for words x, y.
    pub fn sandwich(&self, x: &[u8], y: &[u8]) -> TensorVector {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut v = Vec::with_capacity(x.len() + w.len() + y.len());
                v.extend_from_slice(x);
                v.extend_from_slice(w);
                v.extend_from_slice(y);
                (v, c.clone())
            })
            .collect();
        TensorVector { field: self.field.clone(), terms }
    }

    /// Scales so the lexicographically first coefficient is 1.
    pub fn normalized(&self) -> TensorVector {
        match self.terms.values().next() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Reverses every word.
    pub fn reversed(&self) -> TensorVector {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut r = w.clone();
                r.reverse();
                (r, c.clone())
            })
            .collect();
        TensorVector { field: self.field.clone(), terms }
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let word = format_word(w);
            let neg = -c;
            let (sign, body) = if c.is_one() {
                ("+", word)
            } else if neg.is_one() {
                ("-", word)
            } else {
                let (cs, ns) = (c.to_string(), neg.to_string());
                if cs.starts_with('-') && !ns.starts_with('-') {
                    ("-", format!("({ns})*{word}"))
                } else {
                    ("+", format!("({cs})*{word}"))
                }
            };
            if k == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            f.write_str(&body)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn block_basis_is_multinomial_and_sorted() {
        let b = ContentBlock::new(vec![2, 1, 1]);
        assert_eq!(b.len(), 12);
        assert!(b.words.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(b.index_of(&[0, 0, 1, 2]), Some(0));
    }

    #[test]
    fn content_order() {
        assert_eq!(contents(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(contents(3, 1).len(), 3);
    }

    #[test]
    fn homogeneity_is_enforced() {
        let f = Field::new(FieldSpec::rational(&[])).unwrap();
        assert!(TensorVector::from_terms(&f, [(vec![0, 1], f.one()), (vec![1, 0], f.one())]).is_ok());
        assert_eq!(
            TensorVector::from_terms(&f, [(vec![0, 1], f.one()), (vec![0, 0], f.one())]),
            Err(NicholsError::NotHomogeneous)
        );
    }
}
