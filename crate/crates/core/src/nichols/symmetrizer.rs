//! Woronowicz symmetrizers per content block, their kernels and ranks.
//!
//! Wor_d is built from Wor_{d-1} by moving each letter to the last slot:
//! Wor_d = (Wor_{d-1} ⊗ id) ∘ Σ_k Ψ_{d-1}⋯Ψ_k, so a column of Wor_d is a
//! combination of columns of lower-degree blocks.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::braid::{lift_along, permutations};
use super::{contents, ContentBlock, NicholsError, TensorVector};
use crate::braiding::DiagonalBraiding;
use crate::linalg::Echelon;
use crate::scalars::Scalar;

type Column = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
struct BlockSym {
    block: ContentBlock,
    columns: Vec<Column>,
}

/// Memoized symmetrizer columns for one braiding.
#[derive(Clone, Debug)]
pub struct SymmetrizerEngine {
    braiding: DiagonalBraiding,
    blocks: HashMap<Vec<usize>, BlockSym>,
}

impl SymmetrizerEngine {
    pub fn new(b: &DiagonalBraiding) -> Self {
        let mut blocks = HashMap::new();
        let zero = vec![0; b.rank()];
        blocks.insert(zero.clone(), BlockSym { block: ContentBlock::new(zero), columns: vec![vec![(0, b.field.one())]] });
        SymmetrizerEngine { braiding: b.bare(), blocks }
    }

    pub fn braiding(&self) -> &DiagonalBraiding {
        &self.braiding
    }

    /// Computes every block of degree ≤ d; blocks of one degree run in parallel.
    pub fn build_through(&mut self, d: usize) {
        let n = self.braiding.rank();
        for e in 1..=d {
            let todo: Vec<Vec<usize>> = contents(n, e).into_iter().filter(|c| !self.blocks.contains_key(c)).collect();
            let done: Vec<(Vec<usize>, BlockSym)> =
                todo.into_par_iter().map(|c| (c.clone(), self.compute(&c))).collect();
            self.blocks.extend(done);
        }
    }

    fn ensure(&mut self, content: &[usize]) {
        if self.blocks.contains_key(content) {
            return;
        }
        for a in 0..content.len() {
            if content[a] > 0 {
                let mut c = content.to_vec();
                c[a] -= 1;
                self.ensure(&c);
            }
        }
        let s = self.compute(content);
        self.blocks.insert(content.to_vec(), s);
    }

    fn compute(&self, content: &[usize]) -> BlockSym {
        let q = &self.braiding.q;
        let block = ContentBlock::new(content.to_vec());
        let columns = block
            .words
            .iter()
            .map(|u| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for k in 0..u.len() {
                    let a = u[k] as usize;
                    let c = u[k + 1..].iter().fold(self.braiding.field.one(), |p, &m| &p * &q[a][m as usize]);
                    let mut rest = u.clone();
                    rest.remove(k);
                    let mut sub = content.to_vec();
                    sub[a] -= 1;
                    let lower = &self.blocks[&sub];
                    let col = &lower.columns[lower.block.index_of(&rest).expect("word in block")];
                    for (t, x) in col {
                        let mut w = lower.block.words[*t].clone();
                        w.push(a as u8);
                        let idx = block.index_of(&w).expect("content preserved");
                        let v = &c * x;
                        match acc.get_mut(&idx) {
                            Some(y) => *y = &*y + &v,
                            None => {
                                acc.insert(idx, v);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        BlockSym { block, columns }
    }

    /// Dense Wor_d on the block, rows indexed by target word.
    pub fn matrix(&mut self, content: &[usize]) -> Vec<Vec<Scalar>> {
        self.ensure(content);
        self.dense(content)
    }

    fn dense(&self, content: &[usize]) -> Vec<Vec<Scalar>> {
        let s = &self.blocks[content];
        let m = s.block.len();
        let mut d = vec![vec![self.braiding.field.zero(); m]; m];
        for (u, col) in s.columns.iter().enumerate() {
            for (t, x) in col {
                d[*t][u] = x.clone();
            }
        }
        d
    }

    /// Rank and kernel basis of Wor_d on the block.
    pub fn block_data(&mut self, content: &[usize]) -> BlockData {
        self.ensure(content);
        self.analyse(content)
    }

    pub(crate) fn analyse(&self, content: &[usize]) -> BlockData {
        let m = self.dense(content);
        let block = ContentBlock::new(content.to_vec());
        let field = &self.braiding.field;
        let mut e = Echelon::new(field, block.len());
        for row in &m {
            e.insert(row);
        }
        let kernel = e.annihilator().iter().map(|v| block.vector(field, v)).collect();
        BlockData { content: content.to_vec(), size: block.len(), rank: e.rank(), kernel }
    }
}

pub fn woronowicz_symmetrizer(b: &DiagonalBraiding, block: &ContentBlock) -> Vec<Vec<Scalar>> {
    SymmetrizerEngine::new(b).matrix(&block.content)
}

/// Σ_{w ∈ S_d} of the Matsumoto lifts, summed directly.
pub fn symmetrizer_by_lifts(b: &DiagonalBraiding, block: &ContentBlock) -> Vec<Vec<Scalar>> {
    let m = block.len();
    let mut acc = vec![vec![b.field.zero(); m]; m];
    for (_, word) in permutations(block.degree()) {
        let lift = lift_along(b, &word, block).expect("reduced word in range");
        for (u, (t, c)) in lift.columns.iter().enumerate() {
            acc[*t][u] = &acc[*t][u] + c;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    pub content: Vec<usize>,
    pub size: usize,
    pub rank: usize,
    pub kernel: Vec<TensorVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeData {
    pub degree: usize,
    pub dim: usize,
    pub blocks: Vec<BlockData>,
}

impl DegreeData {
    pub fn relations(&self) -> impl Iterator<Item = &TensorVector> {
        self.blocks.iter().flat_map(|b| b.kernel.iter())
    }
}

/// Symmetrizer data of B(V) through a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicholsReport {
    pub max_degree: usize,
    pub degrees: Vec<DegreeData>,
}

impl NicholsReport {
    pub fn hilbert_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

pub fn nichols_analysis(b: &DiagonalBraiding, max_degree: usize) -> NicholsReport {
    let mut eng = SymmetrizerEngine::new(b);
    eng.build_through(max_degree);
    let n = b.rank();
    let degrees = (0..=max_degree)
        .map(|d| {
            let cs = contents(n, d);
            let blocks: Vec<BlockData> = cs
                .par_iter()
                .map(|c| eng.analyse(c))
                .collect();
            DegreeData { degree: d, dim: blocks.iter().map(|x| x.rank).sum(), blocks }
        })
        .collect();
    NicholsReport { max_degree, degrees }
}

/// Basis of ker Wor_d, block by block in content order.
pub fn nichols_relations(b: &DiagonalBraiding, d: usize) -> Result<Vec<TensorVector>, NicholsError> {
    if d < 2 {
        return Err(NicholsError::DegreeTooSmall);
    }
    let mut eng = SymmetrizerEngine::new(b);
    eng.build_through(d);
    let blocks: Vec<BlockData> = contents(b.rank(), d).par_iter().map(|c| eng.analyse(c)).collect();
    Ok(blocks.into_iter().flat_map(|x| x.kernel).collect())
}

pub fn hilbert_dims(b: &DiagonalBraiding, max_degree: usize) -> Vec<usize> {
    nichols_analysis(b, max_degree).hilbert_dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, FieldSpec};

    fn braiding(f: &Field, rows: &[&[&str]]) -> DiagonalBraiding {
        let q = rows.iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect();
        DiagonalBraiding::new(f.clone(), q).unwrap()
    }

    /// [d]_q! as a product of geometric sums.
    fn q_factorial(q: &Scalar, d: usize) -> Scalar {
        let one = q.field().one();
        let mut out = one.clone();
        for k in 1..=d {
            let mut s = q.field().zero();
            for e in 0..k {
                s = &s + &q.pow(e as i64);
            }
            out = &out * &s;
        }
        out
    }

    #[test]
    fn degree_two_block() {
        let f = Field::new(FieldSpec::rational(&["a", "b"])).unwrap();
        let b = braiding(&f, &[&["1", "a"], &["b", "1"]]);
        let m = woronowicz_symmetrizer(&b, &ContentBlock::new(vec![1, 1]));
        assert_eq!(m, vec![vec![f.one(), f.parse("b").unwrap()], vec![f.parse("a").unwrap(), f.one()]]);
    }

    #[test]
    fn rank_one_factorials() {
        let f = Field::new(FieldSpec::new(5, &["q"])).unwrap();
        for s in ["q", "z", "-z^2", "q^2*z"] {
            let q = f.parse(s).unwrap();
            let b = DiagonalBraiding::new(f.clone(), vec![vec![q.clone()]]).unwrap();
            for d in 0..=6 {
                let m = woronowicz_symmetrizer(&b, &ContentBlock::new(vec![d]));
                assert_eq!(m[0][0], q_factorial(&q, d), "q = {s}, d = {d}");
            }
        }
    }

    #[test]
    fn root_of_unity_truncates() {
        let f = Field::new(FieldSpec::new(3, &[])).unwrap();
        let b = DiagonalBraiding::new(f.clone(), vec![vec![f.zeta(1)]]).unwrap();
        assert!(woronowicz_symmetrizer(&b, &ContentBlock::new(vec![3]))[0][0].is_zero());
        assert_eq!(hilbert_dims(&b, 5), vec![1, 1, 1, 0, 0, 0]);
        let rel = nichols_relations(&b, 3).unwrap();
        assert_eq!(rel.len(), 1);
        assert_eq!(rel[0].to_string(), "x1x1x1");
    }

    #[test]
    fn recursion_agrees_with_sum_of_lifts() {
        let f = Field::new(FieldSpec::rational(&["a", "b", "c"])).unwrap();
        let b = braiding(&f, &[&["a", "b", "c"], &["a*b", "b^2", "c^-1"], &["a^-1", "2", "c*a"]]);
        for content in [vec![1, 1, 1], vec![2, 1, 0], vec![2, 1, 1], vec![1, 2, 1], vec![0, 3, 1]] {
            let block = ContentBlock::new(content);
            assert_eq!(woronowicz_symmetrizer(&b, &block), symmetrizer_by_lifts(&b, &block));
        }
    }

    #[test]
    fn commuting_pair_relation() {
        let f = Field::new(FieldSpec::rational(&["q", "p"])).unwrap();
        let b = braiding(&f, &[&["q", "p"], &["p^-1", "q"]]);
        let rel = nichols_relations(&b, 2).unwrap();
        assert_eq!(rel.len(), 1);
        // kernel vector ∝ x2x1 − q21 x1x2, normalized at x1x2
        assert_eq!(rel[0].coeff(&[0, 1]), f.one());
        assert_eq!(rel[0].coeff(&[1, 0]), -&f.parse("p").unwrap());
    }

    #[test]
    fn a2_and_a1xa1_dims() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let a2 = braiding(&f, &[&["q^2", "q^-1"], &["q^-1", "q^2"]]);
        assert_eq!(hilbert_dims(&a2, 4), vec![1, 2, 4, 6, 9]);
        let a1a1 = braiding(&f, &[&["q^2", "q"], &["q^-1", "q^2"]]);
        assert_eq!(hilbert_dims(&a1a1, 4), vec![1, 2, 3, 4, 5]);
        let rel = nichols_relations(&a2, 3).unwrap();
        assert_eq!(rel.len(), 2);
    }

    #[test]
    fn parallel_and_lazy_paths_agree() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let b = braiding(&f, &[&["q^2", "q^-2"], &["q^-2", "q^4"]]);
        let mut eng = SymmetrizerEngine::new(&b);
        eng.build_through(4);
        for c in contents(2, 4) {
            assert_eq!(eng.matrix(&c), woronowicz_symmetrizer(&b, &ContentBlock::new(c.clone())));
        }
    }
}
