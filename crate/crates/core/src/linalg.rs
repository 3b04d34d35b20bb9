//! Dense exact linear algebra over [`Scalar`].
//!
//! Vectors are `Vec<Scalar>`. [`Echelon`] keeps an incrementally grown row
//! echelon basis; it backs rank, span membership and kernel computation.

use crate::scalars::{Field, Scalar};

/// Row echelon basis of a subspace of K^n. Rows are sorted by pivot column,
/// each row is zero before its pivot and has 1 at the pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    n: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(field: &Field, n: usize) -> Self {
        Echelon { field: field.clone(), n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for k in *p..self.n {
                if !row[k].is_zero() {
                    v[k] = &v[k] - &(&c * &row[k]);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the basis; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = r[p].inv().expect("nonzero pivot");
        let row: Vec<Scalar> = r.iter().map(|c| if c.is_zero() { c.clone() } else { c * &inv }).collect();
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, row));
        true
    }

    /// Fully reduced form: every pivot column is zero outside its own row.
    fn back_substitute(&mut self) {
        for i in (0..self.rows.len()).rev() {
            let (p, row) = self.rows[i].clone();
            for j in 0..i {
                let c = self.rows[j].1[p].clone();
                if c.is_zero() {
                    continue;
                }
                let target = &mut self.rows[j].1;
                for k in p..self.n {
                    if !row[k].is_zero() {
                        target[k] = &target[k] - &(&c * &row[k]);
                    }
                }
            }
        }
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Basis of the orthogonal complement {x : row·x = 0 for every row}.
    /// One vector per non-pivot column, in increasing column order, each
    /// scaled so that its first nonzero entry is 1.
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        let mut full = self.clone();
        full.back_substitute();
        let pivots = full.pivots();
        let mut out = Vec::new();
        for j in 0..self.n {
            if pivots.contains(&j) {
                continue;
            }
            let mut x = vec![self.field.zero(); self.n];
            x[j] = self.field.one();
            for (p, row) in &full.rows {
                if !row[j].is_zero() {
                    x[*p] = -&row[j];
                }
            }
            out.push(normalize_leading(x));
        }
        out
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize_leading(v: Vec<Scalar>) -> Vec<Scalar> {
    let Some(first) = v.iter().find(|c| !c.is_zero()) else {
        return v;
    };
    if first.is_one() {
        return v;
    }
    let inv = first.inv().expect("nonzero");
    v.iter().map(|c| c * &inv).collect()
}

pub fn rank(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.rank() == ncols {
            break;
        }
    }
    e.rank()
}

/// Right kernel {x : M x = 0} of a matrix given by rows.
pub fn kernel(field: &Field, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
    }
    e.annihilator()
}

pub fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar], field: &Field) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(field.zero(), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let q = f.param("q").unwrap();
        let m = vec![vec![f.one(), q.clone()], vec![q.inv().unwrap(), f.one()]];
        let k = kernel(&f, &m, 2);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&m, &k[0], &f).iter().all(|c| c.is_zero()));
        assert!(k[0][0].is_one());
        assert_eq!(rank(&f, &m, 2), 1);
    }

    #[test]
    fn span_membership() {
        let f = Field::new(FieldSpec::rational(&[])).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(&[f.int(1), f.int(2), f.int(0)]));
        assert!(e.insert(&[f.int(0), f.int(1), f.int(1)]));
        assert!(!e.insert(&[f.int(2), f.int(5), f.int(1)]));
        assert!(!e.contains(&[f.int(0), f.int(0), f.int(1)]));
        let ann = e.annihilator();
        assert_eq!(ann.len(), 1);
        let half = f.int(1) / f.int(2);
        assert_eq!(ann[0], vec![f.int(1), -&half, half.clone()]);
    }
}
