//! Generalized Cartan matrices: components, symmetrizers and finite-type recognition.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::BraidingError;
use crate::scalars::Scalar;

/// Cartan data attached to a braiding. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub a: Vec<Vec<i64>>,
    pub d: Option<Vec<i64>>,
    pub q_j: Option<Vec<Scalar>>,
    pub components: Vec<Vec<usize>>,
}

impl CartanData {
    pub fn from_matrix(a: Vec<Vec<i64>>) -> Result<Self, BraidingError> {
        validate(&a)?;
        let components = connected_components(&a);
        let d = symmetrizer(&a);
        Ok(CartanData { a, d, q_j: None, components })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FiniteTypeResult {
    /// One (family, rank) per connected component, in component order.
    FiniteType(Vec<(char, usize)>),
    NotFinite,
}

impl FiniteTypeResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, FiniteTypeResult::FiniteType(_))
    }

    /// "A2", "A2 x A1", …; None when not finite.
    pub fn name(&self) -> Option<String> {
        match self {
            FiniteTypeResult::FiniteType(parts) => {
                Some(parts.iter().map(|(f, r)| format!("{f}{r}")).collect::<Vec<_>>().join(" x "))
            }
            FiniteTypeResult::NotFinite => None,
        }
    }
}

pub(crate) fn validate(a: &[Vec<i64>]) -> Result<(), BraidingError> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(BraidingError::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(BraidingError::InvalidCartan(format!("a_{0}{0} = {1}, expected 2", i + 1, row[i])));
        }
        for j in 0..n {
            if i != j && row[j] > 0 {
                return Err(BraidingError::InvalidCartan(format!("a_{}{} = {} is positive", i + 1, j + 1, row[j])));
            }
            if (row[j] == 0) != (a[j][i] == 0) {
                return Err(BraidingError::InvalidCartan(format!(
                    "a_{}{} and a_{}{} are not both zero or both nonzero",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// Partition of the indices by the graph with edges a_ij ≠ 0, each part
/// sorted, parts ordered by their least index.
pub fn connected_components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && (a[i][j] != 0 || a[j][i] != 0) {
                    seen[j] = true;
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Least positive integers d_i with d_i a_ij = d_j a_ji (minimal on each
/// component), or None if the matrix is not symmetrizable.
pub fn symmetrizer(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for comp in connected_components(a) {
        let root = comp[0];
        d[root] = Some(BigRational::from_integer(1.into()));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for &j in &comp {
                if j == i || a[i][j] == 0 {
                    continue;
                }
                let want = &di * BigRational::new(a[i][j].into(), a[j][i].into());
                match &d[j] {
                    None => {
                        d[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(existing) if *existing != want => return None,
                    Some(_) => {}
                }
            }
        }
        let lcm = comp.iter().fold(BigInt::from(1), |acc, &i| acc.lcm(d[i].as_ref().unwrap().denom()));
        let ints: Vec<BigInt> = comp.iter().map(|&i| (d[i].as_ref().unwrap() * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in comp.iter().zip(&ints) {
            d[i] = Some(BigRational::from_integer(x / &g));
        }
    }
    d.into_iter().map(|x| i64::try_from(x.unwrap().to_integer()).ok()).collect()
}

fn positive_definite(b: &[Vec<i64>]) -> bool {
    let n = b.len();
    let mut m: Vec<Vec<BigRational>> =
        b.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return false;
        }
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    true
}

/// Names a connected finite-type Dynkin diagram. `idx` lists the component,
/// `d` the symmetrizer.
fn identify(a: &[Vec<i64>], d: &[i64], idx: &[usize]) -> Option<(char, usize)> {
    let r = idx.len();
    if r == 1 {
        return Some(('A', 1));
    }
    let mult = |x: usize, y: usize| a[idx[x]][idx[y]] * a[idx[y]][idx[x]];
    let neighbors: Vec<Vec<usize>> = (0..r).map(|x| (0..r).filter(|&y| y != x && mult(x, y) != 0).collect()).collect();
    let edges: Vec<(usize, usize, i64)> =
        (0..r).flat_map(|x| (x + 1..r).map(move |y| (x, y))).filter(|&(x, y)| mult(x, y) != 0).map(|(x, y)| (x, y, mult(x, y))).collect();
    if edges.len() != r - 1 {
        return None;
    }
    if edges.iter().any(|e| e.2 == 3) {
        return (r == 2).then_some(('G', 2));
    }
    let doubles: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 == 2).collect();
    let max_deg = neighbors.iter().map(|n| n.len()).max().unwrap_or(0);
    match doubles.len() {
        0 => {}
        1 => {
            if max_deg > 2 {
                return None;
            }
            if r == 2 {
                return Some(('B', 2));
            }
            let (x, y, _) = *doubles[0];
            let (end, other) = if neighbors[x].len() == 1 {
                (x, y)
            } else if neighbors[y].len() == 1 {
                (y, x)
            } else {
                return (r == 4).then_some(('F', 4));
            };
            // The end node is the short simple root for B and the long one for C.
            return Some(if d[idx[end]] < d[idx[other]] { ('B', r) } else { ('C', r) });
        }
        _ => return None,
    }
    if max_deg <= 2 {
        return Some(('A', r));
    }
    let branch: Vec<usize> = (0..r).filter(|&x| neighbors[x].len() == 3).collect();
    if branch.len() != 1 || max_deg > 3 {
        return None;
    }
    let c = branch[0];
    let mut arms: Vec<usize> = neighbors[c]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next: Vec<usize> = neighbors[cur].iter().copied().filter(|&y| y != prev).collect();
                match next.as_slice() {
                    [] => return len,
                    [y] => {
                        prev = cur;
                        cur = *y;
                        len += 1;
                    }
                    _ => return usize::MAX,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Some(('D', r)),
        [1, 2, 2] => Some(('E', 6)),
        [1, 2, 3] => Some(('E', 7)),
        [1, 2, 4] => Some(('E', 8)),
        _ => None,
    }
}

/// Finite type iff every component's symmetrized matrix is positive definite.
pub fn finite_cartan_type(a: &[Vec<i64>]) -> Result<FiniteTypeResult, BraidingError> {
    validate(a)?;
    let d = symmetrizer(a).ok_or(BraidingError::NotSymmetrizable)?;
    let mut parts = Vec::new();
    for comp in connected_components(a) {
        let b: Vec<Vec<i64>> = comp.iter().map(|&i| comp.iter().map(|&j| d[i] * a[i][j]).collect()).collect();
        if !positive_definite(&b) {
            return Ok(FiniteTypeResult::NotFinite);
        }
        match identify(a, &d, &comp) {
            Some(t) => parts.push(t),
            None => return Ok(FiniteTypeResult::NotFinite),
        }
    }
    Ok(FiniteTypeResult::FiniteType(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(a: Vec<Vec<i64>>) -> Option<String> {
        finite_cartan_type(&a).unwrap().name()
    }

    #[test]
    fn rank_two() {
        assert_eq!(name(vec![vec![2, -1], vec![-1, 2]]).as_deref(), Some("A2"));
        assert_eq!(name(vec![vec![2, -2], vec![-2, 2]]), None);
        assert_eq!(name(vec![vec![2, -1], vec![-3, 2]]).as_deref(), Some("G2"));
        assert_eq!(name(vec![vec![2, -1], vec![-2, 2]]).as_deref(), Some("B2"));
        assert_eq!(name(vec![vec![2, 0], vec![0, 2]]).as_deref(), Some("A1 x A1"));
    }

    #[test]
    fn rank_two_exhaustive() {
        for x in 1..=5i64 {
            for y in 1..=5i64 {
                let r = finite_cartan_type(&[vec![2, -x], vec![-y, 2]]).unwrap();
                assert_eq!(r.is_finite(), x * y <= 3, "a = {x}, b = {y}");
            }
        }
    }

    #[test]
    fn b_versus_c() {
        // B3: the last simple root is short.
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(symmetrizer(&b3), Some(vec![2, 2, 1]));
        assert_eq!(name(b3).as_deref(), Some("B3"));
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(name(c3).as_deref(), Some("C3"));
    }

    #[test]
    fn simply_laced_and_exceptional() {
        let d4 = vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]];
        assert_eq!(name(d4).as_deref(), Some("D4"));
        let f4 = vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]];
        assert_eq!(name(f4).as_deref(), Some("F4"));
        let mut e6 = vec![vec![0i64; 6]; 6];
        for i in 0..6 {
            e6[i][i] = 2;
        }
        for (x, y) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
            e6[x][y] = -1;
            e6[y][x] = -1;
        }
        assert_eq!(name(e6).as_deref(), Some("E6"));
        // affine A2: a triangle
        let a2_aff = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(name(a2_aff), None);
    }

    #[test]
    fn components() {
        let a = vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 2]];
        assert_eq!(connected_components(&a), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn not_symmetrizable() {
        let a = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert_eq!(finite_cartan_type(&a), Err(BraidingError::NotSymmetrizable));
    }
}
