//! Smith normal form over Z, used to identify G / ⟨k_i, l_i⟩.

/// Invariant factors d_1 | d_2 | … (nonzero only) of an integer matrix.
pub fn invariant_factors(mut m: Vec<Vec<i128>>, ncols: usize) -> Vec<i128> {
    let nrows = m.len();
    let mut out = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // pivot: smallest nonzero |entry| in the remaining submatrix
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.is_none_or(|(a, b)| x.abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..nrows {
                let c = m[i][t] / p;
                if c != 0 {
                    for j in t..ncols {
                        m[i][j] -= c * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..ncols {
                let c = m[t][j] / p;
                if c != 0 {
                    for row in m.iter_mut() {
                        row[j] -= c * row[t];
                    }
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the rest by the pivot
                let bad = (t + 1..nrows).flat_map(|i| (t + 1..ncols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..ncols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..nrows {
                if m[i][t] != 0 && m[i][t].abs() < m[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if m[t][j] != 0 && m[t][j].abs() < m[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(invariant_factors(vec![vec![2, 4], vec![6, 8]], 2), vec![2, 4]);
        assert_eq!(invariant_factors(vec![vec![1, 0], vec![-1, 0]], 2), vec![1]);
        assert_eq!(invariant_factors(vec![vec![4, 6]], 2), vec![2]);
        assert_eq!(invariant_factors(vec![vec![3, 0], vec![0, 2]], 2), vec![1, 6]);
        assert_eq!(invariant_factors(vec![], 3), Vec::<i128>::new());
    }
}
