//! Twist equivalence of diagonal braidings.

use super::{BraidingError, DiagonalBraiding};
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistResult {
    /// σ_ij = q'_ij q_ij^{-1} for i < j and 1 elsewhere.
    Yes(Vec<Vec<Scalar>>),
    /// First failing pair (0-based), with i ≤ j.
    No(usize, usize),
}

/// b ~ b' iff q_ii = q'_ii and q_ij q_ji = q'_ij q'_ji for all i, j.
pub fn is_twist_equivalent(b: &DiagonalBraiding, b2: &DiagonalBraiding) -> Result<TwistResult, BraidingError> {
    let n = b.rank();
    if b2.rank() != n {
        return Err(BraidingError::RankMismatch(n, b2.rank()));
    }
    if b.field != b2.field {
        return Err(BraidingError::InvalidMatrix("braidings over different fields".into()));
    }
    for i in 0..n {
        for j in i..n {
            let ok = if i == j {
                b.q[i][i] == b2.q[i][i]
            } else {
                &b.q[i][j] * &b.q[j][i] == &b2.q[i][j] * &b2.q[j][i]
            };
            if !ok {
                return Ok(TwistResult::No(i, j));
            }
        }
    }
    let one = b.field.one();
    let sigma = (0..n)
        .map(|i| (0..n).map(|j| if i < j { &b2.q[i][j] / &b.q[i][j] } else { one.clone() }).collect())
        .collect();
    Ok(TwistResult::Yes(sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, FieldSpec};

    fn braiding(f: &Field, rows: &[&[&str]]) -> DiagonalBraiding {
        let q = rows.iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect();
        DiagonalBraiding::new(f.clone(), q).unwrap()
    }

    #[test]
    fn cocycle_is_ratio() {
        let f = Field::new(FieldSpec::rational(&["q", "t"])).unwrap();
        let b = braiding(&f, &[&["q^2", "t*q^-1"], &["t^-1*q^-1", "q^2"]]);
        let b2 = braiding(&f, &[&["q^2", "q^-1"], &["q^-1", "q^2"]]);
        match is_twist_equivalent(&b, &b2).unwrap() {
            TwistResult::Yes(s) => {
                assert_eq!(s[0][1], f.parse("t^-1").unwrap());
                assert!(s[1][0].is_one());
            }
            r => panic!("{r:?}"),
        }
        assert!(matches!(is_twist_equivalent(&b, &b).unwrap(), TwistResult::Yes(s) if s.iter().flatten().all(|x| x.is_one())));
    }

    #[test]
    fn witness() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let b = braiding(&f, &[&["q", "1"], &["1", "q"]]);
        let b2 = braiding(&f, &[&["q", "q"], &["1", "q"]]);
        assert_eq!(is_twist_equivalent(&b, &b2).unwrap(), TwistResult::No(0, 1));
        let b3 = braiding(&f, &[&["q"]]);
        assert!(is_twist_equivalent(&b, &b3).is_err());
    }
}
