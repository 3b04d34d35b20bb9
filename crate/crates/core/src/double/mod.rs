//! Separable Yetter–Drinfeld double data: validation against the structural
//! constraints, symmetry and indecomposability, and the generators-and-relations
//! presentation of the braided double.

mod presentation;
mod smith;

pub use presentation::{build_presentation, DoublePresentation, Gen, GenExpr, PresentationMeta, Relation, RelationKind, TensorExpr};
pub(crate) use presentation::transpose;

use std::fmt;

use thiserror::Error;

use crate::braiding::{BraidingError, DiagonalBraiding, Realization};
use crate::scalars::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error("invalid double data: {0}")]
    InvalidData(String),
    #[error("validation failed: {0}")]
    ValidationFailed(Box<ValidationReport>),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error(transparent)]
    Nichols(#[from] crate::nichols::NicholsError),
}

/// Realization together with the commutator scalars γ_ij of
/// [f_i, v_j] = γ_ij (k_j − l_i) and the pairing ⟨f_i, v_j⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleData {
    pub name: Option<String>,
    pub realization: Realization,
    pub gamma: Vec<Vec<Scalar>>,
    pub pairing: Vec<Vec<Scalar>>,
    /// Declared separable: distinct λ_i, diagonal γ and pairing.
    pub separable: bool,
    /// Declared square roots r_i with r_i² = q_ii, used by the integral form.
    pub sqrt: Option<Vec<Scalar>>,
}

impl DoubleData {
    pub fn new(realization: Realization, gamma: Vec<Vec<Scalar>>, pairing: Vec<Vec<Scalar>>) -> Result<Self, DoubleError> {
        let n = realization.rank();
        let field = realization.field.clone();
        for (what, m) in [("gamma", &gamma), ("pairing", &pairing)] {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(DoubleError::InvalidData(format!("{what} must be {n}x{n}")));
            }
            if m.iter().flatten().any(|x| x.field() != &field) {
                return Err(DoubleError::InvalidData(format!("{what} entry from another field")));
            }
        }
        Ok(DoubleData { name: None, realization, gamma, pairing, separable: true, sqrt: None })
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_sqrt(mut self, sqrt: Vec<Scalar>) -> Result<Self, DoubleError> {
        if sqrt.len() != self.rank() || sqrt.iter().any(|x| x.field() != self.field()) {
            return Err(DoubleError::InvalidData("sqrt list must have one entry per index".into()));
        }
        self.sqrt = Some(sqrt);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.realization.rank()
    }

    pub fn field(&self) -> &Field {
        &self.realization.field
    }

    /// q_ij = λ_j(k_i), without checking compatibility.
    pub fn braiding(&self) -> DiagonalBraiding {
        let r = &self.realization;
        let n = r.rank();
        let q = (0..n).map(|i| (0..n).map(|j| r.act(j, &r.degrees_k[i])).collect()).collect();
        DiagonalBraiding { field: r.field.clone(), q, realization: Some(r.clone()) }
    }

    /// λ_i = λ_j as characters of G.
    pub fn same_character(&self, i: usize, j: usize) -> bool {
        self.realization.characters[i] == self.realization.characters[j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFlags {
    pub separable: bool,
    pub non_degenerate: bool,
    pub symmetric: bool,
    pub indecomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    pub flags: DoubleFlags,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " [{w}]")?;
            }
            if let Some(n) = &c.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        let fl = &self.flags;
        write!(
            f,
            "separable: {}, non-degenerate: {}, symmetric: {}, indecomposable: {}",
            fl.separable, fl.non_degenerate, fl.symmetric, fl.indecomposable
        )?;
        for n in &self.notes {
            write!(f, "\nnote: {n}")?;
        }
        Ok(())
    }
}

pub const CHECK_COMPATIBILITY: &str = "character compatibility";
pub const CHECK_GAMMA_LAMBDA: &str = "gamma/lambda vanishing";
pub const CHECK_SEPARABLE: &str = "separability";
pub const CHECK_NONDEGENERATE: &str = "non-degeneracy";
pub const CHECK_WEAK_PAIRING: &str = "weak pairing";

pub fn validate(data: &DoubleData) -> ValidationReport {
    let n = data.rank();
    let r = &data.realization;
    let mut checks = Vec::new();

    let compat = r.compatibility_failure().map(|(i, j, p)| format!("({}, {}): lambda_{}(k_{})*lambda_{}(l_{}) = {p}", i + 1, j + 1, j + 1, i + 1, i + 1, j + 1));
    checks.push(Check { name: CHECK_COMPATIBILITY, passed: compat.is_none(), witness: compat.clone(), note: None });

    let mut gl = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if (!data.gamma[i][j].is_zero() || !data.pairing[i][j].is_zero()) && !data.same_character(i, j) {
                gl = Some(format!("({}, {}): gamma = {}, pairing = {}", i + 1, j + 1, data.gamma[i][j], data.pairing[i][j]));
                break 'outer;
            }
        }
    }
    checks.push(Check { name: CHECK_GAMMA_LAMBDA, passed: gl.is_none(), witness: gl, note: None });

    let equal_pair = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| data.same_character(i, j));
    let offdiag = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && (!data.gamma[i][j].is_zero() || !data.pairing[i][j].is_zero()));
    let distinct = equal_pair.is_none();
    let sep = if !data.separable {
        Check { name: CHECK_SEPARABLE, passed: true, witness: None, note: Some("not declared separable".into()) }
    } else if let Some((i, j)) = equal_pair {
        Check { name: CHECK_SEPARABLE, passed: false, witness: Some(format!("({}, {}): lambda_{} = lambda_{}", i + 1, j + 1, i + 1, j + 1)), note: None }
    } else if let Some((i, j)) = offdiag {
        Check { name: CHECK_SEPARABLE, passed: false, witness: Some(format!("({}, {}): off-diagonal gamma or pairing", i + 1, j + 1)), note: None }
    } else {
        Check { name: CHECK_SEPARABLE, passed: true, witness: None, note: None }
    };
    checks.push(sep);

    let zero_gamma: Vec<String> = (0..n).filter(|&i| data.gamma[i][i].is_zero()).map(|i| (i + 1).to_string()).collect();
    let equal_kl: Vec<String> = (0..n)
        .filter(|&i| !data.gamma[i][i].is_zero() && r.degrees_k[i] == r.degrees_l[i])
        .map(|i| (i + 1).to_string())
        .collect();
    let non_degenerate = zero_gamma.is_empty() && equal_kl.is_empty();
    let mut nd_note = Vec::new();
    if !zero_gamma.is_empty() {
        nd_note.push(format!("gamma_ii = 0 for i in {{{}}}", zero_gamma.join(", ")));
    }
    if !equal_kl.is_empty() {
        nd_note.push(format!("k_i = l_i for i in {{{}}}", equal_kl.join(", ")));
    }
    checks.push(Check {
        name: CHECK_NONDEGENERATE,
        passed: true,
        witness: None,
        note: Some(if nd_note.is_empty() { "non-degenerate".into() } else { nd_note.join("; ") }),
    });

    checks.push(Check {
        name: CHECK_WEAK_PAIRING,
        passed: compat.is_none(),
        witness: compat,
        note: Some("diagonal case: equivalent to character compatibility".into()),
    });

    let symmetric = is_symmetric(data);
    let indec = indecomposability_report(data);
    let mut notes = Vec::new();
    if !symmetric {
        notes.push("symmetry tested as l_i = k_i^-1 for every i with gamma_ii != 0".into());
    }
    ValidationReport {
        checks,
        flags: DoubleFlags { separable: distinct, non_degenerate, symmetric, indecomposable: indec.indecomposable },
        notes,
    }
}

/// l_i = k_i^{-1} for every i with γ_ii ≠ 0.
pub fn is_symmetric(data: &DoubleData) -> bool {
    let r = &data.realization;
    (0..data.rank()).all(|i| data.gamma[i][i].is_zero() || r.degrees_l[i] == r.group.inverse(&r.degrees_k[i]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndecomposabilityReport {
    pub indecomposable: bool,
    /// Cokernel G / ⟨k_i, l_i⟩ as Z^free × Π Z/d.
    pub cokernel_free_rank: usize,
    pub cokernel_torsion: Vec<u64>,
}

impl IndecomposabilityReport {
    pub fn cokernel(&self) -> String {
        let mut parts: Vec<String> = self.cokernel_torsion.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.cokernel_free_rank));
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join(" x ")
        }
    }
}

/// Whether k_1..k_n, l_1..l_n generate G, via the Smith form of the
/// relation lattice {k_i, l_i} ∪ {m_t e_t}.
pub fn indecomposability_report(data: &DoubleData) -> IndecomposabilityReport {
    let r = &data.realization;
    let g = &r.group;
    let m = g.ngens();
    let mut rows: Vec<Vec<i128>> =
        r.degrees_k.iter().chain(&r.degrees_l).map(|e| e.0.iter().map(|&x| x as i128).collect()).collect();
    for (t, &ord) in g.torsion_orders.iter().enumerate() {
        let mut row = vec![0; m];
        row[g.free_rank + t] = ord as i128;
        rows.push(row);
    }
    let f = smith::invariant_factors(rows, m);
    let torsion: Vec<u64> = f.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    let free = m - f.len();
    IndecomposabilityReport { indecomposable: torsion.is_empty() && free == 0, cokernel_free_rank: free, cokernel_torsion: torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{AbelianGroup, Character, GroupElem};
    use crate::scalars::FieldSpec;

    fn sl2() -> DoubleData {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(1);
        let ch = Character::new(&g, vec![f.parse("q^2").unwrap()]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![1])], vec![GroupElem(vec![-1])], vec![ch]).unwrap();
        let gamma = vec![vec![f.parse("1/(q - q^-1)").unwrap()]];
        DoubleData::new(real, gamma.clone(), gamma).unwrap()
    }

    #[test]
    fn sl2_passes() {
        let r = validate(&sl2());
        assert!(r.passed(), "{r}");
        assert!(r.flags.symmetric && r.flags.non_degenerate && r.flags.indecomposable && r.flags.separable);
    }

    #[test]
    fn equal_characters_break_separability() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(2);
        let one = f.one();
        let ch = Character::new(&g, vec![one.clone(), one.clone()]).unwrap();
        let k = vec![g.generator(0), g.generator(1)];
        let l = k.iter().map(|x| g.inverse(x)).collect();
        let real = Realization::new(f.clone(), g, k, l, vec![ch.clone(), ch]).unwrap();
        let gamma = vec![vec![one.clone(), one.clone()], vec![f.zero(), one.clone()]];
        let data = DoubleData::new(real, gamma.clone(), gamma).unwrap();
        let r = validate(&data);
        let c = r.check(CHECK_SEPARABLE).unwrap();
        assert!(!c.passed);
        assert!(c.witness.as_ref().unwrap().starts_with("(1, 2)"));
        assert!(r.check(CHECK_GAMMA_LAMBDA).unwrap().passed);
    }

    #[test]
    fn degenerate_gamma() {
        let mut d = sl2();
        let z = d.field().zero();
        d.gamma = vec![vec![z.clone()]];
        d.pairing = vec![vec![z]];
        let r = validate(&d);
        assert!(r.passed());
        assert!(!r.flags.non_degenerate);
        assert!(is_symmetric(&d));
    }

    #[test]
    fn cokernel_of_partial_generation() {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(2);
        let ch = Character::new(&g, vec![f.parse("q^2").unwrap(), f.one()]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![1, 0])], vec![GroupElem(vec![-1, 0])], vec![ch]).unwrap();
        let gamma = vec![vec![f.one()]];
        let rep = indecomposability_report(&DoubleData::new(real, gamma.clone(), gamma).unwrap());
        assert!(!rep.indecomposable);
        assert_eq!(rep.cokernel(), "Z");
        assert!(indecomposability_report(&sl2()).indecomposable);
    }

    #[test]
    fn torsion_cokernel() {
        let f = Field::new(FieldSpec::new(6, &[])).unwrap();
        let g = AbelianGroup::cyclic(6);
        let ch = Character::new(&g, vec![f.zeta(1)]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![2])], vec![GroupElem(vec![4])], vec![ch]).unwrap();
        let gamma = vec![vec![f.one()]];
        let rep = indecomposability_report(&DoubleData::new(real, gamma.clone(), gamma).unwrap());
        assert_eq!(rep.cokernel(), "Z/2");
    }
}
