//! Integral form with the extra generators t_i = [f_i, v_i], the ring map
//! sending every parameter to 1, and the resulting classical brackets.

mod lie;

pub use lie::{classical_limit, verify_sl2_triples, LieBracketTable, LieCombination, LieConstraint, LieGen};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::double::{build_presentation, validate, DoubleData, DoubleError, DoublePresentation, Gen, RelationKind};
use crate::nichols::TensorVector;
use crate::normalform::{DoubleAlgebra, NormalFormElement, PbwTerm, TensorSquareElement};
use crate::scalars::{Field, FieldSpec, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitError {
    #[error("data is not of separable type")]
    NotSeparable,
    #[error("pairing is degenerate")]
    NotNonDegenerate,
    #[error("no square root declared for index {0}")]
    MissingSquareRoot(usize),
    #[error("declared root for index {index} squares to {square}, not q_ii = {q}")]
    WrongSquareRoot { index: usize, square: String, q: String },
    #[error("gamma_{index}{index} = {found}, expected 1/(r - r^-1) = {expected}")]
    NotNormalized { index: usize, found: String, expected: String },
    #[error("not specializable: {0}")]
    NotSpecializable(Specializability),
    #[error("{what} specializes to {value}, which is not an integer")]
    NonIntegral { what: String, value: String },
    #[error("{0} is not a combination of generators")]
    NotExpressible(String),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Which identity of the integral form a relation instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntegralKind {
    /// [f_i, t_j] = δ_ij (r_i k_i f_i + r_i⁻¹ l_i f_i)
    FT,
    /// [v_i, t_j] = −δ_ij (r_i⁻¹ k_i v_i + r_i l_i v_i)
    VT,
    /// [t_i, t_j] = 0
    TT,
    /// r_i (k_i − l_i) = (q_ii − 1) t_i
    KL,
    /// [f_i, v_j] = δ_ij t_i
    FV,
}

/// One relation with the right-hand side it asserts and the normal form
/// actually computed for its left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRelation {
    pub kind: IntegralKind,
    pub i: usize,
    pub j: usize,
    pub statement: String,
    pub expected: NormalFormElement,
    pub computed: NormalFormElement,
}

impl IntegralRelation {
    pub fn holds(&self) -> bool {
        self.expected == self.computed
    }
}

impl fmt::Display for IntegralRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "{}", self.statement)
        } else {
            write!(f, "{}  FAILS: left side is {}", self.statement, self.computed)
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntegralPresentation {
    pub data: DoubleData,
    pub base: DoublePresentation,
    pub sqrt: Vec<Scalar>,
    /// t_i = [f_i, v_i] in normal form.
    pub t: Vec<NormalFormElement>,
    pub relations: Vec<IntegralRelation>,
    /// Nichols relations with cleared denominators, v-words and f-words.
    pub positive_relations: Vec<TensorVector>,
    pub negative_relations: Vec<TensorVector>,
    /// Δ(t_i) = t_i ⊗ k_i + l_i ⊗ t_i, per index.
    pub coproduct_checks: Vec<bool>,
}

impl IntegralPresentation {
    pub fn verified(&self) -> bool {
        self.relations.iter().all(IntegralRelation::holds) && self.coproduct_checks.iter().all(|&b| b)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IntegralRelation> {
        self.relations.iter().filter(|r| !r.holds())
    }

    /// Every scalar the presentation uses, labelled: characters on group
    /// generators, relation coefficients, Nichols coefficients.
    pub fn structure_constants(&self) -> Vec<(String, Scalar)> {
        let r = &self.data.realization;
        let mut out = Vec::new();
        for (j, c) in r.characters.iter().enumerate() {
            for (g, v) in c.values.iter().enumerate() {
                out.push((format!("lambda_{}(g{})", j + 1, g + 1), v.clone()));
            }
        }
        for (i, root) in self.sqrt.iter().enumerate() {
            out.push((format!("r_{}", i + 1), root.clone()));
            out.push((format!("r_{}^-1", i + 1), root.inv().expect("roots are nonzero")));
            out.push((format!("q_{0}{0} - 1", i + 1), &(root * root) - &root.field().one()));
        }
        for (side, rels) in [("positive", &self.positive_relations), ("negative", &self.negative_relations)] {
            for rel in rels {
                for (w, c) in rel.terms() {
                    out.push((format!("{side} relation {rel}: coefficient of {}", crate::nichols::format_word(w)), c.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegralPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.base)?;
        writeln!(f, "t-generators:")?;
        for (i, t) in self.t.iter().enumerate() {
            writeln!(f, "  t{} = {}", i + 1, t)?;
        }
        writeln!(f, "integral relations:")?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        for (i, ok) in self.coproduct_checks.iter().enumerate() {
            let tag = if *ok { "" } else { "  FAILS" };
            writeln!(f, "  Delta(t{0}) = t{0} (x) k{0} + l{0} (x) t{0}{tag}", i + 1)?;
        }
        Ok(())
    }
}

/// Multiplies by the least common denominator of the coefficients.
pub fn clear_denominators(v: &TensorVector) -> TensorVector {
    let mut acc = v.field().one();
    for c in v.terms().values() {
        let x = c * &acc;
        if !x.is_laurent_polynomial() {
            acc = &acc * &x.numer_denom().1;
        }
    }
    v.scale(&acc)
}

fn nichols_vectors(field: &Field, base: &DoublePresentation, kind: RelationKind) -> Vec<TensorVector> {
    base.relations_of(kind)
        .map(|r| {
            let terms = r.lhs.terms.iter().map(|(w, c)| {
                let word = w
                    .iter()
                    .map(|g| match g {
                        Gen::V(i) | Gen::F(i) => *i as u8,
                        Gen::G(_) => unreachable!("Nichols relations have no group letters"),
                    })
                    .collect();
                (word, c.clone())
            });
            clear_denominators(&TensorVector::from_terms(field, terms).expect("letters in range"))
        })
        .collect()
}

fn commutator(a: &DoubleAlgebra, x: &NormalFormElement, y: &NormalFormElement) -> NormalFormElement {
    a.multiply(x, y).sub(&a.multiply(y, x))
}

fn group_times(a: &DoubleAlgebra, g: &crate::braiding::GroupElem, x: &NormalFormElement) -> NormalFormElement {
    a.multiply(&a.group_element(g), x)
}

/// Builds the integral form and checks each of its relations in the free
/// double. `sqrt` overrides the roots declared in `data`.
pub fn integral_presentation(
    data: &DoubleData,
    sqrt: Option<&[Scalar]>,
    max_degree: usize,
) -> Result<IntegralPresentation, LimitError> {
    let report = validate(data);
    if !report.flags.separable {
        return Err(LimitError::NotSeparable);
    }
    if !report.flags.non_degenerate {
        return Err(LimitError::NotNonDegenerate);
    }
    let n = data.rank();
    let roots: Vec<Scalar> = match sqrt.or(data.sqrt.as_deref()) {
        Some(r) if r.len() == n => r.to_vec(),
        Some(r) => return Err(LimitError::MissingSquareRoot(r.len() + 1)),
        None => return Err(LimitError::MissingSquareRoot(1)),
    };
    let b = data.braiding();
    for (i, r) in roots.iter().enumerate() {
        let sq = r * r;
        if sq != b.q[i][i] {
            return Err(LimitError::WrongSquareRoot { index: i + 1, square: sq.to_string(), q: b.q[i][i].to_string() });
        }
        let expected = (r - &r.inv()?).inv()?;
        if data.gamma[i][i] != expected {
            return Err(LimitError::NotNormalized {
                index: i + 1,
                found: data.gamma[i][i].to_string(),
                expected: expected.to_string(),
            });
        }
    }
    let base = build_presentation(data, max_degree)?;
    let a = DoubleAlgebra::new(data);
    let field = data.field();
    let real = &data.realization;
    let t: Vec<NormalFormElement> = (0..n).map(|i| commutator(&a, &a.f(i), &a.v(i))).collect();
    let zero = NormalFormElement::zero(field);

    let mut relations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (k, l) = (&real.degrees_k[i], &real.degrees_l[i]);
            let (r, ri) = (&roots[i], roots[i].inv()?);
            let delta = i == j;
            let fi = a.f(i);
            let ft = if delta {
                group_times(&a, k, &fi).scale(r).add(&group_times(&a, l, &fi).scale(&ri))
            } else {
                zero.clone()
            };
            let stmt = if delta {
                format!("[f{0}, t{0}] = ({r})*k{0}*f{0} + ({ri})*l{0}*f{0}", i + 1)
            } else {
                format!("[f{}, t{}] = 0", i + 1, j + 1)
            };
            relations.push(IntegralRelation {
                kind: IntegralKind::FT,
                i,
                j,
                statement: stmt,
                expected: ft,
                computed: commutator(&a, &fi, &t[j]),
            });
            let vi = a.v(i);
            let vt = if delta {
                group_times(&a, k, &vi).scale(&ri).add(&group_times(&a, l, &vi).scale(r)).scale(&-field.one())
            } else {
                zero.clone()
            };
            let stmt = if delta {
                format!("[v{0}, t{0}] = -({ri})*k{0}*v{0} - ({r})*l{0}*v{0}", i + 1)
            } else {
                format!("[v{}, t{}] = 0", i + 1, j + 1)
            };
            relations.push(IntegralRelation {
                kind: IntegralKind::VT,
                i,
                j,
                statement: stmt,
                expected: vt,
                computed: commutator(&a, &vi, &t[j]),
            });
            if i < j {
                relations.push(IntegralRelation {
                    kind: IntegralKind::TT,
                    i,
                    j,
                    statement: format!("[t{}, t{}] = 0", i + 1, j + 1),
                    expected: zero.clone(),
                    computed: commutator(&a, &t[i], &t[j]),
                });
            }
            relations.push(IntegralRelation {
                kind: IntegralKind::FV,
                i,
                j,
                statement: if delta { format!("[f{0}, v{0}] = t{0}", i + 1) } else { format!("[f{}, v{}] = 0", i + 1, j + 1) },
                expected: if delta { t[i].clone() } else { zero.clone() },
                computed: commutator(&a, &a.f(i), &a.v(j)),
            });
        }
        let (k, l) = (&real.degrees_k[i], &real.degrees_l[i]);
        let r = &roots[i];
        let qm1 = &(r * r) - &field.one();
        relations.push(IntegralRelation {
            kind: IntegralKind::KL,
            i,
            j: i,
            statement: format!("({r})*(k{0} - l{0}) = ({qm1})*t{0}", i + 1),
            expected: a.group_element(k).sub(&a.group_element(l)).scale(r),
            computed: t[i].scale(&qm1),
        });
    }
    relations.sort_by_key(|r| (r.kind, r.i, r.j));

    let coproduct_checks = (0..n)
        .map(|i| {
            let (k, l) = (&real.degrees_k[i], &real.degrees_l[i]);
            let gt = |g| PbwTerm { v: vec![], g, f: vec![] };
            let mut rhs = TensorSquareElement::zero(field);
            for (p, c) in t[i].terms() {
                rhs.add_term(p.clone(), gt(k.clone()), c.clone());
                rhs.add_term(gt(l.clone()), p.clone(), c.clone());
            }
            a.coproduct(&t[i]) == rhs
        })
        .collect();

    Ok(IntegralPresentation {
        positive_relations: nichols_vectors(field, &base, RelationKind::PositiveNichols),
        negative_relations: nichols_vectors(field, &base, RelationKind::NegativeNichols),
        data: data.clone(),
        base,
        sqrt: roots,
        t,
        relations,
        coproduct_checks,
    })
}

/// Verdict for the ring map sending every parameter (and so every declared
/// root) to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specializability {
    Ok,
    CyclotomicObstruction(String),
    DenominatorObstruction(String),
}

impl fmt::Display for Specializability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specializability::Ok => f.write_str("specializable"),
            Specializability::CyclotomicObstruction(w) => write!(f, "cyclotomic obstruction: {w}"),
            Specializability::DenominatorObstruction(w) => write!(f, "denominator obstruction: {w}"),
        }
    }
}

/// Target field Q(ζ_N) without parameters and the assignment t ↦ 1.
pub(crate) fn specialization(field: &Field) -> (Field, BTreeMap<String, Scalar>) {
    let target = Field::new(FieldSpec::new(field.cyclotomic_order(), &[])).expect("valid order");
    let assignment = field.parameters().iter().map(|p| (p.clone(), target.one())).collect();
    (target, assignment)
}

pub fn check_specializable(pres: &IntegralPresentation) -> Specializability {
    let field = pres.data.field();
    let order = field.cyclotomic_order();
    if order > 2 {
        return Specializability::CyclotomicObstruction(format!(
            "z has order {order}, and Phi_{order}(1) != 0 rules out z -> 1"
        ));
    }
    let (target, assignment) = specialization(field);
    for (i, r) in pres.sqrt.iter().enumerate() {
        match r.specialize(&target, &assignment) {
            Ok(x) if x.is_one() => {}
            Ok(x) => return Specializability::CyclotomicObstruction(format!("r_{} specializes to {x}, not 1", i + 1)),
            Err(_) => return Specializability::DenominatorObstruction(format!("r_{} = {r}", i + 1)),
        }
    }
    for (what, c) in pres.structure_constants() {
        if !c.is_laurent_polynomial() {
            return Specializability::DenominatorObstruction(format!("{what} = {c} is not a Laurent polynomial"));
        }
        if c.specialize(&target, &assignment).is_err() {
            return Specializability::DenominatorObstruction(format!("{what} = {c}"));
        }
    }
    Specializability::Ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn sl2_integral_form() {
        let d = catalog::dj('A', 1).unwrap();
        let p = integral_presentation(&d, None, 3).unwrap();
        assert!(p.verified(), "{p}");
        let ft = p.relations.iter().find(|r| r.kind == IntegralKind::FT).unwrap();
        assert_eq!(ft.statement, "[f1, t1] = (q)*k1*f1 + (q^-1)*l1*f1");
        assert_eq!(check_specializable(&p), Specializability::Ok);
    }

    #[test]
    fn off_diagonal_t_brackets_do_not_vanish_for_a2() {
        let d = catalog::dj('A', 2).unwrap();
        let p = integral_presentation(&d, None, 3).unwrap();
        let bad: Vec<(IntegralKind, usize, usize)> = p.failures().map(|r| (r.kind, r.i, r.j)).collect();
        assert_eq!(
            bad,
            vec![(IntegralKind::FT, 0, 1), (IntegralKind::FT, 1, 0), (IntegralKind::VT, 0, 1), (IntegralKind::VT, 1, 0)]
        );
        assert!(p.relations.iter().filter(|r| r.i == r.j).all(IntegralRelation::holds));
        assert!(p.coproduct_checks.iter().all(|&b| b));
    }

    #[test]
    fn root_errors() {
        let d = catalog::dj('A', 1).unwrap();
        let f = d.field().clone();
        let wrong = [f.parse("-q").unwrap()];
        let p = integral_presentation(&d, Some(&wrong), 2);
        assert!(matches!(p, Err(LimitError::NotNormalized { index: 1, .. })));
        let wrong = [f.parse("q^2").unwrap()];
        assert!(matches!(integral_presentation(&d, Some(&wrong), 2), Err(LimitError::WrongSquareRoot { .. })));
        let none = catalog::multiparameter_gl(2).unwrap();
        assert_eq!(integral_presentation(&none, None, 2).unwrap_err(), LimitError::MissingSquareRoot(1));
    }

    #[test]
    fn cyclotomic_obstructions() {
        let d = catalog::mixed(3).unwrap();
        let p = integral_presentation(&d, None, 3).unwrap();
        assert!(matches!(check_specializable(&p), Specializability::CyclotomicObstruction(_)));
        let c = catalog::cartan_not_dj().unwrap();
        let p = integral_presentation(&c, None, 3).unwrap();
        assert!(matches!(check_specializable(&p), Specializability::CyclotomicObstruction(_)));
    }

    #[test]
    fn sign_root_is_obstructed() {
        let d = catalog::dj('A', 1).unwrap();
        let f = d.field().clone();
        // r = -q squares to q^2, and gamma is rescaled to match
        let r = f.parse("-q").unwrap();
        let mut d2 = d.clone();
        d2.gamma[0][0] = (&r - &r.inv().unwrap()).inv().unwrap();
        d2.pairing = d2.gamma.clone();
        let p = integral_presentation(&d2, Some(&[r]), 2).unwrap();
        assert!(p.verified());
        assert!(matches!(check_specializable(&p), Specializability::CyclotomicObstruction(w) if w.contains("-1")));
    }

    #[test]
    fn cleared_relations_are_integral() {
        let d = catalog::dj('B', 2).unwrap();
        let p = integral_presentation(&d, None, 4).unwrap();
        assert!(!p.positive_relations.is_empty());
        for r in p.positive_relations.iter().chain(&p.negative_relations) {
            assert!(r.terms().values().all(Scalar::is_laurent_polynomial), "{r}");
        }
        assert_eq!(check_specializable(&p), Specializability::Ok);
    }
}
