//! Generators-and-relations presentation of the braided double U(V, V*).

use std::fmt;

use super::{validate, DoubleData, DoubleError, DoubleFlags};
use crate::braiding::{AbelianGroup, DiagonalBraiding, GroupElem};
use crate::nichols::{nichols_analysis, NicholsReport, TensorVector};
use crate::scalars::Scalar;

/// A generator of the double. Group elements appear as single letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    V(usize),
    G(GroupElem),
    F(usize),
}

impl Gen {
    /// Natural grading: v ↦ 1, f ↦ −1, g ↦ 0.
    pub fn degree(&self) -> i64 {
        match self {
            Gen::V(_) => 1,
            Gen::F(_) => -1,
            Gen::G(_) => 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::V(i) => write!(f, "v{}", i + 1),
            Gen::F(i) => write!(f, "f{}", i + 1),
            Gen::G(g) => write!(f, "{g}"),
        }
    }
}

fn word_string(w: &[Gen]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
    }
}

fn write_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a Scalar)>) -> fmt::Result {
    let mut first = true;
    for (word, c) in terms {
        let neg = -c;
        let (cs, ns) = (c.to_string(), neg.to_string());
        let (sign, body) = if c.is_one() {
            ("+", word)
        } else if neg.is_one() {
            ("-", word)
        } else if cs.starts_with('-') && !ns.starts_with('-') {
            ("-", format!("({ns})*{word}"))
        } else {
            ("+", format!("({cs})*{word}"))
        };
        if first {
            if sign == "-" {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        f.write_str(&body)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A linear combination of words in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenExpr {
    pub terms: Vec<(Vec<Gen>, Scalar)>,
}

impl GenExpr {
    pub fn zero() -> Self {
        GenExpr { terms: Vec::new() }
    }

    pub fn term(word: Vec<Gen>, c: Scalar) -> Self {
        GenExpr { terms: if c.is_zero() { Vec::new() } else { vec![(word, c)] } }
    }

    pub fn plus(mut self, word: Vec<Gen>, c: Scalar) -> Self {
        if !c.is_zero() {
            self.terms.push((word, c));
        }
        self
    }

    /// Common natural degree of all terms, None if empty or mixed.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(w, _)| w.iter().map(Gen::degree).sum::<i64>());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(w, c)| (word_string(w), c)))
    }
}

/// A linear combination of tensors a ⊗ b of generator words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorExpr {
    pub terms: Vec<(Vec<Gen>, Vec<Gen>, Scalar)>,
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(a, b, c)| (format!("{} (x) {}", word_string(a), word_string(b)), c)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationKind {
    Bosonization,
    Commutator,
    PositiveNichols,
    NegativeNichols,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Bosonization => "bosonization",
            RelationKind::Commutator => "commutator",
            RelationKind::PositiveNichols => "positive Nichols",
            RelationKind::NegativeNichols => "negative Nichols",
        })
    }
}

/// lhs = rhs, homogeneous of natural degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub degree: i64,
    pub lhs: GenExpr,
    pub rhs: GenExpr,
}

impl Relation {
    pub fn is_homogeneous(&self) -> bool {
        let degs: Vec<i64> = self.lhs.terms.iter().chain(&self.rhs.terms).map(|(w, _)| w.iter().map(Gen::degree).sum()).collect();
        degs.iter().all(|&d| d == self.degree)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMeta {
    pub degree_bound: usize,
    pub flags: DoubleFlags,
    /// Number of positive / negative relations in degree d, listed for d = 2..=D.
    pub positive_counts: Vec<usize>,
    pub negative_counts: Vec<usize>,
    /// Kernel dimensions of the symmetrizers of the inverse braiding q_ji^{-1},
    /// an independent cross-check of the negative counts.
    pub inverse_braiding_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePresentation {
    pub name: Option<String>,
    pub rank: usize,
    pub group: AbelianGroup,
    pub generators: Vec<Gen>,
    pub relations: Vec<Relation>,
    pub coproducts: Vec<(Gen, TensorExpr)>,
    pub antipodes: Vec<(Gen, GenExpr)>,
    pub counits: Vec<(Gen, Scalar)>,
    pub meta: PresentationMeta,
}

impl DoublePresentation {
    pub fn relations_of(&self, kind: RelationKind) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(move |r| r.kind == kind)
    }
}

impl fmt::Display for DoublePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            writeln!(f, "double {n}")?;
        }
        writeln!(f, "generators: {}", self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))?;
        let mut kind = None;
        for r in &self.relations {
            if kind != Some(r.kind) {
                writeln!(f, "{} relations:", r.kind)?;
                kind = Some(r.kind);
            }
            writeln!(f, "  {r}")?;
        }
        writeln!(f, "coproducts:")?;
        for (g, t) in &self.coproducts {
            writeln!(f, "  D({g}) = {t}")?;
        }
        writeln!(f, "antipode:")?;
        for (g, t) in &self.antipodes {
            writeln!(f, "  S({g}) = {t}")?;
        }
        writeln!(f, "counit:")?;
        for (g, c) in &self.counits {
            writeln!(f, "  e({g}) = {c}")?;
        }
        let m = &self.meta;
        write!(
            f,
            "Nichols relations through degree {}: positive {:?}, negative {:?} (inverse braiding {:?})",
            m.degree_bound, m.positive_counts, m.negative_counts, m.inverse_braiding_counts
        )
    }
}

fn nichols_expr(v: &TensorVector, letter: fn(usize) -> Gen) -> GenExpr {
    GenExpr { terms: v.terms().iter().map(|(w, c)| (w.iter().map(|&a| letter(a as usize)).collect(), c.clone())).collect() }
}

fn counts(r: &NicholsReport) -> Vec<usize> {
    r.degrees.iter().skip(2).map(|d| d.relations().count()).collect()
}

/// Transposed matrix p_ij = q_ji: the braiding of the f-words in the
/// algebra's multiplication order.
pub(crate) fn transpose(b: &DiagonalBraiding) -> DiagonalBraiding {
    let n = b.rank();
    let q = (0..n).map(|i| (0..n).map(|j| b.q[j][i].clone()).collect()).collect();
    DiagonalBraiding { field: b.field.clone(), q, realization: None }
}

pub fn build_presentation(data: &DoubleData, max_degree: usize) -> Result<DoublePresentation, DoubleError> {
    let report = validate(data);
    if !report.passed() {
        return Err(DoubleError::ValidationFailed(Box::new(report)));
    }
    let r = &data.realization;
    let g = &r.group;
    let n = data.rank();
    let field = data.field();
    let one = field.one();
    let b = data.braiding().bare();

    let (pos, (neg, inv)) = rayon::join(
        || nichols_analysis(&b, max_degree),
        || rayon::join(|| nichols_analysis(&transpose(&b), max_degree), || nichols_analysis(&b.inverse_braiding(), max_degree)),
    );

    let gens: Vec<GroupElem> = (0..g.ngens()).map(|k| g.generator(k)).collect();
    let mut relations = Vec::new();
    for h in &gens {
        for i in 0..n {
            let c = r.act(i, h);
            relations.push(Relation {
                kind: RelationKind::Bosonization,
                degree: 1,
                lhs: GenExpr::term(vec![Gen::G(h.clone()), Gen::V(i)], one.clone()),
                rhs: GenExpr::term(vec![Gen::V(i), Gen::G(h.clone())], c.clone()),
            });
            relations.push(Relation {
                kind: RelationKind::Bosonization,
                degree: -1,
                lhs: GenExpr::term(vec![Gen::F(i), Gen::G(h.clone())], one.clone()),
                rhs: GenExpr::term(vec![Gen::G(h.clone()), Gen::F(i)], c),
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let gm = &data.gamma[i][j];
            relations.push(Relation {
                kind: RelationKind::Commutator,
                degree: 0,
                lhs: GenExpr::term(vec![Gen::F(i), Gen::V(j)], one.clone()).plus(vec![Gen::V(j), Gen::F(i)], -&one),
                rhs: GenExpr::term(vec![Gen::G(r.degrees_k[j].clone())], gm.clone()).plus(vec![Gen::G(r.degrees_l[i].clone())], -gm),
            });
        }
    }
    for d in pos.degrees.iter().skip(2) {
        for v in d.relations() {
            relations.push(Relation {
                kind: RelationKind::PositiveNichols,
                degree: d.degree as i64,
                lhs: nichols_expr(v, Gen::V),
                rhs: GenExpr::zero(),
            });
        }
    }
    for d in neg.degrees.iter().skip(2) {
        for v in d.relations() {
            relations.push(Relation {
                kind: RelationKind::NegativeNichols,
                degree: -(d.degree as i64),
                lhs: nichols_expr(v, Gen::F),
                rhs: GenExpr::zero(),
            });
        }
    }
    relations.sort_by(|a, b| {
        let la = a.lhs.terms.first().map(|t| &t.0);
        let lb = b.lhs.terms.first().map(|t| &t.0);
        (a.kind, a.degree.abs(), la).cmp(&(b.kind, b.degree.abs(), lb))
    });

    let mut generators: Vec<Gen> = (0..n).map(Gen::V).collect();
    generators.extend((0..n).map(Gen::F));
    generators.extend(gens.iter().cloned().map(Gen::G));

    let mut coproducts = Vec::new();
    let mut antipodes = Vec::new();
    let mut counits = Vec::new();
    for i in 0..n {
        let k = Gen::G(r.degrees_k[i].clone());
        let l = Gen::G(r.degrees_l[i].clone());
        coproducts.push((
            Gen::V(i),
            TensorExpr { terms: vec![(vec![Gen::V(i)], vec![k], one.clone()), (vec![], vec![Gen::V(i)], one.clone())] },
        ));
        antipodes.push((Gen::V(i), GenExpr::term(vec![Gen::V(i), Gen::G(g.inverse(&r.degrees_k[i]))], -&one)));
        counits.push((Gen::V(i), field.zero()));
        coproducts.push((
            Gen::F(i),
            TensorExpr { terms: vec![(vec![Gen::F(i)], vec![], one.clone()), (vec![l], vec![Gen::F(i)], one.clone())] },
        ));
        antipodes.push((Gen::F(i), GenExpr::term(vec![Gen::G(g.inverse(&r.degrees_l[i])), Gen::F(i)], -&one)));
        counits.push((Gen::F(i), field.zero()));
    }
    for h in &gens {
        coproducts.push((Gen::G(h.clone()), TensorExpr { terms: vec![(vec![Gen::G(h.clone())], vec![Gen::G(h.clone())], one.clone())] }));
        antipodes.push((Gen::G(h.clone()), GenExpr::term(vec![Gen::G(g.inverse(h))], one.clone())));
        counits.push((Gen::G(h.clone()), one.clone()));
    }

    Ok(DoublePresentation {
        name: data.name.clone(),
        rank: n,
        group: g.clone(),
        generators,
        relations,
        coproducts,
        antipodes,
        counits,
        meta: PresentationMeta {
            degree_bound: max_degree,
            flags: report.flags,
            positive_counts: counts(&pos),
            negative_counts: counts(&neg),
            inverse_braiding_counts: counts(&inv),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{Character, Realization};
    use crate::scalars::{Field, FieldSpec};

    fn sl2() -> DoubleData {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(1);
        let ch = Character::new(&g, vec![f.parse("q^2").unwrap()]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![1])], vec![GroupElem(vec![-1])], vec![ch]).unwrap();
        let gamma = vec![vec![f.parse("1/(q - q^-1)").unwrap()]];
        DoubleData::new(real, gamma.clone(), gamma).unwrap()
    }

    #[test]
    fn sl2_presentation() {
        let p = build_presentation(&sl2(), 4).unwrap();
        let comm: Vec<String> = p.relations_of(RelationKind::Commutator).map(|r| r.to_string()).collect();
        assert_eq!(comm, vec!["f1*v1 - v1*f1 = (q/(q^2 - 1))*g1 - (q/(q^2 - 1))*g1^-1"]);
        assert_eq!(p.coproducts[0].1.to_string(), "v1 (x) g1 + 1 (x) v1");
        assert_eq!(p.meta.positive_counts, vec![0, 0, 0]);
        assert!(p.relations.iter().all(|r| r.is_homogeneous()));
        assert_eq!(p.meta.degree_bound, 4);
    }

    #[test]
    fn invalid_data_is_rejected() {
        let mut d = sl2();
        d.realization.degrees_l = vec![GroupElem(vec![1])];
        assert!(matches!(build_presentation(&d, 3), Err(DoubleError::ValidationFailed(_))));
    }

    #[test]
    fn root_of_unity_relation() {
        let f = Field::new(FieldSpec::new(3, &[])).unwrap();
        let g = AbelianGroup::cyclic(3);
        let ch = Character::new(&g, vec![f.zeta(1)]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![1])], vec![GroupElem(vec![2])], vec![ch]).unwrap();
        let gamma = vec![vec![f.one()]];
        let p = build_presentation(&DoubleData::new(real, gamma.clone(), gamma).unwrap(), 4).unwrap();
        let pos: Vec<String> = p.relations_of(RelationKind::PositiveNichols).map(|r| r.to_string()).collect();
        assert_eq!(pos, vec!["v1*v1*v1 = 0", "v1*v1*v1*v1 = 0"]);
        let neg: Vec<String> = p.relations_of(RelationKind::NegativeNichols).map(|r| r.to_string()).collect();
        assert_eq!(neg, vec!["f1*f1*f1 = 0", "f1*f1*f1*f1 = 0"]);
    }
}
