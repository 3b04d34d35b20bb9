use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{specialization, IntegralPresentation, LimitError, Specializability};
use crate::nichols::{format_word, TensorVector};
use crate::normalform::{DoubleAlgebra, NormalFormElement, VerificationReport};
use crate::scalars::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieGen {
    V(usize),
    F(usize),
    T(usize),
}

impl fmt::Display for LieGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGen::V(i) => write!(f, "v{}", i + 1),
            LieGen::F(i) => write!(f, "f{}", i + 1),
            LieGen::T(i) => write!(f, "t{}", i + 1),
        }
    }
}

/// Integer combination of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieCombination(pub BTreeMap<LieGen, BigInt>);

impl LieCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: LieGen, c: i64) -> Self {
        let mut m = Self::zero();
        m.add_term(g, &BigInt::from(c));
        m
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, g: LieGen, c: &BigInt) {
        let e = self.0.entry(g).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, o: &LieCombination, c: &BigInt) {
        for (g, x) in &o.0 {
            self.add_term(*g, &(x * c));
        }
    }
}

impl fmt::Display for LieCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.0.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let a = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{a}{g}")?;
            }
        }
        Ok(())
    }
}

/// A specialized Nichols relation, read as a constraint on the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieConstraint {
    pub positive: bool,
    pub degree: usize,
    /// The specialized associative relation over Q.
    pub relation: String,
    /// Left-normed bracket form when the relation is a Lie element.
    pub lie_form: Option<String>,
}

impl fmt::Display for LieConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lie_form {
            Some(l) => write!(f, "{l} = 0"),
            None if self.relation == "0" => write!(f, "vanishes at the classical point (degree {})", self.degree),
            None => write!(f, "non-Lie constraint (degree {}): {} = 0", self.degree, self.relation),
        }
    }
}

/// Brackets of the classical limit on the generators v_i, f_i, t_i. Pairs
/// of two v's or two f's with distinct indices are free and not listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieBracketTable {
    pub rank: usize,
    pub brackets: BTreeMap<(LieGen, LieGen), LieCombination>,
    pub constraints: Vec<LieConstraint>,
}

impl LieBracketTable {
    pub fn generators(&self) -> Vec<LieGen> {
        let n = self.rank;
        (0..n).map(LieGen::V).chain((0..n).map(LieGen::F)).chain((0..n).map(LieGen::T)).collect()
    }

    pub fn bracket(&self, x: LieGen, y: LieGen) -> Option<&LieCombination> {
        self.brackets.get(&(x, y))
    }

    fn bracket_with(&self, x: LieGen, c: &LieCombination) -> Option<LieCombination> {
        let mut out = LieCombination::zero();
        for (g, a) in &c.0 {
            out.add_scaled(self.bracket(x, *g)?, a);
        }
        Some(out)
    }

    /// Jacobi on the triple; None when some needed bracket leaves the span
    /// of the generators.
    pub fn jacobiator(&self, x: LieGen, y: LieGen, z: LieGen) -> Option<LieCombination> {
        let mut s = LieCombination::zero();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            s.add_scaled(&self.bracket_with(a, self.bracket(b, c)?)?, &BigInt::one());
        }
        Some(s)
    }

    /// First generator triple violating Jacobi.
    pub fn jacobi(&self) -> Result<usize, String> {
        let gens = self.generators();
        let mut checked = 0;
        for (a, &x) in gens.iter().enumerate() {
            for (b, &y) in gens.iter().enumerate().skip(a + 1) {
                for &z in gens.iter().skip(b + 1) {
                    if let Some(j) = self.jacobiator(x, y, z) {
                        checked += 1;
                        if !j.is_zero() {
                            return Err(format!("Jacobi fails on ({x}, {y}, {z}): {j}"));
                        }
                    }
                }
            }
        }
        Ok(checked)
    }
}

impl fmt::Display for LieBracketTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "classical brackets:")?;
        for ((x, y), c) in &self.brackets {
            if x < y {
                writeln!(f, "  [{x}, {y}] = {c}")?;
            }
        }
        if !self.constraints.is_empty() {
            writeln!(f, "constraints:")?;
            for c in &self.constraints {
                writeln!(f, "  {c}")?;
            }
        }
        Ok(())
    }
}

struct Specializer {
    target: Field,
    assignment: BTreeMap<String, Scalar>,
}

impl Specializer {
    fn rational(&self, what: &dyn Fn() -> String, c: &Scalar) -> Result<BigRational, LimitError> {
        let s = c.specialize(&self.target, &self.assignment).map_err(|_| {
            LimitError::NotSpecializable(Specializability::DenominatorObstruction(format!("{} has coefficient {c}", what())))
        })?;
        s.as_rational().ok_or_else(|| {
            LimitError::NotSpecializable(Specializability::CyclotomicObstruction(format!("{} specializes to {s}", what())))
        })
    }

    fn integer(&self, what: &dyn Fn() -> String, c: &Scalar) -> Result<BigInt, LimitError> {
        let r = self.rational(what, c)?;
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(LimitError::NonIntegral { what: what(), value: r.to_string() })
        }
    }
}

/// Rewrites x as a combination of v_i, f_i, t_i with integer coefficients
/// at the classical point.
fn to_generators(
    a: &DoubleAlgebra,
    t: &[NormalFormElement],
    sp: &Specializer,
    what: &str,
    x: &NormalFormElement,
) -> Result<LieCombination, LimitError> {
    let n = a.rank();
    let label = || what.to_string();
    let mut out = LieCombination::zero();
    let mut group_part = NormalFormElement::zero(a.field());
    let mut others: BTreeMap<(Vec<u8>, Vec<u8>), Scalar> = BTreeMap::new();
    for (p, c) in x.terms() {
        if p.v.is_empty() && p.f.is_empty() {
            group_part.add_term(p.clone(), c.clone());
        } else {
            let e = others.entry((p.v.clone(), p.f.clone())).or_insert_with(|| a.field().zero());
            *e = &*e + c;
        }
    }
    for ((v, f), c) in others {
        let c = sp.integer(&label, &c)?;
        if c.is_zero() {
            continue;
        }
        let g = match (v.as_slice(), f.as_slice()) {
            ([i], []) => LieGen::V(*i as usize),
            ([], [i]) => LieGen::F(*i as usize),
            _ => return Err(LimitError::NotExpressible(format!("{what} = {x}"))),
        };
        out.add_term(g, &c);
    }
    // peel off t_j through the coefficient of k_j
    for (j, tj) in t.iter().enumerate().take(n) {
        let kj = crate::normalform::PbwTerm { v: vec![], g: a.k(j).clone(), f: vec![] };
        let lead = tj.coeff(&kj);
        let c = group_part.coeff(&kj);
        if c.is_zero() || lead.is_zero() {
            continue;
        }
        let s = c.checked_div(&lead)?;
        group_part = group_part.sub(&tj.scale(&s));
        out.add_term(LieGen::T(j), &sp.integer(&|| format!("{what}: coefficient of t{}", j + 1), &s)?);
    }
    if !group_part.is_zero() {
        return Err(LimitError::NotExpressible(format!("{what} = {x}")));
    }
    Ok(out)
}

fn specialize_vector(sp: &Specializer, v: &TensorVector) -> Result<BTreeMap<Vec<u8>, BigRational>, LimitError> {
    let mut out = BTreeMap::new();
    for (w, c) in v.terms() {
        let r = sp.rational(&|| format!("relation {v}"), c)?;
        if !r.is_zero() {
            out.insert(w.clone(), r);
        }
    }
    Ok(out)
}

fn format_rational_sum(p: &BTreeMap<Vec<u8>, BigRational>, letter: char, shape: impl Fn(&[u8], char) -> String) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (n, (w, c)) in p.iter().enumerate() {
        let neg = c < &BigRational::zero();
        let a = if neg { -c } else { c.clone() };
        s.push_str(match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        if !a.is_one() {
            s.push_str(&format!("{a}*"));
        }
        s.push_str(&shape(w, letter));
    }
    s
}

fn plain_word(w: &[u8], letter: char) -> String {
    format_word(w).replace('v', &letter.to_string())
}

fn left_normed(w: &[u8], letter: char) -> String {
    let mut s = format!("{letter}{}", w[0] + 1);
    for x in &w[1..] {
        s = format!("[{s}, {letter}{}]", x + 1);
    }
    s
}

/// Left-normed bracketing x1...xd ↦ [..[x1, x2], .., xd] expanded in the
/// free associative algebra.
fn dynkin(p: &BTreeMap<Vec<u8>, BigRational>) -> BTreeMap<Vec<u8>, BigRational> {
    let mut out: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
    for (w, c) in p {
        let mut cur: Vec<(Vec<u8>, BigRational)> = vec![(vec![w[0]], c.clone())];
        for &x in &w[1..] {
            let mut next = Vec::with_capacity(cur.len() * 2);
            for (u, a) in cur {
                let mut left = u.clone();
                left.push(x);
                let mut right = vec![x];
                right.extend_from_slice(&u);
                next.push((left, a.clone()));
                next.push((right, -a));
            }
            cur = next;
        }
        for (u, a) in cur {
            let e = out.entry(u).or_insert_with(BigRational::zero);
            *e += a;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn constraint(positive: bool, degree: usize, p: BTreeMap<Vec<u8>, BigRational>) -> LieConstraint {
    let letter = if positive { 'v' } else { 'f' };
    let relation = format_rational_sum(&p, letter, plain_word);
    let d = BigRational::from_integer(BigInt::from(degree));
    let rho = dynkin(&p);
    let scaled: BTreeMap<_, _> = p.iter().map(|(w, c)| (w.clone(), c * &d)).collect();
    let lie_form = (!p.is_empty() && rho == scaled).then(|| {
        // antisymmetry in the innermost bracket
        let mut half: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
        for (w, c) in &p {
            let (mut w, mut c) = (w.clone(), c / &d);
            if w.len() > 1 {
                if w[0] == w[1] {
                    continue;
                }
                if w[0] > w[1] {
                    w.swap(0, 1);
                    c = -c;
                }
            }
            *half.entry(w).or_insert_with(BigRational::zero) += c;
        }
        half.retain(|_, c| !c.is_zero());
        format_rational_sum(&half, letter, left_normed)
    });
    LieConstraint { positive, degree, relation, lie_form }
}

/// Sends every parameter to 1 and reads off the brackets on v_i, f_i, t_i
/// from normal-form commutators.
pub fn classical_limit(pres: &IntegralPresentation) -> Result<LieBracketTable, LimitError> {
    let field = pres.data.field();
    if field.cyclotomic_order() > 2 {
        return Err(LimitError::NotSpecializable(Specializability::CyclotomicObstruction(format!(
            "coefficients live in Q(z) with z of order {}",
            field.cyclotomic_order()
        ))));
    }
    let (target, assignment) = specialization(field);
    let sp = Specializer { target, assignment };
    let a = DoubleAlgebra::new(&pres.data);
    let n = a.rank();
    let element = |g: LieGen| match g {
        LieGen::V(i) => a.v(i),
        LieGen::F(i) => a.f(i),
        LieGen::T(i) => pres.t[i].clone(),
    };
    let gens: Vec<LieGen> = (0..n).map(LieGen::V).chain((0..n).map(LieGen::F)).chain((0..n).map(LieGen::T)).collect();
    let mut brackets = BTreeMap::new();
    for (p, &x) in gens.iter().enumerate() {
        brackets.insert((x, x), LieCombination::zero());
        for &y in &gens[p + 1..] {
            let free = matches!((x, y), (LieGen::V(i), LieGen::V(j)) | (LieGen::F(i), LieGen::F(j)) if i != j);
            if free {
                continue;
            }
            let (ex, ey) = (element(x), element(y));
            let c = a.multiply(&ex, &ey).sub(&a.multiply(&ey, &ex));
            let b = to_generators(&a, &pres.t, &sp, &format!("[{x}, {y}]"), &c)?;
            let mut neg = LieCombination::zero();
            neg.add_scaled(&b, &-BigInt::one());
            brackets.insert((x, y), b);
            brackets.insert((y, x), neg);
        }
    }
    let mut constraints = Vec::new();
    for (positive, rels) in [(true, &pres.positive_relations), (false, &pres.negative_relations)] {
        for r in rels.iter() {
            let degree = r.degree().unwrap_or(0);
            constraints.push(constraint(positive, degree, specialize_vector(&sp, r)?));
        }
    }
    Ok(LieBracketTable { rank: n, brackets, constraints })
}

/// [f_i, v_i] = t_i, [f_i, t_i] = 2f_i, [v_i, t_i] = −2v_i and Jacobi on
/// each triple.
pub fn verify_sl2_triples(table: &LieBracketTable) -> VerificationReport {
    let mut checked = 0;
    let mut failure = None;
    'outer: for i in 0..table.rank {
        let (v, f, t) = (LieGen::V(i), LieGen::F(i), LieGen::T(i));
        for (x, y, want) in [(f, v, LieCombination::single(t, 1)), (f, t, LieCombination::single(f, 2)), (v, t, LieCombination::single(v, -2))] {
            checked += 1;
            match table.bracket(x, y) {
                Some(got) if *got == want => {}
                Some(got) => {
                    failure = Some(format!("[{x}, {y}] = {got}, expected {want}"));
                    break 'outer;
                }
                None => {
                    failure = Some(format!("[{x}, {y}] is not in the table"));
                    break 'outer;
                }
            }
        }
        checked += 1;
        match table.jacobiator(v, f, t) {
            Some(j) if j.is_zero() => {}
            Some(j) => {
                failure = Some(format!("Jacobi fails on ({v}, {f}, {t}): {j}"));
                break;
            }
            None => {
                failure = Some(format!("Jacobi on ({v}, {f}, {t}) leaves the generators"));
                break;
            }
        }
    }
    VerificationReport { name: "sl2 triples".into(), passed: failure.is_none(), checked, failure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::limit::integral_presentation;

    fn table(t: char, n: usize, d: usize) -> LieBracketTable {
        let data = catalog::dj(t, n).unwrap();
        classical_limit(&integral_presentation(&data, None, d).unwrap()).unwrap()
    }

    #[test]
    fn sl2_limit() {
        let tab = table('A', 1, 3);
        let report = verify_sl2_triples(&tab);
        assert!(report.passed, "{report}");
        assert_eq!(tab.bracket(LieGen::F(0), LieGen::T(0)).unwrap().to_string(), "2f1");
        assert!(tab.jacobi().is_ok());
    }

    #[test]
    fn a2_limit_has_serre_constraints_and_cartan_entries() {
        let tab = table('A', 2, 3);
        assert!(verify_sl2_triples(&tab).passed);
        // off-diagonal brackets pick up the Cartan entries
        assert_eq!(tab.bracket(LieGen::F(0), LieGen::T(1)).unwrap().to_string(), "-f1");
        assert_eq!(tab.bracket(LieGen::V(1), LieGen::T(0)).unwrap().to_string(), "v2");
        assert_eq!(tab.bracket(LieGen::T(0), LieGen::T(1)).unwrap().to_string(), "0");
        let lie: Vec<_> = tab.constraints.iter().filter_map(|c| c.lie_form.clone()).collect();
        assert!(lie.iter().any(|l| l.contains("[[v")), "{lie:?}");
        assert!(tab.constraints.iter().all(|c| c.lie_form.is_some()), "{tab}");
        assert!(tab.jacobi().is_ok());
    }

    #[test]
    fn dynkin_test() {
        let one = BigRational::one;
        let comm: BTreeMap<_, _> = [(vec![0, 1], one()), (vec![1, 0], -one())].into_iter().collect();
        assert_eq!(constraint(true, 2, comm).lie_form.as_deref(), Some("[v1, v2]"));
        let sq: BTreeMap<_, _> = [(vec![0, 0], one())].into_iter().collect();
        assert_eq!(constraint(true, 2, sq).lie_form, None);
    }

    #[test]
    fn roots_of_unity_are_refused() {
        let d = catalog::radford(3, 1).unwrap();
        match integral_presentation(&d, None, 2) {
            Ok(p) => assert!(matches!(classical_limit(&p), Err(LimitError::NotSpecializable(_)))),
            Err(e) => assert!(matches!(e, LimitError::MissingSquareRoot(_) | LimitError::NotNormalized { .. }), "{e}"),
        }
    }
}
