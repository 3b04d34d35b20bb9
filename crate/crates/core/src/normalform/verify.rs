use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use super::{add_into, DoubleAlgebra, NormalFormElement, PbwTerm, TensorSquareElement};
use crate::braiding::GroupElem;
use crate::double::{transpose, validate, DoubleData};
use crate::linalg::Echelon;
use crate::nichols::{nichols_analysis, ContentBlock, TensorVector, Word};
use crate::scalars::Scalar;

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub passed: bool,
    /// Number of individual identities evaluated.
    pub checked: usize,
    /// First failing identity, with both sides.
    pub failure: Option<String>,
}

impl VerificationReport {
    fn new(name: &str, checked: usize, failure: Option<String>) -> Self {
        VerificationReport { name: name.to_string(), passed: failure.is_none(), checked, failure }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{}: {} ({} checked)", self.name, tag, self.checked)?;
        if let Some(w) = &self.failure {
            write!(f, "\n  {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum Generator {
    V(usize),
    F(usize),
    G(GroupElem),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::V(i) => write!(f, "v{}", i + 1),
            Generator::F(i) => write!(f, "f{}", i + 1),
            Generator::G(g) => write!(f, "{g}"),
        }
    }
}

fn generators(a: &DoubleAlgebra, with_inverses: bool) -> Vec<Generator> {
    let n = a.rank();
    let grp = a.group();
    let mut out: Vec<Generator> = (0..n).map(Generator::V).collect();
    out.extend((0..n).map(Generator::F));
    for k in 0..grp.ngens() {
        let g = grp.generator(k);
        if with_inverses {
            out.push(Generator::G(grp.inverse(&g)));
        }
        out.push(Generator::G(g));
    }
    out
}

fn element(a: &DoubleAlgebra, g: &Generator) -> NormalFormElement {
    match g {
        Generator::V(i) => a.v(*i),
        Generator::F(i) => a.f(*i),
        Generator::G(h) => a.group_element(h),
    }
}

fn first_failure<T: Sync>(items: Vec<T>, check: impl Fn(&T) -> Option<String> + Sync) -> Option<String> {
    let found: Vec<(usize, String)> =
        items.par_iter().enumerate().filter_map(|(k, x)| check(x).map(|w| (k, w))).collect();
    found.into_iter().min_by_key(|(k, _)| *k).map(|(_, w)| w)
}

/// Δ(xy) = Δ(x)Δ(y) on ordered generator pairs, and associativity on
/// generator triples.
pub fn verify_bialgebra(data: &DoubleData) -> VerificationReport {
    let a = DoubleAlgebra::new(data);
    let gens = generators(&a, false);
    let mut pairs = Vec::new();
    for x in &gens {
        for y in &gens {
            pairs.push((x.clone(), y.clone()));
        }
    }
    let npairs = pairs.len();
    let pair_fail = first_failure(pairs, |(x, y)| {
        let (ex, ey) = (element(&a, x), element(&a, y));
        let lhs = a.coproduct(&a.multiply(&ex, &ey));
        let rhs = a.tensor_multiply(&a.coproduct(&ex), &a.coproduct(&ey));
        (lhs != rhs).then(|| format!("pair ({x}, {y}): Δ({x}{y}) = {lhs}, Δ({x})Δ({y}) = {rhs}"))
    });
    if pair_fail.is_some() {
        return VerificationReport::new("bialgebra", npairs, pair_fail);
    }
    let mut triples = Vec::new();
    for x in &gens {
        for y in &gens {
            for z in &gens {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let ntriples = triples.len();
    let fail = first_failure(triples, |(x, y, z)| {
        let (ex, ey, ez) = (element(&a, x), element(&a, y), element(&a, z));
        let lhs = a.multiply(&a.multiply(&ex, &ey), &ez);
        let rhs = a.multiply(&ex, &a.multiply(&ey, &ez));
        (lhs != rhs).then(|| format!("triple ({x}, {y}, {z}): ({x}{y}){z} = {lhs}, {x}({y}{z}) = {rhs}"))
    });
    VerificationReport::new("bialgebra", npairs + ntriples, fail)
}

/// m(S ⊗ id)Δ(x) = ε(x)1 = m(id ⊗ S)Δ(x) on generators and their inverses.
pub fn verify_antipode(data: &DoubleData) -> VerificationReport {
    let a = DoubleAlgebra::new(data);
    let gens = generators(&a, true);
    let n = gens.len();
    let fail = first_failure(gens, |x| {
        let ex = element(&a, x);
        let expect = a.one().scale(&a.counit(&ex));
        let delta = a.coproduct(&ex);
        let mut left = NormalFormElement::zero(a.field());
        let mut right = NormalFormElement::zero(a.field());
        for ((p, q), c) in delta.terms() {
            let (ep, eq) = (NormalFormElement::monomial(a.field(), p.clone(), c.clone()), a.antipode_term(q));
            right = right.add(&a.multiply(&ep, &eq));
            let (sp, eq) = (a.antipode_term(p).scale(c), NormalFormElement::monomial(a.field(), q.clone(), a.field().one()));
            left = left.add(&a.multiply(&sp, &eq));
        }
        if left != expect {
            Some(format!("m(S⊗id)Δ({x}) = {left}, expected {expect}"))
        } else if right != expect {
            Some(format!("m(id⊗S)Δ({x}) = {right}, expected {expect}"))
        } else {
            None
        }
    });
    VerificationReport::new("antipode", 2 * n, fail)
}

/// (ε ⊗ id)Δ = id = (id ⊗ ε)Δ on generators.
pub fn verify_counit(data: &DoubleData) -> VerificationReport {
    let a = DoubleAlgebra::new(data);
    let gens = generators(&a, false);
    let n = gens.len();
    let fail = first_failure(gens, |x| {
        let ex = element(&a, x);
        let mut left = NormalFormElement::zero(a.field());
        let mut right = NormalFormElement::zero(a.field());
        for ((p, q), c) in a.coproduct(&ex).terms() {
            let ep = a.counit(&NormalFormElement::monomial(a.field(), p.clone(), a.field().one()));
            let eq = a.counit(&NormalFormElement::monomial(a.field(), q.clone(), a.field().one()));
            left.add_term(q.clone(), c * &ep);
            right.add_term(p.clone(), c * &eq);
        }
        if left != ex {
            Some(format!("(ε⊗id)Δ({x}) = {left}"))
        } else if right != ex {
            Some(format!("(id⊗ε)Δ({x}) = {right}"))
        } else {
            None
        }
    });
    VerificationReport::new("counit", 2 * n, fail)
}

type Triple = BTreeMap<(PbwTerm, PbwTerm, PbwTerm), Scalar>;

fn expand_left(a: &DoubleAlgebra, d: &TensorSquareElement) -> Triple {
    let mut out = Triple::new();
    for ((p, q), c) in d.terms() {
        for ((p1, p2), e) in a.coproduct_term(p).terms() {
            add_into(&mut out, (p1.clone(), p2.clone(), q.clone()), c * e);
        }
    }
    out
}

fn expand_right(a: &DoubleAlgebra, d: &TensorSquareElement) -> Triple {
    let mut out = Triple::new();
    for ((p, q), c) in d.terms() {
        for ((q1, q2), e) in a.coproduct_term(q).terms() {
            add_into(&mut out, (p.clone(), q1.clone(), q2.clone()), c * e);
        }
    }
    out
}

/// (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on generators.
pub fn verify_coassociativity(data: &DoubleData) -> VerificationReport {
    let a = DoubleAlgebra::new(data);
    let gens = generators(&a, false);
    let n = gens.len();
    let fail = first_failure(gens, |x| {
        let d = a.coproduct(&element(&a, x));
        (expand_left(&a, &d) != expand_right(&a, &d)).then(|| format!("(Δ⊗id)Δ({x}) ≠ (id⊗Δ)Δ({x})"))
    });
    VerificationReport::new("coassociativity", n, fail)
}

/// γ_ij ≠ 0 forces λ_i(g) = λ_j(g) on every group generator g.
pub fn verify_quasi_yd(data: &DoubleData) -> VerificationReport {
    let r = &data.realization;
    let n = data.rank();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            if data.gamma[i][j].is_zero() {
                continue;
            }
            for k in 0..r.group.ngens() {
                checked += 1;
                let g = r.group.generator(k);
                let (a, b) = (r.act(i, &g), r.act(j, &g));
                if a != b {
                    let w = format!("γ_{}{} ≠ 0 but λ_{}({g}) = {a}, λ_{}({g}) = {b}", i + 1, j + 1, i + 1, j + 1);
                    return VerificationReport::new("quasi-YD", checked, Some(w));
                }
            }
        }
    }
    VerificationReport::new("quasi-YD", checked, None)
}

/// Span of {x·r·y} in one content block, r running over relations with
/// nonnegative remaining content.
struct IdealSpans<'a> {
    rels: &'a [(Vec<usize>, TensorVector)],
    cache: HashMap<Vec<usize>, (ContentBlock, Echelon)>,
}

impl<'a> IdealSpans<'a> {
    fn contains(&mut self, content: &[usize], v: &TensorVector) -> bool {
        if v.is_zero() {
            return true;
        }
        let field = v.field().clone();
        let rels = self.rels;
        let (block, span) = self.cache.entry(content.to_vec()).or_insert_with(|| {
            let block = ContentBlock::new(content.to_vec());
            let mut span = Echelon::new(&field, block.len());
            for (c, r) in rels {
                if c.iter().zip(content).any(|(x, y)| x > y) {
                    continue;
                }
                let rest: Vec<usize> = content.iter().zip(c).map(|(y, x)| y - x).collect();
                for w in ContentBlock::new(rest).words {
                    for s in 0..=w.len() {
                        if span.rank() < block.len() {
                            span.insert(&block.coordinates(&r.sandwich(&w[..s], &w[s..])));
                        }
                    }
                }
            }
            (block, span)
        });
        span.contains(&block.coordinates(v))
    }
}

fn tagged(rels: &[TensorVector], n: usize) -> Vec<(Vec<usize>, TensorVector)> {
    rels.iter().filter_map(|r| r.content(n).map(|c| (c, r.clone()))).collect()
}

fn content(w: &[u8], n: usize) -> Vec<usize> {
    crate::nichols::content_of(w, n)
}

/// For every positive relation r through degree D, each v-part of
/// f_i·r − r·f_i (grouped by group element and f-word) lies in the ideal
/// spanned by the relations; the same for negative relations against v_j.
pub fn verify_triangular(data: &DoubleData, max_degree: usize) -> VerificationReport {
    let a = DoubleAlgebra::new(data);
    let b = data.braiding().bare();
    let (pos, neg) =
        rayon::join(|| nichols_analysis(&b, max_degree), || nichols_analysis(&transpose(&b), max_degree));
    let collect = |r: &crate::nichols::NicholsReport| -> Vec<TensorVector> {
        r.degrees.iter().skip(2).flat_map(|d| d.relations().cloned().collect::<Vec<_>>()).collect()
    };
    triangular_with(&a, &collect(&pos), &collect(&neg))
}

fn triangular_with(a: &DoubleAlgebra, prels: &[TensorVector], nrels: &[TensorVector]) -> VerificationReport {
    let n = a.rank();
    let field = a.field();
    let (ptag, ntag) = (tagged(prels, n), tagged(nrels, n));
    let mut pspan = IdealSpans { rels: &ptag, cache: HashMap::new() };
    let mut nspan = IdealSpans { rels: &ntag, cache: HashMap::new() };
    let mut checked = 0;

    for r in prels {
        let elt = NormalFormElement {
            field: field.clone(),
            terms: r.terms().iter().map(|(w, c)| (PbwTerm { v: w.clone(), g: a.identity(), f: vec![] }, c.clone())).collect(),
        };
        for i in 0..n {
            checked += 1;
            let fi = a.f(i);
            let c = a.multiply(&fi, &elt).sub(&a.multiply(&elt, &fi));
            let mut parts: BTreeMap<(GroupElem, Word, Vec<usize>), Vec<(Word, Scalar)>> = BTreeMap::new();
            for (t, s) in c.terms() {
                parts.entry((t.g.clone(), t.f.clone(), content(&t.v, n))).or_default().push((t.v.clone(), s.clone()));
            }
            for ((g, fw, cont), terms) in parts {
                let v = TensorVector::from_terms(field, terms).expect("letters in range");
                if !pspan.contains(&cont, &v) {
                    let w = format!("[f{}, {}] has part ({v})·[{g}]·f{:?} outside the relation ideal", i + 1, r, fw);
                    return VerificationReport::new("triangular", checked, Some(w));
                }
            }
        }
    }
    for r in nrels {
        let elt = NormalFormElement {
            field: field.clone(),
            terms: r.terms().iter().map(|(w, c)| (PbwTerm { v: vec![], g: a.identity(), f: w.clone() }, c.clone())).collect(),
        };
        for j in 0..n {
            checked += 1;
            let vj = a.v(j);
            let c = a.multiply(&vj, &elt).sub(&a.multiply(&elt, &vj));
            let mut parts: BTreeMap<(Word, GroupElem, Vec<usize>), Vec<(Word, Scalar)>> = BTreeMap::new();
            for (t, s) in c.terms() {
                parts.entry((t.v.clone(), t.g.clone(), content(&t.f, n))).or_default().push((t.f.clone(), s.clone()));
            }
            for ((vw, g, cont), terms) in parts {
                let v = TensorVector::from_terms(field, terms).expect("letters in range");
                if !nspan.contains(&cont, &v) {
                    let w = format!(
                        "[v{}, {}] has part v{:?}·[{g}]·({v}) outside the relation ideal",
                        j + 1,
                        r.to_string().replace('x', "f"),
                        vw
                    );
                    return VerificationReport::new("triangular", checked, Some(w));
                }
            }
        }
    }
    VerificationReport::new("triangular", checked, None)
}

/// Validation checks followed by every structural check.
pub fn verify_hopf(data: &DoubleData, max_degree: usize) -> Vec<VerificationReport> {
    let v = validate(data);
    let mut out: Vec<VerificationReport> = v
        .checks
        .iter()
        .map(|c| VerificationReport::new(c.name, 1, if c.passed { None } else { c.witness.clone().or(Some(String::new())) }))
        .collect();
    out.push(verify_bialgebra(data));
    out.push(verify_antipode(data));
    out.push(verify_counit(data));
    out.push(verify_coassociativity(data));
    out.push(verify_quasi_yd(data));
    out.push(verify_triangular(data, max_degree));
    out
}

fn words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..n as u8).map(move |a| [w.clone(), vec![a]].concat())).collect();
    }
    out
}

/// All monomials V·g·F with #V + #F ≤ max_total and g from `group_part`.
pub fn pbw_monomials(rank: usize, max_total: usize, group_part: &[GroupElem]) -> Vec<PbwTerm> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for lv in 0..=total {
            for v in words(rank, lv) {
                for f in words(rank, total - lv) {
                    for g in group_part {
                        out.push(PbwTerm { v: v.clone(), g: g.clone(), f: f.clone() });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{AbelianGroup, Character, Realization};
    use crate::normalform::tests::sl2;
    use crate::scalars::{Field, FieldSpec};

    #[test]
    fn sl2_is_hopf() {
        for r in verify_hopf(&sl2(), 3) {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn corrupted_l_character_fails_at_first_pair() {
        let mut d = sl2();
        d.realization.degrees_l[0] = GroupElem(vec![-2]);
        let r = verify_bialgebra(&d);
        assert!(!r.passed);
        assert!(r.failure.unwrap().starts_with("pair (f1, v1)"));
    }

    fn mismatched() -> DoubleData {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(2);
        let q = f.param("q").unwrap();
        let one = f.one();
        let c1 = Character::new(&g, vec![q.clone(), one.clone()]).unwrap();
        let c2 = Character::new(&g, vec![one.clone(), q.clone()]).unwrap();
        let k = vec![g.generator(0), g.generator(1)];
        let l = k.iter().map(|x| g.inverse(x)).collect();
        let real = Realization::new(f.clone(), g, k, l, vec![c1, c2]).unwrap();
        let gamma = vec![vec![one.clone(), one.clone()], vec![f.zero(), one.clone()]];
        DoubleData::new(real, gamma.clone(), gamma).unwrap()
    }

    #[test]
    fn gamma_needs_equal_characters() {
        let d = mismatched();
        let q = verify_quasi_yd(&d);
        assert!(!q.passed);
        assert!(q.failure.unwrap().starts_with("γ_12"));
        let b = verify_bialgebra(&d);
        assert!(!b.passed, "{b}");
        assert!(b.failure.unwrap().starts_with("triple"));
    }

    #[test]
    fn triangular_on_catalog_data() {
        for d in [crate::catalog::dj('A', 2).unwrap(), crate::catalog::radford(3, 1).unwrap()] {
            let r = verify_triangular(&d, 4);
            assert!(r.passed, "{r}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn inverse_braiding_relations_are_not_triangular() {
        let d = crate::catalog::multiparameter_gl(3).unwrap();
        let b = d.braiding().bare();
        let a = DoubleAlgebra::new(&d);
        let pos = nichols_analysis(&b, 3).degrees[3].relations().cloned().collect::<Vec<_>>();
        let good = nichols_analysis(&transpose(&b), 3).degrees[3].relations().cloned().collect::<Vec<_>>();
        let bad = nichols_analysis(&b.inverse_braiding(), 3).degrees[3].relations().cloned().collect::<Vec<_>>();
        assert!(triangular_with(&a, &pos, &good).passed);
        let r = triangular_with(&a, &pos, &bad);
        assert!(!r.passed);
        assert!(r.failure.unwrap().contains("outside the relation ideal"));
    }

    #[test]
    fn zero_gamma_is_triangular() {
        let mut d = mismatched();
        let z = d.field().zero();
        d.gamma = vec![vec![z.clone(), z.clone()], vec![z.clone(), z]];
        assert!(verify_triangular(&d, 3).passed);
        assert!(verify_bialgebra(&d).passed);
    }

    #[test]
    fn catalog_entries_are_hopf() {
        use crate::catalog::*;
        let all = [
            dj('A', 1),
            dj('B', 2),
            multiparameter_gl(2),
            multiparameter_gl(3),
            radford(2, 1),
            radford(5, 1),
            cartan_not_dj(),
            mixed(3),
        ];
        for d in all {
            let d = d.unwrap();
            for r in verify_hopf(&d, 3) {
                assert!(r.passed, "{:?} {r}", d.name);
            }
        }
    }

    #[test]
    fn pbw_count() {
        let g = vec![GroupElem(vec![0])];
        assert_eq!(pbw_monomials(2, 2, &g).len(), 1 + 4 + 12);
    }
}
