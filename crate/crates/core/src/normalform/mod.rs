//! PBW normal forms v-word · g · f-word in the free braided double, the
//! product by straightening, and coproducts in A ⊗ A.
//!
//! Rewriting: f_i v_j → v_j f_i + γ_ij (k_j − l_i), g v_i → λ_i(g) v_i g and
//! f_i g → λ_i(g) g f_i. Straightening F·V pulls the letters of V leftwards
//! through F one at a time; every γ-step shortens the word, every swap
//! removes one (f, v) inversion.

mod verify;

pub use verify::{
    pbw_monomials, verify_antipode, verify_bialgebra, verify_coassociativity, verify_counit, verify_hopf,
    verify_quasi_yd, verify_triangular, VerificationReport,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::braiding::{AbelianGroup, GroupElem};
use crate::double::{DoubleData, Gen};
use crate::nichols::{format_word, Word};
use crate::scalars::{Field, Scalar};

/// A PBW monomial v_{a_1}⋯v_{a_m} · g · f_{b_1}⋯f_{b_k}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwTerm {
    pub v: Word,
    pub g: GroupElem,
    pub f: Word,
}

impl PbwTerm {
    /// Natural degree: #v − #f.
    pub fn degree(&self) -> i64 {
        self.v.len() as i64 - self.f.len() as i64
    }
}

impl fmt::Display for PbwTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.v.is_empty() {
            parts.push(format_word(&self.v).replace('x', "v"));
        }
        if self.g.0.iter().any(|&e| e != 0) {
            parts.push(format!("[{}]", self.g));
        }
        if !self.f.is_empty() {
            parts.push(format_word(&self.f).replace('x', "f"));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn write_sum<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (String, &'a Scalar)>) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        let neg = -c;
        let (c, sign) = if c.to_string().starts_with('-') && !neg.to_string().starts_with('-') { (&neg, " - ") } else { (c, " + ") };
        if !first {
            f.write_str(sign)?;
        } else if sign == " - " {
            f.write_str("-")?;
        }
        if c.is_one() {
            f.write_str(&w)?;
        } else {
            write!(f, "({c})*{w}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A linear combination of PBW monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NormalFormElement {
    field: Field,
    terms: BTreeMap<PbwTerm, Scalar>,
}

impl NormalFormElement {
    pub fn zero(field: &Field) -> Self {
        NormalFormElement { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(field: &Field, t: PbwTerm, c: Scalar) -> Self {
        let mut x = Self::zero(field);
        add_into(&mut x.terms, t, c);
        x
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<PbwTerm, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &PbwTerm) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, t: PbwTerm, c: Scalar) {
        add_into(&mut self.terms, t, c);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (t, c) in &o.terms {
            x.add_term(t.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-self.field.one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut x = Self::zero(&self.field);
        for (t, d) in &self.terms {
            x.add_term(t.clone(), d * c);
        }
        x
    }
}

impl fmt::Display for NormalFormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(t, c)| (t.to_string(), c)))
    }
}

impl fmt::Debug for NormalFormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalFormElement({self})")
    }
}

/// Σ c · a ⊗ b with both legs PBW monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSquareElement {
    field: Field,
    terms: BTreeMap<(PbwTerm, PbwTerm), Scalar>,
}

impl TensorSquareElement {
    pub fn zero(field: &Field) -> Self {
        TensorSquareElement { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> &BTreeMap<(PbwTerm, PbwTerm), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: PbwTerm, b: PbwTerm, c: Scalar) {
        add_into(&mut self.terms, (a, b), c);
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for ((a, b), c) in &o.terms {
            x.add_term(a.clone(), b.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for ((a, b), c) in &o.terms {
            x.add_term(a.clone(), b.clone(), -c);
        }
        x
    }
}

impl fmt::Display for TensorSquareElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|((a, b), c)| (format!("{a} (x) {b}"), c)))
    }
}

impl fmt::Debug for TensorSquareElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSquareElement({self})")
    }
}

/// Rewriting context for one set of double data, with memoized character
/// values and straightenings.
pub struct DoubleAlgebra {
    data: DoubleData,
    chars: Mutex<HashMap<(usize, GroupElem), Scalar>>,
    straight: Mutex<HashMap<(Word, Word), NormalFormElement>>,
}

impl DoubleAlgebra {
    pub fn new(data: &DoubleData) -> Self {
        DoubleAlgebra { data: data.clone(), chars: Mutex::new(HashMap::new()), straight: Mutex::new(HashMap::new()) }
    }

    pub fn data(&self) -> &DoubleData {
        &self.data
    }

    pub fn field(&self) -> &Field {
        self.data.field()
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.data.realization.group
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn k(&self, i: usize) -> &GroupElem {
        &self.data.realization.degrees_k[i]
    }

    pub fn l(&self, i: usize) -> &GroupElem {
        &self.data.realization.degrees_l[i]
    }

    /// λ_i(g).
    pub fn lambda(&self, i: usize, g: &GroupElem) -> Scalar {
        if g.0.iter().all(|&e| e == 0) {
            return self.field().one();
        }
        let key = (i, g.clone());
        if let Some(x) = self.chars.lock().unwrap().get(&key) {
            return x.clone();
        }
        let x = self.data.realization.act(i, g);
        self.chars.lock().unwrap().insert(key, x.clone());
        x
    }

    /// Π over the letters a of w of λ_a(g).
    pub fn chi(&self, w: &[u8], g: &GroupElem) -> Scalar {
        let mut acc = self.field().one();
        for &a in w {
            acc = &acc * &self.lambda(a as usize, g);
        }
        acc
    }

    fn compose(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.group().compose(a, b)
    }

    pub fn identity(&self) -> GroupElem {
        self.group().identity()
    }

    pub fn one(&self) -> NormalFormElement {
        self.group_element(&self.identity())
    }

    pub fn v(&self, i: usize) -> NormalFormElement {
        let t = PbwTerm { v: vec![i as u8], g: self.identity(), f: vec![] };
        NormalFormElement::monomial(self.field(), t, self.field().one())
    }

    pub fn f(&self, i: usize) -> NormalFormElement {
        let t = PbwTerm { v: vec![], g: self.identity(), f: vec![i as u8] };
        NormalFormElement::monomial(self.field(), t, self.field().one())
    }

    pub fn group_element(&self, g: &GroupElem) -> NormalFormElement {
        let t = PbwTerm { v: vec![], g: g.clone(), f: vec![] };
        NormalFormElement::monomial(self.field(), t, self.field().one())
    }

    pub fn generator(&self, g: &Gen) -> NormalFormElement {
        match g {
            Gen::V(i) => self.v(*i),
            Gen::F(i) => self.f(*i),
            Gen::G(h) => self.group_element(h),
        }
    }

    /// Product of a word of generators, left to right.
    pub fn word(&self, w: &[Gen]) -> NormalFormElement {
        w.iter().fold(self.one(), |acc, g| self.multiply(&acc, &self.generator(g)))
    }

    /// F · v_j.
    fn f_times_v(&self, fw: &[u8], j: usize) -> NormalFormElement {
        let one = self.field().one();
        let mut out = NormalFormElement::monomial(self.field(), PbwTerm { v: vec![j as u8], g: self.identity(), f: fw.to_vec() }, one);
        for p in 0..fw.len() {
            let a = fw[p] as usize;
            let gm = &self.data.gamma[a][j];
            if gm.is_zero() {
                continue;
            }
            let prefix = &fw[..p];
            let mut rest = fw.to_vec();
            rest.remove(p);
            let (k, l) = (self.k(j).clone(), self.l(a).clone());
            out.add_term(PbwTerm { v: vec![], g: k.clone(), f: rest.clone() }, gm * &self.chi(prefix, &k));
            out.add_term(PbwTerm { v: vec![], g: l.clone(), f: rest }, -&(gm * &self.chi(prefix, &l)));
        }
        out
    }

    /// Normal form of F · V for an f-word F and a v-word V.
    pub fn straighten(&self, fw: &[u8], vw: &[u8]) -> NormalFormElement {
        if fw.is_empty() || vw.is_empty() {
            let t = PbwTerm { v: vw.to_vec(), g: self.identity(), f: fw.to_vec() };
            return NormalFormElement::monomial(self.field(), t, self.field().one());
        }
        let key = (fw.to_vec(), vw.to_vec());
        if let Some(x) = self.straight.lock().unwrap().get(&key) {
            return x.clone();
        }
        let first = self.f_times_v(fw, vw[0] as usize);
        let tail = &vw[1..];
        let mut out = NormalFormElement::zero(self.field());
        for (t, c) in first.terms() {
            for (u, d) in self.straighten(&t.f, tail).terms() {
                let mut v = t.v.clone();
                v.extend_from_slice(&u.v);
                let coeff = &(c * d) * &self.chi(&u.v, &t.g);
                out.add_term(PbwTerm { v, g: self.compose(&t.g, &u.g), f: u.f.clone() }, coeff);
            }
        }
        self.straight.lock().unwrap().insert(key, out.clone());
        out
    }

    /// Product of two PBW monomials.
    pub fn multiply_terms(&self, a: &PbwTerm, b: &PbwTerm) -> NormalFormElement {
        let mut out = NormalFormElement::zero(self.field());
        for (t, c) in self.straighten(&a.f, &b.v).terms() {
            let coeff = &(c * &self.chi(&t.v, &a.g)) * &self.chi(&t.f, &b.g);
            let mut v = a.v.clone();
            v.extend_from_slice(&t.v);
            let mut f = t.f.clone();
            f.extend_from_slice(&b.f);
            let g = self.compose(&self.compose(&a.g, &t.g), &b.g);
            out.add_term(PbwTerm { v, g, f }, coeff);
        }
        out
    }

    pub fn multiply(&self, x: &NormalFormElement, y: &NormalFormElement) -> NormalFormElement {
        let mut out = NormalFormElement::zero(self.field());
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                let cd = c * d;
                for (t, e) in self.multiply_terms(a, b).terms() {
                    out.add_term(t.clone(), &cd * e);
                }
            }
        }
        out
    }

    pub fn tensor_multiply(&self, x: &TensorSquareElement, y: &TensorSquareElement) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero(self.field());
        for ((a1, b1), c) in x.terms() {
            for ((a2, b2), d) in y.terms() {
                let left = self.multiply_terms(a1, a2);
                let right = self.multiply_terms(b1, b2);
                let cd = c * d;
                for (l, e) in left.terms() {
                    let ce = &cd * e;
                    for (r, h) in right.terms() {
                        out.add_term(l.clone(), r.clone(), &ce * h);
                    }
                }
            }
        }
        out
    }

    fn tensor_unit(&self) -> TensorSquareElement {
        self.tensor_group(&self.identity())
    }

    fn tensor_group(&self, g: &GroupElem) -> TensorSquareElement {
        let mut x = TensorSquareElement::zero(self.field());
        let t = PbwTerm { v: vec![], g: g.clone(), f: vec![] };
        x.add_term(t.clone(), t, self.field().one());
        x
    }

    fn gterm(&self, g: &GroupElem) -> PbwTerm {
        PbwTerm { v: vec![], g: g.clone(), f: vec![] }
    }

    /// Δ(v_i) = v_i ⊗ k_i + 1 ⊗ v_i.
    pub fn coproduct_v(&self, i: usize) -> TensorSquareElement {
        let one = self.field().one();
        let vi = PbwTerm { v: vec![i as u8], g: self.identity(), f: vec![] };
        let mut x = TensorSquareElement::zero(self.field());
        x.add_term(vi.clone(), self.gterm(self.k(i)), one.clone());
        x.add_term(self.gterm(&self.identity()), vi, one);
        x
    }

    /// Δ(f_i) = f_i ⊗ 1 + l_i ⊗ f_i.
    pub fn coproduct_f(&self, i: usize) -> TensorSquareElement {
        let one = self.field().one();
        let fi = PbwTerm { v: vec![], g: self.identity(), f: vec![i as u8] };
        let mut x = TensorSquareElement::zero(self.field());
        x.add_term(fi.clone(), self.gterm(&self.identity()), one.clone());
        x.add_term(self.gterm(self.l(i)), fi, one);
        x
    }

    pub fn coproduct_term(&self, t: &PbwTerm) -> TensorSquareElement {
        let mut acc = self.tensor_unit();
        for &a in &t.v {
            acc = self.tensor_multiply(&acc, &self.coproduct_v(a as usize));
        }
        acc = self.tensor_multiply(&acc, &self.tensor_group(&t.g));
        for &b in &t.f {
            acc = self.tensor_multiply(&acc, &self.coproduct_f(b as usize));
        }
        acc
    }

    pub fn coproduct(&self, x: &NormalFormElement) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero(self.field());
        for (t, c) in x.terms() {
            for ((a, b), d) in self.coproduct_term(t).terms() {
                out.add_term(a.clone(), b.clone(), c * d);
            }
        }
        out
    }

    /// S on a monomial, as the anti-multiplicative extension of
    /// S(v_i) = −v_i k_i^{-1}, S(f_i) = −l_i^{-1} f_i, S(g) = g^{-1}.
    pub fn antipode_term(&self, t: &PbwTerm) -> NormalFormElement {
        let g = self.group();
        let mut pieces: Vec<NormalFormElement> = Vec::new();
        let minus = -self.field().one();
        for &a in &t.v {
            let kinv = g.inverse(self.k(a as usize));
            let m = PbwTerm { v: vec![a], g: kinv, f: vec![] };
            pieces.push(NormalFormElement::monomial(self.field(), m, minus.clone()));
        }
        pieces.push(self.group_element(&g.inverse(&t.g)));
        for &b in &t.f {
            let linv = g.inverse(self.l(b as usize));
            let m = PbwTerm { v: vec![], g: linv, f: vec![b] };
            pieces.push(NormalFormElement::monomial(self.field(), m, minus.clone()));
        }
        pieces.iter().rev().fold(self.one(), |acc, p| self.multiply(&acc, p))
    }

    pub fn antipode(&self, x: &NormalFormElement) -> NormalFormElement {
        let mut out = NormalFormElement::zero(self.field());
        for (t, c) in x.terms() {
            out = out.add(&self.antipode_term(t).scale(c));
        }
        out
    }

    /// ε: 1 on group elements, 0 on terms containing v or f.
    pub fn counit(&self, x: &NormalFormElement) -> Scalar {
        let mut s = self.field().zero();
        for (t, c) in x.terms() {
            if t.v.is_empty() && t.f.is_empty() {
                s = &s + c;
            }
        }
        s
    }
}

/// Product in the free double of `data`.
pub fn multiply(data: &DoubleData, x: &NormalFormElement, y: &NormalFormElement) -> NormalFormElement {
    DoubleAlgebra::new(data).multiply(x, y)
}

pub fn coproduct_nf(data: &DoubleData, x: &NormalFormElement) -> TensorSquareElement {
    DoubleAlgebra::new(data).coproduct(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{Character, Realization};
    use crate::scalars::FieldSpec;

    pub(crate) fn sl2() -> DoubleData {
        let f = Field::new(FieldSpec::rational(&["q"])).unwrap();
        let g = AbelianGroup::free(1);
        let ch = Character::new(&g, vec![f.parse("q^2").unwrap()]).unwrap();
        let real = Realization::new(f.clone(), g, vec![GroupElem(vec![1])], vec![GroupElem(vec![-1])], vec![ch]).unwrap();
        let gamma = vec![vec![f.parse("1/(q - q^-1)").unwrap()]];
        DoubleData::new(real, gamma.clone(), gamma).unwrap()
    }

    #[test]
    fn commutator_rule() {
        let d = sl2();
        let a = DoubleAlgebra::new(&d);
        let fv = a.multiply(&a.f(0), &a.v(0));
        assert_eq!(fv.to_string(), "-(q/(q^2 - 1))*[g1^-1] + (q/(q^2 - 1))*[g1] + v1f1");
        let vf = a.multiply(&a.v(0), &a.f(0));
        let k = a.group_element(&GroupElem(vec![1]));
        let l = a.group_element(&GroupElem(vec![-1]));
        let gamma = d.gamma[0][0].clone();
        assert_eq!(fv, vf.add(&k.sub(&l).scale(&gamma)));
    }

    #[test]
    fn bosonization_rules() {
        let d = sl2();
        let a = DoubleAlgebra::new(&d);
        let k = a.group_element(&GroupElem(vec![1]));
        let q2 = d.field().parse("q^2").unwrap();
        let kv = a.multiply(&k, &a.v(0));
        assert_eq!(kv, a.multiply(&a.v(0), &k).scale(&q2));
        let fk = a.multiply(&a.f(0), &k);
        assert_eq!(fk, a.multiply(&k, &a.f(0)).scale(&q2));
    }

    #[test]
    fn coproduct_of_fv_has_expected_terms() {
        let d = sl2();
        let a = DoubleAlgebra::new(&d);
        let lhs = a.tensor_multiply(&a.coproduct_f(0), &a.coproduct_v(0));
        let rhs = a.coproduct(&a.multiply(&a.f(0), &a.v(0)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_on_words() {
        let d = sl2();
        let a = DoubleAlgebra::new(&d);
        let x = a.word(&[Gen::F(0), Gen::F(0), Gen::V(0)]);
        let y = a.word(&[Gen::V(0), Gen::G(GroupElem(vec![1])), Gen::F(0)]);
        let z = a.word(&[Gen::V(0), Gen::V(0)]);
        assert_eq!(a.multiply(&a.multiply(&x, &y), &z), a.multiply(&x, &a.multiply(&y, &z)));
    }
}
