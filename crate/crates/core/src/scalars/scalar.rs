//! Rational functions in formal parameters over Q(ζ_N).
//!
//! Canonical form of a nonzero [`Scalar`]: `num / den` where `den` is an
//! ordinary polynomial divisible by no parameter whose lexicographically
//! leading coefficient is 1, `num` is a Laurent polynomial and the two are
//! coprime. Zero is `0 / 1`. Because the form is unique, equality is
//! structural.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{Cyc, CycloField};
use super::poly::{gcd, Mono, Poly};
use super::ScalarError;

/// Declares the coefficient tower Q(ζ_N)(t₁, …, t_m).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
    #[serde(default)]
    pub parameters: Vec<String>,
}

impl FieldSpec {
    pub fn new(cyclotomic_order: u32, parameters: &[&str]) -> Self {
        FieldSpec { cyclotomic_order, parameters: parameters.iter().map(|s| s.to_string()).collect() }
    }

    /// Plain Q(t₁, …, t_m).
    pub fn rational(parameters: &[&str]) -> Self {
        Self::new(1, parameters)
    }
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    cf: CycloField,
}

/// A shared handle to a coefficient field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field, ScalarError> {
        if spec.cyclotomic_order == 0 {
            return Err(ScalarError::InvalidField("cyclotomic order must be positive".into()));
        }
        for (i, p) in spec.parameters.iter().enumerate() {
            if !valid_name(p) || p == "z" {
                return Err(ScalarError::InvalidField(format!("invalid parameter name {p:?}")));
            }
            if spec.parameters[..i].contains(p) {
                return Err(ScalarError::InvalidField(format!("duplicate parameter {p:?}")));
            }
        }
        let cf = CycloField::new(spec.cyclotomic_order);
        Ok(Field(Arc::new(FieldInner { spec, cf })))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.0.spec.cyclotomic_order
    }

    pub fn parameters(&self) -> &[String] {
        &self.0.spec.parameters
    }

    pub(crate) fn cf(&self) -> &CycloField {
        &self.0.cf
    }

    fn nvars(&self) -> usize {
        self.0.spec.parameters.len()
    }

    pub fn zero(&self) -> Scalar {
        Scalar { field: self.clone(), num: Poly::zero(), den: self.unit_poly() }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, i: i64) -> Scalar {
        self.from_cyc(self.cf().from_int(i))
    }

    pub fn rational(&self, r: BigRational) -> Scalar {
        self.from_cyc(self.cf().from_rational(r))
    }

    /// ζ_N^k.
    pub fn zeta(&self, k: i64) -> Scalar {
        self.from_cyc(self.cf().zeta_pow(k))
    }

    pub fn param(&self, name: &str) -> Result<Scalar, ScalarError> {
        let idx = self
            .parameters()
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| ScalarError::UnknownParameter(name.to_string()))?;
        Ok(self.param_power(idx, 1))
    }

    /// t_idx^e for a parameter index.
    pub fn param_power(&self, idx: usize, e: i32) -> Scalar {
        let mut m = vec![0; self.nvars()];
        m[idx] = e;
        Scalar { field: self.clone(), num: Poly::monomial(m, self.cf().one()), den: self.unit_poly() }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar, ScalarError> {
        super::parse::parse(self, s)
    }

    pub(crate) fn from_cyc(&self, c: Cyc) -> Scalar {
        Scalar { field: self.clone(), num: Poly::constant(c, self.nvars()), den: self.unit_poly() }
    }

    fn unit_poly(&self) -> Poly {
        Poly::constant(self.cf().one(), self.nvars())
    }

    /// Builds `num / den` in canonical form. `den` must be nonzero.
    fn make(&self, num: Poly, den: Poly) -> Scalar {
        let cf = self.cf();
        let nv = self.nvars();
        if num.is_zero() {
            return self.zero();
        }
        if den.is_one() {
            return Scalar { field: self.clone(), num, den };
        }
        let md = den.min_exps(nv);
        let neg_md: Mono = md.iter().map(|e| -e).collect();
        let den = den.shift(&neg_md);
        let num = num.shift(&neg_md);
        if den.is_constant() {
            let inv = cf.inv(&den.leading().1).expect("nonzero denominator");
            return Scalar { field: self.clone(), num: num.scale(cf, &inv), den: self.unit_poly() };
        }
        let mn = num.min_exps(nv);
        let neg_mn: Mono = mn.iter().map(|e| -e).collect();
        let mut n0 = num.shift(&neg_mn);
        let mut den = den;
        let g = gcd(cf, &n0, &den, nv);
        if !g.is_one() {
            n0 = n0.div_exact(cf, &g).expect("gcd divides numerator");
            den = den.div_exact(cf, &g).expect("gcd divides denominator");
        }
        let mut num = n0.shift(&mn);
        let lc = den.leading().1.clone();
        if !lc.is_one() {
            let inv = cf.inv(&lc).expect("nonzero");
            num = num.scale(cf, &inv);
            den = den.scale(cf, &inv);
        }
        Scalar { field: self.clone(), num, den }
    }
}

/// An element of the field Q(ζ_N)(t₁, …, t_m), always in canonical form.
#[derive(Clone)]
pub struct Scalar {
    field: Field,
    num: Poly,
    den: Poly,
}

/// Multiplicative order of a nonzero scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

/// A Laurent monomial c·t^e with constant coefficient c.
#[derive(Clone, Debug)]
pub struct Monomial {
    pub coeff: Scalar,
    pub exponents: Vec<i32>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den && self.field == other.field
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

fn check_same(a: &Scalar, b: &Scalar) {
    assert!(a.field == b.field, "scalars from different fields");
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when no parameter occurs.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// True when the denominator is 1, i.e. the scalar is a Laurent polynomial.
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub(crate) fn constant_cyc(&self) -> Option<Cyc> {
        if !self.is_constant() {
            return None;
        }
        Some(match self.num.terms.first() {
            None => self.field.cf().zero(),
            Some((_, c)) => c.clone(),
        })
    }

    /// The value if the scalar is a rational number.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.constant_cyc().and_then(|c| c.as_rational().cloned())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        if !self.den.is_one() || !self.num.is_monomial() {
            return None;
        }
        let (m, c) = self.num.leading();
        Some(Monomial { coeff: self.field.from_cyc(c.clone()), exponents: m.clone() })
    }

    /// Numerator and denominator of the canonical form.
    pub fn numer_denom(&self) -> (Scalar, Scalar) {
        let den = Scalar { field: self.field.clone(), num: self.den.clone(), den: self.field.unit_poly() };
        let num = Scalar { field: self.field.clone(), num: self.num.clone(), den: self.field.unit_poly() };
        (num, den)
    }

    /// Laurent-polynomial terms (exponent vector, constant coefficient) of the numerator.
    pub fn numerator_terms(&self) -> Vec<(Vec<i32>, Scalar)> {
        self.num.terms.iter().map(|(m, c)| (m.clone(), self.field.from_cyc(c.clone()))).collect()
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.den.is_one() && self.num.is_monomial() {
            let (m, c) = self.num.leading();
            let inv = self.field.cf().inv(c).expect("nonzero");
            let neg: Mono = m.iter().map(|e| -e).collect();
            return Ok(Scalar {
                field: self.field.clone(),
                num: Poly::monomial(neg, inv),
                den: self.field.unit_poly(),
            });
        }
        Ok(self.field.make(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power. Panics if `self` is zero and `e < 0`.
    pub fn pow(&self, e: i64) -> Scalar {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        if e == 0 {
            return self.field.one();
        }
        if self.den.is_one() && self.num.is_monomial() {
            let (m, c) = self.num.leading();
            let ee = i32::try_from(e).expect("exponent overflow");
            let mut cp = self.field.cf().one();
            let mut base = c.clone();
            let mut k = e as u64;
            while k > 0 {
                if k & 1 == 1 {
                    cp = self.field.cf().mul(&cp, &base);
                }
                k >>= 1;
                if k > 0 {
                    base = self.field.cf().mul(&base, &base);
                }
            }
            let mm: Mono = m.iter().map(|x| x * ee).collect();
            return Scalar { field: self.field.clone(), num: Poly::monomial(mm, cp), den: self.field.unit_poly() };
        }
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Finite(m) for the least m ≥ 1 with s^m = 1, Infinite otherwise.
    ///
    /// A scalar involving parameters is never a root of unity. Roots of unity
    /// in Q(ζ_N) have order dividing lcm(2, N), which bounds the search.
    pub fn multiplicative_order(&self) -> Result<Order, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroScalar);
        }
        let Some(c) = self.constant_cyc() else {
            return Ok(Order::Infinite);
        };
        let cf = self.field.cf();
        if let Some(r) = c.as_rational() {
            if r.is_one() {
                return Ok(Order::Finite(1));
            }
            if (-r).is_one() {
                return Ok(Order::Finite(2));
            }
            return Ok(Order::Infinite);
        }
        let n = self.field.cyclotomic_order() as u64;
        let bound = n.lcm(&2);
        let mut p = c.clone();
        for m in 1..=bound {
            if p.is_one() {
                return Ok(Order::Finite(m));
            }
            p = cf.mul(&p, &c);
        }
        Ok(Order::Infinite)
    }

    /// Image under the ring map sending each parameter to its assigned value
    /// in `target` and ζ_N to ζ_M^(M/N).
    pub fn specialize(&self, target: &Field, assignment: &BTreeMap<String, Scalar>) -> Result<Scalar, ScalarError> {
        if assignment.values().any(|v| v.field != *target) {
            return Err(ScalarError::IncompatibleField("assigned value lives in another field".into()));
        }
        let num = self.eval_poly(&self.num, target, assignment)?;
        let den = self.eval_poly(&self.den, target, assignment)?;
        if den.is_zero() {
            return Err(ScalarError::DenominatorVanishes);
        }
        Ok(&num * &den.inv()?)
    }

    fn eval_poly(&self, p: &Poly, target: &Field, assignment: &BTreeMap<String, Scalar>) -> Result<Scalar, ScalarError> {
        let names = self.field.parameters();
        let mut values: Vec<Option<&Scalar>> = vec![None; names.len()];
        let mut acc = target.zero();
        for (m, c) in &p.terms {
            let cc = self.field.cf().embed_into(c, target.cf()).ok_or_else(|| {
                ScalarError::IncompatibleField(format!(
                    "cannot embed Q(z_{}) into Q(z_{})",
                    self.field.cyclotomic_order(),
                    target.cyclotomic_order()
                ))
            })?;
            let mut term = target.from_cyc(cc);
            for (idx, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if values[idx].is_none() {
                    values[idx] = Some(
                        assignment
                            .get(&names[idx])
                            .ok_or_else(|| ScalarError::MissingAssignment(names[idx].clone()))?,
                    );
                }
                let v = values[idx].expect("set above");
                if e < 0 && v.is_zero() {
                    return Err(ScalarError::DenominatorVanishes);
                }
                term = &term * &v.pow(e as i64);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// A g-th root of a Laurent monomial, if one exists in the field.
    ///
    /// Candidates are u·ρ·t^(e/g) with u a root of unity of Q(ζ_N) and ρ
    /// rational. The first candidate in the order u = 1, ζ, ζ², …, then
    /// the same with a sign, is returned.
    pub fn nth_root(&self, g: u32) -> Option<Scalar> {
        if g == 0 {
            return None;
        }
        if g == 1 {
            return Some(self.clone());
        }
        let mono = self.as_monomial()?;
        if mono.exponents.iter().any(|e| e % g as i32 != 0) {
            return None;
        }
        let root_exps: Mono = mono.exponents.iter().map(|e| e / g as i32).collect();
        let c = mono.coeff.constant_cyc()?;
        let cf = self.field.cf();
        let n = self.field.cyclotomic_order() as i64;
        for sign in [1i64, -1] {
            for k in 0..n {
                let u = cf.scale_rational(&cf.zeta_pow(k), &BigRational::from_integer(BigInt::from(sign)));
                let ug = (0..g).fold(cf.one(), |acc, _| cf.mul(&acc, &u));
                let ratio = cf.mul(&c, &cf.inv(&ug).expect("unit"));
                let Some(r) = ratio.as_rational() else { continue };
                if let Some(rho) = rational_root(r, g) {
                    let coeff = cf.scale_rational(&u, &rho);
                    return Some(Scalar {
                        field: self.field.clone(),
                        num: Poly::monomial(root_exps, coeff),
                        den: self.field.unit_poly(),
                    });
                }
            }
        }
        None
    }
}

fn int_root(n: &BigInt, g: u32) -> Option<BigInt> {
    if n.is_negative() {
        if g.is_multiple_of(2) {
            return None;
        }
        return int_root(&-n, g).map(|r| -r);
    }
    let r = n.nth_root(g);
    if num_traits::pow(r.clone(), g as usize) == *n {
        Some(r)
    } else {
        None
    }
}

fn rational_root(r: &BigRational, g: u32) -> Option<BigRational> {
    let num = int_root(r.numer(), g)?;
    let den = int_root(r.denom(), g)?;
    Some(BigRational::new(num, den))
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        let f = &self.field;
        let cf = f.cf();
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { field: f.clone(), num: self.num.add(cf, &rhs.num), den: self.den.clone() };
        }
        if self.den == rhs.den {
            return f.make(self.num.add(cf, &rhs.num), self.den.clone());
        }
        let num = self.num.mul(cf, &rhs.den).add(cf, &rhs.num.mul(cf, &self.den));
        f.make(num, self.den.mul(cf, &rhs.den))
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field.clone(), num: self.num.neg(self.field.cf()), den: self.den.clone() }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        check_same(self, rhs);
        let f = &self.field;
        let cf = f.cf();
        if self.is_zero() || rhs.is_zero() {
            return f.zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { field: f.clone(), num: self.num.mul(cf, &rhs.num), den: self.den.clone() };
        }
        f.make(self.num.mul(cf, &rhs.num), self.den.mul(cf, &rhs.den))
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; see [`Scalar::checked_div`].
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn render_mono(names: &[String], m: &[i32]) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(m) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Renders a Laurent polynomial; the flag reports whether it is a sum.
fn render_poly(names: &[String], p: &Poly) -> (String, bool) {
    if p.is_zero() {
        return ("0".into(), false);
    }
    let mut s = String::new();
    for (idx, (m, c)) in p.terms.iter().enumerate() {
        let mono = render_mono(names, m);
        let (cs, paren) = c.render();
        let (negative, body) = if paren {
            let b = if mono.is_empty() { format!("({cs})") } else { format!("({cs})*{mono}") };
            (false, b)
        } else {
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let b = if mono.is_empty() {
                mag
            } else if mag == "1" {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            (neg, b)
        };
        if idx == 0 {
            if negative {
                s.push('-');
            }
        } else if negative {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        s.push_str(&body);
    }
    (s, p.terms.len() > 1)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.field.parameters();
        let (ns, nsum) = render_poly(names, &self.num);
        if self.den.is_one() {
            return f.write_str(&ns);
        }
        let (ds, _) = render_poly(names, &self.den);
        if nsum {
            write!(f, "({ns})/({ds})")
        } else {
            write!(f, "{ns}/({ds})")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qfield() -> Field {
        Field::new(FieldSpec::rational(&["q"])).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        let f = qfield();
        let q = f.param("q").unwrap();
        let one = f.one();
        let s = (&q * &q - &one) / (&q - &one);
        assert_eq!(s, &q + &one);
        assert!(s.is_laurent_polynomial());
    }

    #[test]
    fn zeta_sum_collapses() {
        let f = Field::new(FieldSpec::new(3, &[])).unwrap();
        assert_eq!(f.zeta(1) + f.zeta(2), f.int(-1));
    }

    #[test]
    fn zero_numerator() {
        let f = qfield();
        let q = f.param("q").unwrap();
        let den = q.pow(3) - f.int(7);
        assert!((f.zero() / den).is_zero());
    }

    #[test]
    fn laurent_denominators_are_absorbed() {
        let f = qfield();
        let q = f.param("q").unwrap();
        // 1/(q − q⁻¹) = q/(q² − 1)
        let g = (&q - &q.inv().unwrap()).inv().unwrap();
        assert_eq!(g.to_string(), "q/(q^2 - 1)");
        assert_eq!(&g * &(&q - &q.inv().unwrap()), f.one());
    }

    #[test]
    fn orders() {
        let f6 = Field::new(FieldSpec::new(6, &[])).unwrap();
        assert_eq!(f6.zeta(1).multiplicative_order().unwrap(), Order::Finite(6));
        assert_eq!(f6.zeta(2).multiplicative_order().unwrap(), Order::Finite(3));
        assert_eq!(qfield().int(-1).multiplicative_order().unwrap(), Order::Finite(2));
        assert_eq!(qfield().param("q").unwrap().multiplicative_order().unwrap(), Order::Infinite);
        assert_eq!(qfield().int(2).multiplicative_order().unwrap(), Order::Infinite);
        assert!(qfield().zero().multiplicative_order().is_err());
        // −ζ₃ has order 6 although N = 3.
        let f3 = Field::new(FieldSpec::new(3, &[])).unwrap();
        assert_eq!((-f3.zeta(1)).multiplicative_order().unwrap(), Order::Finite(6));
    }

    #[test]
    fn specialization() {
        let f = qfield();
        let q = f.param("q").unwrap();
        let one = f.one();
        let target = Field::new(FieldSpec::new(1, &[])).unwrap();
        let mut a = BTreeMap::new();
        a.insert("q".to_string(), target.one());
        let s = (&q * &q - &one) / (&q - &one);
        assert_eq!(s.specialize(&target, &a).unwrap(), target.int(2));
        let bad = (&q - &one).inv().unwrap();
        assert!(matches!(bad.specialize(&target, &a), Err(ScalarError::DenominatorVanishes)));

        let t4 = Field::new(FieldSpec::new(4, &[])).unwrap();
        let mut b = BTreeMap::new();
        b.insert("q".to_string(), t4.zeta(1));
        assert_eq!(q.pow(2).specialize(&t4, &b).unwrap(), t4.int(-1));
    }

    #[test]
    fn roots() {
        let f = Field::new(FieldSpec::new(4, &["q"])).unwrap();
        let q = f.param("q").unwrap();
        let y = &q.pow(4) * &f.int(-4);
        let r = y.nth_root(2).unwrap();
        assert_eq!(r.pow(2), y);
        assert!(q.pow(3).nth_root(2).is_none());
        assert!(f.int(3).nth_root(2).is_none());
    }

    #[test]
    fn printing() {
        let f = Field::new(FieldSpec::new(3, &["q", "t"])).unwrap();
        let q = f.param("q").unwrap();
        let t = f.param("t").unwrap();
        let s = &(&q.pow(2) * &t.inv().unwrap()) - &f.int(3);
        assert_eq!(s.to_string(), "q^2*t^-1 - 3");
        let c = &(f.zeta(1) + f.one()) * &q;
        assert_eq!(c.to_string(), "(1 + z)*q");
        let d = &(f.zeta(1) + f.int(2)) * &q;
        assert_eq!(d.to_string(), "(2 + z)*q");
        assert_eq!(f.rational(BigRational::new(3.into(), 2.into())).to_string(), "3/2");
    }
}
