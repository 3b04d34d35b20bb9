//! Sparse multivariate Laurent polynomials over Q(ζ_N).
//!
//! Terms are kept sorted in strictly descending lexicographic order of the
//! exponent vector, with no zero coefficients. The gcd is only defined for
//! genuine polynomials (nonnegative exponents) and is computed recursively:
//! content in the remaining variables plus a primitive remainder sequence in
//! the main variable, falling back to Euclid when a single variable is left.

use std::cmp::Reverse;
use std::collections::BTreeMap;

use super::cyclotomic::{Cyc, CycloField};

pub(crate) type Mono = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Poly {
    pub(crate) terms: Vec<(Mono, Cyc)>,
}

fn from_map(cf: &CycloField, map: BTreeMap<Reverse<Mono>, Cyc>) -> Poly {
    let _ = cf;
    Poly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.0, c)).collect() }
}

impl Poly {
    pub(crate) fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub(crate) fn constant(c: Cyc, nvars: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(vec![0; nvars], c)] }
    }

    pub(crate) fn monomial(mono: Mono, c: Cyc) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: vec![(mono, c)] }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn is_constant(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(m, _)] => m.iter().all(|&e| e == 0),
            _ => false,
        }
    }

    pub(crate) fn is_one(&self) -> bool {
        self.is_constant() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub(crate) fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub(crate) fn leading(&self) -> &(Mono, Cyc) {
        &self.terms[0]
    }

    pub(crate) fn add(&self, cf: &CycloField, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = cf.add(&a[i].1, &b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub(crate) fn neg(&self, cf: &CycloField) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), cf.neg(c))).collect() }
    }

    pub(crate) fn sub(&self, cf: &CycloField, other: &Poly) -> Poly {
        self.add(cf, &other.neg(cf))
    }

    pub(crate) fn scale(&self, cf: &CycloField, c: &Cyc) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), cf.mul(x, c))).collect() }
    }

    /// Multiplies by c·t^mono.
    pub(crate) fn mul_term(&self, cf: &CycloField, mono: &[i32], c: &Cyc) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.iter().zip(mono).map(|(a, b)| a + b).collect(), cf.mul(x, c)))
                .collect(),
        }
    }

    pub(crate) fn mul(&self, cf: &CycloField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(cf, m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(cf, m, c);
        }
        let mut map: BTreeMap<Reverse<Mono>, Cyc> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let p = cf.mul(ca, cb);
                match map.entry(Reverse(m)) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(p);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = cf.add(e.get(), &p);
                        *e.get_mut() = s;
                    }
                }
            }
        }
        from_map(cf, map)
    }

    /// Componentwise minimum of exponents over all terms.
    pub(crate) fn min_exps(&self, nvars: usize) -> Mono {
        let mut m = match self.terms.first() {
            Some((m, _)) => m.clone(),
            None => return vec![0; nvars],
        };
        for (t, _) in &self.terms[1..] {
            for (a, b) in m.iter_mut().zip(t) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Multiplies by t^shift (shift may be negative).
    pub(crate) fn shift(&self, shift: &[i32]) -> Poly {
        if shift.iter().all(|&s| s == 0) {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn degree_in(&self, var: usize) -> i32 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m[var] != 0)
    }

    /// Divides by the leading coefficient.
    pub(crate) fn monic(&self, cf: &CycloField) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = cf.inv(c).expect("nonzero leading coefficient");
                self.scale(cf, &inv)
            }
        }
    }

    /// Exact quotient for polynomials with nonnegative exponents; `None` if
    /// `divisor` does not divide `self`.
    pub(crate) fn div_exact(&self, cf: &CycloField, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if divisor.is_one() {
            return Some(self.clone());
        }
        let (lm, lc) = divisor.leading();
        let lc_inv = cf.inv(lc).expect("nonzero");
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Cyc)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            let qm: Mono = rm.iter().zip(lm).map(|(a, b)| a - b).collect();
            if qm.iter().any(|&e| e < 0) {
                return None;
            }
            let qc = cf.mul(rc, &lc_inv);
            rem = rem.sub(cf, &divisor.mul_term(cf, &qm, &qc));
            quot.push((qm, qc));
        }
        // The quotient terms come out in descending order already.
        Some(Poly { terms: quot })
    }

    /// Coefficients as a polynomial in `var`, indexed by degree. Each
    /// coefficient has exponent zero in `var`.
    fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).max(0) as usize;
        let mut coeffs: Vec<Vec<(Mono, Cyc)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let d = m[var] as usize;
            let mut mm = m.clone();
            mm[var] = 0;
            coeffs[d].push((mm, c.clone()));
        }
        coeffs
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.0.cmp(&a.0));
                Poly { terms: t }
            })
            .collect()
    }

    fn from_univariate(coeffs: &[Poly], var: usize) -> Poly {
        let mut terms = Vec::new();
        for (d, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut mm = m.clone();
                mm[var] += d as i32;
                terms.push((mm, c.clone()));
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

}

fn trim_upoly(p: &mut Vec<Poly>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn upoly_is_zero(p: &[Poly]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Monic gcd of two polynomials with nonnegative exponents. gcd(0, 0) = 0.
pub(crate) fn gcd(cf: &CycloField, a: &Poly, b: &Poly, nvars: usize) -> Poly {
    if a.is_zero() {
        return b.monic(cf);
    }
    if b.is_zero() {
        return a.monic(cf);
    }
    let ma = a.min_exps(nvars);
    let mb = b.min_exps(nvars);
    let shared: Mono = ma.iter().zip(&mb).map(|(x, y)| (*x).min(*y)).collect();
    let neg_a: Mono = ma.iter().map(|e| -e).collect();
    let neg_b: Mono = mb.iter().map(|e| -e).collect();
    let g = gcd_primitive_monomial(cf, &a.shift(&neg_a), &b.shift(&neg_b), nvars);
    g.shift(&shared)
}

/// gcd of polynomials neither of which is divisible by a variable.
fn gcd_primitive_monomial(cf: &CycloField, a: &Poly, b: &Poly, nvars: usize) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::constant(cf.one(), nvars);
    }
    if a == b {
        return a.monic(cf);
    }
    let var = (0..nvars).find(|&v| a.uses_var(v) || b.uses_var(v)).expect("nonconstant");
    let in_a = a.uses_var(var);
    let in_b = b.uses_var(var);
    if !in_a {
        let cb = content_in(cf, b, var, nvars);
        return gcd(cf, a, &cb, nvars);
    }
    if !in_b {
        let ca = content_in(cf, a, var, nvars);
        return gcd(cf, &ca, b, nvars);
    }
    let single = (0..nvars).all(|v| v == var || (!a.uses_var(v) && !b.uses_var(v)));
    if single {
        return univariate_gcd(cf, a, b, var, nvars);
    }
    let ca = content_in(cf, a, var, nvars);
    let cb = content_in(cf, b, var, nvars);
    let pa = a.div_exact(cf, &ca).expect("content divides");
    let pb = b.div_exact(cf, &cb).expect("content divides");
    let c = gcd(cf, &ca, &cb, nvars);
    let g = primitive_prs(cf, &pa, &pb, var, nvars);
    c.mul(cf, &g).monic(cf)
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
fn content_in(cf: &CycloField, p: &Poly, var: usize, nvars: usize) -> Poly {
    let coeffs = p.to_univariate(var);
    let mut g = Poly::zero();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd(cf, &g, c, nvars);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part_in(cf: &CycloField, p: &[Poly], var: usize, nvars: usize) -> Vec<Poly> {
    let whole = Poly::from_univariate(p, var);
    let c = content_in(cf, &whole, var, nvars);
    p.iter().map(|x| x.div_exact(cf, &c).expect("content divides")).collect()
}

fn primitive_prs(cf: &CycloField, a: &Poly, b: &Poly, var: usize, nvars: usize) -> Poly {
    let mut f = a.to_univariate(var);
    let mut g = b.to_univariate(var);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        // pseudo-remainder of f by g
        let mut r = f.clone();
        let gl = g.len();
        let lc_g = g[gl - 1].clone();
        while r.len() >= gl && !upoly_is_zero(&r) {
            let e = r.len() - gl;
            let lc_r = r[r.len() - 1].clone();
            let mut next: Vec<Poly> = r.iter().map(|c| c.mul(cf, &lc_g)).collect();
            for (k, gc) in g.iter().enumerate() {
                next[k + e] = next[k + e].sub(cf, &gc.mul(cf, &lc_r));
            }
            debug_assert!(next[next.len() - 1].is_zero());
            next.pop();
            trim_upoly(&mut next);
            r = next;
        }
        trim_upoly(&mut r);
        if upoly_is_zero(&r) {
            let pp = primitive_part_in(cf, &g, var, nvars);
            return Poly::from_univariate(&pp, var).monic(cf);
        }
        if r.len() == 1 {
            return Poly::constant(cf.one(), nvars);
        }
        let rp = primitive_part_in(cf, &r, var, nvars);
        f = g;
        g = rp;
    }
}

fn univariate_gcd(cf: &CycloField, a: &Poly, b: &Poly, var: usize, nvars: usize) -> Poly {
    let to_dense = |p: &Poly| -> Vec<Cyc> {
        let deg = p.degree_in(var) as usize;
        let mut v = vec![cf.zero(); deg + 1];
        for (m, c) in &p.terms {
            v[m[var] as usize] = c.clone();
        }
        v
    };
    let trim = |v: &mut Vec<Cyc>| {
        while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    let mut f = to_dense(a);
    let mut g = to_dense(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !(g.len() == 1 && g[0].is_zero()) {
        let gl = g.len();
        let inv = cf.inv(&g[gl - 1]).expect("nonzero");
        while f.len() >= gl && !(f.len() == 1 && f[0].is_zero()) {
            let e = f.len() - gl;
            let c = cf.mul(&f[f.len() - 1], &inv);
            for (k, gc) in g.iter().enumerate() {
                f[k + e] = cf.sub(&f[k + e], &cf.mul(&c, gc));
            }
            f.pop();
            if f.is_empty() {
                f.push(cf.zero());
            }
            trim(&mut f);
        }
        std::mem::swap(&mut f, &mut g);
    }
    let terms: Vec<(Mono, Cyc)> = f
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| {
            let mut m = vec![0; nvars];
            m[var] = d as i32;
            (m, c.clone())
        })
        .collect();
    Poly { terms }.monic(cf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(cf: &CycloField, i: usize, n: usize) -> Poly {
        let mut m = vec![0; n];
        m[i] = 1;
        Poly::monomial(m, cf.one())
    }

    fn c(cf: &CycloField, k: i64, n: usize) -> Poly {
        Poly::constant(cf.from_int(k), n)
    }

    #[test]
    fn univariate_gcd_of_difference_of_squares() {
        let cf = CycloField::new(1);
        let q = var(&cf, 0, 1);
        let a = q.mul(&cf, &q).sub(&cf, &c(&cf, 1, 1));
        let b = q.sub(&cf, &c(&cf, 1, 1));
        assert_eq!(gcd(&cf, &a, &b, 1), b);
        assert_eq!(a.div_exact(&cf, &b).unwrap(), q.add(&cf, &c(&cf, 1, 1)));
    }

    #[test]
    fn bivariate_gcd() {
        let cf = CycloField::new(1);
        let x = var(&cf, 0, 2);
        let y = var(&cf, 1, 2);
        let common = x.add(&cf, &y).add(&cf, &c(&cf, 2, 2));
        let a = common.mul(&cf, &x.sub(&cf, &y));
        let b = common.mul(&cf, &x.mul(&cf, &y).add(&cf, &c(&cf, 1, 2)));
        assert_eq!(gcd(&cf, &a, &b, 2), common.monic(&cf));
        let coprime = gcd(&cf, &x.sub(&cf, &y), &x.add(&cf, &y), 2);
        assert!(coprime.is_one());
    }

    #[test]
    fn monomial_factors_are_shared() {
        let cf = CycloField::new(1);
        let x = var(&cf, 0, 2);
        let y = var(&cf, 1, 2);
        let a = x.mul(&cf, &x).mul(&cf, &y);
        let b = x.mul(&cf, &y).mul(&cf, &y);
        assert_eq!(gcd(&cf, &a, &b, 2), x.mul(&cf, &y));
    }

    #[test]
    fn not_divisible() {
        let cf = CycloField::new(1);
        let x = var(&cf, 0, 1);
        let a = x.add(&cf, &c(&cf, 1, 1));
        let b = x.sub(&cf, &c(&cf, 1, 1));
        assert!(a.div_exact(&cf, &b).is_none());
    }
}
