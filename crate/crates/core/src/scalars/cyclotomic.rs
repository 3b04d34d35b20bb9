//! Elements of the cyclotomic field Q(ζ_N), stored as coefficient vectors
//! in the power basis 1, ζ, …, ζ^(φ(N)−1) and reduced modulo Φ_N.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arithmetic context for Q(ζ_N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CycloField {
    order: u32,
    /// Coefficients of Φ_N, low degree first. Monic.
    phi: Vec<BigInt>,
}

/// An element of Q(ζ_N). Always exactly `degree()` coefficients long.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub(crate) struct Cyc(pub(crate) Vec<BigRational>);

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials (divisor monic).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); num.len() + 1 - dl];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// Φ_N via x^N − 1 = Π_{d | N} Φ_d.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut cache: Vec<Option<Vec<BigInt>>> = vec![None; n as usize + 1];
    fn build(n: u32, cache: &mut Vec<Option<Vec<BigInt>>>) -> Vec<BigInt> {
        if let Some(p) = &cache[n as usize] {
            return p.clone();
        }
        let mut xn = vec![BigInt::zero(); n as usize + 1];
        xn[0] = -BigInt::one();
        xn[n as usize] = BigInt::one();
        let mut divisor = vec![BigInt::one()];
        for d in 1..n {
            if n.is_multiple_of(d) {
                let pd = build(d, cache);
                divisor = int_poly_mul(&divisor, &pd);
            }
        }
        let p = int_poly_div_exact(&xn, &divisor);
        cache[n as usize] = Some(p.clone());
        p
    }
    build(n, &mut cache)
}

// Dense univariate polynomials over Q, used for inversion.
fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn qpoly_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let bl = b.len();
    let lead = b[bl - 1].clone();
    if r.len() < bl {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() + 1 - bl];
    for k in (0..q.len()).rev() {
        let c = &r[k + bl - 1] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            r[k + j] -= &c * d;
        }
        q[k] = c;
    }
    trim(&mut r);
    (q, r)
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

impl CycloField {
    pub(crate) fn new(order: u32) -> Self {
        assert!(order >= 1);
        CycloField { order, phi: cyclotomic_polynomial(order) }
    }

    /// φ(N), the dimension over Q.
    pub(crate) fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub(crate) fn zero(&self) -> Cyc {
        Cyc(vec![BigRational::zero(); self.degree()])
    }

    pub(crate) fn from_rational(&self, r: BigRational) -> Cyc {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = r;
        Cyc(v)
    }

    pub(crate) fn from_int(&self, i: i64) -> Cyc {
        self.from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    pub(crate) fn one(&self) -> Cyc {
        self.from_int(1)
    }

    /// ζ^k for any integer k.
    pub(crate) fn zeta_pow(&self, k: i64) -> Cyc {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Cyc {
        let deg = self.degree();
        if v.len() > deg {
            for k in (deg..v.len()).rev() {
                let c = std::mem::take(&mut v[k]);
                if c.is_zero() {
                    continue;
                }
                // x^k = x^(k−deg) · x^deg and x^deg = −Σ_{j<deg} φ_j x^j
                for j in 0..deg {
                    if !self.phi[j].is_zero() {
                        v[k - deg + j] -= &c * BigRational::from_integer(self.phi[j].clone());
                    }
                }
            }
            v.truncate(deg);
        }
        while v.len() < deg {
            v.push(BigRational::zero());
        }
        Cyc(v)
    }

    pub(crate) fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub(crate) fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub(crate) fn neg(&self, a: &Cyc) -> Cyc {
        Cyc(a.0.iter().map(|x| -x).collect())
    }

    pub(crate) fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        if self.degree() == 1 {
            return Cyc(vec![&a.0[0] * &b.0[0]]);
        }
        if let Some(r) = a.as_rational() {
            return Cyc(b.0.iter().map(|x| x * r).collect());
        }
        if let Some(r) = b.as_rational() {
            return Cyc(a.0.iter().map(|x| x * r).collect());
        }
        let mut out = vec![BigRational::zero(); 2 * self.degree() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        self.reduce(out)
    }

    /// Multiplicative inverse; `None` for zero.
    pub(crate) fn inv(&self, a: &Cyc) -> Option<Cyc> {
        if a.is_zero() {
            return None;
        }
        if let Some(r) = a.as_rational() {
            return Some(self.from_rational(r.recip()));
        }
        // Extended Euclid on (a, Φ_N): s·a + t·Φ = 1.
        let phi: Vec<BigRational> =
            self.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut r0 = phi;
        let mut r1 = a.0.clone();
        trim(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !qpoly_is_zero(&r1) {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since Φ_N is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let s: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
        Some(self.reduce(s))
    }

    pub(crate) fn scale_rational(&self, a: &Cyc, r: &BigRational) -> Cyc {
        Cyc(a.0.iter().map(|x| x * r).collect())
    }

    /// Image under Q(ζ_N) → Q(ζ_M), ζ_N ↦ ζ_M^(M/N). Requires N | M, or the
    /// element to be rational.
    pub(crate) fn embed_into(&self, a: &Cyc, target: &CycloField) -> Option<Cyc> {
        if let Some(r) = a.as_rational() {
            return Some(target.from_rational(r.clone()));
        }
        if !target.order.is_multiple_of(self.order) {
            return None;
        }
        let step = (target.order / self.order) as i64;
        let mut acc = target.zero();
        for (k, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zk = target.zeta_pow(step * k as i64);
            acc = target.add(&acc, &target.scale_rational(&zk, c));
        }
        Some(acc)
    }
}

impl Cyc {
    pub(crate) fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0[0].is_one() && self.0[1..].iter().all(|c| c.is_zero())
    }

    /// The value if the element lies in Q.
    pub(crate) fn as_rational(&self) -> Option<&BigRational> {
        if self.0[1..].iter().all(|c| c.is_zero()) {
            Some(&self.0[0])
        } else {
            None
        }
    }

    /// Renders the element as a scalar literal. Needs parentheses when it is a
    /// sum of several powers of ζ.
    pub(crate) fn render(&self) -> (String, bool) {
        let parts: Vec<(usize, &BigRational)> =
            self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if parts.is_empty() {
            return ("0".to_string(), false);
        }
        let mut s = String::new();
        for (idx, (k, c)) in parts.iter().enumerate() {
            let body = match *k {
                0 => fmt_rational(&c.abs()),
                1 => mono_with_coeff(&c.abs(), "z"),
                _ => mono_with_coeff(&c.abs(), &format!("z^{k}")),
            };
            if idx == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            s.push_str(&body);
        }
        (s, parts.len() > 1)
    }

}

fn mono_with_coeff(c: &BigRational, mono: &str) -> String {
    if c.is_one() {
        mono.to_string()
    } else {
        format!("{}*{}", fmt_rational(c), mono)
    }
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let p = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_string()).collect::<Vec<_>>();
        assert_eq!(p(1), ["-1", "1"]);
        assert_eq!(p(2), ["1", "1"]);
        assert_eq!(p(3), ["1", "1", "1"]);
        assert_eq!(p(4), ["1", "0", "1"]);
        assert_eq!(p(6), ["1", "-1", "1"]);
        assert_eq!(p(12), ["1", "0", "-1", "0", "1"]);
    }

    #[test]
    fn zeta_relations() {
        let f = CycloField::new(3);
        let z = f.zeta_pow(1);
        let z2 = f.zeta_pow(2);
        // 1 + z + z² = 0
        let s = f.add(&f.add(&f.one(), &z), &z2);
        assert!(s.is_zero());
        assert!(f.mul(&z, &z2).is_one());
        assert_eq!(f.inv(&z).unwrap(), z2);
    }

    #[test]
    fn inverse_of_sum() {
        let f = CycloField::new(5);
        let a = f.add(&f.one(), &f.zeta_pow(1));
        let inv = f.inv(&a).unwrap();
        assert!(f.mul(&a, &inv).is_one());
    }

    #[test]
    fn embedding_doubles_exponents() {
        let f3 = CycloField::new(3);
        let f6 = CycloField::new(6);
        let z = f3.zeta_pow(1);
        assert_eq!(f3.embed_into(&z, &f6).unwrap(), f6.zeta_pow(2));
        assert!(f6.embed_into(&f6.zeta_pow(1), &f3).is_none());
    }
}
