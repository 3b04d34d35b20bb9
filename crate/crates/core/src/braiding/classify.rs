//! Generic / positive / Cartan / Drinfeld–Jimbo classification of a braiding matrix.

use num_integer::Integer;
use num_traits::Signed;

use super::cartan::{connected_components, finite_cartan_type, symmetrizer, validate, CartanData, FiniteTypeResult};
use super::{BraidingError, DiagonalBraiding};
use crate::scalars::{Order, Scalar};

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Parameters assumed to be positive real numbers.
    pub positive: Vec<String>,
    /// Bound on |a_ij| for the exponent search when q_ii is not a monomial.
    pub amax: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { positive: Vec::new(), amax: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    Positive,
    NotPositive,
    Unknown,
}

/// q_ij = q_J^{d_i a_ij} on each component J.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjData {
    pub d: Vec<i64>,
    /// Per component: g and y with q_J^g = y, together with q_J itself when
    /// a g-th root of y exists in the field.
    pub roots: Vec<DjRoot>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DjRoot {
    pub component: Vec<usize>,
    pub g: i64,
    pub y: Scalar,
    pub q_j: Option<Scalar>,
}

impl DjRoot {
    pub fn describe(&self) -> String {
        match &self.q_j {
            Some(q) => q.to_string(),
            None => format!("({})^(1/{})", self.y, self.g),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub orders: Vec<Order>,
    pub generic: bool,
    pub positivity: Vec<Positivity>,
    pub positive: bool,
    pub cartan: Option<CartanData>,
    /// Why the braiding is not of Cartan type, 1-based indices.
    pub cartan_failure: Option<String>,
    pub dj: Option<DjData>,
    pub dj_failure: Option<String>,
    pub finite_type: Option<FiniteTypeResult>,
    /// Set exactly when the Cartan matrix is of finite type.
    pub finite_gk_predicted: bool,
}

impl ClassificationReport {
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        match (&self.cartan, &self.dj) {
            (Some(_), Some(_)) => parts.push("DJ-type".to_string()),
            (Some(_), None) => parts.push("Cartan type, not DJ-type".to_string()),
            (None, _) => parts.push("not of Cartan type".to_string()),
        }
        if let Some(c) = &self.cartan {
            match self.finite_type.as_ref().and_then(|f| f.name()) {
                Some(name) => {
                    parts.push(format!("Cartan {name}"));
                    parts.push("finite type".into());
                }
                None => {
                    parts.push(format!("Cartan {}", format_matrix(&c.a)));
                    parts.push("not of finite type".into());
                }
            }
        }
        if self.finite_gk_predicted {
            parts.push("finite GK-dim predicted".into());
        }
        parts.join(", ")
    }
}

pub fn format_matrix(a: &[Vec<i64>]) -> String {
    let rows: Vec<String> =
        a.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn positivity(s: &Scalar, positive: &[String]) -> Positivity {
    let Some(m) = s.as_monomial() else {
        return Positivity::Unknown;
    };
    let names = s.field().parameters();
    let coeff = m.coeff.as_rational();
    let params_ok = m.exponents.iter().zip(names).all(|(&e, n)| e == 0 || positive.contains(n));
    match coeff {
        Some(c) if c.is_positive() && params_ok => Positivity::Positive,
        Some(c) if c.is_negative() && m.exponents.iter().all(|&e| e == 0) => Positivity::NotPositive,
        _ => Positivity::Unknown,
    }
}

enum Exponent {
    Found(i64),
    None,
}

/// Solves q_ii^a = target with 0 ≤ −a < ord(q_ii).
fn cartan_exponent(qii: &Scalar, ord: Order, target: &Scalar, amax: u32, i: usize, j: usize) -> Result<Exponent, BraidingError> {
    if let Some(mi) = qii.as_monomial() {
        if let Some(pos) = mi.exponents.iter().position(|&e| e != 0) {
            // q_ii^a is again a monomial, with exponents determined by a.
            let Some(mt) = target.as_monomial() else {
                return Ok(Exponent::None);
            };
            let (ei, et) = (mi.exponents[pos] as i64, mt.exponents[pos] as i64);
            if et % ei != 0 {
                return Ok(Exponent::None);
            }
            let a = et / ei;
            if a > 0 || qii.pow(a) != *target {
                return Ok(Exponent::None);
            }
            return Ok(Exponent::Found(a));
        }
    }
    match ord {
        Order::Finite(m) => {
            for k in 0..m as i64 {
                if qii.pow(-k) == *target {
                    return Ok(Exponent::Found(-k));
                }
            }
            Ok(Exponent::None)
        }
        Order::Infinite => {
            for k in 0..=amax as i64 {
                if qii.pow(-k) == *target {
                    return Ok(Exponent::Found(-k));
                }
            }
            // A parameter-free or monomial target against a non-monomial q_ii can
            // still hide a larger exponent, so the search is inconclusive.
            Err(BraidingError::NotDetermined { i: i + 1, j: j + 1, amax })
        }
    }
}

/// Extended gcd over a list: returns g and c with Σ c_k x_k = g.
fn bezout(xs: &[i64]) -> (i64, Vec<i64>) {
    let mut g = 0i64;
    let mut coeffs: Vec<i64> = Vec::with_capacity(xs.len());
    for &x in xs {
        let e = g.extended_gcd(&x);
        // e.gcd = e.x·g + e.y·x
        for c in coeffs.iter_mut() {
            *c *= e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    if g < 0 {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -*c;
        }
    }
    (g, coeffs)
}

fn dj_test(b: &DiagonalBraiding, a: &[Vec<i64>]) -> Result<DjData, String> {
    let n = b.rank();
    let d = symmetrizer(a).ok_or_else(|| "Cartan matrix is not symmetrizable".to_string())?;
    let mut roots = Vec::new();
    for comp in connected_components(a) {
        for &i in &comp {
            for j in 0..n {
                if !comp.contains(&j) && !b.q[i][j].is_one() {
                    return Err(format!("q_{}{} = {} must be 1 across components", i + 1, j + 1, b.q[i][j]));
                }
            }
        }
        let pairs: Vec<(usize, usize)> = comp.iter().flat_map(|&i| comp.iter().map(move |&j| (i, j))).collect();
        let exps: Vec<i64> = pairs.iter().map(|&(i, j)| d[i] * a[i][j]).collect();
        let (g, coeffs) = bezout(&exps);
        let mut y = b.field.one();
        for (&(i, j), &c) in pairs.iter().zip(&coeffs) {
            if c != 0 {
                y = &y * &b.q[i][j].pow(c);
            }
        }
        for (&(i, j), &e) in pairs.iter().zip(&exps) {
            if y.pow(e / g) != b.q[i][j] {
                return Err(format!(
                    "no q_J with q_{}{} = q_J^{}, component {:?}",
                    i + 1,
                    j + 1,
                    e,
                    comp.iter().map(|x| x + 1).collect::<Vec<_>>()
                ));
            }
        }
        let q_j = y.nth_root(g as u32);
        roots.push(DjRoot { component: comp, g, y, q_j });
    }
    Ok(DjData { d, roots })
}

pub fn classify(b: &DiagonalBraiding, opts: &ClassifyOptions) -> Result<ClassificationReport, BraidingError> {
    let n = b.rank();
    let diag: Vec<&Scalar> = (0..n).map(|i| &b.q[i][i]).collect();
    let orders: Vec<Order> = diag.iter().map(|s| s.multiplicative_order().expect("nonzero")).collect();
    let generic = orders.iter().all(|o| *o == Order::Infinite);
    let positivity: Vec<Positivity> = diag.iter().map(|s| positivity(s, &opts.positive)).collect();
    let positive = generic && positivity.iter().all(|p| *p == Positivity::Positive);

    let mut report = ClassificationReport {
        orders: orders.clone(),
        generic,
        positivity,
        positive,
        cartan: None,
        cartan_failure: None,
        dj: None,
        dj_failure: None,
        finite_type: None,
        finite_gk_predicted: false,
    };

    if let Some(i) = (0..n).find(|&i| diag[i].is_one()) {
        report.cartan_failure = Some(format!("q_{0}{0} = 1", i + 1));
        return Ok(report);
    }
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in 0..n {
            if i == j {
                continue;
            }
            let target = &b.q[i][j] * &b.q[j][i];
            match cartan_exponent(diag[i], orders[i], &target, opts.amax, i, j)? {
                Exponent::Found(x) => a[i][j] = x,
                Exponent::None => {
                    report.cartan_failure = Some(format!(
                        "no a_{0}{1} with q_{0}{1} q_{1}{0} = q_{0}{0}^a_{0}{1} and 0 <= -a_{0}{1} < ord q_{0}{0}",
                        i + 1,
                        j + 1
                    ));
                    return Ok(report);
                }
            }
        }
    }
    if let Err(e) = validate(&a) {
        report.cartan_failure = Some(e.to_string());
        return Ok(report);
    }
    let mut cartan = CartanData::from_matrix(a.clone())?;
    match dj_test(b, &a) {
        Ok(dj) => {
            cartan.q_j = Some(dj.roots.iter().map(|r| r.q_j.clone().unwrap_or_else(|| r.y.clone())).collect());
            report.dj = Some(dj);
        }
        Err(msg) => report.dj_failure = Some(msg),
    }
    report.finite_type = match finite_cartan_type(&a) {
        Ok(f) => Some(f),
        Err(BraidingError::NotSymmetrizable) => Some(FiniteTypeResult::NotFinite),
        Err(e) => return Err(e),
    };
    report.finite_gk_predicted = report.finite_type.as_ref().is_some_and(|f| f.is_finite());
    report.cartan = Some(cartan);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Field, FieldSpec};

    fn braiding(spec: FieldSpec, rows: &[&[&str]]) -> DiagonalBraiding {
        let f = Field::new(spec).unwrap();
        let q = rows.iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect();
        DiagonalBraiding::new(f, q).unwrap()
    }

    #[test]
    fn a2_dj() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q^2", "q^-1"], &["q^-1", "q^2"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert!(r.generic);
        assert_eq!(r.cartan.as_ref().unwrap().a, vec![vec![2, -1], vec![-1, 2]]);
        let dj = r.dj.as_ref().unwrap();
        assert_eq!(dj.d, vec![1, 1]);
        assert_eq!(dj.roots[0].q_j.as_ref().unwrap().to_string(), "q");
        assert_eq!(r.summary(), "DJ-type, Cartan A2, finite type, finite GK-dim predicted");
    }

    #[test]
    fn cartan_not_dj() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q", "q^-1"], &["q^-1", "-q"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert!(r.generic);
        assert_eq!(r.cartan.as_ref().unwrap().a, vec![vec![2, -2], vec![-2, 2]]);
        assert!(r.dj.is_none());
        assert_eq!(r.finite_type, Some(FiniteTypeResult::NotFinite));
        assert!(!r.finite_gk_predicted);
    }

    #[test]
    fn root_of_unity_rank_one() {
        let b = braiding(FieldSpec::new(3, &[]), &[&["z"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert!(!r.generic);
        assert_eq!(r.orders, vec![Order::Finite(3)]);
        assert_eq!(r.cartan.unwrap().a, vec![vec![2]]);
    }

    #[test]
    fn b2_with_unequal_d() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q^4", "q^-2"], &["q^-2", "q^2"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.cartan.as_ref().unwrap().a, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(r.dj.as_ref().unwrap().d, vec![2, 1]);
        assert_eq!(r.finite_type.as_ref().unwrap().name().as_deref(), Some("B2"));
    }

    #[test]
    fn dj_root_not_in_field() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        let root = &r.dj.as_ref().unwrap().roots[0];
        assert_eq!(root.g, 2);
        assert!(root.q_j.is_none());
        assert_eq!(root.describe(), "(q)^(1/2)");
    }

    #[test]
    fn mismatched_off_diagonal_is_not_dj() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q^2", "q^-2"], &["1", "q^2"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.cartan.as_ref().unwrap().a, vec![vec![2, -1], vec![-1, 2]]);
        assert!(r.dj.is_none());
    }

    #[test]
    fn positivity_needs_assumption() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q^2"]]);
        let r = classify(&b, &ClassifyOptions::default()).unwrap();
        assert!(!r.positive);
        let opts = ClassifyOptions { positive: vec!["q".into()], amax: 8 };
        assert!(classify(&b, &opts).unwrap().positive);
    }

    #[test]
    fn undetermined_exponent() {
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q + 1", "1"], &["1", "q"]]);
        // q₁₂q₂₁ = 1 = (q+1)^0, so a₁₂ = 0 is found directly.
        assert!(classify(&b, &ClassifyOptions::default()).is_ok());
        let b = braiding(FieldSpec::rational(&["q"]), &[&["q + 1", "q"], &["1", "q"]]);
        assert!(matches!(
            classify(&b, &ClassifyOptions::default()),
            Err(BraidingError::NotDetermined { i: 1, j: 2, .. })
        ));
    }
}
