//! Builders for the standard examples of asymmetric braided doubles.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::braiding::{symmetrizer, AbelianGroup, BraidingError, Character, GroupElem, Realization};
use crate::double::{DoubleData, DoubleError};
use crate::scalars::{Field, FieldSpec, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?} (known: {})", NAMES.join(", "))]
    UnknownEntry(String),
    #[error("bad parameters for {entry}: {msg} (expected {schema})")]
    BadParams { entry: &'static str, msg: String, schema: &'static str },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
    #[error(transparent)]
    Double(#[from] DoubleError),
}

/// One builder: name and accepted parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub schema: &'static str,
    pub summary: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "dj",
        schema: "type=A|B|C|D|E|F|G, rank=n",
        summary: "one-parameter quantum group U_q(g) over Z^n, formal q, l_i = k_i^-1",
    },
    CatalogEntry {
        name: "multiparameter-gl",
        schema: "n>=2",
        summary: "multiparameter U_{lam,p}(gl_n), parameters lam and p_ij (i<j), free group of rank 2(n-1)",
    },
    CatalogEntry {
        name: "radford",
        schema: "r>=2, or N>=2 and nu with N not dividing nu^2",
        summary: "rank one double of k[x]/(x^r) over a cyclic group",
    },
    CatalogEntry {
        name: "cartan-not-dj",
        schema: "no parameters",
        summary: "braiding [[q, q^-1], [q^-1, -q]] with q = s^2 over Q(i)(s)",
    },
    CatalogEntry {
        name: "mixed",
        schema: "p>=2",
        summary: "one nilpotent generator of order p next to one generic generator",
    },
];

const NAMES: &[&str] = &["dj", "multiparameter-gl", "radford", "cartan-not-dj", "mixed"];

fn bad(entry: &'static str, msg: impl Into<String>) -> CatalogError {
    let schema = ENTRIES.iter().find(|e| e.name == entry).map_or("", |e| e.schema);
    CatalogError::BadParams { entry, msg: msg.into(), schema }
}

fn int_param(entry: &'static str, params: &BTreeMap<String, String>, key: &str) -> Result<Option<i64>, CatalogError> {
    params
        .get(key)
        .map(|v| v.trim().parse::<i64>().map_err(|_| bad(entry, format!("{key}={v} is not an integer"))))
        .transpose()
}

fn check_keys(entry: &'static str, params: &BTreeMap<String, String>, allowed: &[&str]) -> Result<(), CatalogError> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(bad(entry, format!("unknown parameter {k:?}"))),
        None => Ok(()),
    }
}

/// Builds a catalog entry from string parameters.
pub fn catalog_build(name: &str, params: &BTreeMap<String, String>) -> Result<DoubleData, CatalogError> {
    match name {
        "dj" => {
            check_keys("dj", params, &["type", "rank"])?;
            let t = params.get("type").ok_or_else(|| bad("dj", "missing type"))?;
            let mut chars = t.trim().chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(bad("dj", format!("type {t:?} is not a single letter")));
            };
            let rank = int_param("dj", params, "rank")?.ok_or_else(|| bad("dj", "missing rank"))?;
            if rank < 1 {
                return Err(bad("dj", "rank must be positive"));
            }
            dj(c.to_ascii_uppercase(), rank as usize)
        }
        "multiparameter-gl" => {
            check_keys("multiparameter-gl", params, &["n"])?;
            let n = int_param("multiparameter-gl", params, "n")?.ok_or_else(|| bad("multiparameter-gl", "missing n"))?;
            if n < 2 {
                return Err(bad("multiparameter-gl", "n must be at least 2"));
            }
            multiparameter_gl(n as usize)
        }
        "radford" => {
            check_keys("radford", params, &["r", "N", "nu"])?;
            let r = int_param("radford", params, "r")?;
            let big_n = int_param("radford", params, "N")?;
            let nu = int_param("radford", params, "nu")?;
            match (r, big_n, nu) {
                (Some(r), None, None) => {
                    if r < 2 {
                        return Err(bad("radford", "r must be at least 2"));
                    }
                    radford(r as u32, 1)
                }
                (None, Some(n), nu) => {
                    let nu = nu.unwrap_or(1);
                    if n < 2 || nu < 1 || nu >= n {
                        return Err(bad("radford", "need N >= 2 and 1 <= nu < N"));
                    }
                    if (nu * nu) % n == 0 {
                        return Err(bad("radford", "N divides nu^2"));
                    }
                    radford(n as u32, nu as u32)
                }
                _ => Err(bad("radford", "give either r or N (with optional nu)")),
            }
        }
        "cartan-not-dj" => {
            check_keys("cartan-not-dj", params, &[])?;
            cartan_not_dj()
        }
        "mixed" => {
            check_keys("mixed", params, &["p"])?;
            let p = int_param("mixed", params, "p")?.ok_or_else(|| bad("mixed", "missing p"))?;
            if p < 2 {
                return Err(bad("mixed", "p must be at least 2"));
            }
            mixed(p as u32)
        }
        _ => Err(CatalogError::UnknownEntry(name.to_string())),
    }
}

/// Cartan matrix of a finite type, Kac convention (a_ij = −1 from a long
/// to a short root).
pub fn cartan_matrix(t: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match (t, n) {
        ('A', n) if n >= 1 => (0..n.saturating_sub(1)).for_each(|i| link(i, i + 1, -1, -1)),
        ('B', n) if n >= 2 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        ('C', n) if n >= 2 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        ('D', n) if n >= 4 => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        ('E', n) if (6..=8).contains(&n) => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        ('F', 4) => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        ('G', 2) => link(0, 1, -1, -3),
        _ => return None,
    }
    Some(a)
}

fn free_standard(n: usize) -> (AbelianGroup, Vec<GroupElem>, Vec<GroupElem>) {
    let g = AbelianGroup::free(n);
    let k: Vec<GroupElem> = (0..n).map(|i| g.generator(i)).collect();
    let l = k.iter().map(|x| g.inverse(x)).collect();
    (g, k, l)
}

/// DJ data with λ_j(k_i) = q^{d_i a_ij}, γ_ii = 1/(q^{d_i} − q^{−d_i}) and
/// declared roots r_i = q^{d_i}.
pub fn dj(t: char, rank: usize) -> Result<DoubleData, CatalogError> {
    let a = cartan_matrix(t, rank).ok_or_else(|| bad("dj", format!("no finite type {t}{rank}")))?;
    let d = symmetrizer(&a).expect("finite types are symmetrizable");
    let f = Field::new(FieldSpec::rational(&["q"]))?;
    let (g, k, l) = free_standard(rank);
    let chars = (0..rank)
        .map(|j| Character::new(&g, (0..rank).map(|i| f.param_power(0, (d[i] * a[i][j]) as i32)).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    let real = Realization::new(f.clone(), g, k, l, chars)?;
    let roots: Vec<Scalar> = d.iter().map(|&di| f.param_power(0, di as i32)).collect();
    let mut gamma = vec![vec![f.zero(); rank]; rank];
    for i in 0..rank {
        gamma[i][i] = (&roots[i] - &roots[i].inv()?).inv()?;
    }
    Ok(DoubleData::new(real, gamma.clone(), gamma)?.with_name(&format!("dj {t}{rank}")).with_sqrt(roots)?)
}

fn gl_tables(n: usize, lam: &Scalar, p: &dyn Fn(usize, usize) -> Scalar) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
    // kappa[i][j] = κ_j^{(i)}, mu[i][j] = λ_j^{(i)}, 0-based
    let mut kappa = vec![vec![lam.clone(); n]; n];
    let mut mu = vec![vec![lam.clone(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i < j {
                kappa[i][j] = p(i, j);
                mu[i][j] = lam.checked_div(&p(i, j)).expect("p_ij is nonzero");
            } else if i > j {
                kappa[i][j] = lam.checked_div(&p(j, i)).expect("p_ji is nonzero");
                mu[i][j] = p(j, i);
            }
        }
    }
    (kappa, mu)
}

/// U_{λ,p}(gl_n) with v_i of degree k_i and f_i of degree l_i, where
/// λ_j(k_i) = μ_{j+1}^{(i)} μ_j^{(i+1)} / (μ_j^{(i)} μ_{j+1}^{(i+1)}) and
/// λ_j(l_i) = κ_j^{(i)} κ_{j+1}^{(i+1)} / (κ_{j+1}^{(i)} κ_j^{(i+1)}).
pub fn multiparameter_gl(n: usize) -> Result<DoubleData, CatalogError> {
    let mut names = vec!["lam".to_string()];
    for i in 1..=n {
        for j in i + 1..=n {
            names.push(format!("p{i}{j}"));
        }
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let f = Field::new(FieldSpec::rational(&refs))?;
    let lam = f.param("lam")?;
    let p = |i: usize, j: usize| f.param(&format!("p{}{}", i + 1, j + 1)).expect("declared above");
    let (kappa, mu) = gl_tables(n, &lam, &p);
    let m = n - 1;
    let g = AbelianGroup::free(2 * m);
    let k: Vec<GroupElem> = (0..m).map(|i| g.generator(i)).collect();
    let l: Vec<GroupElem> = (0..m).map(|i| g.generator(m + i)).collect();
    let ratio = |t: &[Vec<Scalar>], a: (usize, usize), b: (usize, usize), c: (usize, usize), d: (usize, usize)| {
        (&t[a.0][a.1] * &t[b.0][b.1]).checked_div(&(&t[c.0][c.1] * &t[d.0][d.1])).expect("nonzero table entries")
    };
    let mut chars = Vec::new();
    for j in 0..m {
        let mut values = Vec::new();
        for i in 0..m {
            values.push(ratio(&mu, (i, j + 1), (i + 1, j), (i, j), (i + 1, j + 1)));
        }
        for i in 0..m {
            values.push(ratio(&kappa, (i, j), (i + 1, j + 1), (i, j + 1), (i + 1, j)));
        }
        chars.push(Character::new(&g, values)?);
    }
    let real = Realization::new(f.clone(), g, k, l, chars)?;
    let mut gamma = vec![vec![f.zero(); m]; m];
    for (i, row) in gamma.iter_mut().enumerate() {
        row[i] = &f.one() - &lam;
    }
    Ok(DoubleData::new(real, gamma.clone(), gamma)?.with_name(&format!("multiparameter-gl {n}")))
}

/// Rank one over C_N = ⟨a⟩ with k = a^ν, l = a^{−ν}, λ(a) = ζ_N^ν, so
/// q_11 = ζ_N^{ν²}; γ = 1.
pub fn radford(big_n: u32, nu: u32) -> Result<DoubleData, CatalogError> {
    let f = Field::new(FieldSpec::new(big_n, &[]))?;
    let g = AbelianGroup::cyclic(big_n);
    let k = g.power(&g.generator(0), nu as i64);
    let l = g.inverse(&k);
    let ch = Character::new(&g, vec![f.zeta(nu as i64)])?;
    let real = Realization::new(f.clone(), g, vec![k], vec![l], vec![ch])?;
    let gamma = vec![vec![f.one()]];
    let name = if nu == 1 { format!("radford r={big_n}") } else { format!("radford N={big_n} nu={nu}") };
    Ok(DoubleData::new(real, gamma.clone(), gamma)?.with_name(&name))
}

/// q = s², braiding [[q, q⁻¹], [q⁻¹, −q]] over Q(i)(s), roots (s, i·s).
pub fn cartan_not_dj() -> Result<DoubleData, CatalogError> {
    let f = Field::new(FieldSpec::new(4, &["s"]))?;
    let q = f.parse("s^2")?;
    let qi = q.inv()?;
    let (g, k, l) = free_standard(2);
    let c1 = Character::new(&g, vec![q.clone(), qi.clone()])?;
    let c2 = Character::new(&g, vec![qi, -&q])?;
    let real = Realization::new(f.clone(), g, k, l, vec![c1, c2])?;
    let roots = vec![f.parse("s")?, f.parse("z*s")?];
    let mut gamma = vec![vec![f.zero(); 2]; 2];
    for i in 0..2 {
        gamma[i][i] = (&roots[i] - &roots[i].inv()?).inv()?;
    }
    Ok(DoubleData::new(real, gamma.clone(), gamma)?.with_name("cartan-not-dj").with_sqrt(roots)?)
}

/// v_1 = v_p (nilpotent, q_11 = ξ a primitive p-th root), v_2 = v_∞
/// (q_22 = η = s²), q_12 = ξ, q_21 = ξ⁻¹. The group is
/// C_∞ × C_∞ × C_p × C_p ∋ (g_∞, h_∞, g_p, h_p) with k = (g_p, g_∞),
/// l = (h_p, h_∞) and λ_j(h_i) = q_ji⁻¹.
pub fn mixed(p: u32) -> Result<DoubleData, CatalogError> {
    let (order, xi_exp, root_exp) = if p % 2 == 1 { (p, 1, (p as i64 + 1) / 2) } else { (2 * p, 2, 1) };
    let f = Field::new(FieldSpec::new(order, &["s"]))?;
    let xi = f.zeta(xi_exp);
    let eta = f.parse("s^2")?;
    let q = [[xi.clone(), xi.clone()], [xi.inv()?, eta]];
    let g = AbelianGroup::new(2, vec![p, p])?;
    let (g_inf, h_inf, g_p, h_p) = (0, 1, 2, 3);
    let k = vec![g.generator(g_p), g.generator(g_inf)];
    let l = vec![g.generator(h_p), g.generator(h_inf)];
    let chars = (0..2)
        .map(|j| {
            let mut values = vec![f.one(); 4];
            values[g_p] = q[0][j].clone();
            values[g_inf] = q[1][j].clone();
            values[h_p] = q[j][0].inv()?;
            values[h_inf] = q[j][1].inv()?;
            Character::new(&g, values).map_err(CatalogError::from)
        })
        .collect::<Result<Vec<_>, CatalogError>>()?;
    let real = Realization::new(f.clone(), g, k, l, chars)?;
    let roots = vec![f.zeta(root_exp), f.parse("s")?];
    let mut gamma = vec![vec![f.zero(); 2]; 2];
    for i in 0..2 {
        gamma[i][i] = (&roots[i] - &roots[i].inv()?).inv()?;
    }
    Ok(DoubleData::new(real, gamma.clone(), gamma)?.with_name(&format!("mixed p={p}")).with_sqrt(roots)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{classify, ClassifyOptions};
    use crate::double::validate;
    use crate::nichols::hilbert_dims;

    fn params(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    fn all_entries() -> Vec<DoubleData> {
        vec![
            dj('A', 1).unwrap(),
            dj('A', 2).unwrap(),
            dj('B', 2).unwrap(),
            multiparameter_gl(2).unwrap(),
            multiparameter_gl(3).unwrap(),
            radford(2, 1).unwrap(),
            radford(3, 1).unwrap(),
            radford(5, 1).unwrap(),
            cartan_not_dj().unwrap(),
            mixed(3).unwrap(),
        ]
    }

    #[test]
    fn every_entry_validates() {
        for d in all_entries() {
            let r = validate(&d);
            assert!(r.passed(), "{:?}: {r}", d.name);
            assert!(r.flags.indecomposable, "{:?}", d.name);
        }
    }

    #[test]
    fn a2_braiding() {
        let d = catalog_build("dj", &params(&[("type", "A"), ("rank", "2")])).unwrap();
        let b = d.braiding();
        let s: Vec<Vec<String>> = b.q.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        assert_eq!(s, vec![vec!["q^2", "q^-1"], vec!["q^-1", "q^2"]]);
        assert_eq!(d.gamma[0][0].to_string(), "q/(q^2 - 1)");
        let c = classify(&b, &ClassifyOptions::default()).unwrap();
        assert_eq!(c.summary(), "DJ-type, Cartan A2, finite type, finite GK-dim predicted");
    }

    #[test]
    fn b2_uses_short_and_long_roots() {
        let d = dj('B', 2).unwrap();
        let b = d.braiding();
        assert_eq!(b.q[0][0].to_string(), "q^4");
        assert_eq!(b.q[1][1].to_string(), "q^2");
        assert_eq!(b.q[0][1].to_string(), "q^-2");
        assert_eq!(d.sqrt.unwrap()[0].to_string(), "q^2");
    }

    #[test]
    fn finite_types_classify() {
        for (t, n, name) in [('A', 3, "A3"), ('B', 3, "B3"), ('C', 3, "C3"), ('D', 4, "D4"), ('G', 2, "G2"), ('F', 4, "F4"), ('E', 6, "E6")] {
            let b = dj(t, n).unwrap().braiding();
            let c = classify(&b, &ClassifyOptions::default()).unwrap();
            assert!(c.dj.is_some(), "{name}");
            assert_eq!(c.finite_type.unwrap().name().unwrap(), name);
        }
    }

    #[test]
    fn radford_entries() {
        let d = catalog_build("radford", &params(&[("r", "3")])).unwrap();
        assert_eq!(d.field().cyclotomic_order(), 3);
        assert_eq!(d.braiding().q[0][0].to_string(), "z");
        let two = radford(2, 1).unwrap().braiding();
        assert_eq!(two.q[0][0].to_string(), "-1");
        assert_eq!(hilbert_dims(&two.bare(), 2), vec![1, 1, 0]);
        let d = catalog_build("radford", &params(&[("N", "6"), ("nu", "2")])).unwrap();
        assert_eq!(d.braiding().q[0][0], d.field().zeta(4));
        assert!(!validate(&d).flags.indecomposable);
        assert!(catalog_build("radford", &params(&[("N", "4"), ("nu", "2")])).is_err());
    }

    #[test]
    fn gl_compatibility_and_diagonal() {
        let d = multiparameter_gl(3).unwrap();
        let b = d.braiding();
        let lam = d.field().param("lam").unwrap();
        assert_eq!(b.q[0][0], lam.inv().unwrap());
        assert_eq!(b.q[1][1], lam.inv().unwrap());
        assert!(d.realization.compatibility_failure().is_none());
        assert_eq!(d.gamma[0][0].to_string(), "-lam + 1");
    }

    #[test]
    fn mixed_braiding() {
        let d = mixed(3).unwrap();
        let b = d.braiding();
        assert_eq!(b.q[0][0].to_string(), "z");
        assert_eq!(b.q[0][1].to_string(), "z");
        assert_eq!(b.q[1][0], d.field().zeta(2));
        assert_eq!(b.q[1][1].to_string(), "s^2");
        let r = &d.sqrt.as_ref().unwrap()[0];
        assert_eq!(&(r * r), &b.q[0][0]);
    }

    #[test]
    fn bad_params() {
        assert!(matches!(catalog_build("nope", &BTreeMap::new()), Err(CatalogError::UnknownEntry(_))));
        assert!(matches!(catalog_build("dj", &params(&[("type", "A")])), Err(CatalogError::BadParams { .. })));
        assert!(matches!(catalog_build("dj", &params(&[("type", "E"), ("rank", "5")])), Err(CatalogError::BadParams { .. })));
        assert!(matches!(catalog_build("mixed", &params(&[("p", "x")])), Err(CatalogError::BadParams { .. })));
        assert!(matches!(catalog_build("cartan-not-dj", &params(&[("q", "2")])), Err(CatalogError::BadParams { .. })));
    }
}
