//! Fixtures shared by the benchmarks.

use qtri_core::normalform::{DoubleAlgebra, NormalFormElement};
use qtri_core::{catalog, DiagonalBraiding, DoubleData, Field, FieldSpec, Scalar};

pub fn a2() -> DoubleData {
    catalog::dj('A', 2).expect("A2 is in the catalog")
}

pub fn a2_braiding() -> DiagonalBraiding {
    a2().braiding()
}

/// (v1 v2 + f2 f1) and (f1 v2 v1 + v1): products of these hit every
/// straightening rule.
pub fn a2_operands(a: &DoubleAlgebra) -> (NormalFormElement, NormalFormElement) {
    let (v1, v2, f1, f2) = (a.v(0), a.v(1), a.f(0), a.f(1));
    let x = a.multiply(&v1, &v2).add(&a.multiply(&f2, &f1));
    let y = a.multiply(&a.multiply(&f1, &v2), &v1).add(&v1);
    (x, y)
}

/// Terms of Σ_k 1/(q^k − 1) for k = 1..n, summed in order by the bench.
pub fn geometric_fractions(n: i64) -> Vec<Scalar> {
    let f = Field::new(FieldSpec::rational(&["q"])).expect("valid field");
    let q = f.param("q").expect("q is a parameter");
    (1..=n).map(|k| (&q.pow(k) - &f.one()).inv().expect("nonzero")).collect()
}
