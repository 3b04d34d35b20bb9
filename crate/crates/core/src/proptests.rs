//! Property tests across modules.

use std::collections::BTreeMap;

use proptest::prelude::*;
use crate::catalog;
use crate::double::Gen;
use crate::normalform::DoubleAlgebra;
use crate::scalars::{Field, FieldSpec, Scalar};

fn field() -> Field {
    Field::new(FieldSpec::new(5, &["q"])).unwrap()
}

/// Σ c_ab z^a q^b with small coefficients, divided by a small polynomial.
fn scalar() -> impl Strategy<Value = Scalar> {
    let terms = prop::collection::vec((0i64..4, -2i64..3, -3i64..4), 1..4);
    let den = prop::collection::vec((0i64..3, 1i64..3), 0..2);
    (terms, den).prop_map(|(num, den)| {
        let f = field();
        let mono = |a: i64, b: i64, c: i64| &(&f.zeta(a) * &f.param_power(0, b as i32)) * &f.int(c);
        let n = num.iter().fold(f.zero(), |s, &(a, b, c)| &s + &mono(a, b, c));
        let d = den.iter().fold(f.one(), |s, &(a, b)| &s * &(&mono(a, b, 1) + &f.int(2)));
        &n * &d.inv().unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn display_round_trips(a in scalar()) {
        prop_assert_eq!(field().parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in scalar(), b in scalar()) {
        let f = field();
        let target = Field::new(FieldSpec::new(5, &[])).unwrap();
        let assignment: BTreeMap<String, Scalar> = [("q".to_string(), target.int(3))].into_iter().collect();
        let s = |x: &Scalar| x.specialize(&target, &assignment);
        if let (Ok(sa), Ok(sb), Ok(sab), Ok(spb)) = (s(&a), s(&b), s(&(&a * &b)), s(&(&a + &b))) {
            prop_assert_eq!(sab, &sa * &sb);
            prop_assert_eq!(spb, &sa + &sb);
        }
        prop_assert!(s(&f.one()).unwrap().is_one());
    }

    #[test]
    fn double_is_associative(w in prop::collection::vec(0usize..5, 1..7), split in 0usize..7) {
        let d = catalog::dj('A', 2).unwrap();
        let a = DoubleAlgebra::new(&d);
        let g = &d.realization.group;
        let gen = |x: usize| match x {
            0 | 1 => Gen::V(x),
            2 | 3 => Gen::F(x - 2),
            _ => Gen::G(g.generator(1)),
        };
        let word: Vec<Gen> = w.iter().map(|&x| gen(x)).collect();
        let s = split.min(word.len());
        let whole = a.word(&word);
        prop_assert_eq!(a.multiply(&a.word(&word[..s]), &a.word(&word[s..])), whole);
    }
}
