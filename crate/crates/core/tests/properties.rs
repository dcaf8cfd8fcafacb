use fsind_core::constructors::{builtin, catalog};
use fsind_core::document::LoadedDocument;
use fsind_core::pivotal::{fs_indicator, invariant_form_space, regular_module, transposition_on_forms};
use fsind_core::scalars::parse_scalar;
use fsind_core::{FieldTag, Matrix, ModuleRep, Scalar};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field_strategy() -> impl Strategy<Value = FieldTag> {
    prop_oneof![
        Just(FieldTag::Rational),
        prop::sample::select(vec![3u32, 4, 5, 8, 12]).prop_map(FieldTag::Cyclotomic),
        Just(FieldTag::RationalFunction),
    ]
}

/// A small element of `field`: a combination of powers of the generator.
fn scalar_in(field: FieldTag) -> BoxedStrategy<Scalar> {
    let coeffs = prop::collection::vec((-6i64..=6, 1i64..=4), 1..4);
    match field {
        FieldTag::Rational => coeffs
            .prop_map(|cs| cs.iter().map(|&(n, d)| Scalar::from_ratio(FieldTag::Rational, n, d)).fold(Scalar::zero(FieldTag::Rational), |a, b| &a + &b))
            .boxed(),
        FieldTag::Cyclotomic(n) => coeffs
            .prop_map(move |cs| {
                cs.iter().enumerate().fold(Scalar::zero(field), |acc, (k, &(a, b))| {
                    let term = &Scalar::from_ratio(field, a, b) * &Scalar::zeta(n).pow(k as i64).unwrap();
                    &acc + &term
                })
            })
            .boxed(),
        FieldTag::RationalFunction => (coeffs, 1i64..=3, -2i64..=2)
            .prop_map(|(cs, d0, shift)| {
                let f = FieldTag::RationalFunction;
                let num = cs.iter().enumerate().fold(Scalar::zero(f), |acc, (k, &(a, b))| {
                    &acc + &(&Scalar::from_ratio(f, a, b) * &Scalar::q_pow(k as i64 + shift))
                });
                let den = &Scalar::from_int(f, d0) + &Scalar::q_pow(2);
                &num / &den
            })
            .boxed(),
    }
}

fn field_and_scalars(n: usize) -> impl Strategy<Value = (FieldTag, Vec<Scalar>)> {
    field_strategy().prop_flat_map(move |f| (Just(f), prop::collection::vec(scalar_in(f), n)))
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..=4, rows * cols).prop_map(move |xs| {
        let data = xs.iter().map(|&x| Scalar::from_int(FieldTag::Rational, x)).collect();
        Matrix::from_flat(rows, cols, FieldTag::Rational, data).unwrap()
    })
}

fn square_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=4).prop_flat_map(|n| (int_matrix(n, n), int_matrix(n, n)))
}

fn cofactor_det(m: &Matrix) -> Scalar {
    let n = m.rows();
    if n == 0 {
        return Scalar::one(m.field());
    }
    (0..n).fold(Scalar::zero(m.field()), |acc, j| {
        let minor = Matrix::from_fn(n - 1, n - 1, m.field(), |r, c| {
            m.get(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = m.get(0, j) * &cofactor_det(&minor);
        if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((_f, xs) in field_and_scalars(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((a - a).is_zero());
        if !a.is_zero() {
            prop_assert!((a * &a.try_inv().unwrap()).is_one());
            prop_assert_eq!(&(b / a) * a, b.clone());
        }
    }

    #[test]
    fn canonical_strings_round_trip((f, xs) in field_and_scalars(1)) {
        let text = xs[0].to_canonical_string();
        let back = parse_scalar(&text, f).unwrap();
        prop_assert_eq!(&back, &xs[0]);
        prop_assert_eq!(back.to_canonical_string(), text);
    }

    #[test]
    fn rank_plus_nullity(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn determinant_matches_cofactor_expansion((a, b) in square_pair()) {
        prop_assert_eq!(a.det_bareiss().unwrap(), cofactor_det(&a));
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det_bareiss().unwrap(), &a.det_bareiss().unwrap() * &b.det_bareiss().unwrap());
        prop_assert_eq!(ab.trace().unwrap(), b.mul(&a).unwrap().trace().unwrap());
        match a.inverse().unwrap() {
            Some(inv) => prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(a.rows(), a.field())),
            None => prop_assert!(a.det_bareiss().unwrap().is_zero()),
        }
    }

    #[test]
    fn polynomial_determinants(xs in prop::collection::vec(scalar_in(FieldTag::RationalFunction), 9)) {
        let m = Matrix::from_flat(3, 3, FieldTag::RationalFunction, xs).unwrap();
        prop_assert_eq!(m.det_bareiss().unwrap(), cofactor_det(&m));
    }
}

fn load(name: &str) -> LoadedDocument {
    builtin(name).unwrap().build().unwrap()
}

fn twists(doc: &LoadedDocument) -> Vec<Option<String>> {
    std::iter::once(None)
        .chain(doc.algebra.involutions().iter().map(|t| Some(t.name.clone())))
        .collect()
}

/// Unimodular `L U` with small integer entries.
fn random_unimodular(n: usize, field: FieldTag, rng: &mut ChaCha8Rng) -> Matrix {
    let mut entry = |r: usize, c: usize, lower: bool| -> Scalar {
        if r == c {
            Scalar::one(field)
        } else if (r > c) == lower {
            Scalar::from_int(field, rng.gen_range(-3..=3))
        } else {
            Scalar::zero(field)
        }
    };
    let l = Matrix::from_fn(n, n, field, |r, c| entry(r, c, true));
    let u = Matrix::from_fn(n, n, field, |r, c| entry(r, c, false));
    l.mul(&u).unwrap()
}

fn direct_sum(v: &ModuleRep, w: &ModuleRep) -> ModuleRep {
    let n = v.dim + w.dim;
    let action = v
        .action
        .iter()
        .zip(&w.action)
        .map(|(x, y)| {
            Matrix::from_fn(n, n, v.field, |r, c| match (r < v.dim, c < v.dim) {
                (true, true) => x.get(r, c).clone(),
                (false, false) => y.get(r - v.dim, c - v.dim).clone(),
                _ => Scalar::zero(v.field),
            })
        })
        .collect();
    ModuleRep::new(&format!("{}+{}", v.name, w.name), v.field, action).unwrap()
}

#[test]
fn indicator_report_is_invariant_under_base_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, _) in catalog() {
        let doc = load(name);
        for v in &doc.modules {
            for twist in twists(&doc) {
                let t = twist.as_deref();
                let base = fs_indicator(&doc.algebra, v, t).unwrap();
                for _ in 0..100 {
                    let p = random_unimodular(v.dim, v.field, &mut rng);
                    let r = fs_indicator(&doc.algebra, &v.conjugate(&p).unwrap(), t).unwrap();
                    assert_eq!(
                        (&r.nu, r.dim_bil, r.dim_plus, r.dim_minus, r.end_dim, r.self_dual, r.abs_simple),
                        (&base.nu, base.dim_bil, base.dim_plus, base.dim_minus, base.end_dim, base.self_dual, base.abs_simple),
                        "{name}/{}/{t:?}",
                        v.name
                    );
                }
            }
        }
    }
}

#[test]
fn indicator_is_additive_on_direct_sums() {
    for (name, _) in catalog() {
        let doc = load(name);
        for v in &doc.modules {
            for w in &doc.modules {
                let sum = direct_sum(v, w);
                for twist in twists(&doc) {
                    let t = twist.as_deref();
                    let lhs = fs_indicator(&doc.algebra, &sum, t).unwrap().nu;
                    let rhs = &fs_indicator(&doc.algebra, v, t).unwrap().nu + &fs_indicator(&doc.algebra, w, t).unwrap().nu;
                    assert_eq!(lhs, rhs, "{name}/{}/{t:?}", sum.name);
                }
            }
        }
    }
}

#[test]
fn transposition_is_an_involution() {
    for (name, _) in catalog() {
        let doc = load(name);
        let mut modules = doc.modules.clone();
        modules.push(regular_module(&doc.algebra));
        if let [v, w, ..] = doc.modules.as_slice() {
            modules.push(direct_sum(v, w));
        }
        for v in &modules {
            for twist in twists(&doc) {
                let forms = invariant_form_space(&doc.algebra, v, twist.as_deref()).unwrap();
                let op = transposition_on_forms(&doc.algebra, v, &forms).unwrap();
                let k = op.rows();
                assert_eq!(op.mul(&op).unwrap(), Matrix::identity(k, op.field()), "{name}/{}/{twist:?}", v.name);
            }
        }
    }
}
