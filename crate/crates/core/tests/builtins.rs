use fsind_core::constructors::{
    builtin, catalog, coalgebra_regular_dual_indicator, coalgebra_regular_indicator, CayleyTable,
};
use fsind_core::document::{InputDocument, LoadedDocument};
use fsind_core::formulas::{
    doi_grouplike_indicator, fs_regular_trace_q, fs_via_separability, fs_via_symmetric, hopf_character_twist_formula,
    hopf_integral_idempotent, symmetric_form_data, symmetric_idempotent, trace_s_global, trace_s_on_image,
};
use fsind_core::pivotal::{flip_form, fs_indicator, pivotal_from_character};
use fsind_core::{ModuleRep, PivotalAlgebra, Scalar};

fn load(name: &str) -> LoadedDocument {
    let doc = builtin(name).unwrap();
    let loaded = doc.build().unwrap();
    let report = loaded.validate();
    assert!(report.is_ok(), "{name}: {:?}", report.violations);
    loaded
}

fn int(a: &PivotalAlgebra, n: i64) -> Scalar {
    Scalar::from_int(a.field(), n)
}

/// `(1/|G|) Σ_g χ(g τ(g))`, straight from the Cayley table.
fn group_oracle(g: &CayleyTable, v: &ModuleRep, tau: &[usize]) -> Scalar {
    let field = v.field;
    let total = (0..g.order()).fold(Scalar::zero(field), |acc, x| {
        &acc + &v.action[g.mul(x, tau[x])].trace().unwrap()
    });
    &total / &Scalar::from_int(field, g.order() as i64)
}

fn separability_nu(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Scalar {
    let e = if a.integral().is_some() {
        hopf_integral_idempotent(a).unwrap()
    } else {
        symmetric_idempotent(a, &symmetric_form_data(a).unwrap()).unwrap()
    };
    fs_via_separability(a, v, &e, twist).unwrap()
}

fn twists(doc: &LoadedDocument) -> Vec<Option<String>> {
    std::iter::once(None)
        .chain(doc.algebra.involutions().iter().map(|t| Some(t.name.clone())))
        .collect()
}

#[test]
fn catalog_round_trips() {
    assert!(catalog().len() >= 12);
    for (name, _) in catalog() {
        let doc = builtin(name).unwrap();
        let text = doc.to_json();
        let back = InputDocument::from_json(&text).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.to_json(), text);
        load(name);
    }
}

#[test]
fn three_paths_agree_on_every_module() {
    for (name, _) in catalog() {
        let doc = load(name);
        let a = &doc.algebra;
        let sym = symmetric_form_data(a).unwrap();
        for v in &doc.modules {
            for twist in twists(&doc) {
                let t = twist.as_deref();
                let def = fs_indicator(a, v, t).unwrap();
                let sep = separability_nu(a, v, t);
                let sy = fs_via_symmetric(a, v, &sym, t).unwrap();
                assert_eq!(def.nu, sep, "{name}/{}/{t:?}", v.name);
                assert_eq!(def.nu, sy.nu, "{name}/{}/{t:?}", v.name);
                if let (Some(g), Some((_, perm))) = (&doc.group, t.and_then(|n| doc.index_involutions.iter().find(|x| x.0 == n))) {
                    assert_eq!(def.nu, group_oracle(g, v, perm), "{name}/{}/{t:?}", v.name);
                }
                if let (Some(g), None) = (&doc.group, t) {
                    let id: Vec<usize> = (0..g.order()).collect();
                    assert_eq!(def.nu, group_oracle(g, v, &id), "{name}/{}", v.name);
                }
                if let Some(gl) = &doc.grouplike {
                    let perm = t.map(|n| doc.index_involutions.iter().find(|x| x.0 == n).unwrap().1.as_slice());
                    let doi = doi_grouplike_indicator(gl, &v.character_vector(), v.dim, perm).unwrap();
                    assert_eq!(def.nu, doi, "{name}/{}/{t:?} Doi", v.name);
                }
            }
        }
    }
}

#[test]
fn trichotomy_and_canonical_forms() {
    for (name, _) in catalog() {
        let doc = load(name);
        let a = &doc.algebra;
        for v in &doc.modules {
            for twist in twists(&doc) {
                let r = fs_indicator(a, v, twist.as_deref()).unwrap();
                assert!(r.abs_simple, "{name}/{}", v.name);
                let nu = r.nu.as_i64().expect("integer indicator");
                assert!((-1..=1).contains(&nu));
                assert_eq!(nu != 0, r.self_dual, "{name}/{}/{twist:?}", v.name);
                if nu != 0 {
                    let m = r.canonical_form.expect("one form");
                    assert!(!m.det_bareiss().unwrap().is_zero());
                    let g = v.act(a.pivot());
                    assert_eq!(flip_form(&g, &m), m.scale(&r.nu));
                }
            }
        }
    }
}

#[test]
fn regular_trace_counts_involutions() {
    for name in ["C2", "C3", "C4", "C6", "S3", "D4", "Q8"] {
        let doc = load(name);
        let g = doc.group.as_ref().unwrap();
        let count = (0..g.order()).filter(|&x| g.mul(x, x) == g.identity()).count();
        let got = fs_regular_trace_q(&doc.algebra, None).unwrap();
        assert_eq!(got, int(&doc.algebra, count as i64), "{name}");
    }
    assert_eq!(fs_regular_trace_q(&load("S3").algebra, None).unwrap().as_i64(), Some(4));
    assert_eq!(fs_regular_trace_q(&load("D4").algebra, None).unwrap().as_i64(), Some(6));
}

#[test]
fn global_trace_identity() {
    for name in ["C2", "C3", "C4", "S3", "D4", "Q8", "C3-inv", "S3-grouplike", "C4-scheme"] {
        let doc = load(name);
        let (lhs, rhs) = trace_s_global(&doc.algebra, &doc.modules).unwrap();
        assert_eq!(lhs, rhs, "{name}");
    }
}

#[test]
fn trace_on_image_identities() {
    for (name, _) in catalog() {
        let doc = load(name);
        let a = &doc.algebra;
        for v in &doc.modules {
            let r = fs_indicator(a, v, None).unwrap();
            if !r.self_dual {
                continue;
            }
            let (ts, tq) = trace_s_on_image(a, v, None).unwrap();
            assert_eq!(ts, &r.nu * &v.character(a.pivot()), "{name}/{}", v.name);
            assert_eq!(tq, &r.nu * &int(a, v.dim as i64), "{name}/{}", v.name);
        }
    }
}

#[test]
fn q8_two_dimensional_module() {
    let doc = load("Q8");
    let v = doc.module("V2").unwrap();
    let r = fs_indicator(&doc.algebra, v, None).unwrap();
    assert_eq!(r.nu, int(&doc.algebra, -1));
    assert_eq!((r.dim_plus, r.dim_minus), (0, 1));
    let sym = fs_via_symmetric(&doc.algebra, v, &symmetric_form_data(&doc.algebra).unwrap(), None).unwrap();
    assert_eq!(sym.schur, int(&doc.algebra, 4));
}

#[test]
fn schur_elements() {
    for (name, module, expected) in [("S3", "std", 3), ("S3", "triv", 6), ("D4", "triv", 8), ("C6", "chi0", 6)] {
        let doc = load(name);
        let data = symmetric_form_data(&doc.algebra).unwrap();
        let r = fs_via_symmetric(&doc.algebra, doc.module(module).unwrap(), &data, None).unwrap();
        assert_eq!(r.schur, int(&doc.algebra, expected), "{name}/{module}");
        assert!(r.abs_simple);
    }
}

#[test]
fn c3_inversion_twist() {
    for name in ["C3", "C3-inv"] {
        let doc = load(name);
        let v = doc.module("chi1").unwrap();
        assert!(fs_indicator(&doc.algebra, v, None).unwrap().nu.is_zero());
        assert!(fs_indicator(&doc.algebra, v, Some("inv")).unwrap().nu.is_one());
    }
}

#[test]
fn s3_sign_character_twist() {
    let doc = load("S3");
    let g = doc.group.as_ref().unwrap();
    let (_, alpha) = &doc.character_twists[0];
    let twisted = pivotal_from_character(&doc.algebra, alpha).unwrap();
    for (name, expected) in [("triv", 0), ("sign", 0), ("std", -1)] {
        let v = doc.module(name).unwrap();
        let def = fs_indicator(&twisted, v, None).unwrap().nu;
        let formula = hopf_character_twist_formula(&doc.algebra, v, alpha).unwrap();
        // (1/|G|) Σ α(x) χ(x²)
        let oracle = (0..g.order()).fold(Scalar::zero(v.field), |acc, x| {
            &acc + &(&alpha[x] * &v.action[g.mul(x, x)].trace().unwrap())
        });
        let oracle = &oracle / &int(&doc.algebra, 6);
        assert_eq!(def, formula, "{name}");
        assert_eq!(def, oracle, "{name}");
        assert_eq!(def, int(&doc.algebra, expected), "{name}");
    }
}

#[test]
fn coalgebra_regular_indicators() {
    for (name, expected) in [("kC2", 2), ("kC3", 1), ("kC4", 2)] {
        let doc = load(name);
        let coalg = doc.coalgebra.as_ref().unwrap();
        let trace_q = coalgebra_regular_indicator(coalg).unwrap();
        let def = coalgebra_regular_dual_indicator(coalg).unwrap();
        assert_eq!(trace_q.as_i64(), Some(expected), "{name}");
        assert_eq!(def.nu, trace_q, "{name}");
    }
}

#[test]
fn scheme_characters_use_doi_formula() {
    let doc = load("K3");
    let gl = doc.grouplike.as_ref().unwrap();
    assert!(doc.modules.is_empty());
    for c in &doc.characters {
        let nu = doi_grouplike_indicator(gl, &c.values, c.dim, None).unwrap();
        assert!(nu.is_one(), "{}", c.name);
    }
}
