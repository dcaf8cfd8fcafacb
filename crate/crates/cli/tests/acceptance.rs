//! One PASS/FAIL line per acceptance criterion, exact equality throughout.

use std::process::Command;
use std::time::{Duration, Instant};

use fsind_cli::{load, parse_input, table_report};
use fsind_core::constructors::{builtin, catalog, coalgebra_regular_dual_indicator, coalgebra_regular_indicator};
use fsind_core::document::LoadedDocument;
use fsind_core::formulas::{
    fs_regular_trace_q, fs_via_separability, fs_via_symmetric, hopf_character_twist_formula, hopf_integral_idempotent,
    symmetric_form_data, symmetric_idempotent, trace_s_global, trace_s_on_image,
};
use fsind_core::pivotal::{
    flip_form, fs_indicator, invariant_form_space, pivotal_from_character, regular_module, transposition_on_forms,
};
use fsind_core::qsl2::qsl2_indicator;
use fsind_core::{FieldTag, Matrix, ModuleRep, PivotalAlgebra, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn load_builtin(name: &str) -> Result<LoadedDocument, String> {
    let doc = builtin(name).map_err(|e| e.to_string())?;
    load(&doc, true).map_err(|e| format!("{name}: {e}"))
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn twists(doc: &LoadedDocument) -> Vec<Option<String>> {
    std::iter::once(None)
        .chain(doc.algebra.involutions().iter().map(|t| Some(t.name.clone())))
        .collect()
}

fn int(field: FieldTag, n: i64) -> Scalar {
    Scalar::from_int(field, n)
}

fn separability_nu(a: &PivotalAlgebra, v: &ModuleRep, twist: Option<&str>) -> Result<Scalar, String> {
    let e = if a.integral().is_some() {
        hopf_integral_idempotent(a)
    } else {
        symmetric_form_data(a).and_then(|d| symmetric_idempotent(a, &d))
    }
    .map_err(|e| e.to_string())?;
    fs_via_separability(a, v, &e, twist).map_err(|e| e.to_string())
}

fn criterion_1() -> Check {
    let sweep = Instant::now();
    let one = Scalar::one(FieldTag::RationalFunction);
    for two_ell in 0..=8u32 {
        let start = Instant::now();
        let expected = if two_ell % 2 == 0 { one.clone() } else { -&one };
        let plain = qsl2_indicator(two_ell, false).map_err(|e| e.to_string())?.nu;
        let twisted = qsl2_indicator(two_ell, true).map_err(|e| e.to_string())?.nu;
        ensure(plain == expected, || format!("2l={two_ell}: nu = {}", plain.to_canonical_string()))?;
        ensure(twisted == one, || format!("2l={two_ell}: nu^tau = {}", twisted.to_canonical_string()))?;
        within(start, Duration::from_secs(60), &format!("2l={two_ell}"))?;
    }
    within(sweep, Duration::from_secs(300), "sweep")?;
    Ok(format!("2l = 0..8: nu = (-1)^2l, nu^tau = 1 in {:?}", sweep.elapsed()))
}

fn criterion_2() -> Check {
    let mut counts = Vec::new();
    for name in ["C2", "C3", "C4", "C6", "S3", "D4", "Q8"] {
        let start = Instant::now();
        let doc = load_builtin(name)?;
        let g = doc.group.as_ref().ok_or("no group")?;
        let n = g.order();
        let e = (0..n).find(|&x| (0..n).all(|y| g.table()[x][y] == y)).ok_or("no identity")?;
        let count = (0..n).filter(|&x| g.table()[x][x] == e).count();
        let got = fs_regular_trace_q(&doc.algebra, None).map_err(|e| e.to_string())?;
        ensure(got == int(doc.field, count as i64), || format!("{name}: {} vs {count}", got.to_canonical_string()))?;
        within(start, Duration::from_secs(1), name)?;
        counts.push(format!("{name}={count}"));
    }
    Ok(counts.join(" "))
}

fn criterion_3() -> Check {
    let mut modules = 0;
    for (name, _) in catalog() {
        let doc = load_builtin(name)?;
        let a = &doc.algebra;
        let data = symmetric_form_data(a).map_err(|e| format!("{name}: {e}"))?;
        for v in &doc.modules {
            let start = Instant::now();
            let def = fs_indicator(a, v, None).map_err(|e| e.to_string())?.nu;
            let sep = separability_nu(a, v, None)?;
            let sym = fs_via_symmetric(a, v, &data, None).map_err(|e| e.to_string())?.nu;
            ensure(def == sep && def == sym, || {
                format!(
                    "{name}/{}: def {} sep {} sym {}",
                    v.name,
                    def.to_canonical_string(),
                    sep.to_canonical_string(),
                    sym.to_canonical_string()
                )
            })?;
            if name == "Q8" && v.name == "V2" {
                ensure(def == int(a.field(), -1), || "Q8/V2 is not -1".into())?;
            }
            within(start, Duration::from_secs(5), &format!("{name}/{}", v.name))?;
            modules += 1;
        }
    }
    Ok(format!("{modules} modules agree on all three paths; Q8 V2 = -1"))
}

fn criterion_4() -> Check {
    let mut checked = 0;
    for (name, _) in catalog() {
        let doc = load_builtin(name)?;
        let a = &doc.algebra;
        for v in &doc.modules {
            for twist in twists(&doc) {
                let r = fs_indicator(a, v, twist.as_deref()).map_err(|e| e.to_string())?;
                if !r.abs_simple {
                    continue;
                }
                let label = format!("{name}/{}/{twist:?}", v.name);
                let nu = r.nu.as_i64();
                ensure(matches!(nu, Some(-1..=1)), || format!("{label}: nu = {}", r.nu.to_canonical_string()))?;
                ensure((nu != Some(0)) == r.self_dual, || format!("{label}: self_dual = {}", r.self_dual))?;
                if nu != Some(0) {
                    let m = r.canonical_form.as_ref().ok_or_else(|| format!("{label}: no form"))?;
                    ensure(!m.det_bareiss().map_err(|e| e.to_string())?.is_zero(), || format!("{label}: degenerate"))?;
                    let g = v.act(a.pivot());
                    ensure(flip_form(&g, m) == m.scale(&r.nu), || format!("{label}: R(g)^T M^T != nu M"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (module, twist) pairs"))
}

fn criterion_5() -> Check {
    let mut out = Vec::new();
    for name in ["S3", "D4", "Q8"] {
        let start = Instant::now();
        let doc = load_builtin(name)?;
        let (lhs, rhs) = trace_s_global(&doc.algebra, &doc.modules).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{name}: {} vs {}", lhs.to_canonical_string(), rhs.to_canonical_string()))?;
        within(start, Duration::from_secs(1), name)?;
        out.push(format!("{name}: {}", lhs.to_canonical_string()));
    }
    Ok(out.join(", "))
}

fn criterion_6() -> Check {
    let mut checked = 0;
    for (name, _) in catalog() {
        let doc = load_builtin(name)?;
        let a = &doc.algebra;
        for v in &doc.modules {
            let r = fs_indicator(a, v, None).map_err(|e| e.to_string())?;
            if !(r.self_dual && r.abs_simple) {
                continue;
            }
            let (ts, tq) = trace_s_on_image(a, v, None).map_err(|e| e.to_string())?;
            ensure(ts == &r.nu * &v.character(a.pivot()), || format!("{name}/{}: Trace(S_V)", v.name))?;
            ensure(tq == &r.nu * &int(a.field(), v.dim as i64), || format!("{name}/{}: Trace(Q_V)", v.name))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} self-dual modules"))
}

fn random_unimodular(n: usize, field: FieldTag, rng: &mut ChaCha8Rng) -> Matrix {
    let mut factor = |lower: bool| {
        let entries: Vec<Scalar> = (0..n * n)
            .map(|x| {
                let (r, c) = (x / n, x % n);
                if r == c {
                    Scalar::one(field)
                } else if (r > c) == lower {
                    int(field, rng.gen_range(-3..=3))
                } else {
                    Scalar::zero(field)
                }
            })
            .collect();
        Matrix::from_flat(n, n, field, entries).expect("square")
    };
    let l = factor(true);
    let u = factor(false);
    l.mul(&u).expect("square")
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
    ModuleRep::new(&format!("{}+{}", v.name, w.name), v.field, action).expect("block sum")
}

fn criterion_7() -> Check {
    let docs: Vec<(&str, LoadedDocument)> = catalog()
        .into_iter()
        .map(|(n, _)| load_builtin(n).map(|d| (n, d)))
        .collect::<Result<_, _>>()?;

    let start = Instant::now();
    for (name, doc) in &docs {
        for v in &doc.modules {
            for w in &doc.modules {
                let s = direct_sum(v, w);
                for t in twists(doc) {
                    let t = t.as_deref();
                    let nu = |m: &ModuleRep| fs_indicator(&doc.algebra, m, t).map(|r| r.nu).map_err(|e| e.to_string());
                    ensure(nu(&s)? == &nu(v)? + &nu(w)?, || format!("additivity {name}/{}/{t:?}", s.name))?;
                }
            }
        }
    }
    within(start, Duration::from_secs(30), "additivity")?;

    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    let mut conjugations = 0;
    for (name, doc) in &docs {
        for v in &doc.modules {
            for t in twists(doc) {
                let t = t.as_deref();
                let base = fs_indicator(&doc.algebra, v, t).map_err(|e| e.to_string())?;
                for _ in 0..100 {
                    let p = random_unimodular(v.dim, v.field, &mut rng);
                    let w = v.conjugate(&p).map_err(|e| e.to_string())?;
                    let r = fs_indicator(&doc.algebra, &w, t).map_err(|e| e.to_string())?;
                    let same = r.nu == base.nu
                        && (r.dim_bil, r.dim_plus, r.dim_minus, r.end_dim) == (base.dim_bil, base.dim_plus, base.dim_minus, base.end_dim)
                        && (r.self_dual, r.abs_simple) == (base.self_dual, base.abs_simple)
                        && r.canonical_form.is_some() == base.canonical_form.is_some();
                    ensure(same, || format!("base change {name}/{}/{t:?}", v.name))?;
                    conjugations += 1;
                }
            }
        }
    }
    within(start, Duration::from_secs(30), "base change")?;

    let start = Instant::now();
    for (name, doc) in &docs {
        let mut modules = doc.modules.clone();
        modules.push(regular_module(&doc.algebra));
        for v in &modules {
            for t in twists(doc) {
                let forms = invariant_form_space(&doc.algebra, v, t.as_deref()).map_err(|e| e.to_string())?;
                let op = transposition_on_forms(&doc.algebra, v, &forms).map_err(|e| e.to_string())?;
                let sq = op.mul(&op).map_err(|e| e.to_string())?;
                ensure(sq == Matrix::identity(op.rows(), op.field()), || format!("involutivity {name}/{}/{t:?}", v.name))?;
            }
        }
    }
    within(start, Duration::from_secs(30), "involutivity")?;
    Ok(format!("additivity, {conjugations} base changes, involutivity"))
}

fn criterion_8() -> Check {
    let c3 = load_builtin("C3")?;
    let chi1 = c3.module("chi1").ok_or("C3 has no chi1")?;
    let plain = fs_indicator(&c3.algebra, chi1, None).map_err(|e| e.to_string())?.nu;
    let twisted = fs_indicator(&c3.algebra, chi1, Some("inv")).map_err(|e| e.to_string())?.nu;
    ensure(plain.is_zero() && twisted.is_one(), || "C3 chi1: expected nu = 0, nu^inv = 1".into())?;

    let s3 = load_builtin("S3")?;
    let (_, alpha) = s3.character_twists.first().ok_or("S3 has no character twist")?;
    let twisted_alg = pivotal_from_character(&s3.algebra, alpha).map_err(|e| e.to_string())?;
    let mut values = Vec::new();
    for v in &s3.modules {
        let def = fs_indicator(&twisted_alg, v, None).map_err(|e| e.to_string())?;
        let formula = hopf_character_twist_formula(&s3.algebra, v, alpha).map_err(|e| e.to_string())?;
        ensure(def.nu == formula, || format!("S3/{}: definition and formula differ", v.name))?;
        ensure(def.abs_simple && matches!(def.nu.as_i64(), Some(-1..=1)), || format!("S3/{}: not in trichotomy", v.name))?;
        ensure((def.nu.as_i64() != Some(0)) == def.self_dual, || format!("S3/{}: self-duality", v.name))?;
        values.push(format!("{}={}", v.name, def.nu.to_canonical_string()));
    }
    Ok(format!("C3 chi1: 0 / inv 1; S3 sign twist: {}", values.join(" ")))
}

fn criterion_9() -> Check {
    let mut out = Vec::new();
    for (name, expected) in [("kC2", 2), ("kC3", 1), ("kC4", 2)] {
        let doc = load_builtin(name)?;
        let coalg = doc.coalgebra.as_ref().ok_or("no coalgebra")?;
        let trace = coalgebra_regular_indicator(coalg).map_err(|e| e.to_string())?;
        let def = coalgebra_regular_dual_indicator(coalg).map_err(|e| e.to_string())?.nu;
        ensure(trace.as_i64() == Some(expected), || format!("{name}: Trace(Q) = {}", trace.to_canonical_string()))?;
        ensure(def == trace, || format!("{name}: definition {}", def.to_canonical_string()))?;
        out.push(format!("{name}={expected}"));
    }
    Ok(out.join(" "))
}

fn criterion_10() -> Check {
    let exe = env!("CARGO_BIN_EXE_fsind");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (name, _) in catalog() {
        let path = dir.path().join(format!("{name}.json"));
        let status = Command::new(exe)
            .args(["example", name, "-o"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("example {name} failed"))?;
        let run = || -> Result<Vec<u8>, String> {
            let out = Command::new(exe)
                .args(["table", "--json"])
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("table {name}: {}", String::from_utf8_lossy(&out.stderr)))?;
            Ok(out.stdout)
        };
        let first = run()?;
        ensure(first == run()?, || format!("{name}: repeated runs differ"))?;
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let reparsed = load(&parse_input(&text).map_err(|e| e.to_string())?, true).map_err(|e| e.to_string())?;
        let in_process = table_report(&reparsed).map_err(|e| e.to_string())?.to_json();
        ensure(in_process.as_bytes() == first, || format!("{name}: in-process report differs"))?;
    }
    Ok(format!("{} builtins byte-identical", catalog().len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("quantum sl2 indicators", criterion_1),
        ("regular representation count", criterion_2),
        ("three paths agree", criterion_3),
        ("trichotomy and canonical forms", criterion_4),
        ("global trace identity", criterion_5),
        ("trace on image identities", criterion_6),
        ("property suites", criterion_7),
        ("twisted cases", criterion_8),
        ("coalgebra regular indicators", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {title}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {title}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
