use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::document::{
    AlgebraSection, CharacterSection, CharacterTwistSection, CoalgebraSection, GroupLikeSection, GroupSection,
    InputDocument, InvolutionSection, MatrixLit, ModuleSection, ScalarLit, SchemeSection,
};
use crate::error::{Error, Result};
use crate::scalars::{FieldTag, Scalar};

const ENTRIES: &[(&str, &str)] = &[
    ("C2", "cyclic group of order 2 over Q"),
    ("C3", "cyclic group of order 3 over Q(zeta_3), with the inversion involution"),
    ("C4", "cyclic group of order 4 over Q(zeta_4), with the inversion involution"),
    ("C6", "cyclic group of order 6 over Q(zeta_6), with the inversion involution"),
    ("S3", "symmetric group S3 with its three simples and the sign character twist"),
    ("D4", "dihedral group of order 8 with its five simples"),
    ("Q8", "quaternion group over Q(zeta_4) with its five simples"),
    ("C3-inv", "kC3 written out as a general pivotal algebra with an explicit involution"),
    ("S3-grouplike", "kS3 as a group-like algebra given by structure constants"),
    ("K3", "rank-2 association scheme of the complete graph on 3 points"),
    ("C4-scheme", "rank-3 distance scheme of the 4-cycle"),
    ("C3-scheme", "rank-3 group scheme of C3 over Q(zeta_3), with the * involution"),
    ("kC2", "group-like coalgebra kC2"),
    ("kC3", "group-like coalgebra kC3"),
    ("kC4", "group-like coalgebra kC4"),
];

/// Names and one-line descriptions of every built-in example.
pub fn catalog() -> Vec<(&'static str, &'static str)> {
    ENTRIES.to_vec()
}

/// A complete input document for a built-in example.
pub fn builtin(name: &str) -> Result<InputDocument> {
    let mut doc = match name {
        "C2" => cyclic_group(2),
        "C3" => cyclic_group(3),
        "C4" => cyclic_group(4),
        "C6" => cyclic_group(6),
        "S3" => s3(),
        "D4" => d4(),
        "Q8" => q8(),
        "C3-inv" => c3_general(),
        "S3-grouplike" => s3_grouplike(),
        "K3" => k3(),
        "C4-scheme" => c4_scheme(),
        "C3-scheme" => c3_scheme(),
        "kC2" => group_coalgebra(2),
        "kC3" => group_coalgebra(3),
        "kC4" => group_coalgebra(4),
        _ => return Err(Error::UnknownExample(name.to_string())),
    };
    let desc = ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, d)| d.to_string());
    doc.description = desc;
    Ok(doc)
}

fn empty_document(field: FieldTag) -> InputDocument {
    InputDocument {
        description: None,
        field: field.to_string(),
        algebra: None,
        group: None,
        scheme: None,
        coalgebra: None,
        modules: Vec::new(),
        involutions: Vec::new(),
        integral: None,
        trace_form: None,
        character_twists: Vec::new(),
        characters: Vec::new(),
        complete_simples: false,
    }
}

fn lit(s: &Scalar) -> ScalarLit {
    ScalarLit::from(s)
}

fn int_matrix(rows: &[&[i64]]) -> MatrixLit {
    rows.iter().map(|r| r.iter().map(|&x| ScalarLit::Int(x)).collect()).collect()
}

fn scalar_matrix(rows: Vec<Vec<Scalar>>) -> MatrixLit {
    rows.iter().map(|r| r.iter().map(lit).collect()).collect()
}

fn one_by_one(s: &Scalar) -> MatrixLit {
    vec![vec![lit(s)]]
}

fn generators_module(name: &str, gens: Vec<(&str, MatrixLit)>) -> ModuleSection {
    ModuleSection {
        name: name.to_string(),
        action: None,
        generators: Some(gens.into_iter().map(|(g, m)| (g.to_string(), m)).collect::<BTreeMap<_, _>>()),
        corep: None,
    }
}

fn action_module(name: &str, action: Vec<MatrixLit>) -> ModuleSection {
    ModuleSection {
        name: name.to_string(),
        action: Some(action),
        generators: None,
        corep: None,
    }
}

/// A finite permutation group generated by named permutations, with elements
/// labelled by shortest words in the generators (breadth-first order).
struct PermGroup {
    labels: Vec<String>,
    perms: Vec<Vec<usize>>,
    table: Vec<Vec<usize>>,
}

fn compress(word: &[&str]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(word[i]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// `(x ∘ y)(p) = x(y(p))`.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&p| x[p]).collect()
}

impl PermGroup {
    fn generate(gens: &[(&'static str, Vec<usize>)]) -> PermGroup {
        let points = gens[0].1.len();
        let identity: Vec<usize> = (0..points).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut perms = vec![identity];
        let mut words: Vec<Vec<&str>> = vec![Vec::new()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (name, g) in gens {
                let y = compose(&perms[x], g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), perms.len());
                    let mut w = words[x].clone();
                    w.push(name);
                    words.push(w);
                    perms.push(y);
                    queue.push_back(perms.len() - 1);
                }
            }
        }
        let table = perms
            .iter()
            .map(|x| perms.iter().map(|y| index[&compose(x, y)]).collect())
            .collect();
        PermGroup {
            labels: words.iter().map(|w| compress(w)).collect(),
            perms,
            table,
        }
    }

    fn order(&self) -> usize {
        self.perms.len()
    }

    fn section(&self) -> GroupSection {
        GroupSection {
            elements: self.labels.clone(),
            table: self.table.clone(),
        }
    }

    fn inverse(&self, x: usize) -> usize {
        (0..self.order()).find(|&y| self.table[x][y] == 0).expect("group")
    }

    fn inversion_perm(&self) -> Vec<usize> {
        (0..self.order()).map(|x| self.inverse(x)).collect()
    }

    fn sign(&self, x: usize) -> i64 {
        let p = &self.perms[x];
        let mut seen = vec![false; p.len()];
        let mut sign = 1;
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

fn cyclic_group(n: usize) -> InputDocument {
    let field = if n <= 2 { FieldTag::Rational } else { FieldTag::Cyclotomic(n as u32) };
    let g = PermGroup::generate(&[("a", cycle(n))]);
    let mut doc = empty_document(field);
    doc.group = Some(g.section());
    doc.modules = if n == 2 {
        vec![
            generators_module("triv", vec![("a", int_matrix(&[&[1]]))]),
            generators_module("sign", vec![("a", int_matrix(&[&[-1]]))]),
        ]
    } else {
        let z = Scalar::zeta(n as u32);
        (0..n)
            .map(|k| {
                let value = z.pow(k as i64).expect("zeta is invertible");
                generators_module(&format!("chi{k}"), vec![("a", one_by_one(&value))])
            })
            .collect()
    };
    if n > 2 {
        doc.involutions = vec![InvolutionSection {
            name: "inv".into(),
            perm: Some(g.inversion_perm()),
            images: None,
        }];
    }
    doc.complete_simples = true;
    doc
}

fn s3_group() -> PermGroup {
    PermGroup::generate(&[("c", vec![1, 2, 0]), ("t", vec![1, 0, 2])])
}

fn s3_modules() -> Vec<ModuleSection> {
    vec![
        generators_module("triv", vec![("c", int_matrix(&[&[1]])), ("t", int_matrix(&[&[1]]))]),
        generators_module("sign", vec![("c", int_matrix(&[&[1]])), ("t", int_matrix(&[&[-1]]))]),
        generators_module(
            "std",
            vec![
                ("c", int_matrix(&[&[0, -1], &[1, -1]])),
                ("t", int_matrix(&[&[0, 1], &[1, 0]])),
            ],
        ),
    ]
}

fn s3() -> InputDocument {
    let g = s3_group();
    let mut doc = empty_document(FieldTag::Rational);
    doc.group = Some(g.section());
    doc.modules = s3_modules();
    doc.character_twists = vec![CharacterTwistSection {
        name: "sign".into(),
        alpha: (0..g.order()).map(|x| ScalarLit::Int(g.sign(x))).collect(),
    }];
    doc.complete_simples = true;
    doc
}

fn d4() -> InputDocument {
    let g = PermGroup::generate(&[("r", vec![1, 2, 3, 0]), ("s", vec![0, 3, 2, 1])]);
    let one_dim = |name: &str, r: i64, s: i64| {
        generators_module(name, vec![("r", int_matrix(&[&[r]])), ("s", int_matrix(&[&[s]]))])
    };
    let mut doc = empty_document(FieldTag::Rational);
    doc.group = Some(g.section());
    doc.modules = vec![
        one_dim("triv", 1, 1),
        one_dim("chi_r", 1, -1),
        one_dim("chi_s", -1, 1),
        one_dim("chi_rs", -1, -1),
        generators_module(
            "V2",
            vec![
                ("r", int_matrix(&[&[0, -1], &[1, 0]])),
                ("s", int_matrix(&[&[1, 0], &[0, -1]])),
            ],
        ),
    ];
    doc.complete_simples = true;
    doc
}

/// Left multiplication by `u ∈ {1, i, j, k}` on `Q8`, elements encoded as `4 * sign + unit`.
fn quaternion_left_mult(u: usize) -> Vec<usize> {
    // UNIT[a][b] = (negate, c) with u_a u_b = ±u_c.
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    (0..8)
        .map(|p| {
            let (neg, v) = (p / 4 == 1, p % 4);
            let (flip, w) = UNIT[u][v];
            4 * usize::from(neg ^ flip) + w
        })
        .collect()
}

fn q8() -> InputDocument {
    let field = FieldTag::Cyclotomic(4);
    let g = PermGroup::generate(&[("i", quaternion_left_mult(1)), ("j", quaternion_left_mult(2))]);
    let one_dim = |name: &str, i: i64, j: i64| {
        generators_module(name, vec![("i", int_matrix(&[&[i]])), ("j", int_matrix(&[&[j]]))])
    };
    let z = Scalar::zeta(4);
    let zero = Scalar::zero(field);
    let mut doc = empty_document(field);
    doc.group = Some(g.section());
    doc.modules = vec![
        one_dim("triv", 1, 1),
        one_dim("chi_i", 1, -1),
        one_dim("chi_j", -1, 1),
        one_dim("chi_k", -1, -1),
        generators_module(
            "V2",
            vec![
                ("i", scalar_matrix(vec![vec![z.clone(), zero.clone()], vec![zero, -&z]])),
                ("j", int_matrix(&[&[0, 1], &[-1, 0]])),
            ],
        ),
    ];
    doc.complete_simples = true;
    doc
}

fn unit_vector(n: usize, i: usize) -> Vec<ScalarLit> {
    (0..n).map(|k| ScalarLit::Int(i64::from(k == i))).collect()
}

fn c3_general() -> InputDocument {
    let field = FieldTag::Cyclotomic(3);
    let n = 3;
    let mut doc = empty_document(field);
    let one = || ScalarLit::Int(1);
    doc.algebra = Some(AlgebraSection {
        basis: vec!["e".into(), "a".into(), "a^2".into()],
        mult: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n, ScalarLit::Int(1))))
            .collect(),
        unit: unit_vector(n, 0),
        antipode: (0..n).map(|j| unit_vector(n, (n - j) % n)).collect(),
        pivot: unit_vector(n, 0),
        comult: Some((0..n).map(|k| (k, k, k, one())).collect()),
        counit: Some(vec![one(); n]),
        grouplike: None,
    });
    doc.integral = Some(vec![ScalarLit::Text("1/3".into()); n]);
    doc.trace_form = Some(unit_vector(n, 0));
    doc.involutions = vec![InvolutionSection {
        name: "inv".into(),
        perm: None,
        images: Some((0..n).map(|j| unit_vector(n, (n - j) % n)).collect()),
    }];
    let z = Scalar::zeta(3);
    doc.modules = (0..n)
        .map(|k| {
            let action = (0..n)
                .map(|j| one_by_one(&z.pow((j * k) as i64).expect("zeta is invertible")))
                .collect();
            action_module(&format!("chi{k}"), action)
        })
        .collect();
    doc.complete_simples = true;
    doc
}

fn s3_grouplike() -> InputDocument {
    let g = s3_group();
    let n = g.order();
    let mut doc = empty_document(FieldTag::Rational);
    doc.algebra = Some(AlgebraSection {
        basis: g.labels.clone(),
        mult: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, g.table[i][j], ScalarLit::Int(1)))
            .collect(),
        unit: unit_vector(n, 0),
        antipode: (0..n).map(|j| unit_vector(n, g.inverse(j))).collect(),
        pivot: unit_vector(n, 0),
        comult: None,
        counit: None,
        grouplike: Some(GroupLikeSection {
            valency: vec![ScalarLit::Int(1); n],
            star: g.inversion_perm(),
        }),
    });
    doc.trace_form = Some(unit_vector(n, 0));
    doc.modules = s3_modules();
    doc.complete_simples = true;
    doc
}

fn scheme_doc(field: FieldTag, relations: Vec<Vec<usize>>) -> InputDocument {
    let mut doc = empty_document(field);
    doc.scheme = Some(SchemeSection { relations });
    doc
}

fn k3() -> InputDocument {
    let mut doc = scheme_doc(
        FieldTag::Rational,
        (0..3).map(|x| (0..3).map(|y| usize::from(x != y)).collect()).collect(),
    );
    doc.characters = vec![
        CharacterSection {
            name: "psi0".into(),
            dim: 1,
            values: vec![ScalarLit::Int(1), ScalarLit::Int(2)],
        },
        CharacterSection {
            name: "psi1".into(),
            dim: 1,
            values: vec![ScalarLit::Int(1), ScalarLit::Int(-1)],
        },
    ];
    doc
}

fn c4_scheme() -> InputDocument {
    let relations = (0..4)
        .map(|x: usize| (0..4).map(|y: usize| x.abs_diff(y).min(4 - x.abs_diff(y))).collect())
        .collect();
    let mut doc = scheme_doc(FieldTag::Rational, relations);
    // Eigenvalues of (A0, A1, A2) on the three common eigenspaces.
    doc.modules = [("psi0", [1, 2, 1]), ("psi1", [1, 0, -1]), ("psi2", [1, -2, 1])]
        .iter()
        .map(|(name, vals)| action_module(name, vals.iter().map(|&v| int_matrix(&[&[v]])).collect()))
        .collect();
    doc.complete_simples = true;
    doc
}

fn c3_scheme() -> InputDocument {
    let field = FieldTag::Cyclotomic(3);
    let relations = (0..3).map(|x| (0..3).map(|y| (y + 3 - x) % 3).collect()).collect();
    let mut doc = scheme_doc(field, relations);
    let z = Scalar::zeta(3);
    doc.modules = (0..3)
        .map(|k| {
            let action = (0..3)
                .map(|i| one_by_one(&z.pow((i * k) as i64).expect("zeta is invertible")))
                .collect();
            action_module(&format!("psi{k}"), action)
        })
        .collect();
    doc.involutions = vec![InvolutionSection {
        name: "star".into(),
        perm: Some(vec![0, 2, 1]),
        images: None,
    }];
    doc.complete_simples = true;
    doc
}

fn group_coalgebra(n: usize) -> InputDocument {
    let g = PermGroup::generate(&[("g", cycle(n))]);
    let mut doc = empty_document(FieldTag::Rational);
    doc.coalgebra = Some(CoalgebraSection {
        basis: g.labels.clone(),
        comult: (0..n).map(|k| (k, k, k, ScalarLit::Int(1))).collect(),
        counit: vec![ScalarLit::Int(1); n],
        antipode: (0..n).map(|j| unit_vector(n, g.inverse(j))).collect(),
        gamma: vec![ScalarLit::Int(1); n],
    });
    doc.trace_form = Some(vec![ScalarLit::Int(1); n]);
    doc.modules = (0..n)
        .map(|k| ModuleSection {
            name: format!("at_{}", g.labels[k]),
            action: None,
            generators: None,
            corep: Some(vec![vec![unit_vector(n, k)]]),
        })
        .collect();
    doc.complete_simples = true;
    doc
}
