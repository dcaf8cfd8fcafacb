use crate::error::{Error, Result};
use crate::formulas::GroupLikeData;
use crate::linalg::Matrix;
use crate::pivotal::{ModuleRep, PivotalAlgebra};
use crate::scalars::{FieldTag, Scalar};

/// An association scheme on `size` points given by its relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeRelations {
    rank: usize,
    relations: Vec<Vec<usize>>,
}

fn not_scheme(msg: impl Into<String>) -> Error {
    Error::NotAScheme(msg.into())
}

impl SchemeRelations {
    /// Checks the shape only; the scheme axioms are checked by [`scheme_to_grouplike`].
    pub fn new(relations: Vec<Vec<usize>>) -> Result<SchemeRelations> {
        let n = relations.len();
        if n == 0 {
            return Err(not_scheme("no points"));
        }
        if relations.iter().any(|r| r.len() != n) {
            return Err(not_scheme(format!("relation matrix must be {n}x{n}")));
        }
        let rank = relations.iter().flatten().max().map_or(0, |m| m + 1);
        Ok(SchemeRelations { rank, relations })
    }

    /// Parses `"n r"` followed by `n` lines of `n` relation indices.
    pub fn parse(text: &str) -> Result<SchemeRelations> {
        let doc = |line: usize, msg: String| Error::Document(format!("line {line}: {msg}"));
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hl, header) = lines.next().ok_or_else(|| doc(1, "empty scheme file".into()))?;
        let nums = |ln: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| doc(ln + 1, format!("invalid integer {t:?}"))))
                .collect()
        };
        let head = nums(hl, header)?;
        let [n, r] = head[..] else {
            return Err(doc(hl + 1, format!("expected \"n r\", found {} tokens", head.len())));
        };
        let mut relations = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| doc(hl + 2 + relations.len(), format!("expected {n} rows")))?;
            let row = nums(ln, line)?;
            if row.len() != n {
                return Err(doc(ln + 1, format!("expected {n} entries, found {}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&x| x >= r) {
                return Err(doc(ln + 1, format!("relation index {bad} out of range 0..{r}")));
            }
            relations.push(row);
        }
        if let Some((ln, _)) = lines.next() {
            return Err(doc(ln + 1, "trailing content after relation matrix".into()));
        }
        let rels = SchemeRelations::new(relations)?;
        if rels.rank != r {
            return Err(doc(hl + 1, format!("header declares {r} relations, matrix uses {}", rels.rank)));
        }
        Ok(rels)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.size(), self.rank);
        for row in &self.relations {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn size(&self) -> usize {
        self.relations.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }
}

/// The adjacency algebra of a scheme as a group-like algebra.
#[derive(Debug, Clone)]
pub struct SchemeAlgebra {
    pub algebra: PivotalAlgebra,
    pub grouplike: GroupLikeData,
    /// `A_i` acting on the base set.
    pub standard: ModuleRep,
}

/// Adjacency matrices, intersection numbers, valencies and `*`, with the scheme
/// axioms and Doi's axioms checked along the way.
pub fn scheme_to_grouplike(rels: &SchemeRelations, field: FieldTag) -> Result<SchemeAlgebra> {
    let n = rels.size();
    let r = rels.rank;
    let rel = &rels.relations;
    for x in 0..n {
        for y in 0..n {
            if (rel[x][y] == 0) != (x == y) {
                return Err(not_scheme(format!(
                    "relation 0 must be exactly the diagonal; entry ({x}, {y}) is {}",
                    rel[x][y]
                )));
            }
        }
    }
    let mut counts = vec![0usize; r];
    for &k in rel.iter().flatten() {
        counts[k] += 1;
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(not_scheme(format!("relation {i} is empty")));
    }
    let mut star = vec![usize::MAX; r];
    for x in 0..n {
        for y in 0..n {
            let (i, j) = (rel[x][y], rel[y][x]);
            if star[i] == usize::MAX {
                star[i] = j;
            } else if star[i] != j {
                return Err(not_scheme(format!("relation {i} has no transpose partner")));
            }
        }
    }
    // p_{ij}^k = #{z : (x, z) ∈ R_i, (z, y) ∈ R_j} for any (x, y) ∈ R_k, and must not depend on (x, y).
    let mut p: Vec<Option<usize>> = vec![None; r * r * r];
    for x in 0..n {
        for y in 0..n {
            let k = rel[x][y];
            let mut row = vec![0usize; r * r];
            for z in 0..n {
                row[rel[x][z] * r + rel[z][y]] += 1;
            }
            for i in 0..r {
                for j in 0..r {
                    let slot = &mut p[(i * r + j) * r + k];
                    let v = row[i * r + j];
                    match *slot {
                        None => *slot = Some(v),
                        Some(prev) if prev != v => {
                            return Err(not_scheme(format!(
                                "p_{{{i},{j}}}^{k} is not constant: {prev} vs {v} at ({x}, {y})"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    let valency: Vec<usize> = (0..r).map(|i| rel[0].iter().filter(|&&k| k == i).count()).collect();
    for x in 1..n {
        for (i, &v) in valency.iter().enumerate() {
            if rel[x].iter().filter(|&&k| k == i).count() != v {
                return Err(not_scheme(format!("relation {i} has non-constant valency")));
            }
        }
    }

    let to_scalar = |v: usize| Scalar::from_int(field, v as i64);
    let mult = (0..r)
        .flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
        .filter_map(|(i, j, k)| {
            let v = p[(i * r + j) * r + k].unwrap_or(0);
            (v != 0).then(|| (i, j, k, to_scalar(v)))
        })
        .collect();
    let labels = (0..r).map(|i| format!("A{i}")).collect();
    let mut unit = vec![Scalar::zero(field); r];
    unit[0] = Scalar::one(field);
    let algebra = PivotalAlgebra::new(field, labels, mult, unit.clone(), Matrix::permutation(&star, field), unit.clone())?
        .with_trace_form(unit)?;
    let grouplike = GroupLikeData::from_algebra(&algebra, valency.iter().map(|&v| to_scalar(v)).collect(), star)?;
    grouplike.validate()?;
    let action = (0..r)
        .map(|i| {
            Matrix::from_fn(n, n, field, |x, y| {
                if rel[x][y] == i {
                    Scalar::one(field)
                } else {
                    Scalar::zero(field)
                }
            })
        })
        .collect();
    let standard = ModuleRep::new("standard", field, action)?;
    Ok(SchemeAlgebra {
        algebra,
        grouplike,
        standard,
    })
}

/// The involution `b_i ↦ b_{τ(i)}` after checking `τ(i*) = τ(i)*` and
/// `p_{τi,τj}^{τk} = p_{ij}^k`.
pub fn scheme_involution(gl: &GroupLikeData, perm: &[usize]) -> Result<Matrix> {
    gl.validate_involution(perm)?;
    Ok(Matrix::permutation(perm, gl.field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> SchemeRelations {
        SchemeRelations::new((0..n).map(|x| (0..n).map(|y| usize::from(x != y)).collect()).collect()).unwrap()
    }

    #[test]
    fn complete_graph_scheme() {
        let s = scheme_to_grouplike(&complete(3), FieldTag::Rational).unwrap();
        assert_eq!(s.algebra.dim(), 2);
        assert_eq!(s.grouplike.valency, vec![Scalar::from_int(FieldTag::Rational, 1), Scalar::from_int(FieldTag::Rational, 2)]);
    }

    #[test]
    fn group_scheme_of_c3() {
        let rel = (0..3).map(|x| (0..3).map(|y| (y + 3 - x) % 3).collect()).collect();
        let s = scheme_to_grouplike(&SchemeRelations::new(rel).unwrap(), FieldTag::Rational).unwrap();
        assert_eq!(s.grouplike.star, vec![0, 2, 1]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(s.algebra.product(i, j), &[((i + j) % 3, Scalar::one(FieldTag::Rational))][..]);
            }
        }
        assert!(scheme_involution(&s.grouplike, &[0, 2, 1]).is_ok());
        assert!(scheme_involution(&s.grouplike, &[1, 0, 2]).is_err());
    }

    #[test]
    fn bad_diagonal_rejected() {
        let rels = SchemeRelations::new(vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert!(matches!(scheme_to_grouplike(&rels, FieldTag::Rational), Err(Error::NotAScheme(_))));
    }

    #[test]
    fn text_format_is_strict() {
        let rels = SchemeRelations::parse("3 2\n0 1 1\n1 0 1\n1 1 0\n").unwrap();
        assert_eq!(rels, complete(3));
        assert_eq!(SchemeRelations::parse(&rels.to_text()).unwrap(), rels);
        assert!(SchemeRelations::parse("3 2\n0 1 1 1\n1 0 1\n1 1 0\n").is_err());
        assert!(SchemeRelations::parse("3 2\n0 1 1\n1 0 1\n1 1 0\n0\n").is_err());
        assert!(SchemeRelations::parse("3 2 1\n").is_err());
    }
}
