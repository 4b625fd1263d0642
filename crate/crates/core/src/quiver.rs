//! Quivers, their doubles, and the Euler and Tits forms.
//!
//! Vertices are numbered `1..=k` in every constructor and in all text I/O.
//! Internally (and in [`DimVector`] / [`Weight`] indexing) vertex `i` lives at
//! position `i - 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, Scalar};

pub const STAR: char = '*';

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    /// 0-based source vertex.
    pub source: usize,
    /// 0-based target vertex.
    pub target: usize,
}

/// A finite quiver. Arrow ids are positions in [`Quiver::arrows`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    // rank of each arrow in the lexicographic order of labels
    label_rank: Vec<usize>,
    by_label: HashMap<String, usize>,
}

fn check_label(label: &str, allow_star: bool) -> std::result::Result<(), String> {
    if label.is_empty() {
        return Err("empty arrow label".into());
    }
    if !allow_star && label.ends_with(STAR) {
        return Err(format!("label `{label}` uses the reserved star suffix `*`"));
    }
    let body = if allow_star { label.trim_end_matches(STAR) } else { label };
    if body.is_empty() || body.contains(STAR) {
        return Err(format!("label `{label}` uses the reserved star suffix `*`"));
    }
    if let Some(c) = label.chars().find(|c| c.is_whitespace() || matches!(c, ',' | '#' | '[' | ']' | ':')) {
        return Err(format!("label `{label}` contains forbidden character {c:?}"));
    }
    if let Some(rest) = label.strip_prefix('e') {
        if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(format!("label `{label}` collides with the trivial-path syntax e<i>"));
        }
    }
    Ok(())
}

impl Quiver {
    /// Builds a quiver from `(label, source, target)` triples with 1-based
    /// vertex indices.
    pub fn new<S: AsRef<str>>(vertex_count: usize, arrows: &[(S, usize, usize)]) -> Result<Self> {
        let arrows = arrows
            .iter()
            .map(|(l, s, t)| (l.as_ref().to_string(), *s, *t))
            .collect::<Vec<_>>();
        Self::build(vertex_count, arrows, false)
    }

    fn build(vertex_count: usize, raw: Vec<(String, usize, usize)>, allow_star: bool) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut arrows = Vec::with_capacity(raw.len());
        let mut by_label = HashMap::new();
        for (label, s, t) in raw {
            check_label(&label, allow_star).map_err(Error::InvalidQuiver)?;
            for v in [s, t] {
                if v == 0 || v > vertex_count {
                    return Err(Error::InvalidQuiver(format!(
                        "arrow `{label}` uses vertex {v}, expected 1..={vertex_count}"
                    )));
                }
            }
            if by_label.insert(label.clone(), arrows.len()).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label `{label}`")));
            }
            arrows.push(Arrow { label, source: s - 1, target: t - 1 });
        }
        let mut order: Vec<usize> = (0..arrows.len()).collect();
        order.sort_by(|&a, &b| arrows[a].label.cmp(&arrows[b].label));
        let mut label_rank = vec![0; arrows.len()];
        for (rank, id) in order.into_iter().enumerate() {
            label_rank[id] = rank;
        }
        Ok(Self { vertex_count, arrows, label_rank, by_label })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    pub fn label(&self, id: usize) -> &str {
        &self.arrows[id].label
    }

    pub fn source(&self, id: usize) -> usize {
        self.arrows[id].source
    }

    pub fn target(&self, id: usize) -> usize {
        self.arrows[id].target
    }

    pub fn arrow_id(&self, label: &str) -> Result<usize> {
        self.by_label.get(label).copied().ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    /// Position of the arrow in the lexicographic order of labels.
    pub fn label_rank(&self, id: usize) -> usize {
        self.label_rank[id]
    }

    pub fn loop_count(&self, vertex: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == vertex && a.target == vertex).count()
    }

    /// χ_Q: entry (i, j) is δ_ij minus the number of arrows i → j.
    pub fn euler_form(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::identity(self.vertex_count);
        for a in &self.arrows {
            *m.get_mut(a.source, a.target) -= 1;
        }
        m
    }

    /// T_Q = χ_Q + χ_Qᵀ.
    pub fn tits_form(&self) -> IntegerMatrix {
        let chi = self.euler_form();
        chi.add(&chi.transpose())
    }

    /// 1 − χ_Q(α, α).
    pub fn p(&self, alpha: &DimVector) -> Result<i64> {
        Ok(1 - self.euler_form().bilinear(alpha.as_slice(), alpha.as_slice())?)
    }

    pub fn check_dim(&self, alpha: &[i64]) -> Result<()> {
        if alpha.len() != self.vertex_count {
            return Err(Error::LengthMismatch { expected: self.vertex_count, actual: alpha.len() });
        }
        Ok(())
    }

    /// Whether the vertices with α_i > 0 span a connected subgraph of the
    /// underlying undirected graph.
    pub fn support_connected(&self, alpha: &DimVector) -> Result<bool> {
        self.check_dim(alpha.as_slice())?;
        let support: Vec<usize> = (0..self.vertex_count).filter(|&i| alpha[i] > 0).collect();
        let Some(&start) = support.first() else {
            return Err(Error::ZeroVector);
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                let next = if a.source == v {
                    a.target
                } else if a.target == v {
                    a.source
                } else {
                    continue;
                };
                if alpha[next] > 0 && seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        Ok(seen.len() == support.len())
    }

    /// The double quiver: every arrow `a` gets a reversed partner `a*`.
    pub fn double(&self) -> DoubleQuiver {
        let base_count = self.arrows.len();
        let mut raw: Vec<(String, usize, usize)> =
            self.arrows.iter().map(|a| (a.label.clone(), a.source + 1, a.target + 1)).collect();
        raw.extend(self.arrows.iter().map(|a| (format!("{}{STAR}", a.label), a.target + 1, a.source + 1)));
        let quiver = Self::build(self.vertex_count, raw, true).expect("double of a valid quiver is valid");
        let star = (0..2 * base_count).map(|i| if i < base_count { i + base_count } else { i - base_count }).collect();
        DoubleQuiver { base: self.clone(), quiver, star }
    }

    /// Renders the quiver in the text file format.
    pub fn to_text(&self) -> String {
        let arrows: Vec<String> =
            self.arrows.iter().map(|a| format!("{} {} {}", a.label, a.source + 1, a.target + 1)).collect();
        format!("vertices: {}\narrows: {}\n", self.vertex_count, arrows.join(", "))
    }
}

impl FromStr for Quiver {
    type Err = Error;

    /// Parses the line format
    ///
    /// ```text
    /// # Calogero quiver
    /// vertices: 2
    /// arrows: a 1 2, b 2 2
    /// ```
    ///
    /// Several `arrows:` lines are concatenated.
    fn from_str(text: &str) -> Result<Self> {
        let mut vertices: Option<(usize, usize)> = None;
        let mut raw: Vec<(String, usize, usize, usize)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: String| Error::Syntax { line: lineno, message };
            let (key, value) =
                content.split_once(':').ok_or_else(|| syntax(format!("expected `key: value`, got `{content}`")))?;
            match key.trim() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(syntax("duplicate `vertices` line".into()));
                    }
                    let k: usize =
                        value.trim().parse().map_err(|_| syntax(format!("bad vertex count `{}`", value.trim())))?;
                    if k == 0 {
                        return Err(syntax("vertex count must be positive".into()));
                    }
                    vertices = Some((k, lineno));
                }
                "arrows" => {
                    for item in value.split(',') {
                        let fields: Vec<&str> = item.split_whitespace().collect();
                        match fields.as_slice() {
                            [] => {}
                            [label, s, t] => {
                                let parse_v = |v: &str| {
                                    v.parse::<usize>().map_err(|_| syntax(format!("bad vertex index `{v}`")))
                                };
                                raw.push((label.to_string(), parse_v(s)?, parse_v(t)?, lineno));
                            }
                            _ => {
                                return Err(syntax(format!(
                                    "expected `label source target`, got `{}`",
                                    item.trim()
                                )))
                            }
                        }
                    }
                }
                other => return Err(syntax(format!("unknown key `{other}`"))),
            }
        }
        let (k, _) = vertices.ok_or(Error::Syntax { line: 0, message: "missing `vertices:` line".into() })?;
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for (label, s, t, lineno) in &raw {
            let syntax = |message: String| Error::Syntax { line: *lineno, message };
            check_label(label, false).map_err(syntax)?;
            for v in [*s, *t] {
                if v == 0 || v > k {
                    return Err(syntax(format!("vertex {v} out of range 1..={k} in arrow `{label}`")));
                }
            }
            if let Some(first) = seen.insert(label.as_str(), *lineno) {
                return Err(syntax(format!("duplicate arrow label `{label}` (first defined on line {first})")));
            }
        }
        let triples: Vec<(String, usize, usize)> = raw.into_iter().map(|(l, s, t, _)| (l, s, t)).collect();
        Self::build(k, triples, false)
    }
}

/// A quiver together with its double and the star involution on arrow ids.
///
/// Arrow ids `0..l` of the double are the base arrows (same ids as in the
/// base quiver), ids `l..2l` their starred partners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleQuiver {
    base: Quiver,
    quiver: Quiver,
    star: Vec<usize>,
}

impl DoubleQuiver {
    pub fn base(&self) -> &Quiver {
        &self.base
    }

    /// The double as a plain quiver.
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn star(&self, id: usize) -> usize {
        self.star[id]
    }

    pub fn base_arrow_count(&self) -> usize {
        self.base.arrow_count()
    }

    pub fn is_base_arrow(&self, id: usize) -> bool {
        id < self.base.arrow_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }
}

/// A square integer matrix; holds χ_Q and T_Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntegerMatrix {
    pub fn identity(n: usize) -> Self {
        Self { rows: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect() }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { rows }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        &mut self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self { rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Σ_ij M_ij α_i β_j.
    pub fn bilinear(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        let n = self.size();
        for v in [alpha, beta] {
            if v.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: v.len() });
            }
        }
        let mut total = 0;
        for (i, row) in self.rows.iter().enumerate() {
            if alpha[i] == 0 {
                continue;
            }
            let inner: i64 = row.iter().zip(beta).map(|(m, b)| m * b).sum();
            total += alpha[i] * inner;
        }
        Ok(total)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// An integer vector indexed by vertices. Dimension vectors are the
/// nonnegative ones; reflections may produce negative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn unit(k: usize, i: usize) -> Self {
        let mut v = vec![0; k];
        v[i] = 1;
        Self(v)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// α·α = Σ n_i².
    pub fn dot_self(&self) -> i64 {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise β ≤ α.
    pub fn is_below(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// β < α: componentwise ≤ and different.
    pub fn is_strictly_below(&self, other: &Self) -> bool {
        self.is_below(other) && self != other
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    /// Every vector `0 ≤ β ≤ self` in lexicographic order.
    pub fn box_points(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=bound.max(0)).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(DimVector).collect()
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DimVector {
    type Err = Error;
    /// Comma-separated integers, e.g. `1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidNumber(x.trim().to_string())))
            .collect::<Result<Vec<_>>>()
            .map(DimVector)
    }
}

/// λ = (λ_1, …, λ_k) with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Scalar>);

impl Weight {
    pub fn zero(k: usize) -> Self {
        Self(vec![Scalar::zero(); k])
    }

    pub fn from_integers(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| crate::scalar::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// λ·β = Σ λ_i b_i.
    pub fn dot(&self, beta: &DimVector) -> Result<Scalar> {
        if beta.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), actual: beta.len() });
        }
        Ok(self.0.iter().zip(beta.as_slice()).map(|(l, &b)| l * crate::scalar::int(b)).sum())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl FromStr for Weight {
    type Err = Error;
    /// Comma-separated rationals, e.g. `-2,1` or `-1/2,1/4`.
    fn from_str(s: &str) -> Result<Self> {
        s.trim().split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(de)?;
        parts
            .iter()
            .map(|p| parse_rational(p))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// Quivers that show up throughout the tests and docs.
pub mod examples {
    use super::Quiver;

    /// Two vertices, `a: 1 → 2` and a loop `b` at 2.
    pub fn calogero() -> Quiver {
        Quiver::new(2, &[("a", 1, 2), ("b", 2, 2)]).unwrap()
    }

    /// Extended Dynkin Ã_1: `a: 1 → 2`, `b: 2 → 1`.
    pub fn a1_tilde() -> Quiver {
        Quiver::new(2, &[("a", 1, 2), ("b", 2, 1)]).unwrap()
    }

    /// One vertex with a single loop `x`.
    pub fn one_loop() -> Quiver {
        Quiver::new(1, &[("x", 1, 1)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn calogero_forms() {
        let q = calogero();
        assert_eq!(q.euler_form(), m(&[&[1, -1], &[0, 0]]));
        assert_eq!(q.tits_form(), m(&[&[2, -1], &[-1, 0]]));
    }

    #[test]
    fn small_forms() {
        let bare = Quiver::new::<&str>(1, &[]).unwrap();
        assert_eq!(bare.euler_form(), m(&[&[1]]));
        assert_eq!(one_loop().euler_form(), m(&[&[0]]));
        assert_eq!(one_loop().tits_form(), m(&[&[0]]));
        assert_eq!(a1_tilde().tits_form(), m(&[&[2, -2], &[-2, 2]]));
    }

    #[test]
    fn bilinear_values() {
        let q = calogero();
        let a = [1, 2];
        assert_eq!(q.euler_form().bilinear(&a, &a).unwrap(), -1);
        assert_eq!(q.p(&DimVector::new(a.to_vec())).unwrap(), 2);
        assert_eq!(q.tits_form().bilinear(&a, &a).unwrap(), -2);
        assert_eq!(q.tits_form().bilinear(&[0, 0], &a).unwrap(), 0);
        assert!(matches!(q.euler_form().bilinear(&[1], &a), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn support() {
        let q = calogero();
        assert!(q.support_connected(&DimVector::new(vec![1, 2])).unwrap());
        assert!(q.support_connected(&DimVector::new(vec![0, 3])).unwrap());
        let disjoint = Quiver::new::<&str>(2, &[]).unwrap();
        assert!(!disjoint.support_connected(&DimVector::new(vec![1, 1])).unwrap());
        assert_eq!(q.support_connected(&DimVector::zero(2)), Err(Error::ZeroVector));
    }

    #[test]
    fn double_structure() {
        let q = calogero();
        let d = q.double();
        assert_eq!(d.quiver().arrow_count(), 4);
        let a_star = d.quiver().arrow_id("a*").unwrap();
        assert_eq!(d.star(0), a_star);
        assert_eq!(d.quiver().source(a_star), 1);
        assert_eq!(d.quiver().target(a_star), 0);
        assert_eq!(d.quiver().euler_form(), q.tits_form().sub(&IntegerMatrix::identity(2)));
        // base label sorts before its star
        assert!(d.quiver().label_rank(0) < d.quiver().label_rank(a_star));
    }

    #[test]
    fn parse_text_format() {
        let q: Quiver = "# Calogero\nvertices: 2\narrows: a 1 2, b 2 2\n".parse().unwrap();
        assert_eq!(q, calogero());
        let bare: Quiver = "vertices: 1\narrows:".parse().unwrap();
        assert_eq!(bare.arrow_count(), 0);
        let round: Quiver = calogero().to_text().parse().unwrap();
        assert_eq!(round, calogero());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = "vertices: 2\narrows: a* 1 2".parse::<Quiver>().unwrap_err();
        assert!(matches!(&err, Error::Syntax { line: 2, message } if message.contains("reserved star suffix")));
        let err = "vertices: 2\narrows: a 1 2\narrows: a 2 2".parse::<Quiver>().unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        let err = "vertices: 2\n\narrows: a 1 3".parse::<Quiver>().unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        assert!("arrows: a 1 1".parse::<Quiver>().is_err());
        assert!("vertices: 1\narrows: e1 1 1".parse::<Quiver>().is_err());
    }

    fn arb_quiver() -> impl Strategy<Value = Quiver> {
        (1usize..=5).prop_flat_map(|k| {
            prop::collection::vec((1..=k, 1..=k), 0..=10).prop_map(move |pairs| {
                let arrows: Vec<(String, usize, usize)> =
                    pairs.iter().enumerate().map(|(i, &(s, t))| (format!("a{i}"), s, t)).collect();
                Quiver::new(k, &arrows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn tits_is_symmetric(q in arb_quiver()) {
            prop_assert!(q.tits_form().is_symmetric());
            let d = q.double();
            prop_assert_eq!(d.quiver().euler_form(), q.tits_form().sub(&IntegerMatrix::identity(q.vertex_count())));
            for id in 0..d.quiver().arrow_count() {
                prop_assert_eq!(d.star(d.star(id)), id);
                prop_assert_ne!(d.star(id), id);
                prop_assert_eq!(d.quiver().source(d.star(id)), d.quiver().target(id));
            }
        }

        #[test]
        fn tits_doubles_euler_on_diagonal(q in arb_quiver(), seed in prop::collection::vec(0i64..5, 5)) {
            let a = &seed[..q.vertex_count()];
            prop_assert_eq!(q.tits_form().bilinear(a, a).unwrap(), 2 * q.euler_form().bilinear(a, a).unwrap());
        }
    }
}
