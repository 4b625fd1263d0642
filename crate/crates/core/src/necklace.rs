//! Necklace words: closed paths up to rotation, the basis of the
//! commutator quotient CQ/[CQ, CQ].

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::path::{parse_vertex_token, Path, PathSum};
use crate::quiver::{DoubleQuiver, Quiver};
use crate::scalar::{format_terms, LinComb, Scalar};

/// A necklace word in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NecklaceWord {
    /// The length-zero class of the idempotent e_v (0-based vertex).
    Vertex(usize),
    /// Arrow ids of a closed cycle, rotated to the least rotation in the
    /// lexicographic order of labels.
    Cycle(Vec<usize>),
}

pub type NecklaceSum = LinComb<NecklaceWord>;

/// Index of the least rotation of `seq` under `key`.
fn least_rotation(seq: &[usize], key: impl Fn(usize) -> usize) -> usize {
    let n = seq.len();
    let mut best = 0;
    for start in 1..n {
        let ord = (0..n).map(|i| key(seq[(start + i) % n])).cmp((0..n).map(|i| key(seq[(best + i) % n])));
        if ord == std::cmp::Ordering::Less {
            best = start;
        }
    }
    best
}

impl NecklaceWord {
    pub fn len(&self) -> usize {
        match self {
            Self::Vertex(_) => 0,
            Self::Cycle(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn arrows(&self) -> &[usize] {
        match self {
            Self::Vertex(_) => &[],
            Self::Cycle(c) => c,
        }
    }

    /// Parses `x x*`, `a b a*` or `e2`; validates closedness, then
    /// canonicalizes.
    pub fn parse(q: &Quiver, text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if let [single] = tokens.as_slice() {
            if parse_vertex_token(single).is_some() {
                return canonical_necklace(q, &Path::parse(q, single)?);
            }
        }
        canonical_necklace(q, &Path::parse(q, text)?)
    }

    /// Some closed path in the class.
    pub fn representative(&self, q: &Quiver) -> Path {
        match self {
            Self::Vertex(v) => Path::trivial(*v),
            Self::Cycle(c) => Path::from_parts_unchecked(c.clone(), q.source(c[0]), q.source(c[0])),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        match self {
            Self::Vertex(v) => format!("[e{}]", v + 1),
            Self::Cycle(c) => format!("[{}]", c.iter().map(|&a| q.label(a)).collect::<Vec<_>>().join(" ")),
        }
    }

    pub fn to_sum(&self) -> NecklaceSum {
        NecklaceSum::single(self.clone())
    }
}

/// The necklace class of a closed path.
pub fn canonical_necklace(q: &Quiver, cycle: &Path) -> Result<NecklaceWord> {
    if !cycle.is_closed() {
        return Err(Error::NotClosed { start: cycle.source() + 1, end: cycle.target() + 1 });
    }
    if cycle.is_trivial() {
        return Ok(NecklaceWord::Vertex(cycle.source()));
    }
    let arrows = cycle.arrows();
    let start = least_rotation(arrows, |a| q.label_rank(a));
    let mut rotated = arrows[start..].to_vec();
    rotated.extend_from_slice(&arrows[..start]);
    Ok(NecklaceWord::Cycle(rotated))
}

/// Closed paths go to their necklace, open paths to zero.
pub fn project_to_necklaces(q: &Quiver, x: &PathSum) -> NecklaceSum {
    let mut out = NecklaceSum::zero();
    for (p, c) in x {
        if let Ok(w) = canonical_necklace(q, p) {
            out.add_term(w, c.clone());
        }
    }
    out
}

/// ∂w/∂a: for every occurrence of `a` in `w`, the rest of the necklace read
/// from target(a) around to source(a).
pub fn partial_derivative(q: &Quiver, w: &NecklaceWord, arrow: usize) -> PathSum {
    let mut out = PathSum::zero();
    let NecklaceWord::Cycle(c) = w else {
        return out;
    };
    let n = c.len();
    for (j, &b) in c.iter().enumerate() {
        if b != arrow {
            continue;
        }
        let rest: Vec<usize> = (1..n).map(|i| c[(j + i) % n]).collect();
        let p = Path::from_parts_unchecked(rest, q.target(arrow), q.source(arrow));
        out.add_term(p, Scalar::one());
    }
    out
}

pub fn partial_derivative_sum(q: &Quiver, w: &NecklaceSum, arrow: usize) -> PathSum {
    w.map_linear(|word| partial_derivative(q, word, arrow))
}

/// m = Σ_a [a, a*] = Σ_a (a·a* − a*·a) in the path algebra of the double.
pub fn moment_element(d: &DoubleQuiver) -> PathSum {
    let q = d.quiver();
    let mut m = PathSum::zero();
    for a in 0..d.base_arrow_count() {
        let pa = Path::arrow(q, a);
        let ps = Path::arrow(q, d.star(a));
        let aas = pa.compose(&ps).expect("a·a* composes");
        let asa = ps.compose(&pa).expect("a*·a composes");
        m.add_term(aas, Scalar::one());
        m.add_term(asa, -Scalar::one());
    }
    m
}

/// Every necklace word of the given length, sorted.
pub fn necklaces_of_length(q: &Quiver, len: usize) -> Vec<NecklaceWord> {
    if len == 0 {
        return (0..q.vertex_count()).map(NecklaceWord::Vertex).collect();
    }
    let mut out = BTreeSet::new();
    for p in crate::path::paths_of_length(q, len) {
        if p.is_closed() {
            out.insert(canonical_necklace(q, &p).expect("closed"));
        }
    }
    out.into_iter().collect()
}

/// Renders a necklace sum like `4 [x x*] - [e1]`.
pub struct NecklaceSumDisplay<'a> {
    pub sum: &'a NecklaceSum,
    pub quiver: &'a Quiver,
}

impl fmt::Display for NecklaceSumDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.sum, |w| w.display(self.quiver)))
    }
}

pub fn display_necklaces<'a>(sum: &'a NecklaceSum, quiver: &'a Quiver) -> NecklaceSumDisplay<'a> {
    NecklaceSumDisplay { sum, quiver }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{multiply, paths_of_length};
    use crate::quiver::examples::{calogero, one_loop};
    use crate::scalar::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn canonical_forms() {
        let d = calogero().double();
        let q = d.quiver();
        let c = Path::parse(q, "a* a").unwrap();
        assert_eq!(canonical_necklace(q, &c).unwrap().display(q), "[a a*]");
        let c = Path::parse(q, "a b a*").unwrap();
        let w = canonical_necklace(q, &c).unwrap();
        assert_eq!(w.display(q), "[a b a*]");
        for rot in ["b a* a", "a* a b"] {
            assert_eq!(canonical_necklace(q, &Path::parse(q, rot).unwrap()).unwrap(), w);
        }
        assert_eq!(canonical_necklace(q, &Path::trivial(1)).unwrap(), NecklaceWord::Vertex(1));
        assert!(matches!(canonical_necklace(q, &Path::parse(q, "a").unwrap()), Err(Error::NotClosed { .. })));
        assert!(NecklaceWord::parse(q, "a b").is_err());
    }

    #[test]
    fn projection() {
        let d = calogero().double();
        let q = d.quiver();
        let a = Path::parse(q, "a").unwrap().to_sum();
        let a_star = Path::parse(q, "a*").unwrap().to_sum();
        assert!(project_to_necklaces(q, &a).is_zero());
        let comm = &multiply(&a, &a_star) - &multiply(&a_star, &a);
        assert!(!comm.is_zero());
        assert!(project_to_necklaces(q, &comm).is_zero());
        let bb = PathSum::term(Path::parse(q, "b b").unwrap(), int(3));
        assert_eq!(project_to_necklaces(q, &bb), NecklaceSum::term(NecklaceWord::parse(q, "b b").unwrap(), int(3)));
    }

    #[test]
    fn partials() {
        let dl = one_loop().double();
        let ql = dl.quiver();
        let x = ql.arrow_id("x").unwrap();
        let xx = NecklaceWord::parse(ql, "x x").unwrap();
        assert_eq!(partial_derivative(ql, &xx, x), PathSum::term(Path::parse(ql, "x").unwrap(), int(2)));

        let d = calogero().double();
        let q = d.quiver();
        let w = NecklaceWord::parse(q, "a a*").unwrap();
        assert_eq!(partial_derivative(q, &w, 0), Path::parse(q, "a*").unwrap().to_sum());
        assert!(partial_derivative(q, &w, q.arrow_id("b").unwrap()).is_zero());
        assert!(partial_derivative(q, &NecklaceWord::Vertex(0), 0).is_zero());
        // a single loop opens to the idempotent
        let b = q.arrow_id("b").unwrap();
        assert_eq!(partial_derivative(q, &NecklaceWord::parse(q, "b").unwrap(), b), Path::trivial(1).to_sum());
    }

    #[test]
    fn moment_elements() {
        let d = calogero().double();
        let q = d.quiver();
        let m = moment_element(&d);
        let expect: PathSum = [
            (Path::parse(q, "a* a").unwrap(), int(1)),
            (Path::parse(q, "a a*").unwrap(), int(-1)),
            (Path::parse(q, "b* b").unwrap(), int(1)),
            (Path::parse(q, "b b*").unwrap(), int(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(m, expect);
        let bare = Quiver::new::<&str>(2, &[]).unwrap().double();
        assert!(moment_element(&bare).is_zero());
        let dl = one_loop().double();
        assert_eq!(moment_element(&dl).len(), 2);
    }

    #[test]
    fn commutators_project_to_zero() {
        let d = calogero().double();
        let q = d.quiver();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pool: Vec<Path> = (0..4).flat_map(|l| paths_of_length(q, l)).collect();
        let random = |rng: &mut ChaCha8Rng| -> PathSum {
            (0..3).map(|_| (pool[rng.random_range(0..pool.len())].clone(), int(rng.random_range(-2..=2)))).collect()
        };
        for _ in 0..200 {
            let (x, y) = (random(&mut rng), random(&mut rng));
            let comm = &multiply(&x, &y) - &multiply(&y, &x);
            assert!(project_to_necklaces(q, &comm).is_zero());
        }
    }

    #[test]
    fn rotations_share_a_class() {
        let d = calogero().double();
        let q = d.quiver();
        for len in 1..=6 {
            for p in paths_of_length(q, len).into_iter().filter(Path::is_closed) {
                let w = canonical_necklace(q, &p).unwrap();
                let arrows = p.arrows();
                for j in 0..len {
                    let mut r = arrows[j..].to_vec();
                    r.extend_from_slice(&arrows[..j]);
                    let rp = Path::from_arrows(q, r).unwrap();
                    assert_eq!(canonical_necklace(q, &rp).unwrap(), w);
                }
                // idempotent
                assert_eq!(canonical_necklace(q, &w.representative(q)).unwrap(), w);
            }
        }
    }
}
