//! Kac roots of a quiver: simple reflections, the fundamental set and a
//! height-descent classification of dimension vectors.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, IntegerMatrix, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootClass {
    NotRoot,
    RealRoot,
    ImaginaryRoot,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        self != Self::NotRoot
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::NotRoot => "not a root",
            Self::RealRoot => "real root",
            Self::ImaginaryRoot => "imaginary root",
        }
    }
}

/// A classification together with the reflections that produced it.
///
/// Replaying `reflections` (1-based vertices, applied left to right) from
/// the input reaches `terminal`: a loop-free unit vector for real roots, an
/// element of the fundamental set for imaginary roots, and for non-roots
/// either a vector with a negative entry or a positive vector with no
/// admissible reflection outside the fundamental set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClassification {
    pub class: RootClass,
    pub reflections: Vec<usize>,
    pub terminal: DimVector,
    pub in_fundamental_set: bool,
}

/// Limits on lattice-box traversals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxCaps {
    pub max_entry: i64,
    pub max_candidates: u64,
}

impl Default for BoxCaps {
    fn default() -> Self {
        Self { max_entry: 12, max_candidates: 1_000_000 }
    }
}

impl BoxCaps {
    pub fn check(&self, q: &Quiver, bound: &DimVector) -> Result<()> {
        q.check_dim(bound.as_slice())?;
        if bound.as_slice().iter().any(|&x| x < 0) {
            return Err(Error::Precondition(format!("box {bound} has a negative entry")));
        }
        if let Some(&x) = bound.as_slice().iter().find(|&&x| x > self.max_entry) {
            return Err(Error::BoundExceeded(format!("box entry {x} exceeds the cap {}", self.max_entry)));
        }
        let count = bound.as_slice().iter().try_fold(1u64, |acc, &x| acc.checked_mul(x as u64 + 1));
        match count {
            Some(c) if c <= self.max_candidates => Ok(()),
            _ => Err(Error::BoundExceeded(format!(
                "box {bound} has more than {} lattice points",
                self.max_candidates
            ))),
        }
    }
}

/// The quadratic-form data needed for reflections, computed once per quiver.
#[derive(Debug, Clone)]
pub struct RootSystem<'q> {
    quiver: &'q Quiver,
    tits: IntegerMatrix,
    loop_free: Vec<bool>,
}

impl<'q> RootSystem<'q> {
    pub fn new(quiver: &'q Quiver) -> Self {
        let loop_free = (0..quiver.vertex_count()).map(|i| quiver.loop_count(i) == 0).collect();
        Self { quiver, tits: quiver.tits_form(), loop_free }
    }

    pub fn quiver(&self) -> &Quiver {
        self.quiver
    }

    /// T_Q(α, ε_i).
    fn tits_unit(&self, alpha: &DimVector, i: usize) -> i64 {
        (0..alpha.len()).map(|j| alpha[j] * self.tits.get(j, i)).sum()
    }

    /// r_i(α) = α − T_Q(α, ε_i) ε_i at a loop-free vertex (0-based).
    pub fn reflect(&self, i: usize, alpha: &DimVector) -> Result<DimVector> {
        self.quiver.check_dim(alpha.as_slice())?;
        if i >= self.quiver.vertex_count() {
            return Err(Error::VertexOutOfRange(i + 1));
        }
        if !self.loop_free[i] {
            return Err(Error::LoopAtVertex(i + 1));
        }
        let mut out = alpha.clone();
        out.0[i] -= self.tits_unit(alpha, i);
        Ok(out)
    }

    pub fn in_fundamental_set(&self, alpha: &DimVector) -> bool {
        if alpha.len() != self.quiver.vertex_count() || alpha.is_zero() || !alpha.is_nonnegative() {
            return false;
        }
        (0..alpha.len()).all(|i| self.tits_unit(alpha, i) <= 0)
            && self.quiver.support_connected(alpha).unwrap_or(false)
    }

    pub fn classify(&self, alpha: &DimVector) -> Result<RootClassification> {
        self.quiver.check_dim(alpha.as_slice())?;
        if alpha.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !alpha.is_nonnegative() {
            return Err(Error::Precondition(format!("{alpha} has a negative entry")));
        }
        let mut current = alpha.clone();
        let mut reflections = Vec::new();
        loop {
            let done = |class, current: DimVector, reflections, in_f| {
                Ok(RootClassification { class, reflections, terminal: current, in_fundamental_set: in_f })
            };
            if let Some(i) = unit_index(&current) {
                if self.loop_free[i] {
                    return done(RootClass::RealRoot, current, reflections, false);
                }
            }
            if self.in_fundamental_set(&current) {
                return done(RootClass::ImaginaryRoot, current, reflections, true);
            }
            let Some(i) = (0..current.len()).find(|&i| self.loop_free[i] && self.tits_unit(&current, i) > 0) else {
                return done(RootClass::NotRoot, current, reflections, false);
            };
            current = self.reflect(i, &current)?;
            reflections.push(i + 1);
            if !current.is_nonnegative() {
                return done(RootClass::NotRoot, current, reflections, false);
            }
        }
    }
}

fn unit_index(alpha: &DimVector) -> Option<usize> {
    let mut nonzero = alpha.as_slice().iter().enumerate().filter(|(_, &x)| x != 0);
    match (nonzero.next(), nonzero.next()) {
        (Some((i, 1)), None) => Some(i),
        _ => None,
    }
}

/// r_i(α) for a 0-based loop-free vertex `i`.
pub fn reflect(q: &Quiver, i: usize, alpha: &DimVector) -> Result<DimVector> {
    RootSystem::new(q).reflect(i, alpha)
}

pub fn in_fundamental_set(q: &Quiver, alpha: &DimVector) -> bool {
    RootSystem::new(q).in_fundamental_set(alpha)
}

pub fn classify_root(q: &Quiver, alpha: &DimVector) -> Result<RootClassification> {
    RootSystem::new(q).classify(alpha)
}

/// Every positive root `0 < α ≤ bound`, in lexicographic order.
pub fn enumerate_positive_roots(
    q: &Quiver,
    bound: &DimVector,
    caps: BoxCaps,
) -> Result<Vec<(DimVector, RootClassification)>> {
    caps.check(q, bound)?;
    let system = RootSystem::new(q);
    let points = bound.box_points();
    let classified: Vec<Option<(DimVector, RootClassification)>> = points
        .into_par_iter()
        .filter(|alpha| !alpha.is_zero())
        .map(|alpha| {
            let c = system.classify(&alpha)?;
            Ok(c.class.is_root().then_some((alpha, c)))
        })
        .collect::<Result<_>>()?;
    Ok(classified.into_iter().flatten().collect())
}
