//! The Σ_λ / S_λ stratification: decompositions into roots on the
//! hyperplane λ·β = 0, membership with witnesses, the coadjoint-orbit
//! verdict, representation types, local quivers and slice dimension counts.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver, Weight};
use crate::roots::{BoxCaps, RootClass, RootClassification, RootSystem};

pub const SCHEMA: &str = "necklace-kit/1";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    pub beta: DimVector,
    pub multiplicity: usize,
}

/// α = Σ multiplicity·β with every β in Δ⁺_λ and at least two parts in
/// total. Parts are listed with β in decreasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    fn from_betas(mut betas: Vec<DimVector>) -> Self {
        betas.sort_by(|a, b| b.cmp(a));
        let mut parts: Vec<Part> = Vec::new();
        for b in betas {
            match parts.last_mut() {
                Some(last) if last.beta == b => last.multiplicity += 1,
                _ => parts.push(Part { beta: b, multiplicity: 1 }),
            }
        }
        Self { parts }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|p| p.multiplicity).sum()
    }

    pub fn total(&self, k: usize) -> DimVector {
        self.parts.iter().fold(DimVector::zero(k), |acc, p| acc.add(&p.beta.scale(p.multiplicity as i64)))
    }

    /// Σ p(β_i) counted with multiplicity.
    pub fn p_sum(&self, q: &Quiver) -> Result<i64> {
        self.parts.iter().map(|p| Ok(q.p(&p.beta)? * p.multiplicity as i64)).sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| if p.multiplicity == 1 { p.beta.to_string() } else { format!("{}x{}", p.beta, p.multiplicity) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Verdict on α ∈ S_λ and α ∈ Σ_λ.
///
/// `best_decomposition` maximizes Σ p(β_i) over all decompositions with at
/// least two parts; it is the violating witness whenever a verdict is
/// negative for a vector of Δ⁺_λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaVerdict {
    pub alpha: DimVector,
    pub root_class: RootClass,
    pub on_hyperplane: bool,
    pub p_alpha: i64,
    pub in_s: bool,
    pub in_sigma: bool,
    pub best_decomposition: Option<Decomposition>,
    pub best_sum: Option<i64>,
    pub reason: String,
}

/// Membership data for every vector of a box, computed once.
///
/// For each γ in the box, `best1[γ]` is the largest Σ p(β_i) over
/// decompositions of γ into one or more elements of Δ⁺_λ and `best2[γ]` the
/// same over decompositions into at least two; both record the part that
/// was split off first so witnesses can be rebuilt.
pub struct SigmaTable<'q> {
    system: RootSystem<'q>,
    lambda: Weight,
    bound: DimVector,
    points: Vec<DimVector>,
    index: HashMap<DimVector, usize>,
    class: Vec<Option<RootClassification>>,
    on_hyperplane: Vec<bool>,
    p: Vec<i64>,
    roots: Vec<usize>,
    best1: Vec<Option<(i64, usize)>>,
    best2: Vec<Option<(i64, usize)>>,
}

fn check_weight(q: &Quiver, lambda: &Weight) -> Result<()> {
    if lambda.len() != q.vertex_count() {
        return Err(Error::LengthMismatch { expected: q.vertex_count(), actual: lambda.len() });
    }
    Ok(())
}

fn check_alpha(q: &Quiver, alpha: &DimVector) -> Result<()> {
    q.check_dim(alpha.as_slice())?;
    if !alpha.is_nonnegative() {
        return Err(Error::Precondition(format!("{alpha} has a negative entry")));
    }
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

impl<'q> SigmaTable<'q> {
    pub fn new(q: &'q Quiver, lambda: &Weight, bound: &DimVector, caps: BoxCaps) -> Result<Self> {
        check_weight(q, lambda)?;
        caps.check(q, bound)?;
        let system = RootSystem::new(q);
        let points = bound.box_points();
        let n = points.len();
        let index: HashMap<DimVector, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let chi = q.euler_form();
        let mut class = Vec::with_capacity(n);
        let mut on_hyperplane = Vec::with_capacity(n);
        let mut p = Vec::with_capacity(n);
        let mut roots = Vec::new();
        for (i, gamma) in points.iter().enumerate() {
            let c = if gamma.is_zero() { None } else { Some(system.classify(gamma)?) };
            let on = lambda.dot(gamma)?.is_zero();
            if on && c.as_ref().is_some_and(|c| c.class.is_root()) {
                roots.push(i);
            }
            class.push(c);
            on_hyperplane.push(on);
            p.push(1 - chi.bilinear(gamma.as_slice(), gamma.as_slice())?);
        }
        let mut table = Self {
            system,
            lambda: lambda.clone(),
            bound: bound.clone(),
            points,
            index,
            class,
            on_hyperplane,
            p,
            roots,
            best1: vec![None; n],
            best2: vec![None; n],
        };
        table.fill();
        Ok(table)
    }

    fn in_delta(&self, i: usize) -> bool {
        self.on_hyperplane[i] && self.class[i].as_ref().is_some_and(|c| c.class.is_root())
    }

    fn fill(&mut self) {
        for g in 0..self.points.len() {
            let gamma = &self.points[g];
            let mut best2: Option<(i64, usize)> = None;
            for &b in &self.roots {
                let beta = &self.points[b];
                if b == g || !beta.is_strictly_below(gamma) {
                    continue;
                }
                let rest = self.index[&gamma.sub(beta)];
                if let Some((s, _)) = self.best1[rest] {
                    let cand = self.p[b] + s;
                    if best2.is_none_or(|(v, _)| cand > v) {
                        best2 = Some((cand, b));
                    }
                }
            }
            let mut best1 = best2;
            if self.in_delta(g) && best1.is_none_or(|(v, _)| self.p[g] >= v) {
                best1 = Some((self.p[g], g));
            }
            self.best1[g] = best1;
            self.best2[g] = best2;
        }
    }

    fn rebuild(&self, g: usize, first: usize) -> Decomposition {
        let mut betas = vec![self.points[first].clone()];
        let mut rest = self.index[&self.points[g].sub(&self.points[first])];
        loop {
            let (_, part) = self.best1[rest].expect("remainder is decomposable");
            betas.push(self.points[part].clone());
            if part == rest {
                break;
            }
            rest = self.index[&self.points[rest].sub(&self.points[part])];
        }
        Decomposition::from_betas(betas)
    }

    pub fn quiver(&self) -> &Quiver {
        self.system.quiver()
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn bound(&self) -> &DimVector {
        &self.bound
    }

    fn locate(&self, alpha: &DimVector) -> Result<usize> {
        check_alpha(self.quiver(), alpha)?;
        self.index
            .get(alpha)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{alpha} lies outside the box {}", self.bound)))
    }

    /// Elements of Δ⁺_λ in the box, lexicographic.
    pub fn delta_lambda(&self) -> Vec<DimVector> {
        self.roots.iter().map(|&i| self.points[i].clone()).collect()
    }

    pub fn classification(&self, alpha: &DimVector) -> Result<&RootClassification> {
        let i = self.locate(alpha)?;
        Ok(self.class[i].as_ref().expect("nonzero"))
    }

    pub fn membership(&self, alpha: &DimVector) -> Result<SigmaVerdict> {
        let g = self.locate(alpha)?;
        let root_class = self.class[g].as_ref().expect("nonzero").class;
        let on_hyperplane = self.on_hyperplane[g];
        let p_alpha = self.p[g];
        let best = self.best2[g];
        let best_decomposition = best.map(|(_, first)| self.rebuild(g, first));
        let best_sum = best.map(|(s, _)| s);
        let (in_s, in_sigma, reason) = if !root_class.is_root() {
            (false, false, "not a root".to_string())
        } else if !on_hyperplane {
            (false, false, format!("λ·α = {} ≠ 0", crate::scalar::format_rational(&self.lambda.dot(alpha)?)))
        } else {
            match best_sum {
                None => (true, true, "no decomposition into smaller elements of Δ⁺_λ".to_string()),
                Some(s) if p_alpha > s => (true, true, format!("p(α) = {p_alpha} > {s} for every decomposition")),
                Some(s) if p_alpha == s => {
                    (true, false, format!("p(α) = {p_alpha} equals Σ p(β_i) for the witness decomposition"))
                }
                Some(s) => (false, false, format!("p(α) = {p_alpha} < Σ p(β_i) = {s} for the witness decomposition")),
            }
        };
        Ok(SigmaVerdict {
            alpha: alpha.clone(),
            root_class,
            on_hyperplane,
            p_alpha,
            in_s,
            in_sigma,
            best_decomposition,
            best_sum,
            reason,
        })
    }

    pub fn in_sigma(&self, alpha: &DimVector) -> Result<bool> {
        Ok(self.membership(alpha)?.in_sigma)
    }

    /// Elements of Σ_λ in the box, lexicographic.
    pub fn sigma_elements(&self) -> Vec<DimVector> {
        self.roots.iter().map(|&i| &self.points[i]).filter(|a| self.in_sigma(a).unwrap_or(false)).cloned().collect()
    }

    pub fn minimality(&self, alpha: &DimVector) -> Result<MinimalityVerdict> {
        if !self.in_sigma(alpha)? {
            return Err(Error::Precondition(format!("{alpha} is not in Σ_λ")));
        }
        let smaller = self
            .roots
            .iter()
            .map(|&i| &self.points[i])
            .find(|beta| beta.is_strictly_below(alpha) && self.in_sigma(beta).unwrap_or(false))
            .cloned();
        Ok(MinimalityVerdict { minimal: smaller.is_none(), smaller })
    }

    pub fn coadjoint(&self, alpha: &DimVector) -> Result<CoadjointVerdict> {
        let m = self.membership(alpha)?;
        let q = self.quiver();
        let chi = q.euler_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
        let tits = q.tits_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
        let dim_fiber = m.in_s.then(|| 1 + alpha.dot_self() - 2 * chi);
        let dim_quotient = m.in_sigma.then_some(2 - tits);
        if !m.in_sigma {
            let reason = if m.root_class.is_root() { format!("not in Σ_λ: {}", m.reason) } else { m.reason.clone() };
            return Ok(CoadjointVerdict { coadjoint: false, reason, smaller: None, dim_fiber, dim_quotient });
        }
        let min = self.minimality(alpha)?;
        let reason = match &min.smaller {
            None => "minimal non-zero element of Σ_λ".to_string(),
            Some(b) => format!("not minimal: {b} < α lies in Σ_λ"),
        };
        Ok(CoadjointVerdict { coadjoint: min.minimal, reason, smaller: min.smaller, dim_fiber, dim_quotient })
    }

    /// Multisets of Σ_λ elements summing to α, with distinct β's.
    pub fn rep_types(&self, alpha: &DimVector, caps: BoxCaps) -> Result<Vec<RepType>> {
        self.locate(alpha)?;
        let sigma: Vec<DimVector> = self.sigma_elements().into_iter().filter(|b| b.is_below(alpha)).collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        rep_type_search(&sigma, 0, alpha, &mut current, &mut out, caps.max_candidates)?;
        for t in &mut out {
            t.parts.sort_by(|a, b| b.beta.cmp(&a.beta));
        }
        out.sort_by(|a, b| (a.simple_count(), &a.parts).cmp(&(b.simple_count(), &b.parts)));
        Ok(out)
    }
}

fn rep_type_search(
    sigma: &[DimVector],
    start: usize,
    remaining: &DimVector,
    current: &mut Vec<RepTypePart>,
    out: &mut Vec<RepType>,
    cap: u64,
) -> Result<()> {
    if remaining.is_zero() {
        if out.len() as u64 >= cap {
            return Err(Error::BoundExceeded(format!("more than {cap} representation types")));
        }
        out.push(RepType { parts: current.clone() });
        return Ok(());
    }
    for i in start..sigma.len() {
        let beta = &sigma[i];
        let mut e = 1;
        while beta.scale(e).is_below(remaining) {
            current.push(RepTypePart { multiplicity: e as usize, beta: beta.clone() });
            rep_type_search(sigma, i + 1, &remaining.sub(&beta.scale(e)), current, out, cap)?;
            current.pop();
            e += 1;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub smaller: Option<DimVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoadjointVerdict {
    pub coadjoint: bool,
    pub reason: String,
    pub smaller: Option<DimVector>,
    /// 1 + α·α − 2χ(α,α), reported for α ∈ S_λ.
    pub dim_fiber: Option<i64>,
    /// 2 − T(α,α), reported for α ∈ Σ_λ.
    pub dim_quotient: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepTypePart {
    pub multiplicity: usize,
    pub beta: DimVector,
}

/// τ = (e_1, β_1; …; e_z, β_z).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepType {
    pub parts: Vec<RepTypePart>,
}

impl RepType {
    pub fn new(parts: Vec<(usize, DimVector)>) -> Self {
        Self { parts: parts.into_iter().map(|(multiplicity, beta)| RepTypePart { multiplicity, beta }).collect() }
    }

    pub fn simple_count(&self) -> usize {
        self.parts.iter().map(|p| p.multiplicity).sum()
    }

    pub fn total(&self, k: usize) -> DimVector {
        self.parts.iter().fold(DimVector::zero(k), |acc, p| acc.add(&p.beta.scale(p.multiplicity as i64)))
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.parts.iter().map(|p| (p.multiplicity * p.multiplicity) as i64).sum()
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| format!("{},{}", p.multiplicity, p.beta)).collect();
        write!(f, "({})", parts.join("; "))
    }
}

/// Δ⁺_λ ∩ box.
pub fn delta_lambda(q: &Quiver, lambda: &Weight, bound: &DimVector, caps: BoxCaps) -> Result<Vec<DimVector>> {
    Ok(SigmaTable::new(q, lambda, bound, caps)?.delta_lambda())
}

/// Every decomposition of α into at least two elements of Δ⁺_λ, by
/// non-increasing selection over the lexicographic order of Δ⁺_λ.
pub fn decompositions(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<Vec<Decomposition>> {
    check_alpha(q, alpha)?;
    let candidates: Vec<DimVector> =
        delta_lambda(q, lambda, alpha, caps)?.into_iter().filter(|b| b != alpha).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    decomposition_search(&candidates, candidates.len(), alpha, &mut chosen, &mut out, caps.max_candidates)?;
    Ok(out)
}

fn decomposition_search(
    candidates: &[DimVector],
    limit: usize,
    remaining: &DimVector,
    chosen: &mut Vec<DimVector>,
    out: &mut Vec<Decomposition>,
    cap: u64,
) -> Result<()> {
    if remaining.is_zero() {
        if chosen.len() >= 2 {
            if out.len() as u64 >= cap {
                return Err(Error::BoundExceeded(format!("more than {cap} decompositions")));
            }
            out.push(Decomposition::from_betas(chosen.clone()));
        }
        return Ok(());
    }
    for i in (0..limit).rev() {
        if candidates[i].is_below(remaining) {
            chosen.push(candidates[i].clone());
            decomposition_search(candidates, i + 1, &remaining.sub(&candidates[i]), chosen, out, cap)?;
            chosen.pop();
        }
    }
    Ok(())
}

pub fn sigma_membership(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<SigmaVerdict> {
    check_alpha(q, alpha)?;
    SigmaTable::new(q, lambda, alpha, caps)?.membership(alpha)
}

pub fn minimal_in_sigma(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<MinimalityVerdict> {
    check_alpha(q, alpha)?;
    SigmaTable::new(q, lambda, alpha, caps)?.minimality(alpha)
}

pub fn coadjoint_verdict(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<CoadjointVerdict> {
    check_alpha(q, alpha)?;
    SigmaTable::new(q, lambda, alpha, caps)?.coadjoint(alpha)
}

pub fn rep_types(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<Vec<RepType>> {
    check_alpha(q, alpha)?;
    SigmaTable::new(q, lambda, alpha, caps)?.rep_types(alpha, caps)
}

/// dim Ext¹ between simples of dimensions β_i, β_j over Π_0: 2 − T(β,β)
/// for the same simple, −T(β_i, β_j) for different ones.
pub fn ext1_dim(q: &Quiver, beta_i: &DimVector, beta_j: &DimVector, same_simple: bool) -> Result<i64> {
    let t = q.tits_form().bilinear(beta_i.as_slice(), beta_j.as_slice())?;
    if same_simple && beta_i != beta_j {
        return Err(Error::Precondition("the same simple must have a single dimension vector".into()));
    }
    let dim = if same_simple { 2 - t } else { -t };
    if dim < 0 {
        return Err(Error::Precondition(format!("negative Ext¹ count {dim} for {beta_i}, {beta_j}")));
    }
    Ok(dim)
}

/// The quiver on the simple factors of τ with Ext¹ arrow counts, and the
/// multiplicities α_ξ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalQuiverSetting {
    pub arrow_counts: Vec<Vec<i64>>,
    pub alpha_xi: Vec<i64>,
}

impl LocalQuiverSetting {
    pub fn to_quiver(&self) -> Result<Quiver> {
        let mut arrows = Vec::new();
        for (i, row) in self.arrow_counts.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for k in 0..c {
                    arrows.push((format!("c{}_{}_{}", i + 1, j + 1, k + 1), i + 1, j + 1));
                }
            }
        }
        Quiver::new(self.alpha_xi.len(), &arrows)
    }
}

pub fn local_quiver(q: &Quiver, tau: &RepType) -> Result<LocalQuiverSetting> {
    let z = tau.parts.len();
    let mut arrow_counts = vec![vec![0; z]; z];
    for i in 0..z {
        for j in 0..z {
            arrow_counts[i][j] = ext1_dim(q, &tau.parts[i].beta, &tau.parts[j].beta, i == j)?;
        }
    }
    Ok(LocalQuiverSetting { arrow_counts, alpha_xi: tau.parts.iter().map(|p| p.multiplicity as i64).collect() })
}

/// Dimension count at a semisimple point of type τ of rep_α Π_0: the slice
/// dimension α·α + Σ e_i² − T(α,α) against α·α + 1 − T(α,α).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceCheck {
    pub smooth: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub in_s_lambda: bool,
}

pub fn slice_smooth_check(q: &Quiver, tau: &RepType, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<SliceCheck> {
    check_alpha(q, alpha)?;
    check_weight(q, lambda)?;
    if !lambda.is_zero() {
        return Err(Error::Precondition("slice counts are available for λ = 0 only".into()));
    }
    if tau.total(q.vertex_count()) != *alpha {
        return Err(Error::Precondition(format!("τ = {tau} does not sum to {alpha}")));
    }
    let in_s_lambda = sigma_membership(q, alpha, lambda, caps)?.in_s;
    let tits = q.tits_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
    let lhs = alpha.dot_self() + tau.sum_of_squares() - tits;
    let rhs = alpha.dot_self() + 1 - tits;
    Ok(SliceCheck { smooth: lhs == rhs, lhs, rhs, in_s_lambda })
}

/// The count for the type (2, α) inside rep_{2α} Π_λ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoAlphaCheck {
    pub applies: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub smooth: bool,
}

pub fn two_alpha_nonsmooth(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<TwoAlphaCheck> {
    check_alpha(q, alpha)?;
    let two = alpha.scale(2);
    let table = SigmaTable::new(q, lambda, &two, caps)?;
    two_alpha_from_table(&table, alpha)
}

fn two_alpha_from_table(table: &SigmaTable, alpha: &DimVector) -> Result<TwoAlphaCheck> {
    let q = table.quiver();
    let applies = table.in_sigma(alpha)? && table.in_sigma(&alpha.scale(2))?;
    let aa = alpha.dot_self();
    let tits = q.tits_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
    let lhs = 4 * aa + 4 - 4 * tits;
    let rhs = 4 * aa + 1 - 4 * tits;
    Ok(TwoAlphaCheck { applies, lhs, rhs, smooth: lhs == rhs })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTypeReport {
    pub rep_type: RepType,
    pub local_quiver: LocalQuiverSetting,
    /// Present for λ = 0.
    pub slice: Option<SliceCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: String,
    pub alpha: DimVector,
    pub lambda: Weight,
    pub root: RootClassification,
    pub delta_lambda: Vec<DimVector>,
    pub sigma: SigmaVerdict,
    pub minimality: Option<MinimalityVerdict>,
    pub coadjoint: CoadjointVerdict,
    pub rep_types: Vec<RepTypeReport>,
    /// Present when α ∈ Σ_λ and 2α fits the caps.
    pub two_alpha: Option<TwoAlphaCheck>,
}

/// Full analysis of (α, λ).
pub fn classify(q: &Quiver, alpha: &DimVector, lambda: &Weight, caps: BoxCaps) -> Result<ClassifyReport> {
    check_alpha(q, alpha)?;
    let table = SigmaTable::new(q, lambda, alpha, caps)?;
    let sigma = table.membership(alpha)?;
    let minimality = if sigma.in_sigma { Some(table.minimality(alpha)?) } else { None };
    let coadjoint = table.coadjoint(alpha)?;
    let mut reports = Vec::new();
    for t in table.rep_types(alpha, caps)? {
        let local_quiver = local_quiver(q, &t)?;
        let slice = if lambda.is_zero() {
            let tits = q.tits_form().bilinear(alpha.as_slice(), alpha.as_slice())?;
            let lhs = alpha.dot_self() + t.sum_of_squares() - tits;
            let rhs = alpha.dot_self() + 1 - tits;
            Some(SliceCheck { smooth: lhs == rhs, lhs, rhs, in_s_lambda: sigma.in_s })
        } else {
            None
        };
        reports.push(RepTypeReport { rep_type: t, local_quiver, slice });
    }
    let two_alpha = if sigma.in_sigma && caps.check(q, &alpha.scale(2)).is_ok() {
        Some(two_alpha_from_table(&SigmaTable::new(q, lambda, &alpha.scale(2), caps)?, alpha)?)
    } else {
        None
    };
    Ok(ClassifyReport {
        schema: SCHEMA.to_string(),
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        root: table.classification(alpha)?.clone(),
        delta_lambda: table.delta_lambda(),
        sigma,
        minimality,
        coadjoint,
        rep_types: reports,
        two_alpha,
    })
}
