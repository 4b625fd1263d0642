//! Numerical moment map μ(V) = Σ_a [V_a, V_{a*}] on representations of a
//! double quiver, a Gauss–Newton solver for μ(V) = λ, and Jacobian ranks at
//! the solutions.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, DoubleQuiver, Weight};

type CMatrix = DMatrix<Complex64>;

/// One complex matrix of shape n_{target(b)} × n_{source(b)} per arrow b of
/// the double quiver.
#[derive(Debug, Clone, PartialEq)]
pub struct RepPoint {
    alpha: DimVector,
    matrices: Vec<CMatrix>,
}

impl RepPoint {
    pub fn new(d: &DoubleQuiver, alpha: &DimVector, matrices: Vec<CMatrix>) -> Result<Self> {
        let q = d.quiver();
        q.check_dim(alpha.as_slice())?;
        if !alpha.is_nonnegative() {
            return Err(Error::Precondition(format!("{alpha} has a negative entry")));
        }
        if matrices.len() != q.arrow_count() {
            return Err(Error::LengthMismatch { expected: q.arrow_count(), actual: matrices.len() });
        }
        for (b, m) in matrices.iter().enumerate() {
            let shape = (alpha[q.target(b)] as usize, alpha[q.source(b)] as usize);
            if m.shape() != shape {
                return Err(Error::Precondition(format!(
                    "matrix for `{}` has shape {:?}, expected {:?}",
                    q.label(b),
                    m.shape(),
                    shape
                )));
            }
        }
        Ok(Self { alpha: alpha.clone(), matrices })
    }

    pub fn zero(d: &DoubleQuiver, alpha: &DimVector) -> Result<Self> {
        let q = d.quiver();
        q.check_dim(alpha.as_slice())?;
        let matrices = (0..q.arrow_count())
            .map(|b| CMatrix::zeros(alpha[q.target(b)].max(0) as usize, alpha[q.source(b)].max(0) as usize))
            .collect();
        Self::new(d, alpha, matrices)
    }

    /// Independent standard complex Gaussian entries scaled by 1/√n, where
    /// n = Σ α_i.
    pub fn random(d: &DoubleQuiver, alpha: &DimVector, seed: u64) -> Result<Self> {
        let mut point = Self::zero(d, alpha)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let scale = 1.0 / ((alpha.total().max(1) as f64).sqrt() * std::f64::consts::SQRT_2);
        for m in &mut point.matrices {
            for z in m.iter_mut() {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                *z = Complex64::new(re * scale, im * scale);
            }
        }
        Ok(point)
    }

    pub fn alpha(&self) -> &DimVector {
        &self.alpha
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// dim rep_α of the double: Σ_b n_{s(b)} n_{t(b)}.
    pub fn dimension(&self) -> usize {
        self.matrices.iter().map(|m| m.len()).sum()
    }

    #[cfg(test)]
    fn flatten(&self) -> DVector<Complex64> {
        DVector::from_iterator(self.dimension(), self.matrices.iter().flat_map(|m| m.iter().copied()))
    }

    fn with_offset(&self, delta: &DVector<Complex64>, t: f64) -> Self {
        let mut out = self.clone();
        let mut k = 0;
        for m in &mut out.matrices {
            for z in m.iter_mut() {
                *z += delta[k] * t;
                k += 1;
            }
        }
        out
    }
}

/// Σ_a [V_a, V_{a*}] split into its vertex blocks.
pub fn moment_eval(d: &DoubleQuiver, v: &RepPoint) -> Vec<CMatrix> {
    let q = d.quiver();
    let mut blocks: Vec<CMatrix> =
        v.alpha.as_slice().iter().map(|&n| CMatrix::zeros(n as usize, n as usize)).collect();
    for a in 0..d.base_arrow_count() {
        let (va, vs) = (&v.matrices[a], &v.matrices[d.star(a)]);
        blocks[q.target(a)] += va * vs;
        blocks[q.source(a)] -= vs * va;
    }
    blocks
}

/// Derivative of the moment map at `v` in direction `x`.
fn moment_differential(d: &DoubleQuiver, v: &RepPoint, x: &RepPoint) -> Vec<CMatrix> {
    let q = d.quiver();
    let mut blocks: Vec<CMatrix> =
        v.alpha.as_slice().iter().map(|&n| CMatrix::zeros(n as usize, n as usize)).collect();
    for a in 0..d.base_arrow_count() {
        let s = d.star(a);
        let (va, vs, xa, xs) = (&v.matrices[a], &v.matrices[s], &x.matrices[a], &x.matrices[s]);
        blocks[q.target(a)] += xa * vs + va * xs;
        blocks[q.source(a)] -= xs * va + vs * xa;
    }
    blocks
}

fn flatten_blocks(blocks: &[CMatrix]) -> DVector<Complex64> {
    let len = blocks.iter().map(|b| b.len()).sum();
    DVector::from_iterator(len, blocks.iter().flat_map(|b| b.iter().copied()))
}

/// Orthogonal projection onto block-diagonal tuples of total trace zero.
fn project_trace_zero(blocks: &mut [CMatrix]) {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    if n == 0 {
        return;
    }
    let trace: Complex64 = blocks.iter().map(|b| b.trace()).sum();
    let shift = trace / n as f64;
    for b in blocks {
        for i in 0..b.nrows() {
            b[(i, i)] -= shift;
        }
    }
}

fn weight_floats(lambda: &Weight) -> Vec<f64> {
    lambda.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
}

/// μ(V) − λ projected to trace zero, flattened.
fn residual(d: &DoubleQuiver, v: &RepPoint, lambda: &[f64]) -> DVector<Complex64> {
    let mut blocks = moment_eval(d, v);
    for (b, &l) in blocks.iter_mut().zip(lambda) {
        for i in 0..b.nrows() {
            b[(i, i)] -= Complex64::new(l, 0.0);
        }
    }
    project_trace_zero(&mut blocks);
    flatten_blocks(&blocks)
}

/// Jacobian of the projected moment map, one column per matrix entry.
fn jacobian(d: &DoubleQuiver, v: &RepPoint) -> CMatrix {
    let rows: usize = v.alpha.as_slice().iter().map(|&n| (n * n) as usize).sum();
    let cols = v.dimension();
    let mut jac = CMatrix::zeros(rows, cols);
    let mut direction = RepPoint::zero_like(v);
    let mut col = 0;
    for b in 0..direction.matrices.len() {
        for k in 0..direction.matrices[b].len() {
            direction.matrices[b][k] = Complex64::new(1.0, 0.0);
            let mut blocks = moment_differential(d, v, &direction);
            project_trace_zero(&mut blocks);
            jac.set_column(col, &flatten_blocks(&blocks));
            direction.matrices[b][k] = Complex64::new(0.0, 0.0);
            col += 1;
        }
    }
    jac
}

impl RepPoint {
    fn zero_like(v: &RepPoint) -> Self {
        Self { alpha: v.alpha.clone(), matrices: v.matrices.iter().map(|m| CMatrix::zeros(m.nrows(), m.ncols())).collect() }
    }
}

fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iter: usize,
    pub svd_tol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 200, svd_tol: 1e-7 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankReport {
    pub jacobian_rank: usize,
    pub fiber_dim_estimate: usize,
    /// All singular values of the Jacobian, largest first.
    pub singular_values: Vec<f64>,
}

/// Numerical rank of dμ at a solved point and the resulting fiber
/// dimension estimate dim rep_α − rank.
pub fn rank_report(d: &DoubleQuiver, v: &RepPoint, lambda: &Weight, residual_tol: f64, svd_tol: f64) -> Result<RankReport> {
    check_weight(d, v.alpha(), lambda)?;
    let r = residual(d, v, &weight_floats(lambda)).norm();
    if !(r <= residual_tol) {
        return Err(Error::Precondition(format!("point is not a solution: residual {r:e} > {residual_tol:e}")));
    }
    Ok(rank_at(d, v, svd_tol))
}

fn rank_at(d: &DoubleQuiver, v: &RepPoint, svd_tol: f64) -> RankReport {
    let s = singular_values(&jacobian(d, v));
    let top = s.first().copied().unwrap_or(0.0);
    let jacobian_rank = if top > 0.0 { s.iter().filter(|&&x| x > svd_tol * top).count() } else { 0 };
    RankReport { jacobian_rank, fiber_dim_estimate: v.dimension() - jacobian_rank, singular_values: s }
}

fn check_weight(d: &DoubleQuiver, alpha: &DimVector, lambda: &Weight) -> Result<()> {
    let k = d.vertex_count();
    if lambda.len() != k {
        return Err(Error::LengthMismatch { expected: k, actual: lambda.len() });
    }
    let dot = lambda.dot(alpha)?;
    if !num_traits::Zero::is_zero(&dot) {
        return Err(Error::Precondition(format!(
            "λ·α = {} ≠ 0, so the fiber is empty",
            crate::scalar::format_rational(&dot)
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SerializedPoint {
    /// Per arrow label, the matrix as rows of [re, im] pairs.
    pub matrices: Vec<(String, Vec<Vec<[f64; 2]>>)>,
}

impl SerializedPoint {
    fn from_point(d: &DoubleQuiver, v: &RepPoint) -> Self {
        let q = d.quiver();
        let matrices = v
            .matrices
            .iter()
            .enumerate()
            .map(|(b, m)| {
                let rows = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
                (q.label(b).to_string(), rows)
            })
            .collect();
        Self { matrices }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentSolveResult {
    pub alpha: DimVector,
    pub lambda: Weight,
    pub seed: u64,
    pub converged: bool,
    pub iterations: usize,
    pub residual_norm: f64,
    /// Present at converged points.
    pub jacobian_rank: Option<usize>,
    pub fiber_dim_estimate: Option<usize>,
    pub singular_values: Vec<f64>,
    pub point: SerializedPoint,
}

/// Gauss–Newton with least-norm steps and step halving from a seeded random
/// start. Non-convergence is reported in the result, not as an error.
pub fn solve(d: &DoubleQuiver, alpha: &DimVector, lambda: &Weight, seed: u64, opts: SolveOptions) -> Result<MomentSolveResult> {
    if !alpha.is_nonnegative() {
        return Err(Error::Precondition(format!("{alpha} has a negative entry")));
    }
    check_weight(d, alpha, lambda)?;
    let target = weight_floats(lambda);
    let (point, iterations, res) = gauss_newton(d, RepPoint::random(d, alpha, seed)?, &target, opts);
    let converged = res <= opts.tol;
    let (jacobian_rank, fiber_dim_estimate, singular_values) = if converged {
        let r = rank_at(d, &point, opts.svd_tol);
        (Some(r.jacobian_rank), Some(r.fiber_dim_estimate), r.singular_values)
    } else {
        (None, None, Vec::new())
    };
    Ok(MomentSolveResult {
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        seed,
        converged,
        iterations,
        residual_norm: res,
        jacobian_rank,
        fiber_dim_estimate,
        singular_values,
        point: SerializedPoint::from_point(d, &point),
    })
}

fn gauss_newton(d: &DoubleQuiver, mut v: RepPoint, target: &[f64], opts: SolveOptions) -> (RepPoint, usize, f64) {
    let mut r = residual(d, &v, target);
    let mut norm = r.norm();
    let mut iterations = 0;
    while norm > opts.tol && iterations < opts.max_iter && v.dimension() > 0 {
        iterations += 1;
        let jac = jacobian(d, &v);
        let Ok(pinv) = jac.pseudo_inverse(1e-12) else {
            break;
        };
        let step = -(pinv * &r);
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial = v.with_offset(&step, t);
            let tr = residual(d, &trial, target);
            let tn = tr.norm();
            if tn < norm {
                v = trial;
                r = tr;
                norm = tn;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (v, iterations, norm)
}
