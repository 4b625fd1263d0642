//! Contraction i_θ and Lie derivative L_θ along a V-derivation.

use num_traits::One;

use super::{multiply_forms, raw_form, FormBasisElement, FormSum};
use crate::derivation::Derivation;
use crate::quiver::Quiver;
use crate::scalar::Scalar;

/// i_θ: the degree −1 super-derivation with i_θ(a) = 0, i_θ(da) = θ(a).
///
/// On `p0 dp1 … dpn` it is Σ_j (−1)^{j−1} p0 dp1 … dp_{j−1} · θ(p_j) dp_{j+1} … dpn.
pub fn contract(theta: &Derivation, x: &FormSum) -> FormSum {
    x.map_linear(|b| contract_basis(theta, b))
}

fn contract_basis(theta: &Derivation, b: &FormBasisElement) -> FormSum {
    let entries = b.entries();
    let mut out = FormSum::zero();
    for j in 1..entries.len() {
        let image = theta.apply_path(&entries[j]);
        if image.is_zero() {
            continue;
        }
        let left = raw_form(entries[..j].to_vec());
        let right = image.map_linear(|q| {
            let mut e = Vec::with_capacity(entries.len() - j);
            e.push(q.clone());
            e.extend(entries[j + 1..].iter().cloned());
            raw_form(e)
        });
        let sign = if (j - 1) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        out.add_scaled(&multiply_forms(&left, &right), &sign);
    }
    out
}

/// L_θ: the degree-preserving derivation with L_θ(a) = θ(a), L_θ(da) = dθ(a).
pub fn lie_derivative(theta: &Derivation, x: &FormSum) -> FormSum {
    x.map_linear(|b| {
        let entries = b.entries();
        let mut out = FormSum::zero();
        for j in 0..entries.len() {
            for (q, c) in &theta.apply_path(&entries[j]) {
                let mut e = entries.to_vec();
                e[j] = q.clone();
                out.add_scaled(&raw_form(e), c);
            }
        }
        out
    })
}

/// The Euler derivation E(a) = a.
pub fn euler_derivation(q: &Quiver) -> Derivation {
    Derivation::euler(q)
}
