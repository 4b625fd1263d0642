//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Oracles here are written independently of the library code
//! paths they check.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use necklace_core::forms::{self, contract, differential, lie_derivative, Bounds, FormBasisElement, FormSum};
use necklace_core::lie::{derivation_commutator, hamiltonian_derivation, kontsevich_bracket};
use necklace_core::moment::{solve, SolveOptions};
use necklace_core::necklace::{necklaces_of_length, NecklaceSum, NecklaceWord};
use necklace_core::path::{paths_of_length, Path, PathSum};
use necklace_core::quiver::examples::{a1_tilde, calogero, one_loop};
use necklace_core::roots::{enumerate_positive_roots, BoxCaps, RootClass};
use necklace_core::scalar::{int, LinComb};
use necklace_core::strata::{self, RepType, SigmaTable};
use necklace_core::{Derivation, DimVector, DoubleQuiver, Quiver, Weight};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn v(x: &[i64]) -> DimVector {
    DimVector::new(x.to_vec())
}

fn w(x: &[i64]) -> Weight {
    Weight::from_integers(x)
}

// ---------------------------------------------------------------------------
// independent oracles

/// Tits form computed straight from the arrow list.
fn tits(q: &Quiver, a: &[i64], b: &[i64]) -> i64 {
    let mut t = 2 * a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    for arrow in q.arrows() {
        t -= a[arrow.source] * b[arrow.target] + a[arrow.target] * b[arrow.source];
    }
    t
}

fn connected(q: &Quiver, a: &[i64]) -> bool {
    let support: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
    let mut seen = vec![false; a.len()];
    let mut stack = vec![support[0]];
    seen[support[0]] = true;
    while let Some(x) = stack.pop() {
        for arrow in q.arrows() {
            for (p, r) in [(arrow.source, arrow.target), (arrow.target, arrow.source)] {
                if p == x && a[r] > 0 && !seen[r] {
                    seen[r] = true;
                    stack.push(r);
                }
            }
        }
    }
    support.iter().all(|&i| seen[i])
}

/// Reflection descent choosing the vertex with the largest T(α, ε_i)
/// (ties to the highest index) instead of the least admissible one.
fn oracle_class(q: &Quiver, alpha: &[i64]) -> RootClass {
    let k = alpha.len();
    let loops: Vec<bool> = (0..k).map(|i| q.arrows().iter().any(|a| a.source == i && a.target == i)).collect();
    let unit = |i: usize| (0..k).map(|j| i64::from(j == i)).collect::<Vec<_>>();
    let mut a = alpha.to_vec();
    loop {
        let nz: Vec<usize> = (0..k).filter(|&i| a[i] != 0).collect();
        if nz.len() == 1 && a[nz[0]] == 1 && !loops[nz[0]] {
            return RootClass::RealRoot;
        }
        let ts: Vec<i64> = (0..k).map(|i| tits(q, &a, &unit(i))).collect();
        if ts.iter().all(|&t| t <= 0) && connected(q, &a) {
            return RootClass::ImaginaryRoot;
        }
        let best = (0..k).filter(|&i| !loops[i] && ts[i] > 0).max_by_key(|&i| (ts[i], i));
        let Some(i) = best else { return RootClass::NotRoot };
        a[i] -= ts[i];
        if a[i] < 0 {
            return RootClass::NotRoot;
        }
    }
}

fn p_oracle(q: &Quiver, a: &[i64]) -> i64 {
    1 - tits(q, a, a) / 2
}

/// Necklace count by collecting full rotation orbits of closed paths.
fn necklace_orbits(q: &Quiver, len: usize) -> usize {
    if len == 0 {
        return q.vertex_count();
    }
    let mut orbits = BTreeSet::new();
    for p in paths_of_length(q, len).into_iter().filter(Path::is_closed) {
        let a = p.arrows();
        let orbit: BTreeSet<Vec<usize>> = (0..len).map(|r| a[r..].iter().chain(&a[..r]).copied().collect()).collect();
        orbits.insert(orbit);
    }
    orbits.len()
}

/// The bracket by opening both necklaces at matching beads and gluing.
fn glue_bracket(d: &DoubleQuiver, w1: &NecklaceWord, w2: &NecklaceWord) -> LinComb<Vec<usize>> {
    let (c1, c2) = (w1.arrows(), w2.arrows());
    let mut out = LinComb::zero();
    for a in 0..d.base_arrow_count() {
        let s = d.star(a);
        for (x, y, sign) in [(a, s, 1), (s, a, -1)] {
            for i in (0..c1.len()).filter(|&i| c1[i] == x) {
                for j in (0..c2.len()).filter(|&j| c2[j] == y) {
                    let mut g: Vec<usize> = c1[i + 1..].iter().chain(&c1[..i]).copied().collect();
                    g.extend(c2[j + 1..].iter().chain(&c2[..j]));
                    let key = (0..g.len().max(1)).map(|r| g[r.min(g.len())..].iter().chain(&g[..r.min(g.len())]).copied().collect::<Vec<_>>()).min().unwrap();
                    out.add_term(key, int(sign));
                }
            }
        }
    }
    out
}

fn random_sum(words: &[NecklaceWord], rng: &mut ChaCha8Rng) -> NecklaceSum {
    let mut out = NecklaceSum::zero();
    for _ in 0..rng.random_range(1..=2) {
        let c = rng.random_range(-3..=3);
        out.add_term(words[rng.random_range(0..words.len())].clone(), int(c));
    }
    out
}

fn words_up_to(q: &Quiver, max: usize) -> Vec<NecklaceWord> {
    (0..=max).flat_map(|l| necklaces_of_length(q, l)).collect()
}

fn random_derivation(q: &Quiver, rng: &mut ChaCha8Rng) -> Derivation {
    let mut images = Vec::new();
    for a in 0..q.arrow_count() {
        let mut img = PathSum::zero();
        for len in 0..=1 {
            for p in paths_of_length(q, len) {
                if p.source() == q.source(a) && p.target() == q.target(a) && rng.random_bool(0.4) {
                    img.add_term(p, int(rng.random_range(-2..=2)));
                }
            }
        }
        images.push(img);
    }
    Derivation::new(q, images).unwrap()
}

fn random_form(q: &Quiver, rng: &mut ChaCha8Rng, degree: usize, max_len: usize) -> FormSum {
    let mut out = FormSum::zero();
    let mut attempts = 0;
    while out.len() < 2 && attempts < 200 {
        attempts += 1;
        let l0 = rng.random_range(0..=max_len - degree);
        let mut budget = max_len - l0;
        let starts = paths_of_length(q, l0);
        let mut entries = vec![starts[rng.random_range(0..starts.len())].clone()];
        for left in (0..degree).rev() {
            let len = rng.random_range(1..=budget - left);
            budget -= len;
            let src = entries.last().unwrap().source();
            let cands: Vec<Path> = paths_of_length(q, len).into_iter().filter(|p| p.target() == src).collect();
            if cands.is_empty() {
                break;
            }
            entries.push(cands[rng.random_range(0..cands.len())].clone());
        }
        if let Some(b) = FormBasisElement::new(entries).filter(|b| b.degree() == degree) {
            out.add_term(b, int(rng.random_range(1..=3)));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// criteria

fn c1() -> Check {
    let q = calogero();
    let start = Instant::now();
    let chi = q.euler_form();
    let t = q.tits_form();
    let elapsed = start.elapsed();
    ensure(chi.rows() == [vec![1, -1], vec![0, 0]], || format!("χ = {:?}", chi.rows()))?;
    ensure(t.rows() == [vec![2, -1], vec![-1, 0]], || format!("T = {:?}", t.rows()))?;
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok("χ = [[1,-1],[0,0]], T = [[2,-1],[-1,0]]".into())
}

fn c2() -> Check {
    let q = calogero();
    let bound = v(&[4, 8]);
    let roots = enumerate_positive_roots(&q, &bound, BoxCaps::default()).map_err(|e| e.to_string())?;
    let real: Vec<DimVector> = roots.iter().filter(|r| r.1.class == RootClass::RealRoot).map(|r| r.0.clone()).collect();
    ensure(real == vec![v(&[1, 0])], || format!("real roots {real:?}"))?;
    for (alpha, _) in &roots {
        ensure(connected(&q, alpha.as_slice()), || format!("{alpha} has disconnected support"))?;
    }
    let points = bound.box_points();
    let mut checked = 0;
    for alpha in points.iter().filter(|a| !a.is_zero()) {
        let expect = oracle_class(&q, alpha.as_slice());
        let got = roots.iter().find(|r| &r.0 == alpha).map_or(RootClass::NotRoot, |r| r.1.class);
        ensure(expect == got, || format!("{alpha}: oracle {expect:?}, library {got:?}"))?;
        checked += 1;
    }
    Ok(format!("{} roots, {checked} lattice points agree with the oracle", roots.len()))
}

fn sigma_ray(lambda: &[i64], bound: &[i64], expect: &[&[i64]]) -> Result<(), String> {
    let q = calogero();
    let table = SigmaTable::new(&q, &w(lambda), &v(bound), BoxCaps::default()).map_err(|e| e.to_string())?;
    let got = table.sigma_elements();
    let want: Vec<DimVector> = expect.iter().map(|x| v(x)).collect();
    ensure(got == want, || format!("λ={lambda:?}: Σ_λ ∩ box = {got:?}"))?;
    let first = &want[0];
    let m = table.minimality(first).map_err(|e| e.to_string())?;
    ensure(m.minimal, || format!("{first} not minimal"))?;
    let c = table.coadjoint(first).map_err(|e| e.to_string())?;
    ensure(c.coadjoint, || format!("{first} not coadjoint"))?;
    for x in &want[1..] {
        let c = table.coadjoint(x).map_err(|e| e.to_string())?;
        ensure(!c.coadjoint && c.smaller.as_ref() == Some(first), || format!("{x}: {c:?}"))?;
    }
    Ok(())
}

fn c3() -> Check {
    let start = Instant::now();
    sigma_ray(&[-2, 1], &[3, 6], &[&[1, 2], &[2, 4], &[3, 6]])?;
    let first = start.elapsed();
    let start = Instant::now();
    sigma_ray(&[-3, 1], &[2, 6], &[&[1, 3], &[2, 6]])?;
    let second = start.elapsed();
    ensure(first < Duration::from_secs(1) && second < Duration::from_secs(1), || format!("{first:?}, {second:?}"))?;
    Ok("Σ_(-2,1) = {(1,2),(2,4),(3,6)}, Σ_(-3,1) = {(1,3),(2,6)}; minimal elements coadjoint".into())
}

fn c4() -> Check {
    let c = strata::coadjoint_verdict(&calogero(), &v(&[1, 2]), &w(&[-2, 1]), BoxCaps::default())
        .map_err(|e| e.to_string())?;
    ensure(c.dim_fiber == Some(8) && c.dim_quotient == Some(4), || format!("{c:?}"))?;
    Ok("dim_fiber = 8, dim_quotient = 4".into())
}

fn c5() -> Check {
    let mut antisym = 0;
    let mut jacobi = 0;
    let mut central = 0;
    for (base, seed) in [(calogero(), 51u64), (one_loop(), 52)] {
        let d = base.double();
        let q = d.quiver();
        let words = words_up_to(q, 5);
        let arrow_words: Vec<NecklaceWord> = words.iter().filter(|w| w.len() > 0).cloned().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..150 {
            let (w1, w2) = (random_sum(&words, &mut rng), random_sum(&words, &mut rng));
            let s = &kontsevich_bracket(&d, &w1, &w2) + &kontsevich_bracket(&d, &w2, &w1);
            ensure(s.is_zero(), || "antisymmetry fails".into())?;
            antisym += 1;
        }
        for _ in 0..75 {
            let ws: Vec<NecklaceSum> = (0..3).map(|_| random_sum(&arrow_words, &mut rng)).collect();
            let mut j = kontsevich_bracket(&d, &ws[0], &kontsevich_bracket(&d, &ws[1], &ws[2]));
            j.add_assign_ref(&kontsevich_bracket(&d, &ws[1], &kontsevich_bracket(&d, &ws[2], &ws[0])));
            j.add_assign_ref(&kontsevich_bracket(&d, &ws[2], &kontsevich_bracket(&d, &ws[0], &ws[1])));
            ensure(j.is_zero(), || "Jacobi fails".into())?;
            jacobi += 1;
        }
        for w in &words {
            for vtx in 0..q.vertex_count() {
                let e = NecklaceWord::Vertex(vtx).to_sum();
                ensure(kontsevich_bracket(&d, &e, &w.to_sum()).is_zero(), || "vertex class not central".into())?;
                ensure(kontsevich_bracket(&d, &w.to_sum(), &e).is_zero(), || "vertex class not central".into())?;
                central += 1;
            }
        }
    }
    Ok(format!("{antisym} antisymmetry pairs, {jacobi} Jacobi triples, {central} centrality checks"))
}

fn c6() -> Check {
    let mut count = 0;
    for (base, seed) in [(calogero(), 61u64), (one_loop(), 62)] {
        let d = base.double();
        let words = words_up_to(d.quiver(), 4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..75 {
            let (w1, w2) = (random_sum(&words, &mut rng), random_sum(&words, &mut rng));
            let lhs = hamiltonian_derivation(&d, &kontsevich_bracket(&d, &w1, &w2));
            let rhs = derivation_commutator(&hamiltonian_derivation(&d, &w1), &hamiltonian_derivation(&d, &w2));
            ensure(lhs == rhs, || "θ_{w1,w2} ≠ [θ_w1, θ_w2]".into())?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs: θ of the bracket equals the commutator"))
}

fn c7() -> Check {
    let mut count = 0;
    for (base, seed) in [(calogero(), 71u64), (a1_tilde(), 72)] {
        let d = base.double();
        let q = d.quiver();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..100 {
            let theta = random_derivation(q, &mut rng);
            let gamma = random_derivation(q, &mut rng);
            let degree = rng.random_range(0..=3);
            let x = random_form(q, &mut rng, degree, 4);
            let cartan = &contract(&theta, &differential(&x)) + &differential(&contract(&theta, &x));
            ensure(lie_derivative(&theta, &x) == cartan, || "Cartan homotopy fails".into())?;
            let bracket = derivation_commutator(&theta, &gamma);
            let li = &lie_derivative(&theta, &contract(&gamma, &x)) - &contract(&gamma, &lie_derivative(&theta, &x));
            ensure(li == contract(&bracket, &x), || "[L_θ, i_γ] ≠ i_[θ,γ]".into())?;
            let ll = &lie_derivative(&theta, &lie_derivative(&gamma, &x)) - &lie_derivative(&gamma, &lie_derivative(&theta, &x));
            ensure(ll == lie_derivative(&bracket, &x), || "[L_θ, L_γ] ≠ L_[θ,γ]".into())?;
            count += 1;
        }
    }
    Ok(format!("{count} samples satisfy all three identities"))
}

fn c8() -> Check {
    let bounds = Bounds::default();
    for base in [calogero(), a1_tilde()] {
        let q = base.double().quiver().clone();
        let h00 = forms::graded_homology_dim(&q, 0, 0, bounds).map_err(|e| e.to_string())?;
        ensure(h00 == q.vertex_count(), || format!("H^0 at length 0 is {h00}"))?;
        for n in 1..=3 {
            for l in 1..=4 {
                let h = forms::graded_homology_dim(&q, n, l, bounds).map_err(|e| e.to_string())?;
                ensure(h == 0, || format!("H^{n} at length {l} is {h}"))?;
            }
        }
    }
    for base in [one_loop(), calogero(), a1_tilde()] {
        let q = base.double().quiver().clone();
        for l in 0..=4 {
            let dim = forms::karoubi_dim(&q, 0, l, bounds).map_err(|e| e.to_string())?.dim;
            ensure(dim == necklace_orbits(&q, l), || format!("dR^0 at length {l}: {dim}"))?;
        }
    }
    let one = one_loop().double().quiver().clone();
    let dim = forms::karoubi_dim(&one, 0, 2, bounds).map_err(|e| e.to_string())?.dim;
    ensure(dim == 3, || format!("one-loop dR^0 at length 2 is {dim}"))?;
    Ok("H^n = 0 for 1 ≤ n ≤ 3, 1 ≤ ℓ ≤ 4; H^0_0 = k; dR^0 dims match necklace counts".into())
}

fn c9() -> Check {
    let d = one_loop().double();
    let q = d.quiver();
    let xx = NecklaceWord::parse(q, "x x").map_err(|e| e.to_string())?;
    let ss = NecklaceWord::parse(q, "x* x*").map_err(|e| e.to_string())?;
    let b = kontsevich_bracket(&d, &xx.to_sum(), &ss.to_sum());
    let expect = NecklaceWord::parse(q, "x x*").map_err(|e| e.to_string())?.to_sum().scaled(&int(4));
    ensure(b == expect, || "∂-formula disagrees".into())?;
    let glued = glue_bracket(&d, &xx, &ss);
    let mut want = LinComb::zero();
    want.add_term(vec![0, 1], int(4));
    ensure(glued == want, || "glue oracle disagrees".into())?;
    Ok("{[x x], [x* x*]} = 4 [x x*] by both routes".into())
}

fn c10() -> Check {
    let q = a1_tilde();
    let zero = Weight::zero(2);
    let caps = BoxCaps::default();
    let delta = v(&[1, 1]);
    let types = strata::rep_types(&q, &delta, &zero, caps).map_err(|e| e.to_string())?;
    let want = vec![RepType::new(vec![(1, delta.clone())]), RepType::new(vec![(1, v(&[1, 0])), (1, v(&[0, 1]))])];
    ensure(types == want, || format!("types {types:?}"))?;
    let s0 = strata::slice_smooth_check(&q, &types[0], &delta, &zero, caps).map_err(|e| e.to_string())?;
    let s1 = strata::slice_smooth_check(&q, &types[1], &delta, &zero, caps).map_err(|e| e.to_string())?;
    ensure((s0.lhs, s0.rhs, s0.smooth) == (3, 3, true), || format!("{s0:?}"))?;
    ensure((s1.lhs, s1.rhs, s1.smooth) == (4, 3, false), || format!("{s1:?}"))?;
    let mut count = 0;
    for (base, bound) in [(a1_tilde(), v(&[3, 3])), (calogero(), v(&[3, 5]))] {
        for alpha in bound.box_points().into_iter().filter(|a| !a.is_zero()) {
            for t in strata::rep_types(&base, &alpha, &zero, caps).map_err(|e| e.to_string())? {
                let s = strata::slice_smooth_check(&base, &t, &alpha, &zero, caps).map_err(|e| e.to_string())?;
                let squares: i64 = t.parts.iter().map(|p| (p.multiplicity * p.multiplicity) as i64).sum();
                ensure(s.smooth == (squares == 1), || format!("{alpha} {t}: {s:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("Kleinian point (3,3)/(4,3); smooth iff Σe² = 1 on {count} types"))
}

fn c11() -> Check {
    let t = strata::two_alpha_nonsmooth(&calogero(), &v(&[1, 2]), &w(&[-2, 1]), BoxCaps::default())
        .map_err(|e| e.to_string())?;
    ensure(t.applies && t.lhs == 32 && t.rhs == 29 && !t.smooth, || format!("{t:?}"))?;
    Ok("lhs 32, rhs 29, difference 3: rep_(2,4) not smooth".into())
}

fn c12() -> Check {
    let mut summary = Vec::new();
    for (base, alpha, lambda, fiber) in [(calogero(), v(&[1, 2]), w(&[-2, 1]), 8usize), (a1_tilde(), v(&[1, 1]), w(&[-1, 1]), 3)] {
        let d = base.double();
        let chi = 1 - p_oracle(&base, alpha.as_slice());
        let exact = 1 + alpha.dot_self() - 2 * chi;
        ensure(exact == fiber as i64, || format!("exact formula gives {exact}"))?;
        let rank = (alpha.dot_self() - 1) as usize;
        let mut good = 0;
        for seed in 0..10 {
            let r = solve(&d, &alpha, &lambda, seed, SolveOptions::default()).map_err(|e| e.to_string())?;
            if r.converged && r.residual_norm <= 1e-10 && r.iterations <= 200 {
                ensure(r.jacobian_rank == Some(rank) && r.fiber_dim_estimate == Some(fiber), || {
                    format!("seed {seed}: rank {:?}, fiber {:?}", r.jacobian_rank, r.fiber_dim_estimate)
                })?;
                good += 1;
            }
        }
        ensure(good >= 8, || format!("{alpha}: only {good}/10 seeds converged"))?;
        summary.push(format!("{alpha}: {good}/10 converged, rank {rank}, fiber {fiber}"));
    }
    Ok(summary.join("; "))
}

fn c13() -> Check {
    let caps = BoxCaps::default();
    let mut negatives = 0;
    for (base, lambda, small, large) in [
        (calogero(), w(&[0, 0]), v(&[3, 6]), v(&[6, 12])),
        (calogero(), w(&[-2, 1]), v(&[3, 6]), v(&[5, 10])),
        (a1_tilde(), w(&[0, 0]), v(&[3, 3]), v(&[6, 6])),
    ] {
        let s = SigmaTable::new(&base, &lambda, &small, caps).map_err(|e| e.to_string())?;
        let l = SigmaTable::new(&base, &lambda, &large, caps).map_err(|e| e.to_string())?;
        for alpha in small.box_points().into_iter().filter(|a| !a.is_zero()) {
            let m = s.membership(&alpha).map_err(|e| e.to_string())?;
            ensure(m == l.membership(&alpha).map_err(|e| e.to_string())?, || format!("{alpha} changes with the box"))?;
            let on = lambda.dot(&alpha).unwrap().is_zero();
            let root = oracle_class(&base, alpha.as_slice()) != RootClass::NotRoot;
            if !(root && on) {
                ensure(!m.in_s && !m.in_sigma, || format!("{alpha} outside Δ⁺_λ accepted"))?;
                negatives += usize::from(true);
                continue;
            }
            if m.in_sigma {
                continue;
            }
            // replay the violating decomposition with the oracles
            let d = m.best_decomposition.as_ref().ok_or_else(|| format!("{alpha}: negative verdict without witness"))?;
            let mut total = DimVector::zero(alpha.len());
            let mut psum = 0;
            let mut parts = 0;
            for part in &d.parts {
                let b = &part.beta;
                ensure(oracle_class(&base, b.as_slice()) != RootClass::NotRoot && lambda.dot(b).unwrap().is_zero(), || {
                    format!("{alpha}: witness part {b} not in Δ⁺_λ")
                })?;
                total = total.add(&b.scale(part.multiplicity as i64));
                psum += p_oracle(&base, b.as_slice()) * part.multiplicity as i64;
                parts += part.multiplicity;
            }
            let p = p_oracle(&base, alpha.as_slice());
            ensure(total == alpha && parts >= 2, || format!("{alpha}: witness {d} does not sum to α"))?;
            ensure(psum >= p, || format!("{alpha}: witness {d} does not violate the strict inequality"))?;
            if !m.in_s {
                ensure(psum > p, || format!("{alpha}: witness {d} does not violate the weak inequality"))?;
            }
            negatives += 1;
        }
    }
    Ok(format!("verdicts stable under box enlargement; {negatives} negative verdicts replayed"))
}

fn main() -> ExitCode {
    type Criterion = (usize, &'static str, fn() -> Check, Duration);
    let criteria: [Criterion; 13] = [
        (1, "Euler and Tits forms of the Calogero quiver", c1, Duration::from_millis(50)),
        (2, "root enumeration in the box (4,8)", c2, Duration::from_secs(1)),
        (3, "Σ_λ rays and coadjoint verdicts", c3, Duration::from_secs(2)),
        (4, "fiber and quotient dimensions", c4, Duration::from_secs(1)),
        (5, "necklace Lie algebra axioms", c5, Duration::from_secs(30)),
        (6, "central extension on generators", c6, Duration::from_secs(30)),
        (7, "Cartan calculus identities", c7, Duration::from_secs(60)),
        (8, "acyclicity and dR^0 dimensions", c8, Duration::from_secs(120)),
        (9, "bracket ground truth", c9, Duration::from_secs(1)),
        (10, "slice smoothness verdicts", c10, Duration::from_secs(5)),
        (11, "2α non-smoothness count", c11, Duration::from_secs(1)),
        (12, "numerical moment-map cross-check", c12, Duration::from_secs(60)),
        (13, "reproducible verdicts with replayable witnesses", c13, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({:.3}s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL [{id:>2}] {name}: {why} ({:.3}s)", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 13 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
