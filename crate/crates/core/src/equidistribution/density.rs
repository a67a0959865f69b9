use super::{EquidistributionError, Result};
use crate::lattice::{
    enumerate_shell, for_each_in_shell, in_s_zeta, norm_classes_up_to, TorusSpec,
};
use crate::spectral::{solve_eigenvalues, SpectralContext, THETA};
use rayon::prelude::*;

/// How far past `X` the spectrum must be known for a density report.
pub const DENSITY_MARGIN: f64 = 4.0;

/// Sorted perturbed eigenvalues; every eigenvalue below `known_up_to` is
/// present.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub known_up_to: f64,
}

impl Spectrum {
    /// All eigenvalues below the largest norm `≤ x`.
    pub fn compute(ctx: &SpectralContext, x: f64) -> Result<Spectrum> {
        let eig = solve_eigenvalues(ctx, x)?;
        let known_up_to = eig.last().map_or(0.0, |e| e.bracket_hi);
        Ok(Spectrum { values: eig.into_iter().map(|e| e.value).collect(), known_up_to })
    }

    /// `#{μ ∈ Λ : |μ − λ| < half}`.
    fn count_within(&self, lambda: f64, half: f64) -> Result<usize> {
        if lambda + half > self.known_up_to {
            return Err(EquidistributionError::SuccessorUnknown {
                lambda,
                known_up_to: self.known_up_to,
            });
        }
        let lo = self.values.partition_point(|&v| v <= lambda - half);
        let hi = self.values.partition_point(|&v| v < lambda + half);
        Ok(hi - lo)
    }
}

/// `λ_k ≥ 1` and `(λ_k, λ_k + λ_k^{−1/2+ε}) ∩ Λ ≠ ∅`.
pub fn lambda1_membership(spectrum: &Spectrum, k: usize, epsilon: f64) -> Result<bool> {
    let lambda = spectrum.values[k];
    if lambda < 1.0 {
        return Ok(false);
    }
    let reach = lambda + lambda.powf(-0.5 + epsilon);
    match spectrum.values.get(k + 1) {
        Some(&next) => Ok(next < reach),
        None if reach <= spectrum.known_up_to => Ok(false),
        None => Err(EquidistributionError::SuccessorUnknown {
            lambda,
            known_up_to: spectrum.known_up_to,
        }),
    }
}

/// `λ_k ∈ Λ₁` and `#((λ − 3L, λ + 3L) ∩ Λ) ≤ L·λ^{1/2+2ε}` with `L = λ^{−δ}`.
pub fn lambda2_membership(
    spectrum: &Spectrum,
    k: usize,
    epsilon: f64,
    delta: f64,
) -> Result<bool> {
    if !lambda1_membership(spectrum, k, epsilon)? {
        return Ok(false);
    }
    let lambda = spectrum.values[k];
    let l = lambda.powf(-delta);
    let count = spectrum.count_within(lambda, 3.0 * l)?;
    Ok(count as f64 <= l * lambda.powf(0.5 + 2.0 * epsilon))
}

/// No `ξ` with `|ξ|² ∈ (λ − L, λ + L)` lies in `S_ζ`.
pub fn resonance_free(spec: &TorusSpec, lambda: f64, l: f64, zeta: [i64; 3]) -> Result<bool> {
    in_s_zeta(spec, [0, 0, 0], zeta)?;
    let mut hit = false;
    for_each_in_shell(spec, lambda - l, lambda + l, |xi, _| {
        // `zeta` was validated above.
        hit = hit || in_s_zeta(spec, xi, zeta).unwrap_or(false);
    });
    Ok(!hit)
}

/// The resonance-free condition of `Λ_ζ` at `L = λ^{−δ}`; membership in
/// `Λ₂` is the caller's responsibility.
pub fn lambda_zeta_membership(
    spec: &TorusSpec,
    lambda: f64,
    zeta: [i64; 3],
    delta: f64,
) -> Result<bool> {
    resonance_free(spec, lambda, lambda.powf(-delta), zeta)
}

/// Membership in `Λ_J = ∩ Λ_ζ` over `0 < |ζ|² ≤ J`; membership in `Λ₂` is
/// the caller's responsibility.
pub fn lambda_j_membership(spec: &TorusSpec, lambda: f64, j: f64, delta: f64) -> Result<bool> {
    let l = lambda.powf(-delta);
    for z in enumerate_shell(spec, j / 2.0, j / 2.0 + 1e-12) {
        if z.ix != [0, 0, 0] && !resonance_free(spec, lambda, l, z.ix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A representative of the smallest positive norm.
pub fn smallest_nonzero_vector(spec: &TorusSpec) -> Result<[i64; 3]> {
    // Each axis vector has norm `inv[j]`.
    let reach = spec.inv.iter().cloned().fold(f64::INFINITY, f64::min);
    let table = norm_classes_up_to(spec, reach)?;
    Ok(table.classes[1].rep)
}

/// Largest admissible `δ` for the irrational-torus construction:
/// `min{(1 − θ)/2 − ε, 1/τ − ε}` with `τ` from `finite_type_hint` (default 1).
pub fn admissible_delta_ceiling(spec: &TorusSpec, epsilon: f64) -> f64 {
    let tau = spec.finite_type_hint.unwrap_or(1.0);
    ((1.0 - THETA) / 2.0 - epsilon).min(1.0 / tau - epsilon)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum DensitySet {
    Lambda1,
    Lambda2,
    LambdaZeta,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DensityParams {
    pub epsilon: f64,
    pub delta: f64,
    pub zeta: [i64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
#[serde(tag = "warning")]
pub enum Warning {
    AdmissibilityViolation { delta: f64, ceiling: f64 },
}

/// Counts over `X/2^{k+1} < λ ≤ X/2^k`; the last block runs down to 0.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DyadicBlock {
    pub lo: f64,
    pub hi: f64,
    pub members: usize,
    pub complement: usize,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DensityReport {
    pub set_name: DensitySet,
    pub epsilon: f64,
    pub delta: f64,
    pub zeta: Option<[i64; 3]>,
    pub x: f64,
    pub member_count: usize,
    /// `#(Λ_φ ∩ [0, X])`.
    pub total_count: usize,
    /// 1 when the range is empty.
    pub fraction: f64,
    pub empty_range: bool,
    pub blocks: Vec<DyadicBlock>,
    pub warnings: Vec<Warning>,
}

fn dyadic_edges(x: f64) -> Vec<(f64, f64)> {
    let mut edges = Vec::new();
    let mut hi = x;
    while hi / 2.0 >= 1.0 {
        edges.push((hi / 2.0, hi));
        hi /= 2.0;
    }
    edges.push((0.0, hi));
    edges
}

fn report(
    set_name: DensitySet,
    params: &DensityParams,
    x: f64,
    lambdas: &[f64],
    flags: &[bool],
    warnings: &[Warning],
) -> DensityReport {
    let total_count = lambdas.len();
    let member_count = flags.iter().filter(|&&f| f).count();
    let blocks = dyadic_edges(x)
        .into_iter()
        .map(|(lo, hi)| {
            let inside = |l: f64| (l > lo || lo == 0.0) && l <= hi;
            let (mut members, mut complement) = (0, 0);
            for (&l, &f) in lambdas.iter().zip(flags) {
                if inside(l) {
                    if f {
                        members += 1
                    } else {
                        complement += 1
                    }
                }
            }
            DyadicBlock { lo, hi, members, complement }
        })
        .collect();
    DensityReport {
        set_name,
        epsilon: params.epsilon,
        delta: params.delta,
        zeta: (set_name == DensitySet::LambdaZeta).then_some(params.zeta),
        x,
        member_count,
        total_count,
        fraction: if total_count == 0 { 1.0 } else { member_count as f64 / total_count as f64 },
        empty_range: total_count == 0,
        blocks,
        warnings: warnings.to_vec(),
    }
}

/// Reports for `Λ₁ ⊇ Λ₂ ⊇ Λ_ζ` over `Λ_φ ∩ [0, X]`, in that order.
pub fn density_reports(
    spec: &TorusSpec,
    spectrum: &Spectrum,
    params: &DensityParams,
    x: f64,
) -> Result<Vec<DensityReport>> {
    let ceiling = admissible_delta_ceiling(spec, params.epsilon);
    let warnings: Vec<Warning> = if params.delta >= ceiling {
        vec![Warning::AdmissibilityViolation { delta: params.delta, ceiling }]
    } else {
        Vec::new()
    };
    let ks: Vec<usize> =
        (0..spectrum.values.len()).filter(|&k| (0.0..=x).contains(&spectrum.values[k])).collect();
    let flags = ks
        .par_iter()
        .map(|&k| {
            let in1 = lambda1_membership(spectrum, k, params.epsilon)?;
            let in2 = in1 && lambda2_membership(spectrum, k, params.epsilon, params.delta)?;
            let inz = in2
                && lambda_zeta_membership(spec, spectrum.values[k], params.zeta, params.delta)?;
            Ok([in1, in2, inz])
        })
        .collect::<Result<Vec<[bool; 3]>>>()?;
    let lambdas: Vec<f64> = ks.iter().map(|&k| spectrum.values[k]).collect();
    let sets = [DensitySet::Lambda1, DensitySet::Lambda2, DensitySet::LambdaZeta];
    Ok(sets
        .iter()
        .enumerate()
        .map(|(i, &set)| {
            let f: Vec<bool> = flags.iter().map(|row| row[i]).collect();
            report(set, params, x, &lambdas, &f, &warnings)
        })
        .collect())
}

pub fn density_report(
    spec: &TorusSpec,
    spectrum: &Spectrum,
    set: DensitySet,
    params: &DensityParams,
    x: f64,
) -> Result<DensityReport> {
    let all = density_reports(spec, spectrum, params, x)?;
    Ok(all.into_iter().find(|r| r.set_name == set).expect("all sets are reported"))
}
