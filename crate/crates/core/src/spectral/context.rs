use super::polesum::PoleSum;
use super::tail::{tail_integral, tail_main, TailKind, DEFAULT_C_REM};
use super::{Result, SpectralError};
use crate::lattice::{norm_classes_up_to, NormTable, TorusSpec};
use std::f64::consts::PI;

/// Numerical settings shared by the spectral operations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpectralOptions {
    /// Minimum relative distance `|λ − n|/max(1, n)` to any norm.
    pub pole_guard: f64,
    /// Weyl-remainder constant used in tail bounds.
    pub c_rem: f64,
    /// Head/tail split `T = max(split_factor·X, min_split)`.
    pub split_factor: f64,
    pub min_split: f64,
    /// Roots are refined until `|F(λ) − target| ≤ residual_tol·max(1, |target|)`.
    pub residual_tol: f64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            pole_guard: 1e-12,
            c_rem: DEFAULT_C_REM,
            split_factor: 4.0,
            min_split: 1e3,
            residual_tol: 1e-10,
        }
    }
}

/// `c₀ = Σ_ξ 1/(|ξ|⁴ + 1)` split into a partial sum and a tail estimate.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct RegularizationConstant {
    pub cutoff: f64,
    /// Exact sum over `|ξ|² ≤ cutoff`.
    pub partial: f64,
    pub tail: f64,
    pub tail_bound: f64,
}

impl RegularizationConstant {
    pub fn value(&self) -> f64 {
        self.partial + self.tail
    }
}

fn reg_from_table(table: &NormTable, cutoff: f64, c_rem: f64) -> Result<RegularizationConstant> {
    let partial = table
        .values
        .iter()
        .zip(&table.weights)
        .take_while(|(n, _)| **n <= cutoff)
        .map(|(n, w)| w / (n * n + 1.0))
        .sum();
    let t = tail_integral(TailKind::InvQuarticPlus, cutoff, &table.spec, c_rem)?;
    Ok(RegularizationConstant { cutoff, partial, tail: t.value, tail_bound: t.error_bound() })
}

pub fn regularization_constant(
    spec: &TorusSpec,
    cutoff: f64,
    c_rem: f64,
) -> Result<RegularizationConstant> {
    let table = norm_classes_up_to(spec, cutoff)?;
    reg_from_table(&table, cutoff, c_rem)
}

/// Immutable state for one torus and one phase `φ`.
#[derive(Debug, Clone)]
pub struct SpectralContext {
    pub spec: TorusSpec,
    pub phi: f64,
    pub c0: RegularizationConstant,
    /// `c₀·tan(φ/2)`.
    pub target: f64,
    /// Largest λ the context is built for.
    pub ceiling: f64,
    /// Head/tail split `T`; the table holds every norm `≤ T`.
    pub split: f64,
    pub table: NormTable,
    pub options: SpectralOptions,
    poles: PoleSum,
    /// `Σ_{n ≤ T} r(n)·n/(n² + 1)`.
    head_const: f64,
}

/// Value of `F(λ)` with the error bound inherited from the tail.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SecularValue {
    pub value: f64,
    pub error_bound: f64,
}

impl SpectralContext {
    pub fn new(spec: &TorusSpec, phi: f64, ceiling: f64) -> Result<SpectralContext> {
        SpectralContext::with_options(spec, phi, ceiling, SpectralOptions::default())
    }

    pub fn with_options(
        spec: &TorusSpec,
        phi: f64,
        ceiling: f64,
        options: SpectralOptions,
    ) -> Result<SpectralContext> {
        if !(phi.abs() < PI - 1e-6) {
            return Err(SpectralError::ExcludedPhase(phi));
        }
        if !(ceiling.is_finite() && ceiling >= 0.0) {
            return Err(SpectralError::OutOfRange("ceiling must be finite and nonnegative"));
        }
        let split = (options.split_factor * ceiling).max(options.min_split);
        let table = norm_classes_up_to(spec, split)?;
        let c0 = reg_from_table(&table, split, options.c_rem)?;
        let head_const = table
            .values
            .iter()
            .zip(&table.weights)
            .map(|(n, w)| w * n / (n * n + 1.0))
            .sum();
        let poles = PoleSum::new(table.values.clone(), table.weights.clone());
        Ok(SpectralContext {
            spec: spec.clone(),
            phi,
            target: c0.value() * (phi / 2.0).tan(),
            c0,
            ceiling,
            split,
            table,
            options,
            poles,
            head_const,
        })
    }

    /// Minimum admissible distance from `λ` to the norm `n`.
    pub fn guard(&self, n: f64) -> f64 {
        self.options.pole_guard * n.abs().max(1.0)
    }

    pub(crate) fn check_pole(&self, lambda: f64) -> Result<()> {
        let v = &self.table.values;
        let i = v.partition_point(|&n| n < lambda);
        for j in [i.wrapping_sub(1), i] {
            if let Some(&n) = v.get(j) {
                if (lambda - n).abs() < self.guard(n) {
                    return Err(SpectralError::PoleProximity { lambda, norm: n });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_domain(&self, lambda: f64) -> Result<()> {
        if lambda + 1.0 >= self.split {
            return Err(SpectralError::TailDomain { from: self.split, lambda });
        }
        self.check_pole(lambda)
    }

    /// `(F(λ), F′(λ))` without error bounds; used by the root finder.
    pub(crate) fn secular_with_derivative(&self, lambda: f64) -> (f64, f64) {
        let (s0, s1) = self.poles.eval(lambda);
        let (t0, _) = tail_main(TailKind::Secular { lambda }, self.split, &self.spec);
        let (t1, _) = tail_main(TailKind::InvSq { lambda }, self.split, &self.spec);
        (s0 - self.head_const + t0, s1 + t1)
    }

    /// `Σ_{n ≤ T} r(n)/(n − λ)²`.
    pub(crate) fn head_inv_sq(&self, lambda: f64) -> f64 {
        self.poles.eval(lambda).1
    }

    /// `F(λ) = Σ_n r(n){1/(n − λ) − n/(n² + 1)}`.
    pub fn secular_f(&self, lambda: f64) -> Result<SecularValue> {
        self.check_domain(lambda)?;
        let (s0, _) = self.poles.eval(lambda);
        let tail = tail_integral(TailKind::Secular { lambda }, self.split, &self.spec, self.options.c_rem)?;
        let rounding = 1e-15 * (s0.abs() + self.head_const);
        Ok(SecularValue {
            value: s0 - self.head_const + tail.value,
            error_bound: tail.error_bound() + rounding,
        })
    }
}
