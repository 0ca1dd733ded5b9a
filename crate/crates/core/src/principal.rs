//! Restriction along a principal SL2: the weight map `φ*`, principally
//! specialized Weyl characters and the ideal level of restricted Steinberg
//! modules.

use serde::{Deserialize, Serialize};

use crate::charring::LaurentPoly;
use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::rootdatum::{GWeight, RootDatum};
use crate::sl2tilt::TiltingSum;

/// A root datum together with `φ*(α) = 2 ht(α)` on its positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalMap {
    pub datum: RootDatum,
    pub phi_star_roots: Vec<i64>,
}

impl PrincipalMap {
    pub fn new(datum: RootDatum) -> Self {
        let phi_star_roots = datum
            .components
            .iter()
            .flat_map(|c| c.positive_roots.iter().map(|r| 2 * r.iter().sum::<i64>()))
            .collect();
        PrincipalMap { datum, phi_star_roots }
    }

    /// `φ*(λ) = Σ_{α > 0} ⟨λ, α∨⟩`.
    pub fn phi_star(&self, lambda: &GWeight) -> Result<i64> {
        self.datum.check_rank(lambda)?;
        Ok(self.datum.positive_coroots().map(|c| self.datum.pair(lambda, c)).sum())
    }

    /// Principal specialization of the Weyl character `χ(λ)`, by the product
    /// formula over positive coroots.
    pub fn weyl_restriction_char(&self, lambda: &GWeight) -> Result<LaurentPoly> {
        self.datum.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.0.clone()));
        }
        let rho = self.datum.rho();
        let shifted = GWeight(lambda.0.iter().map(|c| c + 1).collect());
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        for c in self.datum.positive_coroots() {
            num = num * odd_factor(self.datum.pair(&shifted, c));
            den = den * odd_factor(self.datum.pair(&rho, c));
        }
        num.div_exact(&den)
    }

    /// `g(x) = ∏_{α > 0} (x^{φ*(α)/2} - x^{-φ*(α)/2})`.
    pub fn g(&self) -> LaurentPoly {
        self.phi_star_roots.iter().map(|&k| odd_factor(k / 2)).product()
    }

    /// Restriction of `St_n`: `g(x^{p^n}) / g(x)`.
    pub fn steinberg_restriction(&self, p: Prime, n: u32) -> Result<LaurentPoly> {
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        self.datum.check_prime(p)?;
        let q = p.pow(n)?;
        let g = self.g();
        g.substitute_power(q as i64).div_exact(&g)
    }

    /// Whether the restriction of `T(λ) = Δ(λ)`, `λ ∈ Ā`, lies in `I_1(SL2)`
    /// exactly when `λ ∉ A`.
    pub fn alcove_criterion_check(&self, lambda: &GWeight, p: Prime) -> Result<bool> {
        if !self.datum.alcove_test(lambda, p, true)? {
            return Err(Error::NotInClosedAlcove(lambda.0.clone()));
        }
        let outside_open = !self.datum.alcove_test(lambda, p, false)?;
        let f = self.weyl_restriction_char(lambda)?;
        let (in_i1, _) = restriction_ideal_level(&f, p, 1)?;
        Ok(in_i1 == outside_open)
    }
}

/// `x^k - x^{-k}`.
fn odd_factor(k: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(k, 1), (-k, -1)])
}

/// Ideal level of a restricted tilting character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionLevel {
    /// Every summand `T_a` has `a >= p^n - 1`.
    pub all_at_least: bool,
    /// Some summand `T_a` has `a < p^{n+1} - 1`.
    pub some_below_next: bool,
}

/// Decomposes `f` into SL2 tiltings and compares the summands with the
/// thresholds of `I_n` and `I_{n+1}`.
pub fn restriction_ideal_level(f: &LaurentPoly, p: Prime, n: u32) -> Result<(bool, bool)> {
    let sum = TiltingSum::from_character(f, p).map_err(|e| Error::PromiseViolated(format!("not a tilting character: {e}")))?;
    let lower = p.pow(n)? - 1;
    let upper = p.pow(n + 1).map(|q| q - 1).unwrap_or(u64::MAX);
    let all_at_least = sum.indices().all(|a| a >= lower);
    let some_below_next = sum.indices().any(|a| a < upper);
    Ok((all_at_least, some_below_next))
}

impl From<(bool, bool)> for RestrictionLevel {
    fn from((all_at_least, some_below_next): (bool, bool)) -> Self {
        RestrictionLevel {
            all_at_least,
            some_below_next,
        }
    }
}
