//! Vanishing of characters at primitive prime-power roots of unity, by
//! reduction modulo the cyclotomic polynomial over ℤ.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charring::LaurentPoly;
use crate::error::{Error, Result};
use crate::prime::Prime;

/// Selects the root of unity attached to the ideal `I_n`: a primitive
/// `p^n`-th root for odd `p`, a primitive `2^{n+1}`-th root for `p = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicIndex {
    pub p: Prime,
    pub n: u32,
}

impl CyclotomicIndex {
    pub fn new(p: Prime, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLevel(n));
        }
        let idx = CyclotomicIndex { p, n };
        idx.order()?;
        Ok(idx)
    }

    /// Order `m` of the root of unity.
    pub fn order(&self) -> Result<u64> {
        if self.p.get() == 2 {
            self.p.pow(self.n + 1)
        } else {
            self.p.pow(self.n)
        }
    }

    /// Exponents carrying coefficient 1 in `Φ_m`. For `m = q^k`,
    /// `Φ_m(x) = Σ_{j<q} x^{j q^{k-1}}`; for `q = 2` that is `1 + x^{m/2}`.
    pub fn phi_support(&self) -> Vec<usize> {
        let m = self.order().expect("validated on construction") as usize;
        let q = self.p.get() as usize;
        let step = m / q;
        (0..q).map(|j| j * step).collect()
    }

    pub fn phi(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.phi_support().into_iter().map(|e| (e as i64, 1)))
    }
}

/// Remainder of `x^N f(x)` modulo `Φ_m`, as a dense coefficient vector of
/// length `deg Φ_m`, where `N` clears the negative exponents of `f`.
pub fn reduce_mod_phi(f: &LaurentPoly, idx: CyclotomicIndex) -> Vec<BigInt> {
    let support = idx.phi_support();
    let deg = *support.last().unwrap();
    let Some(lo) = f.min_exp() else {
        return vec![BigInt::zero(); deg];
    };
    let hi = f.max_exp().unwrap();
    let len = ((hi - lo) as usize + 1).max(deg);
    let mut dense = vec![BigInt::zero(); len];
    for (e, c) in f.terms() {
        dense[(e - lo) as usize] = c.clone();
    }
    // Φ_m is monic, so each top coefficient is eliminated exactly over ℤ.
    for top in (deg..len).rev() {
        if dense[top].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[top]);
        let shift = top - deg;
        for &s in &support[..support.len() - 1] {
            dense[shift + s] -= &c;
        }
    }
    dense.truncate(deg);
    dense
}

/// Whether `f(ω) = 0` for a primitive root of unity `ω` of the order given
/// by `idx`.
pub fn vanishes_at_root(f: &LaurentPoly, idx: CyclotomicIndex) -> bool {
    reduce_mod_phi(f, idx).iter().all(Zero::is_zero)
}
