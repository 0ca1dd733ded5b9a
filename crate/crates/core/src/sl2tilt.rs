//! Tilting modules of SL2: the tensor ideal chain `I_1 ⊃ I_2 ⊃ ⋯`, tensor
//! product decompositions and dimensions of Hom spaces.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::charring::{decompose, tilting_char, Basis, BasisDecomp, LaurentPoly};
use crate::error::{Error, Result};
use crate::prime::Prime;

/// Position of `T_a` in the ideal chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealLevel {
    /// Not in `I_1`.
    Unit,
    /// In `I_n` but not in `I_{n+1}`.
    Level(u32),
}

impl IdealLevel {
    /// Depth in the chain; `Unit` is 0.
    pub fn depth(self) -> u32 {
        match self {
            IdealLevel::Unit => 0,
            IdealLevel::Level(n) => n,
        }
    }
}

impl fmt::Display for IdealLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealLevel::Unit => f.write_str("unit"),
            IdealLevel::Level(n) => write!(f, "I{n}"),
        }
    }
}

/// `T_a ∈ I_n` iff `a >= p^n - 1`.
pub fn in_ideal(a: u64, p: Prime, n: u32) -> bool {
    match p.pow(n) {
        Ok(q) => a >= q - 1,
        Err(_) => false,
    }
}

/// `T_a ∈ J_n` iff `a >= p^{n-1} - 1`. For SL2, `J_{n+1} = I_n`.
pub fn in_j_ideal(a: u64, p: Prime, n: u32) -> bool {
    n == 0 || in_ideal(a, p, n - 1)
}

pub fn ideal_level(a: u64, p: Prime) -> IdealLevel {
    let mut n = 0;
    while in_ideal(a, p, n + 1) {
        n += 1;
    }
    if n == 0 {
        IdealLevel::Unit
    } else {
        IdealLevel::Level(n)
    }
}

/// A direct sum `⊕ T_a^{m_a}` of indecomposable tilting modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingSum {
    #[serde(with = "crate::charring::terms_serde")]
    pub terms: BTreeMap<u64, BigUint>,
}

impl TiltingSum {
    /// Decomposes `ch` in the tilting basis and checks that the summands
    /// reproduce it.
    pub fn from_character(ch: &LaurentPoly, p: Prime) -> Result<Self> {
        let d = decompose(ch, Basis::Tilting, p)?;
        if &d.recompose(p) != ch {
            return Err(Error::NotInNonnegativeSpan {
                basis: Basis::Tilting.name(),
                detail: "summands do not reproduce the character".into(),
            });
        }
        Ok(TiltingSum { terms: d.terms })
    }

    pub fn character(&self, p: Prime) -> LaurentPoly {
        BasisDecomp {
            basis: Basis::Tilting,
            terms: self.terms.clone(),
        }
        .recompose(p)
    }

    pub fn multiplicity(&self, a: u64) -> BigUint {
        self.terms.get(&a).cloned().unwrap_or_default()
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    /// Lowest ideal level among the summands; `None` for the zero module.
    pub fn min_level(&self, p: Prime) -> Option<IdealLevel> {
        self.indices().map(|a| ideal_level(a, p)).min()
    }
}

/// Decomposes `⊗_k T_{a_k}^{⊗ m_k}` into indecomposable tiltings.
pub fn tensor_decompose(factors: &[(u64, u32)], p: Prime) -> Result<TiltingSum> {
    let ch: LaurentPoly = factors
        .iter()
        .map(|&(a, m)| tilting_char(a, p).pow(m))
        .product();
    TiltingSum::from_character(&ch, p)
}

/// `dim Hom(T_a, T_b) = Σ_k (T_a : Δ_k)(T_b : Δ_k)`.
pub fn hom_dim(a: u64, b: u64, p: Prime) -> BigUint {
    let da = weyl_factors(a, p);
    let db = weyl_factors(b, p);
    da.terms
        .iter()
        .filter_map(|(k, m)| db.terms.get(k).map(|n| m * n))
        .sum()
}

/// Weyl filtration multiplicities of `T_a`.
pub fn weyl_factors(a: u64, p: Prime) -> BasisDecomp {
    decompose(&tilting_char(a, p), Basis::Weyl, p).expect("tilting modules have Weyl filtrations")
}

/// Indices `b` in `[p^{n-1} - 1, p^n - 2]` with `(T_b : Δ_0) != 0`, i.e. the
/// indecomposables of `J_n \ I_n` with the unit in their socle.
pub fn socle_unit_test(p: Prime, n: u32) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::InvalidLevel(n));
    }
    let lo = p.pow(n - 1)? - 1;
    let hi = p.pow(n)? - 2;
    Ok((lo..=hi)
        .filter(|&b| weyl_factors(b, p).terms.contains_key(&0))
        .collect())
}
