//! Characters of SL2-modules and conversion between the Weyl, simple and
//! tilting bases.
//!
//! All three bases are unitriangular with respect to the highest weight, so
//! a character is decomposed greedily by peeling off its top term.

mod laurent;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

pub use laurent::LaurentPoly;

/// One of the three highest-weight bases of the SL2 character ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Weyl,
    Simple,
    Tilting,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Weyl => "weyl",
            Basis::Simple => "simple",
            Basis::Tilting => "tilting",
        }
    }

    /// Character of the basis element of highest weight `a`.
    pub fn character(self, a: u64, p: Prime) -> LaurentPoly {
        match self {
            Basis::Weyl => weyl_char(a),
            Basis::Simple => simple_char(a, p),
            Basis::Tilting => tilting_char(a, p),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weyl" => Ok(Basis::Weyl),
            "simple" => Ok(Basis::Simple),
            "tilting" => Ok(Basis::Tilting),
            other => Err(Error::Parse(format!("unknown basis `{other}`"))),
        }
    }
}

/// Multiplicities of basis elements in a character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDecomp {
    pub basis: Basis,
    #[serde(with = "terms_serde")]
    pub terms: BTreeMap<u64, BigUint>,
}

impl BasisDecomp {
    pub fn multiplicity(&self, index: u64) -> BigUint {
        self.terms.get(&index).cloned().unwrap_or_default()
    }

    /// Multiplicity as a machine integer; saturates on absurdly large values.
    pub fn mult_u64(&self, index: u64) -> u64 {
        self.terms
            .get(&index)
            .map_or(0, |m| m.to_u64().unwrap_or(u64::MAX))
    }

    pub fn indices(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    /// `Σ m_a · ch(basis_a)`.
    pub fn recompose(&self, p: Prime) -> LaurentPoly {
        self.terms
            .iter()
            .map(|(&a, m)| {
                self.basis
                    .character(a, p)
                    .scale_shift(&BigInt::from(m.clone()), 0)
            })
            .sum()
    }
}

/// Serializes index → multiplicity maps as ascending `[index, "mult"]` pairs.
pub(crate) mod terms_serde {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use num_traits::Zero;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<u64, BigUint>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(u64, String)> = terms.iter().map(|(&a, m)| (a, m.to_string())).collect();
        pairs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, BigUint>, D::Error> {
        let pairs = Vec::<(u64, String)>::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (a, m) in pairs {
            let m: BigUint = m
                .parse()
                .map_err(|_| D::Error::custom(format!("bad multiplicity `{m}`")))?;
            if m.is_zero() {
                return Err(D::Error::custom("zero multiplicities are not stored"));
            }
            if out.insert(a, m).is_some() {
                return Err(D::Error::custom(format!("duplicate index {a}")));
            }
        }
        Ok(out)
    }
}

fn exp_of(a: u64) -> i64 {
    i64::try_from(a).expect("highest weight exceeds i64")
}

/// Character of the Weyl module `Δ_a`: `x^a + x^{a-2} + ... + x^{-a}`.
pub fn weyl_char(a: u64) -> LaurentPoly {
    LaurentPoly::symmetric_string(exp_of(a))
}

/// Base-`p` digits of `a`, least significant first. `digits(0) == []`.
pub fn base_p_digits(mut a: u64, p: Prime) -> Vec<u64> {
    let p = p.get();
    let mut digits = Vec::new();
    while a > 0 {
        digits.push(a % p);
        a /= p;
    }
    digits
}

/// Character of the simple module `L_a`, by Steinberg's tensor product
/// theorem: `∏_k ch Δ_{a_k}(x^{p^k})` over the base-`p` digits of `a`.
pub fn simple_char(a: u64, p: Prime) -> LaurentPoly {
    let mut scale: i64 = 1;
    let mut ch = LaurentPoly::one();
    for d in base_p_digits(a, p) {
        if d > 0 {
            ch = &ch * &weyl_char(d).substitute_power(scale);
        }
        scale = scale.saturating_mul(p.get() as i64);
    }
    ch
}

/// Largest `r` with `p^r - 1 <= a`.
fn donkin_level(a: u64, p: Prime) -> (u32, u64) {
    let p = p.get();
    let mut r = 0;
    let mut q: u64 = 1;
    while let Some(next) = q.checked_mul(p) {
        if next - 1 > a {
            break;
        }
        q = next;
        r += 1;
    }
    (r, q)
}

/// Character of the indecomposable tilting module `T_a`.
///
/// For `a <= p - 1` this is `Δ_a`; for `p <= a <= 2p - 2` it is
/// `Δ_a + Δ_{2p-2-a}`. Larger `a` use Donkin's tensor product theorem with
/// the maximal `r` such that `p^r - 1 <= a`.
pub fn tilting_char(a: u64, p: Prime) -> LaurentPoly {
    let pv = p.get();
    if a < pv {
        return weyl_char(a);
    }
    if a <= 2 * pv - 2 {
        return &weyl_char(a) + &weyl_char(2 * pv - 2 - a);
    }
    let (r, q) = donkin_level(a, p);
    // a = c + q b with q - 1 <= c <= 2q - 2 and b <= p - 2
    let b = (a + 1 - q) / q;
    if b > 0 {
        let c = a - q * b;
        return &tilting_char(c, p) * &frobenius_twist(&tilting_char(b, p), r, p);
    }
    // a in [p^r - 1, 2p^r - 2] with r >= 2: split at level r - 1, where the
    // twisted factor has index in [p - 1, 2p - 2]
    let q = q / pv;
    let b = (a + 1 - q) / q;
    let c = a - q * b;
    debug_assert!(q - 1 <= c && c <= 2 * q - 2 && pv - 1 <= b && b <= 2 * pv - 2);
    &tilting_char(c, p) * &frobenius_twist(&tilting_char(b, p), r - 1, p)
}

/// Substitutes `x ↦ x^{p^r}` (the character of the `r`-th Frobenius twist).
pub fn frobenius_twist(f: &LaurentPoly, r: u32, p: Prime) -> LaurentPoly {
    let k = p
        .pow(r)
        .ok()
        .and_then(|k| i64::try_from(k).ok())
        .expect("Frobenius twist exponent overflows i64");
    f.substitute_power(k)
}

/// Greedy decomposition of `f` in the given basis.
///
/// Fails with [`Error::NotInNonnegativeSpan`] if a negative multiplicity
/// shows up or a nonzero remainder has no admissible top weight.
pub fn decompose(f: &LaurentPoly, basis: Basis, p: Prime) -> Result<BasisDecomp> {
    let mut rem = f.clone();
    let mut terms = BTreeMap::new();
    let fail = |detail: String| Error::NotInNonnegativeSpan {
        basis: basis.name(),
        detail,
    };
    while let Some((top, m)) = rem.leading() {
        if top < 0 {
            return Err(fail(format!("remainder has top exponent {top}")));
        }
        let m = match m.sign() {
            Sign::Plus => m.clone(),
            _ => return Err(fail(format!("multiplicity {m} at index {top}"))),
        };
        let a = top as u64;
        rem = &rem - &basis.character(a, p).scale_shift(&m, 0);
        terms.insert(a, m.to_biguint().unwrap());
    }
    Ok(BasisDecomp { basis, terms })
}

fn check_character(f: &LaurentPoly) -> Result<()> {
    match f.terms().find(|(_, c)| c.is_negative()) {
        Some((e, _)) => Err(Error::NotACharacter(e)),
        None => Ok(()),
    }
}

/// Generating-function DP for symmetric (`sym = true`) or exterior powers.
///
/// Each weight `e` of multiplicity `m` contributes the factor
/// `Σ_j C(m+j-1, j) t^j x^{je}` (sym) or `Σ_j C(m, j) t^j x^{je}` (ext).
fn power_char(f: &LaurentPoly, r: usize, sym: bool) -> Result<LaurentPoly> {
    check_character(f)?;
    let mut dp: Vec<LaurentPoly> = vec![LaurentPoly::zero(); r + 1];
    dp[0] = LaurentPoly::one();
    for (e, m) in f.terms() {
        let mut weights = vec![BigInt::one()];
        for j in 1..=r {
            let j_big = BigInt::from(j);
            let num: BigInt = if sym {
                m + &j_big - 1
            } else {
                m - &j_big + 1
            };
            if num.is_zero() {
                break;
            }
            weights.push(&weights[j - 1] * num / j_big);
        }
        let mut next = vec![LaurentPoly::zero(); r + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            for (j, w) in weights.iter().enumerate().take(k + 1) {
                if !dp[k - j].is_zero() {
                    *slot = &*slot + &dp[k - j].scale_shift(w, e * j as i64);
                }
            }
        }
        dp = next;
    }
    Ok(dp.swap_remove(r))
}

/// Character of `Sym^r X` where `f = ch X`.
pub fn sym_power_char(f: &LaurentPoly, r: usize) -> Result<LaurentPoly> {
    power_char(f, r, true)
}

/// Character of `Λ^r X` where `f = ch X`.
pub fn ext_power_char(f: &LaurentPoly, r: usize) -> Result<LaurentPoly> {
    power_char(f, r, false)
}

/// Dimension of the module with character `f` (its value at 1).
pub fn dimension(f: &LaurentPoly) -> BigInt {
    f.eval_at_one()
}

#[cfg(test)]
pub(crate) fn big(n: u64) -> BigUint {
    BigUint::from(n)
}
