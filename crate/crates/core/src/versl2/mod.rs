//! The combinatorial model of `Ver_{p^n}`.
//!
//! `Ver_{p^n}` is the Serre quotient of the category `A_n` of SL2-modules
//! with composition factors `L_i`, `i < p^n - 1`, by the subcategory `B_n`
//! generated by `L_i` for `(p-1)p^{n-1} <= i < p^n - 1`. The surviving simples
//! keep their SL2 labels `0 <= i < (p-1)p^{n-1}`, and the projective cover of
//! `L_i` is the image of a tilting module `T_a` with `a` in the window
//! `[p^{n-1} - 1, p^n - 2]`.
//!
//! Composition multiplicities are read off from SL2 characters by deleting
//! the killed simples. Products of projectives come from tilting tensor
//! products with the summands in `I_n` dropped; fusion rules of simples are
//! then recovered by inverting the Cartan matrix over ℚ and checked for
//! integrality, positivity, commutativity, associativity and unitality.

mod linalg;

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charring::{decompose, simple_char, tilting_char, Basis, LaurentPoly};
use crate::error::{Error, Result};
use crate::prime::Prime;
use crate::sl2tilt::{tensor_decompose, TiltingSum};

pub use linalg::invert;

/// Parameters `(p, n)` of `Ver_{p^n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VerCtx {
    pub p: Prime,
    pub n: u32,
}

impl VerCtx {
    pub fn new(p: Prime, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidLevel(n));
        }
        // p^{n+1} must fit so that the Frobenius embedding target exists
        p.pow(n + 1)?;
        Ok(VerCtx { p, n })
    }

    /// `p^{n-1}`.
    pub fn q(&self) -> u64 {
        self.p.get().pow(self.n - 1)
    }

    /// `(p - 1) p^{n-1}`.
    pub fn num_simples(&self) -> u64 {
        (self.p.get() - 1) * self.q()
    }

    /// Tilting indices whose images are the indecomposable projectives.
    pub fn projective_window(&self) -> RangeInclusive<u64> {
        let q = self.q();
        (q - 1)..=(self.p.get() * q - 2)
    }

    /// `p^n - 1`: tilting modules from here on lie in `I_n`, and simple SL2
    /// modules from here on are outside `A_n`.
    pub fn ideal_bound(&self) -> u64 {
        self.p.get() * self.q() - 1
    }

    /// The context one level up, `Ver_{p^{n+1}}`.
    pub fn next(&self) -> Result<VerCtx> {
        VerCtx::new(self.p, self.n + 1)
    }

    fn check_simple(&self, i: u64) -> Result<()> {
        if i < self.num_simples() {
            Ok(())
        } else {
            Err(Error::BadSimpleIndex {
                index: i,
                num_simples: self.num_simples(),
            })
        }
    }
}

/// An element `Σ c_i [L_i]` of the Grothendieck group of `Ver_{p^n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerClass {
    #[serde(with = "bigint_strings")]
    pub coeffs: Vec<BigInt>,
}

impl VerClass {
    pub fn zero(ctx: &VerCtx) -> Self {
        VerClass {
            coeffs: vec![BigInt::zero(); ctx.num_simples() as usize],
        }
    }

    pub fn simple(ctx: &VerCtx, i: u64) -> Result<Self> {
        ctx.check_simple(i)?;
        let mut c = Self::zero(ctx);
        c.coeffs[i as usize] = BigInt::one();
        Ok(c)
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        VerClass {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// Total dimension `Σ c_i dim L_i` (as SL2-modules).
    pub fn dimension(&self, ctx: &VerCtx) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * simple_char(i as u64, ctx.p).eval_at_one())
            .sum()
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| s.parse().map_err(|_| D::Error::custom(format!("bad integer `{s}`"))))
            .collect()
    }
}

/// Image in `Ver_{p^n}` of the SL2-module with character `f`, which must
/// lie in `A_n`: composition factors with the killed simples removed.
pub fn image_comp_factors(f: &LaurentPoly, ctx: &VerCtx) -> Result<VerClass> {
    let d = decompose(f, Basis::Simple, ctx.p)?;
    let bound = ctx.ideal_bound();
    if let Some(&index) = d.terms.keys().find(|&&a| a >= bound) {
        return Err(Error::NotInAn { index, bound });
    }
    let mut class = VerClass::zero(ctx);
    for (&a, m) in d.terms.range(..ctx.num_simples()) {
        class.coeffs[a as usize] = BigInt::from(m.clone());
    }
    Ok(class)
}

/// Tilting index `a` such that the image of `T_a` is the projective cover
/// of `L_i`: with `i = c + p^{n-1} d`, `a = 2(p^{n-1} - 1) - c + p^{n-1} d`.
pub fn projective_of(i: u64, ctx: &VerCtx) -> Result<u64> {
    ctx.check_simple(i)?;
    let q = ctx.q();
    let (d, c) = i.div_rem(&q);
    Ok(2 * (q - 1) - c + q * d)
}

/// Inverse of [`projective_of`] on the projective window.
pub fn simple_of_projective(a: u64, ctx: &VerCtx) -> Option<u64> {
    if !ctx.projective_window().contains(&a) {
        return None;
    }
    let q = ctx.q();
    let (d, off) = (a - (q - 1)).div_rem(&q);
    Some(q - 1 - off + q * d)
}

/// `C[i][j] = [P(L_i) : L_j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub p: Prime,
    pub n: u32,
    pub rows: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn is_symmetric(&self) -> bool {
        let s = self.rows.len();
        (0..s).all(|i| (0..s).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn row_class(&self, i: usize) -> VerClass {
        VerClass::from_u64(&self.rows[i])
    }

    fn as_bigint(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

fn class_to_u64(class: &VerClass) -> Result<Vec<u64>> {
    class
        .coeffs
        .iter()
        .map(|c| c.to_u64().ok_or(Error::Overflow("Cartan entry")))
        .collect()
}

pub fn cartan_matrix(ctx: &VerCtx) -> Result<CartanMatrix> {
    let rows = (0..ctx.num_simples())
        .into_par_iter()
        .map(|i| {
            let a = projective_of(i, ctx)?;
            class_to_u64(&image_comp_factors(&tilting_char(a, ctx.p), ctx)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CartanMatrix {
        p: ctx.p,
        n: ctx.n,
        rows,
    })
}

/// Structure constants `N_{ij}^k` of the Grothendieck ring in the basis of
/// simple classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTable {
    pub p: Prime,
    pub n: u32,
    /// Dimensions of the simples `L_i` as SL2-modules.
    #[serde(with = "biguint_strings")]
    pub simples: Vec<BigUint>,
    #[serde(rename = "N")]
    pub structure: Vec<Vec<Vec<u64>>>,
}

mod biguint_strings {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| s.parse().map_err(|_| D::Error::custom(format!("bad integer `{s}`"))))
            .collect()
    }
}

impl FusionTable {
    pub fn ctx(&self) -> VerCtx {
        VerCtx {
            p: self.p,
            n: self.n,
        }
    }

    pub fn size(&self) -> usize {
        self.structure.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.structure[i][j][k]
    }

    /// `[L_i][L_j]` as a class.
    pub fn product_of_simples(&self, i: usize, j: usize) -> VerClass {
        VerClass::from_u64(&self.structure[i][j])
    }

    /// Product of two arbitrary classes.
    pub fn multiply(&self, x: &VerClass, y: &VerClass) -> VerClass {
        let s = self.size();
        let mut out = vec![BigInt::zero(); s];
        for (i, xi) in x.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let xy = xi * yj;
                for (k, &n) in self.structure[i][j].iter().enumerate() {
                    if n != 0 {
                        out[k] += &xy * n;
                    }
                }
            }
        }
        VerClass { coeffs: out }
    }

    /// Checks unit, commutativity and associativity.
    pub fn verify(&self) -> Result<()> {
        let s = self.size();
        let fail = |msg: String| Err(Error::FusionConsistency(msg));
        if self.simples.len() != s
            || self
                .structure
                .iter()
                .any(|row| row.len() != s || row.iter().any(|v| v.len() != s))
        {
            return fail("table is not a cube of the right size".into());
        }
        for j in 0..s {
            for k in 0..s {
                if self.get(0, j, k) != u64::from(j == k) {
                    return fail(format!("N_0{j}^{k} != δ"));
                }
            }
        }
        for i in 0..s {
            for j in 0..i {
                if self.structure[i][j] != self.structure[j][i] {
                    return fail(format!("[L{i}][L{j}] != [L{j}][L{i}]"));
                }
            }
        }
        let bad = (0..s).into_par_iter().find_map_any(|i| {
            for j in 0..s {
                for k in 0..s {
                    for l in 0..s {
                        let lhs: u128 = (0..s)
                            .map(|m| self.get(i, j, m) as u128 * self.get(m, k, l) as u128)
                            .sum();
                        let rhs: u128 = (0..s)
                            .map(|m| self.get(j, k, m) as u128 * self.get(i, m, l) as u128)
                            .sum();
                        if lhs != rhs {
                            return Some((i, j, k, l));
                        }
                    }
                }
            }
            None
        });
        if let Some((i, j, k, l)) = bad {
            return fail(format!("associativity fails at ({i},{j},{k}) -> {l}"));
        }
        Ok(())
    }

    /// One line per `(i, j)`: `i`, `j`, then `N_{ij}^k` for all `k`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("i\tj\tN_ij\n");
        for (i, row) in self.structure.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let ks: Vec<String> = v.iter().map(u64::to_string).collect();
                out.push_str(&format!("{i}\t{j}\t{}\n", ks.join(",")));
            }
        }
        out
    }
}

/// `[F(T_a)] · [F(T_b)]` for projective indices `a`, `b`, as a class:
/// tensor the tilting modules, drop summands in `I_n`, expand survivors by
/// their Cartan rows.
fn projective_product(a: u64, b: u64, ctx: &VerCtx, cartan: &CartanMatrix) -> Result<Vec<BigInt>> {
    let sum: TiltingSum = tensor_decompose(&[(a, 1), (b, 1)], ctx.p)?;
    let mut out = vec![BigInt::zero(); cartan.rows.len()];
    for (&c, m) in &sum.terms {
        if c >= ctx.ideal_bound() {
            continue;
        }
        let i = simple_of_projective(c, ctx).ok_or_else(|| {
            Error::FusionConsistency(format!("T{a} ⊗ T{b} has summand T{c} outside J_n"))
        })?;
        let m = BigInt::from(m.clone());
        for (slot, &v) in out.iter_mut().zip(&cartan.rows[i as usize]) {
            *slot += &m * v;
        }
    }
    Ok(out)
}

/// The fusion table of `Ver_{p^n}`. Every structural check runs before the
/// table is returned.
pub fn fusion(ctx: &VerCtx) -> Result<FusionTable> {
    let s = ctx.num_simples() as usize;
    let cartan = cartan_matrix(ctx)?;
    let proj: Vec<u64> = (0..s as u64).map(|i| projective_of(i, ctx)).collect::<Result<_>>()?;

    // pp[k][l] = [P(L_k)][P(L_l)] in the simple basis
    let pairs: Vec<(usize, usize)> = (0..s).flat_map(|k| (k..s).map(move |l| (k, l))).collect();
    let products = pairs
        .par_iter()
        .map(|&(k, l)| projective_product(proj[k], proj[l], ctx, &cartan))
        .collect::<Result<Vec<_>>>()?;
    let mut pp = vec![vec![Vec::new(); s]; s];
    for (&(k, l), v) in pairs.iter().zip(products) {
        pp[l][k] = v.clone();
        pp[k][l] = v;
    }

    // [L_i] = Σ_k S[i][k] [P(L_k)] with S = C^{-1}; clear denominators so
    // the contraction below runs over ℤ.
    let inv = invert(&cartan.as_bigint()).ok_or(Error::CartanSingular {
        p: ctx.p.get(),
        n: ctx.n,
    })?;
    let denom = inv
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let sint: Vec<Vec<BigInt>> = inv
        .iter()
        .map(|row| row.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect();
    let denom2 = &denom * &denom;

    let structure = (0..s)
        .into_par_iter()
        .map(|i| {
            // q[l][t] = Σ_k S[i][k] pp[k][l][t]
            let q: Vec<Vec<BigInt>> = (0..s)
                .map(|l| {
                    (0..s)
                        .map(|t| {
                            (0..s)
                                .filter(|&k| !sint[i][k].is_zero())
                                .map(|k| &sint[i][k] * &pp[k][l][t])
                                .sum()
                        })
                        .collect()
                })
                .collect();
            (0..s)
                .map(|j| {
                    (0..s)
                        .map(|t| {
                            let scaled: BigInt = (0..s)
                                .filter(|&l| !sint[j][l].is_zero())
                                .map(|l| &sint[j][l] * &q[l][t])
                                .sum();
                            let (val, rem) = scaled.div_rem(&denom2);
                            if !rem.is_zero() {
                                return Err(Error::FusionConsistency(format!(
                                    "N_{i}{j}^{t} is not an integer"
                                )));
                            }
                            if val.is_negative() {
                                return Err(Error::FusionConsistency(format!(
                                    "N_{i}{j}^{t} = {val} is negative"
                                )));
                            }
                            val.to_u64().ok_or(Error::Overflow("fusion coefficient"))
                        })
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let simples = (0..s as u64)
        .map(|i| simple_dim(i, ctx).map(|(d, _)| d))
        .collect::<Result<_>>()?;
    let table = FusionTable {
        p: ctx.p,
        n: ctx.n,
        simples,
        structure,
    };
    table.verify()?;
    Ok(table)
}

/// Index of the Frobenius twist of `L_i` in `Ver_{p^{n+1}}`.
pub fn frobenius_embed(i: u64, ctx: &VerCtx) -> Result<u64> {
    ctx.check_simple(i)?;
    Ok(ctx.p.get() * i)
}

/// Checks that `i ↦ p i` embeds the fusion ring of `small` into that of
/// `large`, and that products of embedded simples have no other factors.
pub fn check_frobenius_embedding(small: &FusionTable, large: &FusionTable) -> std::result::Result<(), String> {
    let ctx = small.ctx();
    if large.ctx() != ctx.next().map_err(|e| e.to_string())? {
        return Err("tables are not consecutive levels of the same p".into());
    }
    let p = ctx.p.get() as usize;
    let s = small.size();
    for i in 0..s {
        for j in 0..s {
            let row = &large.structure[p * i][p * j];
            for (k, &v) in row.iter().enumerate() {
                let expected = if k % p == 0 && k / p < s { small.get(i, j, k / p) } else { 0 };
                if v != expected {
                    return Err(format!(
                        "N_({pi},{pj})^{k} = {v} in Ver_{{{p}^{}}}, expected {expected}",
                        large.n,
                        pi = p * i,
                        pj = p * j
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Whether an object `X` with character `f` lies in `Ī_n`, given that
/// `X ⊗ St_{n-1}` is tilting: it does iff every summand of `X ⊗ St_{n-1}`
/// lies in `I_n`.
pub fn in_ibar_given_tbar(f: &LaurentPoly, ctx: &VerCtx) -> Result<bool> {
    let st = tilting_char(ctx.q() - 1, ctx.p);
    let sum = TiltingSum::from_character(&(f * &st), ctx.p).map_err(|e| {
        Error::PromiseViolated(format!("X ⊗ St_{} is not tilting: {e}", ctx.n - 1))
    })?;
    let all_in_ideal = sum.indices().all(|a| a >= ctx.ideal_bound());
    Ok(all_in_ideal)
}

/// `(dim L_i, dim L_i mod p)`.
pub fn simple_dim(i: u64, ctx: &VerCtx) -> Result<(BigUint, u64)> {
    ctx.check_simple(i)?;
    let d = simple_char(i, ctx.p)
        .eval_at_one()
        .to_biguint()
        .expect("dimensions are positive");
    let r = (&d % ctx.p.get()).to_u64().unwrap();
    Ok((d, r))
}
