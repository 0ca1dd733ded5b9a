//! Root systems of simply-connected semisimple groups, alcove geometry and
//! the highest-weight regions of the tensor ideals `I_n ⊂ J_n`.
//!
//! Weights are written in fundamental-weight coordinates `⟨λ, α_i∨⟩`,
//! concatenated over the irreducible components. Roots and coroots are
//! integer vectors in simple-root (resp. simple-coroot) coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::Prime;

/// Irreducible Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(r) | CartanType::B(r) | CartanType::C(r) | CartanType::D(r) => r,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            CartanType::A(r) => r >= 1,
            CartanType::B(r) | CartanType::C(r) => r >= 2,
            CartanType::D(r) => r >= 4,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    /// Number of positive roots, from the classification.
    pub fn num_positive_roots(self) -> usize {
        match self {
            CartanType::A(r) => r * (r + 1) / 2,
            CartanType::B(r) | CartanType::C(r) => r * r,
            CartanType::D(r) => r * (r - 1),
            CartanType::E6 => 36,
            CartanType::E7 => 63,
            CartanType::E8 => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
        }
    }

    /// Cartan matrix with `a_ij = ⟨α_i∨, α_j⟩`, Bourbaki numbering.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self {
            CartanType::A(_) | CartanType::B(_) | CartanType::C(_) => {
                for i in 1..r {
                    link(i - 1, i);
                }
            }
            CartanType::D(_) => {
                for i in 1..r - 1 {
                    link(i - 1, i);
                }
                link(r - 3, r - 1);
            }
            CartanType::E6 | CartanType::E7 | CartanType::E8 => {
                link(0, 2);
                link(1, 3);
                for i in 3..r {
                    link(i - 1, i);
                }
            }
            CartanType::F4 => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            CartanType::G2 => link(0, 1),
        }
        match self {
            // α_r short
            CartanType::B(_) => a[r - 1][r - 2] = -2,
            // α_r long
            CartanType::C(_) => a[r - 2][r - 1] = -2,
            // α_1, α_2 long; α_3, α_4 short
            CartanType::F4 => a[2][1] = -2,
            // α_1 short, α_2 long
            CartanType::G2 => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Coxeter number, from the classification.
    pub fn coxeter_number(self) -> u64 {
        match self {
            CartanType::A(r) => r as u64 + 1,
            CartanType::B(r) | CartanType::C(r) => 2 * r as u64,
            CartanType::D(r) => 2 * r as u64 - 2,
            CartanType::E6 => 12,
            CartanType::E7 => 18,
            CartanType::E8 => 30,
            CartanType::F4 => 12,
            CartanType::G2 => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(r) => write!(f, "A{r}"),
            CartanType::B(r) => write!(f, "B{r}"),
            CartanType::C(r) => write!(f, "C{r}"),
            CartanType::D(r) => write!(f, "D{r}"),
            CartanType::E6 => f.write_str("E6"),
            CartanType::E7 => f.write_str("E7"),
            CartanType::E8 => f.write_str("E8"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::G2 => f.write_str("G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(unsupported)?.to_ascii_uppercase();
        let r: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        let ty = match (letter, r) {
            ('A', r) => CartanType::A(r),
            ('B', r) => CartanType::B(r),
            ('C', r) => CartanType::C(r),
            ('D', r) => CartanType::D(r),
            ('E', 6) => CartanType::E6,
            ('E', 7) => CartanType::E7,
            ('E', 8) => CartanType::E8,
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(unsupported()),
        };
        ty.validate().map_err(|_| unsupported())
    }
}

/// Parses `"B2xA1"` style products.
pub fn parse_types(s: &str) -> Result<Vec<CartanType>> {
    s.split(['x', 'X', '*'])
        .map(CartanType::from_str)
        .collect()
}

/// One irreducible factor of a [`RootDatum`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: CartanType,
    /// Position of this component's coordinates in a [`GWeight`].
    pub offset: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizer: `d_i a_ij = d_j a_ji`, `d_i ∝ (α_i, α_i)`.
    pub symmetrizer: Vec<i64>,
    /// Positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive coroots in simple-coroot coordinates, aligned with
    /// `positive_roots` (`positive_coroots[k] = positive_roots[k]∨`).
    pub positive_coroots: Vec<Vec<i64>>,
    /// Highest short root.
    pub theta: Vec<i64>,
    /// `θ∨`, the highest root of the dual system.
    pub theta_coroot: Vec<i64>,
    pub coxeter: u64,
}

impl Component {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    fn root_norm(&self, root: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += root[i] * root[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// `α∨ = 2α / (α, α)`, rewritten in simple-coroot coordinates.
    pub fn coroot_of(&self, root: &[i64]) -> Vec<i64> {
        let norm = self.root_norm(root);
        root.iter()
            .zip(&self.symmetrizer)
            .map(|(&c, &d)| {
                let num = 2 * c * d;
                debug_assert_eq!(num % norm, 0);
                num / norm
            })
            .collect()
    }
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let r = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; r];
    d[0] = Some(Ratio::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..r {
            if a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(a[i][j], a[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let lcm = d.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
    d.iter().map(|x| (x * lcm).to_integer()).collect()
}

/// Positive roots by closure under simple reflections:
/// `s_i(β) = β - ⟨β, α_i∨⟩ α_i` with `⟨β, α_i∨⟩ = Σ_j β_j a_ij`.
fn positive_roots_by_closure(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| beta[j] * a[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by_key(|v| (v.iter().sum::<i64>(), std::cmp::Reverse(v.clone())));
    roots
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| a[j][i]).collect()).collect()
}

impl Component {
    fn build(ty: CartanType, offset: usize) -> Result<Self> {
        let ty = ty.validate()?;
        let cartan = ty.cartan_matrix();
        let sym = symmetrizer(&cartan);
        let positive_roots = positive_roots_by_closure(&cartan);
        let mut comp = Component {
            ty,
            offset,
            cartan,
            symmetrizer: sym,
            positive_roots,
            positive_coroots: Vec::new(),
            theta: Vec::new(),
            theta_coroot: Vec::new(),
            coxeter: 0,
        };
        comp.positive_coroots = comp
            .positive_roots
            .iter()
            .map(|root| comp.coroot_of(root))
            .collect();

        // θ∨ is the highest root of the dual system (transposed Cartan
        // matrix); it must be the coroot of the highest short root.
        let dual = positive_roots_by_closure(&transpose(&comp.cartan));
        let theta_coroot = dual.last().unwrap().clone();
        let min_norm = comp.positive_roots.iter().map(|b| comp.root_norm(b)).min().unwrap();
        let theta = comp
            .positive_roots
            .iter()
            .filter(|b| comp.root_norm(b) == min_norm)
            .max_by_key(|b| b.iter().sum::<i64>())
            .unwrap()
            .clone();

        let fail = |what: &str| Error::UnsupportedType(format!("{ty}: internal check failed ({what})"));
        let coroot_set: BTreeSet<&Vec<i64>> = comp.positive_coroots.iter().collect();
        let dual_set: BTreeSet<&Vec<i64>> = dual.iter().collect();
        if coroot_set != dual_set {
            return Err(fail("coroots differ from the dual closure"));
        }
        if comp.coroot_of(&theta) != theta_coroot {
            return Err(fail("θ∨ is not the coroot of the highest short root"));
        }
        if comp.positive_roots.len() != ty.num_positive_roots() {
            return Err(fail("number of positive roots"));
        }
        // h = 1 + ⟨ρ, θ∨⟩ = 1 + Σ k_i, and independently h = |Φ| / rank
        let h = 1 + theta_coroot.iter().sum::<i64>() as u64;
        let h_from_count = (2 * comp.positive_roots.len() / comp.rank()) as u64;
        if h != h_from_count || h != ty.coxeter_number() {
            return Err(fail("Coxeter number"));
        }
        comp.theta = theta;
        comp.theta_coroot = theta_coroot;
        comp.coxeter = h;
        Ok(comp)
    }
}

/// A simply-connected semisimple root datum: a product of irreducible types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub components: Vec<Component>,
}

/// A weight in concatenated fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GWeight(pub Vec<i64>);

impl GWeight {
    pub fn zero(rank: usize) -> Self {
        GWeight(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for GWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for GWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate `{c}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GWeight)
    }
}

/// A simple coroot combination `Σ k_i α_i∨` of one component.
#[derive(Debug, Clone, Copy)]
pub struct CorootRef<'a> {
    pub component: &'a Component,
    pub coords: &'a [i64],
}

/// Chain label of a dominant weight: the finest region of
/// `J_1 ⊃ I_1 ⊃ J_2 ⊃ I_2 ⊃ ⋯` (truncated at the requested `n`) containing
/// `T(λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum RegionLabel {
    /// `J_1 \ I_1`, the fundamental alcove `A`.
    FundamentalAlcove,
    /// `I_k \ J_{k+1}` for `k < n`.
    IOutsideJ(u32),
    /// `J_k \ I_k` for `2 <= k <= n`.
    JMinusI(u32),
    /// `I_n` itself.
    Ideal(u32),
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RegionLabel::FundamentalAlcove => f.write_str("A"),
            RegionLabel::IOutsideJ(k) => write!(f, "I{k}\\J{}", k + 1),
            RegionLabel::JMinusI(k) => write!(f, "J{k}\\I{k}"),
            RegionLabel::Ideal(k) => write!(f, "I{k}"),
        }
    }
}

impl FromStr for RegionLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad region label `{s}`"));
        let level = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if s == "A" {
            return Ok(RegionLabel::FundamentalAlcove);
        }
        let label = match s.split_once('\\') {
            None => RegionLabel::Ideal(level(s.strip_prefix('I').ok_or_else(bad)?)?),
            Some((lhs, rhs)) => {
                if let Some(k) = lhs.strip_prefix('I') {
                    let k = level(k)?;
                    if rhs.strip_prefix('J').map(level) != Some(Ok(k + 1)) {
                        return Err(bad());
                    }
                    RegionLabel::IOutsideJ(k)
                } else {
                    let k = level(lhs.strip_prefix('J').ok_or_else(bad)?)?;
                    if rhs.strip_prefix('I').map(level) != Some(Ok(k)) {
                        return Err(bad());
                    }
                    RegionLabel::JMinusI(k)
                }
            }
        };
        Ok(label)
    }
}

impl From<RegionLabel> for String {
    fn from(l: RegionLabel) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for RegionLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Membership of `T(λ)` in the categories of level `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub in_t_n: bool,
    pub in_j_n: bool,
    pub in_i_n: bool,
}

impl RootDatum {
    pub fn build(types: &[CartanType]) -> Result<Self> {
        if types.is_empty() {
            return Err(Error::UnsupportedType("empty product".into()));
        }
        let mut offset = 0;
        let mut components = Vec::new();
        for &ty in types {
            let comp = Component::build(ty, offset)?;
            offset += comp.rank();
            components.push(comp);
        }
        Ok(RootDatum { components })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::build(&parse_types(s)?)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Component::rank).sum()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.components.iter().map(|c| c.positive_roots.len()).sum()
    }

    /// Largest Coxeter number among the components.
    pub fn coxeter_number(&self) -> u64 {
        self.components.iter().map(|c| c.coxeter).max().unwrap()
    }

    pub fn rho(&self) -> GWeight {
        GWeight(vec![1; self.rank()])
    }

    pub fn type_string(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.ty.to_string()).collect();
        parts.join("x")
    }

    pub fn check_rank(&self, lambda: &GWeight) -> Result<()> {
        if lambda.0.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                got: lambda.0.len(),
                rank: self.rank(),
            })
        }
    }

    fn check_dominant(&self, lambda: &GWeight) -> Result<()> {
        self.check_rank(lambda)?;
        if lambda.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(lambda.0.clone()))
        }
    }

    /// `⟨λ, Σ k_i α_i∨⟩ = Σ k_i λ_i` on the coordinates of one component.
    pub fn pair(&self, lambda: &GWeight, coroot: CorootRef<'_>) -> i64 {
        let off = coroot.component.offset;
        coroot
            .coords
            .iter()
            .enumerate()
            .map(|(i, k)| k * lambda.0[off + i])
            .sum()
    }

    /// All positive coroots, across components.
    pub fn positive_coroots(&self) -> impl Iterator<Item = CorootRef<'_>> {
        self.components.iter().flat_map(|c| {
            c.positive_coroots.iter().map(move |v| CorootRef {
                component: c,
                coords: v,
            })
        })
    }

    pub fn theta_coroots(&self) -> impl Iterator<Item = CorootRef<'_>> {
        self.components.iter().map(|c| CorootRef {
            component: c,
            coords: &c.theta_coroot,
        })
    }

    /// `p ≥ h` is required for the alcove to contain 0.
    pub fn check_prime(&self, p: Prime) -> Result<()> {
        let h = self.coxeter_number();
        if p.get() < h {
            Err(Error::PrimeBelowCoxeter { p: p.get(), h })
        } else {
            Ok(())
        }
    }

    /// Warnings for primes where Donkin's tensor product theorem is not
    /// known to hold (`h <= p < 2h - 4`).
    pub fn regime_warnings(&self, p: Prime) -> Vec<String> {
        self.components
            .iter()
            .filter(|c| p.get() >= c.coxeter && p.get() + 4 < 2 * c.coxeter)
            .map(|c| {
                format!(
                    "{}: p = {} < 2h - 4 = {}; Donkin's tensor product theorem is conjectural here",
                    c.ty,
                    p,
                    2 * c.coxeter - 4
                )
            })
            .collect()
    }

    /// `0 <= ⟨λ, α_i∨⟩ < p^n` for every `i`.
    pub fn in_restricted(&self, lambda: &GWeight, p: Prime, n: u32) -> Result<bool> {
        self.check_rank(lambda)?;
        let bound = p.pow(n)? as i64;
        Ok(lambda.0.iter().all(|&c| (0..bound).contains(&c)))
    }

    /// `0 < ⟨λ + ρ, θ_j∨⟩ < p` on every component (`<= p` when `closed`).
    pub fn alcove_test(&self, lambda: &GWeight, p: Prime, closed: bool) -> Result<bool> {
        self.check_dominant(lambda)?;
        self.check_prime(p)?;
        Ok(self.alcove_contains(lambda, p, closed))
    }

    fn alcove_contains(&self, lambda: &GWeight, p: Prime, closed: bool) -> bool {
        let shifted = GWeight(lambda.0.iter().map(|c| c + 1).collect());
        self.theta_coroots().all(|t| {
            let v = self.pair(&shifted, t);
            let p = p.get() as i64;
            v > 0 && if closed { v <= p } else { v < p }
        })
    }

    /// Unique `λ = λ' + p^{n-1} μ` with `λ' ∈ (p^{n-1} - 1)ρ + Λ_{n-1}` and
    /// `μ` dominant, if `λ - (p^{n-1} - 1)ρ` is dominant.
    pub fn donkin_split(&self, lambda: &GWeight, p: Prime, n: u32) -> Result<Option<(GWeight, GWeight)>> {
        self.check_dominant(lambda)?;
        if n == 0 {
            return Err(Error::InvalidLevel(n));
        }
        let q = p.pow(n - 1)? as i64;
        if lambda.0.iter().any(|&c| c < q - 1) {
            return Ok(None);
        }
        let (low, high) = lambda
            .0
            .iter()
            .map(|&c| {
                let shifted = c - (q - 1);
                (q - 1 + shifted % q, shifted / q)
            })
            .unzip();
        Ok(Some((GWeight(low), GWeight(high))))
    }

    /// Membership of `T(λ)` in `𝒯_n`, `J_n` and `I_n`.
    pub fn membership(&self, lambda: &GWeight, p: Prime, n: u32) -> Result<Membership> {
        self.check_prime(p)?;
        let split = self.donkin_split(lambda, p, n)?;
        let in_j_n = split.is_some();
        let in_i_n = split.is_some_and(|(_, mu)| !self.alcove_contains(&mu, p, false));
        let in_t_n = in_j_n || lambda.0.iter().all(|&c| c == 0);
        Ok(Membership { in_t_n, in_j_n, in_i_n })
    }

    /// Finest region of the ideal chain containing `T(λ)`, truncated at `n`.
    pub fn classify_region(&self, lambda: &GWeight, p: Prime, n: u32) -> Result<RegionLabel> {
        if n == 0 {
            return Err(Error::InvalidLevel(n));
        }
        self.check_dominant(lambda)?;
        self.check_prime(p)?;
        // largest k <= n with T(λ) ∈ J_k; J_1 contains everything
        let mut k = 1;
        while k < n && self.membership(lambda, p, k + 1)?.in_j_n {
            k += 1;
        }
        let m = self.membership(lambda, p, k)?;
        Ok(match (m.in_i_n, k) {
            (false, 1) => RegionLabel::FundamentalAlcove,
            (false, k) => RegionLabel::JMinusI(k),
            (true, k) if k == n => RegionLabel::Ideal(n),
            (true, k) => RegionLabel::IOutsideJ(k),
        })
    }

    /// Simple reflection `s_i` on a weight, `i` a global simple index.
    pub fn reflect(&self, lambda: &GWeight, i: usize) -> GWeight {
        let comp = self
            .components
            .iter()
            .find(|c| (c.offset..c.offset + c.rank()).contains(&i))
            .expect("simple index in range");
        let li = i - comp.offset;
        let c = lambda.0[i];
        let mut out = lambda.clone();
        // α_i in fundamental coordinates is column i of the Cartan matrix
        for (j, row) in comp.cartan.iter().enumerate() {
            out.0[comp.offset + j] -= c * row[li];
        }
        out
    }

    /// `-w_0 λ`: the dominant representative of the orbit of `-λ`.
    pub fn minus_w0(&self, lambda: &GWeight) -> Result<GWeight> {
        self.check_dominant(lambda)?;
        let mut mu = GWeight(lambda.0.iter().map(|c| -c).collect());
        while let Some(i) = mu.0.iter().position(|&c| c < 0) {
            mu = self.reflect(&mu, i);
        }
        Ok(mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn w(v: &[i64]) -> GWeight {
        GWeight(v.to_vec())
    }

    fn all_types() -> Vec<CartanType> {
        use CartanType::*;
        vec![
            A(1), A(2), A(3), A(5), B(2), B(3), B(4), C(3), C(4), D(4), D(5), E6, E7, E8, F4, G2,
        ]
    }

    #[test]
    fn classification_invariants() {
        for ty in all_types() {
            let rd = RootDatum::build(&[ty]).unwrap();
            let c = &rd.components[0];
            assert_eq!(c.positive_roots.len(), ty.num_positive_roots(), "{ty}");
            assert_eq!(c.coxeter, ty.coxeter_number(), "{ty}");
            assert_eq!(c.coxeter, 1 + rd.pair(&rd.rho(), rd.theta_coroots().next().unwrap()) as u64);
        }
    }

    #[test]
    fn build_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        let g2 = RootDatum::parse("G2").unwrap();
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.coxeter_number(), 6);
        let a1 = RootDatum::parse("A1").unwrap();
        assert_eq!(a1.num_positive_roots(), 1);
        assert_eq!(a1.coxeter_number(), 2);
        assert_eq!(a1.rho(), w(&[1]));
        assert_eq!(RootDatum::parse("B2xA1").unwrap().rank(), 3);
        for bad in ["H3", "D3", "B1", "E9", "", "A0"] {
            assert!(matches!(RootDatum::parse(bad), Err(Error::UnsupportedType(_))), "{bad}");
        }
    }

    #[test]
    fn g2_roots_and_theta() {
        let g2 = RootDatum::parse("G2").unwrap();
        let c = &g2.components[0];
        // α1 short, α2 long: roots α1, α2, α1+α2, 2α1+α2, 3α1+α2, 3α1+2α2
        let mut roots = c.positive_roots.clone();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]);
        assert_eq!(c.theta, vec![2, 1]);
        assert_eq!(c.theta_coroot, vec![2, 3]);
    }

    #[test]
    fn pairing_and_restricted() {
        let a2 = RootDatum::parse("A2").unwrap();
        let theta = a2.theta_coroots().next().unwrap();
        assert_eq!(theta.coords, &[1, 1]);
        assert_eq!(a2.pair(&w(&[4, 4]), theta), 8);
        assert_eq!(a2.pair(&w(&[0, 0]), theta), 0);
        for n in 1..4 {
            assert!(a2.in_restricted(&w(&[0, 0]), p(5), n).unwrap());
        }
        assert!(a2.in_restricted(&w(&[4, 4]), p(5), 1).unwrap());
        assert!(!a2.in_restricted(&w(&[5, 0]), p(5), 1).unwrap());
        assert!(a2.in_restricted(&w(&[5, 0]), p(5), 2).unwrap());
    }

    #[test]
    fn alcove_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert!(a2.alcove_test(&w(&[0, 0]), p(5), false).unwrap());
        assert!(!a2.alcove_test(&w(&[2, 2]), p(5), false).unwrap());
        assert!(a2.alcove_test(&w(&[1, 1]), p(5), false).unwrap());
        assert!(a2.alcove_test(&w(&[1, 1]), p(5), true).unwrap());
        // upper wall: ⟨λ+ρ, θ∨⟩ = 5
        assert!(!a2.alcove_test(&w(&[2, 1]), p(5), false).unwrap());
        assert!(a2.alcove_test(&w(&[2, 1]), p(5), true).unwrap());
        assert!(matches!(a2.alcove_test(&w(&[-1, 0]), p(5), false), Err(Error::NotDominant(_))));
        assert!(matches!(a2.alcove_test(&w(&[0, 0]), p(2), false), Err(Error::PrimeBelowCoxeter { .. })));
        assert!(matches!(a2.alcove_test(&w(&[0]), p(5), false), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn split_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert_eq!(a2.donkin_split(&w(&[4, 4]), p(5), 2).unwrap(), Some((w(&[4, 4]), w(&[0, 0]))));
        assert_eq!(a2.donkin_split(&w(&[2, 2]), p(5), 2).unwrap(), None);
        assert_eq!(a2.donkin_split(&w(&[4, 9]), p(5), 2).unwrap(), Some((w(&[4, 4]), w(&[0, 1]))));
        // level 1: λ' = 0, μ = λ
        assert_eq!(a2.donkin_split(&w(&[3, 7]), p(5), 1).unwrap(), Some((w(&[0, 0]), w(&[3, 7]))));
    }

    #[test]
    fn split_reassembles() {
        let a2 = RootDatum::parse("A2").unwrap();
        for n in 1..=3 {
            let q = 5i64.pow(n - 1);
            for a in 0..40 {
                for b in 0..40 {
                    let lam = w(&[a, b]);
                    if let Some((low, mu)) = a2.donkin_split(&lam, p(5), n).unwrap() {
                        let back: Vec<i64> = low.0.iter().zip(&mu.0).map(|(l, m)| l + q * m).collect();
                        assert_eq!(back, lam.0);
                        assert!(low.0.iter().all(|&c| c >= q - 1 && c < 2 * q - 1));
                        assert!(mu.is_dominant());
                    }
                }
            }
        }
    }

    #[test]
    fn region_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert_eq!(a2.classify_region(&w(&[4, 4]), p(5), 2).unwrap(), RegionLabel::JMinusI(2));
        assert_eq!(a2.classify_region(&w(&[2, 2]), p(5), 2).unwrap(), RegionLabel::IOutsideJ(1));
        assert_eq!(a2.classify_region(&w(&[14, 9]), p(5), 2).unwrap(), RegionLabel::Ideal(2));
        assert_eq!(a2.classify_region(&w(&[0, 0]), p(5), 1).unwrap(), RegionLabel::FundamentalAlcove);
        assert_eq!(a2.classify_region(&w(&[2, 2]), p(5), 1).unwrap(), RegionLabel::Ideal(1));
        let m = a2.membership(&w(&[2, 2]), p(5), 2).unwrap();
        assert_eq!(m, Membership { in_t_n: false, in_j_n: false, in_i_n: false });
        let m = a2.membership(&w(&[0, 0]), p(5), 2).unwrap();
        assert!(m.in_t_n && !m.in_j_n);
        assert_eq!(RegionLabel::IOutsideJ(1).to_string(), "I1\\J2");
        assert_eq!(RegionLabel::JMinusI(2).to_string(), "J2\\I2");
        for l in [RegionLabel::FundamentalAlcove, RegionLabel::IOutsideJ(1), RegionLabel::JMinusI(2), RegionLabel::Ideal(3)] {
            assert_eq!(l.to_string().parse::<RegionLabel>().unwrap(), l);
            let json = serde_json::to_string(&l).unwrap();
            assert_eq!(serde_json::from_str::<RegionLabel>(&json).unwrap(), l);
        }
        assert_eq!(serde_json::to_string(&RegionLabel::IOutsideJ(1)).unwrap(), r#""I1\\J2""#);
        for bad in ["", "B", "I1\\J3", "J2\\I1", "Ix"] {
            assert!(bad.parse::<RegionLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn sl2_nesting() {
        let a1 = RootDatum::parse("A1").unwrap();
        for q in [2u64, 3, 5] {
            for n in 1..=4 {
                for a in 0..=200 {
                    let lam = w(&[a]);
                    let here = a1.membership(&lam, p(q), n).unwrap();
                    let next = a1.membership(&lam, p(q), n + 1).unwrap();
                    assert!(!here.in_i_n || here.in_j_n);
                    // I_n = J_{n+1} for SL2
                    assert_eq!(here.in_i_n, next.in_j_n, "p={q} n={n} a={a}");
                    assert_eq!(here.in_i_n, crate::sl2tilt::in_ideal(a as u64, p(q), n));
                }
            }
        }
    }

    #[test]
    fn chain_is_nested_for_a2_and_b2() {
        for (ty, q) in [("A2", 5u64), ("A2", 3), ("B2", 5), ("G2", 7)] {
            let rd = RootDatum::parse(ty).unwrap();
            for a in 0..30 {
                for b in 0..30 {
                    let lam = w(&[a, b]);
                    for n in 1..=3 {
                        let m = rd.membership(&lam, p(q), n).unwrap();
                        let next = rd.membership(&lam, p(q), n + 1).unwrap();
                        assert!(!m.in_i_n || m.in_j_n);
                        assert!(!next.in_j_n || m.in_i_n, "{ty} {lam} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn minus_w0_examples() {
        let a2 = RootDatum::parse("A2").unwrap();
        assert_eq!(a2.minus_w0(&w(&[1, 0])).unwrap(), w(&[0, 1]));
        assert_eq!(a2.minus_w0(&w(&[3, 5])).unwrap(), w(&[5, 3]));
        let b2 = RootDatum::parse("B2").unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(b2.minus_w0(&w(&[a, b])).unwrap(), w(&[a, b]));
            }
        }
        for ty in all_types() {
            let rd = RootDatum::build(&[ty]).unwrap();
            let zero = GWeight::zero(rd.rank());
            assert_eq!(rd.minus_w0(&zero).unwrap(), zero);
        }
        assert!(a2.minus_w0(&w(&[-1, 0])).is_err());
    }

    #[test]
    fn minus_w0_is_an_involution() {
        for ty in ["A3", "D4", "D5", "E6", "E7", "A2xG2"] {
            let rd = RootDatum::parse(ty).unwrap();
            for i in 0..rd.rank() {
                let mut v = vec![0; rd.rank()];
                v[i] = 1;
                v[(i + 1) % rd.rank()] += 2;
                let lam = GWeight(v);
                let image = rd.minus_w0(&lam).unwrap();
                assert!(image.is_dominant());
                assert_eq!(rd.minus_w0(&image).unwrap(), lam, "{ty}");
            }
        }
        // D5 and E6 have nontrivial -w0; E7 does not
        let e6 = RootDatum::parse("E6").unwrap();
        assert_eq!(e6.minus_w0(&w(&[1, 0, 0, 0, 0, 0])).unwrap(), w(&[0, 0, 0, 0, 0, 1]));
        let e7 = RootDatum::parse("E7").unwrap();
        let lam = w(&[1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(e7.minus_w0(&lam).unwrap(), lam);
    }

    #[test]
    fn warnings() {
        let g2 = RootDatum::parse("G2").unwrap();
        assert_eq!(g2.regime_warnings(p(7)).len(), 1);
        assert!(g2.regime_warnings(p(11)).is_empty());
        assert!(RootDatum::parse("A2").unwrap().regime_warnings(p(3)).is_empty());
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("4,4".parse::<GWeight>().unwrap(), w(&[4, 4]));
        assert_eq!("(1, -2)".parse::<GWeight>().unwrap(), w(&[1, -2]));
        assert!("4,x".parse::<GWeight>().is_err());
        assert_eq!(parse_types("B2xA1").unwrap(), vec![CartanType::B(2), CartanType::A(1)]);
    }
}
