//! Command-line front end.
//!
//! Every command prints an [`OutputEnvelope`] as JSON (default) or TSV.
//! Exit codes: 0 success, 2 invalid input, 3 failed consistency check,
//! 4 internal error.

pub mod plot;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::charring::{decompose, dimension, tilting_char, Basis, LaurentPoly};
use crate::cyclo::{vanishes_at_root, CyclotomicIndex};
use crate::error::Error;
use crate::prime::Prime;
use crate::principal::{restriction_ideal_level, PrincipalMap};
use crate::rootdatum::{GWeight, Membership, RegionLabel, RootDatum};
use crate::sl2tilt::{hom_dim, ideal_level, in_ideal, tensor_decompose, TiltingSum};
use crate::versl2::{
    cartan_matrix, check_frobenius_embedding, fusion, image_comp_factors, in_ibar_given_tbar, simple_dim,
    CartanMatrix, FusionTable, VerClass, VerCtx,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "verpn", version, about = "Tilting modules, tensor ideals and Verlinde categories in characteristic p")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tilting modules of SL2.
    #[command(subcommand)]
    Sl2(Sl2Cmd),
    /// The categories Ver_{p^n}.
    #[command(subcommand)]
    Ver(VerCmd),
    /// Root data, alcoves and principal SL2 restriction.
    #[command(subcommand)]
    Group(GroupCmd),
}

#[derive(Debug, Args)]
pub struct PArg {
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct PnArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Subcommand)]
pub enum Sl2Cmd {
    /// Character of T_a.
    TiltChar {
        a: u64,
        #[command(flatten)]
        p: PArg,
    },
    /// Multiplicities of T_a in a basis.
    Factors {
        a: u64,
        #[command(flatten)]
        p: PArg,
        #[arg(long, default_value = "weyl")]
        basis: Basis,
    },
    /// T_a ⊗ T_b as a sum of indecomposable tiltings.
    Tensor {
        a: u64,
        b: u64,
        #[command(flatten)]
        p: PArg,
    },
    /// dim Hom(T_a, T_b).
    Hom {
        a: u64,
        b: u64,
        #[command(flatten)]
        p: PArg,
    },
    /// Membership of T_a in I_n, by weight and by root-of-unity vanishing.
    Ideal {
        a: u64,
        #[command(flatten)]
        pn: PnArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerCmd {
    /// Simple objects and their dimensions.
    Simples {
        #[command(flatten)]
        pn: PnArgs,
    },
    /// Cartan matrix.
    Cartan {
        #[command(flatten)]
        pn: PnArgs,
    },
    /// Fusion rules of the simple objects.
    Fusion {
        #[command(flatten)]
        pn: PnArgs,
    },
    /// Image of an SL2 character (a JSON file) in the Grothendieck ring.
    Image {
        #[arg(long = "char")]
        char_file: PathBuf,
        #[command(flatten)]
        pn: PnArgs,
    },
    /// Checks that i ↦ p·i embeds the fusion ring into the next level.
    EmbedCheck {
        #[command(flatten)]
        pn: PnArgs,
    },
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Cartan type, e.g. A2 or B2xA1.
    #[arg(long = "type")]
    pub ty: String,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Region of the ideal chain containing T(λ).
    Region {
        #[command(flatten)]
        ty: TypeArg,
        /// Fundamental-weight coordinates, e.g. 4,4.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        pn: PnArgs,
    },
    /// SVG plot of the regions for a rank-2 type.
    RegionPlot {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Largest coordinate plotted.
        #[arg(long, default_value_t = 31)]
        max: u32,
    },
    /// Principal SL2 restriction of the Weyl character of λ.
    Restrict {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Also decompose into SL2 tiltings at this prime.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Principal SL2 restriction of St_n.
    Steinberg {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        pn: PnArgs,
        /// Report membership in I_n and I_{n+1}.
        #[arg(long)]
        ideal_check: bool,
    },
}

/// Wrapper around every command's output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub warnings: Vec<String>,
    pub payload: Value,
    pub version: String,
}

/// A failed command: the error and its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::CartanSingular { .. } => (EXIT_CONSISTENCY, "CartanSingular"),
            Error::FusionConsistency(_) => (EXIT_CONSISTENCY, "FusionConsistency"),
            Error::DivisionNotExact => (EXIT_INTERNAL, "DivisionNotExact"),
            Error::InvalidPrime(_) => (EXIT_VALIDATION, "InvalidPrime"),
            Error::NotInNonnegativeSpan { .. } => (EXIT_VALIDATION, "NotInNonnegativeSpan"),
            Error::NotACharacter(_) => (EXIT_VALIDATION, "NotACharacter"),
            Error::InvalidLevel(_) => (EXIT_VALIDATION, "InvalidLevel"),
            Error::NotInAn { .. } => (EXIT_VALIDATION, "NotInAn"),
            Error::BadSimpleIndex { .. } => (EXIT_VALIDATION, "BadSimpleIndex"),
            Error::PromiseViolated(_) => (EXIT_VALIDATION, "PromiseViolated"),
            Error::UnsupportedType(_) => (EXIT_VALIDATION, "UnsupportedType"),
            Error::NotDominant(_) => (EXIT_VALIDATION, "NotDominant"),
            Error::NotInClosedAlcove(_) => (EXIT_VALIDATION, "NotInClosedAlcove"),
            Error::RankMismatch { .. } => (EXIT_VALIDATION, "RankMismatch"),
            Error::PrimeBelowCoxeter { .. } => (EXIT_VALIDATION, "PrimeBelowCoxeter"),
            Error::Overflow(_) => (EXIT_VALIDATION, "Overflow"),
            Error::Parse(_) => (EXIT_VALIDATION, "Parse"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn consistency(message: String) -> Self {
        Failure {
            code: EXIT_CONSISTENCY,
            kind: "FusionConsistency",
            message,
        }
    }

    fn io(message: String) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            kind: "Io",
            message,
        }
    }

    fn internal(message: String) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            kind: "Internal",
            message,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message, "exit_code": self.code}})
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

/// Rendered output: either an envelope or raw text (SVG).
pub enum Rendered {
    Envelope { env: OutputEnvelope, tsv: String },
    Raw(String),
}

// Payloads

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPayload {
    pub character: LaurentPoly,
    #[serde(with = "decimal")]
    pub dimension: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomPayload {
    #[serde(with = "decimal")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealPayload {
    #[serde(rename = "in_I_n")]
    pub in_i_n: bool,
    pub cyclotomic_vanishes: bool,
    /// Deepest ideal containing `T_a`.
    pub level: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleInfo {
    pub i: u64,
    #[serde(with = "decimal")]
    pub dim: BigUint,
    pub dim_mod_p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImagePayload {
    pub class: VerClass,
    /// `None` when `X ⊗ St_{n-1}` is not tilting.
    pub in_ibar: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedPayload {
    pub from: VerCtx,
    pub to: VerCtx,
    pub pass: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionPayload {
    pub weight: GWeight,
    pub label: RegionLabel,
    /// Memberships at levels `1..=n`.
    pub levels: Vec<Membership>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictPayload {
    pub phi_star: i64,
    pub character: LaurentPoly,
    #[serde(with = "decimal")]
    pub dimension: BigUint,
    pub tilting: Option<TiltingSum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergPayload {
    pub character: LaurentPoly,
    #[serde(with = "decimal")]
    pub dimension: BigUint,
    #[serde(flatten)]
    pub ideal_check: BTreeMap<String, bool>,
}

/// Serializes big integers as decimal strings.
mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T: FromStr, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("bad integer `{s}`")))
    }
}

fn to_value<T: Serialize>(v: &T) -> CmdResult<Value> {
    serde_json::to_value(v).map_err(|e| Failure::internal(e.to_string()))
}

fn biguint(f: &LaurentPoly) -> CmdResult<BigUint> {
    dimension(f)
        .to_biguint()
        .ok_or_else(|| Failure::internal("negative dimension".into()))
}

fn prime(p: u64) -> CmdResult<Prime> {
    Ok(Prime::new(p)?)
}

fn ver_ctx(pn: &PnArgs) -> CmdResult<VerCtx> {
    Ok(VerCtx::new(prime(pn.p)?, pn.n)?)
}

struct Builder {
    command: String,
    params: BTreeMap<String, Value>,
    warnings: Vec<String>,
}

impl Builder {
    fn new(command: &str) -> Self {
        Builder {
            command: command.to_string(),
            params: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    fn param(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.params.insert(k.to_string(), v.into());
        self
    }

    fn finish<T: Serialize>(self, payload: &T, tsv: String) -> CmdResult<Rendered> {
        Ok(Rendered::Envelope {
            env: OutputEnvelope {
                command: self.command,
                params: self.params,
                warnings: self.warnings,
                payload: to_value(payload)?,
                version: env!("CARGO_PKG_VERSION").to_string(),
            },
            tsv,
        })
    }
}

fn terms_tsv<'a>(header: &str, rows: impl Iterator<Item = (u64, &'a BigUint)>) -> String {
    let mut s = format!("{header}\tmultiplicity\n");
    for (a, m) in rows {
        let _ = writeln!(s, "{a}\t{m}");
    }
    s
}

fn char_tsv(f: &LaurentPoly) -> String {
    let mut s = String::from("exponent\tcoefficient\n");
    for (e, c) in f.terms() {
        let _ = writeln!(s, "{e}\t{c}");
    }
    s
}

fn kv_tsv(pairs: &[(&str, String)]) -> String {
    let mut s = String::from("key\tvalue\n");
    for (k, v) in pairs {
        let _ = writeln!(s, "{k}\t{v}");
    }
    s
}

fn parse_group(ty: &TypeArg) -> CmdResult<RootDatum> {
    Ok(RootDatum::parse(&ty.ty)?)
}

fn parse_weight(rd: &RootDatum, w: &str) -> CmdResult<GWeight> {
    let lam: GWeight = w.parse()?;
    rd.check_rank(&lam)?;
    Ok(lam)
}

fn sl2(cmd: &Sl2Cmd) -> CmdResult<Rendered> {
    match cmd {
        Sl2Cmd::TiltChar { a, p } => {
            let pr = prime(p.p)?;
            let f = tilting_char(*a, pr);
            let payload = CharPayload {
                dimension: biguint(&f)?,
                character: f,
            };
            let tsv = char_tsv(&payload.character);
            Builder::new("sl2 tilt-char").param("a", *a).param("p", p.p).finish(&payload, tsv)
        }
        Sl2Cmd::Factors { a, p, basis } => {
            let pr = prime(p.p)?;
            let d = decompose(&tilting_char(*a, pr), *basis, pr)?;
            let tsv = terms_tsv("index", d.terms.iter().map(|(&k, m)| (k, m)));
            Builder::new("sl2 factors")
                .param("a", *a)
                .param("p", p.p)
                .param("basis", basis.name())
                .finish(&d, tsv)
        }
        Sl2Cmd::Tensor { a, b, p } => {
            let pr = prime(p.p)?;
            let sum = tensor_decompose(&[(*a, 1), (*b, 1)], pr)?;
            let tsv = terms_tsv("index", sum.terms.iter().map(|(&k, m)| (k, m)));
            Builder::new("sl2 tensor")
                .param("a", *a)
                .param("b", *b)
                .param("p", p.p)
                .finish(&sum, tsv)
        }
        Sl2Cmd::Hom { a, b, p } => {
            let pr = prime(p.p)?;
            let payload = HomPayload {
                dim: hom_dim(*a, *b, pr),
            };
            let tsv = kv_tsv(&[("dim", payload.dim.to_string())]);
            Builder::new("sl2 hom")
                .param("a", *a)
                .param("b", *b)
                .param("p", p.p)
                .finish(&payload, tsv)
        }
        Sl2Cmd::Ideal { a, pn } => {
            let pr = prime(pn.p)?;
            let idx = CyclotomicIndex::new(pr, pn.n)?;
            let payload = IdealPayload {
                in_i_n: in_ideal(*a, pr, pn.n),
                cyclotomic_vanishes: vanishes_at_root(&tilting_char(*a, pr), idx),
                level: ideal_level(*a, pr).to_string(),
            };
            let tsv = kv_tsv(&[
                ("in_I_n", payload.in_i_n.to_string()),
                ("cyclotomic_vanishes", payload.cyclotomic_vanishes.to_string()),
                ("level", payload.level.clone()),
            ]);
            Builder::new("sl2 ideal")
                .param("a", *a)
                .param("p", pn.p)
                .param("n", pn.n)
                .finish(&payload, tsv)
        }
    }
}

fn ver(cmd: &VerCmd) -> CmdResult<Rendered> {
    match cmd {
        VerCmd::Simples { pn } => {
            let ctx = ver_ctx(pn)?;
            let simples = (0..ctx.num_simples())
                .map(|i| {
                    let (dim, dim_mod_p) = simple_dim(i, &ctx)?;
                    Ok(SimpleInfo { i, dim, dim_mod_p })
                })
                .collect::<crate::Result<Vec<_>>>()?;
            let mut tsv = String::from("i\tdim\tdim_mod_p\n");
            for s in &simples {
                let _ = writeln!(tsv, "{}\t{}\t{}", s.i, s.dim, s.dim_mod_p);
            }
            Builder::new("ver simples")
                .param("p", pn.p)
                .param("n", pn.n)
                .finish(&simples, tsv)
        }
        VerCmd::Cartan { pn } => {
            let ctx = ver_ctx(pn)?;
            let c: CartanMatrix = cartan_matrix(&ctx)?;
            let mut tsv = String::new();
            for row in &c.rows {
                let cells: Vec<String> = row.iter().map(u64::to_string).collect();
                let _ = writeln!(tsv, "{}", cells.join("\t"));
            }
            let mut b = Builder::new("ver cartan").param("p", pn.p).param("n", pn.n);
            if !c.is_symmetric() {
                b.warnings.push("Cartan matrix is not symmetric".into());
            }
            b.finish(&c, tsv)
        }
        VerCmd::Fusion { pn } => {
            let ctx = ver_ctx(pn)?;
            let table: FusionTable = fusion(&ctx)?;
            let tsv = table.to_tsv();
            Builder::new("ver fusion")
                .param("p", pn.p)
                .param("n", pn.n)
                .finish(&table, tsv)
        }
        VerCmd::Image { char_file, pn } => {
            let ctx = ver_ctx(pn)?;
            let text = std::fs::read_to_string(char_file)
                .map_err(|e| Failure::io(format!("cannot read {}: {e}", char_file.display())))?;
            let f: LaurentPoly = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let class = image_comp_factors(&f, &ctx)?;
            let in_ibar = match in_ibar_given_tbar(&f, &ctx) {
                Ok(b) => Some(b),
                Err(Error::PromiseViolated(_)) => None,
                Err(e) => return Err(e.into()),
            };
            let mut tsv = String::from("i\tmultiplicity\n");
            for (i, c) in class.coeffs.iter().enumerate() {
                let _ = writeln!(tsv, "{i}\t{c}");
            }
            let mut b = Builder::new("ver image")
                .param("p", pn.p)
                .param("n", pn.n)
                .param("char", char_file.display().to_string());
            if in_ibar.is_none() {
                b.warnings
                    .push(format!("X ⊗ St_{} is not tilting; Ī_n membership not decided", pn.n - 1));
            }
            b.finish(&ImagePayload { class, in_ibar }, tsv)
        }
        VerCmd::EmbedCheck { pn } => {
            let small = ver_ctx(pn)?;
            let large = small.next()?;
            let result = check_frobenius_embedding(&fusion(&small)?, &fusion(&large)?);
            let payload = EmbedPayload {
                from: small,
                to: large,
                pass: result.is_ok(),
                detail: result.clone().err(),
            };
            if let Err(detail) = result {
                return Err(Failure::consistency(format!("Frobenius embedding failed: {detail}")));
            }
            let tsv = kv_tsv(&[("pass", "true".into())]);
            Builder::new("ver embed-check")
                .param("p", pn.p)
                .param("n", pn.n)
                .finish(&payload, tsv)
        }
    }
}

fn group(cmd: &GroupCmd) -> CmdResult<Rendered> {
    match cmd {
        GroupCmd::Region { ty, weight, pn } => {
            let rd = parse_group(ty)?;
            let pr = prime(pn.p)?;
            let lam = parse_weight(&rd, weight)?;
            let label = rd.classify_region(&lam, pr, pn.n)?;
            let levels = (1..=pn.n)
                .map(|k| rd.membership(&lam, pr, k))
                .collect::<crate::Result<Vec<_>>>()?;
            let mut tsv = String::from("n\tin_T_n\tin_J_n\tin_I_n\n");
            for (k, m) in levels.iter().enumerate() {
                let _ = writeln!(tsv, "{}\t{}\t{}\t{}", k + 1, m.in_t_n, m.in_j_n, m.in_i_n);
            }
            let _ = writeln!(tsv, "label\t{label}");
            let mut b = Builder::new("group region")
                .param("type", rd.type_string())
                .param("weight", lam.to_string())
                .param("p", pn.p)
                .param("n", pn.n);
            b.warnings = rd.regime_warnings(pr);
            b.finish(&RegionPayload { weight: lam, label, levels }, tsv)
        }
        GroupCmd::RegionPlot { ty, p, n, max } => {
            let rd = parse_group(ty)?;
            let pr = prime(*p)?;
            Ok(Rendered::Raw(plot::region_svg(&rd, pr, *n, *max)?))
        }
        GroupCmd::Restrict { ty, weight, p } => {
            let rd = parse_group(ty)?;
            let lam = parse_weight(&rd, weight)?;
            let pm = PrincipalMap::new(rd);
            let f = pm.weyl_restriction_char(&lam)?;
            let tilting = match p {
                Some(p) => Some(TiltingSum::from_character(&f, prime(*p)?)?),
                None => None,
            };
            let payload = RestrictPayload {
                phi_star: pm.phi_star(&lam)?,
                dimension: biguint(&f)?,
                character: f,
                tilting,
            };
            let tsv = char_tsv(&payload.character);
            let mut b = Builder::new("group restrict")
                .param("type", pm.datum.type_string())
                .param("weight", lam.to_string());
            if let Some(p) = p {
                b = b.param("p", *p);
            }
            b.finish(&payload, tsv)
        }
        GroupCmd::Steinberg { ty, pn, ideal_check } => {
            let rd = parse_group(ty)?;
            let pr = prime(pn.p)?;
            let pm = PrincipalMap::new(rd);
            let f = pm.steinberg_restriction(pr, pn.n)?;
            let mut checks = BTreeMap::new();
            if *ideal_check {
                if pn.n == 0 {
                    return Err(Error::InvalidLevel(0).into());
                }
                let (all_at_least, some_below_next) = restriction_ideal_level(&f, pr, pn.n)?;
                checks.insert(format!("in_I_{}", pn.n), all_at_least);
                checks.insert(format!("in_I_{}", pn.n + 1), !some_below_next);
            }
            let mut tsv = char_tsv(&f);
            for (k, v) in &checks {
                let _ = writeln!(tsv, "{k}\t{v}");
            }
            let mut b = Builder::new("group steinberg")
                .param("type", pm.datum.type_string())
                .param("p", pn.p)
                .param("n", pn.n)
                .param("ideal_check", *ideal_check);
            b.warnings = pm.datum.regime_warnings(pr);
            let payload = SteinbergPayload {
                dimension: biguint(&f)?,
                character: f,
                ideal_check: checks,
            };
            b.finish(&payload, tsv)
        }
    }
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> CmdResult<Rendered> {
    match &cli.command {
        Command::Sl2(c) => sl2(c),
        Command::Ver(c) => ver(c),
        Command::Group(c) => group(c),
    }
}

/// Renders an envelope in the requested format.
pub fn render(r: &Rendered, format: Format) -> String {
    match r {
        Rendered::Raw(s) => s.clone(),
        Rendered::Envelope { env, tsv } => match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(env).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = format!("# command\t{}\n", env.command);
                for (k, v) in &env.params {
                    let _ = writeln!(s, "# {k}\t{v}");
                }
                for w in &env.warnings {
                    let _ = writeln!(s, "# warning\t{w}");
                }
                let _ = writeln!(s, "# version\t{}", env.version);
                s.push_str(tsv);
                s
            }
        },
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                let failure = Failure {
                    code: EXIT_VALIDATION,
                    kind: "Usage",
                    message: e.kind().to_string(),
                };
                let _ = writeln!(stderr, "{}", failure.to_json());
                return EXIT_VALIDATION;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let result = execute(&cli).and_then(|r| {
        let text = render(&r, cli.format);
        match &cli.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display()))),
            None => stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::internal(e.to_string())),
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.to_json());
            f.code
        }
    }
}
