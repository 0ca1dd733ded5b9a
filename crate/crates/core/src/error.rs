use thiserror::Error;

/// Errors raised by the character, category and root-system computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),

    #[error("polynomial is not in the nonnegative span of the {basis} basis: {detail}")]
    NotInNonnegativeSpan { basis: &'static str, detail: String },

    #[error("polynomial has a negative coefficient at exponent {0}; not a character")]
    NotACharacter(i64),

    #[error("level n must be at least 1 (got {0})")]
    InvalidLevel(u32),

    #[error("simple factor L_{index} lies outside A_n (needs index < {bound})")]
    NotInAn { index: u64, bound: u64 },

    #[error("simple index {index} out of range (category has {num_simples} simples)")]
    BadSimpleIndex { index: u64, num_simples: u64 },

    #[error("Cartan matrix of Ver_{{{p}^{n}}} is singular over the rationals")]
    CartanSingular { p: u64, n: u32 },

    #[error("fusion table consistency check failed: {0}")]
    FusionConsistency(String),

    #[error("caller promise violated: {0}")]
    PromiseViolated(String),

    #[error("unsupported root system type `{0}`")]
    UnsupportedType(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight {0:?} is not in the closed fundamental alcove")]
    NotInClosedAlcove(Vec<i64>),

    #[error("weight has {got} coordinates, root datum has rank {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("p = {p} is below the Coxeter number h = {h}")]
    PrimeBelowCoxeter { p: u64, h: u64 },

    #[error("Laurent division is not exact")]
    DivisionNotExact,

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
