use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape mismatch for {what}: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        what: &'static str,
        expected: Vec<usize>,
        got: Vec<usize>,
    },

    #[error("{what} does not preserve the given subspace")]
    NotInvariant { what: &'static str },

    #[error("coassociativity fails on basis element {0}")]
    CoassociativityViolation(usize),

    #[error("counit law fails on basis element {0}")]
    CounitViolation(usize),

    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    AssociativityViolation(usize, usize, usize),

    #[error("unit law fails on basis element {0}")]
    UnitViolation(usize),

    #[error("bialgebra compatibility `{law}` fails on basis pair ({i}, {j})")]
    CompatibilityViolation {
        law: &'static str,
        i: usize,
        j: usize,
    },

    #[error("antipode identity fails")]
    AntipodeViolation,

    #[error("module law `{law}` fails on basis pair ({i}, {j})")]
    ModuleLawViolation {
        law: &'static str,
        i: usize,
        j: usize,
    },

    #[error("comultiplication is not a module map on basis pair ({i}, {j})")]
    ComoduleCompatibilityViolation { i: usize, j: usize },

    #[error("comodule law `{law}` fails on basis element {i}")]
    ComoduleLawViolation { law: &'static str, i: usize },

    #[error("Hopf module compatibility fails on basis pair ({i}, {j})")]
    HopfModuleViolation { i: usize, j: usize },

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("coradical does not split over the ground field (central element with minimal polynomial of degree {degree} has {roots} roots)")]
    NonSplitCoradical { degree: usize, roots: usize },

    #[error("subspace is not a coideal; witness {witness:?}")]
    NotACoideal { witness: Vec<String> },

    #[error("subspace is not a subcoalgebra")]
    NotASubcoalgebra,

    #[error("subspace is not stable under the action")]
    NotASubmodule,

    #[error("subspace is not a Hopf submodule")]
    NotAHopfSubmodule,

    #[error("bialgebra has no antipode")]
    NotHopf,

    #[error("summands are defined over different bialgebras")]
    MixedBialgebra,

    #[error("module coalgebra and comodule live over different coalgebras")]
    MismatchedCoalgebra,

    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),

    #[error("no primitive {n}-th root of unity in F_{p}")]
    NoRootOfUnity { n: u64, p: u64 },

    #[error("characteristic {0} is not allowed here")]
    BadCharacteristic(u64),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("the semisimple class is defined over the trivial bialgebra only")]
    ClassRequiresTrivialBialgebra,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
