use thiserror::Error;

use crate::group::Vertex;
use crate::verify::PrevalenceReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters (k={k}, l={l}): k must be at least 1")]
    InvalidParams { k: i64, l: i64 },

    #[error("G({k},{l}) is not 4-regular")]
    NotFourRegular { k: i64, l: i64 },

    #[error("the given elements do not generate the group")]
    NotGenerating,

    #[error("isomorphism chain starts at G({chain_k},{chain_l}) but the input lives on G({k},{l})")]
    ChainMismatch {
        chain_k: i64,
        chain_l: i64,
        k: i64,
        l: i64,
    },

    #[error("transpose is undefined for l = 0")]
    DegenerateTranspose,

    #[error("malformed decomposition: {0}")]
    Malformed(String),

    #[error("edge set is not 2-regular at vertex {0}")]
    NotTwoRegular(Vertex),

    #[error("window of {levels} levels is too small (need at least {min})")]
    WindowTooSmall { levels: i64, min: i64 },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("fixture `{name}` does not match its stored report: {detail}")]
    FixtureMismatch { name: String, detail: String },

    #[error("no lift solution for G({k},{l}) in mode {mode}")]
    NoLiftSolution { k: i64, l: i64, mode: String },

    #[error("quotient order |k+l| = {0} is smaller than 3")]
    QuotientTooSmall(i64),

    #[error("decomposition is not prevalent enough for this extension step")]
    NotPrevalent(Box<PrevalenceReport>),

    #[error("extension in l requires l > 0")]
    LNotPositive,

    #[error("input is not a valid decomposition for any mode")]
    NotADecomposition,

    #[error("internal check failed: {0}")]
    VerificationRegression(String),

    #[error(
        "mode {mode} is impossible on G({k},{l}): the level cut has {cut_size} edges, \
         and a Hamiltonian double-ray meets a two-sided finite cut an odd number of times"
    )]
    ParityMismatch {
        k: i64,
        l: i64,
        mode: String,
        cut_size: i64,
    },

    #[error("the square grid is not handled by the constructor")]
    SquareGridUnsupported,

    #[error("level range [{lo}, {hi}] is too small; at least {min} levels are required")]
    RangeTooSmall { lo: i64, hi: i64, min: i64 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
