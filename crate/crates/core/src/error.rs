use thiserror::Error;

/// Errors produced by set construction, sumset evaluation, and certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval [{lo},{hi}] out of bounds for modulus {n}")]
    IntervalOutOfBounds { lo: i64, hi: i64, n: u32 },

    #[error("residue {value} is not a least residue modulo {n}")]
    ResidueOutOfRange { value: u32, n: u32 },

    #[error("fold must be at least 1")]
    InvalidFold,

    #[error("brute-force oracle limit exceeded (|base|={size}, fold={fold})")]
    OracleTooLarge { size: usize, fold: u32 },

    #[error("set contains 0; restricted sumsets require 0 to be absent")]
    ZeroInSet,

    #[error("integer-ambient sumset would wrap: fold * max(S) = {max_sum} >= n = {n}")]
    AmbientOverflow { max_sum: u64, n: u32 },

    #[error("l must be even (l = {ell})")]
    OddEll { ell: u32 },

    #[error("l must be an even integer >= 4 (l = {ell})")]
    EllTooSmall { ell: u32 },

    #[error("n = {n} out of range: construction requires odd n > {bound}")]
    OutOfRange { n: u32, bound: u64 },

    #[error("k = {k} violates the hypothesis k >= {min_k}")]
    KTooSmall { k: u64, min_k: u64 },

    #[error("key lemma hypothesis violated: alpha = {alpha} < 2t + 2l - 2 = {min_alpha}")]
    KeyLemmaRange { alpha: u64, min_alpha: u64 },

    #[error("composition ({b1},{b2},{b3}) does not sum to l = {ell}")]
    InvalidComposition { b1: u32, b2: u32, b3: u32, ell: u32 },

    #[error("bipartite generator requires even n (n = {n})")]
    OddN { n: u32 },

    #[error("bipartite generator requires n/2 >= ceil((l+1)/2): n = {n}, l = {ell}")]
    BipartiteTooSmall { n: u32, ell: u32 },

    #[error("connection set must be symmetric; {value} lacks its negation")]
    AsymmetricConnection { value: u32 },

    #[error("connection set must not contain 0")]
    ZeroInConnection,

    #[error("cycle length must be at least 3 (k = {k})")]
    InvalidCycleLength { k: u32 },

    #[error("operation requires a symmetric set; {value} lacks its negation")]
    SymmetryRequired { value: u32 },

    #[error("set does not certify as a saturation witness; rsat report refused")]
    CertificateRequired,

    #[error("result log I/O failed: {0}")]
    LogIo(String),
}

pub type Result<T> = std::result::Result<T, Error>;
