use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("irreducibility is undefined for the constant polynomial {0}")]
    ConstantPolynomial(String),

    #[error("length must be at least 1")]
    ZeroLength,

    #[error("cannot parse polynomial {text:?}: {reason}")]
    PolyParse { text: String, reason: String },

    #[error("{generator} does not divide x^{n}+1 (remainder {remainder})")]
    NotADivisor {
        n: usize,
        generator: String,
        remainder: String,
    },

    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("cannot parse codeword {text:?}: {reason}")]
    WordParse { text: String, reason: String },

    #[error("code dimension {dimension} exceeds the enumeration limit {limit}")]
    DimensionTooLarge { dimension: usize, limit: usize },

    #[error("a {rows}x{cols} layout does not match a word of length {len}")]
    LayoutMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("cannot parse cycle notation {text:?}: {reason}")]
    CycleParse { text: String, reason: String },

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length {n} exceeds the brute-force limit {max_n}; verify constructively instead (aut-construct / verify-table) or raise --max-n")]
    BruteForceLimit { n: usize, max_n: usize },

    #[error("cannot parse order {text:?}: {reason}")]
    OrderParse { text: String, reason: String },

    #[error("manifest: {0}")]
    Manifest(String),
}
