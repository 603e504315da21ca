use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must hold between 1 and 255 letters, got {0}")]
    AlphabetSize(usize),

    #[error("letter `{0}` appears more than once in the alphabet")]
    DuplicateLetter(String),

    #[error("`{0}` is not a letter of the alphabet")]
    UnknownLetter(String),

    #[error("letter map is not total over the alphabet")]
    IncompleteMap,

    #[error("letter map is not a permutation of the alphabet")]
    NotPermutation,

    #[error("letter map is not an involution: `{0}` is not mapped back to itself")]
    NotInvolutive(String),

    #[error("operands are defined over different alphabets")]
    AlphabetMismatch,

    #[error("exponent must be at least 2, got {0}")]
    BadExponent(usize),

    #[error("unknown built-in morphism `{0}`")]
    UnknownName(String),

    #[error("morphism is not prolongable at `{0}`")]
    NotProlongable(String),

    #[error("unsupported setting: {0}")]
    BadSetting(String),

    #[error("word of length {len} exceeds the match-matrix cap of {cap}")]
    TooLong { len: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
