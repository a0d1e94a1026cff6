//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by algebraic operations, parsers and validators.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A functional was evaluated on a basis element above its truncation degree.
    #[error("degree {degree} exceeds the truncation bound {max_degree}")]
    DegreeExceeded { degree: u32, max_degree: u32 },

    /// An operation requiring a unital functional (value 1 on the empty
    /// multiset) received something else.
    #[error("functional is not unital: value at the empty multiset is {found}")]
    NotUnital { found: String },

    /// `exp_star` requires its argument to vanish on the empty multiset.
    #[error("functional does not vanish at the empty multiset: found {found}")]
    NotVanishing { found: String },

    /// A table-backed functional was queried outside its table.
    #[error("no stored value for `{multiset}`")]
    MissingEntry { multiset: String },

    /// A moment specification is incomplete or inconsistent.
    #[error("invalid moment specification: {0}")]
    InvalidSpec(String),

    /// A set-partition operation received a multiset with a count above one.
    #[error("`{multiset}` is not a set: letter `{letter}` has multiplicity {count}")]
    NotASet {
        multiset: String,
        letter: String,
        count: u32,
    },

    /// An enumeration would be too large; refused instead of hanging.
    #[error("enumeration guard: size {size} exceeds the limit {limit}")]
    EnumerationGuard { size: u32, limit: u32 },

    /// Text input did not match the expected grammar.
    #[error("parse error at byte {position}: {message} in `{input}`")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    /// A letter fell outside the alphabet of the operation.
    #[error("letter `{0}` is not part of the declared alphabet")]
    UnknownLetter(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            position,
            message: message.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
