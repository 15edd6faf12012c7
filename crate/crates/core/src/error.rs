use alloc::string::String;
use core::fmt;

/// Errors raised by group construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The requested structure would exceed a configured cap.
    CapExceeded {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    /// Subgroup lattice construction hit its cap.
    LatticeTooLarge { cap: usize },
    /// Permutations of different degrees were mixed.
    DegreeMismatch { expected: usize, found: usize },
    /// A claimed subgroup is not closed under the group operations.
    NotSubgroup,
    /// The subgroup passed to a quotient is not normal.
    NotNormal,
    /// A semidirect action is not a homomorphism into the automorphisms.
    InvalidAction(String),
    /// Malformed input data (tables, permutations, parameters).
    Invalid(String),
    /// An input path is not an induced path of the quotient graph.
    InvalidPath(String),
    /// A guaranteed search was exhausted; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::CapExceeded { what, needed, cap } => {
                write!(f, "{what} needs {needed} but the cap is {cap}")
            }
            GroupError::LatticeTooLarge { cap } => {
                write!(f, "lattice too large: cap is {cap}")
            }
            GroupError::DegreeMismatch { expected, found } => {
                write!(
                    f,
                    "permutation degree mismatch: expected {expected}, found {found}"
                )
            }
            GroupError::NotSubgroup => write!(f, "member set is not a subgroup"),
            GroupError::NotNormal => write!(f, "subgroup is not normal"),
            GroupError::InvalidAction(msg) => write!(f, "invalid action: {msg}"),
            GroupError::Invalid(msg) => write!(f, "{msg}"),
            GroupError::InvalidPath(msg) => write!(f, "invalid path: {msg}"),
            GroupError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for GroupError {}
