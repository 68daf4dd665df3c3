//! Symmetric functions as basis-tagged sparse expansions.

mod convert;
mod expansion;
mod lr;
mod plethysm;
mod scalar;

pub use convert::{basis_element_in_schur, to_basis, to_schur};
pub use expansion::SymExpansion;
pub use lr::{
    lr_coefficient, lr_product, perp, pieri, schur_multiply, skew_or_perp, skew_schur, PieriKind,
};
pub use plethysm::{omega, omega_t, plethystic_substitute, Alphabet};
pub use scalar::{coproduct, power_sum_norm_qt, scalar_hall, scalar_qt, z_lambda};

pub(crate) use convert::solve_unitriangular;

use std::fmt;

use thiserror::Error;

use crate::exactalg::RingTag;

/// Basis tag of a [`SymExpansion`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    Schur,
    HallLittlewood,
    KSplit(usize),
    KSchur(usize),
    MacJ,
    MacH,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::E => "E",
            Basis::H => "H",
            Basis::P => "P",
            Basis::Schur => "SCHUR",
            Basis::HallLittlewood => "HL",
            Basis::KSplit(_) => "KSPLIT",
            Basis::KSchur(_) => "KSCHUR",
            Basis::MacJ => "MACJ",
            Basis::MacH => "MACH",
        }
    }

    pub fn k(self) -> Option<usize> {
        match self {
            Basis::KSplit(k) | Basis::KSchur(k) => Some(k),
            _ => None,
        }
    }

    pub fn from_name(name: &str, k: Option<usize>) -> Option<Self> {
        Some(match name.to_ascii_uppercase().as_str() {
            "M" => Basis::M,
            "E" => Basis::E,
            "H" => Basis::H,
            "P" => Basis::P,
            "SCHUR" | "S" => Basis::Schur,
            "HL" | "HALL" => Basis::HallLittlewood,
            "KSPLIT" => Basis::KSplit(k?),
            "KSCHUR" => Basis::KSchur(k?),
            "MACJ" => Basis::MacJ,
            "MACH" => Basis::MacH,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Basis::M | Basis::E | Basis::H | Basis::P | Basis::Schur)
    }

    /// Short symbol used when printing terms.
    fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::Schur => "s",
            Basis::HallLittlewood => "H",
            Basis::KSplit(_) => "G",
            Basis::KSchur(_) => "sk",
            Basis::MacJ => "J",
            Basis::MacH => "Hqt",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}({k})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("conversion from {from} to {to} is not supported")]
    UnsupportedConversion { from: String, to: String },
    #[error("operation needs a different coefficient ring than {0}")]
    UnsupportedRing(&'static str),
    #[error("expansion is not in the span of the {0} basis (residual at {1})")]
    NotInSubspace(String, String),
    #[error("bases differ: {0} vs {1}")]
    BasisMismatch(String, String),
    #[error("malformed expansion document: {0}")]
    Malformed(String),
}

impl SymError {
    pub(crate) fn ring(tag: RingTag) -> Self {
        SymError::UnsupportedRing(tag.name())
    }
}
