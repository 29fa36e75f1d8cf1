use thiserror::Error;

/// Every failure mode of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    MixedAlgebras,
    #[error("the zero element has no inverse")]
    ZeroInverse,
    #[error("nonzero element is not invertible; the parameters do not define a division algebra")]
    ZeroDivisorDetected,
    #[error("invalid algebra parameters: {0}")]
    InvalidDescriptor(String),
    #[error("elements are not conjugate")]
    NotConjugate,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("the right factor vanishes at the evaluation point")]
    RightFactorVanishes,
    #[error("operation not supported for this algebra: {0}")]
    UnsupportedAlgebra(&'static str),
    #[error("factors {0} and {1} lie in the same conjugacy class")]
    ClassesNotDistinct(usize, usize),
    #[error("factor {0} is central")]
    CentralFactor(usize),
    #[error("the first factor is central")]
    CentralFirstFactor,
    #[error("factor list is empty")]
    EmptyFactorList,
    #[error("minimal polynomial has degree {0}, need more than 2")]
    MinimalPolynomialTooSmall(usize),
    #[error("the two elements commute")]
    ElementsCommute,
    #[error("polynomial vanishes on the whole conjugacy class")]
    VanishesOnClass,
    #[error("no non-root witness found after {0} samples")]
    WitnessSearchExhausted(usize),
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("coefficient written to the right of x at position {pos}")]
    NoncommutativeAmbiguity { pos: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn syntax(pos: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            message: message.into(),
        }
    }

    /// Short stable identifier, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MixedAlgebras => "MixedAlgebras",
            Error::ZeroInverse => "ZeroInverse",
            Error::ZeroDivisorDetected => "ZeroDivisorDetected",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::NotConjugate => "NotConjugate",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::RightFactorVanishes => "RightFactorVanishes",
            Error::UnsupportedAlgebra(_) => "UnsupportedAlgebra",
            Error::ClassesNotDistinct(..) => "ClassesNotDistinct",
            Error::CentralFactor(_) => "CentralFactor",
            Error::CentralFirstFactor => "CentralFirstFactor",
            Error::EmptyFactorList => "EmptyFactorList",
            Error::MinimalPolynomialTooSmall(_) => "MinimalPolynomialTooSmall",
            Error::ElementsCommute => "ElementsCommute",
            Error::VanishesOnClass => "VanishesOnClass",
            Error::WitnessSearchExhausted(_) => "WitnessSearchExhausted",
            Error::InternalContradiction(_) => "InternalContradiction",
            Error::Syntax { .. } => "SyntaxError",
            Error::NoncommutativeAmbiguity { .. } => "NoncommutativeAmbiguity",
        }
    }
}
