use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("exponent vectors of different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("{0} variables exceed the supported maximum")]
    TooManyVariables(usize),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("projective dimension must be at least 3, got {0}")]
    DimensionTooSmall(usize),
    #[error("polynomials of mixed degrees {0} and {1}")]
    MixedDegrees(u32, u32),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("matrix has odd size {0}")]
    OddSize(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("matrix entry ({0}, {1}) has the wrong degree")]
    EntryDegree(usize, usize),
    #[error("element does not live in the ambient free module")]
    AmbientMismatch,
    #[error("quotient by the zero polynomial")]
    QuotientByZero,
    #[error("the unit ideal has no minimal generators in positive degree")]
    UnitIdeal,
    #[error("the zero module has no Hilbert invariants")]
    ZeroModule,
    #[error("expected codimension 2, found {0}")]
    WrongCodimension(usize),
    #[error("graded piece module window is incomplete")]
    IncompleteWindow,
    #[error("Cech stabilization cap {cap} exceeded at degree {degree}")]
    CechCapExceeded { cap: u32, degree: i32 },
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
