use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ell = {ell} does not divide p - 1 = {}", .p - 1)]
    DivisibilityFail { p: u64, ell: u64 },
    #[error("modulus {0} is too large (p must be below 2^31)")]
    ModulusTooLarge(u64),
    #[error("field of size {p}^{degree} does not fit the exponent range")]
    FieldTooLarge { p: u64, degree: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("elements belong to different groups (ell = {0} vs {1})")]
    MixedModulus(u64, u64),
    #[error("root^ell = 1: epsilon degenerates")]
    DegenerateSpecialization,
    #[error("operation requires ell = {expected}, got {got}")]
    WrongEll { expected: u64, got: u64 },
    #[error("a = {0} is not admissible")]
    DegenerateA(u64),
    #[error("a = {0} has no ell-th root in F_p")]
    NotResidue(u64),
    #[error("A_ell expansion has a nonzero coefficient in degree {degree}, not a multiple of ell")]
    PolynomialityViolation { degree: usize },
    #[error("both power residue symbols must be trivial")]
    SymbolNotTrivial,
    #[error("field has no element of order {0}")]
    NoRootOfUnity(u64),
    #[error("ell = {0} is not supported here")]
    UnsupportedEll(u64),
    #[error("cannot write output: {0}")]
    Output(String),
    #[error("internal invariant violated: {0}")]
    InternalError(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
