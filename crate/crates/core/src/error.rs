use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision {0} is below the minimum of 64 bits")]
    InvalidPrecision(usize),
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("cubic has complex roots (negative discriminant)")]
    NegativeDiscriminant,
    #[error("cubic is not a Ramanujan cubic polynomial")]
    NotAnRcp,
    #[error("a + b + 3 is not zero")]
    ConditionFiveViolated,
    #[error("no real root of the t-cubic satisfies the cube-root sum identity")]
    NoSuitableT,
    #[error("no generated candidate was accepted after {0} attempts")]
    GeneratorExhausted(usize),
    #[error("scale factor is zero")]
    ZeroScale,
    #[error("no bijection within tolerance (best residual {0})")]
    NoBijection(String),
    #[error("ambiguous match: two targets lie within twice the tolerance")]
    AmbiguousMatch,
    #[error("cubic has a repeated root")]
    RepeatedRoot,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("doubling orbit of {m} modulo {n} has size {size}, not 3")]
    OrbitNotCubic { n: u64, m: u64, size: usize },
    #[error("coefficient {value} has no rational reconstruction with denominator <= {max_den}")]
    ReconstructionFailed { value: String, max_den: String },
}
