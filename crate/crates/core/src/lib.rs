//! Exact computation in Ore extensions `S = K[y][x; σ, δ]` with
//! `deg_y σ(y) >= 2`, and bounded computation of centralizers `C_S(P)`.
//!
//! The algebra is generic over the scalar field through [`Scalar`]; the
//! aliases below fix the common choices.
//!
//! ```
//! use orecent_core::{parse_skew, parse_ypoly, FieldDescriptor, QContext};
//!
//! let f = FieldDescriptor::Rationals;
//! let ctx = QContext::new(f, parse_ypoly("y^2", &f).unwrap(), parse_ypoly("1", &f).unwrap()).unwrap();
//! let p = parse_skew("x*y", &ctx).unwrap();
//! assert_eq!(p.to_string(), "(y^2)*x + 1");
//! ```

pub mod centralizer;
pub mod criteria;
pub mod linalg;
pub mod ore;
pub mod poly;
pub mod scalar;
pub mod text;

use thiserror::Error;

pub use centralizer::{
    admissible_degrees, centralizer_space, centralizer_space_with, check_commutative, classify_set,
    is_polynomial_in_p, leading_constraint, module_generators, reduce_by, Bounds,
    CentralizerReport, DegreeConstraint, SetClassification, SetVerdict,
};
pub use criteria::{
    criterion_prime_degree, criterion_pure_power_sigma, criterion_small_leading, monomial_generator,
    repunit, repunit_gcd, CriteriaVerdicts, MonomialGenerator, PurePowerVerdict,
};
pub use linalg::ExactMatrix;
pub use ore::{OreContext, SkewPoly};
pub use poly::YPoly;
pub use scalar::{FieldDescriptor, FieldElem, Fp, Scalar};
pub use text::{format_skew, format_ypoly, parse_skew, parse_ypoly};

/// Arbitrary-precision rationals, the reference field.
pub type Rational = num_rational::BigRational;
/// The prime field with 10007 elements.
pub type F10007 = Fp<10007>;

pub type QPoly = YPoly<Rational>;
pub type QSkew = SkewPoly<Rational>;
pub type QContext = OreContext<Rational>;
pub type QMatrix = ExactMatrix<Rational>;

pub type DynPoly = YPoly<FieldElem>;
pub type DynSkew = SkewPoly<FieldElem>;
pub type DynContext = OreContext<FieldElem>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero")]
    DivisionByZero,
}

impl Error {
    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
