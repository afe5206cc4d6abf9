//! Exact computer algebra for quasi-shuffle (stuffle) algebras.
//!
//! The kernel covers the quasi-shuffle product on the tensor module `T(R)` of
//! an associative coefficient algebra `R`, its splitting into the three
//! tridendriform operations `≺`, `≻`, `·`, the deconcatenation coproduct,
//! normal forms in the free commutative tridendriform (CTD) algebra, the
//! bialgebra compatibility laws, Rota-Baxter operators on finite algebras and
//! the Fubini-number combinatorics of ordered partitions.
//!
//! All linear algebra is generic over a [`Scalar`]; the aliases at the crate
//! root fix the scalar to arbitrary-precision rationals, which is what the
//! command-line front-end and the test suites use.

pub mod bialg;
pub mod coeff;
pub mod error;
pub mod freectd;
pub mod laws;
pub mod lincomb;
pub mod linalg;
pub mod rota;
pub mod sample;
pub mod scalar;
pub mod series;
pub mod syntax;
pub mod tensorq;

pub use coeff::{builtin_algebras, CoeffAlgebra, Letter};
pub use error::{Error, Result};
pub use freectd::{FreeTerm, OUPartition, Op};

pub use lincomb::LinComb;
pub use scalar::Scalar;
pub use tensorq::Word;

/// Arbitrary-precision rational scalars.
pub type Q = num_rational::BigRational;

/// Linear combination of coefficient-algebra letters over `Q`.
pub type CoeffCombination = coeff::CoeffCombination<Q>;
/// Element of the quasi-shuffle algebra `T^q(R)` over `Q`.
pub type TensorElement = tensorq::Tensor<Q>;
/// Element of `T(R) ⊗ T(R)` over `Q`.
pub type TensorSquareElement = tensorq::TensorSquare<Q>;
/// Element of an iterated tensor power `T(R)^{⊗k}` over `Q`.
pub type TensorPowerElement = tensorq::TensorPower<Q>;
/// Combination of normal combs in the free CTD-algebra over `Q`.
pub type NormalForm = freectd::NormalForm<Q>;
/// Finite-dimensional algebra with rational structure constants.
pub type FiniteAlgebra = rota::FiniteAlgebra<Q>;
/// Rational matrix acting on a [`FiniteAlgebra`].
pub type LinearOperator = rota::LinearOperator<Q>;
