//! Exact scalar tower: cyclotomic numbers, Laurent polynomials, power series and graded characters.

mod cyclo;
mod graded;
mod laurent;
mod series;

pub use cyclo::{cyclotomic_polynomial, totient, CycloScalar, DEFAULT_LEVEL_CAP, MAX_TABLE_LEVEL};
pub use graded::GradedDim;
pub(crate) use laurent::{coeff_prefix, fmt_q_power};
pub use laurent::{eval_minus_one, quantum_integer, LaurentPoly};
pub use series::{series_quotient_power, PowerSeries};
