//! Exact engine for wreath-product superalgebras, the quantized twisted Heisenberg algebra and
//! its categorical action by induction and restriction bimodules.

pub mod bimodcat;
pub mod error;
pub mod fock_oracle;
pub mod heisenberg;
pub mod report;
pub mod scalars;
pub mod wreath;

pub use error::{Error, Result};
pub use report::{Record, Report};
pub use scalars::{CycloScalar, GradedDim, LaurentPoly, PowerSeries};
pub use wreath::{CartanData, WreathBasisWord, WreathElem};
