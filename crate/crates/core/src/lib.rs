//! t-analogs of q-characters for quantum loop algebras of simply-laced type.
//!
//! Modules are layered: [`root_data`] (Cartan data, roots, weights),
//! [`tcoeff`] (Laurent polynomials in `t`), [`ymono`] (monomials in the
//! `Y_{i,s}`, pairings), [`qtpoly`] (characters and products),
//! [`engine`] (fundamental, standard, simple and KR characters) and
//! [`systems`] (T-system, Q-system, fermionic formulas).

pub mod engine;
pub mod error;
pub mod qtpoly;
pub mod root_data;
pub mod systems;
pub mod tcoeff;
pub mod ymono;

pub use engine::{Engine, KLResult};
pub use error::{Error, Result};
pub use qtpoly::{GCharacter, QCharacter, QtCharacter};
pub use root_data::{Family, LieType, RootVector, Weight};
pub use systems::{NuConfig, VerifyReport};
pub use tcoeff::{Convention, TPoly};
pub use ymono::{AVector, DrinfeldPoly, YMonomial, YVar};
