//! User pairing and power allocation for RIS-assisted uplink NOMA under
//! imperfect phase compensation.
//!
//! The crate is layered bottom-up:
//!
//! - [`channel`]: phase-error degradation `sinc²(δ)`, array responses,
//!   effective CSI and the OMA/NOMA rate formulas.
//! - [`mpa`]: maximum-sum-rate pairing (bounds on the weak user's power,
//!   the phase-error criterion, the closed-form allocation and its KKT
//!   candidates).
//! - [`eepa`]: energy-efficiency pairing solved with Dinkelbach's method.
//! - [`pairing`]: strongest-with-weakest pairing over a cell and the
//!   scheme dispatch, including the SRM and OMA baselines.
//! - [`syslevel`]: Poisson deployments, path loss, association and the
//!   Monte-Carlo campaign producing mean/CDF metrics.
//! - [`experiment`]: declarative experiment configs and the table
//!   runners behind the `risnoma` binary.
//!
//! ```
//! use ris_noma::channel::{EffectiveCsi, PhaseModel};
//! use ris_noma::mpa::{allocate_mpa, Mode, RateTargets, TargetPolicy};
//!
//! let strong = EffectiveCsi::from_db(8.0).unwrap();
//! let weak = EffectiveCsi::from_db(5.0).unwrap();
//! let phase = PhaseModel::from_degrees(11.0).unwrap();
//! let targets = RateTargets::for_pair(TargetPolicy::default(), strong, weak, &phase).unwrap();
//! let decision = allocate_mpa(&targets, strong, weak, &phase).unwrap();
//! assert_eq!(decision.mode, Mode::Noma);
//! assert_eq!(decision.alpha1, 1.0);
//! ```

pub mod channel;
pub mod eepa;
pub mod error;
pub mod experiment;
pub mod mpa;
pub mod oracle;
pub mod pairing;
pub mod polytope;
pub mod search;
pub mod syslevel;
pub mod units;

pub use error::{Error, Result};
