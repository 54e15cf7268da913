//! Verification suites. Each returns a [`SuiteReport`](crate::report::SuiteReport)
//! whose checks drive the CLI exit code.

pub mod expansions;
pub mod identity;
pub mod periods;
pub mod sampled;

pub use expansions::{expansions, l_values};
pub use identity::{identity, IdentityOptions};
pub use periods::{cusp_period_report, eisenstein_period_report, periods_suite};
pub use sampled::{cusp_limits, elliptic, jet_route, modular, SampleOptions};
