//! Exact symbolic computation in quantum groups and their iquantum
//! (split) coideal subalgebras.
//!
//! The engine works over `Q(q)` and provides the quantum group with its Hopf
//! structure, the divided powers of the iquantum generators, the adjoint
//! action, small highest-weight representations and a verification driver
//! for a catalog of identities.

pub mod adjoint;
pub mod cartan;
pub mod cli;
pub mod error;
pub mod idivided;
pub mod memo;
pub mod pbw;
pub mod qfield;
pub mod repmod;
pub mod uq;

pub use error::{Error, Result};
