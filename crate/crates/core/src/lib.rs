//! Exact computations of local K-moduli at toric del Pezzo quotient
//! surfaces: cyclic quotient singularities, the surfaces `X_l`, `Y_l` with
//! their Q-Gorenstein deformation spaces, and affine torus GIT quotients.

pub mod arith;
pub mod cqsing;
pub mod moduli;
pub mod quotsurf;
pub mod torusgit;

pub use cqsing::{Character, CyclicQuotientSingularity, NormalForm};
pub use moduli::{local_model, table, unboundedness_witness, LocalModuliModel, SurfaceId};
pub use quotsurf::{Ambient, CyclicAction, Family};
pub use torusgit::{SupportPoint, WeightSystem};
