//! Exact computation in the ıHall algebra of the Jordan quiver and in the
//! ring Λ_{t,θ} of ıHall-Littlewood functions.

pub mod error;
pub mod exactalg;

pub use error::{Error, Result};
pub use exactalg::{CoeffTTheta, Poly, RatFn, Rational};
pub mod partitions;

pub use partitions::Partition;
pub mod giambelli;
pub use giambelli::{Expansion, VExpr};
pub mod pieri;
pub mod hall;
pub use hall::HallPoly;
pub mod ihall;
pub use ihall::IHallElement;
pub mod genfun;
pub mod realize;
pub mod suite;
