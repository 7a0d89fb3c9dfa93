//! Partitions, b-cores and quotients, the Mullineux involution, generalized
//! column regularization, and trajectories across Farey walls.

pub mod colreg;
pub mod cores;
pub mod error;
pub mod fraction;
pub mod mullineux;
pub mod partition;
pub mod render;
pub mod verify;
pub mod wallcross;

pub use colreg::{column_regularize, slope_stats, BoxSet, Ladder, SlopeStats};
pub use cores::{
    core, core_quotient, is_core, quotient, regular_decomposition, CoreQuotient,
    RegularDecomposition,
};
pub use error::{Error, Result};
pub use fraction::ReducedFraction;
pub use mullineux::{mullineux_transpose, wallcross_map};
pub use partition::{enumerate_partitions, Cell, Partition};
pub use wallcross::{
    breaks, farey, intervals, trajectory, Algorithm, BreakList, FareyInterval, Trajectory,
};
