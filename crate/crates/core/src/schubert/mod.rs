//! Integral cohomology of Grassmannians in the Schubert basis.

mod class;
mod lr;
mod partition;
mod pieri;
mod special;

pub use class::CohomologyClass;
pub use lr::{lr_coefficients, lr_multiply, schubert_product};
pub use partition::{complement_in_box, conjugate, BoxShape, Partition};
pub use pieri::{horizontal_strips, pieri_col, pieri_row, times_sigma1_pow, vertical_strips};
pub use special::{sigma1r_power_table, special_sum};
