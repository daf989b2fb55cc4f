//! Exact computations in type-A rational and trigonometric shuffle
//! superalgebras.

pub mod exactalg;
pub mod io;
pub mod root_data;
pub mod shuffle;
pub mod shuffle_trig;
pub mod specialization;
