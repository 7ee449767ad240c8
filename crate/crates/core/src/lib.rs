//! Momentum-space operators of the free Dirac field and wave-packet statistics.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod associated;
pub mod error;
pub mod numeric;
pub mod operators;
pub mod packet;
pub mod polarization;
pub mod sampling;
pub mod spinors;
pub mod verify;

pub use algebra::{ComplexMatrix2, ComplexMatrix4, Momentum, PauliSpinor, SpatialOperator, Vec3, C64};
pub use associated::{AssociatedOperator, KernelKind, OscillatingKernel, WaveSpinor};
pub use error::{Error, Result};
pub use operators::FourierOperator;
pub use packet::{
    figure_data, make_isotropic, statistics, Figure, FigureTable, IsotropicProfile, Observable,
    PacketProfile, QuadratureGrid, StatisticsReport,
};
pub use polarization::{PolarizationBasis, Spin};
pub use verify::{run_suite, Report, VerifyConfig};
