//! One-particle wave packets: preparation, cone filtering and statistics.

mod cone;
mod figures;
mod g_integral;
mod grid;
mod profile;
mod stats;

pub use cone::{cone_filter, ConeFilter, RadialMoment, RadialStatistics};
pub use figures::{figure_data, Figure, FigureTable};
pub use g_integral::{g_integral, g_integral_with_error, half_line_integral};
pub use grid::{QuadratureGrid, DEFAULT_AZIMUTH, DEFAULT_POLAR, DEFAULT_RADIAL};
pub use profile::{make_isotropic, IsotropicProfile, PacketProfile};
pub use stats::{
    closed_form, expectation_and_dispersion, position_dispersion_at_time, statistics, ClosedForm, Observable,
    ObservableStatistics, StatisticsReport, CLIP_TOL, NORM_TOL,
};
