use crate::algebra::{ComplexMatrix2, Momentum, PauliSpinor, C64};
use crate::associated::{AssociatedOperator, WaveSpinor};
use crate::error::{Error, Result};
use crate::polarization::PolarizationBasis;

use super::g_integral::g_integral;
use super::grid::QuadratureGrid;
use super::profile::{IsotropicProfile, PacketProfile};

/// Largest accepted |∫φ² - 1| on the grid.
pub const NORM_TOL: f64 = 1e-6;
/// Negative dispersions above -CLIP_TOL·max(1, ⟨A²⟩) are clipped to zero.
pub const CLIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observable {
    Energy,
    Momentum(usize),
    RadialMomentum,
    Velocity(usize),
    RadialVelocity,
    Position(usize),
    Spin(usize),
    Polarization,
    Orbital(usize),
}

impl Observable {
    pub const ALL: [Observable; 19] = [
        Observable::Energy,
        Observable::Momentum(0),
        Observable::Momentum(1),
        Observable::Momentum(2),
        Observable::RadialMomentum,
        Observable::Velocity(0),
        Observable::Velocity(1),
        Observable::Velocity(2),
        Observable::RadialVelocity,
        Observable::Position(0),
        Observable::Position(1),
        Observable::Position(2),
        Observable::Spin(0),
        Observable::Spin(1),
        Observable::Spin(2),
        Observable::Polarization,
        Observable::Orbital(0),
        Observable::Orbital(1),
        Observable::Orbital(2),
    ];

    pub fn name(&self) -> String {
        match *self {
            Observable::Energy => "H".into(),
            Observable::Momentum(i) => format!("P{}", i + 1),
            Observable::RadialMomentum => "P".into(),
            Observable::Velocity(i) => format!("V{}", i + 1),
            Observable::RadialVelocity => "V".into(),
            Observable::Position(i) => format!("X{}", i + 1),
            Observable::Spin(i) => format!("S{}", i + 1),
            Observable::Polarization => "Ws".into(),
            Observable::Orbital(i) => format!("L{}", i + 1),
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL.iter().find(|o| o.name() == name).copied().ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn needs_gradient(&self) -> bool {
        matches!(self, Observable::Position(_) | Observable::Orbital(_))
    }

    pub fn operator(&self, basis: PolarizationBasis) -> Result<AssociatedOperator> {
        let one = ComplexMatrix2::identity();
        match *self {
            Observable::Energy => Ok(AssociatedOperator::energy(basis)),
            Observable::Momentum(i) => AssociatedOperator::momentum(basis, i),
            Observable::RadialMomentum => {
                Ok(AssociatedOperator::multiplicative(
                    "P",
                    basis,
                    move |q| Ok(one * C64::from(q.magnitude())),
                )
                .with_hermitian(true))
            }
            Observable::Velocity(i) => AssociatedOperator::velocity(basis, i),
            Observable::RadialVelocity => Ok(AssociatedOperator::multiplicative("V", basis, move |q| {
                Ok(one * C64::from(q.magnitude() / q.energy()))
            })
            .with_hermitian(true)),
            Observable::Position(i) => AssociatedOperator::position(basis, i),
            Observable::Spin(i) => AssociatedOperator::spin(basis, i),
            Observable::Polarization => Ok(AssociatedOperator::polarization(basis)),
            Observable::Orbital(i) => AssociatedOperator::orbital(basis, i),
        }
    }
}

/// Expectation and dispersion known in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForm {
    pub expectation: f64,
    pub dispersion: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObservableStatistics {
    pub observable: Observable,
    pub expectation: f64,
    pub dispersion: f64,
    pub uncertainty: f64,
    pub closed_form: Option<ClosedForm>,
    pub error_estimate: f64,
    /// The raw dispersion was slightly negative and has been set to zero.
    pub clipped: bool,
}

impl ObservableStatistics {
    pub fn name(&self) -> String {
        self.observable.name()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatisticsReport {
    pub rows: Vec<ObservableStatistics>,
    /// ∫φ² on the grid.
    pub norm: f64,
    /// |norm - 1| plus the mass beyond the grid.
    pub error_estimate: f64,
}

impl StatisticsReport {
    pub fn get(&self, observable: Observable) -> Option<&ObservableStatistics> {
        self.rows.iter().find(|r| r.observable == observable)
    }
}

/// Value and gradient of a wave spinor frozen at one node.
struct Frozen {
    value: PauliSpinor,
    gradient: Option<[PauliSpinor; 3]>,
}

impl WaveSpinor for Frozen {
    fn value(&self, _: &Momentum) -> Result<PauliSpinor> {
        Ok(self.value)
    }

    fn gradient(&self, _: &Momentum) -> Result<[PauliSpinor; 3]> {
        self.gradient.ok_or_else(|| Error::MissingGradient("frozen spinor".into()))
    }
}

/// ⟨A⟩ = Re⟨α, Ãα⟩ and disp(A) = ⟨Ãα, Ãα⟩ - ⟨A⟩² for each observable.
pub fn statistics(
    profile: &PacketProfile,
    observables: &[Observable],
    grid: &QuadratureGrid,
) -> Result<StatisticsReport> {
    if let Some(o) = observables.iter().find(|o| o.needs_gradient()) {
        if !profile.has_gradient() {
            return Err(Error::MissingGradient(o.name()));
        }
    }
    let basis = *profile.basis();
    let ops = observables.iter().map(|o| o.operator(basis)).collect::<Result<Vec<_>>>()?;
    let need_grad = observables.iter().any(Observable::needs_gradient);
    let m = profile.mass();
    let sums = grid.integrate_many(1 + 2 * ops.len(), |p, out| {
        let q = Momentum::new(*p, m)?;
        let value = profile.value(&q)?;
        let gradient = if need_grad { Some(profile.gradient(&q)?) } else { None };
        let frozen = Frozen { value, gradient };
        out[0] = value.norm_squared();
        for (k, op) in ops.iter().enumerate() {
            let a = op.apply(&frozen, &q)?;
            out[1 + 2 * k] = value.dotc(&a).re;
            out[2 + 2 * k] = a.norm_squared();
        }
        Ok(())
    })?;
    let norm = sums[0];
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized(norm));
    }
    let defect = (norm - 1.0).abs() + grid.tail();
    let rows = observables
        .iter()
        .enumerate()
        .map(|(k, &o)| {
            let (mean, square) = (sums[1 + 2 * k], sums[2 + 2 * k]);
            let raw = square - mean * mean;
            let tol = CLIP_TOL * square.abs().max(1.0);
            let (dispersion, clipped) = if raw >= 0.0 {
                (raw, false)
            } else if raw >= -tol {
                (0.0, true)
            } else {
                return Err(Error::NegativeDispersion(o.name(), raw));
            };
            Ok(ObservableStatistics {
                observable: o,
                expectation: mean,
                dispersion,
                uncertainty: dispersion.sqrt(),
                closed_form: closed_form(profile, o)?,
                error_estimate: defect * square.abs().max(1.0),
                clipped,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StatisticsReport { rows, norm, error_estimate: defect })
}

/// Statistics of one observable on the profile's default grid.
pub fn expectation_and_dispersion(
    profile: &PacketProfile,
    observable: Observable,
) -> Result<ObservableStatistics> {
    let grid = profile.default_grid()?;
    let mut report = statistics(profile, &[observable], &grid)?;
    Ok(report.rows.remove(0))
}

/// disp(X^i(t)) = disp(X^i) + t²disp(V^i), both from quadrature.
pub fn position_dispersion_at_time(
    profile: &PacketProfile,
    t: f64,
    grid: &QuadratureGrid,
) -> Result<[f64; 3]> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidParameter(format!("t = {t} must be non-negative")));
    }
    let obs: Vec<Observable> =
        (0..3).map(Observable::Position).chain((0..3).map(Observable::Velocity)).collect();
    let r = statistics(profile, &obs, grid)?;
    Ok(std::array::from_fn(|i| r.rows[i].dispersion + t * t * r.rows[3 + i].dispersion))
}

/// Closed forms of the isotropic profile, from the G integrals.
impl IsotropicProfile {
    fn energy_of(&self, p: f64) -> f64 {
        (p * p + self.mass() * self.mass()).sqrt()
    }

    pub fn mean_energy(&self) -> Result<f64> {
        Ok(self.four_pi_n2() * g_integral(self.q(), 1.5, 2.0 * self.gamma(), self.mass())?)
    }

    /// ⟨H²⟩ = E(p̄)² + p̄/(2γ).
    pub fn mean_square_energy(&self) -> f64 {
        let e = self.energy_of(self.pbar());
        e * e + self.pbar() / (2.0 * self.gamma())
    }

    /// ⟨P²⟩ = p̄² + p̄/(2γ).
    pub fn mean_square_momentum(&self) -> f64 {
        self.pbar() * self.pbar() + self.pbar() / (2.0 * self.gamma())
    }

    pub fn mean_velocity(&self) -> Result<f64> {
        Ok(self.four_pi_n2() * g_integral(self.q() + 0.5, 0.5, 2.0 * self.gamma(), self.mass())?)
    }

    pub fn mean_square_velocity(&self) -> Result<f64> {
        Ok(self.four_pi_n2() * g_integral(self.q() + 1.0, 0.0, 2.0 * self.gamma(), self.mass())?)
    }

    /// disp(X^i) = γ²/(6(q - 1)).
    pub fn position_dispersion(&self) -> f64 {
        self.gamma() * self.gamma() / (6.0 * (self.q() - 1.0))
    }

    pub fn energy_dispersion(&self) -> Result<f64> {
        let h = self.mean_energy()?;
        Ok(self.mean_square_energy() - h * h)
    }

    pub fn velocity_dispersion(&self) -> Result<f64> {
        let v = self.mean_velocity()?;
        Ok(self.mean_square_velocity()? - v * v)
    }
}

fn closed(expectation: f64, dispersion: f64) -> Option<ClosedForm> {
    Some(ClosedForm { expectation, dispersion: Some(dispersion) })
}

/// Closed-form statistics, when known for this profile.
pub fn closed_form(profile: &PacketProfile, o: Observable) -> Result<Option<ClosedForm>> {
    let th = profile.theta_s();
    let (s, c) = (0.5 * th.sin(), 0.5 * th.cos());
    let e3 = *profile.basis() == PolarizationBasis::momentum_spin();
    match o {
        Observable::Polarization => return Ok(closed(c, s * s)),
        Observable::Spin(0) if e3 => return Ok(closed(s, c * c)),
        Observable::Spin(1) if e3 => return Ok(closed(0.0, 0.25)),
        Observable::Spin(2) if e3 => return Ok(closed(c, s * s)),
        _ => {}
    }
    let x0 = *profile.x0();
    let Some(iso) = profile.isotropic() else {
        if let Observable::Position(i) = o {
            return Ok(Some(ClosedForm { expectation: x0[i], dispersion: None }));
        }
        return Ok(None);
    };
    let p2 = iso.mean_square_momentum();
    Ok(match o {
        Observable::Energy => closed(iso.mean_energy()?, iso.energy_dispersion()?),
        Observable::Momentum(_) => closed(0.0, p2 / 3.0),
        Observable::RadialMomentum => closed(iso.pbar(), iso.pbar() / (2.0 * iso.gamma())),
        Observable::Velocity(_) => closed(0.0, iso.mean_square_velocity()? / 3.0),
        Observable::RadialVelocity => closed(iso.mean_velocity()?, iso.velocity_dispersion()?),
        Observable::Position(i) => closed(x0[i], iso.position_dispersion()),
        Observable::Orbital(i) => closed(0.0, p2 * (x0.norm_squared() - x0[i] * x0[i]) / 3.0),
        _ => None,
    })
}
