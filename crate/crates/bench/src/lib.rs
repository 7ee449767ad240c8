//! Fixtures shared by the benchmarks.

use dirac_core::sampling::MomentumSampler;
use dirac_core::{make_isotropic, Momentum, PacketProfile, Vec3};

/// Seeded momenta with |p|/m spread over the default sampling range.
pub fn momenta(n: usize) -> Vec<Momentum> {
    MomentumSampler::new(11, 1.0).sample_n(n)
}

/// The isotropic packet with γ = 1, p̄ = 2, m = 1.
pub fn reference_packet() -> PacketProfile {
    make_isotropic(1.0, 2.0, 1.0)
        .and_then(|iso| iso.packet(0.6, Vec3::new(0.3, -0.2, 0.1)))
        .expect("reference parameters are admissible")
}
