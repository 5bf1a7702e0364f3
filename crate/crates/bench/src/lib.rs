//! Fixed inputs for the benchmarks in benches/.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use btk_core::algebra::field::PrimeField;
use btk_core::algebra::matrix::GradedMatrix;
use btk_core::algebra::ring::Ring;
use btk_core::catalog;
use btk_core::cohomology::bundle::BundleOnP;

pub fn ring(n: usize) -> Ring<PrimeField> {
    Ring::new(PrimeField::default(), n + 1)
}

pub fn presentation(n: usize, name: &str) -> (Ring<PrimeField>, GradedMatrix<u32>) {
    let r = ring(n);
    let phi = catalog::build(&r, name).expect("catalog entry");
    (r, phi)
}

pub fn bundle(n: usize, name: &str) -> BundleOnP<PrimeField> {
    let (r, phi) = presentation(n, name);
    BundleOnP::new(&r, &phi).expect("locally free")
}

/// A split sum hidden behind `extra` redundant generators.
pub fn disguised_sum(n: usize, twists: &[i64], extra: usize, seed: u64) -> (Ring<PrimeField>, GradedMatrix<u32>) {
    let r = ring(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = catalog::disguise(&r, &catalog::split::<PrimeField>(twists), extra, &mut rng);
    (r, phi)
}
