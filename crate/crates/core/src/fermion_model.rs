//! Single-particle Hamiltonians of the dimerized chain and of the lattice
//! Dirac model, together with their analytic bands.
//!
//! These are the fermion side of every correspondence check: the boson blocks
//! in [`crate::bondboson`] are compared against sums of the band energies
//! computed here, and the band energies are in turn checked against exact
//! diagonalization of the real-space matrices.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::lattice::{Boundary, ChainSpec, SquareSpec};
use crate::numerics::{c64, eigenvalues, ComplexScalar, HermitianMatrix};

/// Conduction (`plus`) and valence (`minus`) energies at one momentum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BandEnergy {
    pub plus: f64,
    pub minus: f64,
    /// Kinetic part, `2 t0 cos K` for the chain.
    pub epsilon: f64,
    /// Gap parameter, `4 alpha_u sin K` for the chain and the mass for Dirac.
    pub gap: f64,
}

impl BandEnergy {
    fn from_magnitude(e: f64, epsilon: f64, gap: f64) -> Self {
        Self {
            plus: e,
            minus: -e,
            epsilon,
            gap,
        }
    }

    pub fn magnitude(&self) -> f64 {
        self.plus
    }
}

/// Hopping amplitude on bond `(n, n+1)`: `-t0 + (-1)^n 2 alpha_u`.
pub fn ssh_bond_amplitude(spec: &ChainSpec, n: usize) -> f64 {
    let stagger = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    -spec.t0 + stagger * 2.0 * spec.alpha_u
}

/// Real-space single-particle SSH matrix for one spin channel.
///
/// On a two-site ring the bonds `(0,1)` and `(1,0)` connect the same pair of
/// sites; their amplitudes are summed into a single matrix entry.
pub fn ssh_hopping_matrix(spec: &ChainSpec) -> Result<HermitianMatrix> {
    spec.validate()?;
    let n = spec.n_sites;
    let mut entries = vec![ComplexScalar::default(); n * n];
    for site in 0..n {
        let next = (site + 1) % n;
        let mut t = ssh_bond_amplitude(spec, site);
        if next == 0 && spec.boundary == Boundary::Antiperiodic {
            t = -t;
        }
        entries[site * n + next] += c64(t, 0.0);
        entries[next * n + site] += c64(t, 0.0);
    }
    HermitianMatrix::from_entries(n, entries)
}

/// `E_K = ±sqrt((2 t0 cos K)^2 + (4 alpha_u sin K)^2)`.
pub fn ssh_band_energy(k: f64, t0: f64, alpha_u: f64) -> BandEnergy {
    let epsilon = 2.0 * t0 * k.cos();
    let gap = 4.0 * alpha_u * k.sin();
    BandEnergy::from_magnitude(epsilon.hypot(gap), epsilon, gap)
}

/// Full analytic single-particle spectrum of the real-space SSH matrix.
///
/// Cell momentum `Q` on the `n_cells` grid gives the pair `±E(Q/2)`, so the
/// spectrum is `{±E(pi j / n_cells)}` for periodic chains.
pub fn ssh_analytic_spectrum(spec: &ChainSpec) -> Vec<f64> {
    let mut out: Vec<f64> = spec
        .cell_momenta()
        .radians()
        .iter()
        .flat_map(|[q]| {
            let e = ssh_band_energy(0.5 * q, spec.t0, spec.alpha_u);
            [e.minus, e.plus]
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Mode index of component `comp` (0 = c, 1 = b) at `(x, y)`: site-major,
/// then component.
pub fn dirac_mode(spec: &SquareSpec, x: usize, y: usize, comp: usize) -> usize {
    2 * (x * spec.ly + y) + comp
}

/// Hopping terms `c†_{xy} b_{x',y'}` of the lattice Dirac Hamiltonian, as
/// `((x', y') offset, amplitude)`.
pub(crate) const DIRAC_CB_HOPS: [((isize, isize), Complex64); 4] = [
    ((-1, 0), Complex64::new(1.0, 0.0)),
    ((1, 0), Complex64::new(-1.0, 0.0)),
    ((0, 1), Complex64::new(0.0, 1.0)),
    ((0, -1), Complex64::new(0.0, -1.0)),
];

/// Real-space single-particle Dirac matrix over modes `{c_xy, b_xy}`.
///
/// `c†(b_{x-1} - b_{x+1}) + i c†(b_{y+1} - b_{y-1})` plus its Hermitian
/// conjugate, and `+delta` on `c` modes, `-delta` on `b` modes.
pub fn dirac2d_hopping_matrix(spec: &SquareSpec) -> Result<HermitianMatrix> {
    spec.validate()?;
    let (lx, ly) = (spec.lx as isize, spec.ly as isize);
    let dim = 2 * spec.lx * spec.ly;
    let mut entries = vec![ComplexScalar::default(); dim * dim];
    for x in 0..lx {
        for y in 0..ly {
            let c = dirac_mode(spec, x as usize, y as usize, 0);
            for ((dx, dy), amp) in DIRAC_CB_HOPS {
                let (tx, ty) = (x + dx, y + dy);
                let mut amp = amp;
                if spec.boundary == Boundary::Antiperiodic {
                    if !(0..lx).contains(&tx) {
                        amp = -amp;
                    }
                    if !(0..ly).contains(&ty) {
                        amp = -amp;
                    }
                }
                let b = dirac_mode(spec, tx.rem_euclid(lx) as usize, ty.rem_euclid(ly) as usize, 1);
                entries[c * dim + b] += amp;
                entries[b * dim + c] += amp.conj();
            }
            let b = dirac_mode(spec, x as usize, y as usize, 1);
            entries[c * dim + c] += c64(spec.delta, 0.0);
            entries[b * dim + b] -= c64(spec.delta, 0.0);
        }
    }
    HermitianMatrix::from_entries(dim, entries)
}

/// `±2 sqrt(m^2 + sin^2 kx + sin^2 ky)` with `m = delta / 2`.
pub fn dirac2d_band_energy(kx: f64, ky: f64, m: f64) -> BandEnergy {
    let e = 2.0 * (m * m + kx.sin().powi(2) + ky.sin().powi(2)).sqrt();
    BandEnergy::from_magnitude(e, 2.0 * kx.sin().hypot(ky.sin()), 2.0 * m)
}

pub fn dirac2d_analytic_spectrum(spec: &SquareSpec) -> Vec<f64> {
    let mut out: Vec<f64> = spec
        .momenta()
        .radians()
        .iter()
        .flat_map(|[kx, ky]| {
            let e = dirac2d_band_energy(*kx, *ky, spec.m());
            [e.minus, e.plus]
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

pub fn exact_spectrum(m: &HermitianMatrix) -> Result<Vec<f64>> {
    eigenvalues(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::sorted_max_abs_diff;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn two_site_ring_sums_both_bonds() {
        let m = ssh_hopping_matrix(&ChainSpec::new(2, 1.0, 0.0).unwrap()).unwrap();
        assert_eq!(m.get(0, 1), c64(-2.0, 0.0));
        assert_eq!(m.get(0, 0), c64(0.0, 0.0));
        // The staggered parts cancel on the doubled bond.
        let m = ssh_hopping_matrix(&ChainSpec::new(2, 1.0, 0.3).unwrap()).unwrap();
        assert!((m.get(1, 0).re + 2.0).abs() < 1e-15);
    }

    #[test]
    fn six_site_uniform_chain() {
        let m = ssh_hopping_matrix(&ChainSpec::new(6, 1.0, 0.0).unwrap()).unwrap();
        let ev = exact_spectrum(&m).unwrap();
        let want = [-2.0, -1.0, -1.0, 1.0, 1.0, 2.0];
        assert!(sorted_max_abs_diff(&ev, &want) < 1e-12);
    }

    #[test]
    fn band_energy_examples() {
        let e = ssh_band_energy(0.0, 1.3, 0.2);
        assert!((e.plus - 2.6).abs() < 1e-15 && e.minus == -e.plus);
        let e = ssh_band_energy(PI / 2.0, 1.0, 0.3);
        assert!((e.plus - 1.2).abs() < 1e-15);
        let e = ssh_band_energy(2.0 * PI / 3.0, 1.0, 0.25);
        assert!((e.plus - 1.75f64.sqrt()).abs() < 1e-15);
        assert!((e.plus - 1.322_875_7).abs() < 1e-7);
        // Cross-check against the 6-site real-space spectrum.
        let ev = exact_spectrum(&ssh_hopping_matrix(&ChainSpec::new(6, 1.0, 0.25).unwrap()).unwrap()).unwrap();
        assert!(ev.iter().any(|x| (x - e.plus).abs() < 1e-10));
        assert!(ev.iter().any(|x| (x - e.minus).abs() < 1e-10));
    }

    #[test]
    fn global_sign_flip_leaves_spectrum() {
        let spec = ChainSpec::new(8, 1.1, 0.23).unwrap();
        let m = ssh_hopping_matrix(&spec).unwrap();
        let flipped = HermitianMatrix::from_entries(8, m.entries().iter().map(|z| -z).collect()).unwrap();
        let a = exact_spectrum(&m).unwrap();
        let b = exact_spectrum(&flipped).unwrap();
        assert!(sorted_max_abs_diff(&a, &b) < 1e-12);
    }

    #[test]
    fn dirac_one_by_one_is_pure_mass() {
        let m = dirac2d_hopping_matrix(&SquareSpec::new(1, 1, 0.7).unwrap()).unwrap();
        assert!(sorted_max_abs_diff(&exact_spectrum(&m).unwrap(), &[-0.7, 0.7]) < 1e-15);
    }

    #[test]
    fn dirac_four_by_four_band() {
        let spec = SquareSpec::new(4, 4, 0.6).unwrap();
        let ev = exact_spectrum(&dirac2d_hopping_matrix(&spec).unwrap()).unwrap();
        let mut want = Vec::new();
        for [kx, ky] in spec.momenta().radians() {
            let e = (0.36 + 4.0 * kx.sin().powi(2) + 4.0 * ky.sin().powi(2)).sqrt();
            want.extend([e, -e]);
        }
        assert!(sorted_max_abs_diff(&ev, &want) < 1e-9);
        assert!(sorted_max_abs_diff(&ev, &dirac2d_analytic_spectrum(&spec)) < 1e-9);
    }

    #[test]
    fn dirac_band_examples() {
        let e = dirac2d_band_energy(0.0, 0.0, 0.0);
        assert_eq!((e.plus, e.minus), (0.0, -0.0));
        let e = dirac2d_band_energy(PI / 2.0, 0.0, 0.0);
        assert!((e.plus - 2.0).abs() < 1e-15);
        let e = dirac2d_band_energy(0.0, 0.0, 0.5);
        assert!((e.plus - 1.0).abs() < 1e-15);
        // Same point on the real-space 4x4 lattice with delta = 2m = 1.
        let ev = exact_spectrum(&dirac2d_hopping_matrix(&SquareSpec::new(4, 4, 1.0).unwrap()).unwrap()).unwrap();
        assert!(ev.iter().any(|x| (x - 1.0).abs() < 1e-10));
        let ev0 = exact_spectrum(&dirac2d_hopping_matrix(&SquareSpec::new(4, 4, 0.0).unwrap()).unwrap()).unwrap();
        assert!(ev0.iter().any(|x| (x - 2.0).abs() < 1e-10));
    }

    #[test]
    fn exact_spectrum_examples() {
        let ev = exact_spectrum(&HermitianMatrix::identity(3).unwrap()).unwrap();
        assert_eq!(ev, vec![1.0, 1.0, 1.0]);
        let ev = exact_spectrum(&HermitianMatrix::diagonal(&[2.0, -2.0]).unwrap()).unwrap();
        assert_eq!(ev, vec![-2.0, 2.0]);
    }

    #[test]
    fn gap_closes_without_dimerization() {
        let mut min_with = f64::INFINITY;
        let mut min_without = f64::INFINITY;
        let mut min_cos = f64::INFINITY;
        for i in 0..=2000 {
            let k = PI * i as f64 / 2000.0;
            min_with = min_with.min(ssh_band_energy(k, 1.0, 0.1).plus);
            min_without = min_without.min(ssh_band_energy(k, 1.0, 0.0).plus);
            min_cos = min_cos.min((2.0 * k.cos()).abs());
        }
        assert!((min_without - min_cos).abs() < 1e-15);
        assert!(min_without < 1e-12);
        assert!((min_with - 0.4).abs() < 1e-12);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ssh_particle_hole_and_band_agreement(cells in 1usize..=12, t0 in 0.1f64..3.0, au in -1.0f64..1.0) {
            let spec = ChainSpec::new(2 * cells, t0, au).unwrap();
            let ev = exact_spectrum(&ssh_hopping_matrix(&spec).unwrap()).unwrap();
            let neg: Vec<f64> = ev.iter().map(|x| -x).collect();
            prop_assert!(sorted_max_abs_diff(&ev, &neg) < 1e-10);
            prop_assert!(sorted_max_abs_diff(&ev, &ssh_analytic_spectrum(&spec)) < 1e-9);
            for [k] in spec.cell_momenta().radians() {
                let e = ssh_band_energy(k, t0, au);
                prop_assert!(ev.iter().any(|x| (x - e.plus).abs() < 1e-9));
                prop_assert!(ev.iter().any(|x| (x - e.minus).abs() < 1e-9));
            }
        }

        #[test]
        fn dirac_hermitian_and_matches_band(lx in 1usize..=5, ly in 1usize..=5, delta in -2.0f64..2.0) {
            let spec = SquareSpec::new(lx, ly, delta).unwrap();
            let m = dirac2d_hopping_matrix(&spec).unwrap();
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    prop_assert_eq!(m.get(i, j), m.get(j, i).conj());
                }
            }
            let ev = exact_spectrum(&m).unwrap();
            prop_assert!(sorted_max_abs_diff(&ev, &dirac2d_analytic_spectrum(&spec)) < 1e-9);
        }
    }
}
