//! Density-density interactions rewritten as products of bond operators.
//!
//! `H_c = 1/2 sum α_nm n_n n_m` is quartic in fermions. For `n != m` each term
//! equals `-(c†_n c†_m)(c_n c_m)`, and every pair bilinear `c†_p c†_{p+l}` is
//! a finite Fourier sum of bond operators, so the off-diagonal part of `H_c`
//! is quadratic in bonds. Diagonal couplings stay in density form.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{
    bond_grid, chain_bond_raw, number_op, BondChannel, FockSpace, Geometry, Ladder, PhaseConvention, SparseOperator,
    Sublattice,
};
use crate::numerics::c64;

/// Symmetric real site-site coupling `α_nm`.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingMatrix {
    n: usize,
    alpha: Vec<f64>,
}

impl CouplingMatrix {
    pub fn new(n: usize, alpha: Vec<f64>) -> Result<Self> {
        if alpha.len() != n * n {
            return Err(Error::ShapeMismatch {
                dim: n,
                expected: n * n,
                got: alpha.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (alpha[i * n + j], alpha[j * n + i]);
                if !a.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
                if (a - b).abs() > 1e-14 * a.abs().max(b.abs()).max(1.0) {
                    return Err(Error::InvalidArgument(format!(
                        "coupling matrix is not symmetric at ({i}, {j}): {a} vs {b}"
                    )));
                }
            }
        }
        Ok(Self { n, alpha })
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            alpha: vec![0.0; n * n],
        }
    }

    /// Symmetric couplings drawn uniformly from `[-scale, scale)` off the
    /// diagonal, zero on it.
    pub fn random_off_diagonal(n: usize, scale: f64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                let v = rng.gen_range(-scale..scale);
                out.alpha[i * n + j] = v;
                out.alpha[j * n + i] = v;
            }
        }
        out
    }

    /// `v` between ring neighbours, zero elsewhere.
    pub fn nearest_neighbour(n: usize, v: f64) -> Self {
        let mut out = Self::zeros(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                out.alpha[i * n + j] = v;
                out.alpha[j * n + i] = v;
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.alpha[i * self.n + j]
    }

    pub fn off_diagonal(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.alpha[i * self.n + i] = 0.0;
        }
        out
    }

    pub fn diagonal_only(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            out.alpha[i * self.n + i] = self.get(i, i);
        }
        out
    }
}

fn check(space: &FockSpace, alpha: &CouplingMatrix) -> Result<usize> {
    let Geometry::Chain { n_sites } = space.geometry() else {
        return Err(Error::InvalidArgument("interactions are defined on chains".into()));
    };
    if space.species().len() != 1 {
        return Err(Error::InvalidArgument("interactions need a spinless chain".into()));
    }
    if alpha.dim() != n_sites {
        return Err(Error::ShapeMismatch {
            dim: n_sites,
            expected: n_sites,
            got: alpha.dim(),
        });
    }
    Ok(n_sites)
}

/// `1/2 sum_{n,m} α_nm n_n n_m`.
pub fn coulomb_operator(space: &Arc<FockSpace>, alpha: &CouplingMatrix) -> Result<SparseOperator> {
    let n = check(space, alpha)?;
    let densities: Vec<SparseOperator> = (0..n).map(|i| number_op(space, i)).collect::<Result<_>>()?;
    let mut h = SparseOperator::zero(space);
    for i in 0..n {
        for j in 0..n {
            let a = alpha.get(i, j);
            if a != 0.0 {
                h.add_scaled(&densities[i].mul(&densities[j])?, c64(0.5 * a, 0.0))?;
            }
        }
    }
    Ok(h)
}

/// `-1/2 sum_{n,m} α_nm (c†_n c†_m)(c_n c_m)`. The `n = m` terms vanish.
pub fn coulomb_pair_form(space: &Arc<FockSpace>, alpha: &CouplingMatrix) -> Result<SparseOperator> {
    let n = check(space, alpha)?;
    let mut h = SparseOperator::zero(space);
    for i in 0..n {
        for j in 0..n {
            let a = alpha.get(i, j);
            if a != 0.0 {
                h.add_term(
                    c64(-0.5 * a, 0.0),
                    &[
                        Ladder::Create(i),
                        Ladder::Create(j),
                        Ladder::Annihilate(i),
                        Ladder::Annihilate(j),
                    ],
                )?;
            }
        }
    }
    Ok(h)
}

/// `c†_p c†_{p+l}` rebuilt as `(1/N) sum_k e^{-ipk} e_{+lk}`, with `k` over
/// the `N`-site momentum grid and `l` in `1..N`.
pub fn pair_from_bonds(space: &Arc<FockSpace>, p: usize, l: usize) -> Result<SparseOperator> {
    let n = space.n_sites();
    if space.species().len() != 1 || !matches!(space.geometry(), Geometry::Chain { .. }) {
        return Err(Error::InvalidArgument(
            "pair reconstruction needs a spinless chain".into(),
        ));
    }
    if p >= n {
        return Err(Error::ModeOutOfRange { mode: p, n_modes: n });
    }
    if l == 0 || l >= n {
        return Err(Error::InvalidBond(format!("bond length {l} outside 1..{n}")));
    }
    let grid = bond_grid(space, Sublattice::All)?;
    let mut out = SparseOperator::zero(space);
    for [k] in grid.radians() {
        let bond = chain_bond_raw(
            space,
            l as isize,
            k,
            BondChannel::Spinless,
            Sublattice::All,
            PhaseConvention::Cell,
        )?;
        let weight = num_complex::Complex64::from_polar(1.0 / grid.len() as f64, -(p as f64) * k);
        out.add_scaled(&bond, weight)?;
    }
    Ok(out)
}

/// Pair-form interaction assembled only from bond reconstructions:
/// `-1/2 sum_{n != m} α_nm P(n, m - n) P(m, n - m)†`, where
/// `P(p, l) = c†_p c†_{p+l}` comes from [`pair_from_bonds`].
pub fn coulomb_from_bonds(space: &Arc<FockSpace>, alpha: &CouplingMatrix) -> Result<SparseOperator> {
    let n = check(space, alpha)?;
    let pairs: Vec<Vec<Option<SparseOperator>>> = (0..n)
        .into_par_iter()
        .map(|p| {
            (0..n)
                .map(|l| {
                    if l == 0 {
                        Ok(None)
                    } else {
                        pair_from_bonds(space, p, l).map(Some)
                    }
                })
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut h = SparseOperator::zero(space);
    for i in 0..n {
        for j in 0..n {
            let a = alpha.get(i, j);
            if i == j || a == 0.0 {
                continue;
            }
            let create = pairs[i][(j + n - i) % n].as_ref().expect("nonzero length");
            let destroy = pairs[j][(i + n - j) % n].as_ref().expect("nonzero length").adjoint();
            h.add_scaled(&create.mul(&destroy)?, c64(-0.5 * a, 0.0))?;
        }
    }
    Ok(h)
}

/// `‖pair form - bond-assembled pair form‖_F` for the off-diagonal couplings.
pub fn interaction_equivalence_residual(space: &Arc<FockSpace>, alpha: &CouplingMatrix) -> Result<f64> {
    let off = alpha.off_diagonal();
    let direct = coulomb_pair_form(space, &off)?;
    Ok(direct.minus(&coulomb_from_bonds(space, &off)?)?.frobenius_norm())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InteractionReport {
    pub n_sites: usize,
    /// Density form against pair form, off-diagonal couplings only.
    pub density_vs_pair: f64,
    /// Largest error over every reconstructed `c†_p c†_{p+l}`.
    pub pair_reconstruction: f64,
    /// Full `H_c` (diagonal terms in density form) against its bond assembly.
    pub assembled: f64,
    pub hc_norm: f64,
}

impl InteractionReport {
    pub fn passes(&self, tol_operator: f64, tol_pair: f64) -> bool {
        self.density_vs_pair <= tol_operator
            && self.pair_reconstruction <= tol_pair
            && self.assembled <= tol_operator * self.hc_norm.max(1.0)
    }
}

pub fn interaction_report(space: &Arc<FockSpace>, alpha: &CouplingMatrix) -> Result<InteractionReport> {
    let n = check(space, alpha)?;
    let off = alpha.off_diagonal();
    let density_vs_pair = coulomb_operator(space, &off)?
        .minus(&coulomb_pair_form(space, &off)?)?
        .frobenius_norm();
    let mut pair_reconstruction: f64 = 0.0;
    for p in 0..n {
        for l in 1..n {
            let direct =
                SparseOperator::from_term(space, c64(1.0, 0.0), &[Ladder::Create(p), Ladder::Create((p + l) % n)])?;
            pair_reconstruction =
                pair_reconstruction.max(pair_from_bonds(space, p, l)?.minus(&direct)?.frobenius_norm());
        }
    }
    let hc = coulomb_operator(space, alpha)?;
    let mut assembled_hc = coulomb_from_bonds(space, &off)?;
    assembled_hc.add_scaled(&coulomb_operator(space, &alpha.diagonal_only())?, c64(1.0, 0.0))?;
    Ok(InteractionReport {
        n_sites: n,
        density_vs_pair,
        pair_reconstruction,
        assembled: hc.minus(&assembled_hc)?.frobenius_norm(),
        hc_norm: hc.frobenius_norm(),
    })
}
