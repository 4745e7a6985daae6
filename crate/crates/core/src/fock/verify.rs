//! Exact checks of the bond-operator algebra on small Fock spaces.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fermion_model::{dirac2d_hopping_matrix, ssh_hopping_matrix};
use crate::lattice::{ChainSpec, SquareSpec};
use crate::numerics::{c64, ComplexScalar};

use super::bonds::{
    bond_grid, chain_bond_raw, combo_raw, dirac_combo, square_bond_raw, BondChannel, ComboFamily, DiracFamily,
    DiracPair, Parity, PhaseConvention,
};
use super::operator::{commutator, quadratic_operator, SparseOperator};
use super::space::{FockSpace, Geometry, Sublattice};

/// Many-body SSH Hamiltonian on a chain space; spin channels are identical copies.
pub fn ssh_hamiltonian(space: &Arc<FockSpace>, spec: &ChainSpec) -> Result<SparseOperator> {
    if space.n_sites() != spec.n_sites {
        return Err(Error::SpaceMismatch);
    }
    let h = ssh_hopping_matrix(spec)?;
    let ns = space.species().len();
    quadratic_operator(space, space.n_modes(), |i, j| {
        if i % ns == j % ns {
            h.get(i / ns, j / ns)
        } else {
            ComplexScalar::default()
        }
    })
}

/// Many-body lattice Dirac Hamiltonian on a two-component square space.
pub fn dirac_hamiltonian(space: &Arc<FockSpace>, spec: &SquareSpec) -> Result<SparseOperator> {
    if space.geometry()
        != (Geometry::Square {
            lx: spec.lx,
            ly: spec.ly,
        })
        || space.species().len() != 2
    {
        return Err(Error::SpaceMismatch);
    }
    let h = dirac2d_hopping_matrix(spec)?;
    quadratic_operator(space, space.n_modes(), |i, j| h.get(i, j))
}

/// Basis state with every mode filled except `n_holes` seeded random ones.
pub fn holed_state(space: &FockSpace, n_holes: usize, seed: u64) -> Result<(usize, Vec<usize>)> {
    let n = space.n_modes();
    if n_holes > n {
        return Err(Error::InvalidArgument(format!(
            "{n_holes} holes requested in a space of {n} modes"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut holes = sample(&mut rng, n, n_holes).into_vec();
    holes.sort_unstable();
    let state = holes.iter().fold(space.filled_state(), |s, &h| s & !(1 << h));
    Ok((state, holes))
}

/// Expectation of `[e_{+lk}, e_{-l'k'}]` in a (possibly holed) filled state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommutatorReport {
    pub l: usize,
    pub l_prime: usize,
    pub k: f64,
    pub k_prime: f64,
    pub n_holes: usize,
    pub holes: Vec<usize>,
    pub expectation: ComplexScalar,
    /// Site count when `(l, k) = (l', k')`, zero otherwise.
    pub target: f64,
    pub deviation: f64,
    /// `expectation / sqrt(n_sites)^2`: the same number with unit-normalized bonds.
    pub normalized_expectation: ComplexScalar,
}

fn report_from(
    raising: &SparseOperator,
    partner: &SparseOperator,
    state: usize,
    holes: Vec<usize>,
    matching: bool,
    n_sites: usize,
    labels: (usize, usize, f64, f64),
) -> Result<CommutatorReport> {
    let expectation = raising.commutator_with_adjoint_expectation(partner, state)?;
    let target = if matching { n_sites as f64 } else { 0.0 };
    Ok(CommutatorReport {
        l: labels.0,
        l_prime: labels.1,
        k: labels.2,
        k_prime: labels.3,
        n_holes: holes.len(),
        holes,
        expectation,
        target,
        deviation: (expectation - c64(target, 0.0)).norm(),
        normalized_expectation: expectation / n_sites as f64,
    })
}

fn same_momentum(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(std::f64::consts::TAU);
    d < 1e-9 || std::f64::consts::TAU - d < 1e-9
}

/// Bond commutator expectation on a spinless chain, bonds over all sites.
pub fn boson_commutator_report(
    space: &Arc<FockSpace>,
    l: usize,
    l_prime: usize,
    k: f64,
    k_prime: f64,
    n_holes: usize,
    seed: u64,
) -> Result<CommutatorReport> {
    let grid = bond_grid(space, Sublattice::All)?;
    grid.snap([k])?;
    grid.snap([k_prime])?;
    let (state, holes) = holed_state(space, n_holes, seed)?;
    let channel = BondChannel::Spinless;
    let raising = chain_bond_raw(space, l as isize, k, channel, Sublattice::All, PhaseConvention::Cell)?;
    let partner = chain_bond_raw(
        space,
        l_prime as isize,
        k_prime,
        channel,
        Sublattice::All,
        PhaseConvention::Cell,
    )?;
    let matching = l == l_prime && same_momentum(k, k_prime);
    report_from(
        &raising,
        &partner,
        state,
        holes,
        matching,
        space.n_sites(),
        (l, l_prime, k, k_prime),
    )
}

/// Square-lattice analogue with bond offset `(a, 0)` and `k = (kx, 0)`, so
/// the report fields keep their chain meaning. The target is `lx * ly`.
#[allow(clippy::too_many_arguments)]
pub fn square_commutator_report(
    space: &Arc<FockSpace>,
    offset: (isize, isize),
    offset_prime: (isize, isize),
    k: [f64; 2],
    k_prime: [f64; 2],
    pair: DiracPair,
    n_holes: usize,
    seed: u64,
) -> Result<CommutatorReport> {
    let (state, holes) = holed_state(space, n_holes, seed)?;
    let raising = square_bond_raw(space, offset.0, offset.1, k, pair)?;
    let partner = square_bond_raw(space, offset_prime.0, offset_prime.1, k_prime, pair)?;
    let matching = offset == offset_prime && same_momentum(k[0], k_prime[0]) && same_momentum(k[1], k_prime[1]);
    report_from(
        &raising,
        &partner,
        state,
        holes,
        matching,
        space.n_sites(),
        (offset.0 as usize, offset_prime.0 as usize, k[0], k_prime[0]),
    )
}

/// One identity evaluated for one operator label.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub label: String,
    pub residual: f64,
    pub literal_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    /// Overall sign relating `[H, F]` to the right-hand side.
    pub adopted_sign: f64,
    pub max_residual: f64,
    /// Best residual reachable with the literal phases and coefficients.
    pub max_literal_residual: f64,
}

impl IdentityReport {
    fn assemble(checks: Vec<IdentityCheck>, adopted_sign: f64) -> Self {
        let max_residual = checks.iter().map(|c| c.residual).fold(0.0, f64::max);
        let max_literal_residual = checks.iter().map(|c| c.literal_residual).fold(0.0, f64::max);
        Self {
            checks,
            adopted_sign,
            max_residual,
            max_literal_residual,
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual <= tol
    }
}

fn combination(terms: &[(ComplexScalar, SparseOperator)], space: &Arc<FockSpace>) -> Result<SparseOperator> {
    let mut out = SparseOperator::zero(space);
    for (c, op) in terms {
        out.add_scaled(op, *c)?;
    }
    Ok(out)
}

fn residual_with_sign(lhs: &SparseOperator, rhs: &SparseOperator, sign: f64) -> Result<f64> {
    let mut d = lhs.clone();
    d.add_scaled(rhs, c64(-sign, 0.0))?;
    Ok(d.frobenius_norm())
}

/// Operator family whose `H`-commutators close on the dimerized chain:
/// plain bonds on a spinless space, `E`/`D` combinations on a spinful one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ChainFamily {
    Spinless,
    Combo(ComboFamily, Parity),
}

impl ChainFamily {
    fn label(self) -> String {
        match self {
            ChainFamily::Spinless => "e".into(),
            ChainFamily::Combo(f, p) => format!("{f:?}({})", if p == Parity::Plus { "+" } else { "-" }),
        }
    }

    fn build(
        self,
        space: &Arc<FockSpace>,
        l: isize,
        k: f64,
        sub: Sublattice,
        conv: PhaseConvention,
    ) -> Result<SparseOperator> {
        match self {
            ChainFamily::Spinless => chain_bond_raw(space, l, k, BondChannel::Spinless, sub, conv),
            ChainFamily::Combo(f, p) => combo_raw(space, l, k, f, p, sub, conv),
        }
    }
}

/// Right-hand side of the sublattice bond commutators with `H`:
///
/// ```text
/// A: F^A_{l+1} t_{l+1} + F^A_{l-1} t_l + F^B_{l+1} t_+ e^{ik} + F^B_{l-1} t_-
/// B: F^B_{l+1} t_l + F^B_{l-1} t_{l+1} + F^A_{l+1} t_- + F^A_{l-1} t_+ e^{-ik}
/// ```
///
/// with `t_l = t0 + (-1)^l 2 alpha_u` and `t_± = t0 ± 2 alpha_u`.
#[allow(clippy::too_many_arguments)]
fn chain_rhs(
    space: &Arc<FockSpace>,
    spec: &ChainSpec,
    family: ChainFamily,
    sub: Sublattice,
    l: isize,
    k: f64,
    conv: PhaseConvention,
) -> Result<SparseOperator> {
    let t = |l: isize| spec.t0 + if l.rem_euclid(2) == 0 { 2.0 } else { -2.0 } * spec.alpha_u;
    let t_plus = spec.t0 + 2.0 * spec.alpha_u;
    let t_minus = spec.t0 - 2.0 * spec.alpha_u;
    let f = |s: Sublattice, len: isize| family.build(space, len, k, s, conv);
    let eik = ComplexScalar::from_polar(1.0, k);
    let (same, other, same_up, same_down, cross_up, cross_down) = match sub {
        Sublattice::B => (
            Sublattice::B,
            Sublattice::A,
            c64(t(l), 0.0),
            c64(t(l + 1), 0.0),
            c64(t_minus, 0.0),
            eik.conj() * t_plus,
        ),
        _ => (
            Sublattice::A,
            Sublattice::B,
            c64(t(l + 1), 0.0),
            c64(t(l), 0.0),
            eik * t_plus,
            c64(t_minus, 0.0),
        ),
    };
    combination(
        &[
            (same_up, f(same, l + 1)?),
            (same_down, f(same, l - 1)?),
            (cross_up, f(other, l + 1)?),
            (cross_down, f(other, l - 1)?),
        ],
        space,
    )
}

/// Checks the sublattice bond commutators with the SSH Hamiltonian for
/// every bond length and cell momentum.
///
/// Spinless spaces test the plain bonds; spinful spaces test all four
/// `E(±)`, `D(±)` combinations.
pub fn verify_ssh_bond_commutators(spec: &ChainSpec) -> Result<IdentityReport> {
    let space = Arc::new(FockSpace::chain(spec.n_sites, spec.spinful)?.with_boundary(spec.boundary));
    let h = ssh_hamiltonian(&space, spec)?;
    let families: Vec<ChainFamily> = if spec.spinful {
        [ComboFamily::E, ComboFamily::D]
            .into_iter()
            .flat_map(|f| [Parity::Plus, Parity::Minus].map(|p| ChainFamily::Combo(f, p)))
            .collect()
    } else {
        vec![ChainFamily::Spinless]
    };
    let momenta = bond_grid(&space, Sublattice::A)?.radians();
    let mut jobs = Vec::new();
    for &family in &families {
        for sub in [Sublattice::A, Sublattice::B] {
            for l in spec.bond_lengths() {
                for &[k] in &momenta {
                    jobs.push((family, sub, l as isize, k));
                }
            }
        }
    }
    // Residuals for both overall signs, the adopted one is chosen globally.
    let rows: Vec<(String, [f64; 2], [f64; 2])> = jobs
        .par_iter()
        .map(|&(family, sub, l, k)| {
            let lhs = commutator(&h, &family.build(&space, l, k, sub, PhaseConvention::Cell)?)?;
            let rhs = chain_rhs(&space, spec, family, sub, l, k, PhaseConvention::Cell)?;
            let lhs_lit = commutator(&h, &family.build(&space, l, k, sub, PhaseConvention::Literal)?)?;
            let rhs_lit = chain_rhs(&space, spec, family, sub, l, k, PhaseConvention::Literal)?;
            let label = format!("{}^{:?} l={l} k={k:.6}", family.label(), sub);
            Ok((
                label,
                [
                    residual_with_sign(&lhs, &rhs, 1.0)?,
                    residual_with_sign(&lhs, &rhs, -1.0)?,
                ],
                [
                    residual_with_sign(&lhs_lit, &rhs_lit, 1.0)?,
                    residual_with_sign(&lhs_lit, &rhs_lit, -1.0)?,
                ],
            ))
        })
        .collect::<Result<_>>()?;
    Ok(pick_sign(rows))
}

fn pick_sign(rows: Vec<(String, [f64; 2], [f64; 2])>) -> IdentityReport {
    let worst = |i: usize, lit: bool| {
        rows.iter()
            .map(|r| if lit { r.2[i] } else { r.1[i] })
            .fold(0.0, f64::max)
    };
    let idx = if worst(0, false) <= worst(1, false) { 0 } else { 1 };
    let lit_idx = if worst(0, true) <= worst(1, true) { 0 } else { 1 };
    let checks = rows
        .into_iter()
        .map(|(label, r, lit)| IdentityCheck {
            label,
            residual: r[idx],
            literal_residual: lit[lit_idx],
        })
        .collect();
    IdentityReport::assemble(checks, if idx == 0 { 1.0 } else { -1.0 })
}

/// Exact commutator of the lattice Dirac Hamiltonian with a two-component
/// bond combination `E^{±1}` or `E^{±2}` at offset `(l, m)`:
///
/// ```text
/// [H, E^{±1}_{lm}] = E^{∓2}_{l-1,m}(1 ± e^{-ikx}) - E^{∓2}_{l+1,m}(1 ± e^{ikx})
///                  + i E^{±2}_{l,m-1}(1 ∓ e^{-iky}) - i E^{±2}_{l,m+1}(1 ∓ e^{iky})
///                  + 2Δ E^{∓1}_{lm}
/// [H, E^{±2}_{lm}] = E^{∓1}_{l+1,m}(1 ∓ e^{ikx}) - E^{∓1}_{l-1,m}(1 ∓ e^{-ikx})
///                  + i E^{±1}_{l,m-1}(1 ∓ e^{-iky}) - i E^{±1}_{l,m+1}(1 ∓ e^{iky})
/// ```
fn dirac_rhs(
    space: &Arc<FockSpace>,
    delta: f64,
    family: DiracFamily,
    parity: Parity,
    (l, m): (isize, isize),
    k: [f64; 2],
) -> Result<SparseOperator> {
    let s = parity.sign();
    let one = c64(1.0, 0.0);
    let i = c64(0.0, 1.0);
    let ex = ComplexScalar::from_polar(1.0, k[0]);
    let ey = ComplexScalar::from_polar(1.0, k[1]);
    let e = |f: DiracFamily, p: Parity, a: isize, b: isize| dirac_combo(space, a, b, k, f, p);
    let o = family.other();
    let flip = parity.flip();
    match family {
        DiracFamily::One => combination(
            &[
                (one + ex.conj() * s, e(o, flip, l - 1, m)?),
                (-(one + ex * s), e(o, flip, l + 1, m)?),
                (i * (one - ey.conj() * s), e(o, parity, l, m - 1)?),
                (-i * (one - ey * s), e(o, parity, l, m + 1)?),
                (c64(2.0 * delta, 0.0), e(family, flip, l, m)?),
            ],
            space,
        ),
        DiracFamily::Two => combination(
            &[
                (one - ex * s, e(o, flip, l + 1, m)?),
                (-(one - ex.conj() * s), e(o, flip, l - 1, m)?),
                (i * (one - ey.conj() * s), e(o, parity, l, m - 1)?),
                (-i * (one - ey * s), e(o, parity, l, m + 1)?),
            ],
            space,
        ),
    }
}

/// The same commutators with the coefficients as originally printed, kept
/// as a diagnostic. `m` here is half the lattice mass.
fn dirac_rhs_literal(
    space: &Arc<FockSpace>,
    delta: f64,
    family: DiracFamily,
    parity: Parity,
    (l, m): (isize, isize),
    k: [f64; 2],
) -> Result<SparseOperator> {
    let s = parity.sign();
    let one = c64(1.0, 0.0);
    let i = c64(0.0, 1.0);
    let ex = ComplexScalar::from_polar(1.0, k[0]);
    let ey = ComplexScalar::from_polar(1.0, k[1]);
    let e = |f: DiracFamily, p: Parity, a: isize, b: isize| dirac_combo(space, a, b, k, f, p);
    let o = family.other();
    let flip = parity.flip();
    match family {
        DiracFamily::One => combination(
            &[
                (one - ex.conj() * s, e(o, flip, l - 1, m)?),
                (-(ex - one * s) * s, e(o, flip, l + 1, m)?),
                (i * (one + ey.conj()), e(o, parity, l, m - 1)?),
                (-i * (one + ey), e(o, parity, l, m + 1)?),
                (c64(-delta, 0.0), e(family, flip, l, m)?),
            ],
            space,
        ),
        DiracFamily::Two => combination(
            &[
                (one - ex * s, e(o, flip, l + 1, m)?),
                (-(one - ex.conj() * s) * s, e(o, flip, l - 1, m)?),
                (i * (one + ey.conj()), e(o, parity, l, m - 1)?),
                (-i * (one - ey), e(o, parity, l, m + 1)?),
            ],
            space,
        ),
    }
}

/// Checks the Dirac bond commutators for every offset, grid momentum and
/// combination on the given lattice.
pub fn verify_dirac_bond_commutators(spec: &SquareSpec) -> Result<IdentityReport> {
    let space = Arc::new(FockSpace::square(spec.lx, spec.ly, true)?.with_boundary(spec.boundary));
    let h = dirac_hamiltonian(&space, spec)?;
    let mut jobs = Vec::new();
    for family in [DiracFamily::One, DiracFamily::Two] {
        for parity in [Parity::Plus, Parity::Minus] {
            for l in 0..spec.lx as isize {
                for m in 0..spec.ly as isize {
                    for k in spec.momenta().radians() {
                        jobs.push((family, parity, (l, m), k));
                    }
                }
            }
        }
    }
    let rows: Vec<(String, [f64; 2], [f64; 2])> = jobs
        .par_iter()
        .map(|&(family, parity, lm, k)| {
            let lhs = commutator(&h, &dirac_combo(&space, lm.0, lm.1, k, family, parity)?)?;
            let rhs = dirac_rhs(&space, spec.delta, family, parity, lm, k)?;
            let lit = dirac_rhs_literal(&space, spec.delta, family, parity, lm, k)?;
            let label = format!(
                "E^{}{:?} l={} m={} k=({:.6},{:.6})",
                if parity == Parity::Plus { "+" } else { "-" },
                family,
                lm.0,
                lm.1,
                k[0],
                k[1]
            );
            Ok((
                label,
                [
                    residual_with_sign(&lhs, &rhs, 1.0)?,
                    residual_with_sign(&lhs, &rhs, -1.0)?,
                ],
                [
                    residual_with_sign(&lhs, &lit, 1.0)?,
                    residual_with_sign(&lhs, &lit, -1.0)?,
                ],
            ))
        })
        .collect::<Result<_>>()?;
    Ok(pick_sign(rows))
}

/// Matching-bond commutator expectations in a state with a given number of holes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HoleRow {
    pub n_holes: usize,
    pub holes: Vec<usize>,
    pub target: f64,
    /// Smallest and largest real part of `<[e_{+lk}, e_{-lk}]>` over the
    /// bonds checked.
    pub min_expectation: f64,
    pub max_expectation: f64,
    /// Largest `|expectation - target|`.
    pub max_deviation: f64,
    /// Largest imaginary part seen, which should vanish.
    pub max_imaginary: f64,
}

/// Deviation from the filled-state value for `0..=max_holes` holes on a
/// spinless chain, over every bond length `1 <= l < n_sites / 2` and every
/// site momentum. The half-ring bond `l = n_sites / 2` is left out: it runs
/// into itself and its commutator differs even on the filled state.
pub fn hole_table(space: &Arc<FockSpace>, max_holes: usize, seed: u64) -> Result<Vec<HoleRow>> {
    let n = space.n_sites();
    let grid = bond_grid(space, Sublattice::All)?.radians();
    let bonds: Vec<SparseOperator> = (1..n.div_ceil(2))
        .flat_map(|l| grid.iter().map(move |&[k]| (l, k)))
        .map(|(l, k)| {
            chain_bond_raw(
                space,
                l as isize,
                k,
                BondChannel::Spinless,
                Sublattice::All,
                PhaseConvention::Cell,
            )
        })
        .collect::<Result<_>>()?;
    (0..=max_holes)
        .map(|h| {
            let (state, holes) = holed_state(space, h, seed)?;
            let values: Vec<ComplexScalar> = bonds
                .iter()
                .map(|b| b.commutator_with_adjoint_expectation(b, state))
                .collect::<Result<_>>()?;
            let target = n as f64;
            Ok(HoleRow {
                n_holes: h,
                holes,
                target,
                min_expectation: values.iter().map(|z| z.re).fold(f64::INFINITY, f64::min),
                max_expectation: values.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max),
                max_deviation: values.iter().map(|z| (z - target).norm()).fold(0.0, f64::max),
                max_imaginary: values.iter().map(|z| z.im.abs()).fold(0.0, f64::max),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn filled_six_site_commutator() {
        let s = Arc::new(FockSpace::chain(6, false).unwrap());
        let r = boson_commutator_report(&s, 1, 1, PI / 3.0, PI / 3.0, 0, 7).unwrap();
        assert!((r.expectation - c64(6.0, 0.0)).norm() < 1e-12);
        assert!(r.deviation < 1e-12);
        let r = boson_commutator_report(&s, 1, 1, PI / 3.0, 0.0, 0, 7).unwrap();
        assert!(r.expectation.norm() < 1e-12);
        assert_eq!(r.target, 0.0);
    }

    #[test]
    fn one_hole_drops_by_two() {
        let s = Arc::new(FockSpace::chain(6, false).unwrap());
        for seed in 0..5 {
            let r = boson_commutator_report(&s, 2, 2, 0.0, 0.0, 1, seed).unwrap();
            assert!((r.expectation - c64(4.0, 0.0)).norm() < 1e-12);
            assert_eq!(r.holes.len(), 1);
        }
        assert!(boson_commutator_report(&s, 1, 1, 0.0, 0.0, 7, 0).is_err());
    }

    #[test]
    fn four_mode_commutator_expectation() {
        let s = Arc::new(FockSpace::chain(4, false).unwrap());
        let r = boson_commutator_report(&s, 1, 1, PI / 2.0, PI / 2.0, 0, 0).unwrap();
        assert!((r.expectation - c64(4.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn hole_table_drops_by_two_per_hole() {
        let s = Arc::new(FockSpace::chain(6, false).unwrap());
        let rows = hole_table(&s, 3, 42).unwrap();
        for r in &rows {
            let want = 6.0 - 2.0 * r.n_holes as f64;
            assert!((r.min_expectation - want).abs() < 1e-12 && (r.max_expectation - want).abs() < 1e-12);
            assert!((r.max_deviation - 2.0 * r.n_holes as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn holed_state_is_deterministic() {
        let s = FockSpace::chain(6, false).unwrap();
        assert_eq!(holed_state(&s, 2, 11).unwrap(), holed_state(&s, 2, 11).unwrap());
        assert_eq!(holed_state(&s, 0, 11).unwrap().0, 63);
    }

    #[test]
    fn uniform_chain_identities() {
        let spec = ChainSpec::new(6, 1.0, 0.0).unwrap();
        let r = verify_ssh_bond_commutators(&spec).unwrap();
        assert!(r.max_residual < 1e-12, "{}", r.max_residual);
    }

    #[test]
    fn dimerized_chain_identities() {
        let spec = ChainSpec::new(6, 1.0, 0.1).unwrap();
        let r = verify_ssh_bond_commutators(&spec).unwrap();
        assert!(r.max_residual < 1e-12, "{}", r.max_residual);
        assert_eq!(r.adopted_sign, -1.0);
        assert!(r.max_literal_residual > 1e-6);
    }

    #[test]
    fn dirac_identities_two_by_two() {
        let spec = SquareSpec::new(2, 2, 0.7).unwrap();
        let r = verify_dirac_bond_commutators(&spec).unwrap();
        assert!(r.max_residual < 1e-12, "{}", r.max_residual);
        assert_eq!(r.adopted_sign, 1.0);
    }
}
