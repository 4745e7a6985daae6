//! Pair-creation bond operators and number-conserving bilinears on a
//! [`FockSpace`].
//!
//! On a chain the basic object is
//! `e_{+lk} = sum_n phase(n, k) c†_{n} c†_{n+l}`, with `n` running over a
//! sublattice and `n + l` wrapping around the ring. The lowering operator
//! `e_{-lk}` is its adjoint.

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{chain_momenta_with, square_momenta_with, MomentumGrid};
use crate::numerics::{c64, ComplexScalar};

use super::operator::{Ladder, SparseOperator};
use super::space::{FockSpace, Geometry, Species, Sublattice};

/// Which species sit at the two ends of a bond.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BondChannel {
    Spinless,
    UpUp,
    DownDown,
    UpDown,
    DownUp,
}

impl BondChannel {
    fn species(self) -> (Species, Species) {
        match self {
            BondChannel::Spinless => (Species::Spinless, Species::Spinless),
            BondChannel::UpUp => (Species::Up, Species::Up),
            BondChannel::DownDown => (Species::Down, Species::Down),
            BondChannel::UpDown => (Species::Up, Species::Down),
            BondChannel::DownUp => (Species::Down, Species::Up),
        }
    }
}

/// Momentum phase attached to the bond starting at site `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseConvention {
    /// `e^{ik floor(n/2)}` on both sublattices, with `k` on the unit-cell grid.
    /// Translation by two sites multiplies the operator by `e^{-ik}`.
    #[default]
    Cell,
    /// `e^{ikn}` on the even-site sublattice and `e^{ikn/2}` on the odd one.
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComboFamily {
    /// Same-spin bonds: `e_upup ± e_dndn`.
    E,
    /// Mixed-spin bonds: `e_updn ± e_dnup`.
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }
}

/// Two-component channel of the square-lattice Dirac bonds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiracPair {
    CC,
    BB,
    CB,
    BC,
}

impl DiracPair {
    fn species(self) -> (Species, Species) {
        match self {
            DiracPair::CC => (Species::C, Species::C),
            DiracPair::BB => (Species::B, Species::B),
            DiracPair::CB => (Species::C, Species::B),
            DiracPair::BC => (Species::B, Species::C),
        }
    }
}

fn chain_len(space: &FockSpace) -> Result<usize> {
    match space.geometry() {
        Geometry::Chain { n_sites } => Ok(n_sites),
        Geometry::Square { .. } => Err(Error::InvalidArgument(
            "chain operator requested on a square lattice".into(),
        )),
    }
}

fn square_dims(space: &FockSpace) -> Result<(usize, usize)> {
    match space.geometry() {
        Geometry::Square { lx, ly } => Ok((lx, ly)),
        Geometry::Chain { .. } => Err(Error::InvalidArgument(
            "square-lattice operator requested on a chain".into(),
        )),
    }
}

fn phase(n: usize, k: f64, sublattice: Sublattice, convention: PhaseConvention) -> ComplexScalar {
    let x = match (sublattice, convention) {
        (Sublattice::All, _) => n as f64,
        (_, PhaseConvention::Cell) => (n / 2) as f64,
        (Sublattice::A, PhaseConvention::Literal) => n as f64,
        (Sublattice::B, PhaseConvention::Literal) => n as f64 / 2.0,
    };
    ComplexScalar::from_polar(1.0, k * x)
}

/// Momentum grid a chain bond operator's `k` must lie on.
pub fn bond_grid(space: &FockSpace, sublattice: Sublattice) -> Result<MomentumGrid<1>> {
    let n = chain_len(space)?;
    match sublattice {
        Sublattice::All => chain_momenta_with(n, space.boundary()),
        Sublattice::A | Sublattice::B => chain_momenta_with((n / 2).max(1), space.boundary()),
    }
}

/// Chain pair operator with no range checks on `l` or `k`.
///
/// `l` is taken modulo the ring length, so `l = 0` (and any multiple of the
/// ring) gives the zero operator.
pub fn chain_bond_raw(
    space: &Arc<FockSpace>,
    l: isize,
    k: f64,
    channel: BondChannel,
    sublattice: Sublattice,
    convention: PhaseConvention,
) -> Result<SparseOperator> {
    let n_sites = chain_len(space)?;
    let (sa, sb) = channel.species();
    let mut op = SparseOperator::zero(space);
    for n in (0..n_sites).filter(|&n| sublattice.contains(n)) {
        let (partner, sign) = space.chain_shift(n, l);
        let a = space.mode(n, sa)?;
        let b = space.mode(partner, sb)?;
        let coeff = phase(n, k, sublattice, convention) * sign;
        op.add_term(coeff, &[Ladder::Create(a), Ladder::Create(b)])?;
    }
    Ok(op)
}

fn check_chain_bond(space: &FockSpace, l: usize, k: f64, sublattice: Sublattice) -> Result<()> {
    let n_sites = chain_len(space)?;
    let n_cells = n_sites / 2;
    if l == 0 {
        return Err(Error::InvalidBond("bond length 0 gives the zero operator".into()));
    }
    if l > n_cells.max(1) {
        return Err(Error::InvalidBond(format!(
            "bond length {l} exceeds half the ring ({n_cells})"
        )));
    }
    bond_grid(space, sublattice)?.snap([k])?;
    Ok(())
}

/// Raising bond operator `e_{+lk}` for bond length `l` in `1..=n_sites/2`.
pub fn bond_operator(
    space: &Arc<FockSpace>,
    l: usize,
    k: f64,
    channel: BondChannel,
    sublattice: Sublattice,
) -> Result<SparseOperator> {
    check_chain_bond(space, l, k, sublattice)?;
    chain_bond_raw(space, l as isize, k, channel, sublattice, PhaseConvention::Cell)
}

/// Lowering operator `e_{-lk} = sum_n conj(phase) c_{n+l} c_n`, built term by
/// term rather than as an adjoint.
pub fn bond_lowering_operator(
    space: &Arc<FockSpace>,
    l: usize,
    k: f64,
    channel: BondChannel,
    sublattice: Sublattice,
) -> Result<SparseOperator> {
    check_chain_bond(space, l, k, sublattice)?;
    let n_sites = chain_len(space)?;
    let (sa, sb) = channel.species();
    let mut op = SparseOperator::zero(space);
    for n in (0..n_sites).filter(|&n| sublattice.contains(n)) {
        let (partner, sign) = space.chain_shift(n, l as isize);
        let a = space.mode(n, sa)?;
        let b = space.mode(partner, sb)?;
        let coeff = phase(n, k, sublattice, PhaseConvention::Cell).conj() * sign;
        op.add_term(coeff, &[Ladder::Annihilate(b), Ladder::Annihilate(a)])?;
    }
    Ok(op)
}

/// `E(±) = e_upup ± e_dndn` or `D(±) = e_updn ± e_dnup`, raising part.
pub fn combo_raw(
    space: &Arc<FockSpace>,
    l: isize,
    k: f64,
    family: ComboFamily,
    parity: Parity,
    sublattice: Sublattice,
    convention: PhaseConvention,
) -> Result<SparseOperator> {
    let (first, second) = match family {
        ComboFamily::E => (BondChannel::UpUp, BondChannel::DownDown),
        ComboFamily::D => (BondChannel::UpDown, BondChannel::DownUp),
    };
    if space.species_index(Species::Up).is_err() || space.species_index(Species::Down).is_err() {
        return Err(Error::InvalidArgument(format!(
            "{family:?} combinations need a spinful space"
        )));
    }
    let mut op = chain_bond_raw(space, l, k, first, sublattice, convention)?;
    let other = chain_bond_raw(space, l, k, second, sublattice, convention)?;
    op.add_scaled(&other, c64(parity.sign(), 0.0))?;
    Ok(op)
}

pub fn combo_operator(
    space: &Arc<FockSpace>,
    l: usize,
    k: f64,
    family: ComboFamily,
    parity: Parity,
    sublattice: Sublattice,
) -> Result<SparseOperator> {
    check_chain_bond(space, l, k, sublattice)?;
    combo_raw(space, l as isize, k, family, parity, sublattice, PhaseConvention::Cell)
}

/// `h_{+ab}(k) = sum c†_{r} c_{r + (a,b)} e^{i k.r}`, summed over every
/// species. On a chain `b` must be zero and `k[1]` is ignored.
pub fn density_bilinear(space: &Arc<FockSpace>, a: isize, b: isize, k: [f64; 2]) -> Result<SparseOperator> {
    let mut op = SparseOperator::zero(space);
    let species = space.species().to_vec();
    match space.geometry() {
        Geometry::Chain { n_sites } => {
            if b != 0 || a.unsigned_abs() >= n_sites {
                return Err(Error::InvalidArgument(format!(
                    "offset ({a}, {b}) out of range for a {n_sites}-site chain"
                )));
            }
            for n in 0..n_sites {
                let (target, sign) = space.chain_shift(n, a);
                let ph = ComplexScalar::from_polar(sign, k[0] * n as f64);
                for &s in &species {
                    op.add_term(
                        ph,
                        &[
                            Ladder::Create(space.mode(n, s)?),
                            Ladder::Annihilate(space.mode(target, s)?),
                        ],
                    )?;
                }
            }
        }
        Geometry::Square { lx, ly } => {
            if a.unsigned_abs() >= lx || b.unsigned_abs() >= ly {
                return Err(Error::InvalidArgument(format!(
                    "offset ({a}, {b}) out of range for a {lx}x{ly} lattice"
                )));
            }
            for x in 0..lx {
                for y in 0..ly {
                    let (target, sign) = space.square_shift(x, y, a, b);
                    let ph = ComplexScalar::from_polar(sign, k[0] * x as f64 + k[1] * y as f64);
                    for &s in &species {
                        let here = space.mode(x * ly + y, s)?;
                        op.add_term(ph, &[Ladder::Create(here), Ladder::Annihilate(space.mode(target, s)?)])?;
                    }
                }
            }
        }
    }
    Ok(op)
}

/// Square-lattice pair operator `sum c†_{α,xy} c†_{β,x+a,y+b} e^{i(kx x + ky y)}`
/// with offsets taken modulo the lattice.
pub fn square_bond_raw(
    space: &Arc<FockSpace>,
    a: isize,
    b: isize,
    k: [f64; 2],
    pair: DiracPair,
) -> Result<SparseOperator> {
    let (lx, ly) = square_dims(space)?;
    let (sa, sb) = pair.species();
    let mut op = SparseOperator::zero(space);
    for x in 0..lx {
        for y in 0..ly {
            let (partner, sign) = space.square_shift(x, y, a, b);
            let here = space.mode(x * ly + y, sa)?;
            let there = space.mode(partner, sb)?;
            let ph = ComplexScalar::from_polar(sign, k[0] * x as f64 + k[1] * y as f64);
            op.add_term(ph, &[Ladder::Create(here), Ladder::Create(there)])?;
        }
    }
    Ok(op)
}

/// Square-lattice bond operator with `k` checked against the lattice grid.
pub fn square_bond_operator(
    space: &Arc<FockSpace>,
    a: isize,
    b: isize,
    k: [f64; 2],
    pair: DiracPair,
) -> Result<SparseOperator> {
    let (lx, ly) = square_dims(space)?;
    square_momenta_with(lx, ly, space.boundary())?.snap(k)?;
    square_bond_raw(space, a, b, k, pair)
}

/// Which Dirac combination: `1` mixes `cc` with `bb`, `2` mixes `cb` with `bc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiracFamily {
    One,
    Two,
}

impl DiracFamily {
    pub fn other(self) -> Self {
        match self {
            DiracFamily::One => DiracFamily::Two,
            DiracFamily::Two => DiracFamily::One,
        }
    }
}

/// `E^{±1} = (e^{cc} ± e^{bb}) / sqrt 2`, `E^{±2} = (e^{cb} ± e^{bc}) / sqrt 2`.
pub fn dirac_combo(
    space: &Arc<FockSpace>,
    a: isize,
    b: isize,
    k: [f64; 2],
    family: DiracFamily,
    parity: Parity,
) -> Result<SparseOperator> {
    let (first, second) = match family {
        DiracFamily::One => (DiracPair::CC, DiracPair::BB),
        DiracFamily::Two => (DiracPair::CB, DiracPair::BC),
    };
    let mut op = square_bond_raw(space, a, b, k, first)?.scaled(c64(FRAC_1_SQRT_2, 0.0));
    let other = square_bond_raw(space, a, b, k, second)?;
    op.add_scaled(&other, c64(parity.sign() * FRAC_1_SQRT_2, 0.0))?;
    Ok(op)
}
