//! Lattice geometries and the momentum grids fixed by the boundary condition.
//!
//! Grid momenta are kept as exact rational multiples of pi so that reports can
//! print `2/3 pi` instead of a rounded decimal, and so that grid membership is
//! decided with integer arithmetic.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `num/den * pi`, kept reduced with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiFraction {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl PiFraction {
    pub const ZERO: PiFraction = PiFraction { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Self {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn radians(self) -> f64 {
        PI * self.num as f64 / self.den as f64
    }

    pub fn half(self) -> Self {
        Self::new(self.num, 2 * self.den)
    }

    /// Reduces into `[0, 2pi)`.
    pub fn wrapped(self) -> Self {
        let period = 2 * self.den;
        Self::new(self.num.rem_euclid(period), self.den)
    }
}

impl std::ops::Add for PiFraction {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl std::ops::Sub for PiFraction {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl std::ops::Neg for PiFraction {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.num, self.den)
    }
}

impl fmt::Display for PiFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (-1, 1) => write!(f, "-pi"),
            (n, 1) => write!(f, "{n} pi"),
            (n, d) => write!(f, "{n}/{d} pi"),
        }
    }
}

/// A momentum that is either an exact grid value or an arbitrary real used
/// in continuous sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Momentum {
    Exact(PiFraction),
    Real(f64),
}

impl Momentum {
    pub fn radians(self) -> f64 {
        match self {
            Momentum::Exact(p) => p.radians(),
            Momentum::Real(x) => x,
        }
    }

    pub fn half(self) -> Self {
        match self {
            Momentum::Exact(p) => Momentum::Exact(p.half()),
            Momentum::Real(x) => Momentum::Real(0.5 * x),
        }
    }
}

impl std::ops::Sub for Momentum {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        match (self, o) {
            (Momentum::Exact(a), Momentum::Exact(b)) => Momentum::Exact(a - b),
            (a, b) => Momentum::Real(a.radians() - b.radians()),
        }
    }
}

impl From<PiFraction> for Momentum {
    fn from(p: PiFraction) -> Self {
        Momentum::Exact(p)
    }
}

impl From<f64> for Momentum {
    fn from(x: f64) -> Self {
        Momentum::Real(x)
    }
}

impl fmt::Display for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Momentum::Exact(p) => write!(f, "{p}"),
            Momentum::Real(x) => write!(f, "{x:+.14e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    #[default]
    Periodic,
    Antiperiodic,
}

/// Momenta allowed by the boundary condition on a `D`-dimensional torus.
///
/// Periodic grids hold `2 pi j / L`, antiperiodic grids `(2j + 1) pi / L`,
/// for `j = 0..L`, all inside `[0, 2pi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGrid<const D: usize> {
    periods: [usize; D],
    boundary: Boundary,
    points: Vec<[PiFraction; D]>,
}

fn axis(period: usize, boundary: Boundary) -> impl Iterator<Item = PiFraction> {
    let l = period as i64;
    (0..l).map(move |j| match boundary {
        Boundary::Periodic => PiFraction::new(2 * j, l),
        Boundary::Antiperiodic => PiFraction::new(2 * j + 1, l),
    })
}

impl<const D: usize> MomentumGrid<D> {
    pub fn periods(&self) -> [usize; D] {
        self.periods
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn points(&self) -> &[[PiFraction; D]] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn radians(&self) -> Vec<[f64; D]> {
        self.points
            .iter()
            .map(|p| std::array::from_fn(|d| p[d].radians()))
            .collect()
    }

    /// Snaps a real momentum vector onto the grid, or rejects it.
    pub fn snap(&self, k: [f64; D]) -> Result<[PiFraction; D]> {
        let mut out = [PiFraction::ZERO; D];
        for d in 0..D {
            let l = self.periods[d];
            let offset = match self.boundary {
                Boundary::Periodic => 0.0,
                Boundary::Antiperiodic => 0.5,
            };
            let x = k[d] * l as f64 / (2.0 * PI) - offset;
            let j = x.round();
            if (x - j).abs() > 1e-9 {
                return Err(Error::OffGrid { value: k[d], period: l });
            }
            let j = (j as i64).rem_euclid(l as i64);
            out[d] = axis(l, self.boundary).nth(j as usize).expect("index in range");
        }
        Ok(out)
    }
}

pub fn chain_momenta(n_cells: usize) -> Result<MomentumGrid<1>> {
    chain_momenta_with(n_cells, Boundary::Periodic)
}

pub fn chain_momenta_with(n: usize, boundary: Boundary) -> Result<MomentumGrid<1>> {
    if n == 0 {
        return Err(Error::InvalidLattice("momentum grid needs at least one cell".into()));
    }
    Ok(MomentumGrid {
        periods: [n],
        boundary,
        points: axis(n, boundary).map(|k| [k]).collect(),
    })
}

pub fn square_momenta(lx: usize, ly: usize) -> Result<MomentumGrid<2>> {
    square_momenta_with(lx, ly, Boundary::Periodic)
}

pub fn square_momenta_with(lx: usize, ly: usize, boundary: Boundary) -> Result<MomentumGrid<2>> {
    if lx == 0 || ly == 0 {
        return Err(Error::InvalidLattice(format!(
            "square grid dimensions must be positive, got {lx}x{ly}"
        )));
    }
    let points = axis(lx, boundary)
        .flat_map(|kx| axis(ly, boundary).map(move |ky| [kx, ky]))
        .collect();
    Ok(MomentumGrid {
        periods: [lx, ly],
        boundary,
        points,
    })
}

/// Dimerized chain of `n_sites` sites (two per unit cell).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub n_sites: usize,
    pub t0: f64,
    /// The product of the electron-lattice coupling and the dimerization amplitude.
    pub alpha_u: f64,
    pub spinful: bool,
    #[serde(default)]
    pub boundary: Boundary,
}

impl ChainSpec {
    pub fn new(n_sites: usize, t0: f64, alpha_u: f64) -> Result<Self> {
        let spec = Self {
            n_sites,
            t0,
            alpha_u,
            spinful: false,
            boundary: Boundary::Periodic,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn spinful(mut self, spinful: bool) -> Self {
        self.spinful = spinful;
        self
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_sites == 0 || !self.n_sites.is_multiple_of(2) {
            return Err(Error::InvalidLattice(format!(
                "chain needs an even, positive number of sites, got {}",
                self.n_sites
            )));
        }
        if self.t0 <= 0.0 || !self.t0.is_finite() {
            return Err(Error::InvalidLattice(format!("t0 must be positive, got {}", self.t0)));
        }
        if !self.alpha_u.is_finite() {
            return Err(Error::InvalidLattice("alpha_u must be finite".into()));
        }
        Ok(())
    }

    pub fn n_cells(&self) -> usize {
        self.n_sites / 2
    }

    /// Independent bond lengths, `1..=n_cells`.
    pub fn bond_lengths(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n_cells()
    }

    pub fn cell_momenta(&self) -> MomentumGrid<1> {
        chain_momenta_with(self.n_cells(), self.boundary).expect("validated")
    }

    pub fn site_momenta(&self) -> MomentumGrid<1> {
        chain_momenta_with(self.n_sites, self.boundary).expect("validated")
    }
}

/// Square lattice carrying the two-component lattice Dirac model.
///
/// `delta` is the on-site mass of the lattice Hamiltonian; the boson-side
/// closed forms are written in terms of `m = delta / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SquareSpec {
    pub lx: usize,
    pub ly: usize,
    pub delta: f64,
    #[serde(default)]
    pub boundary: Boundary,
}

impl SquareSpec {
    pub fn new(lx: usize, ly: usize, delta: f64) -> Result<Self> {
        let spec = Self {
            lx,
            ly,
            delta,
            boundary: Boundary::Periodic,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_mass(lx: usize, ly: usize, m: f64) -> Result<Self> {
        Self::new(lx, ly, 2.0 * m)
    }

    pub fn validate(&self) -> Result<()> {
        // 1x1 and 1xL tori are accepted: every hop wraps onto the same site and
        // cancels, which makes them useful degenerate checks.
        if self.lx == 0 || self.ly == 0 {
            return Err(Error::InvalidLattice(format!(
                "square lattice dimensions must be positive, got {}x{}",
                self.lx, self.ly
            )));
        }
        if !self.delta.is_finite() {
            return Err(Error::InvalidLattice("mass must be finite".into()));
        }
        Ok(())
    }

    pub fn m(&self) -> f64 {
        0.5 * self.delta
    }

    pub fn n_sites(&self) -> usize {
        self.lx * self.ly
    }

    pub fn momenta(&self) -> MomentumGrid<2> {
        square_momenta_with(self.lx, self.ly, self.boundary).expect("validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn six_site_chain_cell_momenta() {
        let g = chain_momenta(3).unwrap();
        let ks: Vec<_> = g.points().iter().map(|p| p[0]).collect();
        assert_eq!(ks, vec![PiFraction::ZERO, PiFraction::new(2, 3), PiFraction::new(4, 3)]);
        assert_eq!(ks[1].to_string(), "2/3 pi");
    }

    #[test]
    fn small_grids() {
        assert_eq!(chain_momenta(1).unwrap().radians(), vec![[0.0]]);
        let four: Vec<f64> = chain_momenta(4).unwrap().radians().iter().map(|k| k[0]).collect();
        assert_eq!(four, vec![0.0, PI / 2.0, PI, 1.5 * PI]);
        assert!(chain_momenta(0).is_err());
    }

    #[test]
    fn square_grids() {
        assert_eq!(square_momenta(1, 1).unwrap().radians(), vec![[0.0, 0.0]]);
        let g = square_momenta(2, 2).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.radians().iter().all(|k| k.iter().all(|&x| x == 0.0 || x == PI)));
        let g = square_momenta(4, 2).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.points()[2][0], PiFraction::new(1, 2));
        assert!(square_momenta(0, 3).is_err());
    }

    #[test]
    fn antiperiodic_grid_is_shifted() {
        let g = chain_momenta_with(2, Boundary::Antiperiodic).unwrap();
        assert_eq!(g.radians(), vec![[PI / 2.0], [1.5 * PI]]);
    }

    #[test]
    fn snapping() {
        let g = chain_momenta(3).unwrap();
        assert_eq!(g.snap([2.0 * PI / 3.0]).unwrap(), [PiFraction::new(2, 3)]);
        assert_eq!(g.snap([-2.0 * PI / 3.0]).unwrap(), [PiFraction::new(4, 3)]);
        assert!(matches!(g.snap([0.5]), Err(Error::OffGrid { .. })));
    }

    #[test]
    fn chain_spec_validation() {
        assert!(ChainSpec::new(5, 1.0, 0.0).is_err());
        assert!(ChainSpec::new(0, 1.0, 0.0).is_err());
        assert!(ChainSpec::new(6, 0.0, 0.0).is_err());
        let s = ChainSpec::new(6, 1.0, 0.1).unwrap();
        assert_eq!(s.n_cells(), 3);
        assert_eq!(s.bond_lengths().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn fraction_arithmetic() {
        let a = PiFraction::new(4, 3);
        assert_eq!(a.half(), PiFraction::new(2, 3));
        assert_eq!(
            (PiFraction::new(1, 3) - a).wrapped(),
            PiFraction::ZERO + PiFraction::new(1, 1)
        );
        assert_eq!(PiFraction::new(-2, -4), PiFraction::new(1, 2));
        assert_eq!(PiFraction::new(3, 1).to_string(), "3 pi");
    }

    proptest! {
        #[test]
        fn grid_values_are_roots_of_unity(n in 1usize..64) {
            let g = chain_momenta(n).unwrap();
            prop_assert_eq!(g.len(), n);
            for [k] in g.points() {
                let x = k.radians() * n as f64 / (2.0 * PI);
                prop_assert!((x - x.round()).abs() < 1e-12);
            }
        }

        #[test]
        fn grid_closed_under_translation(n in 1usize..64) {
            let g = chain_momenta(n).unwrap();
            let step = PiFraction::new(2, n as i64);
            let mut shifted: Vec<_> = g.points().iter().map(|[k]| (*k + step).wrapped()).collect();
            let mut orig: Vec<_> = g.points().iter().map(|[k]| *k).collect();
            shifted.sort();
            orig.sort();
            prop_assert_eq!(shifted, orig);
        }
    }
}
