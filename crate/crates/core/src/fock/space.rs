use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::Boundary;

/// Largest number of fermion modes a [`FockSpace`] may hold (dimension 65536).
pub const MAX_MODES: usize = 16;

/// Internal label of a mode on a site.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Spinless,
    Up,
    Down,
    /// Upper Dirac component.
    C,
    /// Lower Dirac component.
    B,
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Species::Spinless => "",
            Species::Up => "up",
            Species::Down => "dn",
            Species::C => "c",
            Species::B => "b",
        };
        f.write_str(s)
    }
}

/// Sublattice of a chain site. With sites numbered from 0, `A` holds the
/// even sites (the odd ones in 1-based numbering) and `B` the odd sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sublattice {
    All,
    A,
    B,
}

impl Sublattice {
    pub fn contains(self, site: usize) -> bool {
        match self {
            Sublattice::All => true,
            Sublattice::A => site.is_multiple_of(2),
            Sublattice::B => site % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Chain { n_sites: usize },
    Square { lx: usize, ly: usize },
}

impl Geometry {
    pub fn n_sites(&self) -> usize {
        match *self {
            Geometry::Chain { n_sites } => n_sites,
            Geometry::Square { lx, ly } => lx * ly,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeLabel {
    pub site: usize,
    /// `(n, 0)` on a chain, `(x, y)` on a square lattice.
    pub coords: (usize, usize),
    pub species: Species,
}

/// Fermion Fock space over all `2^n_modes` occupation bitsets.
///
/// Modes are ordered site-major, then by species: mode
/// `site * n_species + species_index`. Bit `j` of a basis state is the
/// occupation of mode `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace {
    geometry: Geometry,
    species: Vec<Species>,
    boundary: Boundary,
}

impl FockSpace {
    fn build(geometry: Geometry, species: Vec<Species>) -> Result<Self> {
        let n_modes = geometry.n_sites() * species.len();
        if n_modes == 0 {
            return Err(Error::InvalidLattice("Fock space needs at least one mode".into()));
        }
        if n_modes > MAX_MODES {
            return Err(Error::TooManyModes {
                requested: n_modes,
                limit: MAX_MODES,
            });
        }
        Ok(Self {
            geometry,
            species,
            boundary: Boundary::Periodic,
        })
    }

    /// `n` anonymous modes on a chain of `n` sites.
    pub fn with_modes(n: usize) -> Result<Self> {
        Self::build(Geometry::Chain { n_sites: n }, vec![Species::Spinless])
    }

    pub fn chain(n_sites: usize, spinful: bool) -> Result<Self> {
        let species = if spinful {
            vec![Species::Up, Species::Down]
        } else {
            vec![Species::Spinless]
        };
        Self::build(Geometry::Chain { n_sites }, species)
    }

    /// Square lattice with one mode per site, or the two Dirac components `c`, `b`.
    pub fn square(lx: usize, ly: usize, two_component: bool) -> Result<Self> {
        let species = if two_component {
            vec![Species::C, Species::B]
        } else {
            vec![Species::Spinless]
        };
        Self::build(Geometry::Square { lx, ly }, species)
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn species(&self) -> &[Species] {
        &self.species
    }

    pub fn n_sites(&self) -> usize {
        self.geometry.n_sites()
    }

    pub fn n_modes(&self) -> usize {
        self.n_sites() * self.species.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.n_modes()
    }

    /// Basis state with every mode occupied.
    pub fn filled_state(&self) -> usize {
        self.dim() - 1
    }

    pub fn species_index(&self, species: Species) -> Result<usize> {
        self.species
            .iter()
            .position(|&s| s == species)
            .ok_or_else(|| Error::InvalidArgument(format!("species {species:?} not present in this space")))
    }

    pub fn mode(&self, site: usize, species: Species) -> Result<usize> {
        if site >= self.n_sites() {
            return Err(Error::ModeOutOfRange {
                mode: site,
                n_modes: self.n_sites(),
            });
        }
        Ok(site * self.species.len() + self.species_index(species)?)
    }

    pub fn label(&self, mode: usize) -> Result<ModeLabel> {
        if mode >= self.n_modes() {
            return Err(Error::ModeOutOfRange {
                mode,
                n_modes: self.n_modes(),
            });
        }
        let site = mode / self.species.len();
        let species = self.species[mode % self.species.len()];
        let coords = match self.geometry {
            Geometry::Chain { .. } => (site, 0),
            Geometry::Square { ly, .. } => (site / ly, site % ly),
        };
        Ok(ModeLabel { site, coords, species })
    }

    pub fn labels(&self) -> Vec<ModeLabel> {
        (0..self.n_modes()).map(|m| self.label(m).expect("in range")).collect()
    }

    /// Site index of the chain site `n + offset` with periodic wrap, and the
    /// sign picked up when crossing the boundary.
    pub(crate) fn chain_shift(&self, n: usize, offset: isize) -> (usize, f64) {
        let len = self.n_sites() as isize;
        let raw = n as isize + offset;
        let wraps = raw.div_euclid(len);
        (raw.rem_euclid(len) as usize, self.wrap_sign(wraps))
    }

    pub(crate) fn square_shift(&self, x: usize, y: usize, dx: isize, dy: isize) -> (usize, f64) {
        let Geometry::Square { lx, ly } = self.geometry else {
            unreachable!("square shift on a chain")
        };
        let (rx, ry) = (x as isize + dx, y as isize + dy);
        let (wx, wy) = (rx.div_euclid(lx as isize), ry.div_euclid(ly as isize));
        let site = rx.rem_euclid(lx as isize) as usize * ly + ry.rem_euclid(ly as isize) as usize;
        (site, self.wrap_sign(wx) * self.wrap_sign(wy))
    }

    fn wrap_sign(&self, wraps: isize) -> f64 {
        match self.boundary {
            Boundary::Periodic => 1.0,
            Boundary::Antiperiodic if wraps % 2 != 0 => -1.0,
            Boundary::Antiperiodic => 1.0,
        }
    }
}
