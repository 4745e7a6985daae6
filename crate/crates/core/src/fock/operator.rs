use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numerics::{c64, ComplexScalar};

use super::space::FockSpace;

/// Entries with modulus below this are not stored.
pub const PRUNE_TOLERANCE: f64 = 1e-15;

/// One fermionic ladder operator in a product string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    Create(usize),
    Annihilate(usize),
}

impl Ladder {
    /// Applies the operator to a basis state with the Jordan-Wigner sign:
    /// `(-1)` to the number of occupied modes below the target.
    fn apply(self, state: usize) -> Option<(usize, f64)> {
        let (mode, create) = match self {
            Ladder::Create(m) => (m, true),
            Ladder::Annihilate(m) => (m, false),
        };
        let bit = 1usize << mode;
        let occupied = state & bit != 0;
        if occupied == create {
            return None;
        }
        let below = (state & (bit - 1)).count_ones();
        let sign = if below.is_multiple_of(2) { 1.0 } else { -1.0 };
        Some((state ^ bit, sign))
    }
}

/// Sparse operator on a [`FockSpace`], stored as `(row, col) -> value`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseOperator {
    space: Arc<FockSpace>,
    entries: BTreeMap<(usize, usize), ComplexScalar>,
}

impl SparseOperator {
    pub fn zero(space: &Arc<FockSpace>) -> Self {
        Self {
            space: Arc::clone(space),
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(space: &Arc<FockSpace>) -> Self {
        let entries = (0..space.dim()).map(|s| ((s, s), c64(1.0, 0.0))).collect();
        Self {
            space: Arc::clone(space),
            entries,
        }
    }

    /// `coeff * ops[0] * ops[1] * ...`, applied right to left on each basis state.
    pub fn from_term(space: &Arc<FockSpace>, coeff: ComplexScalar, ops: &[Ladder]) -> Result<Self> {
        let mut out = Self::zero(space);
        out.add_term(coeff, ops)?;
        Ok(out)
    }

    /// Adds `coeff * ops[0] * ops[1] * ...` in place.
    pub fn add_term(&mut self, coeff: ComplexScalar, ops: &[Ladder]) -> Result<()> {
        let n = self.space.n_modes();
        for op in ops {
            let (Ladder::Create(m) | Ladder::Annihilate(m)) = *op;
            if m >= n {
                return Err(Error::ModeOutOfRange { mode: m, n_modes: n });
            }
        }
        if coeff == ComplexScalar::default() {
            return Ok(());
        }
        for col in 0..self.space.dim() {
            let mut state = col;
            let mut sign = 1.0;
            let mut alive = true;
            for op in ops.iter().rev() {
                match op.apply(state) {
                    Some((next, s)) => {
                        state = next;
                        sign *= s;
                    }
                    None => {
                        alive = false;
                        break;
                    }
                }
            }
            if alive {
                self.accumulate(state, col, coeff * sign);
            }
        }
        self.prune();
        Ok(())
    }

    fn accumulate(&mut self, row: usize, col: usize, value: ComplexScalar) {
        *self.entries.entry((row, col)).or_default() += value;
    }

    fn prune(&mut self) {
        self.entries.retain(|_, z| z.norm() >= PRUNE_TOLERANCE);
    }

    pub fn space(&self) -> &Arc<FockSpace> {
        &self.space
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), ComplexScalar> {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> ComplexScalar {
        self.entries.get(&(row, col)).copied().unwrap_or_default()
    }

    /// `<s|O|s>` for a basis state `s`.
    pub fn diagonal_element(&self, state: usize) -> ComplexScalar {
        self.get(state, state)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.entries.values().all(|z| z.norm() <= tol)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .values()
            .map(|z| z.norm_sqr())
            .fold(0.0, |a, b| a + b)
            .sqrt()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            space: Arc::clone(&self.space),
            entries: self.entries.iter().map(|(&(r, c), z)| ((c, r), z.conj())).collect(),
        }
    }

    pub fn scaled(&self, factor: ComplexScalar) -> Self {
        let mut out = Self {
            space: Arc::clone(&self.space),
            entries: self.entries.iter().map(|(&k, &z)| (k, z * factor)).collect(),
        };
        out.prune();
        out
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: ComplexScalar) -> Result<()> {
        self.check_space(other)?;
        for (&(r, c), &z) in &other.entries {
            self.accumulate(r, c, z * factor);
        }
        self.prune();
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, c64(1.0, 0.0))?;
        Ok(out)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, c64(-1.0, 0.0))?;
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut rows: BTreeMap<usize, Vec<(usize, ComplexScalar)>> = BTreeMap::new();
        for (&(r, c), &z) in &other.entries {
            rows.entry(r).or_default().push((c, z));
        }
        let mut out = Self::zero(&self.space);
        for (&(i, k), &a) in &self.entries {
            if let Some(row) = rows.get(&k) {
                for &(j, b) in row {
                    out.accumulate(i, j, a * b);
                }
            }
        }
        out.prune();
        Ok(out)
    }

    /// Change in particle number if every entry moves by the same amount.
    pub fn number_change(&self) -> Option<i32> {
        let mut delta = None;
        for &(r, c) in self.entries.keys() {
            let d = r.count_ones() as i32 - c.count_ones() as i32;
            match delta {
                None => delta = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        delta.or(Some(0))
    }

    /// `<s|[self, other†]|s>` for a basis state `s`, without forming products.
    pub fn commutator_with_adjoint_expectation(&self, other: &Self, state: usize) -> Result<ComplexScalar> {
        self.check_space(other)?;
        // <s|A B†|s> = sum_t A[s,t] conj(B[s,t]);  <s|B† A|s> = sum_t conj(B[t,s]) A[t,s]
        let row = |op: &Self| -> BTreeMap<usize, ComplexScalar> {
            op.entries
                .range((state, 0)..=(state, usize::MAX))
                .map(|(&(_, c), &z)| (c, z))
                .collect()
        };
        let col = |op: &Self| -> BTreeMap<usize, ComplexScalar> {
            op.entries
                .iter()
                .filter(|(&(_, c), _)| c == state)
                .map(|(&(r, _), &z)| (r, z))
                .collect()
        };
        let (a_row, b_row) = (row(self), row(other));
        let (a_col, b_col) = (col(self), col(other));
        let mut total = ComplexScalar::default();
        for (t, a) in &a_row {
            if let Some(b) = b_row.get(t) {
                total += a * b.conj();
            }
        }
        for (t, a) in &a_col {
            if let Some(b) = b_col.get(t) {
                total -= b.conj() * a;
            }
        }
        Ok(total)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.minus(&self.adjoint())
            .map(|d| d.frobenius_norm() <= tol)
            .unwrap_or(false)
    }
}

pub fn creation_op(space: &Arc<FockSpace>, mode: usize) -> Result<SparseOperator> {
    SparseOperator::from_term(space, c64(1.0, 0.0), &[Ladder::Create(mode)])
}

pub fn annihilation_op(space: &Arc<FockSpace>, mode: usize) -> Result<SparseOperator> {
    Ok(creation_op(space, mode)?.adjoint())
}

pub fn number_op(space: &Arc<FockSpace>, mode: usize) -> Result<SparseOperator> {
    SparseOperator::from_term(space, c64(1.0, 0.0), &[Ladder::Create(mode), Ladder::Annihilate(mode)])
}

/// `AB - BA`.
pub fn commutator(a: &SparseOperator, b: &SparseOperator) -> Result<SparseOperator> {
    a.mul(b)?.minus(&b.mul(a)?)
}

/// `AB + BA`.
pub fn anticommutator(a: &SparseOperator, b: &SparseOperator) -> Result<SparseOperator> {
    a.mul(b)?.plus(&b.mul(a)?)
}

/// `sum_ij h[i][j] c†_i c_j` for a single-particle matrix over all modes.
pub fn quadratic_operator(
    space: &Arc<FockSpace>,
    dim: usize,
    entry: impl Fn(usize, usize) -> ComplexScalar,
) -> Result<SparseOperator> {
    if dim != space.n_modes() {
        return Err(Error::InvalidArgument(format!(
            "single-particle matrix has dimension {dim}, space has {} modes",
            space.n_modes()
        )));
    }
    let mut h = SparseOperator::zero(space);
    for i in 0..dim {
        for j in 0..dim {
            let z = entry(i, j);
            if z.norm() > 0.0 {
                h.add_term(z, &[Ladder::Create(i), Ladder::Annihilate(j)])?;
            }
        }
    }
    Ok(h)
}
