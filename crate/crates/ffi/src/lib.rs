//! C interface to the bondboson library.
//!
//! Every function returns a [`BbStatus`]; on failure a description is kept
//! per thread and can be read with [`bb_last_error_message`]. Spectrum
//! tables are exposed through the opaque [`BbSpectrum`] handle, which the
//! caller releases with [`bb_spectrum_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::size_t;

use bondboson::bondboson::{
    dirac_boson_block, dirac_correspondence_report, ssh_boson_block, ssh_correspondence_report, SpectrumTable,
};
use bondboson::fock::{verify_dirac_bond_commutators, verify_ssh_bond_commutators};
use bondboson::lattice::{ChainSpec, SquareSpec};
use bondboson::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A Fock space would exceed the 16-mode limit.
    ResourceLimit = 3,
    Numerical = 4,
    IndexOutOfRange = 5,
    Panic = 6,
}

/// Opaque spectrum table.
pub struct BbSpectrum {
    table: SpectrumTable,
}

/// Eigenvalue columns of one 4x4 block, each sorted ascending.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BbBlock {
    pub numeric: [f64; 4],
    pub closed_form: [f64; 4],
    pub fermion_pairs: [f64; 4],
    pub max_discrepancy: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(err: &Error) -> BbStatus {
    match err {
        Error::TooManyModes { .. } => BbStatus::ResourceLimit,
        Error::NoConvergence { .. } | Error::NonFinite { .. } | Error::NotHermitian { .. } => BbStatus::Numerical,
        Error::ModeOutOfRange { .. } => BbStatus::IndexOutOfRange,
        _ => BbStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), BbStatus>) -> BbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BbStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            BbStatus::Panic
        }
    }
}

fn lib<T>(r: bondboson::Result<T>) -> Result<T, BbStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, name: &str) -> Result<(), BbStatus> {
    if p.is_null() {
        set_error(format!("{name} is null"));
        Err(BbStatus::NullPointer)
    } else {
        Ok(())
    }
}

fn write_four(out: *mut f64, values: &[f64]) {
    // SAFETY: callers check `out` is non-null and the contract requires room for four values.
    unsafe { ptr::copy_nonoverlapping(values.as_ptr(), out, 4) }
}

/// Message for the most recent failure on this thread, or null after a
/// success. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn bb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn bb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Spectrum table of the dimerized chain over every `(q, k)` block.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_ssh(
    n_sites: size_t,
    t0: f64,
    alpha_u: f64,
    tolerance: f64,
    out: *mut *mut BbSpectrum,
) -> BbStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = lib(ChainSpec::new(n_sites, t0, alpha_u))?;
        let table = lib(ssh_correspondence_report(&spec, tolerance))?;
        unsafe { *out = Box::into_raw(Box::new(BbSpectrum { table })) };
        Ok(())
    })
}

/// Spectrum table of the lattice Dirac model over every `(s, p, kx, ky)` block.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_dirac2d(
    lx: size_t,
    ly: size_t,
    mass: f64,
    tolerance: f64,
    out: *mut *mut BbSpectrum,
) -> BbStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = lib(SquareSpec::new(lx, ly, mass))?;
        let table = lib(dirac_correspondence_report(&spec, tolerance))?;
        unsafe { *out = Box::into_raw(Box::new(BbSpectrum { table })) };
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from a constructor in this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_free(handle: *mut BbSpectrum) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Number of blocks in the table, or 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_block_count(handle: *const BbSpectrum) -> size_t {
    unsafe { handle.as_ref() }.map_or(0, |h| h.table.rows.len())
}

/// Largest per-block discrepancy and whether every block passed.
///
/// # Safety
/// `handle` must be a live handle; `max_discrepancy` and `pass` must be
/// writable or null.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_summary(
    handle: *const BbSpectrum,
    max_discrepancy: *mut f64,
    pass: *mut bool,
) -> BbStatus {
    guard(|| {
        non_null(handle, "handle")?;
        let t = unsafe { &(*handle).table };
        if let Some(m) = unsafe { max_discrepancy.as_mut() } {
            *m = t.max_discrepancy;
        }
        if let Some(p) = unsafe { pass.as_mut() } {
            *p = t.passes();
        }
        Ok(())
    })
}

/// Copies block `index` into `out`.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_block(handle: *const BbSpectrum, index: size_t, out: *mut BbBlock) -> BbStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        let rows = unsafe { &(*handle).table.rows };
        let Some(row) = rows.get(index) else {
            set_error(format!("block {index} out of range for {} blocks", rows.len()));
            return Err(BbStatus::IndexOutOfRange);
        };
        let mut b = BbBlock {
            max_discrepancy: row.max_discrepancy,
            ..BbBlock::default()
        };
        b.numeric.copy_from_slice(&row.numeric);
        b.closed_form.copy_from_slice(&row.closed_form);
        b.fermion_pairs.copy_from_slice(&row.fermion_pairs);
        unsafe { *out = b };
        Ok(())
    })
}

/// Momenta of block `index` in radians: `q, k` for the chain (the last two
/// entries are zero), `s, p, kx, ky` for the Dirac model.
///
/// # Safety
/// `handle` must be a live handle and `out` must have room for four values.
#[no_mangle]
pub unsafe extern "C" fn bb_spectrum_block_momenta(
    handle: *const BbSpectrum,
    index: size_t,
    out: *mut f64,
) -> BbStatus {
    guard(|| {
        non_null(handle, "handle")?;
        non_null(out, "out")?;
        let rows = unsafe { &(*handle).table.rows };
        let Some(row) = rows.get(index) else {
            set_error(format!("block {index} out of range for {} blocks", rows.len()));
            return Err(BbStatus::IndexOutOfRange);
        };
        let mut m = [0.0; 4];
        for (slot, (_, k)) in m.iter_mut().zip(&row.momenta) {
            *slot = k.radians();
        }
        write_four(out, &m);
        Ok(())
    })
}

/// Sorted eigenvalues of a single chain block at arbitrary momenta.
///
/// # Safety
/// `out` must have room for four values.
#[no_mangle]
pub unsafe extern "C" fn bb_ssh_block_eigenvalues(q: f64, k: f64, t0: f64, alpha_u: f64, out: *mut f64) -> BbStatus {
    guard(|| {
        non_null(out, "out")?;
        if ![q, k, t0, alpha_u].iter().all(|x| x.is_finite()) {
            set_error("parameters must be finite");
            return Err(BbStatus::InvalidArgument);
        }
        write_four(out, &lib(ssh_boson_block(q, k, t0, alpha_u).numeric_eigs())?);
        Ok(())
    })
}

/// Sorted eigenvalues of a single Dirac block at arbitrary momenta.
///
/// # Safety
/// `out` must have room for four values.
#[no_mangle]
pub unsafe extern "C" fn bb_dirac_block_eigenvalues(
    s: f64,
    p: f64,
    kx: f64,
    ky: f64,
    mass: f64,
    out: *mut f64,
) -> BbStatus {
    guard(|| {
        non_null(out, "out")?;
        if ![s, p, kx, ky, mass].iter().all(|x| x.is_finite()) {
            set_error("parameters must be finite");
            return Err(BbStatus::InvalidArgument);
        }
        write_four(out, &lib(dirac_boson_block(s, p, kx, ky, mass).numeric_eigs())?);
        Ok(())
    })
}

/// Largest residual of the chain bond-commutator identities.
///
/// # Safety
/// `max_residual` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bb_verify_ssh_identities(
    n_sites: size_t,
    t0: f64,
    alpha_u: f64,
    spinful: bool,
    max_residual: *mut f64,
) -> BbStatus {
    guard(|| {
        non_null(max_residual, "max_residual")?;
        let spec = lib(ChainSpec::new(n_sites, t0, alpha_u))?.spinful(spinful);
        let report = lib(verify_ssh_bond_commutators(&spec))?;
        unsafe { *max_residual = report.max_residual };
        Ok(())
    })
}

/// Largest residual of the Dirac bond-commutator identities.
///
/// # Safety
/// `max_residual` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bb_verify_dirac_identities(
    lx: size_t,
    ly: size_t,
    mass: f64,
    max_residual: *mut f64,
) -> BbStatus {
    guard(|| {
        non_null(max_residual, "max_residual")?;
        let spec = lib(SquareSpec::new(lx, ly, mass))?;
        let report = lib(verify_dirac_bond_commutators(&spec))?;
        unsafe { *max_residual = report.max_residual };
        Ok(())
    })
}
