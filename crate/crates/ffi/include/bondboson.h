#ifndef BONDBOSON_H
#define BONDBOSON_H

#pragma once

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum BbStatus {
  BB_STATUS_OK = 0,
  BB_STATUS_NULL_POINTER = 1,
  BB_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A Fock space would exceed the 16-mode limit.
   */
  BB_STATUS_RESOURCE_LIMIT = 3,
  BB_STATUS_NUMERICAL = 4,
  BB_STATUS_INDEX_OUT_OF_RANGE = 5,
  BB_STATUS_PANIC = 6,
} BbStatus;

/**
 * Opaque spectrum table.
 */
typedef struct BbSpectrum BbSpectrum;

/**
 * Eigenvalue columns of one 4x4 block, each sorted ascending.
 */
typedef struct BbBlock {
  double numeric[4];
  double closed_form[4];
  double fermion_pairs[4];
  double max_discrepancy;
} BbBlock;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null after a
 * success. The pointer stays valid until the next call on this thread.
 */
const char *bb_last_error_message(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *bb_version(void);

/**
 * Spectrum table of the dimerized chain over every `(q, k)` block.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BbStatus bb_spectrum_ssh(size_t n_sites,
                              double t0,
                              double alpha_u,
                              double tolerance,
                              struct BbSpectrum **out);

/**
 * Spectrum table of the lattice Dirac model over every `(s, p, kx, ky)` block.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum BbStatus bb_spectrum_dirac2d(size_t lx,
                                  size_t ly,
                                  double mass,
                                  double tolerance,
                                  struct BbSpectrum **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from a constructor in this library and not be used afterwards.
 */
void bb_spectrum_free(struct BbSpectrum *handle);

/**
 * Number of blocks in the table, or 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or a live handle.
 */
size_t bb_spectrum_block_count(const struct BbSpectrum *handle);

/**
 * Largest per-block discrepancy and whether every block passed.
 *
 * # Safety
 * `handle` must be a live handle; `max_discrepancy` and `pass` must be
 * writable or null.
 */
enum BbStatus bb_spectrum_summary(const struct BbSpectrum *handle,
                                  double *max_discrepancy,
                                  bool *pass);

/**
 * Copies block `index` into `out`.
 *
 * # Safety
 * `handle` must be a live handle and `out` writable.
 */
enum BbStatus bb_spectrum_block(const struct BbSpectrum *handle, size_t index, struct BbBlock *out);

/**
 * Momenta of block `index` in radians: `q, k` for the chain (the last two
 * entries are zero), `s, p, kx, ky` for the Dirac model.
 *
 * # Safety
 * `handle` must be a live handle and `out` must have room for four values.
 */
enum BbStatus bb_spectrum_block_momenta(const struct BbSpectrum *handle, size_t index, double *out);

/**
 * Sorted eigenvalues of a single chain block at arbitrary momenta.
 *
 * # Safety
 * `out` must have room for four values.
 */
enum BbStatus bb_ssh_block_eigenvalues(double q, double k, double t0, double alpha_u, double *out);

/**
 * Sorted eigenvalues of a single Dirac block at arbitrary momenta.
 *
 * # Safety
 * `out` must have room for four values.
 */
enum BbStatus bb_dirac_block_eigenvalues(double s,
                                         double p,
                                         double kx,
                                         double ky,
                                         double mass,
                                         double *out);

/**
 * Largest residual of the chain bond-commutator identities.
 *
 * # Safety
 * `max_residual` must be writable.
 */
enum BbStatus bb_verify_ssh_identities(size_t n_sites,
                                       double t0,
                                       double alpha_u,
                                       bool spinful,
                                       double *max_residual);

/**
 * Largest residual of the Dirac bond-commutator identities.
 *
 * # Safety
 * `max_residual` must be writable.
 */
enum BbStatus bb_verify_dirac_identities(size_t lx, size_t ly, double mass, double *max_residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BONDBOSON_H */
