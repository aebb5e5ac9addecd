/// @file fsai.hpp
/// @brief Adaptive factorized sparse approximate inverse smoother.
///
/// G is lower triangular with G'G ~ inv(A); the smoothing step is
/// x <- x + omega G'(G (b - A x)). Per-row patterns grow adaptively, and the
/// set-up loop keeps refining the factor until the damping factor omega is
/// close enough to one or the factor gets too dense.

#ifndef ASPAMG_FSAI_HPP
#define ASPAMG_FSAI_HPP

#include "aspamg/sparse_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace aspamg {

/// Why the refinement loop of the set-up stopped.
enum class SmootherExit {
    omega_reached,    ///< omega >= omega_bar (possibly without any refinement)
    density_bound,    ///< average entries per row reached rho_bar
    pattern_stagnation///< a refinement pass could not grow any row
};

struct SmootherConfig {
    // Initial build (Table-3 style k_g / rho_g / eps_g).
    index_t k0 = 4;
    index_t rho0 = 4;
    double eps0 = 1e-3;
    // Refinement passes reuse the previous factor as the starting pattern.
    index_t ki = 2;
    index_t rhoi = 4;
    double epsi = 1e-3;
    double omega_bar = 0.95;
    /// Density cap (average entries/row). 0 means automatic:
    /// twice the average row count of the lower triangle of A.
    double rho_bar = 0.0;
    index_t lanczos_steps = 10;
    std::uint64_t seed = 1234;
};

struct FsaiSmoother {
    SparseMatrix G;               ///< lower triangular, positive diagonal
    double omega = 1.0;           ///< damping, min(1, 2/lambda_hat)
    double lambda_hat = 1.0;      ///< inflated estimate of lambda_1(G A G')
    /// Kaporin conditioning gain over plain diagonal scaling,
    /// (prod A_ii / prod psi_i)^(1/n) >= 1; grows as the factor improves.
    double kaporin_estimate = 1.0;
    index_t refinement_passes = 0;
    SmootherExit exit_reason = SmootherExit::omega_reached;
};

/// One adaptive-FSAI factorization pass: k pattern-growth steps per row, up to
/// rho new entries per step chosen by the largest |(A g)_j| over graph
/// neighbours of the current pattern, per-row exit once the relative decrease
/// of psi_i = 1/g_last drops to eps. Rows are independent (and run in
/// parallel); the result does not depend on scheduling.
/// Throws NotSpdError on a non-positive local pivot.
SparseMatrix afsai_build(const SparseMatrix& A, index_t k, index_t rho, double eps);
SparseMatrix afsai_build(const SparseMatrix& A, const SparseMatrix& G_start, index_t k,
                         index_t rho, double eps);

/// Largest eigenvalue of G A G' by a few Lanczos passes from a seeded random
/// start, inflated by a 1.05 safety factor. Breakdown returns the Ritz value
/// reached so far (same inflation).
double estimate_lambda_max(const SparseMatrix& G, const SparseMatrix& A, index_t steps,
                           std::uint64_t seed);

/// omega = min(1, 2 / lambda_hat); the safety margin is already in lambda_hat.
double compute_omega(double lambda_hat);

/// Algorithm: build with (k0, rho0, eps0), then refine with (ki, rhoi, epsi)
/// while omega < omega_bar and the factor stays below the density cap.
FsaiSmoother smoother_setup(const SparseMatrix& A, const SmootherConfig& cfg);

/// x' = x + omega G'(G (b - A x)).
std::vector<double> apply_smoothing_step(const FsaiSmoother& s, const SparseMatrix& A,
                                         std::span<const double> b, std::span<const double> x);

/// Kaporin gain recomputed from the scaled factor: psi_i = 1 / G_ii^2.
double kaporin_gain(const SparseMatrix& A, const SparseMatrix& G);

} // namespace aspamg

#endif // ASPAMG_FSAI_HPP
