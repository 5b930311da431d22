#pragma once

#include "framecipher/matrix.hpp"

#include <array>
#include <span>

namespace framecipher {

/**
 * Decoding with a wrong key M̃ = M + P.
 *
 * w̃ = (1/k̃)·M̃ᵀ·M·w with k̃ the squared row norm of M̃. Writing G = PᵀM,
 *
 *   w̃_j = (G_jj + ⟨M_j, M_j⟩)/⟨M̃_j, M̃_j⟩ · w_j  +  Σ_{i≠j} G_ji/⟨M̃_i, M̃_i⟩ · w_i
 *
 * The report carries both the direct product and this expansion.
 */
struct PerturbationReport {
    double k_tilde = 0.0;
    RealVector w_tilde_direct;
    RealVector w_tilde_formula;
    RealVector coefficient_diag;  // (G_jj + k)/k̃
    RealVector cross_terms;       // Σ_{i≠j} G_ji/k̃ · w_i

    /// max_j |formula_j − direct_j| / max_j |direct_j|.
    [[nodiscard]] double relative_discrepancy() const;
};

/// P must have M's shape and M + P must have equal, nonzero squared row norms
/// (true of any guess built with the same array structure as M); violations
/// throw std::invalid_argument.
[[nodiscard]] PerturbationReport perturbed_decode(const ScaledOrthogonalMatrix& m, const IntMatrix& p,
                                                  std::span<const Int> w);

/// Largest singular value by power iteration on AᵀA.
[[nodiscard]] double operator_norm(const RealMatrix& a, double relative_tolerance = 1e-12);

/// Measured vs. predicted error of decoding with a perturbed triple tensor
/// (A+a)⊗(B+b)⊗(C+c) instead of A⊗B⊗C.
struct BoundReport {
    double measured = 0.0;   // ||MᵀMw − M̃ᵀMw||
    double bound_rhs = 0.0;  // (3γ²β + 3γβ² + β³)·||Mw||
    double gamma = 0.0;      // max ||A||, ||B||, ||C||
    double beta = 0.0;       // max ||a||, ||b||, ||c||
    double mw_norm = 0.0;    // ||Mw||
    bool holds = false;
};

inline constexpr double kNormEstimateTolerance = 1e-4;

[[nodiscard]] BoundReport perturbation_bound(const std::array<RealMatrix, 3>& factors,
                                             const std::array<RealMatrix, 3>& perturbations,
                                             std::span<const double> w);

/// True iff the measured error is within the tensor bound (1e-4 relative slack
/// for the norm estimates).
[[nodiscard]] bool perturbation_bound_check(const std::array<RealMatrix, 3>& factors,
                                            const std::array<RealMatrix, 3>& perturbations,
                                            std::span<const double> w);

/// Largest β with (γ+β)³ − γ³ ≤ δ, i.e. 3γ²β + 3γβ² + β³ ≤ δ. With δ = ε/||Mw||,
/// any perturbation of norm below this keeps the decoding error under ε.
[[nodiscard]] double admissible_perturbation(double gamma, double delta);

} // namespace framecipher
