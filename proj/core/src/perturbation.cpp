#include "framecipher/cryptanalysis/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace framecipher {

double PerturbationReport::relative_discrepancy() const {
    double scale = 0.0;
    double worst = 0.0;
    for (std::size_t j = 0; j < w_tilde_direct.size(); ++j) {
        scale = std::max(scale, std::abs(w_tilde_direct[j]));
        worst = std::max(worst, std::abs(w_tilde_formula[j] - w_tilde_direct[j]));
    }
    return scale == 0.0 ? worst : worst / scale;
}

PerturbationReport perturbed_decode(const ScaledOrthogonalMatrix& m, const IntMatrix& p,
                                    std::span<const Int> w) {
    const IntMatrix& mat = m.matrix();
    const std::size_t n = mat.rows();
    if (p.rows() != n || p.cols() != n) throw std::invalid_argument("perturbation must match M's shape");
    if (w.size() != n) throw std::invalid_argument("vector length must match M");

    const IntMatrix guess = mat + p;
    const Int k_tilde = dot(guess.row(0), guess.row(0));
    if (k_tilde == 0) throw std::invalid_argument("perturbed matrix has zero scale");
    for (std::size_t r = 1; r < n; ++r)
        if (dot(guess.row(r), guess.row(r)) != k_tilde)
            throw std::invalid_argument("perturbation does not respect the matrix structure");

    PerturbationReport report;
    const long double kt = static_cast<long double>(k_tilde);
    report.k_tilde = static_cast<double>(kt);

    // Direct route: exact integer M̃ᵀ(Mw), one division per entry.
    const IntVector direct = transpose_multiply(guess, multiply(mat, w));
    report.w_tilde_direct.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        report.w_tilde_direct[j] = static_cast<double>(static_cast<long double>(direct[j]) / kt);

    // Expansion route from G = PᵀM.
    const IntMatrix g = p.transpose() * mat;
    const long double k = static_cast<long double>(m.scale());
    report.coefficient_diag.resize(n);
    report.cross_terms.resize(n);
    report.w_tilde_formula.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double diag = (static_cast<long double>(g(j, j)) + k) / kt;
        long double cross = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            cross += static_cast<long double>(g(j, i)) / kt * static_cast<long double>(w[i]);
        }
        report.coefficient_diag[j] = static_cast<double>(diag);
        report.cross_terms[j] = static_cast<double>(cross);
        report.w_tilde_formula[j] =
            static_cast<double>(diag * static_cast<long double>(w[j]) + cross);
    }
    return report;
}

double operator_norm(const RealMatrix& a, double relative_tolerance) {
    const std::size_t n = a.cols();
    if (n == 0 || a.rows() == 0) return 0.0;
    RealVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.1 * static_cast<double>(i % 7);
    double sigma = 0.0;
    for (int iter = 0; iter < 20000; ++iter) {
        const double vn = norm2(v);
        if (vn == 0.0) return 0.0;
        for (auto& x : v) x /= vn;
        const RealVector av = multiply(a, v);
        const double next = norm2(av);
        v = transpose_multiply(a, av);
        if (iter > 0 && std::abs(next - sigma) <= relative_tolerance * next) return next;
        sigma = next;
    }
    return sigma;
}

BoundReport perturbation_bound(const std::array<RealMatrix, 3>& factors,
                               const std::array<RealMatrix, 3>& perturbations,
                               std::span<const double> w) {
    BoundReport r;
    for (std::size_t i = 0; i < 3; ++i) {
        if (factors[i].rows() != perturbations[i].rows() || factors[i].cols() != perturbations[i].cols())
            throw std::invalid_argument("perturbation must match its factor's shape");
        r.gamma = std::max(r.gamma, operator_norm(factors[i]));
        r.beta = std::max(r.beta, operator_norm(perturbations[i]));
    }
    const RealMatrix m = tensor(tensor(factors[0], factors[1]), factors[2]);
    const RealMatrix guess = tensor(tensor(factors[0] + perturbations[0], factors[1] + perturbations[1]),
                                    factors[2] + perturbations[2]);
    if (w.size() != m.cols()) throw std::invalid_argument("vector length must match the tensor size");

    const RealVector mw = multiply(m, w);
    const RealVector exact = transpose_multiply(m, mw);
    const RealVector approx = transpose_multiply(guess, mw);
    RealVector diff(exact.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = exact[i] - approx[i];

    r.measured = norm2(diff);
    r.mw_norm = norm2(mw);
    const double g = r.gamma;
    const double b = r.beta;
    r.bound_rhs = (3 * g * g * b + 3 * g * b * b + b * b * b) * r.mw_norm;
    r.holds = r.measured <= r.bound_rhs * (1.0 + kNormEstimateTolerance);
    return r;
}

bool perturbation_bound_check(const std::array<RealMatrix, 3>& factors,
                              const std::array<RealMatrix, 3>& perturbations,
                              std::span<const double> w) {
    return perturbation_bound(factors, perturbations, w).holds;
}

double admissible_perturbation(double gamma, double delta) {
    if (gamma < 0.0 || delta < 0.0) throw std::invalid_argument("gamma and delta must be nonnegative");
    if (delta == 0.0) return 0.0;
    // c³ − γ³ = (c − γ)(c² + cγ + γ²) avoids cancelling c against γ.
    const double c = std::cbrt(gamma * gamma * gamma + delta);
    double beta = delta / (c * c + c * gamma + gamma * gamma);
    while (beta > 0.0 && beta * (3.0 * gamma * gamma + 3.0 * gamma * beta + beta * beta) > delta)
        beta = std::nextafter(beta, 0.0);
    return beta;
}

} // namespace framecipher
