#include "gaingraph/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace gaingraph {

Spectrum eigenvalues(const GainGraph& g) {
    if (g.n() == 0) return {};
    GainMatrix a = gain_matrix(g);
    Eigen::SelfAdjointEigenSolver<GainMatrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver failed");
    Spectrum values(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + g.n());
    std::sort(values.begin(), values.end(), std::greater<>());
    double trace = 0.0;
    for (double v : values) trace += v;
    if (std::abs(trace) > 1e-9 * std::max(1, g.n()))
        throw Error(ErrorCode::ConvergenceFailure,
                    "eigenvalue sum deviates from the zero trace");
    return values;
}

namespace {

// chi(lambda) = prod (lambda - lambda_i), expanded.
CharPoly from_roots(const Spectrum& lambda) {
    CharPoly c{1.0};
    for (double l : lambda) {
        c.push_back(0.0);
        for (size_t j = c.size() - 1; j >= 1; --j) c[j] -= l * c[j - 1];
    }
    return c;
}

// Newton's identities from power sums p_k = tr(A^k).
CharPoly from_traces(const GainMatrix& a) {
    int n = static_cast<int>(a.rows());
    std::vector<double> p(n + 1, 0.0);
    GainMatrix power = GainMatrix::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        power = power * a;
        p[k] = power.trace().real();
    }
    CharPoly c(n + 1, 0.0);
    c[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += c[k - i] * p[i];
        c[k] = -s / k;
    }
    return c;
}

double max_abs(const CharPoly& c) {
    double m = 0.0;
    for (double x : c) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

CharPoly char_poly(const GainGraph& g, int cap) {
    if (g.n() > cap)
        throw Error(ErrorCode::TooLarge,
                    "characteristic polynomial capped at n = " + std::to_string(cap));
    if (g.n() == 0) return {1.0};
    CharPoly eig = from_roots(eigenvalues(g));
    CharPoly trc = from_traces(gain_matrix(g));
    double scale = std::max(1.0, std::max(max_abs(eig), max_abs(trc)));
    for (int j = 0; j <= g.n(); ++j) {
        if (std::abs(eig[j] - trc[j]) > 1e-8 * scale)
            throw Error(ErrorCode::InternalInconsistency,
                        "characteristic polynomial routes disagree at coefficient " +
                            std::to_string(j));
    }
    eig[0] = 1.0;
    if (g.n() >= 1) eig[1] = 0.0;  // exact zero trace
    return eig;
}

SpectralSymmetry is_spectrally_symmetric(const GainGraph& g, double tol,
                                         int coeff_cap) {
    if (tol <= 0)
        throw Error(ErrorCode::IndexOutOfRange, "tolerance must be positive");
    Spectrum lambda = eigenvalues(g);
    int n = g.n();
    double pairing = 0.0;
    for (int j = 0; j < n; ++j)
        pairing = std::max(pairing, std::abs(lambda[j] + lambda[n - 1 - j]));
    double radius = n > 0 ? std::max(std::abs(lambda.front()), std::abs(lambda.back()))
                          : 0.0;
    bool pair_symmetric = pairing <= tol * std::max(1.0, radius);

    if (n > coeff_cap) return {pair_symmetric, pairing};

    CharPoly coeffs = char_poly(g, coeff_cap);
    double odd_residual = 0.0;
    for (int j = 1; j <= n; j += 2)
        odd_residual = std::max(odd_residual, std::abs(coeffs[j]));
    bool coeff_symmetric = odd_residual <= tol * std::max(1.0, max_abs(coeffs));

    if (coeff_symmetric != pair_symmetric)
        throw Error(ErrorCode::InternalInconsistency,
                    "odd-coefficient and eigenvalue-pairing symmetry tests disagree");
    return {coeff_symmetric, odd_residual};
}

}  // namespace gaingraph
