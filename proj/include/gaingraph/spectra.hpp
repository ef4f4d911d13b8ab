#pragma once

#include <vector>

#include "gaingraph/graph.hpp"

namespace gaingraph {

// Real eigenvalues sorted descending.
using Spectrum = std::vector<double>;

// Coefficients a_0 .. a_n of det(lambda I - A), a_0 = 1.
using CharPoly = std::vector<double>;

struct SpectralSymmetry {
    bool symmetric = false;
    double residual = 0.0;  // max |a_j| over odd j (n <= cap), else pairing max
};

inline constexpr int kDefaultCharPolyCap = 64;
inline constexpr double kDefaultSymmetryTol = 1e-9;

// All n eigenvalues of the gain matrix, descending.
Spectrum eigenvalues(const GainGraph& g);

// Coefficients computed two ways (eigenvalue expansion and trace
// recurrence) which must agree to 1e-8; disagreement raises an internal
// consistency error. Capped at n <= cap.
CharPoly char_poly(const GainGraph& g, int cap = kDefaultCharPolyCap);

// Dual-path spectral symmetry decision: vanishing odd coefficients and
// eigenvalue pairing must agree, else an internal consistency error.
SpectralSymmetry is_spectrally_symmetric(const GainGraph& g,
                                         double tol = kDefaultSymmetryTol,
                                         int coeff_cap = kDefaultCharPolyCap);

}  // namespace gaingraph
