#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaingraph/constructions.hpp"
#include "gaingraph/equivalence.hpp"
#include "gaingraph/spectra.hpp"
#include "test_util.hpp"

using namespace gaingraph;
using namespace testutil;

TEST_CASE("hermitian_double: single vertex, zero block, identity block") {
    GainGraph v1(1, {});
    GainMatrix b1(1, 1);
    b1(0, 0) = 1.0;
    GainGraph k2 = hermitian_double(v1, b1);
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);
    Spectrum s = eigenvalues(k2);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(-1.0));

    std::mt19937_64 rng(131);
    GainGraph g = random_graph(5, 0.6, rng);
    GainGraph zero_block = hermitian_double(g, GainMatrix::Zero(5, 5));
    CHECK(approx_equal(zero_block, disjoint_union(g, negated(g)), 1e-12));

    GainGraph ident = hermitian_double(g, GainMatrix::Identity(5, 5));
    CHECK(is_spectrally_symmetric(ident).symmetric);
    CHECK(is_sign_symmetric(ident).result);
}

TEST_CASE("hermitian_double: input validation") {
    GainGraph g = cycle_graph(3);
    GainMatrix bad(3, 3);
    bad.setZero();
    bad(0, 1) = std::complex<double>(0, 1);
    bad(1, 0) = std::complex<double>(0, 1);  // not conjugate
    CHECK(throws_with_code(ErrorCode::NotHermitian,
                           [&] { hermitian_double(g, bad); }));
    GainMatrix off(3, 3);
    off.setZero();
    off(0, 1) = 0.5;
    off(1, 0) = 0.5;
    CHECK(throws_with_code(ErrorCode::NonUnitEntry,
                           [&] { hermitian_double(g, off); }));
    CHECK(throws_with_code(ErrorCode::DimensionMismatch,
                           [&] { hermitian_double(g, GainMatrix::Zero(2, 2)); }));
}

TEST_CASE("identity_block_double: K2 cases and mirrored odd cycles") {
    GainGraph v1(1, {});
    GainGraph k2 = identity_block_double(v1, Unit::one());
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);

    // odd cycle in copy 1 mirrors with negated gain in copy 2
    Unit phi = Unit::turns(2, 7);
    GainGraph c5 = cycle_graph(5, phi);
    GainGraph dbl = identity_block_double(c5, Unit::turns(1, 9));
    Cycle mirrored{{5, 6, 7, 8, 9}};
    CHECK(cycle_gain(dbl, mirrored).approx_equal(-phi, 1e-12));

    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 5; ++trial) {
        GainGraph g = random_graph(5, 0.5, rng);
        GainGraph d = identity_block_double(g, random_unit(rng));
        CHECK(is_spectrally_symmetric(d).symmetric);
        CHECK(is_sign_symmetric(d).result);
    }
}

TEST_CASE("identity_block_double of K2 with z = 1 is the 4-cycle") {
    GainGraph k2(2, {{0, 1, Unit::one()}});
    GainGraph dbl = identity_block_double(k2, Unit::one());
    CHECK(dbl.n() == 4);
    CHECK(dbl.m() == 4);
    UnderlyingProperties p = underlying_properties(dbl);
    CHECK(p.connected);
    CHECK(p.bipartite);
    CHECK(p.two_connected);
    Spectrum s = eigenvalues(dbl);  // C4 spectrum up to gains: symmetric
    CHECK(s[0] == doctest::Approx(-s[3]));
    CHECK(s[1] == doctest::Approx(-s[2]));
}

TEST_CASE("odd_anchor_double: K2 gives P3 with spectrum sqrt 2, 0, -sqrt 2") {
    GainGraph k2(2, {{0, 1, Unit::one()}});
    for (int anchor : {0, 1}) {
        GainGraph p3 = odd_anchor_double(k2, anchor);
        CHECK(p3.n() == 3);
        CHECK(p3.m() == 2);
        Spectrum s = eigenvalues(p3);
        CHECK(s[0] == doctest::Approx(std::sqrt(2.0)));
        CHECK(s[1] == doctest::Approx(0.0));
        CHECK(s[2] == doctest::Approx(-std::sqrt(2.0)));
    }
}

TEST_CASE("odd_anchor_double: random connected graphs are sign-symmetric") {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 5; ++trial) {
        GainGraph g = random_connected_graph(5, 0.5, rng);
        GainGraph d = odd_anchor_double(g, static_cast<int>(rng() % 5));
        CHECK(d.n() == 9);
        CHECK(is_spectrally_symmetric(d).symmetric);
        CHECK(is_sign_symmetric(d).result);
    }
    CHECK(throws_with_code(ErrorCode::NotConnected, [] {
        odd_anchor_double(GainGraph(3, {{0, 1, Unit::one()}}), 0);
    }));
}

TEST_CASE("sylvester_double: single vertex, symmetry for every z") {
    GainGraph v1(1, {});
    GainGraph k2 = sylvester_double(v1, Unit::turns(1, 7));
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);
    Spectrum s = eigenvalues(k2);
    CHECK(s[0] == doctest::Approx(1.0));

    std::mt19937_64 rng(149);
    for (int trial = 0; trial < 5; ++trial) {
        GainGraph g = random_graph(5, 0.5, rng);
        GainGraph d = sylvester_double(g, random_unit(rng));
        CHECK(is_spectrally_symmetric(d).symmetric);
    }
    // z = 0: no cross diagonal
    GainGraph g = random_graph(4, 0.6, rng);
    GainGraph d0 = sylvester_double(g, std::nullopt);
    CHECK(d0.m() == 4 * g.m());
    CHECK(is_spectrally_symmetric(d0).symmetric);
}

TEST_CASE("sylvester_double of a signed graph is sign-symmetric") {
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Edge> edges;
        GainGraph base = random_connected_graph(5, 0.5, rng, false);
        for (const Edge& e : base.edges())
            edges.push_back({e.u, e.v, (rng() % 2) ? Unit::one() : Unit::minus_one()});
        GainGraph g(5, edges);
        GainGraph d = sylvester_double(g, random_unit(rng));
        CHECK(is_sign_symmetric(d).result);
    }
}

TEST_CASE("example2_fixture: shape, Hermitian matrix, paper entries") {
    GainGraph fx = example2_fixture();
    CHECK(fx.n() == 5);
    CHECK(fx.m() == 7);

    GainMatrix a = gain_matrix(fx);
    CHECK((a - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    std::complex<double> w = std::polar(1.0, std::numbers::pi / 3.0);
    std::complex<double> wb = std::conj(w);
    GainMatrix expect(5, 5);
    expect << 0, 1, 1, wb, wb * wb,
              1, 0, wb * wb, wb * wb, 0,
              1, w * w, 0, 0, wb * wb,
              w, w * w, 0, 0, 0,
              w * w, 0, w * w, 0, 0;
    CHECK((a - expect).cwiseAbs().maxCoeff() < 1e-12);

    UnderlyingProperties p = underlying_properties(fx);
    CHECK(p.connected);
    CHECK_FALSE(p.bipartite);
    // The underlying graph carries exactly one nontrivial automorphism,
    // (1 2)(3 4); it is not asymmetric.
    CHECK(automorphisms(fx).size() == 2);
}

TEST_CASE("gamma_s: counts, gains, signedness") {
    GainGraph g1 = gamma_s(1);
    CHECK(g1.n() == 7);
    CHECK(g1.m() == 10);
    for (const Edge& e : g1.edges()) {
        CHECK(e.gain.im() == 0.0);
        CHECK(std::abs(std::abs(e.gain.re()) - 1.0) < 1e-15);
    }
    int negatives = 0;
    for (const Edge& e : g1.edges())
        if (e.gain.re() < 0) ++negatives;
    CHECK(negatives == 1);

    GainGraph g3 = gamma_s(3);
    CHECK(g3.n() == 9);
    CHECK(g3.m() == 14);
    CHECK(throws_with_code(ErrorCode::IndexOutOfRange, [] { gamma_s(0); }));
}

TEST_CASE("gamma_s: spectrally symmetric but not sign-symmetric") {
    for (int s : {1, 2}) {
        GainGraph g = gamma_s(s);
        SpectralSymmetry spec = is_spectrally_symmetric(g);
        CHECK(spec.symmetric);
        SignSymmetryResult sign = is_sign_symmetric(g);
        CHECK_FALSE(sign.result);
        REQUIRE(sign.obstruction.has_value());
        CHECK(sign.obstruction->k == 5);  // two +1 pentagons vs one -1
    }
}

TEST_CASE("all_imaginary: symmetric spectra on odd cycles and K4") {
    for (int n : {3, 5}) {
        GainGraph c = all_imaginary(cycle_graph(n));
        CHECK(is_spectrally_symmetric(c).symmetric);
        double re = cycle_gain(c, fundamental_cycle_basis(c).cycles[0]).re();
        CHECK(re == doctest::Approx(0.0));
    }
    GainGraph k4 = all_imaginary(complete_graph(4));
    CHECK(is_spectrally_symmetric(k4).symmetric);
    CHECK(is_sign_symmetric(k4).result);
}

TEST_CASE("example2 sylvester double: nine-cycle census from the paper") {
    GainGraph dbl = sylvester_double(example2_fixture(), Unit::turns(1, 10));
    CHECK(dbl.n() == 10);
    CHECK(dbl.m() == 33);  // 7 + 7 + 14 + 5

    CycleCensus census = cycle_census(dbl, 9);
    // Example 2: 628 nine-cycles at -1/2 (sqrt 3 Im z + Re z), 620 at the
    // positive counterpart; the value equals cos(2 pi / 15).
    double mu = std::cos(2.0 * std::numbers::pi / 15.0);
    long long at_minus = 0, at_plus = 0;
    for (const CensusBucket& b : census.buckets) {
        if (std::abs(b.value + mu) < 1e-9) at_minus = b.count;
        if (std::abs(b.value - mu) < 1e-9) at_plus = b.count;
    }
    CHECK(at_minus == 628);
    CHECK(at_plus == 620);
    CHECK_FALSE(census_is_negation_symmetric(census));
}
