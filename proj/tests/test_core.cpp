#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gaingraph/cycles.hpp"
#include "gaingraph/graph.hpp"
#include "gaingraph/spectra.hpp"
#include "test_util.hpp"

using namespace gaingraph;
using namespace testutil;

using testutil::throws_with_code;

TEST_CASE("unit: cartesian validation and renormalization") {
    CHECK(throws_with_code(ErrorCode::NonUnitGain, [] { Unit::cartesian(0.5, 0.0); }));
    Unit u = Unit::cartesian(1.0 + 4e-13, 0.0);
    CHECK(u.re() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(Unit::turns(1, 4).im() == 1.0);
    CHECK(Unit::turns(7, 4).im() == -1.0);  // reduced into [0,1)
}

TEST_CASE("unit: exact turns survive products, conjugation, negation") {
    Unit a = Unit::turns(1, 6);
    Unit b = Unit::turns(1, 10);
    Unit p = a * b;
    REQUIRE(p.exact_turns().has_value());
    CHECK(p.exact_turns()->num == 4);
    CHECK(p.exact_turns()->den == 15);
    CHECK((-a).exact_turns()->num == 2);
    CHECK((-a).exact_turns()->den == 3);
    CHECK(a.conj().exact_turns()->num == 5);
    CHECK(a.conj().exact_turns()->den == 6);
    // Mixed exact/float products fall back to floats.
    Unit f = Unit::cartesian(std::cos(0.3), std::sin(0.3));
    CHECK_FALSE((a * f).exact_turns().has_value());
}

TEST_CASE("validate: triangle with gains (1, 1, i) is fine") {
    GainGraph g(3, {{0, 1, Unit::one()}, {1, 2, Unit::one()}, {0, 2, Unit::i()}});
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("validate: structural errors") {
    CHECK(throws_with_code(ErrorCode::SelfLoop, [] {
        GainGraph(3, {{1, 1, Unit::one()}});
    }));
    CHECK(throws_with_code(ErrorCode::DuplicateEdge, [] {
        GainGraph(3, {{0, 1, Unit::one()}, {0, 1, Unit::i()}});
    }));
    CHECK(throws_with_code(ErrorCode::IndexOutOfRange, [] {
        GainGraph(4, {{2, 5, Unit::one()}});
    }));
}

TEST_CASE("gain_matrix: single edges and the triangle") {
    GainGraph k2(2, {{0, 1, Unit::one()}});
    GainMatrix a = gain_matrix(k2);
    CHECK(a(0, 1) == std::complex<double>(1, 0));
    CHECK(a(1, 0) == std::complex<double>(1, 0));
    CHECK(a(0, 0) == std::complex<double>(0, 0));

    GainGraph k2i(2, {{0, 1, Unit::i()}});
    GainMatrix ai = gain_matrix(k2i);
    CHECK(ai(0, 1) == std::complex<double>(0, 1));
    CHECK(ai(1, 0) == std::complex<double>(0, -1));

    GainGraph c3 = complete_graph(3);
    GainMatrix a3 = gain_matrix(c3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            CHECK(a3(u, v) == std::complex<double>(u == v ? 0 : 1, 0));
}

TEST_CASE("switched: identity, direct formula, dimension check") {
    std::mt19937_64 rng(7);
    GainGraph g = random_graph(6, 0.6, rng);
    SwitchingFunction ones(6, Unit::one());
    CHECK(approx_equal(switched(g, ones), g, 1e-15));

    GainGraph k2(2, {{0, 1, Unit::one()}});
    GainGraph sw = switched(k2, {Unit::i(), Unit::one()});
    CHECK(sw.edges()[0].gain.approx_equal(Unit::i(), 1e-15));

    CHECK(throws_with_code(ErrorCode::DimensionMismatch,
                      [&] { switched(g, SwitchingFunction(3, Unit::one())); }));
}

TEST_CASE("switching preserves every cycle gain on small random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        GainGraph g = random_graph(7, 0.5, rng);
        SwitchingFunction x = random_switching(7, rng);
        GainGraph h = switched(g, x);
        for (const Cycle& c : enumerate_cycles(g, 7)) {
            CHECK(cycle_gain(g, c).approx_equal(cycle_gain(h, c), 1e-9));
        }
    }
}

TEST_CASE("switch with conjugate switching undoes the first") {
    std::mt19937_64 rng(13);
    GainGraph g = random_graph(8, 0.5, rng);
    SwitchingFunction x = random_switching(8, rng);
    SwitchingFunction xbar;
    for (const Unit& u : x) xbar.push_back(u.conj());
    CHECK(approx_equal(switched(switched(g, x), xbar), g, 1e-12));
}

TEST_CASE("gain_matrix of switched graph equals X A X*") {
    std::mt19937_64 rng(17);
    GainGraph g = random_graph(6, 0.7, rng);
    SwitchingFunction x = random_switching(6, rng);
    GainMatrix a = gain_matrix(g);
    GainMatrix expect = GainMatrix::Zero(6, 6);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            expect(u, v) = x[u].value() * a(u, v) * std::conj(x[v].value());
    GainMatrix got = gain_matrix(switched(g, x));
    CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("negate: single gains, odd and even cycle effect") {
    GainGraph k2(2, {{0, 1, Unit::i()}});
    CHECK(negated(k2).edges()[0].gain.approx_equal(-Unit::i(), 1e-15));

    GainGraph c3 = cycle_graph(3);
    Cycle tri{{0, 1, 2}};
    CHECK(cycle_gain(negated(c3), tri).approx_equal(Unit::minus_one(), 1e-15));

    GainGraph c4 = cycle_graph(4);
    Cycle quad{{0, 1, 2, 3}};
    CHECK(cycle_gain(negated(c4), quad).approx_equal(Unit::one(), 1e-15));
}

TEST_CASE("negate and converse are involutions") {
    std::mt19937_64 rng(19);
    GainGraph g = random_graph(7, 0.5, rng);
    CHECK(approx_equal(negated(negated(g)), g, 1e-15));
    CHECK(approx_equal(converse(converse(g)), g, 1e-15));
}

TEST_CASE("converse: conjugates gains, fixes signed graphs") {
    GainGraph k2(2, {{0, 1, Unit::turns(1, 6)}});
    CHECK(converse(k2).edges()[0].gain.approx_equal(Unit::turns(-1, 6), 1e-15));

    GainGraph signed_g(3, {{0, 1, Unit::one()}, {1, 2, Unit::minus_one()},
                           {0, 2, Unit::one()}});
    CHECK(approx_equal(converse(signed_g), signed_g, 1e-15));

    GainGraph c3 = cycle_graph(3, Unit::turns(1, 7));
    Cycle tri{{0, 1, 2}};
    CHECK(cycle_gain(converse(c3), tri)
              .approx_equal(Unit::turns(-1, 7), 1e-12));
}

TEST_CASE("relabel: identity, orientation flip, spectrum invariance") {
    GainGraph k2(2, {{0, 1, Unit::i()}});
    CHECK(approx_equal(relabeled(k2, {0, 1}), k2, 1e-15));

    GainGraph flipped = relabeled(k2, {1, 0});
    CHECK(flipped.edges()[0].gain.approx_equal(-Unit::i(), 1e-15));  // conj(i)

    std::mt19937_64 rng(23);
    GainGraph g = random_graph(7, 0.5, rng);
    VertexPermutation p{3, 1, 6, 0, 2, 5, 4};
    Spectrum s1 = eigenvalues(g);
    Spectrum s2 = eigenvalues(relabeled(g, p));
    for (size_t i = 0; i < s1.size(); ++i)
        CHECK(s1[i] == doctest::Approx(s2[i]).epsilon(1e-9));

    CHECK(throws_with_code(ErrorCode::NotAPermutation,
                      [&] { relabeled(g, {0, 0, 1, 2, 3, 4, 5}); }));
}

TEST_CASE("disjoint_union: sizes, negation symmetry, empty identity") {
    GainGraph k2(2, {{0, 1, Unit::one()}});
    GainGraph u = disjoint_union(k2, k2);
    CHECK(u.n() == 4);
    CHECK(u.m() == 2);
    CHECK(u.edges()[1].u == 2);
    CHECK(u.edges()[1].v == 3);

    std::mt19937_64 rng(29);
    GainGraph g = random_graph(5, 0.6, rng);
    GainGraph sym = disjoint_union(g, negated(g));
    CHECK(is_spectrally_symmetric(sym).symmetric);

    GainGraph empty(0, {});
    CHECK(approx_equal(disjoint_union(empty, g), g, 1e-15));
}

TEST_CASE("underlying_properties: C4, C3 and the fig3a cut vertex") {
    UnderlyingProperties c4 = underlying_properties(cycle_graph(4));
    CHECK(c4.bipartite);
    CHECK(c4.two_connected);
    CHECK(c4.connected);

    UnderlyingProperties c3 = underlying_properties(cycle_graph(3));
    CHECK_FALSE(c3.bipartite);
    CHECK(c3.two_connected);

    // Bowtie with pendant: 6 vertices, 7 edges, cut vertices.
    GainGraph fig3a(6, {{0, 1, Unit::one()}, {0, 2, Unit::one()},
                        {1, 2, Unit::one()}, {2, 3, Unit::one()},
                        {2, 4, Unit::one()}, {3, 4, Unit::one()},
                        {4, 5, Unit::one()}});
    UnderlyingProperties p = underlying_properties(fig3a);
    CHECK(p.connected);
    CHECK_FALSE(p.two_connected);
    CHECK(p.edge_count == 7);
}
