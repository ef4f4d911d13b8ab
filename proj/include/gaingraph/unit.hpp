#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "gaingraph/errors.hpp"

namespace gaingraph {

// Angle expressed as a reduced fraction of a full turn, normalized to
// [0, 1). Kept alongside the floating value so that products and
// conjugates of roots of unity stay exact (census bucketing relies on
// identical doubles for identical angles).
struct Turns {
    long long num = 0;
    long long den = 1;  // den > 0, gcd(num, den) = 1, 0 <= num < den

    static Turns reduced(long long p, long long q);
    Turns operator+(const Turns& o) const;
    Turns operator-() const;
    bool operator==(const Turns& o) const = default;
};

// A complex number of unit modulus. Cartesian input is accepted within
// 1e-12 of the circle and renormalized; exact rational angles are
// preserved through multiplication, conjugation and negation.
class Unit {
public:
    Unit() : value_(1.0, 0.0), turns_(Turns{0, 1}) {}

    // Throws NonUnitGain if |re + i*im| is off the circle beyond 1e-12.
    static Unit cartesian(double re, double im);
    // exp(2*pi*i * p/q); exact.
    static Unit turns(long long p, long long q);
    static Unit one() { return turns(0, 1); }
    static Unit minus_one() { return turns(1, 2); }
    static Unit i() { return turns(1, 4); }

    double re() const { return value_.real(); }
    double im() const { return value_.imag(); }
    std::complex<double> value() const { return value_; }
    const std::optional<Turns>& exact_turns() const { return turns_; }

    Unit conj() const;
    Unit operator-() const;  // adds a half turn
    Unit operator*(const Unit& o) const;
    bool approx_equal(const Unit& o, double tol = 1e-9) const {
        return std::abs(value_ - o.value_) <= tol;
    }

    static constexpr double kModulusTol = 1e-12;

private:
    Unit(std::complex<double> v, std::optional<Turns> t);

    std::complex<double> value_;
    std::optional<Turns> turns_;
};

}  // namespace gaingraph
