#include "gaingraph/unit.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace gaingraph {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonUnitGain: return "NonUnitGain";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotAPermutation: return "NotAPermutation";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::Bipartite: return "Bipartite";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NonUnitEntry: return "NonUnitEntry";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

namespace {

// Denominators past this limit fall back to float-only gains.
constexpr long long kMaxDen = 1'000'000'000'000LL;

bool mul_overflows(long long a, long long b) {
    long long r;
    return __builtin_mul_overflow(a, b, &r);
}

}  // namespace

Turns Turns::reduced(long long p, long long q) {
    if (q == 0) throw Error(ErrorCode::ParseError, "turns denominator must be nonzero");
    if (q < 0) { p = -p; q = -q; }
    p %= q;
    if (p < 0) p += q;
    long long g = std::gcd(p, q);
    return Turns{p / g, q / g};
}

Turns Turns::operator+(const Turns& o) const {
    long long g = std::gcd(den, o.den);
    long long scale = o.den / g;
    if (mul_overflows(den, scale)) throw Error(ErrorCode::ParseError, "turns overflow");
    long long d = den * scale;
    long long a = num * scale;
    long long b = o.num * (den / g);
    return reduced(a + b, d);
}

Turns Turns::operator-() const { return reduced(-num, den); }

Unit::Unit(std::complex<double> v, std::optional<Turns> t)
    : value_(v), turns_(std::move(t)) {}

Unit Unit::cartesian(double re, double im) {
    double norm2 = re * re + im * im;
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kModulusTol) {
        throw Error(ErrorCode::NonUnitGain,
                    "gain (" + std::to_string(re) + ", " + std::to_string(im) +
                        ") is not on the unit circle");
    }
    double m = std::sqrt(norm2);
    return Unit(std::complex<double>(re / m, im / m), std::nullopt);
}

Unit Unit::turns(long long p, long long q) {
    Turns t = Turns::reduced(p, q);
    // Exact values at the quarter turns; cos/sin otherwise.
    std::complex<double> v;
    if (t.den == 1) v = {1.0, 0.0};
    else if (t.den == 2) v = {-1.0, 0.0};
    else if (t.den == 4) v = (t.num == 1) ? std::complex<double>(0.0, 1.0)
                                          : std::complex<double>(0.0, -1.0);
    else {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(t.num) /
                       static_cast<double>(t.den);
        v = {std::cos(theta), std::sin(theta)};
    }
    return Unit(v, t);
}

Unit Unit::conj() const {
    if (turns_) return turns(-turns_->num, turns_->den);
    return Unit(std::conj(value_), std::nullopt);
}

Unit Unit::operator-() const {
    if (turns_) {
        Turns t = *turns_ + Turns{1, 2};
        return turns(t.num, t.den);
    }
    return Unit(-value_, std::nullopt);
}

Unit Unit::operator*(const Unit& o) const {
    if (turns_ && o.turns_) {
        long long g = std::gcd(turns_->den, o.turns_->den);
        if (!mul_overflows(turns_->den / g, o.turns_->den) &&
            (turns_->den / g) * o.turns_->den <= kMaxDen) {
            Turns t = *turns_ + *o.turns_;
            return turns(t.num, t.den);
        }
    }
    std::complex<double> v = value_ * o.value_;
    // Renormalize so long products do not drift off the circle.
    return Unit(v / std::abs(v), std::nullopt);
}

}  // namespace gaingraph
