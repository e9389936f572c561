#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dast {

// Exact fraction over int64. Solve rates and parsed numeric answers are kept
// as rationals so comparisons at the 0.4 / 0.8 bucket boundaries and answer
// equality checks never go through floating point.
//
// Magnitudes are capped (|num| <= 1e15, den <= 1e12 after reduction) so that
// cross-multiplied comparisons, including the tolerance check, fit in
// __int128 without overflow. Parsers fall back to symbolic handling for
// anything wider.
class Rational {
public:
    static constexpr std::int64_t kMaxNum = 1000000000000000LL;  // 1e15
    static constexpr std::int64_t kMaxDen = 1000000000000LL;     // 1e12

    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if ((num_ < -kMaxNum || num_ > kMaxNum) || den_ > kMaxDen)
            throw std::out_of_range("Rational: magnitude out of supported range");
    }

    static Rational from_int(std::int64_t v) { return Rational(v, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Canonical reduced form, always "num/den", e.g. "7/10", "0/1", "-3/4".
    std::string to_fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // "3" for integers, "num/den" otherwise.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return to_fraction_string();
    }

    // Accepts "7/10", "-3/4", and bare integers "3".
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // both reduced
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // |a - b| <= tol without materializing the difference (overflow-safe).
    static bool abs_diff_leq(const Rational& a, const Rational& b, const Rational& tol) {
        __int128 diff = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
        if (diff < 0) diff = -diff;
        const __int128 lhs = diff * tol.den_;
        const __int128 rhs = static_cast<__int128>(tol.num_) * a.den_ * b.den_;
        return lhs <= rhs;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace dast
