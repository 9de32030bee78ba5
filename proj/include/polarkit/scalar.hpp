#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "polarkit/errors.hpp"

namespace polarkit {

// Numeric mode of a computation. Exact mode carries arbitrary-precision
// rationals end to end; floating mode carries doubles and applies a small
// tolerance when values are compared or merged.
enum class Mode { exact, floating };

// Floating-mode tolerance: values a, b are considered the same point when
// |a - b| <= kMergeTolerance * max(1, |a|).
inline constexpr double kMergeTolerance = 1e-12;

// Allowed drift of probability sums on external input (decimal weights etc.).
inline constexpr double kSumTolerance = 1e-9;

// A numeric value in one of the two modes. Arithmetic requires both operands
// to share a mode; mixing modes throws UsageError rather than silently
// promoting, so exact results can never be contaminated by doubles.
//
// The class itself does not confine values to [0,1] (intermediates of the
// closed forms step outside); probability-valued API boundaries validate with
// require_probability().
class Scalar {
public:
    Scalar() : v_(0.0) {}

    static Scalar exact(long num, long den = 1);
    static Scalar exact(mpq_class q);
    static Scalar floating(double v);
    static Scalar zero(Mode m) { return m == Mode::exact ? exact(0) : floating(0.0); }
    static Scalar one(Mode m) { return m == Mode::exact ? exact(1) : floating(1.0); }
    static Scalar half(Mode m) { return m == Mode::exact ? exact(1, 2) : floating(0.5); }

    Mode mode() const { return std::holds_alternative<mpq_class>(v_) ? Mode::exact : Mode::floating; }
    bool is_exact() const { return mode() == Mode::exact; }

    double to_double() const;
    // Exact mode only; throws UsageError in floating mode.
    const mpq_class& rational() const;

    Scalar complement() const;  // 1 - x
    Scalar pow(std::uint64_t e) const;  // x^e with x^0 = 1

    bool is_zero() const;
    bool is_one() const;
    bool is_half() const;
    bool is_boundary() const { return is_zero() || is_one(); }
    bool in_unit_interval() const;

    // "p/q" (or a plain integer) in exact mode, shortest round-trip decimal in
    // floating mode.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    // Same-mode comparisons; exact in exact mode, plain double compare in
    // floating mode (use approx_equal for tolerance-aware equality).
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

private:
    explicit Scalar(std::variant<double, mpq_class> v) : v_(std::move(v)) {}

    std::variant<double, mpq_class> v_;
};

// Throws UsageError when the operands' numeric modes differ.
Mode require_same_mode(const Scalar& a, const Scalar& b);
Mode require_same_mode(Mode a, Mode b);

// Equality up to kMergeTolerance in floating mode, exact equality otherwise.
bool approx_equal(const Scalar& a, const Scalar& b);

// Throws UsageError when s is outside [0,1]; `what` names the offending value.
void require_probability(const Scalar& s, const char* what);

}  // namespace polarkit
