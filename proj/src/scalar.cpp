#include "polarkit/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace polarkit {

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw UsageError("exact scalar with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::variant<double, mpq_class>(std::move(q)));
}

Scalar Scalar::exact(mpq_class q) {
    q.canonicalize();
    return Scalar(std::variant<double, mpq_class>(std::move(q)));
}

Scalar Scalar::floating(double v) {
    return Scalar(std::variant<double, mpq_class>(v));
}

double Scalar::to_double() const {
    if (auto* d = std::get_if<double>(&v_)) return *d;
    return std::get<mpq_class>(v_).get_d();
}

const mpq_class& Scalar::rational() const {
    if (!is_exact()) throw UsageError("rational() called on a floating-mode scalar");
    return std::get<mpq_class>(v_);
}

Scalar Scalar::complement() const {
    if (is_exact()) return Scalar::exact(mpq_class(1 - std::get<mpq_class>(v_)));
    return Scalar::floating(1.0 - std::get<double>(v_));
}

Scalar Scalar::pow(std::uint64_t e) const {
    if (e == 0) return one(mode());
    if (is_exact()) {
        const mpq_class& q = std::get<mpq_class>(v_);
        mpq_class r;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
        return Scalar::exact(std::move(r));
    }
    return Scalar::floating(std::pow(std::get<double>(v_), static_cast<double>(e)));
}

bool Scalar::is_zero() const {
    if (is_exact()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<double>(v_) == 0.0;
}

bool Scalar::is_one() const {
    if (is_exact()) return std::get<mpq_class>(v_) == 1;
    return std::get<double>(v_) == 1.0;
}

bool Scalar::is_half() const {
    if (is_exact()) return std::get<mpq_class>(v_) == mpq_class(1, 2);
    return std::get<double>(v_) == 0.5;
}

bool Scalar::in_unit_interval() const {
    if (is_exact()) {
        const mpq_class& q = std::get<mpq_class>(v_);
        return sgn(q) >= 0 && q <= 1;
    }
    double d = std::get<double>(v_);
    return d >= 0.0 && d <= 1.0;
}

std::string Scalar::str() const {
    if (is_exact()) return std::get<mpq_class>(v_).get_str();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v_));
    return buf;
}

namespace {

template <class OpQ, class OpD>
Scalar combine(const Scalar& a, const Scalar& b, OpQ opq, OpD opd) {
    if (require_same_mode(a, b) == Mode::exact)
        return Scalar::exact(opq(a.rational(), b.rational()));
    return Scalar::floating(opd(a.to_double(), b.to_double()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(
        a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
        [](double x, double y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(
        a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
        [](double x, double y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(
        a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
        [](double x, double y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw UsageError("scalar division by zero");
    return combine(
        a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x / y); },
        [](double x, double y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::exact) return a.rational() == b.rational();
    return a.to_double() == b.to_double();
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::exact) return a.rational() < b.rational();
    return a.to_double() < b.to_double();
}

Mode require_same_mode(const Scalar& a, const Scalar& b) {
    return require_same_mode(a.mode(), b.mode());
}

Mode require_same_mode(Mode a, Mode b) {
    if (a != b)
        throw UsageError("numeric mode mismatch: exact and floating values cannot be combined");
    return a;
}

bool approx_equal(const Scalar& a, const Scalar& b) {
    if (require_same_mode(a, b) == Mode::exact) return a == b;
    double x = a.to_double(), y = b.to_double();
    return std::abs(x - y) <= kMergeTolerance * std::max(1.0, std::abs(x));
}

void require_probability(const Scalar& s, const char* what) {
    if (!s.in_unit_interval())
        throw UsageError(std::string(what) + " must lie in [0,1], got " + s.str());
}

}  // namespace polarkit
