#include "polarkit/prob_algebra.hpp"

#include <cmath>

namespace polarkit {

Scalar minus_crossover(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b);
    require_probability(a, "crossover argument");
    require_probability(b, "crossover argument");
    return a.complement() * b + a * b.complement();
}

Scalar plus_crossover(const Scalar& a, const Scalar& b) {
    Mode m = require_same_mode(a, b);
    require_probability(a, "crossover argument");
    require_probability(b, "crossover argument");
    if (a.is_boundary() || b.is_boundary()) return Scalar::zero(m);
    Scalar num = a * b;
    return num / (num + a.complement() * b.complement());
}

Scalar minus_crossover_power(const Scalar& eps, std::uint64_t n) {
    require_probability(eps, "crossover argument");
    Scalar acc = Scalar::zero(eps.mode());
    Scalar base = eps;
    while (n != 0) {
        if (n & 1) acc = minus_crossover(acc, base);
        n >>= 1;
        if (n != 0) base = minus_crossover(base, base);
    }
    return acc;
}

Scalar plus_crossover_power(const Scalar& sigma, std::uint64_t n) {
    require_probability(sigma, "crossover argument");
    if (n == 0) return Scalar::half(sigma.mode());
    if (n == 1) return sigma;
    if (sigma.is_boundary()) return Scalar::zero(sigma.mode());
    if (sigma.is_exact()) {
        Scalar num = sigma.pow(n);
        return num / (num + sigma.complement().pow(n));
    }
    // Work with the smaller of sigma, 1-sigma so the power ratio stays <= 1.
    double s = sigma.to_double();
    double lo = std::min(s, 1.0 - s), hi = std::max(s, 1.0 - s);
    double r = std::pow(lo / hi, static_cast<double>(n));
    double p = r / (1.0 + r);
    return Scalar::floating(s <= 0.5 ? p : 1.0 - p);
}

Scalar branch_weight(std::span<const Scalar> sigmas) {
    if (sigmas.empty()) throw UsageError("branch_weight of an empty pattern");
    Mode m = sigmas.front().mode();
    bool boundary = false;
    for (const Scalar& s : sigmas) {
        if (s.mode() != m) throw UsageError("numeric mode mismatch in branch_weight");
        require_probability(s, "branch pattern entry");
        boundary = boundary || s.is_boundary();
    }
    std::uint64_t t = sigmas.size();
    if (boundary) {
        if (m == Mode::exact) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, t);
            return Scalar::exact(mpq_class(1, den));
        }
        return Scalar::floating(std::ldexp(1.0, -static_cast<int>(t)));
    }
    Scalar p = Scalar::one(m), q = Scalar::one(m);
    for (const Scalar& s : sigmas) {
        p = p * s;
        q = q * s.complement();
    }
    return (p + q) / (Scalar::one(m) + Scalar::one(m));
}

mpz_class multinomial(std::span<const std::uint64_t> parts) {
    std::uint64_t m = 0;
    for (std::uint64_t a : parts) m += a;
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), m);
    mpz_class f;
    for (std::uint64_t a : parts) {
        if (a < 2) continue;
        mpz_fac_ui(f.get_mpz_t(), a);
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
    }
    return r;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class balls_in_boxes(std::uint64_t m, std::uint64_t n) {
    if (n == 0) return m == 0 ? 1 : 0;
    return binomial(m + n - 1, m);
}

double binary_entropy(double eps) {
    if (eps <= 0.0 || eps >= 1.0) return 0.0;
    return -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps);
}

double binary_entropy(const Scalar& eps) { return binary_entropy(eps.to_double()); }

}  // namespace polarkit
