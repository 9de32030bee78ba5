#include "polarkit/verify.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "polarkit/arikan.hpp"
#include "polarkit/errors.hpp"
#include "polarkit/polar.hpp"
#include "polarkit/prob_algebra.hpp"

namespace polarkit::verify {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw VerifyError(what);
}

std::vector<Scalar> scalar_grid() {
    std::vector<Scalar> g;
    const long fracs[][2] = {{0, 1}, {1, 10}, {1, 4}, {1, 3}, {1, 2}, {3, 5}, {9, 10}, {1, 1}};
    for (auto [n, d] : fracs) g.push_back(Scalar::exact(n, d));
    return g;
}

Scalar diamond_fold(std::span<const Scalar> xs) {
    Scalar r = Scalar::half(Mode::exact);
    for (const Scalar& x : xs) r = plus_crossover(r, x);
    return r;
}

std::vector<BitSequence> all_sequences(std::size_t max_len) {
    std::vector<BitSequence> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            BitSequence b;
            for (std::size_t i = 0; i < len; ++i)
                b.push_back(static_cast<std::uint8_t>((v >> (len - 1 - i)) & 1));
            out.push_back(std::move(b));
        }
    }
    return out;
}

}  // namespace

void algebra() {
    const std::vector<Scalar> g = scalar_grid();
    const Scalar one = Scalar::one(Mode::exact);
    const Scalar two = Scalar::exact(2);
    const Scalar half = Scalar::half(Mode::exact);
    const Scalar zero = Scalar::zero(Mode::exact);

    for (const Scalar& a : g) {
        if (minus_crossover(a, zero) != a) fail("algebra: 0 is not a minus identity at " + a.str());
        if (minus_crossover(a, half) != half)
            fail("algebra: 1/2 does not absorb minus at " + a.str());
        // 1/2 is the plus identity except at a = 1, where the resolved-look
        // convention pins the result to 0 instead
        if (a.is_one()) {
            if (!plus_crossover(a, half).is_zero())
                fail("algebra: resolved look does not pin plus at 1");
        } else if (plus_crossover(a, half) != a) {
            fail("algebra: 1/2 is not a plus identity at " + a.str());
        }
        if (!plus_crossover(a, zero).is_zero())
            fail("algebra: resolved look does not pin plus at " + a.str());
        for (const Scalar& b : g) {
            if (minus_crossover(a, b) != minus_crossover(b, a))
                fail("algebra: minus not commutative at " + a.str() + "," + b.str());
            if (plus_crossover(a, b) != plus_crossover(b, a))
                fail("algebra: plus not commutative at " + a.str() + "," + b.str());
            // complement flows through minus
            if (minus_crossover(a.complement(), b) != minus_crossover(a, b).complement())
                fail("algebra: minus complement law fails at " + a.str() + "," + b.str());
            // bias product form of minus
            const Scalar lhs = one - two * minus_crossover(a, b);
            const Scalar rhs = (one - two * a) * (one - two * b);
            if (lhs != rhs) fail("algebra: minus bias product fails at " + a.str() + "," + b.str());
            if (!a.is_boundary() && !b.is_boundary()) {
                if (plus_crossover(a, b).complement() !=
                    plus_crossover(a.complement(), b.complement()))
                    fail("algebra: plus complement pair law fails at " + a.str() + "," + b.str());
            }
            for (const Scalar& c : g) {
                if (minus_crossover(minus_crossover(a, b), c) !=
                    minus_crossover(a, minus_crossover(b, c)))
                    fail("algebra: minus not associative at " + a.str() + "," + b.str() + "," +
                         c.str());
                if (plus_crossover(plus_crossover(a, b), c) !=
                    plus_crossover(a, plus_crossover(b, c)))
                    fail("algebra: plus not associative at " + a.str() + "," + b.str() + "," +
                         c.str());
            }
        }
        // powers against explicit folds; the plus routes can land on opposite
        // sides of 1/2 at the boundary (a resolved look pins to 0 where the
        // power form keeps sigma), so compare as channel classes
        const auto cls = [&](const Scalar& v) { return v > half ? v.complement() : v; };
        Scalar m = zero, p = half;
        for (std::uint64_t n = 0; n <= 6; ++n) {
            if (minus_crossover_power(a, n) != m)
                fail("algebra: minus power mismatch at " + a.str() + "^" + std::to_string(n));
            if (cls(plus_crossover_power(a, n)) != cls(p))
                fail("algebra: plus power mismatch at " + a.str() + "^" + std::to_string(n));
            m = minus_crossover(m, a);
            p = plus_crossover(p, a);
        }
    }

    // branch weights: the recurrence that makes the plus transform expansion
    // telescope, and completeness over sign choices
    const std::vector<Scalar> interior = {Scalar::exact(1, 10), Scalar::exact(1, 3), half,
                                          Scalar::exact(2, 5)};
    std::vector<Scalar> list;
    for (const Scalar& s : interior) {
        if (!list.empty()) {
            const Scalar expect =
                branch_weight(list) * minus_crossover(diamond_fold(list), s.complement());
            std::vector<Scalar> longer = list;
            longer.push_back(s);
            if (branch_weight(longer) != expect)
                fail("algebra: branch weight recurrence fails at length " +
                     std::to_string(longer.size()));
        }
        list.push_back(s);
    }
    for (std::size_t t = 1; t <= 3; ++t) {
        std::vector<Scalar> sigma(t, Scalar::exact(1, 10));
        Scalar total = zero;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
            for (std::size_t i = 0; i < t; ++i)
                sigma[i] = (mask >> i) & 1 ? Scalar::exact(9, 10) : Scalar::exact(1, 10);
            total = total + branch_weight(sigma);
        }
        if (!total.is_one())
            fail("algebra: branch weights do not cover all resolutions at t = " +
                 std::to_string(t));
    }
    const std::vector<Scalar> with_boundary = {Scalar::exact(1, 10), zero, Scalar::exact(1, 3)};
    if (branch_weight(with_boundary) != Scalar::exact(1, 8))
        fail("algebra: resolved-look branch weight is not 2^-t");
}

void oracle_agreement(std::span<const SymmetricChannel> channels, std::size_t depth,
                      std::size_t budget) {
    const std::vector<BitSequence> seqs = all_sequences(depth);
    for (const SymmetricChannel& w : channels) {
        if (w.mode() != Mode::exact)
            throw UsageError("oracle agreement requires exact mode");
        for (const BitSequence& alpha : seqs) {
            const SymmetricChannel ch = transform_sequence(alpha, w, budget);
            const GeneralChannel table = oracle::sequence_table(alpha, w, budget);
            if (!equivalent(lrp(ch), lrp_from_table(table)))
                fail("oracle: profile mismatch at alpha = \"" + alpha.str() + "\"");
            if (std::fabs(capacity(ch) - oracle::mutual_information(table)) > 1e-9)
                fail("oracle: mutual information mismatch at alpha = \"" + alpha.str() + "\"");
        }
    }
}

void closed_forms() {
    using P = std::pair<Scalar, SymmetricChannel>;
    std::vector<SymmetricChannel> channels;
    channels.push_back(make_bsc(Scalar::exact(1, 10)));
    {
        std::vector<P> parts = {{Scalar::exact(1, 2), make_bsc(Scalar::exact(1, 8))},
                                {Scalar::exact(1, 2), make_bsc(Scalar::exact(3, 8))}};
        channels.push_back(mix(parts));
    }
    {
        std::vector<P> parts = {{Scalar::exact(1, 4), make_bsc(Scalar::exact(1, 8))},
                                {Scalar::exact(1, 4), make_bsc(Scalar::exact(3, 8))},
                                {Scalar::exact(1, 2), make_bsc(Scalar::exact(1, 2))}};
        channels.push_back(mix(parts));
    }
    channels.push_back(make_bec(Scalar::exact(1, 3)));

    for (const SymmetricChannel& w : channels) {
        for (std::uint64_t m = 1; m <= 4; ++m) {
            if (!equivalent(minus_fold_expansion(w, m), minus_fold(w, m)))
                fail("closed-form: minus expansion mismatch at m = " + std::to_string(m));
            if (!equivalent(plus_fold_expansion(w, m), plus_fold(w, m)))
                fail("closed-form: plus expansion mismatch at m = " + std::to_string(m));
        }
    }

    // mixture folds against folding the assembled mixture directly
    const SymmetricChannel base = make_bsc(Scalar::exact(1, 10));
    for (long pn : {0L, 1L}) {
        for (long qn : {0L, 1L}) {
            const Scalar p = Scalar::exact(pn, 4), q = Scalar::exact(qn, 4);
            const Scalar rest = (p + q).complement();
            std::vector<P> parts = {{p, make_bsc(Scalar::zero(Mode::exact))},
                                    {q, make_bsc(Scalar::half(Mode::exact))},
                                    {rest, base}};
            std::vector<P> nonzero;
            for (auto& part : parts)
                if (!part.first.is_zero()) nonzero.push_back(part);
            const SymmetricChannel mixed = mix(nonzero);
            for (std::uint64_t t = 1; t <= 3; ++t) {
                if (!equivalent(minus_fold_mixture(base, p, q, t), minus_fold(mixed, t)))
                    fail("closed-form: minus mixture fold mismatch at t = " + std::to_string(t));
                if (!equivalent(plus_fold_mixture(base, p, q, t), plus_fold(mixed, t)))
                    fail("closed-form: plus mixture fold mismatch at t = " + std::to_string(t));
            }
        }
    }

    // structured patterns against the step-by-step route
    const IndexPattern shapes[] = {IndexPattern::zeros, IndexPattern::zeros_ones,
                                   IndexPattern::zeros_one_zeros_ones,
                                   IndexPattern::zeros_one_zeros_one_zeros,
                                   IndexPattern::zeros_one_zeros_one_zeros_one};
    for (const Scalar& eps : {Scalar::exact(1, 10), Scalar::exact(1, 3)}) {
        for (IndexPattern shape : shapes) {
            for (std::uint64_t l = 0; l <= 1; ++l) {
                for (std::uint64_t i = 0; i <= 1; ++i) {
                    for (std::uint64_t kk = 0; kk <= 1; ++kk) {
                        for (std::uint64_t t = 0; t <= 1; ++t) {
                            const PatternDims d{l, i, kk, t};
                            const BitSequence alpha = pattern_bits(shape, d);
                            if (!equivalent(pattern_channel(shape, d, eps),
                                            transform_sequence(alpha, make_bsc(eps))))
                                fail("closed-form: pattern mismatch at alpha = \"" + alpha.str() +
                                     "\", eps = " + eps.str());
                        }
                    }
                }
            }
        }
    }

    // erasure fast path
    const Scalar q = Scalar::exact(1, 3);
    for (const BitSequence& alpha : all_sequences(4)) {
        if (!equivalent(transform_sequence(alpha, make_bec(q)), make_bec(bec_erasure(alpha, q))))
            fail("closed-form: erasure fast path mismatch at alpha = \"" + alpha.str() + "\"");
    }
}

void counting_identity() {
    for (std::uint64_t k = 0; k <= 4; ++k) {
        const std::uint64_t z = std::uint64_t{1} << k;
        for (std::uint64_t a = 0; a <= z; ++a) {
            mpz_class sum = 0;
            for (std::uint64_t b = 0; a + 2 * b <= z; ++b) {
                const std::uint64_t s = z - a - 2 * b;
                const std::uint64_t parts[3] = {s, a + b, b};
                mpz_class term = multinomial(parts);
                mpz_class shifted;
                mpz_mul_2exp(shifted.get_mpz_t(), term.get_mpz_t(), s);
                sum += shifted;
            }
            if (sum != binomial(2 * z, z - a))
                fail("counting: pair-resolution identity fails at k = " + std::to_string(k) +
                     ", a = " + std::to_string(a));
        }
    }
}

void support_bounds(std::span<const SymmetricChannel> channels) {
    for (const SymmetricChannel& w : channels) {
        const SupportBoundReport report = support_bound_check(w, 2);
        for (const SupportBound& e : report.entries)
            if (!e.ok)
                fail("support bound exceeded at alpha = \"" + e.alpha.str() + "\": " +
                     std::to_string(e.observed) + " > " + std::to_string(e.bound));
    }
}

std::vector<SymmetricChannel> default_suite() {
    std::vector<SymmetricChannel> out;
    out.push_back(make_bsc(Scalar::exact(1, 4)));
    out.push_back(make_bsc(Scalar::exact(1, 10)));
    out.push_back(make_bec(Scalar::exact(1, 2)));
    std::vector<std::pair<Scalar, SymmetricChannel>> parts = {
        {Scalar::exact(1, 2), make_bsc(Scalar::exact(1, 8))},
        {Scalar::exact(1, 2), make_bsc(Scalar::exact(3, 8))}};
    out.push_back(mix(parts));
    return out;
}

std::vector<SymmetricChannel> default_bound_suite() {
    const long eps[][2] = {{1, 10}, {1, 5}, {3, 10}, {2, 5}};
    std::vector<SymmetricChannel> out;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::pair<Scalar, SymmetricChannel>> parts;
        for (std::size_t i = 0; i < n; ++i)
            parts.emplace_back(Scalar::exact(1, static_cast<long>(2 * n)),
                               make_bsc(Scalar::exact(eps[i][0], eps[i][1])));
        parts.emplace_back(Scalar::exact(1, 2), make_bsc(Scalar::half(Mode::exact)));
        out.push_back(mix(parts));
    }
    return out;
}

}  // namespace polarkit::verify
