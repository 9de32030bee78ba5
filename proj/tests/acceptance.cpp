// Acceptance gate: one line per criterion, exit 0 only when every criterion
// holds. Each criterion is independent; a failure prints the first
// counterexample found and the remaining criteria still run.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polarkit/arikan.hpp"
#include "polarkit/bits.hpp"
#include "polarkit/channel.hpp"
#include "polarkit/oracle.hpp"
#include "polarkit/polar.hpp"
#include "polarkit/prob_algebra.hpp"

using namespace polarkit;

namespace {

Scalar Q(long n, long d = 1) { return Scalar::exact(n, d); }

SymmetricChannel two_bsc_mix(long w1n, long w1d, long e1n, long e1d, long w2n, long w2d, long e2n,
                             long e2d) {
    std::vector<std::pair<Scalar, SymmetricChannel>> parts;
    parts.emplace_back(Q(w1n, w1d), make_bsc(Q(e1n, e1d)));
    parts.emplace_back(Q(w2n, w2d), make_bsc(Q(e2n, e2d)));
    return mix(parts);
}

std::vector<SymmetricChannel> oracle_suite() {
    return {make_bsc(Q(1, 4)), make_bsc(Q(1, 10)), make_bec(Q(1, 2)),
            two_bsc_mix(1, 2, 1, 8, 1, 2, 3, 8)};
}

double z_of_table(const GeneralChannel& t) {
    double z = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i)
        z += std::sqrt(t.p0[i].to_double() * t.p1[i].to_double());
    return z;
}

std::vector<BitSequence> all_sequences(std::size_t max_len) {
    std::vector<BitSequence> out{BitSequence()};
    for (std::size_t len = 1; len <= max_len; ++len)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            std::vector<std::uint8_t> raw(len);
            for (std::size_t i = 0; i < len; ++i) raw[i] = bits >> (len - 1 - i) & 1;
            out.emplace_back(std::move(raw));
        }
    return out;
}

SymmetricChannel random_channel(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_real_distribution<double> eps_dist(0.0, 0.5);
    std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
    const int n = count(rng);
    std::vector<BscComponent> comps;
    double total = 0.0;
    std::vector<double> weights;
    for (int i = 0; i < n; ++i) {
        weights.push_back(weight_dist(rng));
        total += weights.back();
    }
    for (int i = 0; i < n; ++i)
        comps.push_back({Scalar::floating(eps_dist(rng)), Scalar::floating(weights[i] / total)});
    return canonicalize(std::move(comps), Mode::floating);
}

struct Gate {
    bool all_ok = true;

    void criterion(int number, const std::string& title, const std::function<void()>& body) {
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (failure.empty()) {
            std::printf("criterion %d (%s): pass\n", number, title.c_str());
        } else {
            std::printf("criterion %d (%s): FAIL -- %s\n", number, title.c_str(),
                        failure.c_str());
            all_ok = false;
        }
    }
};

struct Failure : std::runtime_error {
    explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

}  // namespace

int main() {
    Gate gate;

    // Shared randomized channel pairs for the capacity / bhattacharyya laws.
    std::mt19937_64 rng(0x706f6c6172u);
    std::vector<std::pair<SymmetricChannel, SymmetricChannel>> random_pairs;
    for (int i = 0; i < 100; ++i) {
        SymmetricChannel a = random_channel(rng);
        SymmetricChannel b = random_channel(rng);
        random_pairs.emplace_back(std::move(a), std::move(b));
    }

    gate.criterion(1, "oracle equivalence", [] {
        const std::size_t budget = 20'000'000;
        for (const SymmetricChannel& w : oracle_suite()) {
            for (const BitSequence& alpha : all_sequences(3)) {
                const LikelihoodRatioProfile fast = lrp(transform_sequence(alpha, w));
                const LikelihoodRatioProfile slow =
                    lrp_from_table(oracle::sequence_table(alpha, w, budget));
                require(equivalent(fast, slow),
                        "profiles differ at alpha=" + alpha.str());
            }
        }
    });

    gate.criterion(2, "printed generator matrices", [] {
        using Rows = std::vector<std::vector<std::uint8_t>>;
        const Rows g1 = {{1, 0}, {1, 1}};
        const Rows g2 = {{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 1}};
        const Rows g3 = {{1, 0, 0, 0, 0, 0, 0, 0},
                         {1, 0, 0, 0, 1, 0, 0, 0},
                         {1, 0, 1, 0, 0, 0, 0, 0},
                         {1, 0, 1, 0, 1, 0, 1, 0},
                         {1, 1, 0, 0, 0, 0, 0, 0},
                         {1, 1, 0, 0, 1, 1, 0, 0},
                         {1, 1, 1, 1, 0, 0, 0, 0},
                         {1, 1, 1, 1, 1, 1, 1, 1}};
        require(generator_matrix(1).rows == g1, "order-1 matrix mismatch");
        require(generator_matrix(2).rows == g2, "order-2 matrix mismatch");
        require(generator_matrix(3).rows == g3, "order-3 matrix mismatch");
    });

    gate.criterion(3, "erasure closed form for 0110", [] {
        const BitSequence alpha = BitSequence::parse("0110");
        for (long num : {1L, 2L, 3L}) {
            const Scalar q = Q(num, 4);
            // 1 - (1 - (1 - (1-q)^2)^4)^2, the composition of the per-step maps
            const Scalar step0 = Q(1) - q.complement().pow(2);
            const Scalar formula = Q(1) - (Q(1) - step0.pow(4)).pow(2);
            const Scalar fast = bec_erasure(alpha, q);
            require(fast == formula, "fast path disagrees with the composition at q=" + q.str());
            require(equivalent(transform_sequence(alpha, make_bec(q)), make_bec(formula)),
                    "transform route disagrees at q=" + q.str());
        }
        require(bec_erasure(alpha, Q(1, 2)) == Q(34911, 65536),
                "erasure at q=1/2 is not 34911/65536");
        // the complementary mass 30625/65536 is the capacity of the result
        require(Q(34911, 65536).complement() == Q(30625, 65536), "complement arithmetic");
    });

    gate.criterion(4, "capacity conservation", [&] {
        for (const auto& [w0, w1] : random_pairs) {
            const double before = capacity(w0) + capacity(w1);
            const double after =
                capacity(transform_minus(w0, w1)) + capacity(transform_plus(w0, w1));
            require(std::fabs(after - before) <= 1e-9,
                    "capacity drifted by " + std::to_string(after - before));
        }
    });

    gate.criterion(5, "bhattacharyya laws", [&] {
        // first, the exact-mode oracle confirmation on the suite channels
        for (const SymmetricChannel& a : oracle_suite()) {
            for (const SymmetricChannel& b : oracle_suite()) {
                const GeneralChannel ta = oracle::table_of(a);
                const GeneralChannel tb = oracle::table_of(b);
                const double za = z_of_table(ta), zb = z_of_table(tb);
                const double z_plus = z_of_table(oracle::plus_table(ta, tb));
                const double z_minus = z_of_table(oracle::minus_table(ta, tb));
                require(std::fabs(z_plus - za * zb) <= 1e-9, "oracle product law");
                require(z_minus <= za + zb - za * zb + 1e-9, "oracle union bound");
            }
        }
        for (const SymmetricChannel& w : oracle_suite()) {
            for (const BitSequence& alpha : all_sequences(2)) {
                const double z_fast = bhattacharyya(transform_sequence(alpha, w));
                const double z_slow = z_of_table(oracle::sequence_table(alpha, w));
                require(std::fabs(z_fast - z_slow) <= 1e-9,
                        "routes disagree at alpha=" + alpha.str());
            }
        }
        // then the randomized float set
        for (const auto& [w0, w1] : random_pairs) {
            const double z0 = bhattacharyya(w0), z1 = bhattacharyya(w1);
            const double z_plus = bhattacharyya(transform_plus(w0, w1));
            const double z_minus = bhattacharyya(transform_minus(w0, w1));
            require(std::fabs(z_plus - z0 * z1) <= 1e-9, "product law");
            require(z_minus <= z0 + z1 - z0 * z1 + 1e-9, "union bound");
        }
        // erasure pairs attain the union bound
        std::mt19937_64 bec_rng(0x62656373u);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            const SymmetricChannel e0 = make_bec(Scalar::floating(u(bec_rng)));
            const SymmetricChannel e1 = make_bec(Scalar::floating(u(bec_rng)));
            const double z0 = bhattacharyya(e0), z1 = bhattacharyya(e1);
            const double z_minus = bhattacharyya(transform_minus(e0, e1));
            require(std::fabs(z_minus - (z0 + z1 - z0 * z1)) <= 1e-9, "erasure equality");
        }
    });

    gate.criterion(6, "closed-form agreement", [] {
        const std::vector<SymmetricChannel> channels = {
            make_bsc(Q(1, 10)), two_bsc_mix(1, 2, 1, 8, 1, 2, 3, 8),
            [] {
                std::vector<std::pair<Scalar, SymmetricChannel>> parts;
                parts.emplace_back(Q(1, 4), make_bsc(Q(1, 8)));
                parts.emplace_back(Q(1, 4), make_bsc(Q(3, 8)));
                parts.emplace_back(Q(1, 2), make_bsc(Q(1, 2)));
                return mix(parts);
            }()};
        for (const SymmetricChannel& w : channels) {
            for (std::uint64_t m = 1; m <= 5; ++m) {
                require(equivalent(minus_fold_expansion(w, m), minus_fold(w, m)),
                        "xor-combine expansion differs at m=" + std::to_string(m));
                require(equivalent(plus_fold_expansion(w, m), plus_fold(w, m)),
                        "repeat-combine expansion differs at m=" + std::to_string(m));
            }
        }
        const IndexPattern shapes[] = {
            IndexPattern::zeros, IndexPattern::zeros_ones, IndexPattern::zeros_one_zeros_ones,
            IndexPattern::zeros_one_zeros_one_zeros, IndexPattern::zeros_one_zeros_one_zeros_one};
        for (const Scalar& eps : {Q(1, 10), Q(1, 3)}) {
            for (const IndexPattern shape : shapes) {
                std::vector<std::string> seen;
                for (std::uint64_t l = 0; l <= 2; ++l)
                    for (std::uint64_t i = 0; i <= 2; ++i)
                        for (std::uint64_t k = 0; k <= 2; ++k)
                            for (std::uint64_t t = 0; t <= 2; ++t) {
                                const PatternDims d{l, i, k, t};
                                const BitSequence alpha = pattern_bits(shape, d);
                                bool done = false;
                                for (const auto& s : seen) done = done || s == alpha.str();
                                if (done) continue;
                                seen.push_back(alpha.str());
                                require(
                                    equivalent(pattern_channel(shape, d, eps),
                                               transform_sequence(alpha, make_bsc(eps))),
                                    "pattern channel differs at alpha=" + alpha.str());
                            }
            }
        }
    });

    gate.criterion(7, "pair-resolution counting identity", [] {
        for (unsigned k = 0; k <= 4; ++k) {
            const std::uint64_t m = 1ull << k;
            for (std::uint64_t a = 0; a <= m; ++a) {
                mpz_class total = 0;
                for (std::uint64_t b = 0; 2 * b + a <= m; ++b) {
                    const std::uint64_t s = m - a - 2 * b;
                    const std::vector<std::uint64_t> parts = {s, a + b, b};
                    mpz_class term = multinomial(parts);
                    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), s);
                    total += term;
                }
                require(total == binomial(2 * m, m - a),
                        "identity fails at k=" + std::to_string(k) + " a=" + std::to_string(a));
            }
        }
    });

    gate.criterion(8, "component-count bounds", [] {
        static const long eps_num[] = {1, 1, 3, 2};
        static const long eps_den[] = {10, 5, 10, 5};
        for (unsigned n = 1; n <= 4; ++n) {
            std::vector<std::pair<Scalar, SymmetricChannel>> parts;
            for (unsigned i = 0; i < n; ++i)
                parts.emplace_back(Q(1, 2 * n), make_bsc(Q(eps_num[i], eps_den[i])));
            parts.emplace_back(Q(1, 2), make_bsc(Q(1, 2)));
            const SupportBoundReport report = support_bound_check(mix(parts));
            for (const SupportBound& entry : report.entries)
                require(entry.ok, "bound violated at n=" + std::to_string(n) +
                                      " alpha=" + entry.alpha.str() + ": " +
                                      std::to_string(entry.observed) + " > " +
                                      std::to_string(entry.bound));
        }
    });

    gate.criterion(9, "collision-factor arithmetic", [] {
        for (const BitSequence& alpha : all_sequences(5)) {
            const mpz_class phi = collision_factor(alpha);
            const unsigned long exponent = (1ul << (alpha.size() + 1)) - 1;
            require(mpz_divisible_2exp_p(phi.get_mpz_t(), exponent) != 0,
                    "not divisible by 2^(2^(k+1)-1) at alpha=" + alpha.str());
            mpz_class quotient;
            mpz_tdiv_q_2exp(quotient.get_mpz_t(), phi.get_mpz_t(), exponent);
            require(mpz_odd_p(quotient.get_mpz_t()) != 0,
                    "even quotient at alpha=" + alpha.str());
            mpz_class lower;
            mpz_ui_pow_ui(lower.get_mpz_t(), 2, exponent);
            mpz_class upper, pow2;
            mpz_fac_ui(upper.get_mpz_t(), 1ul << alpha.size());
            mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 1ul << alpha.size());
            upper *= pow2;
            require(phi >= lower && phi <= upper, "two-sided bound at alpha=" + alpha.str());
        }
    });

    gate.criterion(10, "polarization at depth 10", [] {
        ConstructOptions opts;
        opts.cap = 256;
        const ConstructionResult r = construct(make_bsc(Scalar::floating(0.11)), 10, opts);
        require(r.records.size() == 1024, "expected 1024 indices");
        std::size_t good = 0, bad = 0;
        double total = 0.0;
        for (const IndexRecord& rec : r.records) {
            good += rec.capacity > 0.9;
            bad += rec.capacity < 0.1;
            total += rec.capacity;
        }
        require(good * 100 >= 35 * 1024,
                "only " + std::to_string(good) + "/1024 indices above 0.9");
        require(bad * 100 >= 35 * 1024,
                "only " + std::to_string(bad) + "/1024 indices below 0.1");
        const double ceiling = 1024.0 * (1.0 - binary_entropy(0.11));
        require(total <= ceiling + 1e-6, "total capacity " + std::to_string(total) +
                                             " exceeds " + std::to_string(ceiling));
    });

    gate.criterion(11, "mixture-fold normalization", [] {
        const SymmetricChannel w = two_bsc_mix(1, 2, 1, 8, 1, 2, 3, 8);
        const Scalar grid[] = {Q(0), Q(1, 4), Q(1, 2)};
        for (const Scalar& p : grid) {
            for (const Scalar& q : grid) {
                if ((p + q) > Q(1)) continue;
                const Scalar rest = Q(1) - p - q;
                for (std::uint64_t t = 0; t <= 4; ++t) {
                    std::vector<std::pair<Scalar, SymmetricChannel>> parts;
                    if (!p.is_zero()) parts.emplace_back(p, make_bsc(Q(0)));
                    if (!q.is_zero()) parts.emplace_back(q, make_bsc(Q(1, 2)));
                    if (!rest.is_zero()) parts.emplace_back(rest, w);
                    const SymmetricChannel mixture = mix(parts);
                    const SymmetricChannel minus = minus_fold_mixture(w, p, q, t);
                    const SymmetricChannel plus = plus_fold_mixture(w, p, q, t);
                    Scalar minus_sum = Q(0), plus_sum = Q(0);
                    for (const auto& c : minus.components()) minus_sum = minus_sum + c.weight;
                    for (const auto& c : plus.components()) plus_sum = plus_sum + c.weight;
                    require(minus_sum == Q(1), "xor-combine weights do not sum to 1");
                    require(plus_sum == Q(1), "repeat-combine weights do not sum to 1");
                    require(equivalent(minus, minus_fold(mixture, t)),
                            "xor-combine mixture fold differs at t=" + std::to_string(t));
                    require(equivalent(plus, plus_fold(mixture, t)),
                            "repeat-combine mixture fold differs at t=" + std::to_string(t));
                }
            }
        }
    });

    if (!gate.all_ok) {
        std::printf("acceptance: FAIL\n");
        return 1;
    }
    std::printf("acceptance: all criteria pass\n");
    return 0;
}
