#include "polarkit/arikan.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polarkit/errors.hpp"
#include "polarkit/prob_algebra.hpp"

namespace polarkit {

namespace {

Scalar scalar_of(const mpz_class& z, Mode mode) {
    if (mode == Mode::exact) return Scalar::exact(mpq_class(z));
    return Scalar::floating(z.get_d());
}

bool same_components(const SymmetricChannel& a, const SymmetricChannel& b) {
    if (&a == &b) return true;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.components()[i];
        const auto& y = b.components()[i];
        if (!(x.eps == y.eps) || !(x.weight == y.weight)) return false;
    }
    return true;
}

std::uint64_t pow2_checked(std::uint64_t e, const char* what) {
    if (e >= 40)
        throw ResourceError(std::string(what) + " run length " + std::to_string(e) +
                            " is past the supported range");
    return std::uint64_t{1} << e;
}

}  // namespace

namespace detail {

RawList raw_minus_pairs(const RawList& a, const RawList& b, bool same) {
    RawList out;
    out.reserve(same ? a.size() * (a.size() + 1) / 2 : a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i].eps;
        const double u = a[i].w;
        for (std::size_t j = same ? i : 0; j < b.size(); ++j) {
            const double s = b[j].eps;
            double wt = u * b[j].w;
            if (same && j > i) wt += wt;  // (i,j) and (j,i) coincide
            out.push_back({e * (1.0 - s) + (1.0 - e) * s, wt});
        }
    }
    return out;
}

RawList raw_plus_pairs(const RawList& a, const RawList& b, bool same) {
    RawList out;
    out.reserve(same ? a.size() * (a.size() + 1) : 2 * a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double e = a[i].eps;
        const double u = a[i].w;
        for (std::size_t j = same ? i : 0; j < b.size(); ++j) {
            const double s = b[j].eps;
            double base = u * b[j].w;
            if (same && j > i) base += base;
            if (e <= 0.0 || e >= 1.0 || s <= 0.0 || s >= 1.0) {
                // A resolved branch pins the bit regardless of the partner.
                out.push_back({0.0, base});
                continue;
            }
            const double agree = e * s + (1.0 - e) * (1.0 - s);
            const double differ = 1.0 - agree;
            out.push_back({e * s / agree, base * agree});
            out.push_back({e * (1.0 - s) / differ, base * differ});
        }
    }
    return out;
}

}  // namespace detail

SymmetricChannel transform_minus(const SymmetricChannel& w0, const SymmetricChannel& w1) {
    require_same_mode(w0.mode(), w1.mode());
    const Mode mode = w0.mode();
    const bool same = same_components(w0, w1);
    if (mode == Mode::floating) {
        auto raw = detail::raw_minus_pairs(detail::raw_of(w0), detail::raw_of(w1), same);
        detail::canonicalize_raw(raw);
        return detail::materialize(raw);
    }
    std::vector<BscComponent> out;
    out.reserve(same ? w0.size() * (w0.size() + 1) / 2 : w0.size() * w1.size());
    const auto& ca = w0.components();
    const auto& cb = w1.components();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = same ? i : 0; j < cb.size(); ++j) {
            Scalar wt = ca[i].weight * cb[j].weight;
            if (same && j > i) wt = wt + wt;
            out.push_back({minus_crossover(ca[i].eps, cb[j].eps), std::move(wt)});
        }
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

SymmetricChannel transform_plus(const SymmetricChannel& w0, const SymmetricChannel& w1) {
    require_same_mode(w0.mode(), w1.mode());
    const Mode mode = w0.mode();
    const bool same = same_components(w0, w1);
    if (mode == Mode::floating) {
        auto raw = detail::raw_plus_pairs(detail::raw_of(w0), detail::raw_of(w1), same);
        detail::canonicalize_raw(raw);
        return detail::materialize(raw);
    }
    std::vector<BscComponent> out;
    out.reserve(same ? w0.size() * (w0.size() + 1) : 2 * w0.size() * w1.size());
    const auto& ca = w0.components();
    const auto& cb = w1.components();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const Scalar& e = ca[i].eps;
        for (std::size_t j = same ? i : 0; j < cb.size(); ++j) {
            const Scalar& s = cb[j].eps;
            Scalar base = ca[i].weight * cb[j].weight;
            if (same && j > i) base = base + base;
            const Scalar agree = e * s + e.complement() * s.complement();
            const Scalar differ = minus_crossover(e, s);
            out.push_back({plus_crossover(e, s), base * agree});
            out.push_back({plus_crossover(e, s.complement()), base * differ});
        }
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

SymmetricChannel transform_sequence(const BitSequence& alpha, const SymmetricChannel& w,
                                    std::size_t budget) {
    SymmetricChannel cur = w;
    for (std::size_t step = 0; step < alpha.size(); ++step) {
        const std::size_t n = cur.size();
        const std::size_t projected = n * (n + 1) / 2 * (alpha[step] ? 2 : 1);
        if (projected > budget)
            throw ResourceError("component budget exceeded at transform prefix " +
                                alpha.prefix(step + 1).str() + ": " + std::to_string(projected) +
                                " > " + std::to_string(budget));
        cur = alpha[step] ? transform_plus(cur, cur) : transform_minus(cur, cur);
    }
    return cur;
}

SymmetricChannel minus_fold(const SymmetricChannel& w, std::uint64_t m) {
    if (m == 0) return make_bsc(Scalar::zero(w.mode()));
    if (m == 1) return w;
    std::map<std::uint64_t, SymmetricChannel> memo;
    memo.emplace(1, w);
    auto fold = [&](auto&& self, std::uint64_t t) -> const SymmetricChannel& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        const SymmetricChannel& lo = self(self, t / 2);
        const SymmetricChannel& hi = self(self, t - t / 2);
        return memo.emplace(t, transform_minus(lo, hi)).first->second;
    };
    return fold(fold, m);
}

SymmetricChannel plus_fold(const SymmetricChannel& w, std::uint64_t m) {
    if (m == 0) return make_bsc(Scalar::half(w.mode()));
    if (m == 1) return w;
    std::map<std::uint64_t, SymmetricChannel> memo;
    memo.emplace(1, w);
    auto fold = [&](auto&& self, std::uint64_t t) -> const SymmetricChannel& {
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
        const SymmetricChannel& lo = self(self, t / 2);
        const SymmetricChannel& hi = self(self, t - t / 2);
        return memo.emplace(t, transform_plus(lo, hi)).first->second;
    };
    return fold(fold, m);
}

namespace {

// Shared shell for the two mixture folds. A perfect component is transparent
// to the minus transform and a useless one to the plus transform, so folding
// p B(0) + q B(1/2) + r V reduces to binomially weighted folds of V alone:
// any draw that hits the absorbing part collapses the whole fold.
SymmetricChannel mixture_fold(const SymmetricChannel& v, const Scalar& p, const Scalar& q,
                              std::uint64_t t, bool plus) {
    require_same_mode(p.mode(), q.mode());
    require_same_mode(p.mode(), v.mode());
    require_probability(p, "mixture weight");
    require_probability(q, "mixture weight");
    const Mode mode = v.mode();
    const Scalar sum = p + q;
    if (!sum.in_unit_interval()) throw UsageError("mixture weights exceed 1");
    const Scalar r = sum.complement();
    // Weight of the draws that avoid the absorbing part entirely.
    const Scalar& absorbing = plus ? p : q;
    const Scalar& transparent = plus ? q : p;
    const Scalar collapsed = Scalar::one(mode) - absorbing.complement().pow(t);
    std::vector<BscComponent> out;
    if (!collapsed.is_zero())
        out.push_back({plus ? Scalar::zero(mode) : Scalar::half(mode), collapsed});
    for (std::uint64_t i = 0; i <= t; ++i) {
        const Scalar coeff = scalar_of(binomial(t, i), mode) * transparent.pow(t - i) * r.pow(i);
        if (coeff.is_zero()) continue;
        const SymmetricChannel part = plus ? plus_fold(v, i) : minus_fold(v, i);
        for (const auto& c : part.components()) out.push_back({c.eps, coeff * c.weight});
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

}  // namespace

SymmetricChannel minus_fold_mixture(const SymmetricChannel& w, const Scalar& p, const Scalar& q,
                                    std::uint64_t t) {
    return mixture_fold(w, p, q, t, /*plus=*/false);
}

SymmetricChannel plus_fold_mixture(const SymmetricChannel& w, const Scalar& p, const Scalar& q,
                                   std::uint64_t t) {
    return mixture_fold(w, p, q, t, /*plus=*/true);
}

namespace {

// Splits a canonical channel into its perfect weight, its useless weight, and
// the strictly informative interior components.
struct SplitChannel {
    Scalar p, q;                       // weight at eps = 0 and eps = 1/2
    std::vector<BscComponent> inner;   // eps strictly inside (0, 1/2)
};

SplitChannel split_channel(const SymmetricChannel& w) {
    SplitChannel s{Scalar::zero(w.mode()), Scalar::zero(w.mode()), {}};
    for (const auto& c : w.components()) {
        if (c.eps.is_zero())
            s.p = s.p + c.weight;
        else if (c.eps.is_half())
            s.q = s.q + c.weight;
        else
            s.inner.push_back(c);
    }
    return s;
}

}  // namespace

SymmetricChannel minus_fold_expansion(const SymmetricChannel& w, std::uint64_t m) {
    const Mode mode = w.mode();
    const SplitChannel sp = split_channel(w);
    const std::size_t n = sp.inner.size();
    std::vector<BscComponent> out;
    const Scalar collapsed = Scalar::one(mode) - sp.q.complement().pow(m);
    if (!collapsed.is_zero()) out.push_back({Scalar::half(mode), collapsed});

    // One term per way of distributing the interior draws: counts a[i] with
    // sum c contribute C(m,c) p^(m-c) K(c; a) prod w_i^a_i at the eps obtained
    // by star-combining each component's a_i-fold crossover power.
    std::vector<std::uint64_t> a(n, 0);
    auto emit = [&](std::uint64_t c) {
        Scalar coeff = scalar_of(binomial(m, c), mode) * sp.p.pow(m - c) *
                       scalar_of(multinomial(a), mode);
        Scalar eps = Scalar::zero(mode);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            coeff = coeff * sp.inner[i].weight.pow(a[i]);
            eps = minus_crossover(eps, minus_crossover_power(sp.inner[i].eps, a[i]));
        }
        if (!coeff.is_zero()) out.push_back({std::move(eps), std::move(coeff)});
    };
    auto enumerate = [&](auto&& self, std::size_t i, std::uint64_t rem, std::uint64_t c) -> void {
        if (i == n) {
            if (rem == 0) emit(c);
            return;
        }
        for (std::uint64_t k = 0; k <= rem; ++k) {
            a[i] = k;
            self(self, i + 1, rem - k, c);
        }
        a[i] = 0;
    };
    for (std::uint64_t c = 0; c <= m; ++c) {
        if (n == 0 && c > 0) break;
        enumerate(enumerate, 0, c, c);
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

SymmetricChannel plus_fold_expansion(const SymmetricChannel& w, std::uint64_t m) {
    const Mode mode = w.mode();
    const SplitChannel sp = split_channel(w);
    const std::size_t n = sp.inner.size();
    std::vector<BscComponent> out;
    const Scalar collapsed = Scalar::one(mode) - sp.p.complement().pow(m);
    if (!collapsed.is_zero()) out.push_back({Scalar::zero(mode), collapsed});

    // Interior draws split into singles a[i] and internally cancelling pairs
    // b[i]; the c = sum a + 2 sum b draws carry weight C(m,c) q^(m-c)
    // K(c; a+b, b) prod w_i^(a_i+2b_i) (eps_i eps_i')^b_i, spread over the
    // 2^|support(a)| branch resolutions of the single draws.
    std::vector<std::uint64_t> a(n, 0), b(n, 0);
    auto emit = [&](std::uint64_t c) {
        std::vector<std::uint64_t> parts;
        parts.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) parts.push_back(a[i] + b[i]);
        for (std::size_t i = 0; i < n; ++i) parts.push_back(b[i]);
        Scalar coeff = scalar_of(binomial(m, c), mode) * sp.q.pow(m - c) *
                       scalar_of(multinomial(parts), mode);
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] + b[i] == 0) continue;
            coeff = coeff * sp.inner[i].weight.pow(a[i] + 2 * b[i]);
            if (b[i] > 0)
                coeff = coeff * (sp.inner[i].eps * sp.inner[i].eps.complement()).pow(b[i]);
            if (a[i] > 0) support.push_back(i);
        }
        if (coeff.is_zero()) return;
        if (support.empty()) {
            out.push_back({Scalar::half(mode), std::move(coeff)});
            return;
        }
        // Resolve each supported component to its eps or its complement.
        const std::size_t ways = std::size_t{1} << support.size();
        for (std::size_t mask = 0; mask < ways; ++mask) {
            std::vector<Scalar> looks;
            Scalar eps = Scalar::half(mode);
            for (std::size_t s = 0; s < support.size(); ++s) {
                const std::size_t i = support[s];
                Scalar sigma = (mask >> s) & 1 ? sp.inner[i].eps.complement() : sp.inner[i].eps;
                for (std::uint64_t rep = 0; rep < a[i]; ++rep) looks.push_back(sigma);
                eps = plus_crossover(eps, plus_crossover_power(sigma, a[i]));
            }
            out.push_back({std::move(eps), coeff * branch_weight(looks)});
        }
    };
    auto enumerate = [&](auto&& self, std::size_t i, std::uint64_t rem, std::uint64_t c) -> void {
        if (i == n) {
            if (rem == 0) emit(c);
            return;
        }
        for (std::uint64_t ai = 0; ai <= rem; ++ai) {
            a[i] = ai;
            for (std::uint64_t bi = 0; 2 * bi <= rem - ai; ++bi) {
                b[i] = bi;
                self(self, i + 1, rem - ai - 2 * bi, c);
            }
            b[i] = 0;
        }
        a[i] = 0;
    };
    for (std::uint64_t c = 0; c <= m; ++c) {
        if (n == 0 && c > 0) break;
        enumerate(enumerate, 0, c, c);
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

BitSequence pattern_bits(IndexPattern shape, const PatternDims& d) {
    BitSequence bits;
    auto run = [&](int bit, std::uint64_t len) { bits.append_run(bit, len); };
    switch (shape) {
        case IndexPattern::zeros:
            run(0, d.l);
            break;
        case IndexPattern::zeros_ones:
            run(0, d.l);
            run(1, d.k + 1);
            break;
        case IndexPattern::zeros_one_zeros_ones:
            run(0, d.l);
            run(1, 1);
            run(0, d.i);
            run(1, d.k);
            break;
        case IndexPattern::zeros_one_zeros_one_zeros:
            run(0, d.l);
            run(1, 1);
            run(0, d.i);
            run(1, 1);
            run(0, d.t);
            break;
        case IndexPattern::zeros_one_zeros_one_zeros_one:
            run(0, d.l);
            run(1, 1);
            run(0, d.i);
            run(1, 1);
            run(0, d.t);
            run(1, 1);
            break;
    }
    return bits;
}

namespace {

// Closed form for 0^l 1^(k+1): z = 2^k pairs of looks at B(eps_l).
SymmetricChannel pattern_zeros_ones(const Scalar& eps_l, std::uint64_t k, Mode mode) {
    const std::uint64_t z = pow2_checked(k, "ones");
    const Scalar prod = eps_l * eps_l.complement();
    std::vector<BscComponent> out;
    out.push_back({Scalar::half(mode), scalar_of(binomial(2 * z, z), mode) * prod.pow(z)});
    for (std::uint64_t i = 1; i <= z; ++i) {
        const Scalar wt = scalar_of(binomial(2 * z, z - i), mode) *
                          (eps_l.pow(2 * i) + eps_l.complement().pow(2 * i)) * prod.pow(z - i);
        out.push_back({plus_crossover_power(eps_l, 2 * i), wt});
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

// Closed form for 0^l 1 0^i 1^k over the two-component channel
// q B(e) + (1-q) B(1/2) with e = (eps_l ^ diamond 2) ^ star 2^i and
// q = (eps_l^2 + (1-eps_l)^2)^(2^i).
SymmetricChannel pattern_zeros_one_zeros_ones(const Scalar& eps_l, std::uint64_t i,
                                              std::uint64_t k, Mode mode) {
    const std::uint64_t zi = pow2_checked(i, "middle zeros");
    const std::uint64_t zk = pow2_checked(k, "ones");
    const Scalar e = minus_crossover_power(plus_crossover_power(eps_l, 2), zi);
    const Scalar q = (eps_l * eps_l + eps_l.complement() * eps_l.complement()).pow(zi);
    const Scalar qbar = q.complement();
    const Scalar pair = q * q * e * e.complement();
    std::vector<BscComponent> out;
    Scalar half_wt = Scalar::zero(mode);
    for (std::uint64_t b = 0; 2 * b <= zk; ++b) {
        const std::uint64_t parts[3] = {zk - 2 * b, b, b};
        half_wt = half_wt + scalar_of(multinomial(parts), mode) * qbar.pow(zk - 2 * b) * pair.pow(b);
    }
    if (!half_wt.is_zero()) out.push_back({Scalar::half(mode), half_wt});
    for (std::uint64_t aa = 1; aa <= zk; ++aa) {
        Scalar inner = Scalar::zero(mode);
        for (std::uint64_t b = 0; 2 * b <= zk - aa; ++b) {
            const std::uint64_t s = zk - aa - 2 * b;
            const std::uint64_t parts[3] = {s, aa + b, b};
            inner = inner + scalar_of(multinomial(parts), mode) * qbar.pow(s) * pair.pow(b);
        }
        const Scalar wt = (e.pow(aa) + e.complement().pow(aa)) * q.pow(aa) * inner;
        out.push_back({plus_crossover_power(e, aa), wt});
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

// Closed form for 0^l 1 0^i 1 0^t: a B(1/2) part plus 2^t + 1 components
// built from star-products of the doubled and plain crossover of e.
SymmetricChannel pattern_zeros_one_zeros_one_zeros(const Scalar& eps_l, std::uint64_t i,
                                                   std::uint64_t t, Mode mode) {
    const std::uint64_t zi = pow2_checked(i, "middle zeros");
    const std::uint64_t zt = pow2_checked(t, "trailing zeros");
    const Scalar e = minus_crossover_power(plus_crossover_power(eps_l, 2), zi);
    const Scalar q = (eps_l * eps_l + eps_l.complement() * eps_l.complement()).pow(zi);
    const Scalar two_q_qbar = q * q.complement() + q * q.complement();
    const Scalar p = q * q * (e * e + e.complement() * e.complement()) + two_q_qbar;
    const Scalar r = two_q_qbar / p;
    const Scalar pt = p.pow(zt);
    std::vector<BscComponent> out;
    const Scalar half_wt = pt.complement();
    if (!half_wt.is_zero()) out.push_back({Scalar::half(mode), half_wt});
    const Scalar e2 = plus_crossover_power(e, 2);
    for (std::uint64_t s = 0; s <= zt; ++s) {
        const Scalar beta = minus_crossover(minus_crossover_power(e2, zt - s),
                                            minus_crossover_power(e, s));
        const Scalar wt = scalar_of(binomial(zt, s), mode) * r.complement().pow(zt - s) *
                          r.pow(s) * pt;
        out.push_back({beta, wt});
    }
    return detail::canonical_unchecked(std::move(out), mode);
}

}  // namespace

SymmetricChannel pattern_channel(IndexPattern shape, const PatternDims& d, const Scalar& eps) {
    require_probability(eps, "crossover");
    const Mode mode = eps.mode();
    Scalar e = eps;
    if (Scalar::half(mode) < e) e = e.complement();
    if (e.is_zero() || e.is_half()) return make_bsc(e);  // fixed points of every transform
    const Scalar eps_l = minus_crossover_power(e, pow2_checked(d.l, "leading zeros"));
    switch (shape) {
        case IndexPattern::zeros:
            return make_bsc(eps_l);
        case IndexPattern::zeros_ones:
            return pattern_zeros_ones(eps_l, d.k, mode);
        case IndexPattern::zeros_one_zeros_ones:
            return pattern_zeros_one_zeros_ones(eps_l, d.i, d.k, mode);
        case IndexPattern::zeros_one_zeros_one_zeros:
            return pattern_zeros_one_zeros_one_zeros(eps_l, d.i, d.t, mode);
        case IndexPattern::zeros_one_zeros_one_zeros_one: {
            const SymmetricChannel v =
                pattern_zeros_one_zeros_one_zeros(eps_l, d.i, d.t, mode);
            return transform_plus(v, v);
        }
    }
    throw UsageError("unknown index pattern");
}

Scalar bec_erasure(const BitSequence& alpha, const Scalar& q) {
    require_probability(q, "erasure probability");
    Scalar p = q;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i]) {
            p = p * p;
        } else {
            const Scalar keep = p.complement();
            p = (keep * keep).complement();
        }
    }
    return p;
}

}  // namespace polarkit
