#include "polarkit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>

#include "polarkit/prob_algebra.hpp"

namespace polarkit {

struct ChannelFactory {
    static SymmetricChannel make(std::vector<BscComponent> comps, Mode mode) {
        return SymmetricChannel(std::move(comps), mode);
    }
};

namespace {

SymmetricChannel canonical_exact(std::vector<BscComponent> comps) {
    Scalar half = Scalar::half(Mode::exact);
    for (BscComponent& c : comps)
        if (c.eps > half) c.eps = c.eps.complement();
    std::sort(comps.begin(), comps.end(),
              [](const BscComponent& a, const BscComponent& b) { return a.eps < b.eps; });
    std::vector<BscComponent> out;
    out.reserve(comps.size());
    for (BscComponent& c : comps) {
        if (c.weight.is_zero()) continue;
        if (!out.empty() && out.back().eps == c.eps)
            out.back().weight = out.back().weight + c.weight;
        else
            out.push_back(std::move(c));
    }
    return ChannelFactory::make(std::move(out), Mode::exact);
}

detail::RawList raw_of_components(const std::vector<BscComponent>& comps) {
    detail::RawList raw;
    raw.reserve(comps.size());
    for (const BscComponent& c : comps) raw.push_back({c.eps.to_double(), c.weight.to_double()});
    return raw;
}

}  // namespace

namespace detail {

RawList raw_of(const SymmetricChannel& w) {
    if (w.mode() != Mode::floating) throw UsageError("raw view requires a floating-mode channel");
    return raw_of_components(w.components());
}

void canonicalize_raw(RawList& comps) {
    for (RawComp& c : comps) {
        if (c.eps > 0.5) c.eps = 1.0 - c.eps;
        if (std::abs(c.eps - 0.5) <= kMergeTolerance)
            c.eps = 0.5;
        else if (c.eps <= kMergeTolerance)
            c.eps = 0.0;
    }
    std::erase_if(comps, [](const RawComp& c) { return c.w == 0.0; });
    std::sort(comps.begin(), comps.end(),
              [](const RawComp& a, const RawComp& b) { return a.eps < b.eps; });
    RawList out;
    out.reserve(comps.size());
    double total = 0.0;
    for (const RawComp& c : comps) {
        total += c.w;
        if (!out.empty() && c.eps - out.back().eps <= kMergeTolerance) {
            RawComp& last = out.back();
            double w = last.w + c.w;
            last.eps = (last.eps * last.w + c.eps * c.w) / w;
            last.w = w;
        } else {
            out.push_back(c);
        }
    }
    if (total > 0.0)
        for (RawComp& c : out) c.w /= total;
    comps = std::move(out);
}

SymmetricChannel materialize(const RawList& comps) {
    std::vector<BscComponent> out;
    out.reserve(comps.size());
    for (const RawComp& c : comps)
        out.push_back({Scalar::floating(c.eps), Scalar::floating(c.w)});
    return ChannelFactory::make(std::move(out), Mode::floating);
}

SymmetricChannel canonical_unchecked(std::vector<BscComponent> comps, Mode mode) {
    if (comps.empty()) throw UsageError("channel needs at least one component");
    if (mode == Mode::exact) return canonical_exact(std::move(comps));
    RawList raw = raw_of_components(comps);
    canonicalize_raw(raw);
    return materialize(raw);
}

void degrade_raw(RawList& comps, std::size_t max_components) {
    std::size_t n = comps.size();
    if (n <= max_components) return;

    std::vector<double> eps(n), wt(n);
    for (std::size_t i = 0; i < n; ++i) {
        eps[i] = comps[i].eps;
        wt[i] = comps[i].w;
    }
    std::vector<std::int64_t> prev(n), next(n);
    std::vector<std::uint32_t> ver(n, 0);
    std::vector<char> alive(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        prev[i] = static_cast<std::int64_t>(i) - 1;
        next[i] = (i + 1 < n) ? static_cast<std::int64_t>(i + 1) : -1;
    }

    auto value = [](double e, double w) { return w * (1.0 - binary_entropy(e)); };
    struct Cand {
        double loss;
        double left_eps;
        std::uint32_t li, ri, lv, rv;
    };
    auto worse = [](const Cand& a, const Cand& b) {
        if (a.loss != b.loss) return a.loss > b.loss;
        return a.left_eps > b.left_eps;
    };
    std::priority_queue<Cand, std::vector<Cand>, decltype(worse)> heap(worse);

    auto push_pair = [&](std::int64_t l, std::int64_t r) {
        if (l < 0 || r < 0) return;
        auto li = static_cast<std::size_t>(l), ri = static_cast<std::size_t>(r);
        double mw = wt[li] + wt[ri];
        double me = (eps[li] * wt[li] + eps[ri] * wt[ri]) / mw;
        double loss = value(eps[li], wt[li]) + value(eps[ri], wt[ri]) - value(me, mw);
        heap.push({loss, eps[li], static_cast<std::uint32_t>(li), static_cast<std::uint32_t>(ri),
                   ver[li], ver[ri]});
    };
    for (std::size_t i = 0; i + 1 < n; ++i) push_pair(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1));

    std::size_t count = n;
    while (count > max_components) {
        Cand c = heap.top();
        heap.pop();
        std::size_t li = c.li, ri = c.ri;
        if (!alive[li] || !alive[ri] || ver[li] != c.lv || ver[ri] != c.rv) continue;
        double mw = wt[li] + wt[ri];
        eps[li] = (eps[li] * wt[li] + eps[ri] * wt[ri]) / mw;
        wt[li] = mw;
        ++ver[li];
        alive[ri] = 0;
        next[li] = next[ri];
        if (next[ri] >= 0) prev[static_cast<std::size_t>(next[ri])] = static_cast<std::int64_t>(li);
        --count;
        push_pair(prev[li], static_cast<std::int64_t>(li));
        push_pair(static_cast<std::int64_t>(li), next[li]);
    }

    RawList out;
    out.reserve(count);
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) out.push_back({eps[i], wt[i]});
    canonicalize_raw(out);
    comps = std::move(out);
}

}  // namespace detail

namespace {

SymmetricChannel degrade_exact(const SymmetricChannel& w, std::size_t max_components) {
    const std::vector<BscComponent>& in = w.components();
    std::size_t n = in.size();
    std::vector<Scalar> eps(n), wt(n);
    std::vector<double> de(n), dw(n);
    for (std::size_t i = 0; i < n; ++i) {
        eps[i] = in[i].eps;
        wt[i] = in[i].weight;
        de[i] = eps[i].to_double();
        dw[i] = wt[i].to_double();
    }
    std::vector<std::int64_t> prev(n), next(n);
    std::vector<std::uint32_t> ver(n, 0);
    std::vector<char> alive(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        prev[i] = static_cast<std::int64_t>(i) - 1;
        next[i] = (i + 1 < n) ? static_cast<std::int64_t>(i + 1) : -1;
    }

    auto value = [](double e, double v) { return v * (1.0 - binary_entropy(e)); };
    struct Cand {
        double loss;
        double left_eps;
        std::uint32_t li, ri, lv, rv;
    };
    auto worse = [](const Cand& a, const Cand& b) {
        if (a.loss != b.loss) return a.loss > b.loss;
        return a.left_eps > b.left_eps;
    };
    std::priority_queue<Cand, std::vector<Cand>, decltype(worse)> heap(worse);
    auto push_pair = [&](std::int64_t l, std::int64_t r) {
        if (l < 0 || r < 0) return;
        auto li = static_cast<std::size_t>(l), ri = static_cast<std::size_t>(r);
        double mw = dw[li] + dw[ri];
        double me = (de[li] * dw[li] + de[ri] * dw[ri]) / mw;
        double loss = value(de[li], dw[li]) + value(de[ri], dw[ri]) - value(me, mw);
        heap.push({loss, de[li], static_cast<std::uint32_t>(li), static_cast<std::uint32_t>(ri),
                   ver[li], ver[ri]});
    };
    for (std::size_t i = 0; i + 1 < n; ++i) push_pair(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + 1));

    std::size_t count = n;
    while (count > max_components) {
        Cand c = heap.top();
        heap.pop();
        std::size_t li = c.li, ri = c.ri;
        if (!alive[li] || !alive[ri] || ver[li] != c.lv || ver[ri] != c.rv) continue;
        Scalar mw = wt[li] + wt[ri];
        eps[li] = (eps[li] * wt[li] + eps[ri] * wt[ri]) / mw;
        wt[li] = mw;
        de[li] = eps[li].to_double();
        dw[li] = wt[li].to_double();
        ++ver[li];
        alive[ri] = 0;
        next[li] = next[ri];
        if (next[ri] >= 0) prev[static_cast<std::size_t>(next[ri])] = static_cast<std::int64_t>(li);
        --count;
        push_pair(prev[li], static_cast<std::int64_t>(li));
        push_pair(static_cast<std::int64_t>(li), next[li]);
    }

    std::vector<BscComponent> out;
    out.reserve(count);
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) out.push_back({eps[i], wt[i]});
    return canonical_exact(std::move(out));
}

void validate_components(const std::vector<BscComponent>& comps, Mode mode) {
    if (comps.empty()) throw UsageError("channel needs at least one component");
    Scalar sum = Scalar::zero(mode);
    for (const BscComponent& c : comps) {
        if (c.eps.mode() != mode || c.weight.mode() != mode)
            throw UsageError("component numeric mode differs from the channel mode");
        require_probability(c.eps, "component eps");
        if (c.weight < Scalar::zero(mode)) throw UsageError("component weight must be nonnegative");
        sum = sum + c.weight;
    }
    if (mode == Mode::exact) {
        if (!sum.is_one()) throw UsageError("component weights must sum to 1, got " + sum.str());
    } else if (std::abs(sum.to_double() - 1.0) > kSumTolerance) {
        throw UsageError("component weights must sum to 1, got " + sum.str());
    }
}

}  // namespace

SymmetricChannel canonicalize(std::vector<BscComponent> comps, Mode mode) {
    validate_components(comps, mode);
    return detail::canonical_unchecked(std::move(comps), mode);
}

SymmetricChannel make_bsc(const Scalar& eps) {
    require_probability(eps, "crossover probability");
    return detail::canonical_unchecked({{eps, Scalar::one(eps.mode())}}, eps.mode());
}

SymmetricChannel make_bec(const Scalar& erasure) {
    require_probability(erasure, "erasure probability");
    Mode m = erasure.mode();
    return detail::canonical_unchecked(
        {{Scalar::zero(m), erasure.complement()}, {Scalar::half(m), erasure}}, m);
}

SymmetricChannel mix(std::span<const std::pair<Scalar, SymmetricChannel>> parts) {
    if (parts.empty()) throw UsageError("mixture needs at least one part");
    Mode m = parts.front().second.mode();
    Scalar sum = Scalar::zero(m);
    std::vector<BscComponent> comps;
    for (const auto& [weight, chan] : parts) {
        if (chan.mode() != m || weight.mode() != m)
            throw UsageError("numeric mode mismatch between mixture parts");
        require_probability(weight, "mixture weight");
        sum = sum + weight;
        for (const BscComponent& c : chan.components())
            comps.push_back({c.eps, weight * c.weight});
    }
    if (m == Mode::exact) {
        if (!sum.is_one()) throw UsageError("mixture weights must sum to 1, got " + sum.str());
    } else if (std::abs(sum.to_double() - 1.0) > kSumTolerance) {
        throw UsageError("mixture weights must sum to 1, got " + sum.str());
    }
    return detail::canonical_unchecked(std::move(comps), m);
}

LikelihoodRatioProfile lrp(const SymmetricChannel& w) {
    LikelihoodRatioProfile p;
    p.mode = w.mode();
    const auto& comps = w.components();
    Scalar two = Scalar::one(p.mode) + Scalar::one(p.mode);
    // Lower halves in component order, the 1/2 class, then the mirrored upper
    // halves in reverse order: yields sorted points with no further work.
    for (const BscComponent& c : comps)
        if (!c.eps.is_half()) p.points.emplace_back(c.eps, c.weight / two);
    auto half_at = std::find_if(comps.begin(), comps.end(),
                                [](const BscComponent& c) { return c.eps.is_half(); });
    if (half_at != comps.end()) p.points.emplace_back(half_at->eps, half_at->weight);
    for (auto it = comps.rbegin(); it != comps.rend(); ++it)
        if (!it->eps.is_half()) p.points.emplace_back(it->eps.complement(), it->weight / two);
    return p;
}

namespace {

void group_profile_points(LikelihoodRatioProfile& p) {
    std::sort(p.points.begin(), p.points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Scalar, Scalar>> out;
    out.reserve(p.points.size());
    if (p.mode == Mode::exact) {
        for (auto& pt : p.points) {
            if (!out.empty() && out.back().first == pt.first)
                out.back().second = out.back().second + pt.second;
            else
                out.push_back(std::move(pt));
        }
    } else {
        for (auto& pt : p.points) {
            double e = pt.first.to_double(), m = pt.second.to_double();
            if (!out.empty() && e - out.back().first.to_double() <= kMergeTolerance) {
                double pm = out.back().second.to_double();
                double w = pm + m;
                out.back().first =
                    Scalar::floating((out.back().first.to_double() * pm + e * m) / w);
                out.back().second = Scalar::floating(w);
            } else {
                out.push_back(std::move(pt));
            }
        }
    }
    p.points = std::move(out);
}

}  // namespace

LikelihoodRatioProfile lrp_from_table(const GeneralChannel& t) {
    Mode m = t.mode;
    Scalar s0 = Scalar::zero(m), s1 = Scalar::zero(m);
    for (const Scalar& v : t.p0) s0 = s0 + v;
    for (const Scalar& v : t.p1) s1 = s1 + v;
    auto row_ok = [&](const Scalar& s) {
        return m == Mode::exact ? s.is_one() : std::abs(s.to_double() - 1.0) <= kSumTolerance;
    };
    if (t.p0.size() != t.p1.size()) throw UsageError("table rows differ in length");
    if (!row_ok(s0) || !row_ok(s1))
        throw UsageError("table rows must each sum to 1 (got " + s0.str() + " and " + s1.str() + ")");

    LikelihoodRatioProfile p;
    p.mode = m;
    for (std::size_t y = 0; y < t.size(); ++y) {
        Scalar tot = t.p0[y] + t.p1[y];
        if (tot.is_zero()) continue;
        Scalar eps = t.p1[y] / tot;
        if (m == Mode::floating) {
            double e = eps.to_double();
            if (std::abs(e - 0.5) <= kMergeTolerance)
                eps = Scalar::floating(0.5);
            else if (e <= kMergeTolerance)
                eps = Scalar::floating(0.0);
            else if (e >= 1.0 - kMergeTolerance)
                eps = Scalar::floating(1.0);
        }
        p.points.emplace_back(eps, tot / (Scalar::one(m) + Scalar::one(m)));
    }
    group_profile_points(p);
    return p;
}

bool is_symmetric(const LikelihoodRatioProfile& p) {
    auto n = static_cast<std::int64_t>(p.points.size());
    for (std::int64_t i = 0, j = n - 1; i <= j; ++i, --j) {
        const auto& lo = p.points[static_cast<std::size_t>(i)];
        const auto& hi = p.points[static_cast<std::size_t>(j)];
        if (!approx_equal(lo.first, hi.first.complement())) return false;
        if (!approx_equal(lo.second, hi.second)) return false;
    }
    return true;
}

SymmetricChannel channel_from_profile(const LikelihoodRatioProfile& p) {
    if (p.points.empty()) throw UsageError("empty likelihood profile");
    if (!is_symmetric(p))
        throw UsageError(
            "channel is not symmetric: the profile mass at each eps must equal the mass at 1-eps");
    auto n = static_cast<std::int64_t>(p.points.size());
    std::vector<BscComponent> comps;
    for (std::int64_t i = 0, j = n - 1; i <= j; ++i, --j) {
        const auto& lo = p.points[static_cast<std::size_t>(i)];
        if (i == j) {
            comps.push_back({Scalar::half(p.mode), lo.second});
        } else {
            comps.push_back({lo.first, lo.second + p.points[static_cast<std::size_t>(j)].second});
        }
    }
    return detail::canonical_unchecked(std::move(comps), p.mode);
}

bool equivalent(const SymmetricChannel& a, const SymmetricChannel& b) {
    if (a.mode() != b.mode())
        throw UsageError("numeric mode mismatch: channels compared across modes");
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const BscComponent& x = a.components()[i];
        const BscComponent& y = b.components()[i];
        if (!approx_equal(x.eps, y.eps) || !approx_equal(x.weight, y.weight)) return false;
    }
    return true;
}

bool equivalent(const LikelihoodRatioProfile& a, const LikelihoodRatioProfile& b) {
    if (a.mode != b.mode)
        throw UsageError("numeric mode mismatch: profiles compared across modes");
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        if (!approx_equal(a.points[i].first, b.points[i].first)) return false;
        if (!approx_equal(a.points[i].second, b.points[i].second)) return false;
    }
    return true;
}

double capacity(const SymmetricChannel& w) {
    double c = 0.0;
    for (const BscComponent& comp : w.components())
        c += comp.weight.to_double() * (1.0 - binary_entropy(comp.eps));
    return c;
}

double capacity(const LikelihoodRatioProfile& p) {
    double c = 1.0;
    for (const auto& [eps, mass] : p.points) c -= mass.to_double() * binary_entropy(eps);
    return c;
}

Scalar p_error(const SymmetricChannel& w) {
    Scalar s = Scalar::zero(w.mode());
    for (const BscComponent& comp : w.components()) s = s + comp.weight * comp.eps;
    return s;
}

Scalar p_error(const LikelihoodRatioProfile& p) {
    Scalar s = Scalar::zero(p.mode);
    for (const auto& [eps, mass] : p.points) s = s + mass * std::min(eps, eps.complement());
    return s;
}

double bhattacharyya(const SymmetricChannel& w) {
    double z = 0.0;
    for (const BscComponent& comp : w.components()) {
        double e = comp.eps.to_double();
        z += comp.weight.to_double() * 2.0 * std::sqrt(e * (1.0 - e));
    }
    return z;
}

double bhattacharyya(const LikelihoodRatioProfile& p) {
    double z = 0.0;
    for (const auto& [eps, mass] : p.points) {
        double e = eps.to_double();
        z += mass.to_double() * 2.0 * std::sqrt(e * (1.0 - e));
    }
    return z;
}

SymmetricChannel degrade_merge(const SymmetricChannel& w, std::size_t max_components) {
    if (max_components == 0) throw UsageError("component cap must be positive");
    if (w.size() <= max_components) return w;
    if (w.mode() == Mode::floating) {
        detail::RawList raw = detail::raw_of(w);
        detail::degrade_raw(raw, max_components);
        return detail::materialize(raw);
    }
    return degrade_exact(w, max_components);
}

}  // namespace polarkit
