#include "polarkit/polar.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "polarkit/arikan.hpp"
#include "polarkit/errors.hpp"
#include "polarkit/prob_algebra.hpp"

namespace polarkit {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t reverse_bits(std::uint64_t v, unsigned k) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
        r = (r << 1) | (v & 1);
        v >>= 1;
    }
    return r;
}

BitSequence bits_of_index(std::uint64_t index, unsigned k) {
    BitSequence b;
    for (unsigned i = 0; i < k; ++i)
        b.push_back(static_cast<std::uint8_t>((index >> (k - 1 - i)) & 1));
    return b;
}

}  // namespace

std::uint64_t index_of_bits(const BitSequence& alpha) {
    if (alpha.size() > 63) throw UsageError("bit sequence too long for a 64-bit index");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) v = (v << 1) | alpha[i];
    return v;
}

std::vector<BitSequence> contributing_indices(const BitSequence& alpha) {
    const unsigned k = static_cast<unsigned>(alpha.size());
    if (k > kGeneratorOrderLimit) throw UsageError("sequence length beyond the supported order");
    const std::uint64_t a = index_of_bits(alpha);
    const std::uint64_t n = std::uint64_t{1} << k;
    std::vector<BitSequence> out;
    for (std::uint64_t d = 0; d < n; ++d)
        if ((a & reverse_bits(d, k)) == a) out.push_back(bits_of_index(d, k));
    return out;
}

GeneratorMatrix generator_matrix(unsigned k) {
    if (k < 1 || k > kGeneratorOrderLimit)
        throw UsageError("matrix order must be between 1 and " +
                         std::to_string(kGeneratorOrderLimit));
    const std::uint64_t n = std::uint64_t{1} << k;
    GeneratorMatrix g;
    g.k = k;
    g.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::uint64_t d = 0; d < n; ++d) {
        const std::uint64_t rev = reverse_bits(d, k);
        for (std::uint64_t a = 0; a < n; ++a)
            g.rows[d][a] = (a & rev) == a ? 1 : 0;
    }
    return g;
}

std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& u, unsigned k) {
    const GeneratorMatrix g = generator_matrix(k);
    const std::uint64_t n = std::uint64_t{1} << k;
    if (u.size() != n)
        throw UsageError("input length " + std::to_string(u.size()) + " does not match 2^" +
                         std::to_string(k));
    for (std::uint8_t b : u)
        if (b > 1) throw UsageError("input entries must be 0 or 1");
    std::vector<std::uint8_t> x(n, 0);
    for (std::uint64_t d = 0; d < n; ++d) {
        if (!u[d]) continue;
        for (std::uint64_t a = 0; a < n; ++a) x[a] ^= g.rows[d][a];
    }
    return x;
}

namespace {

std::uint64_t component_count(const SymmetricChannel& ch) {
    return ch.size();
}

IndexRecord make_record(const SymmetricChannel& ch, BitSequence alpha, bool quantized) {
    IndexRecord rec;
    rec.index = index_of_bits(alpha);
    rec.alpha = std::move(alpha);
    rec.capacity = capacity(ch);
    rec.p_error = p_error(ch);
    rec.bhattacharyya = bhattacharyya(ch);
    rec.components = component_count(ch);
    rec.quantized = quantized;
    return rec;
}

void construct_exact(const SymmetricChannel& cur, BitSequence& path, unsigned k,
                     const ConstructOptions& opts, bool quantized,
                     std::vector<IndexRecord>& out) {
    if (path.size() == k) {
        out.push_back(make_record(cur, path, quantized));
        return;
    }
    for (std::uint8_t bit = 0; bit < 2; ++bit) {
        const std::size_t n = cur.size();
        const std::size_t projected = n * (n + 1) / 2 * (bit ? 2 : 1);
        path.push_back(bit);
        if (projected > opts.budget)
            throw ResourceError("component budget exceeded at index prefix " + path.str() + ": " +
                                std::to_string(projected) + " > " + std::to_string(opts.budget));
        SymmetricChannel child = bit ? transform_plus(cur, cur) : transform_minus(cur, cur);
        bool q = quantized;
        if (opts.cap && child.size() > *opts.cap) {
            child = degrade_merge(child, *opts.cap);
            q = true;
        }
        construct_exact(child, path, k, opts, q, out);
        path = path.prefix(path.size() - 1);
    }
}

void construct_raw(const detail::RawList& cur, BitSequence& path, unsigned k,
                   const ConstructOptions& opts, bool quantized, std::vector<IndexRecord>& out) {
    if (path.size() == k) {
        out.push_back(make_record(detail::materialize(cur), path, quantized));
        return;
    }
    for (std::uint8_t bit = 0; bit < 2; ++bit) {
        const std::size_t n = cur.size();
        const std::size_t projected = n * (n + 1) / 2 * (bit ? 2 : 1);
        path.push_back(bit);
        if (projected > opts.budget)
            throw ResourceError("component budget exceeded at index prefix " + path.str() + ": " +
                                std::to_string(projected) + " > " + std::to_string(opts.budget));
        detail::RawList child = bit ? detail::raw_plus_pairs(cur, cur, true)
                                    : detail::raw_minus_pairs(cur, cur, true);
        detail::canonicalize_raw(child);
        bool q = quantized;
        if (opts.cap && child.size() > *opts.cap) {
            detail::degrade_raw(child, *opts.cap);
            q = true;
        }
        construct_raw(child, path, k, opts, q, out);
        path = path.prefix(path.size() - 1);
    }
}

}  // namespace

ConstructionResult construct(const SymmetricChannel& w, unsigned k, const ConstructOptions& opts) {
    if (k < 1 || k > kConstructOrderLimit)
        throw UsageError("tree depth must be between 1 and " +
                         std::to_string(kConstructOrderLimit));
    if (opts.cap && *opts.cap == 0) throw UsageError("component cap must be positive");
    ConstructionResult r;
    r.k = k;
    r.records.reserve(std::size_t{1} << k);
    BitSequence path;
    if (w.mode() == Mode::floating)
        construct_raw(detail::raw_of(w), path, k, opts, false, r.records);
    else
        construct_exact(w, path, k, opts, false, r.records);
    return r;
}

std::vector<bool> select_frozen(const ConstructionResult& result, std::size_t info_count,
                                ReliabilityMetric metric) {
    const std::size_t n = result.records.size();
    if (info_count > n) throw UsageError("information count exceeds the number of indices");
    std::vector<const IndexRecord*> order;
    order.reserve(n);
    for (const auto& rec : result.records) order.push_back(&rec);
    std::stable_sort(order.begin(), order.end(),
                     [&](const IndexRecord* a, const IndexRecord* b) {
                         if (metric == ReliabilityMetric::bhattacharyya) {
                             if (a->bhattacharyya != b->bhattacharyya)
                                 return a->bhattacharyya < b->bhattacharyya;
                         } else {
                             if (a->p_error != b->p_error) return a->p_error < b->p_error;
                         }
                         return a->index > b->index;  // ties freeze the smaller index
                     });
    std::vector<bool> frozen(n, true);
    for (std::size_t i = 0; i < info_count; ++i) frozen[order[i]->index] = false;
    return frozen;
}

mpz_class collision_factor(const BitSequence& alpha) {
    if (alpha.size() > 16)
        throw ResourceError("collision factor grows doubly exponentially; sequences longer than "
                            "16 bits are not supported");
    const std::size_t n = alpha.size();
    bool uniform = true;
    for (std::size_t i = 1; i < n && uniform; ++i) uniform = alpha[i] == alpha[0];
    if (uniform) {
        const unsigned long block = 1UL << n;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), block);
        mpz_class shifted;
        mpz_mul_2exp(shifted.get_mpz_t(), f.get_mpz_t(), block);
        return shifted;
    }
    std::size_t run = 1;
    while (run < n && alpha[n - 1 - run] == alpha[n - 1]) ++run;
    const unsigned long block = 1UL << run;
    const mpz_class inner = collision_factor(alpha.prefix(n - run));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), block);
    mpz_class powed;
    mpz_pow_ui(powed.get_mpz_t(), inner.get_mpz_t(), block);
    return f * powed;
}

SupportBoundReport support_bound_check(const SymmetricChannel& w, unsigned depth) {
    if (w.mode() != Mode::exact)
        throw UsageError("component-count bounds are only meaningful in exact mode");
    if (depth < 1 || depth > 2) throw UsageError("bounds are known for depths 1 and 2 only");
    std::uint64_t n = 0;
    bool has_half = false;
    for (const auto& c : w.components()) {
        if (c.eps.is_half())
            has_half = true;
        else if (c.eps.is_zero())
            throw UsageError("channel must not contain a perfect component for this check");
        else
            ++n;
    }
    if (!has_half) throw UsageError("channel must contain an eps = 1/2 component for this check");

    const std::uint64_t s = n * n + n;  // n(n+1), even
    auto bound_for = [&](const std::string& key) -> std::uint64_t {
        if (key == "0") return s / 2 + 1;
        if (key == "1") return s + 1;
        if (key == "00") return binomial(n + 3, 4).get_ui() + 1;
        if (key == "01") return s * (s + 2) / 4 + 1;
        if (key == "10") return s * (s + 1) / 2 + 1;
        return s * (s + 4) / 3 + 1;  // "11"
    };

    SupportBoundReport report;
    std::vector<std::string> keys = {"0", "1"};
    if (depth == 2) keys.insert(keys.end(), {"00", "01", "10", "11"});
    for (const auto& key : keys) {
        const BitSequence alpha = BitSequence::parse(key);
        const SymmetricChannel ch = transform_sequence(alpha, w);
        SupportBound entry;
        entry.alpha = alpha;
        entry.observed = ch.size();
        entry.bound = bound_for(key);
        entry.ok = entry.observed <= entry.bound;
        report.all_ok = report.all_ok && entry.ok;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<double> bhattacharyya_bound_tree(double z0, unsigned k) {
    if (z0 < 0.0 || z0 > 1.0) throw UsageError("initial parameter must lie in [0,1]");
    if (k > kConstructOrderLimit) throw UsageError("tree depth beyond the supported order");
    std::vector<double> level{z0};
    for (unsigned step = 0; step < k; ++step) {
        std::vector<double> next(level.size() * 2);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const double z = level[i];
            next[2 * i] = 2.0 * z - z * z;
            next[2 * i + 1] = z * z;
        }
        level = std::move(next);
    }
    return level;
}

void write_csv(std::ostream& os, const ConstructionResult& r) {
    os << "index,alpha,capacity,p_error,bhattacharyya,components,frozen\n";
    for (std::size_t i = 0; i < r.records.size(); ++i) {
        const IndexRecord& rec = r.records[i];
        const bool frozen = rec.index < r.frozen.size() && r.frozen[rec.index];
        os << rec.index << ',' << rec.alpha.str() << ',' << format_double(rec.capacity) << ','
           << rec.p_error.str() << ',' << format_double(rec.bhattacharyya) << ','
           << rec.components << ',' << (frozen ? 1 : 0) << '\n';
    }
}

std::string mask_string(const std::vector<bool>& frozen) {
    std::string s;
    s.reserve(frozen.size());
    for (bool b : frozen) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace polarkit
