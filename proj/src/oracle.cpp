#include "polarkit/oracle.hpp"

#include <cmath>
#include <string>

#include "polarkit/errors.hpp"

namespace polarkit::oracle {

namespace {

void check_budget(std::size_t projected, std::size_t budget, const std::string& where) {
    if (projected > budget)
        throw ResourceError("table budget exceeded " + where + ": " + std::to_string(projected) +
                            " outputs > " + std::to_string(budget));
}

Scalar half_of(Mode mode) {
    return Scalar::half(mode);
}

}  // namespace

GeneralChannel table_of(const SymmetricChannel& w) {
    const Mode mode = w.mode();
    GeneralChannel t;
    t.mode = mode;
    t.p0.reserve(2 * w.size());
    t.p1.reserve(2 * w.size());
    const Scalar half = half_of(mode);
    for (const auto& c : w.components()) {
        if (c.eps.is_half()) {
            const Scalar v = c.weight * half;
            t.p0.push_back(v);
            t.p1.push_back(v);
            t.p0.push_back(v);
            t.p1.push_back(v);
            continue;
        }
        const Scalar hit = c.weight * c.eps;
        const Scalar miss = c.weight * c.eps.complement();
        t.p0.push_back(miss);
        t.p1.push_back(hit);
        t.p0.push_back(hit);
        t.p1.push_back(miss);
    }
    return t;
}

GeneralChannel minus_table(const GeneralChannel& a, const GeneralChannel& b, std::size_t budget) {
    require_same_mode(a.mode, b.mode);
    check_budget(a.size() * b.size(), budget, "in a pair step");
    GeneralChannel t;
    t.mode = a.mode;
    t.p0.reserve(a.size() * b.size());
    t.p1.reserve(a.size() * b.size());
    const Scalar half = half_of(a.mode);
    for (std::size_t y0 = 0; y0 < a.size(); ++y0) {
        for (std::size_t y1 = 0; y1 < b.size(); ++y1) {
            t.p0.push_back((a.p0[y0] * b.p0[y1] + a.p1[y0] * b.p1[y1]) * half);
            t.p1.push_back((a.p1[y0] * b.p0[y1] + a.p0[y0] * b.p1[y1]) * half);
        }
    }
    return t;
}

GeneralChannel plus_table(const GeneralChannel& a, const GeneralChannel& b, std::size_t budget) {
    require_same_mode(a.mode, b.mode);
    check_budget(2 * a.size() * b.size(), budget, "in a pair step");
    GeneralChannel t;
    t.mode = a.mode;
    t.p0.reserve(2 * a.size() * b.size());
    t.p1.reserve(2 * a.size() * b.size());
    const Scalar half = half_of(a.mode);
    for (std::size_t y0 = 0; y0 < a.size(); ++y0) {
        for (std::size_t y1 = 0; y1 < b.size(); ++y1) {
            for (int u0 = 0; u0 < 2; ++u0) {
                const Scalar& seen = u0 ? a.p1[y0] : a.p0[y0];
                const Scalar& flipped = u0 ? a.p0[y0] : a.p1[y0];
                t.p0.push_back(seen * b.p0[y1] * half);
                t.p1.push_back(flipped * b.p1[y1] * half);
            }
        }
    }
    return t;
}

GeneralChannel sequence_table(const BitSequence& alpha, const SymmetricChannel& w,
                              std::size_t budget) {
    GeneralChannel cur = table_of(w);
    for (std::size_t step = 0; step < alpha.size(); ++step) {
        const std::size_t n = cur.size();
        const std::size_t projected = alpha[step] ? 2 * n * n : n * n;
        if (projected > budget)
            throw ResourceError("table budget exceeded at prefix " + alpha.prefix(step + 1).str() +
                                ": " + std::to_string(projected) + " outputs > " +
                                std::to_string(budget));
        cur = alpha[step] ? plus_table(cur, cur, budget) : minus_table(cur, cur, budget);
    }
    return cur;
}

double mutual_information(const GeneralChannel& t) {
    double info = 0.0;
    for (std::size_t y = 0; y < t.size(); ++y) {
        const double p0 = t.p0[y].to_double();
        const double p1 = t.p1[y].to_double();
        const double avg = 0.5 * (p0 + p1);
        if (p0 > 0.0) info += 0.5 * p0 * std::log2(p0 / avg);
        if (p1 > 0.0) info += 0.5 * p1 * std::log2(p1 / avg);
    }
    return info;
}

}  // namespace polarkit::oracle
