#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "chaincode/lincode.hpp"

namespace testing {

using namespace chaincode;

inline Ring z4() { return Ring::create(2, 2, 1); }
inline Ring gr42() { return Ring::create(2, 2, 2, std::vector<std::int64_t>{1, 1, 1}); }
inline Ring f4() { return Ring::create(2, 1, 2, std::vector<std::int64_t>{1, 1, 1}); }

inline RingElem el(const Ring& r, std::initializer_list<std::int64_t> coords) {
    return r.element(std::vector<std::int64_t>(coords));
}

inline Poly poly(const Ring& r, std::initializer_list<RingElem> coeffs) { return Poly(r, Vec(coeffs)); }

inline Poly poly_int(const Ring& r, std::initializer_list<std::int64_t> coeffs) {
    Vec out;
    for (auto c : coeffs) out.push_back(r.from_int(c));
    return Poly(r, out);
}

inline Vec vec_int(const Ring& r, std::initializer_list<std::int64_t> xs) {
    Vec out;
    for (auto x : xs) out.push_back(r.from_int(x));
    return out;
}

// Every vector of S^n, decoded from a mixed-radix counter.
inline std::vector<Vec> all_vectors(const Ring& r, std::size_t n) {
    const auto elems = r.elements();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= elems.size();
    std::vector<Vec> out;
    out.reserve(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        Vec v;
        std::uint64_t x = k;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(elems[x % elems.size()]);
            x /= elems.size();
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Additive closure of {γ·g : γ ∈ S, g ∈ gens}, independent of the standard form.
inline std::uint64_t span_size(const Ring& r, std::size_t n, const std::vector<Vec>& gens) {
    std::vector<Vec> seen{zero_vec(r, n)};
    auto key = [&](const Vec& v) {
        std::uint64_t k = 0;
        for (std::size_t i = n; i-- > 0;) k = k * r.size() + v[i].index();
        return k;
    };
    std::vector<bool> mark;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= r.size();
    mark.assign(total, false);
    mark[0] = true;
    std::vector<Vec> moves;
    for (const auto& g : gens)
        for (const auto& c : r.elements()) moves.push_back(c * g);
    for (std::size_t head = 0; head < seen.size(); ++head)
        for (const auto& mv : moves) {
            Vec w = seen[head] + mv;
            const auto k = key(w);
            if (!mark[k]) {
                mark[k] = true;
                seen.push_back(std::move(w));
            }
        }
    return seen.size();
}

}  // namespace testing
