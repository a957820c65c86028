#include "chaincode/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace chaincode {

using Id = TabulatedRing::Id;
using Word = std::vector<Id>;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("CHAINCODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

namespace {

void check_budget(std::uint64_t need, std::uint64_t budget, const std::string& what) {
    if (need > budget)
        raise(ErrorKind::BudgetExceeded,
              what + " needs " + std::to_string(need) + " vectors, budget is " + std::to_string(budget));
}

// |S|^n, or an Overflow/BudgetExceeded error well before it stops fitting.
std::uint64_t space_size(std::uint64_t base, std::size_t n, std::uint64_t budget, const std::string& what) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > budget / base + 1) check_budget(budget + 1, budget, what);
        total *= base;
    }
    check_budget(total, budget, what);
    return total;
}

// Mixed-radix counter over `digits` per coordinate.
bool advance(Word& w, const std::vector<Id>& digits, std::vector<std::size_t>& pos) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (++pos[i] < digits.size()) {
            w[i] = digits[pos[i]];
            return true;
        }
        pos[i] = 0;
        w[i] = digits[0];
    }
    return false;
}

Id dot_ids(const TabulatedRing& t, const Word& x, const Word& y) {
    Id acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc = t.add(acc, t.mul(x[i], y[i]));
    return acc;
}

// Membership for packed keys: a bitmap when |S|^n is small enough, a hash set otherwise.
class KeySet {
public:
    KeySet(const TabulatedRing& t, std::size_t n) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < n && total <= kDense; ++i) total *= t.size();
        if (total <= kDense) dense_.assign(total, false);
    }
    bool insert(std::uint64_t k) {
        if (!dense_.empty()) {
            if (dense_[k]) return false;
            dense_[k] = true;
            return true;
        }
        return sparse_.insert(k).second;
    }
    bool contains(std::uint64_t k) const { return dense_.empty() ? sparse_.count(k) > 0 : dense_[k]; }
    /// The members in ascending order; `keys` holds them in insertion order.
    std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> keys) const {
        if (dense_.empty() || keys.size() < dense_.size() / 64) {
            std::sort(keys.begin(), keys.end());
            return keys;
        }
        std::size_t at = 0;
        for (std::uint64_t k = 0; k < dense_.size(); ++k)
            if (dense_[k]) keys[at++] = k;
        return keys;
    }

private:
    static constexpr std::uint64_t kDense = std::uint64_t{1} << 28;
    std::vector<bool> dense_;
    std::unordered_set<std::uint64_t> sparse_;
};

std::vector<Id> all_ids(const TabulatedRing& t) {
    std::vector<Id> out(t.size());
    for (Id i = 0; i < t.size(); ++i) out[i] = i;
    return out;
}

}  // namespace

std::vector<Id> subring_ids(const TabulatedRing& t, const GaloisContext& ctx) {
    std::vector<Id> out;
    for (Id x = 0; x < t.size(); ++x) {
        Id y = x;
        for (int k = 0; k < ctx.r; ++k) y = t.frobenius(y);
        if (y == x) out.push_back(x);
    }
    return out;
}

Id trace_id(const TabulatedRing& t, const GaloisContext& ctx, Id x) {
    Id acc = 0;
    for (int i = 0; i < ctx.d; ++i) {
        acc = t.add(acc, x);
        for (int k = 0; k < ctx.r; ++k) x = t.frobenius(x);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// TabulatedRing

TabulatedRing::TabulatedRing(const Ring& ring) : ring_(ring) {
    if (ring.size() > 4096) raise(ErrorKind::BudgetExceeded, ring.describe() + " is too large to tabulate");
    size_ = static_cast<Id>(ring.size());
    if ((size_ & (size_ - 1)) == 0)
        while ((Id{1} << shift_) < size_) ++shift_;
    elems_ = ring.elements();
    add_.resize(std::size_t{size_} * size_);
    mul_.resize(std::size_t{size_} * size_);
    neg_.resize(size_);
    frob_.resize(size_);
    for (Id x = 0; x < size_; ++x) {
        neg_[x] = id(-elems_[x]);
        frob_[x] = id(chaincode::frobenius(elems_[x], 1));
        for (Id y = 0; y < size_; ++y) {
            add_[x * size_ + y] = id(elems_[x] + elems_[y]);
            mul_[x * size_ + y] = id(elems_[x] * elems_[y]);
        }
    }
}

Id TabulatedRing::id(const RingElem& x) const {
    if (!(x.ring() == ring_)) raise(ErrorKind::RingMismatch, "element of " + x.ring().describe());
    return static_cast<Id>(x.index());
}

std::uint64_t TabulatedRing::pack(const Word& v) const {
    std::uint64_t key = 0;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (key > (UINT64_MAX - v[i]) / size_) raise(ErrorKind::Overflow, "codeword key exceeds 64 bits");
        key = key * size_ + v[i];
    }
    return key;
}

Word TabulatedRing::unpack(std::uint64_t key, std::size_t n) const {
    Word out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<Id>(key % size_);
        key /= size_;
    }
    return out;
}

std::uint64_t TabulatedRing::add_keys(std::uint64_t x, std::uint64_t y, std::size_t n) const {
    std::uint64_t out = 0, scale = 1;
    if (shift_ > 0) {
        const std::uint64_t mask = size_ - 1;
        for (std::size_t i = 0; i < n; ++i) {
            const int at = static_cast<int>(i) * shift_;
            out |= std::uint64_t{add_[((x >> at) & mask) * size_ + ((y >> at) & mask)]} << at;
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out += scale * add_[(x % size_) * size_ + y % size_];
        x /= size_;
        y /= size_;
        scale *= size_;
    }
    return out;
}

Word TabulatedRing::ids(const Vec& v) const {
    Word out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(id(x));
    return out;
}

Vec TabulatedRing::vec(const Word& v) const {
    Vec out;
    out.reserve(v.size());
    for (Id x : v) out.push_back(elems_[x]);
    return out;
}

// ---------------------------------------------------------------------------
// Codeword sets

bool CodewordSet::contains(std::uint64_t key) const { return std::binary_search(keys.begin(), keys.end(), key); }

CodewordSet span_set(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& generators,
                     const std::vector<Id>& scalars, std::uint64_t budget) {
    std::vector<std::uint64_t> cur{0};
    KeySet seen(t, n);
    seen.insert(0);
    for (const auto& g : generators) {
        if (g.size() != n) raise(ErrorKind::LengthMismatch, "generator of the wrong length");
        const Word gw = t.ids(g);
        // {c·g} is an additive subgroup, so the new span is a union of cosets cur + m.
        std::vector<std::uint64_t> multiples;
        for (Id c : scalars) {
            Word m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = t.mul(c, gw[i]);
            multiples.push_back(t.pack(m));
        }
        const std::size_t base = cur.size();
        for (const auto m : multiples) {
            if (seen.contains(m)) continue;
            for (std::size_t i = 0; i < base; ++i) {
                const std::uint64_t k = t.add_keys(cur[i], m, n);
                if (seen.insert(k)) cur.push_back(k);
            }
            check_budget(cur.size(), budget, "span enumeration");
        }
    }
    return CodewordSet{t.ring(), n, seen.sorted(std::move(cur))};
}

CodewordSet span_set(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& generators,
                     std::uint64_t budget) {
    return span_set(t, n, generators, all_ids(t), budget);
}

CodewordSet enumerate(const LinearCode& code, std::uint64_t budget) {
    const TabulatedRing t(code.ring());
    return span_set(t, code.length(), code.generators().row_list(), budget);
}

std::vector<Vec> enumerate_codewords(const LinearCode& code, std::uint64_t budget) {
    const TabulatedRing t(code.ring());
    const CodewordSet words = span_set(t, code.length(), code.generators().row_list(), budget);
    std::vector<Vec> out;
    out.reserve(words.size());
    for (auto k : words.keys) out.push_back(t.vec(t.unpack(k, code.length())));
    std::sort(out.begin(), out.end(), vec_less);
    return out;
}

bool same_code(const LinearCode& code, const CodewordSet& words, std::uint64_t budget) {
    return code.length() == words.n && enumerate(code, budget) == words;
}

CodewordSet set_intersection(const CodewordSet& x, const CodewordSet& y) {
    CodewordSet out{x.ring, x.n, {}};
    std::set_intersection(x.keys.begin(), x.keys.end(), y.keys.begin(), y.keys.end(), std::back_inserter(out.keys));
    return out;
}

CodewordSet sumset(const TabulatedRing& t, const CodewordSet& x, const CodewordSet& y, std::uint64_t budget) {
    // Both sets are additive groups, so x + y is the union of the cosets x + m.
    std::vector<std::uint64_t> keys = x.keys;
    KeySet seen(t, x.n);
    for (auto k : keys) seen.insert(k);
    for (auto m : y.keys) {
        if (seen.contains(m)) continue;
        for (auto w : x.keys) {
            const std::uint64_t k = t.add_keys(w, m, x.n);
            if (seen.insert(k)) keys.push_back(k);
        }
        check_budget(keys.size(), budget, "sumset");
    }
    return CodewordSet{x.ring, x.n, seen.sorted(std::move(keys))};
}

bool is_subset(const CodewordSet& x, const CodewordSet& y) {
    return std::includes(y.keys.begin(), y.keys.end(), x.keys.begin(), x.keys.end());
}

CodewordSet map_entries(const TabulatedRing& t, const CodewordSet& c, const std::function<Id(Id)>& f) {
    std::vector<std::uint64_t> keys;
    keys.reserve(c.size());
    for (auto k : c.keys) {
        Word w = t.unpack(k, c.n);
        for (auto& x : w) x = f(x);
        keys.push_back(t.pack(w));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return CodewordSet{c.ring, c.n, std::move(keys)};
}

CodewordSet filter_entries(const TabulatedRing& t, const CodewordSet& c, const std::function<bool(Id)>& keep) {
    CodewordSet out{c.ring, c.n, {}};
    for (auto k : c.keys) {
        const Word w = t.unpack(k, c.n);
        if (std::all_of(w.begin(), w.end(), keep)) out.keys.push_back(k);
    }
    return out;
}

bool shift_invariant(const TabulatedRing& t, const CodewordSet& c, const AssociateVector& a, bool transposed) {
    const std::size_t n = c.n;
    const Word aw = t.ids(a.entries());
    for (auto k : c.keys) {
        const Word w = t.unpack(k, n);
        Word out(n, 0);
        if (!transposed) {
            // (0, c_0, ..., c_{n-2}) + c_{n-1} a
            for (std::size_t i = 0; i < n; ++i) out[i] = t.mul(w[n - 1], aw[i]);
            for (std::size_t i = 1; i < n; ++i) out[i] = t.add(out[i], w[i - 1]);
        } else {
            // (c_1, ..., c_{n-1}, Σ c_i a_i)
            for (std::size_t i = 0; i + 1 < n; ++i) out[i] = w[i + 1];
            out[n - 1] = dot_ids(t, w, aw);
        }
        if (!c.contains(t.pack(out))) return false;
    }
    return true;
}

Id annihilator_form(const TabulatedRing& t, const Word& u, const Word& v, const Word& a) {
    const std::size_t n = a.size();
    Word prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = t.add(prod[i + j], t.mul(u[i], v[j]));
    for (std::size_t k = 2 * n - 1; k-- > n;) {
        const Id c = prod[k];
        prod[k] = 0;
        for (std::size_t j = 0; j < n; ++j) prod[k - n + j] = t.add(prod[k - n + j], t.mul(c, a[j]));
    }
    return prod[0];
}

CodewordSet brute_dual(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& spanning, DualForm form,
                       const std::optional<AssociateVector>& a, const std::optional<GaloisContext>& sub,
                       std::uint64_t budget) {
    if (form == DualForm::annihilator && !a)
        raise(ErrorKind::InvalidArgument, "the annihilator form needs an associate vector");
    const std::vector<Id> digits = sub ? subring_ids(t, *sub) : all_ids(t);
    space_size(digits.size(), n, budget, "dual scan");

    // ⟨y, g⟩ is linear in y, so each g becomes a weight vector w with ⟨y, g⟩ = Σ y_i w_i.
    std::vector<Word> weights;
    for (const auto& g : spanning) {
        if (g.size() != n) raise(ErrorKind::LengthMismatch, "spanning vector of the wrong length");
        Word gw = t.ids(g);
        if (form == DualForm::annihilator) {
            const Word aw = t.ids(a->entries());
            Word w(n);
            for (std::size_t i = 0; i < n; ++i) {
                Word e(n, 0);
                e[i] = t.id(t.ring().one());
                w[i] = annihilator_form(t, e, gw, aw);
            }
            gw = std::move(w);
        }
        if (std::any_of(gw.begin(), gw.end(), [](Id x) { return x != 0; })) weights.push_back(std::move(gw));
    }

    CodewordSet out{t.ring(), n, {}};
    Word y(n, digits[0]);
    std::vector<std::size_t> pos(n, 0);
    do {
        if (std::all_of(weights.begin(), weights.end(), [&](const Word& w) { return dot_ids(t, y, w) == 0; }))
            out.keys.push_back(t.pack(y));
    } while (advance(y, digits, pos));
    std::sort(out.keys.begin(), out.keys.end());
    return out;
}

CodewordSet brute_dual(const LinearCode& code, DualForm form, const std::optional<AssociateVector>& a,
                       std::uint64_t budget) {
    const TabulatedRing t(code.ring());
    return brute_dual(t, code.length(), code.generators().row_list(), form, a, std::nullopt, budget);
}

CodewordSet divisible_scan(const TabulatedRing& t, std::size_t n, const Poly& g, std::uint64_t budget) {
    if (!g.is_monic()) raise(ErrorKind::NotMonic, "divisor must be monic");
    space_size(t.size(), n, budget, "divisibility scan");
    const auto dg = static_cast<std::size_t>(g.degree());
    Word gw;
    for (const auto& c : g.coeffs()) gw.push_back(t.id(c));
    const std::vector<Id> digits = all_ids(t);

    CodewordSet out{t.ring(), n, {}};
    Word y(n, 0);
    std::vector<std::size_t> pos(n, 0);
    do {
        Word r = y;
        for (std::size_t k = n; k-- > dg;) {
            const Id c = r[k];
            if (c == 0) continue;
            const Id nc = t.neg(c);
            for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = t.add(r[k - dg + j], t.mul(nc, gw[j]));
        }
        if (std::all_of(r.begin(), r.end(), [](Id x) { return x == 0; })) out.keys.push_back(t.pack(y));
    } while (advance(y, digits, pos));
    std::sort(out.keys.begin(), out.keys.end());
    return out;
}

LinearCode to_code(const TabulatedRing& t, const CodewordSet& c) {
    LinearCode code = LinearCode::zero(t.ring(), c.n);
    std::vector<Vec> rows;
    for (auto k : c.keys) {
        if (code.cardinality() == c.size()) break;
        Vec v = t.vec(t.unpack(k, c.n));
        if (code.contains(v)) continue;
        rows.push_back(std::move(v));
        code = LinearCode(t.ring(), c.n, rows);
    }
    return code;
}

// ---------------------------------------------------------------------------
// Ideal lattice

std::uint64_t IdealLatticePoint::predicted_log_cardinality(const FactorSet& fs) const {
    const Ring& ring = fs.modulus_poly.ring();
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < exponents.size(); ++k)
        out += static_cast<std::uint64_t>(ring.m()) * static_cast<std::uint64_t>(fs.factors[k].degree()) *
               static_cast<std::uint64_t>(ring.s() - exponents[k]);
    return out;
}

bool IdealLatticePoint::is_free() const {
    const int s = code.ring().s();
    return std::all_of(exponents.begin(), exponents.end(), [&](int j) { return j == 0 || j == s; });
}

std::vector<IdealLatticePoint> lattice(const FactorSet& fs, const AssociateVector& a) {
    const Ring& ring = a.ring();
    const int s = ring.s();
    const std::size_t z = fs.factors.size();
    std::vector<Poly> cofactor;
    for (std::size_t k = 0; k < z; ++k) {
        Poly prod = Poly::constant(ring.one());
        for (std::size_t l = 0; l < z; ++l)
            if (l != k) prod = prod * fs.factors[l];
        cofactor.push_back(prod);
    }

    std::vector<IdealLatticePoint> out;
    std::vector<int> j(z, 0);
    for (;;) {
        std::vector<Poly> gens;
        for (std::size_t k = 0; k < z; ++k)
            if (j[k] < s) gens.push_back(theta_power(ring, j[k]) * cofactor[k]);
        out.push_back({j, gens.empty() ? PolycyclicCode(LinearCode::zero(ring, a.length()), a) : ideal_closure(gens, a)});
        std::size_t k = z;
        while (k > 0 && j[k - 1] == s) j[--k] = 0;
        if (k == 0) break;
        ++j[k - 1];
    }
    return out;
}

}  // namespace chaincode
