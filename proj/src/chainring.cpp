#include "chaincode/chainring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace chaincode {

namespace detail {

struct RingData {
    RingSpec spec;
    std::shared_ptr<const RingData> residue;  // null when the ring is a field
};

}  // namespace detail

namespace {

using Int = std::int64_t;
using IntPoly = std::vector<Int>;  // ascending coefficients

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int mod(Int x, Int q) {
    x %= q;
    return x < 0 ? x + q : x;
}

Int inv_mod_prime(Int x, Int p) {
    Int result = 1, base = mod(x, p), e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly rem_mod_p(IntPoly a, const IntPoly& b, Int p) {
    trim(a);
    const Int lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const Int c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

IntPoly mulmod_p(const IntPoly& a, const IntPoly& b, const IntPoly& f, Int p) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return rem_mod_p(std::move(r), f, p);
}

IntPoly gcd_mod_p(IntPoly a, IntPoly b, Int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        IntPoly r = rem_mod_p(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(X^{p^i} - X, f) = 1 for 1 <= i <= m/2.
bool irreducible_mod_p(IntPoly f, Int p) {
    trim(f);
    const int m = static_cast<int>(f.size()) - 1;
    if (m <= 0) return false;
    if (m == 1) return true;
    IntPoly h = rem_mod_p({0, 1}, f, p);
    for (int i = 1; i <= m / 2; ++i) {
        IntPoly acc{1};
        IntPoly base = h;
        for (Int e = p; e > 0; e >>= 1) {
            if (e & 1) acc = mulmod_p(acc, base, f, p);
            base = mulmod_p(base, base, f, p);
        }
        h = acc;
        IntPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod(diff[1] - 1, p);
        const IntPoly g = gcd_mod_p(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            raise(ErrorKind::Overflow, "integer power exceeds 64 bits");
        result *= base;
    }
    return result;
}

const Ring& check_same(const RingElem& x, const RingElem& y) {
    if (!(x.ring() == y.ring())) raise(ErrorKind::RingMismatch, "operands live in different rings");
    return x.ring();
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring

std::vector<std::int64_t> Ring::default_modulus(std::int64_t p, int char_exp, int m) {
    (void)char_exp;
    // Irreducibility only sees residues mod p, so the least candidate has every
    // coefficient in [0, p).
    std::vector<Int> low(static_cast<std::size_t>(m), 0);
    for (;;) {
        IntPoly f(low);
        f.push_back(1);
        if (irreducible_mod_p(f, p)) return f;
        std::size_t i = low.size();
        // Lexicographic order with the constant term most significant.
        while (i > 0) {
            --i;
            if (++low[i] < p) break;
            low[i] = 0;
            if (i == 0) raise(ErrorKind::InvalidArgument, "no irreducible polynomial found");
        }
    }
}

Ring Ring::create(std::int64_t p, int char_exp, int m, std::optional<std::vector<std::int64_t>> modulus,
                  int e) {
    if (!is_prime(p)) raise(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e != 1) raise(ErrorKind::UnsupportedExtension, "only unramified rings (e = 1) are implemented");
    if (char_exp < 1 || m < 1) raise(ErrorKind::InvalidArgument, "need a >= 1 and m >= 1");
    if (m > kMaxResidueDegree)
        raise(ErrorKind::UnsupportedExtension, "residue degree above " + std::to_string(kMaxResidueDegree));
    const std::uint64_t q = checked_pow(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(char_exp));
    if (q >= (std::uint64_t{1} << 31)) raise(ErrorKind::Overflow, "characteristic p^a must stay below 2^31");

    RingSpec spec;
    spec.p = p;
    spec.char_exp = char_exp;
    spec.m = m;
    spec.e = 1;
    spec.s = char_exp;
    spec.q = static_cast<Int>(q);

    if (modulus) {
        if (modulus->size() != static_cast<std::size_t>(m) + 1)
            raise(ErrorKind::InvalidArgument, "modulus must have m + 1 coefficients");
        spec.modulus.reserve(modulus->size());
        for (Int c : *modulus) spec.modulus.push_back(mod(c, spec.q));
        if (spec.modulus.back() != 1) raise(ErrorKind::InvalidArgument, "modulus must be monic");
        IntPoly reduced;
        for (Int c : spec.modulus) reduced.push_back(c % p);
        if (!irreducible_mod_p(reduced, p))
            raise(ErrorKind::ReducibleModulus, "modulus is reducible mod " + std::to_string(p));
    } else {
        spec.modulus = default_modulus(p, char_exp, m);
    }

    auto data = std::make_shared<detail::RingData>();
    data->spec = spec;
    if (char_exp > 1) {
        auto res = std::make_shared<detail::RingData>();
        res->spec = spec;
        res->spec.char_exp = 1;
        res->spec.s = 1;
        res->spec.q = p;
        for (Int& c : res->spec.modulus) c %= p;
        data->residue = std::move(res);
    }
    return Ring(std::move(data));
}

const RingSpec& Ring::spec() const { return data_->spec; }

std::uint64_t Ring::size() const {
    return checked_pow(static_cast<std::uint64_t>(q()), static_cast<std::uint64_t>(m()));
}

Ring Ring::residue_field() const { return data_->residue ? Ring(data_->residue) : *this; }

RingElem Ring::zero() const {
    RingElem x;
    x.ring_ = *this;
    return x;
}

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(std::int64_t value) const {
    RingElem x = zero();
    x.c_[0] = static_cast<std::int32_t>(mod(value, q()));
    return x;
}

RingElem Ring::generator() const {
    if (m() == 1) return from_int(-spec().modulus[0]);
    RingElem x = zero();
    x.c_[1] = 1;
    return x;
}

RingElem Ring::theta() const { return from_int(p()); }

RingElem Ring::element(std::span<const std::int64_t> coords) const {
    if (coords.size() > static_cast<std::size_t>(m()))
        raise(ErrorKind::InvalidArgument, "element has more than m coordinates");
    RingElem x = zero();
    for (std::size_t i = 0; i < coords.size(); ++i) x.c_[i] = static_cast<std::int32_t>(mod(coords[i], q()));
    return x;
}

RingElem Ring::from_index(std::uint64_t index) const {
    RingElem x = zero();
    const auto qq = static_cast<std::uint64_t>(q());
    for (int i = 0; i < m(); ++i) {
        x.c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(index % qq);
        index /= qq;
    }
    return x;
}

std::vector<RingElem> Ring::elements() const {
    const std::uint64_t n = size();
    std::vector<RingElem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(from_index(i));
    return out;
}

std::string Ring::describe() const {
    std::ostringstream os;
    if (m() == 1) {
        os << (is_field() ? "F" : "Z") << q();
    } else if (is_field()) {
        os << "F" << size();
    } else {
        os << "GR(" << q() << "," << m() << ")";
    }
    return os.str();
}

bool operator==(const Ring& x, const Ring& y) noexcept {
    if (x.data_ == y.data_) return true;
    if (!x.data_ || !y.data_) return false;
    const RingSpec& a = x.data_->spec;
    const RingSpec& b = y.data_->spec;
    return a.p == b.p && a.char_exp == b.char_exp && a.m == b.m && a.modulus == b.modulus;
}

// ---------------------------------------------------------------------------
// RingElem

std::vector<std::int64_t> RingElem::coords() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(ring_.m()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c_[i];
    return out;
}

bool RingElem::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::int32_t v) { return v == 0; });
}

bool RingElem::is_one() const noexcept {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::int32_t v) { return v == 0; });
}

std::uint64_t RingElem::index() const {
    std::uint64_t idx = 0;
    const auto qq = static_cast<std::uint64_t>(ring_.q());
    for (int i = ring_.m() - 1; i >= 0; --i) idx = idx * qq + static_cast<std::uint64_t>(c_[static_cast<std::size_t>(i)]);
    return idx;
}

RingElem RingElem::operator-() const {
    RingElem out = *this;
    const Int q = ring_.q();
    for (int i = 0; i < ring_.m(); ++i) {
        auto& c = out.c_[static_cast<std::size_t>(i)];
        c = c == 0 ? 0 : static_cast<std::int32_t>(q - c);
    }
    return out;
}

RingElem& RingElem::operator+=(const RingElem& rhs) {
    const Int q = check_same(*this, rhs).q();
    for (int i = 0; i < ring_.m(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        Int v = Int{c_[k]} + rhs.c_[k];
        if (v >= q) v -= q;
        c_[k] = static_cast<std::int32_t>(v);
    }
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
    const Int q = check_same(*this, rhs).q();
    for (int i = 0; i < ring_.m(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        Int v = Int{c_[k]} - rhs.c_[k];
        if (v < 0) v += q;
        c_[k] = static_cast<std::int32_t>(v);
    }
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& rhs) {
    const Ring& ring = check_same(*this, rhs);
    const RingSpec& sp = ring.spec();
    const Int q = sp.q;
    const int m = sp.m;
    if (m == 1) {
        c_[0] = static_cast<std::int32_t>(Int{c_[0]} * rhs.c_[0] % q);
        return *this;
    }
    std::array<Int, 2 * kMaxResidueDegree> prod{};
    for (int i = 0; i < m; ++i) {
        const Int a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; j < m; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] + a * rhs.c_[static_cast<std::size_t>(j)]) % q;
    }
    // X^m = -Σ_{i<m} f_i X^i
    for (int k = 2 * m - 2; k >= m; --k) {
        const Int c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(k)] = 0;
        for (int i = 0; i < m; ++i) {
            auto& slot = prod[static_cast<std::size_t>(k - m + i)];
            slot = mod(slot - c * sp.modulus[static_cast<std::size_t>(i)], q);
        }
    }
    for (int i = 0; i < m; ++i) c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(prod[static_cast<std::size_t>(i)]);
    return *this;
}

bool operator==(const RingElem& x, const RingElem& y) noexcept { return x.c_ == y.c_ && x.ring_ == y.ring_; }

std::string RingElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = ring_.m() - 1; i >= 0; --i) {
        const Int c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "w";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

bool element_less(const RingElem& x, const RingElem& y) { return x.index() < y.index(); }

RingElem pow(const RingElem& x, std::uint64_t exponent) {
    RingElem result = x.ring().one();
    RingElem base = x;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

int theta_valuation(const RingElem& x) {
    const Ring& ring = x.ring();
    const Int p = ring.p();
    int best = ring.s();
    for (int i = 0; i < ring.m(); ++i) {
        Int c = x.coord(i);
        if (c == 0) continue;
        int v = 0;
        while (c % p == 0) {
            c /= p;
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

bool is_unit(const RingElem& x) { return theta_valuation(x) == 0; }

RingElem inverse(const RingElem& x) {
    if (!is_unit(x)) raise(ErrorKind::NonUnit, x.to_string() + " is not a unit");
    const Ring& ring = x.ring();
    const Ring field = ring.residue_field();
    const RingElem xr = residue(x);
    // F_{p^m}^× has order p^m - 1.
    const std::uint64_t order = field.size() - 1;
    const RingElem zbar = order == 0 ? field.one() : pow(xr, order - 1);
    RingElem z = lift(zbar, ring);
    const RingElem two = ring.from_int(2);
    // Newton step z ← z(2 − xz) doubles the θ-adic precision.
    for (int step = 1; step < ring.s(); ++step) z = z * (two - x * z);
    if (!(x * z).is_one()) raise(ErrorKind::InvariantViolation, "Newton inversion did not converge");
    return z;
}

RingElem theta_power(const Ring& ring, int t) {
    if (t >= ring.s()) return ring.zero();
    Int v = 1;
    for (int i = 0; i < t; ++i) v *= ring.p();
    return ring.from_int(v);
}

RingElem divide_by_theta(const RingElem& x, int t) {
    if (t == 0) return x;
    if (theta_valuation(x) < t) raise(ErrorKind::InvalidArgument, "element is not divisible by theta^t");
    Int pt = 1;
    for (int i = 0; i < t; ++i) pt *= x.ring().p();
    RingElem out = x;
    for (auto& c : out.c_) c = static_cast<std::int32_t>(c / pt);
    return out;
}

RingElem reduce_mod_theta_power(const RingElem& x, int t) {
    if (t >= x.ring().s()) return x;
    Int pt = 1;
    for (int i = 0; i < t; ++i) pt *= x.ring().p();
    RingElem out = x;
    for (auto& c : out.c_) c = static_cast<std::int32_t>(c % pt);
    return out;
}

RingElem residue(const RingElem& x) {
    // The residue field shares the power basis; its modulus is the reduction mod p.
    return lift(x, x.ring().residue_field());
}

RingElem lift(const RingElem& x, const Ring& target) {
    if (x.ring().m() != target.m() || x.ring().p() != target.p())
        raise(ErrorKind::RingMismatch, "lift needs matching p and m");
    RingElem out = target.zero();
    for (int i = 0; i < target.m(); ++i)
        out.c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(mod(x.coord(i), target.q()));
    return out;
}

RingElem teichmuller_representative(const RingElem& x) {
    const std::uint64_t pm = x.ring().residue_field().size();
    RingElem y = x;
    // Each pass gains at least one θ-adic digit, so s passes always suffice.
    for (int pass = 0; pass <= x.ring().s(); ++pass) {
        RingElem next = pow(y, pm);
        if (next == y) return y;
        y = std::move(next);
    }
    raise(ErrorKind::InvariantViolation, "Teichmüller iteration did not stabilise");
}

std::vector<RingElem> teichmuller_decompose(const RingElem& x) {
    const Ring& ring = x.ring();
    std::vector<RingElem> digits;
    digits.reserve(static_cast<std::size_t>(ring.s()));
    RingElem rest = x;
    for (int t = 0; t < ring.s(); ++t) {
        RingElem digit = teichmuller_representative(rest);
        digits.push_back(digit);
        if (t + 1 < ring.s()) rest = divide_by_theta(rest - digit, 1);
    }
    return digits;
}

RingElem teichmuller_recompose(std::span<const RingElem> digits) {
    if (digits.empty()) raise(ErrorKind::InvalidArgument, "no digits");
    const Ring& ring = digits.front().ring();
    RingElem out = ring.zero();
    for (std::size_t t = 0; t < digits.size(); ++t) out += digits[t] * theta_power(ring, static_cast<int>(t));
    return out;
}

std::vector<RingElem> teichmuller_set(const Ring& ring) {
    const Ring field = ring.residue_field();
    const std::uint64_t count = field.size();
    std::vector<RingElem> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(teichmuller_representative(lift(field.from_index(i), ring)));
    return out;
}

RingElem frobenius(const RingElem& x, int k) {
    const int m = x.ring().m();
    k %= m;
    if (k < 0) k += m;
    if (k == 0) return x;
    const std::uint64_t power = checked_pow(static_cast<std::uint64_t>(x.ring().p()), static_cast<std::uint64_t>(k));
    std::vector<RingElem> digits = teichmuller_decompose(x);
    for (auto& digit : digits) digit = pow(digit, power);
    return teichmuller_recompose(digits);
}

GaloisContext GaloisContext::make(const Ring& ring, int r) {
    if (r < 1 || ring.m() % r != 0)
        raise(ErrorKind::InvalidArgument, "subring degree " + std::to_string(r) + " does not divide m = " +
                                              std::to_string(ring.m()));
    return GaloisContext{r, ring.m() / r};
}

RingElem trace(const RingElem& x, const GaloisContext& ctx) {
    RingElem out = x.ring().zero();
    for (int i = 0; i < ctx.d; ++i) out += frobenius(x, i * ctx.r);
    return out;
}

bool in_subring(const RingElem& x, const GaloisContext& ctx) { return frobenius(x, ctx.r) == x; }

}  // namespace chaincode
