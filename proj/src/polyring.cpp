#include "chaincode/polyring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

namespace chaincode {

namespace {

void require_same_ring(const Poly& f, const Poly& g) {
    if (!(f.ring() == g.ring())) raise(ErrorKind::RingMismatch, "polynomials over different rings");
}

void require_field(const Poly& f, const char* what) {
    if (!f.ring().is_field()) raise(ErrorKind::InvalidArgument, std::string(what) + " needs a field");
}

/// Lifts g·h ≡ f (mod θ) to an exact factorisation f = G·H over S with G monic,
/// π(G) = gbar, π(H) = hbar. gbar and hbar must be coprime.
std::pair<Poly, Poly> hensel_pair(const Poly& f, const Poly& gbar, const Poly& hbar) {
    const Ring& ring = f.ring();
    const Bezout bz = extended_gcd(gbar, hbar);
    if (bz.gcd.degree() != 0) raise(ErrorKind::NotSquareFree, "factors to lift are not coprime");
    const RingElem gcd_inv = inverse(bz.gcd.leading());
    const Poly b = gcd_inv * bz.v;  // a·gbar + b·hbar = 1

    Poly g = lift(gbar, ring);
    Poly h = lift(hbar, ring);
    for (int k = 1; k < ring.s(); ++k) {
        const Poly err = f - g * h;
        if (err.is_zero()) break;
        if (theta_valuation(err) < k) raise(ErrorKind::InvariantViolation, "Hensel step lost precision");
        const Poly ebar = residue(divide_by_theta(err, k));
        const Poly dg = rem_monic(ebar * b, gbar);
        const Poly dh = exact_quotient(ebar - dg * hbar, gbar);
        const RingElem pk = theta_power(ring, k);
        g += pk * lift(dg, ring);
        h += pk * lift(dh, ring);
    }
    if (!(g * h == f)) raise(ErrorKind::InvariantViolation, "Hensel lift does not reproduce the input");
    return {std::move(g), std::move(h)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly::Poly(Ring ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.ring() == ring_)) raise(ErrorKind::RingMismatch, "coefficient from a different ring");
    normalize();
}

Poly Poly::constant(const RingElem& c) { return Poly(c.ring(), {c}); }

Poly Poly::monomial(const RingElem& c, std::size_t degree) {
    std::vector<RingElem> coeffs(degree + 1, c.ring().zero());
    coeffs[degree] = c;
    return Poly(c.ring(), std::move(coeffs));
}

Poly Poly::x(const Ring& ring) { return monomial(ring.one(), 1); }

Poly Poly::binomial(const Ring& ring, std::size_t n, const Poly& tail) {
    return monomial(ring.one(), n) - tail;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_.front().is_one(); }

RingElem Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }

RingElem Poly::leading() const {
    if (coeffs_.empty()) raise(ErrorKind::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_ring(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_ring(*this, rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    require_same_ring(lhs, rhs);
    if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.ring());
    std::vector<RingElem> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, lhs.ring().zero());
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(lhs.ring(), std::move(out));
}

Poly operator*(const RingElem& c, const Poly& f) {
    if (!(c.ring() == f.ring())) raise(ErrorKind::RingMismatch, "scalar from a different ring");
    Poly out = f;
    for (auto& x : out.coeffs_) x = c * x;
    out.normalize();
    return out;
}

bool operator==(const Poly& f, const Poly& g) noexcept { return f.ring_ == g.ring_ && f.coeffs_ == g.coeffs_; }

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<RingElem> out(k, ring_.zero());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(ring_, std::move(out));
}

RingElem Poly::eval(const RingElem& x) const {
    RingElem acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(ring_);
    std::vector<RingElem> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out.push_back(ring_.from_int(static_cast<std::int64_t>(i % static_cast<std::size_t>(ring_.q()))) *
                      coeffs_[i]);
    return Poly(ring_, std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const RingElem& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = c.to_string();
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c.is_one()) {
            if (cs.find('+') != std::string::npos)
                os << "(" << cs << ")*";
            else
                os << cs << "*";
        }
        os << "X";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool poly_less(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const auto a = f.coeffs()[i].index();
        const auto b = g.coeffs()[i].index();
        if (a != b) return a < b;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Division and coefficient maps

DivMod divmod_monic(const Poly& f, const Poly& g) {
    require_same_ring(f, g);
    if (!g.is_monic()) raise(ErrorKind::NonMonicDivisor, "divisor " + g.to_string() + " is not monic");
    const Ring& ring = f.ring();
    if (f.degree() < g.degree()) return {Poly(ring), f};
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    std::vector<RingElem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<RingElem> quot(rem.size() - dg, ring.zero());
    for (std::size_t k = rem.size(); k-- > dg;) {
        const RingElem c = rem[k];
        if (c.is_zero()) continue;
        quot[k - dg] = c;
        for (std::size_t i = 0; i <= dg; ++i) rem[k - dg + i] -= c * g.coeffs()[i];
    }
    rem.resize(dg);
    return {Poly(ring, std::move(quot)), Poly(ring, std::move(rem))};
}

Poly rem_monic(const Poly& f, const Poly& g) { return divmod_monic(f, g).remainder; }

bool divides(const Poly& g, const Poly& f) { return rem_monic(f, g).is_zero(); }

Poly residue(const Poly& f) {
    const Ring field = f.ring().residue_field();
    std::vector<RingElem> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(residue(c));
    return Poly(field, std::move(out));
}

Poly lift(const Poly& f, const Ring& target) {
    std::vector<RingElem> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(lift(c, target));
    return Poly(target, std::move(out));
}

Poly frobenius(const Poly& f, int k) {
    std::vector<RingElem> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(frobenius(c, k));
    return Poly(f.ring(), std::move(out));
}

Poly divide_by_theta(const Poly& f, int t) {
    std::vector<RingElem> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(divide_by_theta(c, t));
    return Poly(f.ring(), std::move(out));
}

int theta_valuation(const Poly& f) {
    int best = f.ring().s();
    for (const auto& c : f.coeffs()) best = std::min(best, theta_valuation(c));
    return best;
}

// ---------------------------------------------------------------------------
// Field helpers

Poly make_monic(const Poly& f) {
    if (f.is_zero()) return f;
    return inverse(f.leading()) * f;
}

Poly gcd(const Poly& f, const Poly& g) {
    require_field(f, "gcd");
    Poly a = make_monic(f), b = make_monic(g);
    while (!b.is_zero()) {
        Poly r = rem_monic(a, b);
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

Bezout extended_gcd(const Poly& f, const Poly& g) {
    require_field(f, "extended_gcd");
    require_same_ring(f, g);
    const Ring& ring = f.ring();
    Poly r0 = f, r1 = g;
    Poly u0 = Poly::constant(ring.one()), u1(ring);
    Poly v0(ring), v1 = Poly::constant(ring.one());
    while (!r1.is_zero()) {
        const RingElem lc_inv = inverse(r1.leading());
        const DivMod qr = divmod_monic(r0, lc_inv * r1);
        const Poly q = lc_inv * qr.quotient;
        Poly r2 = qr.remainder;
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {r0, u0, v0};
}

Poly exact_quotient(const Poly& f, const Poly& g) {
    require_field(f, "exact_quotient");
    const RingElem lc_inv = inverse(g.leading());
    const DivMod qr = divmod_monic(f, lc_inv * g);
    if (!qr.remainder.is_zero()) raise(ErrorKind::NotADivisor, g.to_string() + " does not divide " + f.to_string());
    return lc_inv * qr.quotient;
}

bool is_square_free(const Poly& f) {
    require_field(f, "is_square_free");
    if (f.degree() <= 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

std::vector<Poly> field_factor_squarefree(const Poly& f) {
    require_field(f, "field_factor_squarefree");
    if (!f.is_monic()) raise(ErrorKind::NotMonic, f.to_string() + " is not monic");
    if (!is_square_free(f)) raise(ErrorKind::NotSquareFree, f.to_string() + " is not square-free");
    const Ring& field = f.ring();
    const std::uint64_t q = field.size();
    std::vector<Poly> factors;
    Poly rest = f;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        // Monic candidates of degree d, counted with X^0 as the most significant digit.
        std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
        bool exhausted = false;
        while (!exhausted && 2 * d <= rest.degree()) {
            std::vector<RingElem> coeffs;
            coeffs.reserve(digits.size() + 1);
            for (auto idx : digits) coeffs.push_back(field.from_index(idx));
            coeffs.push_back(field.one());
            const Poly candidate(field, std::move(coeffs));
            const DivMod qr = divmod_monic(rest, candidate);
            if (qr.remainder.is_zero()) {
                factors.push_back(candidate);
                rest = qr.quotient;
            }
            std::size_t i = digits.size();
            exhausted = true;
            while (i > 0) {
                --i;
                if (++digits[i] < q) {
                    exhausted = false;
                    break;
                }
                digits[i] = 0;
            }
        }
    }
    if (rest.degree() > 0) factors.push_back(rest);
    std::sort(factors.begin(), factors.end(), poly_less);
    return factors;
}

// ---------------------------------------------------------------------------
// FactorSet and Hensel lifting

std::uint64_t FactorSet::subset_of(const Poly& g) const {
    if (!g.is_monic()) raise(ErrorKind::NotADivisor, g.to_string() + " is not monic");
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < factors.size(); ++j)
        if (divides(factors[j], g)) mask |= std::uint64_t{1} << j;
    if (!(product(mask) == g))
        raise(ErrorKind::NotADivisor, g.to_string() + " does not divide " + modulus_poly.to_string());
    return mask;
}

Poly FactorSet::product(std::uint64_t mask) const {
    Poly out = Poly::constant(modulus_poly.ring().one());
    for (std::size_t j = 0; j < factors.size(); ++j)
        if (mask & (std::uint64_t{1} << j)) out = out * factors[j];
    return out;
}

std::uint64_t FactorSet::full_mask() const {
    return factors.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << factors.size()) - 1;
}

FactorSet hensel_lift_factors(const Poly& f) {
    if (!f.is_monic()) raise(ErrorKind::NotMonic, f.to_string() + " is not monic");
    const Poly fbar = residue(f);
    if (!is_square_free(fbar)) raise(ErrorKind::NotSquareFree, "residue of " + f.to_string() + " is not square-free");
    const std::vector<Poly> residues = field_factor_squarefree(fbar);
    return hensel_lift_factors(f, residues);
}

FactorSet hensel_lift_factors(const Poly& f, std::span<const Poly> residue_factors) {
    if (!f.is_monic()) raise(ErrorKind::NotMonic, f.to_string() + " is not monic");
    if (residue_factors.size() > 64) raise(ErrorKind::UnsupportedExtension, "more than 64 factors");
    const Poly fbar = residue(f);
    Poly check = Poly::constant(fbar.ring().one());
    for (const auto& r : residue_factors) {
        if (!r.is_monic()) raise(ErrorKind::NotMonic, r.to_string() + " is not monic");
        check = check * r;
    }
    if (!(check == fbar)) raise(ErrorKind::NotADivisor, "residue factors do not multiply to " + fbar.to_string());

    FactorSet fs;
    fs.modulus_poly = f;
    if (residue_factors.empty()) return fs;
    if (f.ring().is_field()) {
        fs.factors.assign(residue_factors.begin(), residue_factors.end());
    } else {
        Poly rest = f;
        for (std::size_t j = 0; j + 1 < residue_factors.size(); ++j) {
            Poly hbar = Poly::constant(fbar.ring().one());
            for (std::size_t k = j + 1; k < residue_factors.size(); ++k) hbar = hbar * residue_factors[k];
            auto [g, h] = hensel_pair(rest, residue_factors[j], hbar);
            fs.factors.push_back(std::move(g));
            rest = std::move(h);
        }
        fs.factors.push_back(std::move(rest));
    }
    std::sort(fs.factors.begin(), fs.factors.end(), poly_less);
    return fs;
}

std::uint64_t period(std::size_t n, const Poly& tail, std::uint64_t cap) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "length must be positive");
    const Poly tail_bar = residue(tail);
    if (tail_bar.coeff(0).is_zero()) raise(ErrorKind::NonUnitA0, "constant term of the tail is not a unit");
    const Ring& field = tail_bar.ring();
    const Poly ambient = Poly::binomial(field, n, tail_bar);
    Poly cur = rem_monic(Poly::x(field), ambient);
    for (std::uint64_t i = 1; i <= cap; ++i) {
        if (cur.is_one()) {
            if (i % static_cast<std::uint64_t>(field.p()) == 0)
                raise(ErrorKind::NotCoprimeToP, "period " + std::to_string(i) + " is divisible by p");
            return i;
        }
        cur = rem_monic(cur.shifted(1), ambient);
    }
    raise(ErrorKind::CapExceeded, "period exceeds " + std::to_string(cap));
}

Poly mu(std::span<const Poly> polys, const FactorSet& fs) {
    std::uint64_t mask = 0;
    for (const auto& g : polys) mask |= fs.subset_of(g);
    return fs.product(mask);
}

Poly delta(std::span<const Poly> polys, const FactorSet& fs) {
    std::uint64_t mask = fs.full_mask();
    for (const auto& g : polys) mask &= fs.subset_of(g);
    return fs.product(mask);
}

RegularDecomposition regular_decompose(const Poly& f) {
    if (f.is_zero()) raise(ErrorKind::ZeroPolynomial, "cannot decompose the zero polynomial");
    const Ring& ring = f.ring();
    const int t = theta_valuation(f);
    const Poly regular = divide_by_theta(f, t);
    const Poly rbar = residue(regular);
    const Poly lead = Poly::constant(rbar.leading());
    const Poly mbar = make_monic(rbar);
    if (mbar.degree() == 0) {
        return {t, regular, Poly::constant(ring.one())};
    }
    auto [monic, unit] = hensel_pair(regular, mbar, lead);
    return {t, std::move(unit), std::move(monic)};
}

}  // namespace chaincode
