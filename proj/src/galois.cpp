#include "chaincode/galois.hpp"

#include <algorithm>

namespace chaincode {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= x; ++q)
        if (x % q == 0) {
            out.push_back(q);
            while (x % q == 0) x /= q;
        }
    if (x > 1) out.push_back(x);
    return out;
}

RingElem primitive_element(const Ring& field) {
    const std::uint64_t order = field.size() - 1;
    const auto qs = prime_factors(order);
    for (std::uint64_t idx = 1; idx < field.size(); ++idx) {
        const RingElem x = field.from_index(idx);
        if (std::all_of(qs.begin(), qs.end(), [&](std::uint64_t q) { return !pow(x, order / q).is_one(); })) return x;
    }
    raise(ErrorKind::InvariantViolation, "no primitive element in " + field.describe());
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Extension

Extension Extension::make(const Ring& big, int r) {
    Extension ext;
    ext.big_ = big;
    ext.ctx_ = GaloisContext::make(big, r);
    const int m = big.m();
    ext.zq_ = Ring::create(big.p(), big.char_exp(), 1);

    if (r == m) {
        ext.sub_ = big;
        ext.zeta_ = big.generator();
    } else if (r == 1) {
        ext.sub_ = ext.zq_;
        ext.zeta_ = big.zero();
    } else {
        const Ring field = big.residue_field();
        const std::uint64_t pm = field.size();
        const std::uint64_t pr = ipow(static_cast<std::uint64_t>(big.p()), r);
        const RingElem eta = pow(primitive_element(field), (pm - 1) / (pr - 1));
        ext.zeta_ = teichmuller_representative(lift(eta, big));
        Poly minpoly = Poly::constant(big.one());
        for (int i = 0; i < r; ++i) minpoly = minpoly * (Poly::x(big) - Poly::constant(frobenius(ext.zeta_, i)));
        std::vector<std::int64_t> modulus;
        for (const auto& c : minpoly.coeffs()) {
            for (int k = 1; k < m; ++k)
                if (c.coord(k) != 0) raise(ErrorKind::InvariantViolation, "minimal polynomial leaves the prime ring");
            modulus.push_back(c.coord(0));
        }
        ext.sub_ = Ring::create(big.p(), big.char_exp(), r, modulus);
    }

    // Columns: coordinates of ζ^j w^i, indexed i·r + j.
    const int d = ext.ctx_.d;
    Matrix basis(ext.zq_, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    const RingElem w = big.generator();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < r; ++j) {
            const RingElem b = pow(ext.zeta_, static_cast<std::uint64_t>(j)) * pow(w, static_cast<std::uint64_t>(i));
            for (int k = 0; k < m; ++k)
                basis(static_cast<std::size_t>(k), static_cast<std::size_t>(i * r + j)) = ext.zq_.from_int(b.coord(k));
        }
    ext.to_mixed_ = inverse(basis).transpose();
    return ext;
}

RingElem Extension::embed(const RingElem& y) const {
    if (!(y.ring() == sub_)) raise(ErrorKind::RingMismatch, "element is not in the subring");
    if (sub_ == big_) return y;
    RingElem out = big_.zero();
    RingElem zj = big_.one();
    for (int j = 0; j < ctx_.r; ++j) {
        out += big_.from_int(y.coord(j)) * zj;
        zj *= zeta_;
    }
    return out;
}

Vec Extension::embed(const Vec& v) const {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(embed(x));
    return out;
}

Poly Extension::embed(const Poly& f) const {
    return Poly(big_, embed(Vec(f.coeffs().begin(), f.coeffs().end())));
}

LinearCode Extension::embed(const LinearCode& code) const {
    std::vector<Vec> rows;
    for (const auto& b : code.basis()) rows.push_back(embed(b));
    return LinearCode(big_, code.length(), rows);
}

AssociateVector Extension::embed(const AssociateVector& a) const { return AssociateVector(embed(a.entries())); }

std::vector<RingElem> Extension::components(const RingElem& x) const {
    if (!(x.ring() == big_)) raise(ErrorKind::RingMismatch, "element is not in the extension");
    const int m = big_.m(), r = ctx_.r, d = ctx_.d;
    Vec coords;
    for (int k = 0; k < m; ++k) coords.push_back(zq_.from_int(x.coord(k)));
    const Vec mixed = coords * to_mixed_;
    std::vector<RingElem> out;
    for (int i = 0; i < d; ++i) {
        std::vector<std::int64_t> c;
        for (int j = 0; j < r; ++j) c.push_back(mixed[static_cast<std::size_t>(i * r + j)].coord(0));
        out.push_back(sub_.element(c));
    }
    return out;
}

std::optional<RingElem> Extension::restrict(const RingElem& x) const {
    const auto comps = components(x);
    for (std::size_t i = 1; i < comps.size(); ++i)
        if (!comps[i].is_zero()) return std::nullopt;
    return comps.front();
}

std::optional<Vec> Extension::restrict(const Vec& v) const {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        auto y = restrict(x);
        if (!y) return std::nullopt;
        out.push_back(*y);
    }
    return out;
}

std::optional<Poly> Extension::restrict(const Poly& f) const {
    auto v = restrict(Vec(f.coeffs().begin(), f.coeffs().end()));
    if (!v) return std::nullopt;
    return Poly(sub_, *v);
}

// ---------------------------------------------------------------------------
// Images and disjointness

PolycyclicCode sigma_code(const PolycyclicCode& code, int i) {
    return PolycyclicCode(frobenius(code.code(), i), AssociateVector(frobenius(code.a().entries(), i)));
}

std::vector<PolycyclicCode> orbit(const PolycyclicCode& code, const GaloisContext& ctx) {
    std::vector<PolycyclicCode> out;
    for (int i = 0; i < ctx.d; ++i) out.push_back(sigma_code(code, i * ctx.r));
    return out;
}

bool is_galois_disjoint(const LinearCode& code, const GaloisContext& ctx) {
    for (int i = 1; i < ctx.d; ++i)
        if (!intersect(frobenius(code, i * ctx.r), code).is_zero()) return false;
    return true;
}

bool is_complete_disjoint(const LinearCode& code, const GaloisContext& ctx) {
    const Ring& ring = code.ring();
    const std::uint64_t full =
        static_cast<std::uint64_t>(ring.m()) * static_cast<std::uint64_t>(ring.s()) * code.length();
    std::uint64_t total = 0;
    LinearCode acc = LinearCode::zero(ring, code.length());
    for (int i = 0; i < ctx.d; ++i) {
        const LinearCode img = frobenius(code, i * ctx.r);
        total += img.log_cardinality();
        acc = sum(acc, img);
    }
    const bool complete = total == full && acc.log_cardinality() == full;
    if (complete && !code.is_free())
        raise(ErrorKind::InvariantViolation, "complete disjoint code is not free");
    return complete;
}

void require_sigma_stable(const FactorSet& fs, const GaloisContext& ctx) {
    for (const auto& f : fs.factors) {
        const Poly image = frobenius(f, ctx.r);
        if (std::find(fs.factors.begin(), fs.factors.end(), image) == fs.factors.end())
            raise(ErrorKind::SigmaUnstableAmbient, "sigma^r does not permute the factors of " +
                                                       fs.modulus_poly.to_string());
    }
}

bool free_disjoint_criterion(const Poly& g, const GaloisContext& ctx, const FactorSet& fs) {
    require_sigma_stable(fs, ctx);
    const int n = fs.modulus_poly.degree();
    for (int i = 1; i < ctx.d; ++i) {
        const std::vector<Poly> pair{g, frobenius(g, i * ctx.r)};
        if (mu(pair, fs).degree() < n) return false;
    }
    return true;
}

bool complete_criterion(const Poly& g, const GaloisContext& ctx, const FactorSet& fs) {
    require_sigma_stable(fs, ctx);
    const int n = fs.modulus_poly.degree();
    if (g.degree() * ctx.d != (ctx.d - 1) * n) return false;
    return free_disjoint_criterion(g, ctx, fs);
}

namespace {
std::vector<Poly> conjugates(const Poly& g, const GaloisContext& ctx) {
    std::vector<Poly> out;
    for (int i = 0; i < ctx.d; ++i) out.push_back(frobenius(g, i * ctx.r));
    return out;
}
}  // namespace

Poly mu_d(const Poly& g, const GaloisContext& ctx, const FactorSet& fs) {
    require_sigma_stable(fs, ctx);
    return mu(conjugates(g, ctx), fs);
}

Poly delta_d(const Poly& g, const GaloisContext& ctx, const FactorSet& fs) {
    require_sigma_stable(fs, ctx);
    return delta(conjugates(g, ctx), fs);
}

// ---------------------------------------------------------------------------
// Restriction and trace

LinearCode restriction(const LinearCode& code, const Extension& ext) {
    if (!(code.ring() == ext.big())) raise(ErrorKind::RingMismatch, "code is not over the extension ring");
    // y ∈ (S_r)^n lies in C iff ⟨y; h⟩ = 0 for h ∈ C^⊥; split each h into its
    // components along 1, w, ..., w^{d-1}.
    const std::size_t n = code.length();
    const auto d = static_cast<std::size_t>(ext.ctx().d);
    std::vector<Vec> rows;
    const LinearCode dual = euclidean_dual(code);
    for (const auto& h : dual.basis()) {
        std::vector<Vec> split(d, zero_vec(ext.sub(), n));
        for (std::size_t k = 0; k < n; ++k) {
            const auto comps = ext.components(h[k]);
            for (std::size_t i = 0; i < d; ++i) split[i][k] = comps[i];
        }
        rows.insert(rows.end(), split.begin(), split.end());
    }
    return euclidean_dual(LinearCode(ext.sub(), n, rows));
}

LinearCode trace_code(const LinearCode& code, const Extension& ext) {
    if (!(code.ring() == ext.big())) raise(ErrorKind::RingMismatch, "code is not over the extension ring");
    const std::size_t n = code.length();
    std::vector<Vec> rows;
    RingElem wi = ext.big().one();
    for (int i = 0; i < ext.ctx().d; ++i) {
        for (const auto& b : code.basis()) {
            Vec t;
            t.reserve(n);
            for (const auto& x : b) t.push_back(trace(wi * x, ext.ctx()));
            auto sub = ext.restrict(t);
            if (!sub) raise(ErrorKind::InvariantViolation, "trace left the subring");
            rows.push_back(std::move(*sub));
        }
        wi *= ext.big().generator();
    }
    return LinearCode(ext.sub(), n, rows);
}

DelsartePair delsarte_pair(const PolycyclicCode& code, const Extension& ext) {
    const auto a_sub = ext.restrict(code.a().entries());
    if (!a_sub) raise(ErrorKind::InvalidArgument, "associate vector is not fixed by sigma^r");
    DelsartePair out;
    out.lhs = trace_code(annihilator_dual(code.code(), code.a()), ext);
    out.rhs = annihilator_dual(restriction(code.code(), ext), AssociateVector(*a_sub));
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace chaincode
