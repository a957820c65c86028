#include "chaincode/polycyclic.hpp"

#include <algorithm>
#include <sstream>

namespace chaincode {

namespace {

int vec_degree(const Vec& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

FactorSet ambient_factors(const AssociateVector& a) {
    try {
        return hensel_lift_factors(a.ambient());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotSquareFree)
            raise(ErrorKind::NotSquareFreeAmbient, "residue of " + a.ambient().to_string() + " is not square-free");
        throw;
    }
}

LinearCode close_under_shift(std::vector<Vec> rows, const Matrix& d, const Ring& ring, std::size_t n) {
    LinearCode code(ring, n, rows);
    for (;;) {
        std::vector<Vec> fresh;
        for (const auto& b : code.basis()) {
            Vec next = b * d;
            if (!code.contains(next)) fresh.push_back(std::move(next));
        }
        if (fresh.empty()) return code;
        rows = code.basis();
        rows.insert(rows.end(), fresh.begin(), fresh.end());
        code = LinearCode(ring, n, rows);
    }
}

}  // namespace

PolycyclicCode::PolycyclicCode(LinearCode code, AssociateVector a) : code_(std::move(code)), a_(std::move(a)) {
    if (!(a_.ring() == code_.ring())) raise(ErrorKind::RingMismatch, "associate vector over a different ring");
    if (a_.length() != code_.length()) raise(ErrorKind::LengthMismatch, "associate vector has the wrong length");
    fs_ = ambient_factors(a_);
    if (!is_invariant(code_, shift_matrices(a_).d)) raise(ErrorKind::NotInvariant, "code is not a-cyclic");
    if (!code_.is_zero()) sgb_ = sgb_compute(code_, a_);
}

Poly PolycyclicCode::generator() const {
    if (!is_free()) raise(ErrorKind::NotFree, "code is not free");
    if (sgb_.empty()) return a_.ambient();
    return sgb_.front().g;
}

Matrix generator_block(const Poly& g, std::size_t omega, std::size_t n) {
    Matrix out(g.ring(), 0, n);
    for (std::size_t i = 0; i < omega; ++i) out.append_row(psi_inverse(g.shifted(i), n));
    return out;
}

PolycyclicCode free_build(const Ring& ring, std::size_t n, const Poly& g, const std::optional<AssociateVector>& a) {
    if (n == 0) raise(ErrorKind::InvalidArgument, "length must be positive");
    if (!(g.ring() == ring)) raise(ErrorKind::RingMismatch, "generator over a different ring");
    if (!g.is_monic()) raise(ErrorKind::NotMonic, g.to_string() + " is not monic");
    if (!is_unit(g.coeff(0))) raise(ErrorKind::NonUnitConstantTerm, "g(0) of " + g.to_string() + " is not a unit");

    AssociateVector assoc;
    if (a) {
        assoc = *a;
        if (assoc.length() != n) raise(ErrorKind::LengthMismatch, "associate vector has the wrong length");
        if (g.degree() <= static_cast<int>(n) && !divides(g, assoc.ambient()))
            raise(ErrorKind::NotADivisor, g.to_string() + " does not divide " + assoc.ambient().to_string());
    } else if (g.degree() == 0) {
        Vec cyclic = zero_vec(ring, n);
        cyclic[0] = ring.one();
        assoc = AssociateVector(std::move(cyclic));
    } else {
        if (g.degree() > static_cast<int>(n))
            raise(ErrorKind::InvalidArgument, "deg g exceeds n; an associate vector must be given");
        assoc = AssociateVector(psi_inverse(rem_monic(Poly::monomial(ring.one(), n), g), n));
    }

    const std::size_t k = static_cast<std::size_t>(g.degree());
    const LinearCode code = k >= n ? LinearCode::zero(ring, n) : LinearCode(generator_block(g, n - k, n));
    return PolycyclicCode(code, assoc);
}

bool member_by_division(const Vec& v, const PolycyclicCode& p) {
    const Poly g = p.generator();
    if (v.size() != p.length()) raise(ErrorKind::LengthMismatch, "vector has the wrong length");
    return rem_monic(psi(v), g).is_zero();
}

PolycyclicCode ideal_closure(const std::vector<Poly>& gens, const AssociateVector& a) {
    const Ring& ring = a.ring();
    const std::size_t n = a.length();
    const Poly ambient = a.ambient();
    std::vector<Vec> rows;
    for (const auto& g : gens) rows.push_back(psi_inverse(rem_monic(g, ambient), n));
    return PolycyclicCode(close_under_shift(std::move(rows), shift_matrices(a).d, ring, n), a);
}

StrongGroebnerBasis sgb_compute(const LinearCode& code, const AssociateVector& a) {
    if (code.is_zero()) raise(ErrorKind::ZeroCode, "the zero code has no strong Groebner basis");
    const Ring& ring = code.ring();
    const std::size_t n = code.length();
    const int s = ring.s();
    if (a.length() != n) raise(ErrorKind::LengthMismatch, "associate vector has the wrong length");

    // θ-adic echelon with columns in descending degree; every pivot contributes its
    // θ^{s-v} multiple back to the pool, so each degree gets its minimal leading valuation.
    std::vector<Vec> pool = code.basis();
    std::vector<Vec> pivot(n);
    std::vector<int> w(n, s);
    for (std::size_t d = n; d-- > 0;) {
        std::size_t best = pool.size();
        int best_v = s;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (vec_degree(pool[i]) != static_cast<int>(d)) continue;
            const int v = theta_valuation(pool[i][d]);
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        if (best == pool.size()) continue;
        Vec row = inverse(divide_by_theta(pool[best][d], best_v)) * pool[best];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        for (auto& other : pool)
            if (vec_degree(other) == static_cast<int>(d)) other = other - divide_by_theta(other[d], best_v) * row;
        pool.push_back(theta_power(ring, s - best_v) * row);
        std::erase_if(pool, [](const Vec& v) { return is_zero(v); });
        pivot[d] = std::move(row);
        w[d] = best_v;
    }

    for (std::size_t d = 0; d < n; ++d) {
        if (w[d] == s) continue;
        for (std::size_t e = d; e-- > 0;) {
            if (w[e] == s) continue;
            const RingElem x = pivot[d][e];
            const RingElem q = divide_by_theta(x - reduce_mod_theta_power(x, w[e]), w[e]);
            if (!q.is_zero()) pivot[d] = pivot[d] - q * pivot[e];
        }
    }

    StrongGroebnerBasis out;
    int prev = s;
    for (std::size_t d = 0; d < n; ++d) {
        if (w[d] > prev) raise(ErrorKind::NotInvariant, "leading valuations are not monotone in the degree");
        if (w[d] < prev) {
            out.push_back({w[d], divide_by_theta(psi(pivot[d]), w[d])});
            prev = w[d];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

PolycyclicCode from_sgb(const StrongGroebnerBasis& sgb, const AssociateVector& a) {
    std::vector<Poly> gens;
    for (const auto& e : sgb) {
        if (!(e.g.ring() == a.ring())) raise(ErrorKind::RingMismatch, "basis element over a different ring");
        gens.push_back(theta_power(a.ring(), e.lambda) * e.g);
    }
    return ideal_closure(gens, a);
}

SgbCheck check_sgb(const StrongGroebnerBasis& sgb, const PolycyclicCode& code) {
    SgbCheck out;
    auto fail = [&](std::string msg) {
        out.valid = false;
        out.issues.push_back(std::move(msg));
    };
    const int s = code.ring().s();
    const int n = static_cast<int>(code.length());
    if (sgb.empty()) {
        if (!code.code().is_zero()) fail("empty basis for a non-zero code");
        return out;
    }
    bool shape_ok = true;
    for (std::size_t i = 0; i < sgb.size(); ++i) {
        const auto& e = sgb[i];
        const std::string tag = "element " + std::to_string(i + 1) + ": ";
        if (e.lambda < 0 || e.lambda >= s) {
            fail(tag + "lambda out of range");
            shape_ok = false;
        }
        if (!e.g.is_monic()) {
            fail(tag + "not monic");
            shape_ok = false;
        }
        if (e.g.degree() >= n) {
            fail(tag + "degree not below n");
            shape_ok = false;
        }
        if (e.g.degree() == 0) out.degree_zero = true;
        if (i > 0) {
            if (e.lambda <= sgb[i - 1].lambda) fail(tag + "lambdas not strictly increasing");
            if (e.g.degree() >= sgb[i - 1].g.degree()) fail(tag + "degrees not strictly decreasing");
        }
    }
    if (!shape_ok) return out;

    Poly upper = residue(code.a().ambient());
    for (std::size_t i = 0; i < sgb.size(); ++i) {
        const Poly gbar = residue(sgb[i].g);
        if (!divides(gbar, upper)) fail("residue of element " + std::to_string(i + 1) + " does not divide its predecessor");
        upper = gbar;
    }
    if (!(from_sgb(sgb, code.a()).code() == code.code())) fail("basis does not generate the code");
    if (out.valid && !(LinearCode(sgb_matrix(sgb, code.ring(), code.length())) == code.code()))
        fail("stacked generator matrix does not generate the code");
    return out;
}

TypeCardinality sgb_type_card(const StrongGroebnerBasis& sgb, const Ring& ring, std::size_t n) {
    TypeCardinality out;
    out.type.assign(static_cast<std::size_t>(ring.s()), 0);
    int prev = static_cast<int>(n);
    for (const auto& e : sgb) {
        const int k = e.g.degree();
        if (k > prev || e.lambda < 0 || e.lambda >= ring.s())
            raise(ErrorKind::InvalidArgument, "basis is not ordered by decreasing degree");
        out.type[static_cast<std::size_t>(e.lambda)] += prev - k;
        out.log_cardinality += static_cast<std::uint64_t>(ring.m()) * static_cast<std::uint64_t>(ring.s() - e.lambda) *
                               static_cast<std::uint64_t>(prev - k);
        prev = k;
    }
    return out;
}

Matrix sgb_matrix(const StrongGroebnerBasis& sgb, const Ring& ring, std::size_t n) {
    Matrix out(ring, 0, n);
    int prev = static_cast<int>(n);
    for (const auto& e : sgb) {
        const int k = e.g.degree();
        if (k > prev || k < 0) raise(ErrorKind::InvalidArgument, "basis is not ordered by decreasing degree");
        const Matrix block = generator_block(theta_power(ring, e.lambda) * e.g, static_cast<std::size_t>(prev - k), n);
        for (std::size_t i = 0; i < block.rows(); ++i) out.append_row(block.row(i));
        prev = k;
    }
    return out;
}

RingElem inner_product_a(const Vec& u, const Vec& v, const AssociateVector& a) {
    if (u.size() != a.length() || v.size() != a.length()) raise(ErrorKind::LengthMismatch, "vector has the wrong length");
    return rem_monic(psi(u) * psi(v), a.ambient()).coeff(0);
}

Matrix gram_matrix(const AssociateVector& a) {
    const Ring& ring = a.ring();
    const std::size_t n = a.length();
    const Poly ambient = a.ambient();
    // Constant terms of X^k mod the ambient for k < 2n - 1.
    Vec c;
    Poly xk = Poly::constant(ring.one());
    for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
        c.push_back(xk.coeff(0));
        xk = rem_monic(xk.shifted(1), ambient);
    }
    Matrix out(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = c[i + j];
    return out;
}

LinearCode annihilator_dual(const LinearCode& code, const AssociateVector& a) {
    const Matrix gram = gram_matrix(a);
    try {
        (void)inverse(gram);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NonUnit) raise(ErrorKind::SingularGram, "Gram matrix is singular");
        throw;
    }
    return euclidean_dual(transform(code, gram));
}

PolycyclicCode annihilator_dual(const PolycyclicCode& p) {
    return PolycyclicCode(annihilator_dual(p.code(), p.a()), p.a());
}

PolycyclicCode annihilator_dual_free(const PolycyclicCode& p) {
    if (p.code().is_zero()) raise(ErrorKind::ZeroCode, "annihilator dual via h needs a non-zero code");
    const Poly g = p.generator();
    const DivMod qr = divmod_monic(p.a().ambient(), g);
    if (!qr.remainder.is_zero()) raise(ErrorKind::NotADivisor, "generator does not divide the ambient");
    return free_build(p.ring(), p.length(), qr.quotient, p.a());
}

bool is_sequential(const LinearCode& code, const AssociateVector& a) {
    return is_invariant(code, shift_matrices(a).d.transpose());
}

std::string to_string(const StrongGroebnerBasis& sgb) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < sgb.size(); ++i) {
        if (i) os << ", ";
        if (sgb[i].lambda > 0) os << sgb[i].g.ring().p() << "^" << sgb[i].lambda << "*";
        os << "(" << sgb[i].g.to_string() << ")";
    }
    os << "}";
    return os.str();
}

}  // namespace chaincode
