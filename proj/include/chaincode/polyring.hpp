#pragma once

/**
 * @file polyring.hpp
 * @brief Polynomials over GR(p^a, m) and over its residue field.
 *
 * Besides the ring operations this covers what the code layers need from S[X]:
 * exact division by monic polynomials, square-free factorisation over F_{p^m} by
 * trial division, linear θ-adic Hensel lifting of that factorisation, the period
 * of X modulo X^n - π(Ψ(a)), and the lcm/gcd-lift operators μ and δ taken
 * relative to a fixed factorisation.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaincode/chainring.hpp"

namespace chaincode {

class Poly {
public:
    Poly() = default;
    /// The zero polynomial over `ring`.
    explicit Poly(Ring ring);
    /// Ascending coefficients; trailing zeros are stripped.
    Poly(Ring ring, std::vector<RingElem> coeffs);

    static Poly constant(const RingElem& c);
    static Poly monomial(const RingElem& c, std::size_t degree);
    static Poly x(const Ring& ring);
    /// X^n - c.
    static Poly binomial(const Ring& ring, std::size_t n, const Poly& tail);

    const Ring& ring() const noexcept { return ring_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    bool is_one() const;

    std::span<const RingElem> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i (zero beyond the degree).
    RingElem coeff(std::size_t i) const;
    RingElem leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const RingElem& c, const Poly& f);
    friend bool operator==(const Poly& f, const Poly& g) noexcept;

    /// Multiplies by X^k.
    Poly shifted(std::size_t k) const;
    RingElem eval(const RingElem& x) const;
    Poly derivative() const;

    /// Text form such as "X^5 + 2*X^3 + (2*w+2)*X + w".
    std::string to_string() const;

private:
    void normalize();

    Ring ring_;
    std::vector<RingElem> coeffs_;
};

/// Canonical order: ascending degree, then coefficients compared from X^0 upward by index.
bool poly_less(const Poly& f, const Poly& g);

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// f = q·g + r with deg r < deg g. Throws NonMonicDivisor unless g is monic.
DivMod divmod_monic(const Poly& f, const Poly& g);
Poly rem_monic(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);

/// Coefficient-wise π into the residue field.
Poly residue(const Poly& f);
/// Coefficient-wise coordinate lift (e.g. from F_{p^m}[X] back to S[X]).
Poly lift(const Poly& f, const Ring& target);
/// Coefficient-wise σ^k.
Poly frobenius(const Poly& f, int k);
Poly divide_by_theta(const Poly& f, int t);
/// Minimum θ-valuation over the coefficients (s for the zero polynomial).
int theta_valuation(const Poly& f);

// Field-only helpers (the ring must be a field).
Poly make_monic(const Poly& f);
Poly gcd(const Poly& f, const Poly& g);
struct Bezout {
    Poly gcd;
    Poly u;  // u·f + v·g = gcd
    Poly v;
};
Bezout extended_gcd(const Poly& f, const Poly& g);
/// Exact quotient over a field; throws NotADivisor if the division leaves a remainder.
Poly exact_quotient(const Poly& f, const Poly& g);
bool is_square_free(const Poly& f);

/// Monic irreducible factors of a monic square-free f over F_{p^m}, by trial division in
/// ascending (degree, coefficient) order. The output is sorted canonically.
std::vector<Poly> field_factor_squarefree(const Poly& f);

/// X^n - Ψ(a) = Π f_j with f_j monic basic irreducible and pairwise coprime residues.
struct FactorSet {
    Poly modulus_poly;
    std::vector<Poly> factors;

    /// Bit j set iff factors[j] divides g; throws NotADivisor unless g is exactly the
    /// product of the selected factors.
    std::uint64_t subset_of(const Poly& g) const;
    Poly product(std::uint64_t mask) const;
    std::uint64_t full_mask() const;
};

/// Factors a monic f whose residue is square-free into its unique monic basic irreducible
/// factors. Throws NotSquareFree.
FactorSet hensel_lift_factors(const Poly& f);
/// Lifts a given residue factorisation (monic, pairwise coprime, in any order). The
/// result is sorted canonically, so it does not depend on the input order.
FactorSet hensel_lift_factors(const Poly& f, std::span<const Poly> residue_factors);

inline constexpr std::uint64_t kDefaultPeriodCap = std::uint64_t{1} << 20;

/// ℓ = min{i ≥ 1 : X^n - π(tail) divides X^i - 1}, where tail = Ψ(a).
std::uint64_t period(std::size_t n, const Poly& tail, std::uint64_t cap = kDefaultPeriodCap);

/// Hensel lift of lcm / gcd of the residues, realised as the product of the union /
/// intersection of the factor subsets each input selects in `fs`.
Poly mu(std::span<const Poly> polys, const FactorSet& fs);
Poly delta(std::span<const Poly> polys, const FactorSet& fs);

/// f = θ^t · unit · monic, with `monic` of degree deg π(f/θ^t) and `unit` a unit of S[X]
/// whose residue is the constant leading coefficient of π(f/θ^t).
struct RegularDecomposition {
    int t = 0;
    Poly unit;
    Poly monic;
};
RegularDecomposition regular_decompose(const Poly& f);

}  // namespace chaincode
