#pragma once

/**
 * @file polycyclic.hpp
 * @brief a-cyclic (polycyclic) codes, i.e. ideals of S[X]/<X^n - Ψ(a)>.
 *
 * Codes are held both as a LinearCode and as a strong Gröbner basis
 * {θ^{λ_1} g_1, ..., θ^{λ_u} g_u}. The basis is extracted from the code by a
 * θ-adic echelon over columns in descending degree, so for a given code it is
 * canonical; a user-supplied basis can be validated with check_sgb.
 */

#include <optional>
#include <string>
#include <vector>

#include "chaincode/lincode.hpp"

namespace chaincode {

struct SgbElement {
    int lambda = 0;
    Poly g;

    friend bool operator==(const SgbElement&, const SgbElement&) = default;
};
using StrongGroebnerBasis = std::vector<SgbElement>;

class PolycyclicCode {
public:
    PolycyclicCode() = default;
    /// Throws NotInvariant unless C·D_a = C, NotSquareFreeAmbient unless π(X^n - Ψ(a))
    /// is square-free.
    PolycyclicCode(LinearCode code, AssociateVector a);

    const LinearCode& code() const noexcept { return code_; }
    const AssociateVector& a() const noexcept { return a_; }
    const FactorSet& factor_set() const noexcept { return fs_; }
    /// Empty for the zero code.
    const StrongGroebnerBasis& sgb() const noexcept { return sgb_; }
    const Ring& ring() const noexcept { return code_.ring(); }
    std::size_t length() const noexcept { return code_.length(); }
    bool is_free() const { return code_.is_free(); }

    /// The generator polynomial of a free code (X^n - Ψ(a) for the zero code).
    /// Throws NotFree.
    Poly generator() const;

private:
    LinearCode code_;
    AssociateVector a_;
    FactorSet fs_;
    StrongGroebnerBasis sgb_;
};

/// M_ω(g): rows X^i g for i < ω, as vectors of length n.
Matrix generator_block(const Poly& g, std::size_t omega, std::size_t n);

/// P(S; n; g). Without `a`, Ψ(a) is the remainder of X^n by g (and a is cyclic when
/// g is constant). deg g ≥ n yields the zero code.
PolycyclicCode free_build(const Ring& ring, std::size_t n, const Poly& g,
                          const std::optional<AssociateVector>& a = std::nullopt);

/// g | Ψ(v), for a free code.
bool member_by_division(const Vec& v, const PolycyclicCode& p);

/// The smallest D_a-invariant code containing Ψ^{-1}(gens mod X^n - Ψ(a)).
PolycyclicCode ideal_closure(const std::vector<Poly>& gens, const AssociateVector& a);

/// Strong Gröbner basis of a non-zero D_a-invariant code. Throws ZeroCode.
StrongGroebnerBasis sgb_compute(const LinearCode& code, const AssociateVector& a);

/// The code generated by a declared basis: ideal_closure of {θ^λ g}.
PolycyclicCode from_sgb(const StrongGroebnerBasis& sgb, const AssociateVector& a);

struct SgbCheck {
    bool valid = true;
    /// Some g_i has degree 0, which the strict degree condition excludes.
    bool degree_zero = false;
    std::vector<std::string> issues;
};
/// Checks the ordering, monicity, degree and residue-divisibility conditions, and that
/// the basis generates `code`.
SgbCheck check_sgb(const StrongGroebnerBasis& sgb, const PolycyclicCode& code);

struct TypeCardinality {
    std::vector<int> type;
    std::uint64_t log_cardinality = 0;  // log_p |C|
};
/// k_t = k_{i-1} - k_i for λ_i = t (k_0 = n); log_p |C| = Σ m(s - λ_i)(k_{i-1} - k_i).
TypeCardinality sgb_type_card(const StrongGroebnerBasis& sgb, const Ring& ring, std::size_t n);

/// Stacked blocks θ^{λ_i} M_{k_{i-1} - k_i}(g_i).
Matrix sgb_matrix(const StrongGroebnerBasis& sgb, const Ring& ring, std::size_t n);

/// ⟨u; v⟩_a: the constant term of Ψ(u)Ψ(v) mod X^n - Ψ(a).
RingElem inner_product_a(const Vec& u, const Vec& v, const AssociateVector& a);
/// A_ij = ⟨e_i; e_j⟩_a.
Matrix gram_matrix(const AssociateVector& a);

/// C° = (C·A)^⊥. Throws SingularGram if A is not invertible.
LinearCode annihilator_dual(const LinearCode& code, const AssociateVector& a);
PolycyclicCode annihilator_dual(const PolycyclicCode& p);
/// P(S; n; h) with gh = X^n - Ψ(a). Throws NotFree, ZeroCode.
PolycyclicCode annihilator_dual_free(const PolycyclicCode& p);

/// C·D_a^tr = C.
bool is_sequential(const LinearCode& code, const AssociateVector& a);

std::string to_string(const StrongGroebnerBasis& sgb);

}  // namespace chaincode
