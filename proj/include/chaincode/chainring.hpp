#pragma once

/**
 * @file chainring.hpp
 * @brief Exact arithmetic in the Galois ring GR(p^a, m) and its residue field.
 *
 * Elements are stored in the power basis of Z_{p^a}[X]/<f> with f a monic basic
 * irreducible of degree m; the generator of that basis is written `w` in text form.
 * Only the unramified case (e = 1) is supported, so the maximal ideal is generated by
 * θ = p and the nilpotency index s equals a. Finite fields are the case a = 1.
 *
 * The Teichmüller coordinates, Frobenius automorphism σ and the relative trace
 * Tr_d = Σ σ^{ir} are all derived from the power-basis representation on demand.
 */

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaincode/error.hpp"

namespace chaincode {

/// Largest residue degree m an element can carry inline.
inline constexpr int kMaxResidueDegree = 12;

class RingElem;

struct RingSpec {
    std::int64_t p = 0;
    int char_exp = 0;  // a: the characteristic is p^a
    int m = 0;         // residue degree
    int e = 1;         // ramification index; always 1 here
    int s = 0;         // nilpotency index of θ (= char_exp when e = 1)
    std::int64_t q = 0;                 // p^a
    std::vector<std::int64_t> modulus;  // ascending coefficients, monic, size m + 1
};

namespace detail {
struct RingData;
}

/// Shared immutable handle to a ring. Copies are cheap; equality compares parameters.
class Ring {
public:
    Ring() = default;

    /// Builds GR(p^a, m). Without a modulus, the lexicographically least monic
    /// polynomial (coefficients compared from the constant term up) whose reduction
    /// mod p is irreducible is used.
    static Ring create(std::int64_t p, int char_exp, int m,
                       std::optional<std::vector<std::int64_t>> modulus = std::nullopt, int e = 1);

    static std::vector<std::int64_t> default_modulus(std::int64_t p, int char_exp, int m);

    bool valid() const noexcept { return data_ != nullptr; }
    const RingSpec& spec() const;

    std::int64_t p() const { return spec().p; }
    int char_exp() const { return spec().char_exp; }
    int m() const { return spec().m; }
    int s() const { return spec().s; }
    std::int64_t q() const { return spec().q; }
    bool is_field() const { return spec().char_exp == 1; }

    /// |S| = p^{am}. Throws Overflow when it does not fit in 64 bits.
    std::uint64_t size() const;

    /// GR(p, m) with the modulus reduced mod p. A field is its own residue field.
    Ring residue_field() const;

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(std::int64_t value) const;
    /// The power-basis generator `w` (the class of X).
    RingElem generator() const;
    /// θ = p.
    RingElem theta() const;
    RingElem element(std::span<const std::int64_t> coords) const;
    /// Inverse of RingElem::index().
    RingElem from_index(std::uint64_t index) const;
    /// Every element in index order. Intended for exhaustive scans of small rings.
    std::vector<RingElem> elements() const;

    /// "GR(4,2)", "Z4", "F4", ...
    std::string describe() const;

    friend bool operator==(const Ring& x, const Ring& y) noexcept;

private:
    explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::RingData> data_;
};

class RingElem {
public:
    using Coords = std::array<std::int32_t, kMaxResidueDegree>;

    RingElem() = default;

    const Ring& ring() const noexcept { return ring_; }
    std::int64_t coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::vector<std::int64_t> coords() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Σ coords[i] q^i; a bijection onto [0, |S|).
    std::uint64_t index() const;

    RingElem operator-() const;
    RingElem& operator+=(const RingElem& rhs);
    RingElem& operator-=(const RingElem& rhs);
    RingElem& operator*=(const RingElem& rhs);
    friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
    friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }
    friend RingElem operator*(RingElem lhs, const RingElem& rhs) { return lhs *= rhs; }

    friend bool operator==(const RingElem& x, const RingElem& y) noexcept;

    /// Canonical text form, a polynomial in `w`: "3*w+3", "w^2", "0".
    std::string to_string() const;

private:
    friend class Ring;
    friend RingElem divide_by_theta(const RingElem& x, int t);
    friend RingElem reduce_mod_theta_power(const RingElem& x, int t);
    friend RingElem lift(const RingElem& x, const Ring& target);

    Ring ring_;
    Coords c_{};
};

/// Strict total order on elements of one ring (by index).
bool element_less(const RingElem& x, const RingElem& y);

RingElem pow(const RingElem& x, std::uint64_t exponent);
bool is_unit(const RingElem& x);
/// Throws NonUnit unless theta_valuation(x) == 0.
RingElem inverse(const RingElem& x);

/// Largest t with x ∈ θ^t S; the valuation of 0 is s.
int theta_valuation(const RingElem& x);
/// θ^t as an element.
RingElem theta_power(const Ring& ring, int t);
/// A representative y with θ^t y = x, coordinates in [0, p^{a-t}). Requires valuation ≥ t.
RingElem divide_by_theta(const RingElem& x, int t);
/// The remainder of x modulo θ^t taken coordinate-wise (coordinates in [0, p^t)).
RingElem reduce_mod_theta_power(const RingElem& x, int t);

/// The residue map π : S → F_{p^m}.
RingElem residue(const RingElem& x);
/// Embeds an element of a ring with the same (p, m) by copying coordinates; used to lift
/// residue-field elements back to S.
RingElem lift(const RingElem& x, const Ring& target);

/// The Teichmüller representative of π(x): the fixpoint of y ↦ y^{p^m} above x.
RingElem teichmuller_representative(const RingElem& x);
/// (a_0, ..., a_{s-1}) with each a_t ∈ Γ(S) and x = Σ a_t θ^t.
std::vector<RingElem> teichmuller_decompose(const RingElem& x);
RingElem teichmuller_recompose(std::span<const RingElem> digits);
/// Γ(S), ordered by the index of the residue of each element.
std::vector<RingElem> teichmuller_set(const Ring& ring);

/// σ^k: raises every Teichmüller coordinate to the p^k-th power. k is taken mod m.
RingElem frobenius(const RingElem& x, int k);

/// A divisor pair m = r·d fixing S_r, σ^r and Tr_d.
struct GaloisContext {
    int r = 1;
    int d = 1;

    static GaloisContext make(const Ring& ring, int r);
    friend bool operator==(const GaloisContext&, const GaloisContext&) = default;
};

/// Tr_d(x) = Σ_{i<d} σ^{ir}(x).
RingElem trace(const RingElem& x, const GaloisContext& ctx);
/// True iff σ^r(x) = x.
bool in_subring(const RingElem& x, const GaloisContext& ctx);

}  // namespace chaincode
