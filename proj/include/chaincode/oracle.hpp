#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive ground truth for small parameters, and the claim suite built on it.
 *
 * Everything here works on table-driven arithmetic over element indices and on
 * sorted sets of packed codewords, and never calls the standard-form or duality
 * machinery it is meant to check. Every scan is bounded by a budget (2^20 vectors
 * unless CHAINCODE_BUDGET says otherwise) and raises BudgetExceeded past it.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chaincode/polycyclic.hpp"

namespace chaincode {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// CHAINCODE_BUDGET if set to a positive integer, otherwise kDefaultBudget.
std::uint64_t default_budget();

/// Addition and multiplication tables over element indices.
class TabulatedRing {
public:
    using Id = std::uint32_t;

    TabulatedRing() = default;
    /// Throws BudgetExceeded for rings with more than 4096 elements.
    explicit TabulatedRing(const Ring& ring);

    const Ring& ring() const noexcept { return ring_; }
    Id size() const noexcept { return size_; }
    Id add(Id x, Id y) const { return add_[x * size_ + y]; }
    Id mul(Id x, Id y) const { return mul_[x * size_ + y]; }
    Id neg(Id x) const { return neg_[x]; }
    Id frobenius(Id x) const { return frob_[x]; }

    Id id(const RingElem& x) const;
    const RingElem& elem(Id x) const { return elems_[x]; }

    /// Codewords are packed as Σ id_i |S|^i. Throws Overflow when |S|^n exceeds 64 bits.
    std::uint64_t pack(const std::vector<Id>& v) const;
    std::vector<Id> unpack(std::uint64_t key, std::size_t n) const;
    std::vector<Id> ids(const Vec& v) const;
    Vec vec(const std::vector<Id>& v) const;
    /// pack(unpack(x) + unpack(y)) without the round trip.
    std::uint64_t add_keys(std::uint64_t x, std::uint64_t y, std::size_t n) const;

private:
    Ring ring_;
    Id size_ = 0;
    int shift_ = 0;  // log2 |S| when |S| is a power of two, else 0
    std::vector<Id> add_, mul_, neg_, frob_;
    std::vector<RingElem> elems_;
};

/// Ids of the elements fixed by σ^r, ascending.
std::vector<TabulatedRing::Id> subring_ids(const TabulatedRing& t, const GaloisContext& ctx);
/// Tr_d on ids.
TabulatedRing::Id trace_id(const TabulatedRing& t, const GaloisContext& ctx, TabulatedRing::Id x);

/// A set of codewords of S^n, sorted by key.
struct CodewordSet {
    Ring ring;
    std::size_t n = 0;
    std::vector<std::uint64_t> keys;

    std::size_t size() const noexcept { return keys.size(); }
    bool contains(std::uint64_t key) const;
    friend bool operator==(const CodewordSet& x, const CodewordSet& y) { return x.n == y.n && x.keys == y.keys; }
};

/// Additive closure of {c·g : c ∈ S, g a generator}.
CodewordSet span_set(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& generators,
                     std::uint64_t budget = default_budget());
/// The same with scalars restricted to `scalars`, e.g. the S_r-span of embedded vectors.
CodewordSet span_set(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& generators,
                     const std::vector<TabulatedRing::Id>& scalars, std::uint64_t budget = default_budget());
CodewordSet enumerate(const LinearCode& code, std::uint64_t budget = default_budget());
/// Every codeword of C, sorted by vec_less. Throws BudgetExceeded.
std::vector<Vec> enumerate_codewords(const LinearCode& code, std::uint64_t budget = default_budget());

/// The packed keys of an explicit code, for comparisons against oracle sets.
bool same_code(const LinearCode& code, const CodewordSet& words, std::uint64_t budget = default_budget());

CodewordSet set_intersection(const CodewordSet& x, const CodewordSet& y);
/// {x + y} for additive subgroups x, y. Throws BudgetExceeded past the budget.
CodewordSet sumset(const TabulatedRing& t, const CodewordSet& x, const CodewordSet& y,
                   std::uint64_t budget = default_budget());
bool is_subset(const CodewordSet& x, const CodewordSet& y);
/// Entrywise image under f.
CodewordSet map_entries(const TabulatedRing& t, const CodewordSet& c,
                        const std::function<TabulatedRing::Id(TabulatedRing::Id)>& f);
/// Codewords whose entries all satisfy keep.
CodewordSet filter_entries(const TabulatedRing& t, const CodewordSet& c,
                           const std::function<bool(TabulatedRing::Id)>& keep);
/// c·D_a ∈ C for every codeword, with the shift written out directly; `transposed`
/// uses D_a^tr instead.
bool shift_invariant(const TabulatedRing& t, const CodewordSet& c, const AssociateVector& a, bool transposed = false);

/// ⟨u; v⟩_a by multiplying Ψ(u)Ψ(v) out and folding X^{n+k} = X^k Ψ(a).
TabulatedRing::Id annihilator_form(const TabulatedRing& t, const std::vector<TabulatedRing::Id>& u,
                                   const std::vector<TabulatedRing::Id>& v, const std::vector<TabulatedRing::Id>& a);

enum class DualForm { euclidean, annihilator };

/// All y in the scan domain with ⟨y, g⟩ = 0 for every g in `spanning`. The domain is S^n,
/// or (S_r)^n when `sub` is given. The annihilator form needs `a`.
CodewordSet brute_dual(const TabulatedRing& t, std::size_t n, const std::vector<Vec>& spanning, DualForm form,
                       const std::optional<AssociateVector>& a = std::nullopt,
                       const std::optional<GaloisContext>& sub = std::nullopt,
                       std::uint64_t budget = default_budget());
CodewordSet brute_dual(const LinearCode& code, DualForm form,
                       const std::optional<AssociateVector>& a = std::nullopt,
                       std::uint64_t budget = default_budget());

/// {c ∈ S^n : g | Ψ(c)}, by remaindering every vector against a monic g.
CodewordSet divisible_scan(const TabulatedRing& t, std::size_t n, const Poly& g,
                           std::uint64_t budget = default_budget());

/// Greedy generator set for the code spanned by a codeword set.
LinearCode to_code(const TabulatedRing& t, const CodewordSet& c);

struct IdealLatticePoint {
    std::vector<int> exponents;  // j_k ∈ {0, ..., s} per factor
    PolycyclicCode code;

    /// Π p^{m·deg(f_k)·(s - j_k)}, as log_p.
    std::uint64_t predicted_log_cardinality(const FactorSet& fs) const;
    /// All exponents in {0, s}.
    bool is_free() const;
};

/// One code per exponent tuple: the ideal generated by θ^{j_k} Π_{l≠k} f_l over all k.
std::vector<IdealLatticePoint> lattice(const FactorSet& fs, const AssociateVector& a);

// ---------------------------------------------------------------------------
// Claim suite

/// A code under test with an optional declared strong Gröbner basis.
struct Subject {
    LinearCode code;
    std::optional<StrongGroebnerBasis> sgb;
};

struct SuiteParams {
    std::string label;  // e.g. the preset name
    Ring ring;
    AssociateVector a;
    int r = 1;
    bool use_lattice = true;
    std::optional<Subject> subject;
    std::uint64_t budget = default_budget();
};

struct ClaimResult {
    std::string claim;
    std::optional<bool> pass;  // nullopt when skipped
    std::string skipped;
    std::uint64_t scanned = 0;
    std::string counterexample;
};

struct ClaimInfo {
    std::string id;
    std::string statement;
};
/// Registry order.
const std::vector<ClaimInfo>& claim_registry();

/// Runs the named claims, or all of them for an empty list or {"all"}. Unknown ids raise
/// InvalidArgument.
std::vector<ClaimResult> run_suite(const std::vector<std::string>& claims, const SuiteParams& params);

/// One JSON object per line: {"claim", "params", "pass", "skipped", "scanned"} plus
/// "counterexample" on failure.
std::string report_line(const ClaimResult& result, const SuiteParams& params);

}  // namespace chaincode
