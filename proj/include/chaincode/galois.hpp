#pragma once

/**
 * @file galois.hpp
 * @brief The σ-action on codes, Galois disjointness, and trace / restriction codes.
 *
 * S_r = {x ∈ S : σ^r(x) = x} is built as a ring of its own, GR(p^a, r), whose
 * power-basis generator maps to a Teichmüller element ζ of S. S is free over S_r
 * with basis 1, w, ..., w^{d-1}, which is what the trace and restriction codes use.
 */

#include <optional>
#include <vector>

#include "chaincode/polycyclic.hpp"

namespace chaincode {

class Extension {
public:
    /// S_r ⊆ S for a divisor r of m.
    static Extension make(const Ring& big, int r);

    const Ring& big() const noexcept { return big_; }
    const Ring& sub() const noexcept { return sub_; }
    const GaloisContext& ctx() const noexcept { return ctx_; }
    /// Image of the generator of S_r inside S.
    const RingElem& zeta() const noexcept { return zeta_; }

    RingElem embed(const RingElem& y) const;
    Vec embed(const Vec& v) const;
    Poly embed(const Poly& f) const;
    LinearCode embed(const LinearCode& code) const;
    AssociateVector embed(const AssociateVector& a) const;

    /// nullopt unless x ∈ S_r.
    std::optional<RingElem> restrict(const RingElem& x) const;
    std::optional<Vec> restrict(const Vec& v) const;
    std::optional<Poly> restrict(const Poly& f) const;

    /// (c_0, ..., c_{d-1}) ∈ S_r^d with x = Σ c_i w^i.
    std::vector<RingElem> components(const RingElem& x) const;

private:
    Ring big_, sub_, zq_;
    GaloisContext ctx_;
    RingElem zeta_;
    Matrix to_mixed_;  // power-basis coordinates -> coordinates in {ζ^j w^i}
};

/// σ^i(C), which is σ^i(a)-cyclic.
PolycyclicCode sigma_code(const PolycyclicCode& code, int i);
/// σ^{ir}(C) for i = 0, ..., d-1.
std::vector<PolycyclicCode> orbit(const PolycyclicCode& code, const GaloisContext& ctx);

/// σ^{ir}(C) ∩ C = {0} for 1 ≤ i < d.
bool is_galois_disjoint(const LinearCode& code, const GaloisContext& ctx);
/// S^n = C ⊕ σ^r(C) ⊕ ... ⊕ σ^{r(d-1)}(C).
bool is_complete_disjoint(const LinearCode& code, const GaloisContext& ctx);

/// Throws SigmaUnstableAmbient unless σ^r permutes the factors of fs.
void require_sigma_stable(const FactorSet& fs, const GaloisContext& ctx);
/// deg μ(g, σ^{ir}(g)) ≥ n for 1 ≤ i < d.
bool free_disjoint_criterion(const Poly& g, const GaloisContext& ctx, const FactorSet& fs);
/// deg g = (d - 1)n/d and the free criterion.
bool complete_criterion(const Poly& g, const GaloisContext& ctx, const FactorSet& fs);
/// μ / δ of (g, σ^r(g), ..., σ^{r(d-1)}(g)).
Poly mu_d(const Poly& g, const GaloisContext& ctx, const FactorSet& fs);
Poly delta_d(const Poly& g, const GaloisContext& ctx, const FactorSet& fs);

/// Res_r(C) = C ∩ (S_r)^n, as a code over S_r.
LinearCode restriction(const LinearCode& code, const Extension& ext);
/// Tr_d(C), as a code over S_r.
LinearCode trace_code(const LinearCode& code, const Extension& ext);

struct DelsartePair {
    LinearCode lhs;  // Tr_d(C°)
    LinearCode rhs;  // (Res_r(C))°
    bool equal = false;
};
/// Requires σ^r(a) = a (InvalidArgument otherwise), so that (Res_r C)° is taken with
/// the same a over S_r.
DelsartePair delsarte_pair(const PolycyclicCode& code, const Extension& ext);

}  // namespace chaincode
