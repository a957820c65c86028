#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "chaincode/galois.hpp"
#include "chaincode/oracle.hpp"

namespace chaincode {

namespace {

using Id = TabulatedRing::Id;

struct Entry {
    std::string label;
    LinearCode code;
    std::optional<Poly> g;  // generator of a free code, when known
    std::optional<StrongGroebnerBasis> declared;
};

struct Outcome {
    std::optional<bool> pass = true;
    std::string skipped;
    std::string counterexample;

    void fail(const std::string& where, const std::string& what) {
        if (pass == true) counterexample = where + ": " + what;
        pass = false;
    }
    void skip(std::string why) {
        pass = std::nullopt;
        skipped = std::move(why);
    }
    bool failed() const { return pass == false; }
};

class Suite {
public:
    explicit Suite(const SuiteParams& p)
        : p(p), t(p.ring), n(p.a.length()), ctx(GaloisContext::make(p.ring, p.r)) {
        if (!(p.a.ring() == p.ring)) raise(ErrorKind::RingMismatch, "associate vector over a different ring");
        fs = hensel_lift_factors(p.a.ambient());
        if (p.use_lattice) {
            for (auto& pt : lattice(*fs, p.a)) {
                Entry e;
                e.label = "j=(";
                for (std::size_t k = 0; k < pt.exponents.size(); ++k)
                    e.label += (k ? "," : "") + std::to_string(pt.exponents[k]);
                e.label += ")";
                e.code = pt.code.code();
                if (pt.is_free()) {
                    Poly g = Poly::constant(p.ring.one());
                    for (std::size_t k = 0; k < pt.exponents.size(); ++k)
                        if (pt.exponents[k] == p.ring.s()) g = g * fs->factors[k];
                    e.g = g;
                }
                corpus.push_back(std::move(e));
            }
        }
        if (p.subject) {
            Entry e;
            e.label = "subject";
            e.code = p.subject->code;
            e.declared = p.subject->sgb;
            if (e.declared && e.declared->size() == 1 && e.declared->front().lambda == 0) e.g = e.declared->front().g;
            if (e.code.is_zero()) e.g = p.a.ambient();
            corpus.push_back(std::move(e));
        }
        if (p.subject && !(p.subject->code.ring() == p.ring))
            raise(ErrorKind::RingMismatch, "subject code over a different ring");
        words_.resize(corpus.size());
    }

    const SuiteParams& p;
    TabulatedRing t;
    std::size_t n;
    GaloisContext ctx;
    std::optional<FactorSet> fs;
    std::vector<Entry> corpus;
    std::uint64_t scanned = 0;

    const CodewordSet& words(std::size_t i) {
        if (!words_[i]) words_[i] = enumerate(corpus[i].code, p.budget);
        scanned += words_[i]->size();
        return *words_[i];
    }
    CodewordSet words_of(const LinearCode& code) {
        CodewordSet out = enumerate(code, p.budget);
        scanned += out.size();
        return out;
    }
    CodewordSet dual(const std::vector<Vec>& spanning, DualForm form,
                     const std::optional<GaloisContext>& sub = std::nullopt) {
        CodewordSet out = brute_dual(t, n, spanning, form, p.a, sub, p.budget);
        scanned += space(sub);
        return out;
    }
    CodewordSet dual(const LinearCode& code, DualForm form) { return dual(code.generators().row_list(), form); }
    CodewordSet divisible(const Poly& g) {
        CodewordSet out = divisible_scan(t, n, g, p.budget);
        scanned += space(std::nullopt);
        return out;
    }
    /// |S|^n, or |S_r|^n.
    std::uint64_t space(const std::optional<GaloisContext>& sub) const {
        const std::uint64_t base = sub ? subring_ids(t, *sub).size() : t.size();
        std::uint64_t out = 1;
        for (std::size_t i = 0; i < n; ++i) out *= base;
        return out;
    }
    CodewordSet frob(const CodewordSet& c, int k) const {
        return map_entries(t, c, [&](Id x) {
            for (int i = 0; i < k; ++i) x = t.frobenius(x);
            return x;
        });
    }
    bool a_fixed() const { return std::all_of(p.a.entries().begin(), p.a.entries().end(), [&](const RingElem& x) {
        return in_subring(x, ctx);
    }); }
    std::string sigma_unstable() const {
        try {
            require_sigma_stable(*fs, ctx);
            return {};
        } catch (const Error& e) {
            return std::string(e.what());
        }
    }
    /// S_r-span of an S_r-code embedded in S^n.
    CodewordSet embedded(const Extension& ext, const LinearCode& sub_code) {
        std::vector<Vec> gens;
        for (const auto& b : sub_code.basis()) gens.push_back(ext.embed(b));
        CodewordSet out = span_set(t, n, gens, subring_ids(t, ctx), p.budget);
        scanned += out.size();
        return out;
    }
    CodewordSet zero_set() const { return CodewordSet{p.ring, n, {0}}; }

    bool oracle_disjoint(std::size_t i) {
        const CodewordSet& w = words(i);
        for (int k = 1; k < ctx.d; ++k)
            if (set_intersection(w, frob(w, k * ctx.r)).size() != 1) return false;
        return true;
    }
    bool oracle_complete(std::size_t i) {
        const CodewordSet& w = words(i);
        const std::uint64_t full = space(std::nullopt);
        std::uint64_t prod = 1;
        for (int k = 0; k < ctx.d; ++k) {
            prod *= w.size();
            if (prod > full) return false;
        }
        if (prod != full) return false;
        CodewordSet acc = zero_set();
        for (int k = 0; k < ctx.d; ++k) acc = sumset(t, acc, frob(w, k * ctx.r), p.budget);
        scanned += acc.size();
        return acc.size() == full;
    }

private:
    std::vector<std::optional<CodewordSet>> words_;
};

std::string str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

// Free generators of degree < n among the corpus, deduplicated.
std::vector<Poly> free_generators(const Suite& s) {
    std::vector<Poly> out;
    for (const auto& e : s.corpus)
        if (e.g && e.g->degree() < static_cast<int>(s.n) &&
            std::find(out.begin(), out.end(), *e.g) == out.end())
            out.push_back(*e.g);
    return out;
}

std::vector<std::vector<std::size_t>> combos(std::size_t count, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < count; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// Claims

void free_code_membership(Suite& s, Outcome& o) {
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!e.g) continue;
        any = true;
        const CodewordSet& w = s.words(i);
        if (!(s.divisible(*e.g) == w)) o.fail(e.label, "code differs from {c : g | Psi(c)} for g = " + e.g->to_string());
        if (!shift_invariant(s.t, w, s.p.a)) o.fail(e.label, "not invariant under D_a");
        if (e.g->degree() < static_cast<int>(s.n) &&
            !(s.words_of(free_build(s.p.ring, s.n, *e.g, s.p.a).code()) == w))
            o.fail(e.label, "free_build differs from the enumerated code");
    }
    if (!any) o.skip("no free code with a known generator");
}

void free_code_algebra(Suite& s, Outcome& o, int part) {
    const std::vector<Poly> gens = free_generators(s);
    if (gens.empty()) return o.skip("no free code of positive rank");
    std::vector<CodewordSet> w;
    for (const auto& g : gens) w.push_back(s.words_of(free_build(s.p.ring, s.n, g, s.p.a).code()));

    if (part == 1) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (divides(gens[i], gens[j]) != is_subset(w[j], w[i]))
                    o.fail(gens[i].to_string() + " | " + gens[j].to_string(), "divisibility and containment disagree");
        return;
    }
    std::vector<std::vector<std::size_t>> groups = combos(gens.size(), 2);
    for (auto& c : combos(gens.size(), 3)) groups.push_back(c);
    if (groups.empty()) groups.push_back({0});
    for (const auto& grp : groups) {
        std::vector<Poly> gs;
        std::string where = "{";
        for (auto k : grp) {
            gs.push_back(gens[k]);
            where += (where.size() > 1 ? ", " : "") + gens[k].to_string();
        }
        where += "}";
        const Poly mu_g = mu(gs, *s.fs);
        const Poly delta_g = delta(gs, *s.fs);
        if (part == 2) {
            CodewordSet inter = w[grp[0]];
            for (auto k : grp) inter = set_intersection(inter, w[k]);
            if (!(inter == s.words_of(free_build(s.p.ring, s.n, mu_g, s.p.a).code())))
                o.fail(where, "intersection differs from P(mu) with mu = " + mu_g.to_string());
            continue;
        }
        CodewordSet total = s.zero_set();
        LinearCode lib = LinearCode::zero(s.p.ring, s.n);
        for (auto k : grp) {
            total = sumset(s.t, total, w[k], s.p.budget);
            lib = sum(lib, free_build(s.p.ring, s.n, gens[k], s.p.a).code());
        }
        const CodewordSet bound = s.words_of(free_build(s.p.ring, s.n, delta_g, s.p.a).code());
        if (part == 3 && !is_subset(total, bound))
            o.fail(where, "sum is not inside P(delta) with delta = " + delta_g.to_string());
        if (part == 4 && lib.is_free() && mu_g.degree() <= static_cast<int>(s.n) && !(total == bound))
            o.fail(where, "free sum differs from P(delta) with delta = " + delta_g.to_string());
    }
}

void sgb_existence(Suite& s, Outcome& o) {
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (e.code.is_zero() || (e.code.is_free() && !e.declared)) continue;
        any = true;
        const StrongGroebnerBasis sgb = e.declared ? *e.declared : sgb_compute(e.code, s.p.a);
        const CodewordSet& w = s.words(i);
        if (!(s.words_of(from_sgb(sgb, s.p.a).code()) == w)) {
            o.fail(e.label, "basis " + to_string(sgb) + " does not generate the code");
            continue;
        }
        const SgbCheck chk = check_sgb(sgb, PolycyclicCode(e.code, s.p.a));
        if (!chk.valid) o.fail(e.label, "invalid basis " + to_string(sgb) + ": " + chk.issues.front());
        const TypeCardinality tc = sgb_type_card(sgb, s.p.ring, s.n);
        std::uint64_t log_size = 0;
        for (std::size_t k = w.size(); k > 1; k /= static_cast<std::size_t>(s.p.ring.p())) ++log_size;
        if (tc.log_cardinality != log_size) o.fail(e.label, "basis predicts the wrong cardinality");
        if (tc.type != e.code.type()) o.fail(e.label, "basis predicts type " + str(tc.type));
    }
    if (!any) o.skip("no non-free non-zero code");
}

void inner_product_form(Suite& s, Outcome& o) {
    const auto aw = s.t.ids(s.p.a.entries());
    const Matrix gram = gram_matrix(s.p.a);
    std::vector<Vec> units;
    for (std::size_t i = 0; i < s.n; ++i) {
        std::vector<Id> ei(s.n, 0), ej(s.n, 0);
        ei[i] = s.t.id(s.p.ring.one());
        units.push_back(s.t.vec(ei));
        for (std::size_t j = 0; j < s.n; ++j) {
            ej.assign(s.n, 0);
            ej[j] = s.t.id(s.p.ring.one());
            const Id x = annihilator_form(s.t, ei, ej, aw);
            if (x != annihilator_form(s.t, ej, ei, aw)) o.fail("e_i, e_j", "form is not symmetric");
            if (x != s.t.id(gram(i, j))) o.fail("gram", "library Gram entry differs from the form");
        }
    }
    if (!(s.dual(units, DualForm::annihilator) == s.zero_set())) o.fail("S^n", "form is degenerate");
}

void annihilator_via_gram(Suite& s, Outcome& o) {
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!(s.words_of(annihilator_dual(e.code, s.p.a)) == s.dual(e.code, DualForm::annihilator)))
            o.fail(e.label, "(C·A)^perp differs from the exhaustive annihilator dual");
    }
}

void dual_types(Suite& s, Outcome& o) {
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        const auto brute_ann = to_code(s.t, s.dual(e.code, DualForm::annihilator)).type();
        const auto brute_euc = to_code(s.t, s.dual(e.code, DualForm::euclidean)).type();
        if (brute_ann != brute_euc) o.fail(e.label, "types " + str(brute_ann) + " and " + str(brute_euc));
        if (annihilator_dual(e.code, s.p.a).type() != euclidean_dual(e.code).type())
            o.fail(e.label, "library duals have different types");
    }
}

void dual_involutions(Suite& s, Outcome& o) {
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        const CodewordSet& w = s.words(i);
        const CodewordSet ann = s.dual(e.code, DualForm::annihilator);
        if (!(s.dual(to_code(s.t, ann).generators().row_list(), DualForm::annihilator) == w))
            o.fail(e.label, "exhaustive (C°)° differs from C");
        if (!(s.words_of(annihilator_dual(annihilator_dual(e.code, s.p.a), s.p.a)) == w))
            o.fail(e.label, "library (C°)° differs from C");
        const CodewordSet euc = s.dual(e.code, DualForm::euclidean);
        if (static_cast<std::uint64_t>(w.size()) * euc.size() != s.space(std::nullopt))
            o.fail(e.label, "|C|·|C^perp| differs from |S|^n");
        if (!(s.words_of(euclidean_dual(euclidean_dual(e.code))) == w))
            o.fail(e.label, "library (C^perp)^perp differs from C");
    }
}

void cyclic_iff_sequential(Suite& s, Outcome& o) {
    auto check = [&](const std::string& label, const CodewordSet& w, const std::vector<Vec>& spanning) {
        const bool cyclic = shift_invariant(s.t, w, s.p.a);
        const bool sequential = shift_invariant(s.t, s.dual(spanning, DualForm::euclidean), s.p.a, true);
        if (cyclic != sequential)
            o.fail(label, std::string("a-cyclic is ") + (cyclic ? "true" : "false") + " but the dual's sequential is " +
                              (sequential ? "true" : "false"));
    };
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        check(e.label, s.words(i), e.code.generators().row_list());
        if (is_sequential(euclidean_dual(e.code), s.p.a) != shift_invariant(s.t, s.words(i), s.p.a))
            o.fail(e.label, "library is_sequential disagrees");
    }
    // Codes spanned by one vector are mostly not a-cyclic, which exercises the other direction.
    if (s.space(std::nullopt) <= 4096) {
        const std::size_t total = s.space(std::nullopt);
        for (std::size_t k = 1; k < total; ++k) {
            const Vec v = s.t.vec(s.t.unpack(k, s.n));
            check("span" + to_string(v), span_set(s.t, s.n, {v}, s.p.budget), {v});
        }
    }
}

void annihilator_invariance(Suite& s, Outcome& o) {
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!shift_invariant(s.t, s.words_of(annihilator_dual(e.code, s.p.a)), s.p.a))
            o.fail(e.label, "C° is not invariant under D_a");
    }
}

void free_annihilator(Suite& s, Outcome& o) {
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!e.g || e.code.is_zero()) continue;
        any = true;
        const Poly h = divmod_monic(s.p.a.ambient(), *e.g).quotient;
        const CodewordSet brute = s.dual(e.code, DualForm::annihilator);
        if (!(s.words_of(free_build(s.p.ring, s.n, h, s.p.a).code()) == brute))
            o.fail(e.label, "C° differs from P(h) with h = " + h.to_string());
        if (!(s.words_of(annihilator_dual_free(PolycyclicCode(e.code, s.p.a)).code()) == brute))
            o.fail(e.label, "annihilator_dual_free differs from the exhaustive dual");
    }
    if (!any) o.skip("requires a non-zero free code");
}

void galois_sgb(Suite& s, Outcome& o) {
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (e.code.is_zero() || (e.code.is_free() && !e.declared)) continue;
        any = true;
        const StrongGroebnerBasis sgb = e.declared ? *e.declared : sgb_compute(e.code, s.p.a);
        for (int k = 1; k < s.p.ring.m(); ++k) {
            const AssociateVector ak(frobenius(s.p.a.entries(), k));
            const CodewordSet image = s.frob(s.words(i), k);
            if (!shift_invariant(s.t, image, ak)) o.fail(e.label, "sigma^" + std::to_string(k) + "(C) is not cyclic");
            StrongGroebnerBasis expected;
            for (const auto& el : sgb) expected.push_back({el.lambda, frobenius(el.g, k)});
            if (!(s.words_of(from_sgb(expected, ak).code()) == image))
                o.fail(e.label, "sigma^" + std::to_string(k) + " of the basis does not generate sigma^k(C)");
            const SgbCheck chk = check_sgb(expected, PolycyclicCode(frobenius(e.code, k), ak));
            if (!chk.valid) o.fail(e.label, "sigma^" + std::to_string(k) + " of the basis: " + chk.issues.front());
        }
    }
    if (!any) o.skip("no non-free non-zero code");
}

void disjoint_criterion(Suite& s, Outcome& o, bool complete) {
    if (const auto why = s.sigma_unstable(); !why.empty()) return o.skip(why);
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!e.g) continue;
        any = true;
        const bool crit = complete ? complete_criterion(*e.g, s.ctx, *s.fs) : free_disjoint_criterion(*e.g, s.ctx, *s.fs);
        const bool scan = complete ? s.oracle_complete(i) : s.oracle_disjoint(i);
        if (crit != scan)
            o.fail(e.label, std::string("criterion says ") + (crit ? "true" : "false") + ", scan says " +
                                (scan ? "true" : "false"));
    }
    if (!any) o.skip("no free code with a known generator");
}

void complete_is_free(Suite& s, Outcome& o) {
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        const bool scan = s.oracle_complete(i);
        if (scan && !e.code.is_free()) o.fail(e.label, "complete disjoint but of type " + str(e.code.type()));
        if (is_complete_disjoint(e.code, s.ctx) != scan) o.fail(e.label, "library is_complete_disjoint disagrees");
    }
}

void restriction_trace(Suite& s, Outcome& o, int part) {
    if (const auto why = s.sigma_unstable(); !why.empty()) return o.skip(why);
    if (!s.a_fixed()) return o.skip("associate vector is not fixed by sigma^r");
    const Extension ext = Extension::make(s.p.ring, s.p.r);
    const AssociateVector a_sub(*ext.restrict(s.p.a.entries()));
    const auto fixed = subring_ids(s.t, s.ctx);
    bool any = false;
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        if (!e.g) continue;
        any = true;
        const CodewordSet& w = s.words(i);
        if (part == 1) {
            const auto mu_r = ext.restrict(mu_d(*e.g, s.ctx, *s.fs));
            if (!mu_r) {
                o.fail(e.label, "mu_d(g) is not over S_r");
                continue;
            }
            const CodewordSet res = filter_entries(s.t, w, [&](Id x) { return std::binary_search(fixed.begin(), fixed.end(), x); });
            if (!(s.embedded(ext, free_build(ext.sub(), s.n, *mu_r, a_sub).code()) == res))
                o.fail(e.label, "Res_r(C) differs from P(S_r; n; mu_d) with mu_d = " + mu_r->to_string());
            if (!(s.embedded(ext, restriction(e.code, ext)) == res))
                o.fail(e.label, "library restriction differs from the scan");
        } else {
            const auto delta_r = ext.restrict(delta_d(*e.g, s.ctx, *s.fs));
            if (!delta_r) {
                o.fail(e.label, "delta_d(g) is not over S_r");
                continue;
            }
            const CodewordSet tr = map_entries(s.t, w, [&](Id x) { return trace_id(s.t, s.ctx, x); });
            const CodewordSet bound = s.embedded(ext, free_build(ext.sub(), s.n, *delta_r, a_sub).code());
            if (!is_subset(tr, bound)) o.fail(e.label, "Tr_d(C) is not inside P(S_r; n; delta_d)");
            LinearCode images = LinearCode::zero(s.p.ring, s.n);
            for (int k = 0; k < s.ctx.d; ++k) images = sum(images, frobenius(e.code, k * s.ctx.r));
            if (images.is_free() && mu_d(*e.g, s.ctx, *s.fs).degree() <= static_cast<int>(s.n) && !(tr == bound))
                o.fail(e.label, "Tr_d(C) differs from P(S_r; n; delta_d) under the equality hypotheses");
            if (!(s.embedded(ext, trace_code(e.code, ext)) == tr))
                o.fail(e.label, "library trace code differs from the entrywise traces");
        }
    }
    if (!any) o.skip("no free code with a known generator");
}

void delsarte(Suite& s, Outcome& o) {
    if (!s.a_fixed()) return o.skip("associate vector is not fixed by sigma^r");
    const Extension ext = Extension::make(s.p.ring, s.p.r);
    const auto fixed = subring_ids(s.t, s.ctx);
    for (std::size_t i = 0; i < s.corpus.size(); ++i) {
        const Entry& e = s.corpus[i];
        const CodewordSet lhs = map_entries(s.t, s.dual(e.code, DualForm::annihilator),
                                            [&](Id x) { return trace_id(s.t, s.ctx, x); });
        const CodewordSet res =
            filter_entries(s.t, s.words(i), [&](Id x) { return std::binary_search(fixed.begin(), fixed.end(), x); });
        std::vector<Vec> spanning;
        for (auto k : res.keys) spanning.push_back(s.t.vec(s.t.unpack(k, s.n)));
        const CodewordSet rhs = s.dual(spanning, DualForm::annihilator, s.ctx);
        if (!(lhs == rhs))
            o.fail(e.label, "|Tr(C°)| = " + std::to_string(lhs.size()) + ", |(Res C)°| = " + std::to_string(rhs.size()));
        const DelsartePair pair = delsarte_pair(PolycyclicCode(e.code, s.p.a), ext);
        if (!(s.embedded(ext, pair.lhs) == lhs) || !(s.embedded(ext, pair.rhs) == rhs))
            o.fail(e.label, "library delsarte_pair differs from the scans");
    }
}

struct Claim {
    ClaimInfo info;
    std::function<void(Suite&, Outcome&)> run;
};

const std::vector<Claim>& claims() {
    static const std::vector<Claim> table = {
        {{"P1", "P(S;n;g) = {c : g | Psi(c)}, and it is a-cyclic"}, free_code_membership},
        {{"L1.1", "g_i | g_j iff P_i contains P_j"}, [](Suite& s, Outcome& o) { free_code_algebra(s, o, 1); }},
        {{"L1.2", "the intersection of the P_i is P(mu)"}, [](Suite& s, Outcome& o) { free_code_algebra(s, o, 2); }},
        {{"L1.3", "the sum of the P_i lies in P(delta)"}, [](Suite& s, Outcome& o) { free_code_algebra(s, o, 3); }},
        {{"L1.4", "a free sum equals P(delta) when deg mu <= n"}, [](Suite& s, Outcome& o) { free_code_algebra(s, o, 4); }},
        {{"L2", "non-free non-zero a-cyclic codes have a strong Groebner basis"}, sgb_existence},
        {{"P2", "C is a-cyclic iff its Euclidean dual is a-sequential"}, cyclic_iff_sequential},
        {{"L3", "the a-inner product is symmetric and nondegenerate"}, inner_product_form},
        {{"L4", "C° = (C·A)^perp"}, annihilator_via_gram},
        {{"C1.1", "C^perp and C° have the same type"}, dual_types},
        {{"C1.2", "(C°)° = C, (C^perp)^perp = C and |C|·|C^perp| = |S|^n"}, dual_involutions},
        {{"P3", "C° of an a-cyclic code is a-cyclic"}, annihilator_invariance},
        {{"P4", "P(S;n;g)° = P(S;n;h) where gh = X^n - Psi(a)"}, free_annihilator},
        {{"P5", "sigma^i maps a strong Groebner basis of C to one of sigma^i(C)"}, galois_sgb},
        {{"P6", "P(S;n;g) is <sigma^r>-disjoint iff deg mu(g, sigma^ir(g)) >= n"},
         [](Suite& s, Outcome& o) { disjoint_criterion(s, o, false); }},
        {{"L5", "complete <sigma^r>-disjoint codes are free"}, complete_is_free},
        {{"T1", "P(S;n;g) is complete disjoint iff deg g = (d-1)n/d and the P6 criterion holds"},
         [](Suite& s, Outcome& o) { disjoint_criterion(s, o, true); }},
        {{"T2.1", "Res_r(P(S;n;g)) = P(S_r;n;mu_d(g))"}, [](Suite& s, Outcome& o) { restriction_trace(s, o, 1); }},
        {{"T2.2", "Tr_d(P(S;n;g)) lies in P(S_r;n;delta_d(g)), with equality under its hypotheses"},
         [](Suite& s, Outcome& o) { restriction_trace(s, o, 2); }},
        {{"P7", "Tr_d(C°) = (Res_r(C))°"}, delsarte},
    };
    return table;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& c : claims()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

std::vector<ClaimResult> run_suite(const std::vector<std::string>& ids, const SuiteParams& params) {
    std::vector<const Claim*> selected;
    const bool all = ids.empty() || (ids.size() == 1 && ids.front() == "all");
    if (all) {
        for (const auto& c : claims()) selected.push_back(&c);
    } else {
        for (const auto& id : ids) {
            const auto it = std::find_if(claims().begin(), claims().end(), [&](const Claim& c) { return c.info.id == id; });
            if (it == claims().end()) raise(ErrorKind::InvalidArgument, "unknown claim '" + id + "'");
            selected.push_back(&*it);
        }
    }

    std::vector<ClaimResult> out;
    std::optional<Suite> suite;
    std::string setup_error;
    try {
        suite.emplace(params);
    } catch (const Error& e) {
        setup_error = std::string(e.what());
    }
    for (const Claim* c : selected) {
        ClaimResult r;
        r.claim = c->info.id;
        if (!suite) {
            r.pass = false;
            r.counterexample = "setup: " + setup_error;
            out.push_back(r);
            continue;
        }
        suite->scanned = 0;
        Outcome o;
        try {
            c->run(*suite, o);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BudgetExceeded) {
                o.skip(e.what());
            } else {
                o.pass = false;
                o.counterexample = std::string(e.what());
            }
        }
        r.pass = o.pass;
        r.skipped = o.skipped;
        r.counterexample = o.counterexample;
        r.scanned = suite->scanned;
        out.push_back(r);
    }
    return out;
}

std::string report_line(const ClaimResult& result, const SuiteParams& params) {
    nlohmann::ordered_json params_json;
    params_json["label"] = params.label;
    params_json["ring"] = params.ring.describe();
    params_json["modulus"] = params.ring.spec().modulus;
    params_json["n"] = params.a.length();
    std::vector<std::string> a;
    for (const auto& x : params.a.entries()) a.push_back(x.to_string());
    params_json["a"] = a;
    params_json["r"] = params.r;
    params_json["lattice"] = params.use_lattice;
    params_json["subject"] = params.subject.has_value();

    nlohmann::ordered_json j;
    j["claim"] = result.claim;
    j["params"] = params_json;
    j["pass"] = result.pass ? nlohmann::ordered_json(*result.pass) : nlohmann::ordered_json(nullptr);
    j["skipped"] = result.skipped.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(result.skipped);
    j["scanned"] = result.scanned;
    if (result.pass == false) j["counterexample"] = result.counterexample;
    return j.dump();
}

}  // namespace chaincode
