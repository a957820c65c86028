#include "chaincode/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "chaincode/galois.hpp"
#include "chaincode/io.hpp"
#include "chaincode/oracle.hpp"
#include "chaincode/presets.hpp"

namespace chaincode::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string preset, ring, a, poly, factor, g, sgb, generators, code;
    std::size_t n = 0;  // 0: not given
    int r = 0;          // 0: not given
    std::string form = "euclidean";
    std::string suite = "all";
    bool list = false;
    bool no_lattice = false;
};

// Key/value rows with the keys padded to a common width.
class Table {
public:
    void row(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void block(const std::string& key, const std::vector<std::string>& lines) {
        row(key, lines.empty() ? "(none)" : lines.front());
        for (std::size_t i = 1; i < lines.size(); ++i) row("", lines[i]);
    }
    void print(std::ostream& out) const {
        std::size_t w = 0;
        for (const auto& [k, v] : rows_) w = std::max(w, width(k));
        for (const auto& [k, v] : rows_) out << k << std::string(w - width(k) + 2, ' ') << v << "\n";
    }

private:
    // Code points, so that keys such as "Tr(C°)" line up.
    static std::size_t width(const std::string& s) {
        return static_cast<std::size_t>(
            std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
    }

    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join_ints(const std::vector<int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + ")";
}

std::string size_text(const Ring& ring, std::uint64_t log_card) {
    std::string out = std::to_string(ring.p()) + "^" + std::to_string(log_card);
    if (log_card < 63) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < log_card && v <= (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(ring.p()); ++i)
            v *= static_cast<std::uint64_t>(ring.p());
        if (v < (std::uint64_t{1} << 62)) out += " = " + std::to_string(v);
    }
    return out;
}

std::vector<std::string> row_lines(const std::vector<Vec>& rows) {
    std::vector<std::string> out;
    for (const auto& r : rows) out.push_back(to_string(r));
    return out;
}

std::string sgb_text(const StrongGroebnerBasis& sgb) { return sgb.empty() ? "(zero code)" : to_string(sgb); }

void describe(Table& t, const LinearCode& code) {
    t.row("ring", code.ring().describe());
    t.row("n", std::to_string(code.length()));
    t.row("type", join_ints(code.type()));
    t.row("|C|", size_text(code.ring(), code.log_cardinality()));
    t.row("free", code.is_free() ? "yes" : "no");
    t.block("generators", row_lines(code.basis()));
}

void describe(Table& t, const PolycyclicCode& pc) {
    t.row("ring", pc.ring().describe());
    t.row("n", std::to_string(pc.length()));
    t.row("a", to_string(pc.a().entries()));
    t.row("ambient", pc.a().ambient().to_string());
    t.row("sgb", sgb_text(pc.sgb()));
    t.row("type", join_ints(pc.code().type()));
    t.row("|C|", size_text(pc.ring(), pc.code().log_cardinality()));
    t.row("free", pc.is_free() ? "yes" : "no");
    t.block("generators", row_lines(pc.code().basis()));
}

class Session {
public:
    Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

    void emit(const Json& j, const Table& t) const {
        if (opt_.json)
            out_ << j.dump() << "\n";
        else
            t.print(out_);
    }

    std::string payload(const std::string& value) {
        if (value != "-") return value;
        if (stdin_used_) throw UsageError("only one payload can be read from stdin");
        stdin_used_ = true;
        return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }

    Json json_arg(const std::string& value) { return io::parse_json(payload(value)); }

    // A text polynomial, or a JSON coefficient list when it starts with '['.
    Json poly_arg(const std::string& value) {
        std::string text = payload(value);
        const auto start = text.find_first_not_of(" \t\r\n");
        if (start != std::string::npos && text[start] == '[') return io::parse_json(text);
        return Json(text);
    }

    std::optional<Preset> preset() const {
        if (opt_.preset.empty()) return std::nullopt;
        return chaincode::preset(opt_.preset);
    }

    Ring ring() {
        if (!opt_.ring.empty()) return io::ring_from_json(json_arg(opt_.ring));
        if (auto p = preset()) return p->ring;
        return Ring::create(2, 2, 1);
    }

    int subring_degree() const {
        if (opt_.r > 0) return opt_.r;
        if (auto p = preset()) return p->r;
        return 1;
    }

    bool explicit_code() const {
        return !opt_.code.empty() || !opt_.g.empty() || !opt_.sgb.empty() || !opt_.generators.empty();
    }

    // The code descriptor: --code, overridden by individual flags, completed from the
    // preset and finally from the defaults (Z4, the preset's bundled code).
    Json descriptor() {
        if (descriptor_) return *descriptor_;
        Json j = opt_.code.empty() ? Json::object() : json_arg(opt_.code);
        if (!j.is_object()) raise(ErrorKind::ParseError, "--code must be a JSON object");
        const auto p = preset();
        if (!opt_.ring.empty())
            j["ring"] = json_arg(opt_.ring);
        else if (!j.contains("ring"))
            j["ring"] = io::to_json(p ? p->ring : Ring::create(2, 2, 1));
        if (opt_.n > 0)
            j["n"] = opt_.n;
        else if (!j.contains("n") && p)
            j["n"] = p->n();
        if (!opt_.a.empty())
            j["a"] = json_arg(opt_.a);
        else if (!j.contains("a") && p && !(opt_.n > 0 && opt_.n != p->n()))
            j["a"] = io::to_json(p->a.entries());
        if (!opt_.g.empty()) j["g"] = poly_arg(opt_.g);
        if (!opt_.sgb.empty()) j["sgb"] = json_arg(opt_.sgb);
        if (!opt_.generators.empty()) j["generators"] = json_arg(opt_.generators);
        if (!j.contains("g") && !j.contains("sgb") && !j.contains("generators")) {
            const auto bundled = p ? preset_code(p->name) : std::nullopt;
            if (!bundled) throw UsageError("no code given: use --code, --g, --sgb or --generators");
            j["sgb"] = io::to_json(*bundled);
        }
        if (!j.contains("n")) throw UsageError("no length given: use --n or --preset");
        descriptor_ = j;
        return j;
    }

    PolycyclicCode polycyclic() { return io::polycyclic_from_json(descriptor()); }

    // Codes given only by generators are read without an associate vector.
    LinearCode linear() {
        Json j = descriptor();
        if (j.contains("g") || j.contains("sgb")) return io::polycyclic_from_json(j).code();
        j.erase("a");
        return io::code_from_json(j);
    }

    std::optional<StrongGroebnerBasis> declared_sgb() {
        const Json j = descriptor();
        if (!j.contains("sgb")) return std::nullopt;
        return io::sgb_from_json(j["sgb"], io::ring_from_json(j["ring"]));
    }

    // --poly, falling back to the preset's ambient polynomial.
    Poly poly(const Ring& ring) {
        if (!opt_.poly.empty()) return io::poly_from_json(poly_arg(opt_.poly), ring);
        if (auto p = preset()) return p->a.ambient();
        throw UsageError("no polynomial given: use --poly or --preset");
    }

    AssociateVector associate(const Ring& ring) {
        if (!opt_.a.empty()) return AssociateVector(io::vec_from_json(json_arg(opt_.a), ring));
        if (auto p = preset()) return p->a;
        throw UsageError("no associate vector given: use --a or --preset");
    }

    const Options& opt() const { return opt_; }

private:
    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
    std::optional<Json> descriptor_;
};

// ---------------------------------------------------------------------------
// Verbs

int ring_info(Session& s) {
    const Ring ring = s.ring();
    const Ring field = ring.residue_field();
    const std::uint64_t units = ring.size() - ring.size() / field.size();
    const Ring zq = Ring::create(ring.p(), ring.char_exp(), 1);
    Vec modulus;
    for (auto c : ring.spec().modulus) modulus.push_back(zq.from_int(c));

    Json j;
    j["ring"] = io::to_json(ring);
    j["name"] = ring.describe();
    j["size"] = ring.size();
    j["s"] = ring.s();
    j["units"] = units;
    j["residue_field"] = io::to_json(field);

    Table t;
    t.row("ring", ring.describe());
    t.row("p, a, m", std::to_string(ring.p()) + ", " + std::to_string(ring.char_exp()) + ", " + std::to_string(ring.m()));
    t.row("modulus", Poly(zq, modulus).to_string());
    t.row("size", std::to_string(ring.size()));
    t.row("units", std::to_string(units));
    t.row("nilpotency", std::to_string(ring.s()));
    t.row("residue field", field.describe());
    s.emit(j, t);
    return 0;
}

int poly_factor(Session& s) {
    const Ring ring = s.ring();
    const Poly f = s.poly(ring);
    const FactorSet fs = hensel_lift_factors(f);

    Json j;
    j["ring"] = io::to_json(ring);
    j["poly"] = io::to_json(f);
    j["factors"] = Json::array();
    for (const auto& h : fs.factors) j["factors"].push_back(io::to_json(h));
    std::vector<std::string> lines;
    for (const auto& h : fs.factors) lines.push_back(h.to_string());
    if (!ring.is_field()) {
        j["residue_field"] = io::to_json(ring.residue_field());
        j["residue_factors"] = Json::array();
        for (std::size_t i = 0; i < fs.factors.size(); ++i) {
            const Poly r = residue(fs.factors[i]);
            j["residue_factors"].push_back(io::to_json(r));
            lines[i] += "    (residue " + r.to_string() + ")";
        }
    }
    Table t;
    t.row("ring", ring.describe());
    t.row("poly", f.to_string());
    t.block("factors", lines);
    s.emit(j, t);
    return 0;
}

int poly_lift(Session& s) {
    const Ring ring = s.ring();
    const Poly f = s.poly(ring);
    if (s.opt().factor.empty()) throw UsageError("poly lift needs --factor");
    const Ring field = ring.residue_field();
    const Poly g = make_monic(residue(io::poly_from_json(s.poly_arg(s.opt().factor), ring)));

    const FactorSet fs = hensel_lift_factors(f);
    FactorSet bar{residue(f), {}};
    for (const auto& h : fs.factors) bar.factors.push_back(residue(h));
    const Poly lifted = fs.product(bar.subset_of(g));

    Json j;
    j["ring"] = io::to_json(ring);
    j["poly"] = io::to_json(f);
    j["residue_field"] = io::to_json(field);
    j["factor"] = io::to_json(g);
    j["lift"] = io::to_json(lifted);
    Table t;
    t.row("poly", f.to_string());
    t.row("factor", g.to_string() + " over " + field.describe());
    t.row("lift", lifted.to_string() + " over " + ring.describe());
    s.emit(j, t);
    return 0;
}

int poly_period(Session& s) {
    const Ring ring = s.ring();
    std::size_t n = 0;
    std::uint64_t ell = 0;
    Poly ambient;
    if (!s.opt().poly.empty()) {
        ambient = s.poly(ring);
        if (!ambient.is_monic() || ambient.degree() < 1)
            raise(ErrorKind::NotMonic, ambient.to_string() + " is not monic of positive degree");
        n = static_cast<std::size_t>(ambient.degree());
        ell = period(n, Poly::monomial(ring.one(), n) - ambient);
    } else {
        const AssociateVector a = s.associate(ring);
        n = a.length();
        ambient = a.ambient();
        ell = period(a);
    }
    Json j;
    j["ring"] = io::to_json(ring);
    j["poly"] = io::to_json(ambient);
    j["n"] = n;
    j["period"] = ell;
    Table t;
    t.row("poly", ambient.to_string());
    t.row("period", std::to_string(ell));
    s.emit(j, t);
    return 0;
}

int code_build(Session& s) {
    const PolycyclicCode pc = s.polycyclic();
    Table t;
    describe(t, pc);
    s.emit(io::to_json(pc), t);
    return 0;
}

int code_dual(Session& s) {
    Table t;
    if (s.opt().form == "annihilator") {
        const PolycyclicCode dual = annihilator_dual(s.polycyclic());
        describe(t, dual);
        s.emit(io::to_json(dual), t);
    } else {
        const LinearCode dual = euclidean_dual(s.linear());
        describe(t, dual);
        s.emit(io::to_json(dual), t);
    }
    return 0;
}

int code_sgb(Session& s) {
    const PolycyclicCode pc = s.polycyclic();
    Json j = io::to_json(pc);
    Json rows = Json::array();
    if (!pc.sgb().empty())
        for (const auto& r : sgb_matrix(pc.sgb(), pc.ring(), pc.length()).row_list()) rows.push_back(io::to_json(r));
    j["matrix"] = rows;

    Table t;
    t.row("a", to_string(pc.a().entries()));
    t.row("sgb", sgb_text(pc.sgb()));
    t.row("type", join_ints(pc.code().type()));
    t.row("|C|", size_text(pc.ring(), pc.code().log_cardinality()));
    if (!pc.sgb().empty()) t.block("matrix", row_lines(sgb_matrix(pc.sgb(), pc.ring(), pc.length()).row_list()));
    if (const auto declared = s.declared_sgb(); declared && !declared->empty()) {
        const SgbCheck check = check_sgb(*declared, pc);
        Json c;
        c["valid"] = check.valid;
        c["degree_zero"] = check.degree_zero;
        c["issues"] = check.issues;
        j["check"] = c;
        t.row("declared", check.valid ? "valid strong Groebner basis" : "not a strong Groebner basis");
        for (const auto& issue : check.issues) t.row("", issue);
    }
    s.emit(j, t);
    return 0;
}

int code_type(Session& s) {
    const LinearCode code = s.linear();
    Json j;
    j["type"] = code.type();
    j["log_cardinality"] = code.log_cardinality();
    j["rank"] = code.rank();
    j["free"] = code.is_free();
    Table t;
    t.row("type", join_ints(code.type()));
    t.row("|C|", size_text(code.ring(), code.log_cardinality()));
    t.row("rank", std::to_string(code.rank()));
    t.row("free", code.is_free() ? "yes" : "no");
    s.emit(j, t);
    return 0;
}

int galois_orbit(Session& s) {
    const PolycyclicCode pc = s.polycyclic();
    const GaloisContext ctx = GaloisContext::make(pc.ring(), s.subring_degree());
    Json j;
    j["r"] = ctx.r;
    j["d"] = ctx.d;
    j["orbit"] = Json::array();
    Table t;
    t.row("r, d", std::to_string(ctx.r) + ", " + std::to_string(ctx.d));
    int i = 0;
    for (const auto& img : orbit(pc, ctx)) {
        j["orbit"].push_back(io::to_json(img));
        const std::string key = "sigma^" + std::to_string(i++ * ctx.r);
        t.row(key + " a", to_string(img.a().entries()));
        t.row(key + " sgb", sgb_text(img.sgb()));
    }
    s.emit(j, t);
    return 0;
}

int galois_disjoint(Session& s) {
    const Json desc = s.descriptor();
    const bool cyclic = desc.contains("a") || desc.contains("g");
    const LinearCode code = cyclic ? s.polycyclic().code() : s.linear();
    const GaloisContext ctx = GaloisContext::make(code.ring(), s.subring_degree());
    const bool disjoint = is_galois_disjoint(code, ctx);
    const bool complete = is_complete_disjoint(code, ctx);

    Json j;
    j["r"] = ctx.r;
    j["d"] = ctx.d;
    j["galois_disjoint"] = disjoint;
    j["complete_disjoint"] = complete;
    j["criterion"] = nullptr;
    Table t;
    t.row("r, d", std::to_string(ctx.r) + ", " + std::to_string(ctx.d));
    t.row("disjoint", disjoint ? "yes" : "no");
    t.row("complete", complete ? "yes" : "no");
    if (cyclic) {
        const PolycyclicCode pc = s.polycyclic();
        if (pc.is_free() && !pc.code().is_zero()) {
            try {
                Json c;
                c["free_disjoint"] = free_disjoint_criterion(pc.generator(), ctx, pc.factor_set());
                c["complete"] = complete_criterion(pc.generator(), ctx, pc.factor_set());
                t.row("criterion", std::string("disjoint ") + (c["free_disjoint"].get<bool>() ? "yes" : "no") +
                                       ", complete " + (c["complete"].get<bool>() ? "yes" : "no"));
                j["criterion"] = c;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::SigmaUnstableAmbient) throw;
                t.row("criterion", std::string("not applicable: ") + e.what());
            }
        }
    }
    s.emit(j, t);
    return 0;
}

int galois_subcode(Session& s, bool trace) {
    const LinearCode code = s.linear();
    const Extension ext = Extension::make(code.ring(), s.subring_degree());
    const LinearCode sub = trace ? trace_code(code, ext) : restriction(code, ext);
    Table t;
    describe(t, sub);
    s.emit(io::to_json(sub), t);
    return 0;
}

int galois_delsarte(Session& s) {
    const PolycyclicCode pc = s.polycyclic();
    const Extension ext = Extension::make(pc.ring(), s.subring_degree());
    const DelsartePair pair = delsarte_pair(pc, ext);
    Json j;
    j["lhs"] = io::to_json(pair.lhs);
    j["rhs"] = io::to_json(pair.rhs);
    j["equal"] = pair.equal;
    Table t;
    t.row("Tr(C°)", "type " + join_ints(pair.lhs.type()) + ", |.| = " + size_text(pair.lhs.ring(), pair.lhs.log_cardinality()));
    t.row("(Res C)°", "type " + join_ints(pair.rhs.type()) + ", |.| = " + size_text(pair.rhs.ring(), pair.rhs.log_cardinality()));
    t.row("equal", pair.equal ? "yes" : "no");
    s.emit(j, t);
    return 0;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int verify(Session& s, std::ostream& out, std::ostream& err) {
    if (s.opt().list) {
        Json j = Json::array();
        Table t;
        for (const auto& c : claim_registry()) {
            j.push_back(Json{{"id", c.id}, {"statement", c.statement}});
            t.row(c.id, c.statement);
        }
        s.emit(j, t);
        return 0;
    }
    SuiteParams params;
    params.label = s.opt().preset.empty() ? "custom" : s.opt().preset;
    params.ring = s.ring();
    params.a = s.associate(params.ring);
    params.r = s.subring_degree();
    params.use_lattice = !s.opt().no_lattice;
    if (s.explicit_code()) {
        Subject subject;
        subject.code = s.polycyclic().code();
        subject.sgb = s.declared_sgb();
        params.subject = subject;
    }

    const auto results = run_suite(split_list(s.opt().suite), params);
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : results) {
        if (!r.pass) {
            ++skipped;
        } else if (*r.pass) {
            ++passed;
        } else {
            ++failed;
        }
        if (s.opt().json) {
            out << report_line(r, params) << "\n";
            continue;
        }
        out << r.claim << std::string(r.claim.size() < 6 ? 6 - r.claim.size() : 1, ' ');
        if (!r.pass)
            out << "skip  " << r.skipped << "\n";
        else
            out << (*r.pass ? "pass" : "FAIL") << "  scanned " << r.scanned
                << (*r.pass ? "" : "  counterexample: " + r.counterexample) << "\n";
    }
    if (!s.opt().json)
        out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    if (failed) {
        err << "verify: " << failed << " claim(s) failed\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Command table

void add_json(CLI::App* cmd, Options& o) { cmd->add_flag("--json", o.json, "Canonical JSON output"); }

void add_ring(CLI::App* cmd, Options& o) {
    cmd->add_option("--preset", o.preset, "Named ring, length and associate vector")
        ->check(CLI::IsMember(preset_names()));
    cmd->add_option("--ring", o.ring, "Ring descriptor as JSON (- for stdin)");
}

void add_code(CLI::App* cmd, Options& o) {
    add_ring(cmd, o);
    cmd->add_option("--code", o.code, "Code descriptor as JSON (- for stdin)");
    cmd->add_option("--n", o.n, "Code length")->check(CLI::PositiveNumber);
    cmd->add_option("--a", o.a, "Associate vector as a JSON list of elements");
    cmd->add_option("--g", o.g, "Generator polynomial of a free code");
    cmd->add_option("--sgb", o.sgb, "Strong Groebner basis as JSON");
    cmd->add_option("--generators", o.generators, "Generator rows as JSON");
}

void add_subring(CLI::App* cmd, Options& o) {
    cmd->add_option("--subring-degree", o.r, "r, with S_r fixed by sigma^r")->check(CLI::PositiveNumber);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("Linear and polycyclic codes over finite chain rings", "chaincode");
    app.require_subcommand(1);

    auto* ring = app.add_subcommand("ring", "Ring queries")->require_subcommand(1);
    auto* ring_info_cmd = ring->add_subcommand("info", "Describe a ring");

    auto* poly = app.add_subcommand("poly", "Polynomial operations")->require_subcommand(1);
    auto* factor_cmd = poly->add_subcommand("factor", "Factor into basic irreducibles");
    auto* lift_cmd = poly->add_subcommand("lift", "Hensel-lift a residue factor");
    auto* period_cmd = poly->add_subcommand("period", "Period of X modulo a monic polynomial");

    auto* code = app.add_subcommand("code", "Code construction and duality")->require_subcommand(1);
    auto* build_cmd = code->add_subcommand("build", "Build an a-cyclic code");
    auto* dual_cmd = code->add_subcommand("dual", "Euclidean or annihilator dual");
    auto* sgb_cmd = code->add_subcommand("sgb", "Strong Groebner basis and generator matrix");
    auto* type_cmd = code->add_subcommand("type", "Type and cardinality");

    auto* galois = app.add_subcommand("galois", "Galois images, restriction and trace")->require_subcommand(1);
    auto* orbit_cmd = galois->add_subcommand("orbit", "The codes sigma^{ir}(C)");
    auto* disjoint_cmd = galois->add_subcommand("disjoint", "Galois-disjointness");
    auto* trace_cmd = galois->add_subcommand("trace", "Trace code over S_r");
    auto* res_cmd = galois->add_subcommand("res", "Restriction to S_r");
    auto* delsarte_cmd = galois->add_subcommand("delsarte", "Both sides of Tr(C°) = (Res C)°");

    auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive claim suite");

    for (auto* cmd : {ring_info_cmd, factor_cmd, lift_cmd, period_cmd}) {
        add_json(cmd, o);
        add_ring(cmd, o);
    }
    for (auto* cmd : {factor_cmd, lift_cmd, period_cmd})
        cmd->add_option("--poly", o.poly, "Polynomial as text or a JSON coefficient list");
    lift_cmd->add_option("--factor", o.factor, "Residue factor to lift");
    period_cmd->add_option("--a", o.a, "Associate vector as a JSON list of elements");

    for (auto* cmd : {build_cmd, dual_cmd, sgb_cmd, type_cmd, orbit_cmd, disjoint_cmd, trace_cmd, res_cmd, delsarte_cmd}) {
        add_json(cmd, o);
        add_code(cmd, o);
    }
    dual_cmd->add_option("--form", o.form, "euclidean or annihilator")
        ->check(CLI::IsMember({"euclidean", "annihilator"}));
    for (auto* cmd : {orbit_cmd, disjoint_cmd, trace_cmd, res_cmd, delsarte_cmd}) add_subring(cmd, o);

    add_json(verify_cmd, o);
    add_code(verify_cmd, o);
    add_subring(verify_cmd, o);
    verify_cmd->add_option("--suite", o.suite, "Comma-separated claim ids, or all");
    verify_cmd->add_flag("--no-lattice", o.no_lattice, "Check only the subject code");
    verify_cmd->add_flag("--list", o.list, "List the claims");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code_ = app.exit(e, out, err);
        return code_ == 0 ? 0 : 2;
    }

    Session s(o, in, out);
    try {
        if (ring_info_cmd->parsed()) return ring_info(s);
        if (factor_cmd->parsed()) return poly_factor(s);
        if (lift_cmd->parsed()) return poly_lift(s);
        if (period_cmd->parsed()) return poly_period(s);
        if (build_cmd->parsed()) return code_build(s);
        if (dual_cmd->parsed()) return code_dual(s);
        if (sgb_cmd->parsed()) return code_sgb(s);
        if (type_cmd->parsed()) return code_type(s);
        if (orbit_cmd->parsed()) return galois_orbit(s);
        if (disjoint_cmd->parsed()) return galois_disjoint(s);
        if (trace_cmd->parsed()) return galois_subcode(s, true);
        if (res_cmd->parsed()) return galois_subcode(s, false);
        if (delsarte_cmd->parsed()) return galois_delsarte(s);
        if (verify_cmd->parsed()) return verify(s, out, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "ParseError: " << e.what() << "\n";
        return 1;
    }
    err << "usage: no command given\n";
    return 2;
}

}  // namespace chaincode::cli
