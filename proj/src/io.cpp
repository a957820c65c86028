#include "chaincode/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace chaincode::io {

namespace {

[[noreturn]] void parse_fail(const std::string& message) { raise(ErrorKind::ParseError, message); }

void expect_object(const Json& j, std::string_view what, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) parse_fail(std::string(what) + " must be a JSON object");
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            parse_fail("unknown key '" + key + "' in " + std::string(what));
    }
}

const Json& require(const Json& j, const char* key, std::string_view what) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const Json& j, std::string_view what) {
    if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::int64_t reduce(std::int64_t x, std::int64_t q) {
    const std::int64_t r = x % q;
    return r < 0 ? r + q : r;
}

// ---------------------------------------------------------------------------
// Polynomial text

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Poly run() {
        skip_space();
        if (pos_ == text_.size()) parse_fail("empty polynomial");
        Poly f = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        parse_fail(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor() {
        const char c = peek();
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '\xCE';
    }

    Poly expr() {
        Poly acc(ring_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        for (;;) {
            Poly t = term();
            acc = negate ? acc - t : acc + t;
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            negate = c == '-';
            ++pos_;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (starts_factor()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        const std::uint64_t e = number();
        if (e > kMaxExponent) fail("exponent too large");
        Poly out = Poly::constant(ring_.one());
        for (std::uint64_t bit = std::uint64_t{1} << 20; bit; bit >>= 1) {
            out = out * out;
            if (e & bit) out = out * base;
        }
        return out;
    }

    Poly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = number();
            return Poly::constant(ring_.from_int(static_cast<std::int64_t>(v % static_cast<std::uint64_t>(ring_.q()))));
        }
        const std::string name = identifier();
        if (name == "X" || name == "x") return Poly::x(ring_);
        if (name == "w" || name == "b" || name == "alpha" || name == "beta" || name == "\xCE\xB1" ||
            name == "\xCE\xB2")
            return Poly::constant(ring_.generator());
        if (name.empty()) fail("expected a term");
        fail("unknown symbol '" + name + "'");
    }

    std::uint64_t number() {
        std::uint64_t v = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::result_out_of_range) fail("integer literal out of range");
        if (ec != std::errc{}) fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    std::string identifier() {
        const std::size_t start = pos_;
        if (pos_ + 1 < text_.size() && text_[pos_] == '\xCE' && (text_[pos_ + 1] == '\xB1' || text_[pos_ + 1] == '\xB2')) {
            pos_ += 2;
        } else {
            // Single letters, so that "2wX" reads as 2*w*X; "alpha" and "beta" are whole words.
            for (std::string_view word : {"alpha", "beta"})
                if (text_.substr(pos_, word.size()) == word) {
                    pos_ += word.size();
                    return std::string(word);
                }
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    static constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 20;

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

Ring ring_of(const Json& j, const std::optional<Ring>& fallback, std::string_view what) {
    if (j.contains("ring")) return ring_from_json(j["ring"]);
    if (fallback) return *fallback;
    parse_fail(std::string(what) + " is missing \"ring\"");
}

std::size_t length_of(const Json& j, std::string_view what) {
    const std::int64_t n = as_int(require(j, "n", what), "n");
    if (n < 1) parse_fail("n must be positive");
    return static_cast<std::size_t>(n);
}

std::vector<Vec> rows_from_json(const Json& j, const Ring& ring) {
    if (!j.is_array()) parse_fail("generators must be a list of vectors");
    std::vector<Vec> rows;
    for (const auto& row : j) rows.push_back(vec_from_json(row, ring));
    return rows;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Rings and elements

Json to_json(const Ring& ring) {
    Json j;
    j["p"] = ring.p();
    j["a"] = ring.char_exp();
    j["m"] = ring.m();
    j["modulus"] = ring.spec().modulus;
    return j;
}

Ring ring_from_json(const Json& j) {
    expect_object(j, "ring", {"p", "a", "m", "e", "modulus"});
    const std::int64_t p = as_int(require(j, "p", "ring"), "p");
    const std::int64_t a = as_int(require(j, "a", "ring"), "a");
    const std::int64_t m = as_int(require(j, "m", "ring"), "m");
    int e = 1;
    if (j.contains("e")) e = static_cast<int>(as_int(j["e"], "e"));
    if (a < 1 || a > 64 || m < 1 || m > 64) raise(ErrorKind::InvalidArgument, "need 1 <= a and 1 <= m");
    std::optional<std::vector<std::int64_t>> modulus;
    if (j.contains("modulus")) {
        const Json& mj = j["modulus"];
        if (!mj.is_array()) parse_fail("modulus must be a list of integers");
        modulus.emplace();
        for (const auto& c : mj) modulus->push_back(as_int(c, "modulus coefficient"));
    }
    return Ring::create(p, static_cast<int>(a), static_cast<int>(m), modulus, e);
}

Json to_json(const RingElem& x) { return x.coords(); }

RingElem element_from_json(const Json& j, const Ring& ring) {
    if (j.is_number_integer()) return ring.from_int(reduce(j.get<std::int64_t>(), ring.q()));
    if (j.is_string()) {
        const Poly f = parse_poly(j.get<std::string>(), ring);
        if (f.degree() > 0) parse_fail("element '" + j.get<std::string>() + "' involves X");
        return f.coeff(0);
    }
    if (!j.is_array()) parse_fail("element must be a coordinate list");
    if (j.size() != static_cast<std::size_t>(ring.m()))
        parse_fail("element needs " + std::to_string(ring.m()) + " coordinates, got " + std::to_string(j.size()));
    std::vector<std::int64_t> coords;
    for (const auto& c : j) coords.push_back(reduce(as_int(c, "coordinate"), ring.q()));
    return ring.element(coords);
}

Json to_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_json(x));
    return j;
}

Vec vec_from_json(const Json& j, const Ring& ring) {
    if (!j.is_array()) parse_fail("vector must be a list of elements");
    Vec v;
    for (const auto& x : j) v.push_back(element_from_json(x, ring));
    return v;
}

// ---------------------------------------------------------------------------
// Polynomials

Json to_json(const Poly& f) {
    Json j = Json::array();
    for (const auto& c : f.coeffs()) j.push_back(to_json(c));
    return j;
}

Poly poly_from_json(const Json& j, const Ring& ring) {
    if (j.is_string()) return parse_poly(j.get<std::string>(), ring);
    if (!j.is_array()) parse_fail("polynomial must be a coefficient list or a string");
    return Poly(ring, vec_from_json(j, ring));
}

Poly parse_poly(std::string_view text, const Ring& ring) { return PolyParser(text, ring).run(); }

// ---------------------------------------------------------------------------
// Codes

Json to_json(const LinearCode& code) {
    Json j;
    j["ring"] = to_json(code.ring());
    j["n"] = code.length();
    Json rows = Json::array();
    for (const auto& b : code.basis()) rows.push_back(to_json(b));
    j["generators"] = rows;
    j["type"] = code.type();
    j["log_cardinality"] = code.log_cardinality();
    return j;
}

LinearCode code_from_json(const Json& j, const std::optional<Ring>& ring) {
    expect_object(j, "code", {"ring", "n", "generators", "type", "log_cardinality"});
    const Ring s = ring_of(j, ring, "code");
    const std::size_t n = length_of(j, "code");
    return LinearCode(s, n, rows_from_json(require(j, "generators", "code"), s));
}

Json to_json(const StrongGroebnerBasis& sgb) {
    Json j = Json::array();
    for (const auto& el : sgb) {
        Json e;
        e["lambda"] = el.lambda;
        e["g"] = to_json(el.g);
        j.push_back(e);
    }
    return j;
}

StrongGroebnerBasis sgb_from_json(const Json& j, const Ring& ring) {
    if (!j.is_array()) parse_fail("sgb must be a list of {\"lambda\", \"g\"}");
    StrongGroebnerBasis out;
    for (const auto& e : j) {
        expect_object(e, "sgb element", {"lambda", "g"});
        const std::int64_t lambda = as_int(require(e, "lambda", "sgb element"), "lambda");
        if (lambda < 0 || lambda >= ring.s()) raise(ErrorKind::InvalidArgument, "lambda out of range");
        out.push_back({static_cast<int>(lambda), poly_from_json(require(e, "g", "sgb element"), ring)});
    }
    return out;
}

Json to_json(const PolycyclicCode& code) {
    Json j;
    j["ring"] = to_json(code.ring());
    j["n"] = code.length();
    j["a"] = to_json(code.a().entries());
    j["sgb"] = to_json(code.sgb());
    Json rows = Json::array();
    for (const auto& b : code.code().basis()) rows.push_back(to_json(b));
    j["generators"] = rows;
    j["type"] = code.code().type();
    j["log_cardinality"] = code.code().log_cardinality();
    return j;
}

PolycyclicCode polycyclic_from_json(const Json& j, const std::optional<Ring>& ring) {
    expect_object(j, "polycyclic code", {"ring", "n", "a", "sgb", "g", "generators", "type", "log_cardinality", "matrix", "check"});
    const Ring s = ring_of(j, ring, "polycyclic code");
    const std::size_t n = length_of(j, "polycyclic code");

    std::optional<AssociateVector> a;
    if (j.contains("a")) {
        a = AssociateVector(vec_from_json(j["a"], s));
        if (a->length() != n) raise(ErrorKind::LengthMismatch, "a has the wrong length");
    }

    std::vector<PolycyclicCode> built;
    if (j.contains("g")) {
        built.push_back(free_build(s, n, poly_from_json(j["g"], s), a));
        if (!a) a = built.back().a();
    }
    if (!a) parse_fail("polycyclic code needs \"a\" unless it is given by \"g\"");
    if (j.contains("sgb")) {
        const StrongGroebnerBasis sgb = sgb_from_json(j["sgb"], s);
        built.push_back(sgb.empty() ? PolycyclicCode(LinearCode::zero(s, n), *a) : from_sgb(sgb, *a));
    }
    if (j.contains("generators"))
        built.push_back(PolycyclicCode(LinearCode(s, n, rows_from_json(j["generators"], s)), *a));

    if (built.empty()) parse_fail("polycyclic code needs one of \"sgb\", \"g\" or \"generators\"");
    for (std::size_t i = 1; i < built.size(); ++i)
        if (!(built[i].code() == built.front().code()))
            raise(ErrorKind::InvalidArgument, "\"sgb\", \"g\" and \"generators\" describe different codes");
    return built.front();
}

}  // namespace chaincode::io
