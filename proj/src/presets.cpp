#include "chaincode/presets.hpp"

namespace chaincode {

namespace {

Ring gr42() { return Ring::create(2, 2, 2, std::vector<std::int64_t>{1, 1, 1}); }

Vec ints(const Ring& ring, std::initializer_list<std::int64_t> xs) {
    Vec out;
    for (auto x : xs) out.push_back(ring.from_int(x));
    return out;
}

}  // namespace

std::vector<std::string> preset_names() { return {"z4n3", "gr42n2", "gr42n3", "gr42n5"}; }

Preset preset(std::string_view name) {
    if (name == "z4n3") {
        const Ring z4 = Ring::create(2, 2, 1);
        return {"z4n3", "Z4, n = 3, cyclic", z4, AssociateVector(ints(z4, {1, 0, 0})), 1};
    }
    if (name == "gr42n2") {
        const Ring s = gr42();
        return {"gr42n2", "GR(4,2), n = 2, X^2 - Psi(a) = X^2 + X + 1", s, AssociateVector(ints(s, {3, 3})), 1};
    }
    if (name == "gr42n3") {
        const Ring s = gr42();
        return {"gr42n3", "GR(4,2), n = 3, cyclic", s, AssociateVector(ints(s, {1, 0, 0})), 1};
    }
    if (name == "gr42n5") {
        const WorkedExample ex = worked_example();
        return {"gr42n5", "GR(4,2), n = 5, Psi(a) = X^5 - g0 (worked example)", ex.ring, ex.a, 1};
    }
    raise(ErrorKind::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

std::optional<StrongGroebnerBasis> preset_code(std::string_view name) {
    if (name == "gr42n5") return worked_example().sgb;
    preset(name);
    return std::nullopt;
}

WorkedExample worked_example() {
    const Ring s = gr42();
    const RingElem one = s.one(), zero = s.zero(), two = s.from_int(2);
    const RingElem a = s.generator(), a2 = a * a;
    WorkedExample ex;
    ex.ring = s;
    ex.g2 = Poly(s, {a, one, one});
    ex.g1 = Poly(s, {a2, one, a, a2, one});
    const Poly x = Poly::x(s);
    ex.g0 = (x - Poly::constant(a2)) * ex.g1 + two * (x + Poly::constant(s.from_int(3))) * ex.g2;
    ex.a = AssociateVector(psi_inverse(Poly::monomial(one, 5) - ex.g0, 5));
    ex.sgb = {{0, ex.g1}, {1, ex.g2}};
    ex.printed = Matrix::from_rows(
        s, 5, {{a2, one, a, a2, one}, {two * a, two, two, zero, zero}, {zero, two * a, two, two, zero}});
    return ex;
}

}  // namespace chaincode
