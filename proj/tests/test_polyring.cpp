#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace testing;

namespace {

struct Worked {
    Ring s = gr42();
    RingElem a = s.generator();
    RingElem a2 = a * a;
    RingElem two = s.from_int(2);
    Poly g2 = poly(s, {a, s.one(), s.one()});
    Poly g1 = poly(s, {a2, s.one(), a, a2, s.one()});
    Poly g0 = poly(s, {a, two * a2, s.zero(), two, s.zero(), s.one()});
    Poly x = Poly::x(s);
};

bool same_set(std::vector<Poly> xs, std::vector<Poly> ys) {
    std::sort(xs.begin(), xs.end(), poly_less);
    std::sort(ys.begin(), ys.end(), poly_less);
    return xs == ys;
}

}  // namespace

TEST_CASE("worked-example polynomial identities") {
    Worked e;
    const Poly lin = e.x - Poly::constant(e.a2);
    const Poly x3 = e.x + Poly::constant(e.s.from_int(3));
    CHECK(lin * e.g1 + e.two * x3 * e.g2 == e.g0);
    CHECK(e.two * e.g1 == e.two * e.g2 * poly(e.s, {e.a, e.a, e.s.one()}));
    CHECK(e.g0.to_string() == "X^5 + 2*X^3 + (2*w+2)*X + w");

    const DivMod qr = divmod_monic(e.g0, e.g1);
    CHECK(qr.quotient * e.g1 + qr.remainder == e.g0);
    CHECK(qr.remainder.degree() < 4);
    CHECK(qr.remainder == e.two * x3 * e.g2);
}

TEST_CASE("division by monic polynomials") {
    const Ring z = z4();
    const Poly f = poly_int(z, {1, 2, 3});
    const DivMod by_one = divmod_monic(f, Poly::constant(z.one()));
    CHECK(by_one.quotient == f);
    CHECK(by_one.remainder.is_zero());

    const DivMod cube = divmod_monic(Poly::monomial(z.one(), 3), poly_int(z, {-1, 0, 0, 1}));
    CHECK(cube.quotient.is_one());
    CHECK(cube.remainder.is_one());
    CHECK_THROWS_AS(divmod_monic(f, poly_int(z, {1, 2})), Error);

    const Ring s = gr42();
    std::mt19937_64 rng(20240611);
    auto random_poly = [&](int deg, bool monic) {
        Vec c;
        for (int i = 0; i <= deg; ++i) c.push_back(s.from_index(rng() % 16));
        if (monic) c.back() = s.one();
        return Poly(s, c);
    };
    for (int trial = 0; trial < 1200; ++trial) {
        const Poly num = random_poly(static_cast<int>(rng() % 7), false);
        const Poly den = random_poly(static_cast<int>(rng() % 4), true);
        const DivMod qr = divmod_monic(num, den);
        CHECK(qr.quotient * den + qr.remainder == num);
        CHECK(qr.remainder.degree() < den.degree());
    }
}

TEST_CASE("factoring over the residue field") {
    const Ring f = f4();
    const RingElem b = f.generator();
    const Poly x = Poly::x(f);
    const Poly target = Poly::binomial(f, 5, Poly::constant(b));
    const auto factors = field_factor_squarefree(target);
    CHECK(same_set(factors, {x - Poly::constant(b * b), poly(f, {b, f.one(), f.one()}), poly(f, {b, b, f.one()})}));

    // Roots of X^2 + X + 1 by evaluation at every field element.
    const Poly q = poly_int(f, {1, 1, 1});
    std::vector<Poly> linear;
    for (const auto& r : f.elements())
        if (q.eval(r).is_zero()) linear.push_back(x - Poly::constant(r));
    CHECK(linear.size() == 2);
    CHECK(same_set(field_factor_squarefree(q), linear));
    CHECK(std::find(linear.begin(), linear.end(), x - Poly::constant(b)) != linear.end());

    const Ring f2 = Ring::create(2, 1, 1);
    const auto single = field_factor_squarefree(poly_int(f2, {1, 1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == poly_int(f2, {1, 1}));

    CHECK_THROWS_AS(field_factor_squarefree(poly_int(f2, {1, 0, 1})), Error);
    CHECK_THROWS_AS(field_factor_squarefree(poly(f, {f.one(), b})), Error);
}

TEST_CASE("Hensel lifting") {
    Worked e;
    const Ring& s = e.s;
    const Poly x = e.x;
    const FactorSet fs = hensel_lift_factors(poly_int(s, {1, 1, 1}));
    CHECK(same_set(fs.factors, {x - Poly::constant(e.a), x - Poly::constant(e.a2)}));

    const Poly ambient = e.g0;
    const FactorSet amb = hensel_lift_factors(ambient);
    REQUIRE(amb.factors.size() == 3);
    Poly prod = Poly::constant(s.one());
    for (const auto& g : amb.factors) {
        prod = prod * g;
        CHECK(g.is_monic());
        CHECK(field_factor_squarefree(residue(g)).size() == 1);
    }
    CHECK(prod == ambient);
    CHECK(same_set([&] {
        std::vector<Poly> r;
        for (const auto& g : amb.factors) r.push_back(residue(g));
        return r;
    }(), field_factor_squarefree(residue(ambient))));

    // The lift of X^2 + X + β agrees with g2 modulo θ.
    const Poly target_bar = residue(e.g2);
    const auto it = std::find_if(amb.factors.begin(), amb.factors.end(),
                                 [&](const Poly& g) { return residue(g) == target_bar; });
    REQUIRE(it != amb.factors.end());
    CHECK(e.two * *it == e.two * e.g2);
    CHECK(divides(*it, ambient));

    auto residues = field_factor_squarefree(residue(ambient));
    std::sort(residues.begin(), residues.end(), poly_less);
    do {
        CHECK(hensel_lift_factors(ambient, residues).factors == amb.factors);
    } while (std::next_permutation(residues.begin(), residues.end(), poly_less));

    const Poly irreducible = poly_int(s, {1, 1, 0, 1});
    REQUIRE(field_factor_squarefree(residue(irreducible)).size() == 1);
    CHECK(hensel_lift_factors(irreducible).factors == std::vector<Poly>{irreducible});

    CHECK_THROWS_AS(hensel_lift_factors(poly_int(s, {1, 0, 1})), Error);
}

TEST_CASE("period") {
    const Ring s = gr42();
    const Ring f = f4();
    const Poly tail = Poly::constant(s.generator());
    // Smallest i with X^5 - β dividing X^i - 1, by direct division.
    const Poly mod = Poly::binomial(f, 5, Poly::constant(f.generator()));
    std::uint64_t expected = 0;
    for (std::uint64_t i = 1; i < 1000 && !expected; ++i)
        if (divides(mod, Poly::binomial(f, i, Poly::constant(f.one())))) expected = i;
    CHECK(expected == 15);
    CHECK(period(5, tail) == expected);

    CHECK(period(1, Poly::constant(s.one())) == 1);
    CHECK(period(3, Poly::constant(z4().one())) == 3);

    CHECK_THROWS_AS(period(2, Poly::constant(z4().one())), Error);
    CHECK_THROWS_AS(period(3, Poly::constant(z4().from_int(2))), Error);
    CHECK_THROWS_AS(period(5, tail, 10), Error);
}

TEST_CASE("mu and delta") {
    Worked e;
    const FactorSet fs = hensel_lift_factors(e.g0);
    const std::uint64_t full = fs.full_mask();
    CHECK(full == 7);
    for (std::uint64_t i = 0; i <= full; ++i)
        for (std::uint64_t j = 0; j <= full; ++j) {
            const Poly gi = fs.product(i), gj = fs.product(j);
            const std::vector<Poly> pair{gi, gj};
            const Poly m = mu(pair, fs), d = delta(pair, fs);
            CHECK(m * d == gi * gj);
            CHECK(m == fs.product(i | j));
            CHECK(d == fs.product(i & j));
            CHECK(divides(m, e.g0));
            const std::vector<Poly> same{gi, gi};
            CHECK(mu(same, fs) == gi);
            CHECK(delta(same, fs) == gi);
            if ((i & j) == 0) CHECK(d.is_one());
        }
    const std::vector<Poly> bad{e.g2};
    CHECK_THROWS_AS(mu(bad, fs), Error);
}

TEST_CASE("regular decomposition") {
    Worked e;
    const auto d = regular_decompose(e.two * e.g2);
    CHECK(d.t == 1);
    CHECK(d.unit.is_one());
    CHECK(d.monic == e.g2);

    const auto m = regular_decompose(e.g1);
    CHECK(m.t == 0);
    CHECK(m.unit.is_one());
    CHECK(m.monic == e.g1);

    const Ring z = z4();
    const auto u = regular_decompose(poly_int(z, {3, 3}));
    CHECK(u.t == 0);
    CHECK(u.unit == Poly::constant(z.from_int(3)));
    CHECK(u.monic == poly_int(z, {1, 1}));

    // A non-monic lift: 1 + X + 2X^2 has regular part of residue degree 1.
    const Poly f = poly_int(z, {1, 1, 2});
    const auto r = regular_decompose(f);
    CHECK(r.unit * r.monic == f);
    CHECK(r.monic.is_monic());
    CHECK(r.monic.degree() == 1);

    CHECK_THROWS_AS(regular_decompose(Poly(z)), Error);
}

TEST_CASE("polynomial arithmetic") {
    Worked e;
    const Poly x = e.x;
    CHECK((x - Poly::constant(e.a)) * (x - Poly::constant(e.a2)) == poly_int(e.s, {1, 1, 1}));
    CHECK(e.g2 + Poly(e.s) == e.g2);
    CHECK(e.g2.eval(e.s.zero()) == e.a);
    CHECK(frobenius(e.g2, 1) == poly(e.s, {e.a2, e.s.one(), e.s.one()}));
    CHECK_THROWS_AS(e.g2 + poly_int(z4(), {1}), Error);
}
