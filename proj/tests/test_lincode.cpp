#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<Vec> example31_rows(const Ring& s) {
    const RingElem a = s.generator(), a2 = a * a, one = s.one(), two = s.from_int(2), o = s.zero();
    return {{a2, one, a, a2, one}, {two * a, two, two, o, o}, {o, two * a, two, two, o}};
}

std::uint64_t brute_dual_size(const Ring& r, std::size_t n, const std::vector<Vec>& gens) {
    std::uint64_t count = 0;
    for (const auto& y : all_vectors(r, n))
        count += std::all_of(gens.begin(), gens.end(), [&](const Vec& g) { return dot(y, g).is_zero(); });
    return count;
}

LinearCode random_code(const Ring& r, std::mt19937_64& rng, std::size_t n) {
    std::vector<Vec> rows(1 + rng() % 3);
    for (auto& row : rows) {
        for (std::size_t j = 0; j < n; ++j) {
            RingElem x = r.from_index(rng() % r.size());
            if (rng() % 3 == 0) x = r.from_int(2) * x;
            row.push_back(x);
        }
    }
    return LinearCode(r, n, rows);
}

}  // namespace

TEST_CASE("standard form and type") {
    const Ring s = gr42();
    CHECK(LinearCode::full(s, 4).type() == std::vector<int>{4, 0});
    CHECK(LinearCode(Matrix(s, 3, 4)).type() == std::vector<int>{0, 0});
    CHECK(LinearCode::zero(s, 4).cardinality() == 1);
    CHECK(LinearCode::full(s, 2).cardinality() == 256);

    const auto rows = example31_rows(s);
    const LinearCode c(s, 5, rows);
    CHECK(c.type() == std::vector<int>{1, 2});
    CHECK(c.rank() == 3);
    CHECK_FALSE(c.is_free());
    CHECK(c.cardinality() == 256);
    CHECK(span_size(s, 5, rows) == 256);

    const StandardForm& sf = c.standard_form();
    for (std::size_t i = 0; i < sf.rank(); ++i) {
        CHECK(sf.matrix(i, i) == theta_power(s, sf.levels[i]));
        for (std::size_t j = 0; j < i; ++j) CHECK(sf.matrix(i, j).is_zero());
        for (std::size_t j = 0; j < 5; ++j) CHECK(theta_valuation(sf.matrix(i, j)) >= sf.levels[i]);
    }

    auto shuffled = rows;
    std::reverse(shuffled.begin(), shuffled.end());
    shuffled.push_back(rows[0] + rows[2]);
    const LinearCode c2(s, 5, shuffled);
    CHECK(c2.type() == c.type());
    CHECK(c2 == c);
}

TEST_CASE("membership") {
    const Ring s = gr42();
    const auto rows = example31_rows(s);
    const LinearCode c(s, 5, rows);
    for (const auto& r : rows) {
        CHECK(c.contains(r));
        CHECK(c.contains(s.from_int(2) * r));
    }
    CHECK_FALSE(c.contains(rows[1] * Matrix::identity(s, 5) + Vec{s.zero(), s.one(), s.zero(), s.zero(), s.zero()}));
    CHECK_FALSE(LinearCode::zero(s, 5).contains(Vec{s.one(), s.zero(), s.zero(), s.zero(), s.zero()}));
    CHECK_THROWS_AS(c.contains(Vec{s.one()}), Error);

    // Exhaustive agreement with the additive span over Z4^3.
    const Ring z = z4();
    const std::vector<Vec> gens{vec_int(z, {2, 2, 0}), vec_int(z, {1, 0, 3})};
    const LinearCode small(z, 3, gens);
    std::uint64_t members = 0;
    for (const auto& v : all_vectors(z, 3)) members += small.contains(v);
    CHECK(members == span_size(z, 3, gens));
    CHECK(members == small.cardinality());
}

TEST_CASE("sum and intersection") {
    const Ring z = z4();
    const LinearCode p1(z, 3, {vec_int(z, {3, 1, 0}), vec_int(z, {0, 3, 1})});
    const LinearCode p2(z, 3, {vec_int(z, {1, 1, 1})});
    std::uint64_t common = 0;
    for (const auto& v : all_vectors(z, 3)) common += p1.contains(v) && p2.contains(v);
    CHECK(common == 1);
    CHECK(intersect(p1, p2).is_zero());
    CHECK(sum(p1, p2).cardinality() == 64);
    CHECK(sum(p1, LinearCode::zero(z, 3)) == p1);
    CHECK(intersect(p1, LinearCode::full(z, 3)) == p1);
    CHECK(intersect(p1, p1) == p1);
    CHECK(sum(p1, p1) == p1);
    CHECK(intersect(p1, sum(p1, p2)).contains(p1));
    CHECK_THROWS_AS(sum(p1, LinearCode::full(z, 2)), Error);
}

TEST_CASE("Euclidean dual") {
    const Ring s = gr42();
    CHECK(euclidean_dual(LinearCode::full(s, 3)).is_zero());
    CHECK(euclidean_dual(LinearCode::zero(s, 3)) == LinearCode::full(s, 3));

    const Ring z = z4();
    const LinearCode two(z, 1, {vec_int(z, {2})});
    CHECK(euclidean_dual(two) == two);

    const auto rows = example31_rows(s);
    const LinearCode c(s, 5, rows);
    const LinearCode d = euclidean_dual(c);
    CHECK(d.cardinality() == 4096);
    for (const auto& y : d.basis())
        for (const auto& r : rows) CHECK(dot(y, r).is_zero());
    CHECK(euclidean_dual(d) == c);

    const LinearCode half(z, 2, {vec_int(z, {2, 0})});
    CHECK(euclidean_dual(half).cardinality() == 8);
    CHECK(brute_dual_size(z, 2, {vec_int(z, {2, 0})}) == 8);
}

TEST_CASE("duality involution on random codes") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (const Ring& r : {z4(), gr42()}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 5;
            const LinearCode c = random_code(r, rng, n);
            const LinearCode d = euclidean_dual(c);
            CHECK(c.log_cardinality() + d.log_cardinality() == static_cast<std::uint64_t>(r.m() * r.s()) * n);
            CHECK(euclidean_dual(d) == c);
            CHECK(c.is_free() == (c.type()[1] == 0));
            for (const auto& y : d.basis())
                for (const auto& g : c.basis()) CHECK(dot(y, g).is_zero());
            if (r.size() == 4 && n <= 4) {
                CHECK(brute_dual_size(r, n, c.generators().row_list()) == d.cardinality());
                CHECK(span_size(r, n, c.generators().row_list()) == c.cardinality());
            }
            ++checked;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("shift matrices") {
    const Ring z = z4();
    const AssociateVector cyc(vec_int(z, {1, 0, 0}));
    const ShiftMatrices sm = shift_matrices(cyc);
    Matrix perm(z, 3, 3);
    perm(0, 1) = perm(1, 2) = perm(2, 0) = z.one();
    CHECK(sm.d == perm);
    CHECK(sm.d * sm.e == Matrix::identity(z, 3));

    const AssociateVector con(vec_int(z, {3, 0, 0, 0}));
    CHECK(shift_matrices(con).b == vec_int(z, {0, 0, 0, 3}));

    const Ring s = gr42();
    const RingElem a = s.generator(), a2 = a * a, two = s.from_int(2);
    const AssociateVector ex(Vec{s.from_int(3) * a, two * a2, s.zero(), two, s.zero()});
    RingElem a0_inv;
    for (const auto& y : s.elements())
        if (s.from_int(3) * a * y == s.one()) a0_inv = y;
    const ShiftMatrices exs = shift_matrices(ex);
    CHECK(exs.b[0] == -(two * a2 * a0_inv));
    CHECK(exs.b[2] == -(two * a0_inv));
    CHECK(exs.b[4] == a0_inv);
    CHECK(exs.d * exs.e == Matrix::identity(s, 5));
    CHECK(inverse(exs.d) == exs.e);

    // c·D_a realises multiplication by X modulo X^n - Ψ(a).
    const Vec c{a, s.one(), two, a2, s.from_int(3)};
    const Poly shifted = rem_monic(psi(c).shifted(1), ex.ambient());
    CHECK(psi(c * exs.d) == shifted);

    CHECK_THROWS_AS(AssociateVector(vec_int(z, {2, 1})), Error);
}

TEST_CASE("invariance") {
    const Ring z = z4();
    const Matrix d = shift_matrices(AssociateVector(vec_int(z, {1, 0, 0}))).d;
    CHECK(is_invariant(LinearCode::full(z, 3), d));
    const LinearCode p1(z, 3, {vec_int(z, {3, 1, 0}), vec_int(z, {0, 3, 1})});
    CHECK(is_invariant(p1, d));
    const LinearCode single(z, 3, {vec_int(z, {1, 2, 0})});
    CHECK_FALSE(is_invariant(single, d));
    CHECK_THROWS_AS(is_invariant(p1, Matrix::identity(z, 2)), Error);
}
