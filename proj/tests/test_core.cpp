#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plwb/linalg.hpp"
#include "plwb/points.hpp"
#include "plwb/poly.hpp"
#include "plwb/unit.hpp"
#include "plwb/wedge.hpp"

using namespace plwb;

TEST_CASE("factor_rational basics") {
    auto f6 = factor_rational(rat(6));
    CHECK(f6.coeff(UnitKey::make_prime(2)) == 1);
    CHECK(f6.coeff(UnitKey::make_prime(3)) == 1);
    CHECK(f6.size() == 2);

    CHECK(factor_rational(rat(1)).is_zero());

    auto f = factor_rational(rat(-8, 27));  // sign is torsion, dropped
    CHECK(f.coeff(UnitKey::make_prime(2)) == 3);
    CHECK(f.coeff(UnitKey::make_prime(3)) == -3);

    CHECK_THROWS_AS(factor_rational(rat(0)), errors::ZeroInput);
}

TEST_CASE("factor_rational reassembles the absolute value") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        long num = long(rng() % 100000) + 1;
        long den = long(rng() % 100000) + 1;
        Rat q = rat((rng() & 1) ? num : -num, den);
        CHECK(unit_value_abs(factor_rational(q)) == abs(q));
    }
}

TEST_CASE("evaluate is multiplicative on disjoint random inputs") {
    PointAssignment sigma{{1, Ext(rat(2))}, {2, Ext(rat(7, 3))}, {3, Ext(rat(-1, 2))}, {4, Ext(rat(9))}};
    SignedUnit m1 = atom_diff(1, 2) * atom_diff(3, 4).inverse();
    SignedUnit m2 = atom_diff(1, 3) * atom_diff(2, 4);
    FactoredUnit lhs = evaluate_unit(m1.unit + m2.unit, sigma);
    FactoredUnit rhs = evaluate_unit(m1.unit, sigma) + evaluate_unit(m2.unit, sigma);
    CHECK(lhs == rhs);
}

TEST_CASE("evaluate: projective infinity and degeneracy") {
    // d(a,b) with a->0, b->3 gives {3:1}
    PointAssignment sigma{{1, Ext(rat(0))}, {2, Ext(rat(3))}};
    FactoredUnit m;
    m.add(UnitKey::make_atom(1, 2), Rat(1));
    auto got = evaluate_unit(m, sigma);
    CHECK(got.coeff(UnitKey::make_prime(3)) == 1);
    CHECK(got.size() == 1);

    PointAssignment degenerate{{1, Ext(rat(3))}, {2, Ext(rat(3))}};
    CHECK_THROWS_AS(evaluate_unit(m, degenerate), errors::DegenerateAtom);

    PointAssignment with_inf{{1, Ext::infinity()}, {2, Ext(rat(3))}};
    CHECK(evaluate_unit(m, with_inf).is_zero());
}

TEST_CASE("cross_ratio_r2 formal exponents and evaluation") {
    SignedUnit r = cross_ratio_r2(1, 2, 3, 4);
    CHECK(r.unit.coeff(UnitKey::make_atom(1, 2)) == 1);
    CHECK(r.unit.coeff(UnitKey::make_atom(3, 4)) == 1);
    CHECK(r.unit.coeff(UnitKey::make_atom(2, 3)) == -1);
    CHECK(r.unit.coeff(UnitKey::make_atom(1, 4)) == -1);

    // r2 at (0,1,2,3) = (0-1)(2-3)/((1-2)(3-0)) = -1/3
    PointAssignment sigma{{1, Ext(rat(0))}, {2, Ext(rat(1))}, {3, Ext(rat(2))}, {4, Ext(rat(3))}};
    CHECK(evaluate_value(r.unit, sigma, r.sgn) == rat(-1, 3));
    auto cls = evaluate_unit(r.unit, sigma);
    CHECK(cls.coeff(UnitKey::make_prime(3)) == -1);
    CHECK(cls.size() == 1);

    Ext v = cross_ratio_r2_value(Ext(rat(0)), Ext(rat(1)), Ext(rat(2)), Ext(rat(3)));
    CHECK(v.v == rat(-1, 3));

    // (inf,0,1,x): infinity factors dropped
    Ext w = cross_ratio_r2_value(Ext::infinity(), Ext(rat(0)), Ext(rat(1)), Ext(rat(5)));
    // r2(inf,0,1,x) = (x3-x4)/(x2-x3) evaluated projectively: (1-5)/(0-1) = 4
    CHECK(w.v == rat(4));

    CHECK_THROWS_AS(cross_ratio_r2(1, 1, 3, 4), errors::DuplicatePoints);
}

TEST_CASE("cross_ratio_r3 evaluation") {
    SignedUnit r = cross_ratio_r3(1, 2, 3, 4, 5, 6);
    PointAssignment sigma;
    for (int i = 1; i <= 6; ++i) sigma[i] = Ext(rat(i - 1));  // (0,1,2,3,4,5)
    CHECK(evaluate_value(r.unit, sigma, r.sgn) == rat(1, 5));
    auto cls = evaluate_unit(r.unit, sigma);
    CHECK(cls.coeff(UnitKey::make_prime(5)) == -1);
    CHECK_THROWS_AS(cross_ratio_r3(1, 2, 3, 4, 5, 5), errors::DuplicatePoints);
}

TEST_CASE("one_minus of the birapport") {
    // r(a,b,c,d) = (a-c)(b-d)/((a-d)(b-c)), formal points 1..4.
    PointCtx ctx = PointCtx::polygon(4);
    SignedUnit r = atom_diff(1, 3) * atom_diff(2, 4) * atom_diff(1, 4).inverse() *
                   atom_diff(2, 3).inverse();
    SignedUnit om = one_minus(r, ctx);

    // Check value(one_minus(m)) + value(m) = 1 at random assignments.
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 20) {
        PointAssignment sigma;
        for (int i = 1; i <= 4; ++i) sigma[i] = Ext(rat(long(rng() % 2000) - 1000, long(rng() % 50) + 1));
        try {
            Rat v = evaluate_value(r.unit, sigma, r.sgn);
            Rat w = evaluate_value(om.unit, sigma, om.sgn);
            CHECK(v + w == 1);
            ++tested;
        } catch (const errors::DegenerateAtom&) {
            continue;
        }
    }
}

TEST_CASE("one_minus with bound points: 1 - x over {0,1,x}") {
    PointCtx ctx;
    ctx.points = {1, 2, 3};  // 1 -> 0, 2 -> 1, 3 -> free x
    ctx.bound[1] = rat(0);
    ctx.bound[2] = rat(1);
    SignedUnit x = atom_diff(3, 1);  // x - 0
    SignedUnit om = one_minus(x, ctx);
    // 1 - x = -(x - 1): atom d(2,3) up to sign
    CHECK(om.unit.coeff(UnitKey::make_atom(2, 3)) == 1);
    CHECK(om.unit.size() == 1);
    CHECK(om.sgn == 1);  // (1 - x) = +(literal x2 - x3)
}

TEST_CASE("one_minus rejects non-cross-ratio monomials") {
    PointCtx ctx = PointCtx::polygon(4);
    SignedUnit sq = atom_diff(1, 2) * atom_diff(1, 2);  // d(a,b)^2
    CHECK_THROWS_AS(one_minus(sq, ctx), errors::NotClosed);
}

TEST_CASE("kernel_basis basics") {
    QMatrix id3{{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    CHECK(kernel_basis(id3).empty());

    QMatrix row{{rat(1), rat(1)}};
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] * rat(1) + k[0][1] * rat(1) == 0);

    // rank-nullity on random matrices, and M v = 0 exactly
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 5;
        QMatrix m(rows, QVector(cols));
        for (auto& r : m)
            for (auto& x : r) x = rat(long(rng() % 11) - 5, 1 + long(rng() % 3));
        auto basis = kernel_basis(m);
        CHECK(rank(m) + basis.size() == cols);
        for (auto& v : basis)
            for (auto& row_m : m) {
                Rat acc(0);
                for (std::size_t c = 0; c < cols; ++c) acc += row_m[c] * v[c];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("span_membership") {
    QVector v{rat(2), rat(4)};
    std::vector<QVector> s{{rat(1), rat(2)}};
    auto c = span_membership(v, s);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);

    auto zero = span_membership(QVector{rat(0), rat(0)}, s);
    REQUIRE(zero.has_value());
    CHECK((*zero)[0] == 0);

    CHECK(!span_membership(QVector{rat(1), rat(0)}, s).has_value());
}

TEST_CASE("wedge canonicalization") {
    using W = Wedge<int>;
    // (b,a) = -(a,b); (a,a) = 0; randomized insertion order agrees
    W w1;
    w1.add({2, 1}, rat(1));
    W w2;
    w2.add({1, 2}, rat(-1));
    CHECK(w1 == w2);

    W z;
    z.add({3, 3}, rat(5));
    CHECK(z.is_zero());

    std::mt19937_64 rng(5);
    W a, b;
    std::vector<std::vector<int>> tuples{{1, 2, 3}, {2, 4, 7}, {1, 8, 9}};  // sorted
    for (auto& t : tuples) {
        auto s = t;
        a.add(s, rat(1));
        std::shuffle(s.begin(), s.end(), rng);
        int parity = 1;  // parity of s relative to sorted
        auto u = s;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j)
                if (u[i] > u[j]) {
                    std::swap(u[i], u[j]);
                    parity = -parity;
                }
        b.add(s, rat(parity));
    }
    CHECK(a == b);
}

TEST_CASE("poly exact division, including Laurent") {
    Poly x = Poly::var(1), y = Poly::var(2);
    Poly p = (x - y) * (x + y) * Poly::constant(rat(3));
    auto q = Poly::div_exact(p, x - y);
    REQUIRE(q.has_value());
    CHECK(*q == (x + y) * Poly::constant(rat(3)));
    CHECK(!Poly::div_exact(p + Poly::constant(rat(1)), x - y).has_value());

    // Laurent: (x + x^-1) divisible by x^-1 giving x^2 + 1
    Poly lau = Poly::var(1, 1) + Poly::var(1, -1);
    auto r = Poly::div_exact(lau, Poly::var(1, -1));
    REQUIRE(r.has_value());
    CHECK(*r == Poly::var(1, 2) + Poly::constant(rat(1)));
}
