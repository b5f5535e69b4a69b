#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "levi/func.hpp"

using namespace levi;

namespace {

Func make(const MonoidPtr& m, const Field& f, std::vector<long long> vals) {
    std::vector<Scalar> s;
    s.reserve(vals.size());
    for (long long v : vals) s.push_back(Scalar::of_int(f, v));
    return Func(m, f, std::move(s));
}

}  // namespace

TEST_SUITE("funcspace") {

TEST_CASE("is_multiplicative") {
    const Field g2 = Field::gf(2);
    const MonoidPtr sl2 = Monoid::meet_semilattice(2);
    CHECK(is_multiplicative(Func::constant(sl2, Scalar::one(g2))));

    // indicator of {e} on a meet semilattice: x & y = top iff x = y = top
    CHECK(is_multiplicative(make(sl2, g2, {1, 0, 0, 0})));
    // indicator of a non-filter subset is not multiplicative
    CHECK_FALSE(is_multiplicative(make(sl2, g2, {0, 1, 0, 0})));

    // phi(k) = 2^k on Z_3 over GF(5): 2^3 = 8 = 3 != 1 = phi(0)
    const MonoidPtr c3 = Monoid::cyclic(3);
    CHECK_FALSE(is_multiplicative(make(c3, Field::gf(5), {1, 2, 4})));

    CHECK_THROWS_AS(MulFunc::check(make(c3, Field::gf(5), {1, 2, 4})), NotMultiplicative);
}

TEST_CASE("enumerate_multiplicative on the semilattice") {
    const MonoidPtr sl2 = Monoid::meet_semilattice(2);
    const auto muls = enumerate_multiplicative(sl2, Field::gf(2));
    REQUIRE(muls.size() == 4);
    // elements are ordered [full, {}, {1}, {2}]; the four nonzero
    // multiplicative functions are the filter indicators
    const Field g2 = Field::gf(2);
    CHECK(muls[0].func() == make(sl2, g2, {1, 0, 0, 0}));  // {top}
    CHECK(muls[1].func() == make(sl2, g2, {1, 0, 0, 1}));  // up-set of {2}
    CHECK(muls[2].func() == make(sl2, g2, {1, 0, 1, 0}));  // up-set of {1}
    CHECK(muls[3].func() == make(sl2, g2, {1, 1, 1, 1}));  // everything
    CHECK(std::is_sorted(muls.begin(), muls.end(), [](const MulFunc& a, const MulFunc& b) {
        return Func::canonical_less(a.func(), b.func());
    }));
}

TEST_CASE("enumerate_multiplicative on cyclic groups") {
    const auto c2_g5 = enumerate_multiplicative(Monoid::cyclic(2), Field::gf(5));
    REQUIRE(c2_g5.size() == 2);  // t^2 = 1 in GF(5): t = 1 or 4
    CHECK(c2_g5[0].func() == make(Monoid::cyclic(2), Field::gf(5), {1, 1}));
    CHECK(c2_g5[1].func() == make(Monoid::cyclic(2), Field::gf(5), {1, 4}));

    const auto c3_g2 = enumerate_multiplicative(Monoid::cyclic(3), Field::gf(2));
    REQUIRE(c3_g2.size() == 1);  // t^3 = 1 in GF(2) forces t = 1
    CHECK(c3_g2[0].func() == Func::constant(Monoid::cyclic(3), Scalar::one(Field::gf(2))));
}

TEST_CASE("enumeration count on cyclic groups matches gcd(n, p-1)") {
    // independent count: characters of Z_n into GF(p)* are the solutions of
    // t^n = 1, a cyclic subgroup of order gcd(n, p-1)
    for (int n = 2; n <= 6; ++n)
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto muls = enumerate_multiplicative(Monoid::cyclic(n), Field::gf(p));
            CHECK(muls.size() == static_cast<std::size_t>(std::gcd<long long>(n, p - 1)));
        }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_multiplicative(Monoid::cyclic(3), Field::rationals()),
                    InfiniteField);
    // 3^30 candidate vectors blow the 2^24 budget
    CHECK_THROWS_AS(enumerate_multiplicative(Monoid::cyclic(30), Field::gf(3)), BudgetExceeded);
}

TEST_CASE("every enumerated function sends e to 1") {
    for (const char* name : {"meet_semilattice(2)", "meet_semilattice(3)", "symmetric3",
                             "cyclic(4)", "direct_product(cyclic(2),cyclic(3))"})
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const MonoidPtr m = Monoid::from_catalog(name);
            for (const MulFunc& mu : enumerate_multiplicative(m, Field::gf(p)))
                CHECK(mu(m->identity()) == Scalar::one(Field::gf(p)));
        }
}

TEST_CASE("distinct nonzero multiplicative functions are independent") {
    for (const char* name :
         {"meet_semilattice(2)", "meet_semilattice(3)", "symmetric3", "cyclic(5)", "cyclic(6)"})
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const MonoidPtr m = Monoid::from_catalog(name);
            std::vector<Func> funcs;
            for (const MulFunc& mu : enumerate_multiplicative(m, Field::gf(p)))
                funcs.push_back(mu.func());
            CHECK(rank(funcs) == static_cast<int>(funcs.size()));
        }
}

TEST_CASE("rank") {
    const MonoidPtr sl2 = Monoid::meet_semilattice(2);
    const Field g2 = Field::gf(2);
    std::vector<Func> funcs;
    for (const MulFunc& mu : enumerate_multiplicative(sl2, g2)) funcs.push_back(mu.func());
    CHECK(rank(funcs) == 4);

    const std::vector<Func> dup = {funcs[0], funcs[0]};
    CHECK(rank(dup) == 1);
    CHECK(rank(std::vector<Func>{}) == 0);
    const std::vector<Func> zero = {Func::zero(sl2, g2)};
    CHECK(rank(zero) == 0);

    const std::vector<Func> mixed = {funcs[0], Func::zero(sl2, Field::gf(3))};
    CHECK_THROWS_AS(rank(mixed), MixedDomains);
}

TEST_CASE("pointwise operations") {
    const MonoidPtr c3 = Monoid::cyclic(3);
    const Field g3 = Field::gf(3);
    const Func phi = make(c3, g3, {1, 2, 0});
    CHECK(pointwise_scale(Scalar::zero(g3), phi) == Func::zero(c3, g3));
    CHECK(pointwise_add(phi, pointwise_neg(phi)) == Func::zero(c3, g3));
    CHECK(pointwise_scale(Scalar::of_int(g3, 2), phi) == make(c3, g3, {2, 1, 0}));
    CHECK(pointwise_sub(phi, phi) == Func::zero(c3, g3));
    CHECK_THROWS_AS(pointwise_add(phi, Func::zero(c3, Field::gf(5))), MixedDomains);
    CHECK_THROWS_AS(pointwise_add(phi, Func::zero(Monoid::cyclic(4), g3)), MixedDomains);
}

TEST_CASE("express_in_basis") {
    const MonoidPtr sl2 = Monoid::meet_semilattice(2);
    const Field g2 = Field::gf(2);
    std::vector<Func> basis;
    for (const MulFunc& mu : enumerate_multiplicative(sl2, g2)) basis.push_back(mu.func());

    const Func target = pointwise_add(basis[0], basis[1]);
    auto coeffs = express_in_basis(target, basis);
    REQUIRE(coeffs.has_value());
    CHECK(*coeffs == std::vector<Scalar>{Scalar::gf(2, 1), Scalar::gf(2, 1), Scalar::gf(2, 0),
                                         Scalar::gf(2, 0)});

    // reconstruct and compare exactly
    Func rebuilt = Func::zero(sl2, g2);
    for (std::size_t i = 0; i < basis.size(); ++i)
        rebuilt = pointwise_add(rebuilt, pointwise_scale((*coeffs)[i], basis[i]));
    CHECK(rebuilt == target);

    // outside the span: rank jumps when the target joins the basis
    const std::vector<Func> small = {basis[0], basis[1]};
    const Func outside = make(sl2, g2, {0, 1, 0, 0});
    std::vector<Func> joined = small;
    joined.push_back(outside);
    REQUIRE(rank(joined) == rank(small) + 1);
    CHECK_FALSE(express_in_basis(outside, small).has_value());

    auto zero_coeffs = express_in_basis(Func::zero(sl2, g2), basis);
    REQUIRE(zero_coeffs.has_value());
    for (const Scalar& c : *zero_coeffs) CHECK(c.is_zero());
}

TEST_CASE("express_in_basis over the rationals") {
    const MonoidPtr c2 = Monoid::cyclic(2);
    const Field q = Field::rationals();
    const Func one = Func::constant(c2, Scalar::one(q));
    const Func sign = make(c2, q, {1, -1});
    const std::vector<Func> basis = {one, sign};
    // [1/2, 3/2] = 1*one - 1/2*sign ... solved exactly
    const Func target = Func(c2, q, {Scalar::rational(1, 2), Scalar::rational(3, 2)});
    auto coeffs = express_in_basis(target, basis);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == Scalar::rational(1, 1));
    CHECK((*coeffs)[1] == Scalar::rational(-1, 2));
}

TEST_CASE("products of enumerated functions stay in the enumeration when nonzero") {
    for (const char* name : {"meet_semilattice(2)", "meet_semilattice(3)"}) {
        const MonoidPtr m = Monoid::from_catalog(name);
        const auto muls = enumerate_multiplicative(m, Field::gf(3));
        for (const MulFunc& a : muls)
            for (const MulFunc& b : muls) {
                const Func prod = pointwise_mul(a.func(), b.func());
                CHECK(is_multiplicative(prod));
                if (prod.is_zero()) continue;
                const bool found = std::any_of(muls.begin(), muls.end(), [&](const MulFunc& c) {
                    return c.func() == prod;
                });
                CHECK(found);
            }
    }
}

}  // TEST_SUITE
