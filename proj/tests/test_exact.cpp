#include "autbound/error.hpp"
#include "autbound/exact/cyclotomic.hpp"
#include "autbound/exact/literal.hpp"
#include "autbound/exact/reduction.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace autbound;

namespace {
Cyclotomic z(int m, long k = 1) { return Cyclotomic::root_of_unity(m, k); }
}  // namespace

TEST_CASE("rational basics")
{
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), MalformedInput);
    CHECK_THROWS_AS(parse_rational("x"), MalformedInput);
    CHECK(factorial(5) == 120);
    CHECK(integer_root(Integer(1000), 3) == 10);
    CHECK(integer_root(Integer(999), 3) == 9);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(60) == 16);
    CHECK(euler_phi(28) == 12);
    // Phi_105 is the first with a coefficient of absolute value 2
    auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::count(p105.begin(), p105.end(), -2) == 2);
}

TEST_CASE("cyclo_mul")
{
    CHECK(z(4) * z(4) == Cyclotomic(-1));
    CHECK(z(3) + z(3, 2) == Cyclotomic(-1));
    CHECK((z(7) * z(7, 6)).is_one());
    CHECK(z(12, 3) == z(4));
    CHECK(z(3) * z(4) == z(12, 7));
}

TEST_CASE("cyclo_inv")
{
    for (int m : {3, 5, 7, 12, 60}) {
        for (int k = 1; k < m; ++k) CHECK(z(m, k).inverse() == z(m, m - k));
    }
    CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
    // (1 + i)^-1: the oracle multiplies Gaussian rationals
    auto inv = (Cyclotomic(1) + z(4)).inverse();
    CHECK(inv.coefficients() == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
    CHECK(oracle::gauss_mul({1, 1}, {Rational(1, 2), Rational(-1, 2)}) == oracle::Gauss{1, 0});
    CHECK_THROWS_AS((void)Cyclotomic(0).inverse(), DivisionByZero);
}

TEST_CASE("named constants")
{
    CHECK(sqrt5() * sqrt5() == Cyclotomic(5));
    CHECK(sqrt_minus7() * sqrt_minus7() == Cyclotomic(-7));
    CHECK(i_sqrt3() * i_sqrt3() == Cyclotomic(-3));
    auto t = golden_ratio();
    CHECK(t * t == t + Cyclotomic(1));
}

TEST_CASE("lift and restrict")
{
    auto a = z(5, 2) + Cyclotomic(Rational(3, 7)) * z(5);
    auto up = a.lifted(60);
    CHECK(up.conductor() == 60);
    CHECK(up == a);
    CHECK(up.restricted(5).coefficients() == a.coefficients());
    CHECK_THROWS_AS((void)z(4).lifted(60).restricted(5), InvalidInput);
}

TEST_CASE("literals")
{
    auto v = parse_literal("1/2*z^0 + -1/2*z^15", 60);
    CHECK(v == Cyclotomic(Rational(1, 2)) - Cyclotomic(Rational(1, 2)) * z(4));
    CHECK(parse_literal("z^3 - 2*z", 12) == z(4) - Cyclotomic(2) * z(12));
    CHECK(parse_literal("-1", 7) == Cyclotomic(-1));
    CHECK(parse_literal(format_literal(v, 60), 60) == v);
    CHECK(format_literal(Cyclotomic(0), 5) == "0");
    CHECK(format_literal(Cyclotomic(Rational(-1, 3)), 1) == "-1/3");
    CHECK(format_literal(z(4) - Cyclotomic(2), 4) == "-2 + z");
    CHECK(format_literal(Cyclotomic(Rational(1, 2)) - Cyclotomic(3) * pow(z(12), 3), 12) == "1/2 - 3*z^3");
    CHECK_THROWS_AS(parse_literal("1/2*w^3", 4), MalformedInput);
    CHECK_THROWS_AS(parse_literal("", 4), MalformedInput);
}

TEST_CASE("find_reduction_prime")
{
    CHECK(find_reduction_prime(60).prime == oracle::smallest_prime_1_mod(60, 2));
    CHECK(find_reduction_prime(60).prime == 61);
    CHECK(find_reduction_prime(28).prime == 29);
    CHECK(find_reduction_prime(1).prime == 2);
    CHECK(find_reduction_prime(28, 30).prime == oracle::smallest_prime_1_mod(28, 30));
    auto map = find_reduction_prime(12);
    CHECK(map.prime == 13);
    CHECK(modp::pow(map.root, 12, map.prime) == 1);
    for (int k = 1; k < 12; ++k) CHECK(modp::pow(map.root, k, map.prime) != 1);
}

TEST_CASE("reduce")
{
    for (int m : {4, 12, 60}) {
        auto map = find_reduction_prime(m);
        CHECK(reduce(Cyclotomic(1), map) == 1);
        CHECK(reduce(z(m), map) == map.root);
        CHECK(reduce(z(4) * z(4), map) == map.prime - 1);
        auto r = reduce(z(4), map);
        CHECK(modp::mul(r, r, map.prime) == map.prime - 1);
    }
    auto map = find_reduction_prime(4, 5);
    CHECK_THROWS_AS(reduce(Cyclotomic(Rational(1, 5)), map), NonInvertibleDenominator);
    CHECK_THROWS_AS(reduce(z(3), map), InvalidInput);
}
