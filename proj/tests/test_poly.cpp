#include "autbound/catalog/registry.hpp"
#include "autbound/error.hpp"
#include "autbound/poly/action.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace autbound;

namespace {

HomogPoly klein_quartic() { return *find_example("ex-1-4").polynomial; }

HomogPoly binary(std::vector<std::pair<Monomial, Cyclotomic>> terms, int degree)
{
    return HomogPoly::from_terms(2, degree, terms);
}

}  // namespace

TEST_CASE("homogeneous polynomial basics")
{
    HomogPoly f = HomogPoly::fermat(3, 4);
    CHECK(f.terms().size() == 3);
    CHECK(f.terms().begin()->first == Monomial{4, 0, 0});
    CHECK(f.to_string() == "x0^4 + x1^4 + x2^4");
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(HomogPoly::from_terms(2, 3, {{{1, 1}, 1}}), InvalidInput);
    CHECK_THROWS_AS(HomogPoly::from_terms(2, 2, {{{1, 1, 0}, 1}}), InvalidInput);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(3, 2).front() == Monomial{2, 0, 0});
    CHECK(monomials_of_degree(3, 2).back() == Monomial{0, 0, 2});
}

TEST_CASE("action")
{
    HomogPoly f = klein_quartic();
    CHECK(act(identity<Cyclotomic>(3), f) == f);
    const Cyclotomic c = Cyclotomic::root_of_unity(5) + 2;
    CHECK(act(scalar_matrix(3, c), f) == f.scaled(pow(c, -4)));
    CHECK(act(find_example("ex-1-4").generators[1], f) == f);
    CHECK_THROWS_AS((void)act(identity<Cyclotomic>(2), f), DimensionMismatch);

    // (g.f)(x) = f(g^{-1}x): x0 under diag(2,1) becomes x0/2.
    HomogPoly x0 = binary({{{1, 0}, 1}}, 1);
    CHECK(act(diagonal_matrix({Cyclotomic(2), Cyclotomic(1)}), x0) == x0.scaled(make_rational(1, 2)));
    // Left action: act(gh) = act(g) act(h) for non-commuting g, h.
    CycloMatrix g = permutation_matrix({1, 0});
    CycloMatrix h = diagonal_matrix({Cyclotomic(3), Cyclotomic(1)});
    HomogPoly p = binary({{{2, 0}, 1}, {{1, 1}, 5}}, 2);
    CHECK(act(multiply(g, h), p) == act(g, act(h, p)));
}

TEST_CASE("printed polynomials are invariant under printed generators")
{
    for (const auto& r : exceptional_examples()) {
        CAPTURE(r.id);
        REQUIRE(r.polynomial.has_value());
        CHECK(is_invariant(r.generators, *r.polynomial) == r.printed_invariance);
    }
    CHECK_FALSE(find_example("ex-1-6").printed_invariance);
}

TEST_CASE("semi-invariant characters")
{
    auto klein = find_example("ex-1-4");
    auto chi = semi_invariant_character({klein.generators[0]}, klein_quartic());
    REQUIRE(chi.has_value());
    CHECK((*chi)[0] == 1);

    HomogPoly octa = binary({{{5, 1}, 1}, {{1, 5}, -1}}, 6);
    CycloMatrix d8 = diagonal_matrix({Cyclotomic::root_of_unity(8), Cyclotomic::root_of_unity(8, -1)});
    chi = semi_invariant_character({d8}, octa);
    REQUIRE(chi.has_value());
    CHECK((*chi)[0] == -1);

    HomogPoly xy = binary({{{1, 1}, 1}}, 2);
    chi = semi_invariant_character({permutation_matrix({1, 0})}, xy);
    REQUIRE(chi.has_value());
    CHECK((*chi)[0] == 1);

    HomogPoly x2 = binary({{{2, 0}, 1}}, 2);
    CHECK_FALSE(semi_invariant_character({permutation_matrix({1, 0})}, x2).has_value());
}

TEST_CASE("smoothness witnesses and avoided variables")
{
    CHECK(smoothness_necessary(HomogPoly::fermat(4, 7)).pass);
    auto k = smoothness_necessary(klein_quartic());
    CHECK(k.pass);
    CHECK(*k.variables[0].witness == Monomial{3, 1, 0});
    CHECK(*k.variables[1].witness == Monomial{0, 3, 1});
    CHECK(*k.variables[2].witness == Monomial{1, 0, 3});
    auto bad = smoothness_necessary(binary({{{5, 0}, 1}}, 5));
    CHECK_FALSE(bad.pass);
    CHECK(bad.variables[0].witness.has_value());
    CHECK_FALSE(bad.variables[1].witness.has_value());

    CHECK(avoids_variables(*find_example("ex-2-12").polynomial, 1));
    HomogPoly divisible = HomogPoly::from_terms(3, 3, {{{1, 2, 0}, 1}, {{1, 0, 2}, 1}});
    CHECK_FALSE(avoids_variables(divisible, 1));
    CHECK_THROWS_AS((void)avoids_variables(divisible, 0), PreconditionViolation);
    CHECK_THROWS_AS((void)avoids_variables(divisible, 3), PreconditionViolation);
}

TEST_CASE("diagonal stabilizer")
{
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 12; ++d) {
            auto s = diagonal_stabilizer(HomogPoly::fermat(n, d));
            CHECK(s.order == ipow(Integer(d), n));
            CHECK(s.elementary_divisors == std::vector<Integer>(n, Integer(d)));
        }
    }
    auto k = diagonal_stabilizer(klein_quartic());
    CHECK(k.order == 28);
    CHECK(k.elementary_divisors == std::vector<Integer>{1, 1, 28});

    // x0 x1 fixes a one-parameter torus, so the lattice has rank 1.
    CHECK_THROWS_AS((void)diagonal_stabilizer(binary({{{1, 1}, 1}}, 2)), RankDeficient);

    auto e26 = diagonal_stabilizer(*find_example("ex-2-6").polynomial);
    CHECK(e26.order == 576);
    CHECK(e26.elementary_divisors == std::vector<Integer>{1, 1, 24, 24});

    // Hessian group sextic: three times the even-sum lattice.
    auto hess = diagonal_stabilizer(*find_example("ex-1-6-2").polynomial);
    CHECK(hess.order == 54);
    CHECK(hess.elementary_divisors == std::vector<Integer>{3, 3, 6});
}

TEST_CASE("exponent minor")
{
    auto f = exponent_minor_bound(HomogPoly::fermat(4, 5));
    CHECK(f.determinant == 625);
    CHECK(f.ok);

    auto k = exponent_minor_bound(klein_quartic());
    CHECK(k.determinant == oracle::leibniz_det({{3, 1, 0}, {0, 3, 1}, {1, 0, 3}}));
    CHECK(k.determinant == 28);
    CHECK(k.bound == 64);

    auto e = exponent_minor_bound(*find_example("ex-2-6").polynomial);
    const long expect = oracle::leibniz_det({{5, 1, 0, 0}, {1, 5, 0, 0}, {0, 0, 5, 1}, {0, 0, 1, 5}});
    CHECK(expect == 576);
    CHECK(e.determinant == expect);
    CHECK(e.ok);

    CHECK_THROWS_AS((void)exponent_minor_bound(binary({{{5, 0}, 1}}, 5)), PreconditionViolation);
}

TEST_CASE("block collapse")
{
    for (const auto& r : exceptional_examples()) {
        if (r.block_sizes.size() < 2) continue;
        CAPTURE(r.id);
        auto report = block_scalar_stabilizer(*r.polynomial, r.block_sizes, 1);
        REQUIRE(report.good_draw.has_value());
        const int blocks = static_cast<int>(r.block_sizes.size());
        CHECK(report.stabilizer->order <= ipow(Integer(r.d), blocks));
    }
    // Two variables in one block: x0^2 - x1^2 collapses to zero when c0 = +-c1,
    // but a general draw survives.
    HomogPoly f = binary({{{2, 0}, 1}, {{0, 2}, -1}}, 2);
    CHECK(collapse_blocks(f, {2}, {Cyclotomic(3), Cyclotomic(3)}).is_zero());
    CHECK(block_scalar_stabilizer(f, {2}, 7).good_draw.has_value());
}

TEST_CASE("printed quartic generator is not in Lin(f)")
{
    auto r = find_example("ex-2-4");
    CHECK(act(quartic_printed_m5(), *r.polynomial) != *r.polynomial);
    CycloMatrix d = diagonal_matrix({1, 1, Cyclotomic::root_of_unity(4), Cyclotomic::root_of_unity(4)});
    CHECK(equal(multiply(d, quartic_printed_m5()), r.generators[4]));
}
