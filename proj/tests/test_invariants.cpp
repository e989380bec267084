#include "autbound/catalog/registry.hpp"
#include "autbound/error.hpp"
#include "autbound/invariants/invariants.hpp"
#include "autbound/poly/action.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace autbound;

namespace {

GeneratedGroup group_of(const std::string& id) { return GeneratedGroup(find_group(id).generators); }

// First two positive degrees with nonzero coefficient.
std::pair<int, int> first_two(const MolienPrefix& m)
{
    std::vector<int> ks;
    for (std::size_t k = 1; k < m.coefficients.size() && ks.size() < 2; ++k) {
        if (m.coefficients[k] > 0) ks.push_back(static_cast<int>(k));
    }
    REQUIRE(ks.size() == 2);
    return {ks[0], ks[1]};
}

}  // namespace

TEST_CASE("molien of trivial and sign groups")
{
    GeneratedGroup trivial({identity<Cyclotomic>(3)});
    auto m = molien_series(trivial, 10);
    for (int k = 0; k <= 10; ++k) CHECK(m.coefficients[k] == (k + 2) * (k + 1) / 2);

    auto s = molien_series(group_of("minus-identity"), 15);
    for (int k = 0; k <= 15; ++k) CHECK(s.coefficients[k] == (k % 2 ? 0 : k + 1));
}

TEST_CASE("molien matches gaussian oracle for Q8 and 2.A4")
{
    using oracle::Gauss;
    const Gauss o{0, 0}, one{1, 0}, i{0, 1}, mi{0, -1}, mone{-1, 0};
    oracle::GaussMatrix qi{i, o, o, mi}, qj{o, one, mone, o};
    mpq_class h(1, 2);
    oracle::GaussMatrix w{Gauss{h, h}, Gauss{h, h}, Gauss{-h, h}, Gauss{h, -h}};

    auto q8 = oracle::gauss_molien({qi, qj}, 12);
    auto m = molien_series(group_of("Q8"), 12);
    for (int k = 0; k <= 12; ++k) CHECK(Rational(m.coefficients[k]) == q8[k]);
    CHECK(m.coefficients[4] == 2);

    auto a4 = oracle::gauss_molien({qi, qj, w}, 12);
    auto n = molien_series(group_of("2.A4"), 12);
    for (int k = 0; k <= 12; ++k) CHECK(Rational(n.coefficients[k]) == a4[k]);
}

TEST_CASE("binary polyhedral semi-invariant degrees")
{
    CHECK(smallest_invariant_degree(group_of("2.A5")) == 12);
    CHECK(smallest_semiinvariant_degree(group_of("2.A5")) == 12);
    CHECK(smallest_semiinvariant_degree(group_of("2.S4")) == 6);
    CHECK(smallest_semiinvariant_degree(group_of("2.A4")) == 4);
    CHECK_THROWS_AS((void)smallest_invariant_degree(group_of("2.A5"), 11), NoneFound);
}

TEST_CASE("ternary semi-invariant degrees")
{
    auto klein = molien_series(derived_subgroup(group_of("klein")), 12);
    CHECK(first_two(klein) == std::pair{4, 6});
    auto val = molien_series(derived_subgroup(group_of("valentiner")), 12);
    CHECK(val.group_order == 1080);
    CHECK(first_two(val) == std::pair{6, 12});
    CHECK(val.coefficients[6] == 1);
    auto a5 = molien_series(derived_subgroup(group_of("A5-3dim")), 6);
    CHECK(first_two(a5) == std::pair{2, 4});
    CHECK(smallest_semiinvariant_degree(group_of("A5-3dim")) == 2);

    GeneratedGroup hessian(find_example("ex-1-6-2").generators);
    CHECK(smallest_semiinvariant_degree(hessian) == 6);
}

TEST_CASE("reynolds ranks agree with molien")
{
    for (const char* id : {"Q8", "2.A4", "2.S4", "2.A5", "klein"}) {
        GeneratedGroup g = group_of(id);
        auto m = molien_series(g, 12);
        auto r = reynolds_ranks(g, 12);
        CAPTURE(id);
        for (int k = 0; k <= 12; ++k) CHECK(Integer(r[k]) == m.coefficients[k]);
    }
}

TEST_CASE("reynolds bases")
{
    GeneratedGroup trivial({identity<Cyclotomic>(3)});
    auto lin = reynolds_basis(trivial, 1);
    REQUIRE(lin.size() == 3);
    for (int j = 0; j < 3; ++j) {
        Monomial m(3, 0);
        m[j] = 1;
        CHECK(lin[j].terms().size() == 1);
        CHECK(lin[j].coefficient(m) == 1);
    }

    auto q8 = reynolds_basis(group_of("Q8"), 4);
    CHECK(q8.size() == 2);
    for (const auto& f : q8) CHECK(is_invariant(find_group("Q8").generators, f));

    GeneratedGroup val = group_of("valentiner");
    CHECK(invariant_dimension(val, 6) == 1);
    auto sextic = reynolds_basis(val, 6);
    REQUIRE(sextic.size() == 1);
    CHECK(is_invariant(val.generators(), sextic[0]));
    CHECK(smoothness_necessary(sextic[0]).pass);

    GeneratedGroup klein = group_of("klein");
    auto quartic = reynolds_basis(klein, 4);
    REQUIRE(quartic.size() == 1);
    const HomogPoly kq = *find_example("ex-1-4").polynomial;
    const Cyclotomic ratio = quartic[0].coefficient({3, 1, 0}) / kq.coefficient({3, 1, 0});
    CHECK(quartic[0] == kq.scaled(ratio));
}
