#include "autbound/catalog/registry.hpp"
#include "autbound/error.hpp"
#include "autbound/groups/generated_group.hpp"

#include <doctest.h>

using namespace autbound;

namespace {

GeneratedGroup group_of(const std::string& id) { return GeneratedGroup(find_group(id).generators); }

}  // namespace

TEST_CASE("trivial and scalar groups")
{
    GeneratedGroup g({identity<Cyclotomic>(3)});
    auto s = group_order(g);
    CHECK(s.order == 1);
    CHECK(s.scalar_order == 1);
    CHECK(s.pgl_order == 1);

    GeneratedGroup minus(find_group("minus-identity").generators);
    auto m = group_order(minus);
    CHECK(m.order == 2);
    CHECK(m.scalar_order == 2);
    CHECK(m.pgl_order == 1);
}

TEST_CASE("fermat groups")
{
    for (auto [n, d] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 5}, {0, 7}}) {
        ExampleRecord r = fermat_example(n, d);
        GeneratedGroup g(r.generators);
        auto s = group_order(g, {}, Strategy::closure);
        CAPTURE(r.id);
        CHECK(s.order == r.expected.linf_order);
        CHECK(s.scalar_order == r.expected.scalar_order);
        CHECK(s.pgl_order == r.expected.linx_order);
    }
    CHECK(fermat_example(1, 3).expected.linf_order == 162);
    CHECK(fermat_example(2, 5).expected.linx_order == 3000);
}

TEST_CASE("binary polyhedral groups")
{
    CHECK(group_order(group_of("Q8")).order == 8);
    CHECK(group_order(group_of("2.A4")).order == 24);
    CHECK(group_order(group_of("2.S4")).order == 48);
    auto a5 = group_order(group_of("2.A5"));
    CHECK(a5.order == 120);
    CHECK(a5.scalar_order == 2);
    CHECK(a5.pgl_order == 60);
    CHECK(group_order(group_of("A5-3dim")).pgl_order == 60);
}

TEST_CASE("closure and schreier-sims agree")
{
    for (const char* id : {"2.S4", "2.A5", "klein", "valentiner"}) {
        GeneratedGroup g = group_of(id);
        ReductionMap map = g.reduction_map();
        auto a = closure_order(g, map);
        auto b = schreier_sims_order(g, map);
        CAPTURE(id);
        CHECK(a.order == b.order);
        CHECK(a.scalar_order == b.scalar_order);
        CHECK(a.tier == Tier::closure);
        CHECK(b.tier == Tier::bsgs);
    }
}

TEST_CASE("tier-1 example orders")
{
    for (const auto& r : exceptional_examples()) {
        if (r.n > 2) continue;
        GeneratedGroup g(r.generators);
        auto s = group_order(g, {}, Strategy::closure);
        CAPTURE(r.id);
        CHECK(s.order == r.expected.linf_order);
        CHECK(s.scalar_order == r.expected.scalar_order);
        CHECK(s.pgl_order == r.expected.linx_order);
        REQUIRE(s.primes.size() == 2);
        CHECK(s.primes[0] != s.primes[1]);
    }
}

TEST_CASE("reduction is injective on small groups")
{
    for (const char* id : {"2.A4", "2.A5", "klein"}) {
        GeneratedGroup g = group_of(id);
        auto exact = exact_hash_closure(g);
        ReductionMap map = g.reduction_map();
        auto s = closure_order(g, map);
        CAPTURE(id);
        CHECK(Integer(static_cast<unsigned long>(exact.size())) == s.order);
        CHECK(exact_elements(g).size() == exact.size());
    }
}

TEST_CASE("center and irreducibility")
{
    GeneratedGroup klein = group_of("klein");
    auto s = closure_order(klein, klein.reduction_map());
    REQUIRE(s.center_order.has_value());
    CHECK(*s.center_order == 4);
    CHECK(is_irreducible(klein));
    CHECK(is_irreducible(group_of("2.A5")));
    CHECK_FALSE(is_irreducible(GeneratedGroup({diagonal_matrix({Cyclotomic(1), Cyclotomic(-1)})})));
    CHECK(is_irreducible(GeneratedGroup(find_example("ex-2-6").generators)));
}

TEST_CASE("derived subgroups")
{
    CHECK(group_order(derived_subgroup(group_of("2.S4"))).order == 24);
    CHECK(group_order(derived_subgroup(group_of("2.A4"))).order == 8);
    CHECK(group_order(derived_subgroup(group_of("2.A5"))).order == 120);
    CHECK(group_order(derived_subgroup(group_of("klein"))).order == 168);
    CHECK(group_order(derived_subgroup(group_of("Q8"))).order == 2);
    CHECK(group_order(derived_subgroup(group_of("minus-identity"))).order == 1);
}

TEST_CASE("non-finite and malformed generators")
{
    auto gens = find_group("valentiner").generators;
    gens[3] = wiman_printed_m4();
    GeneratedGroup g(gens);
    CHECK_THROWS_AS(check_generator_orders(g, g.reduction_map()), NonFiniteOrder);
    CHECK_THROWS_AS((void)group_order(g), NonFiniteOrder);

    CHECK_THROWS_AS(GeneratedGroup({}), InvalidInput);
    CHECK_THROWS_AS(GeneratedGroup({zeros<Cyclotomic>(2, 2)}), InvalidInput);
    CHECK_THROWS_AS(GeneratedGroup({identity<Cyclotomic>(2), identity<Cyclotomic>(3)}), DimensionMismatch);

    GroupCaps caps;
    caps.max_elements = 10;
    GeneratedGroup big = group_of("2.A5");
    CHECK_THROWS_AS((void)closure_order(big, big.reduction_map(), caps), CapExceeded);
}

TEST_CASE("block permutation images")
{
    ExampleRecord r = find_example("ex-4-12");
    GeneratedGroup g(r.generators);
    auto perms = block_permutation_images(g, r.block_sizes);
    CHECK(perms.size() == r.generators.size());
    CHECK(permutation_group_order(perms, 3) == 6);
    CHECK_THROWS_AS((void)block_permutation_images(GeneratedGroup(find_example("ex-4-6").generators), {2, 2, 2}),
                    InvalidInput);
}

TEST_CASE("large example orders")
{
    ExampleRecord todd = find_example("ex-4-6");
    auto s = group_order(GeneratedGroup(todd.generators));
    CHECK(s.order == todd.expected.linf_order);
    CHECK(s.scalar_order == 6);
    CHECK(s.pgl_order == todd.expected.linx_order);
    CHECK(s.tier == Tier::bsgs);

    ExampleRecord r = find_example("ex-4-12");
    auto t = group_order(GeneratedGroup(r.generators), {}, Strategy::bsgs);
    CHECK(t.order == r.expected.linf_order);
    CHECK(t.scalar_order == 12);
    CHECK(t.pgl_order == r.expected.linx_order);
    CHECK(t.primes.size() == 2);
}
