#include "autbound/catalog/io.hpp"
#include "autbound/catalog/verify.hpp"
#include "autbound/error.hpp"
#include "autbound/poly/action.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace autbound;

namespace {

std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("autbound_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

bool same_generators(const std::vector<CycloMatrix>& a, const std::vector<CycloMatrix>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].rows() != b[i].rows() || a[i].cols() != b[i].cols()) return false;
        for (Eigen::Index r = 0; r < a[i].rows(); ++r) {
            for (Eigen::Index c = 0; c < a[i].cols(); ++c) {
                if (a[i](r, c) != b[i](r, c)) return false;
            }
        }
    }
    return true;
}

void check_same_record(const ExampleRecord& a, const ExampleRecord& b)
{
    CHECK(a.id == b.id);
    CHECK(a.n == b.n);
    CHECK(a.d == b.d);
    CHECK(a.expected.linf_order == b.expected.linf_order);
    CHECK(a.expected.scalar_order == b.expected.scalar_order);
    CHECK(a.expected.linx_order == b.expected.linx_order);
    CHECK(a.block_sizes == b.block_sizes);
    CHECK(a.printed_invariance == b.printed_invariance);
    CHECK(a.needs_tier3 == b.needs_tier3);
    CHECK(same_generators(a.generators, b.generators));
    REQUIRE(a.polynomial.has_value() == b.polynomial.has_value());
    if (a.polynomial) CHECK(*a.polynomial == *b.polynomial);
}

VerificationReport report_with(std::initializer_list<CheckStatus> statuses)
{
    VerificationReport r;
    r.id = "synthetic";
    for (auto s : statuses) r.checks.push_back({"c", "", "", s, ""});
    return r;
}

}  // namespace

TEST_CASE("json round trip of examples and groups")
{
    for (const auto& r : exceptional_examples()) {
        CAPTURE(r.id);
        check_same_record(example_from_json(example_to_json(r)), r);
        check_same_record(example_from_json(Json::parse(example_to_json(r).dump())), r);
    }
    for (int n = 1; n <= 2; ++n) {
        const auto r = fermat_example(n, 5);
        check_same_record(example_from_json(example_to_json(r)), r);
    }
    for (const auto& g : named_groups()) {
        CAPTURE(g.id);
        CHECK(same_generators(group_from_json(group_to_json(g.generators)), g.generators));
    }
}

TEST_CASE("shipped catalog files match the built-in registry")
{
    const std::filesystem::path dir = std::filesystem::path(AUTBOUND_DATA_DIR) / "catalog";
    for (const auto& r : exceptional_examples()) {
        CAPTURE(r.id);
        check_same_record(example_from_json(read_json_file(dir / (r.id + ".json"))), r);
    }
    for (const auto& g : named_groups()) {
        CAPTURE(g.id);
        CHECK(same_generators(group_from_json(read_json_file(dir / "groups" / (g.id + ".json"))), g.generators));
    }
    Json all = Json::array();
    for (const auto& r : exceptional_examples()) all.push_back(example_to_json(r));
    const auto back = registry_from_json(Json{{"examples", all}});
    REQUIRE(back.size() == exceptional_examples().size());
    for (std::size_t i = 1; i < back.size(); ++i) CHECK(back[i - 1].id < back[i].id);
}

TEST_CASE("malformed json is rejected")
{
    Json g = group_to_json(find_group("Q8").generators);
    Json no_conductor = g;
    no_conductor.erase("conductor");
    CHECK_THROWS_AS((void)group_from_json(no_conductor), MalformedInput);
    Json ragged = g;
    ragged["generators"][0][0].push_back("0");
    CHECK_THROWS_AS((void)group_from_json(ragged), MalformedInput);
    Json bad_entry = g;
    bad_entry["generators"][0][0][0] = "1/0";
    CHECK_THROWS_AS((void)group_from_json(bad_entry), MalformedInput);
    CHECK_THROWS_AS((void)group_from_json(Json::array()), MalformedInput);

    Json e = example_to_json(find_example("ex-1-4"));
    Json wrong_product = e;
    wrong_product["expected"]["linx_order"] = 169;
    CHECK_THROWS_AS((void)example_from_json(wrong_product), MalformedInput);
    Json wrong_degree = e;
    wrong_degree["d"] = 5;
    CHECK_THROWS_AS((void)example_from_json(wrong_degree), MalformedInput);

    const auto dir = scratch_dir("malformed");
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS((void)read_json_file(dir / "broken.json"), MalformedInput);
    CHECK_THROWS_AS((void)read_json_file(dir / "missing.json"), MalformedInput);
}

TEST_CASE("registry polynomials pass the linear-subspace test")
{
    auto check = [](const ExampleRecord& r) {
        CAPTURE(r.id);
        REQUIRE(r.polynomial);
        const HomogPoly& f = *r.polynomial;
        const int nvars = f.nvars();
        CHECK(smoothness_necessary(f).pass);
        // A smooth hypersurface contains no coordinate subspace of half its
        // dimension or more.
        for (int k = 1; 2 * k < nvars; ++k) CHECK(avoids_variables(f, k));
        const DiagonalStabilizer s = diagonal_stabilizer(f);
        CHECK(s.order <= ipow(Integer(r.d), static_cast<unsigned>(nvars)));
        CHECK(s.order > 0);
        const MinorReport minor = exponent_minor_bound(f);
        CHECK(minor.determinant > 0);
        CHECK(minor.determinant <= minor.bound);
        CHECK(minor.bound == ipow(Integer(r.d), static_cast<unsigned>(nvars)));
    };
    for (const auto& r : exceptional_examples()) check(r);
    for (int n = 1; n <= 4; ++n) {
        for (int d = 3; d <= 8; ++d) check(fermat_example(n, d));
    }
}

TEST_CASE("bound consistency of every record")
{
    for (const auto& r : exceptional_examples()) {
        CAPTURE(r.id);
        const auto report = bound_consistency(r);
        CHECK(report.outcome() == Outcome::pass);
        for (const auto& c : report.checks) {
            CAPTURE(c.name);
            CHECK(c.status == CheckStatus::pass);
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int d = 3; d <= 12; ++d) CHECK(bound_consistency(fermat_example(n, d)).outcome() == Outcome::pass);
    }
    ExampleRecord inflated = find_example("ex-2-6");
    inflated.expected.linx_order *= 2;
    inflated.expected.linf_order *= 2;
    CHECK(bound_consistency(inflated).outcome() == Outcome::fail);
}

TEST_CASE("verify_all over the registry")
{
    const auto reports = verify_all(exceptional_examples(), {}, {2, 3, 4});
    REQUIRE(reports.size() == exceptional_examples().size() + 4);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        if (r.id == "ex-4-12") {
            CHECK(r.outcome() == Outcome::conditional_pass);
        } else {
            CHECK(r.outcome() == Outcome::pass);
        }
    }
    CHECK(exit_code(reports) == 3);
    CHECK(reports.back().id == "fermat-2-4");
}

TEST_CASE("a wrong expected order fails verification")
{
    ExampleRecord r = find_example("ex-1-6-2");
    r.expected.linx_order = 432;
    r.expected.linf_order = 2592;
    const auto report = verify_example(r);
    CHECK(report.outcome() == Outcome::fail);
    CHECK(exit_code({report}) == 1);
}

TEST_CASE("exit codes")
{
    CHECK(exit_code({}) == 0);
    CHECK(exit_code({report_with({CheckStatus::pass})}) == 0);
    CHECK(exit_code({report_with({CheckStatus::pass, CheckStatus::skipped})}) == 3);
    CHECK(exit_code({report_with({CheckStatus::skipped}), report_with({CheckStatus::fail})}) == 1);
    CHECK(report_with({CheckStatus::pass, CheckStatus::skipped}).outcome() == Outcome::conditional_pass);
    CHECK(to_string(Outcome::conditional_pass) == "conditional-pass");
}

TEST_CASE("external generator files")
{
    const auto empty = scratch_dir("external_empty");
    const auto missing = verify_external(empty);
    REQUIRE(missing.size() == external_specs().size());
    for (const auto& r : missing) CHECK(r.outcome() == Outcome::conditional_pass);
    CHECK(exit_code(missing) == 3);

    // Stand-in files: 2.A5 has smallest semi-invariant degree 12 and Q8 has
    // a semi-invariant of degree 2, so only the first matches its claim.
    const auto dir = scratch_dir("external_standin");
    write_json_file(dir / "sp4_3.json", group_to_json(find_group("2.A5").generators));
    write_json_file(dir / "psp4_3_dim5.json", group_to_json(find_group("Q8").generators));
    const auto reports = verify_external(dir);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        if (r.id == "Sp4(3)") CHECK(r.outcome() == Outcome::pass);
        else if (r.id == "PSp4(3)-5dim") CHECK(r.outcome() == Outcome::fail);
        else CHECK(r.outcome() == Outcome::conditional_pass);
    }
    CHECK(exit_code(reports) == 1);
}

TEST_CASE("shipped external generator files")
{
    const auto reports = verify_external(std::filesystem::path(AUTBOUND_DATA_DIR) / "external");
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.outcome() == Outcome::pass);
        CHECK(r.checks.size() == 2);
    }
}
