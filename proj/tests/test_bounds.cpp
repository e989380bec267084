#include "autbound/bounds/bound_calculus.hpp"
#include "autbound/error.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace autbound;

namespace {

struct Expected {
    int index, n;
    std::vector<int> blocks;
    int max_d;
    std::string ratio;
};

std::vector<Expected> load_table()
{
    std::ifstream in(std::string(AUTBOUND_TEST_DATA_DIR) + "/exceptional_partitions.csv");
    std::string line;
    std::getline(in, line);
    std::vector<Expected> rows;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string field;
        Expected e;
        std::getline(ss, field, ',');
        e.index = std::stoi(field);
        std::getline(ss, field, ',');
        e.n = std::stoi(field);
        std::getline(ss, field, ',');
        std::stringstream bs(field);
        int b;
        while (bs >> b) e.blocks.push_back(b);
        std::getline(ss, field, ',');
        e.max_d = std::stoi(field);
        std::getline(ss, e.ratio, ',');
        rows.push_back(e);
    }
    return rows;
}

}  // namespace

TEST_CASE("partition basics")
{
    Partition p = Partition::parse("1, 2,4,2");
    CHECK(p.blocks() == std::vector<int>{4, 2, 2, 1});
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.to_string() == "(4,2^2,1)");
    CHECK(Partition::ones(3).is_fermat());
    CHECK_THROWS_AS(Partition::parse("3,,1"), MalformedInput);
    CHECK_THROWS_AS(Partition::parse("0,1"), MalformedInput);
    auto five = partitions(5);
    CHECK(five.size() == 7);
    CHECK(five.front() == Partition({5}));
    CHECK(five[3] == Partition({3, 1, 1}));
    CHECK(five.back() == Partition::ones(5));
    CHECK(partitions(26).size() == 2436);
}

TEST_CASE("xi")
{
    CHECK(xi(1) == 1);
    CHECK(xi(2) == 60);
    CHECK(xi(3) == 360);
    CHECK(xi(4) == 25920);
    CHECK(xi(5) == 25920);
    CHECK(xi(6) == 6531840);
    CHECK(xi(7) == 1451520);
    CHECK(xi(8) == 348364800);
    CHECK(xi(9) == 4199040);
    CHECK(xi(12) == Integer("448345497600"));
    CHECK(xi(10) == 39916800);
    CHECK(xi(11) == factorial(12));
    CHECK(xi(13) == factorial(14));
}

TEST_CASE("bound_B")
{
    CHECK(bound_B(Partition({2}), 3) == 180);
    CHECK(bound_B(Partition::ones(2), 3) == 18);
    CHECK(render_sig3(fermat_ratio(Partition({2}))) == "10.0");
    for (int n = 1; n <= 6; ++n) {
        for (int d = 3; d <= 7; ++d) CHECK(bound_B(Partition::ones(n), d) == factorial(n) * ipow(d, n));
    }
    CHECK(bound_B(Partition({2, 1, 1, 1}), 3) == 29160);
    CHECK(bound_B(Partition::ones(5), 3) == 29160);
    CHECK(render_sig3(fermat_ratio(Partition({2, 1, 1, 1}))) == "1.00");
    CHECK(bound_B(Partition({2, 2}), 12) == 2 * 60 * 60 * 12 * 12);
    CHECK_THROWS_AS(bound_B(Partition({2}), 2), PreconditionViolation);
}

TEST_CASE("max_exceptional_degree")
{
    CHECK(max_exceptional_degree(Partition({2})) == 30);
    CHECK(max_exceptional_degree(Partition({2, 2, 2})) == 12);
    CHECK_THROWS_AS(max_exceptional_degree(Partition::ones(3)), InvalidInput);
    CHECK_THROWS_AS(max_exceptional_degree(Partition({3, 1, 1, 1})), NotExceptional);
}

TEST_CASE("render_sig3")
{
    CHECK(render_sig3(Rational(1080, 162)) == "6.67");
    CHECK(render_sig3(Rational(1000, 10)) == "100");
    CHECK(render_sig3(Rational(106)) == "106");
    CHECK(render_sig3(Rational(9995, 1000)) == "10.0");
    CHECK(render_sig3(Rational(1, 81)) == "0.0123");
    CHECK(within_one_unit("6.66", "6.67"));
    CHECK(!within_one_unit("6.65", "6.67"));
    CHECK(within_one_unit("106", "107"));
}

TEST_CASE("exceptional partition table")
{
    auto expected = load_table();
    REQUIRE(expected.size() == 80);
    auto rows = enumerate_exceptional(2, 26);
    REQUIRE(rows.size() == 80);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].index == expected[i].index);
        CHECK(rows[i].n == expected[i].n);
        CHECK(rows[i].partition.blocks() == expected[i].blocks);
        CHECK(rows[i].max_d == expected[i].max_d);
        CHECK(within_one_unit(expected[i].ratio, rows[i].ratio_text));
        CHECK(rows[i].max_d == max_exceptional_degree_scan(rows[i].partition));
    }
    auto five = enumerate_exceptional(5, 5);
    REQUIRE(five.size() == 5);
    CHECK(five[0].partition == Partition({5}));
    CHECK(five[4].partition == Partition({2, 1, 1, 1}));
    auto last = enumerate_exceptional(26, 26);
    REQUIRE(last.size() == 1);
    CHECK(last[0].partition == Partition(std::vector<int>(13, 2)));
    CHECK(last[0].max_d == 3);
}

TEST_CASE("highdim")
{
    CHECK(verify_no_exceptional(27).holds);
    CHECK(verify_no_exceptional(30).holds);
    CHECK_THROWS_AS(verify_no_exceptional(26), PreconditionViolation);
}
