#include <doctest.h>

#include <fstream>
#include <numeric>
#include <sstream>

#include "bp/census.hpp"
#include "bp/graph.hpp"
#include "bp/ke.hpp"

using namespace bp;

namespace {

std::vector<std::vector<std::int64_t>> load_golden(const std::string& name) {
    std::ifstream in(std::string(BPLINK_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::vector<std::vector<std::int64_t>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::int64_t> t;
        std::int64_t v;
        while (ls >> v) t.push_back(v);
        out.push_back(t);
    }
    return out;
}

} // namespace

TEST_CASE("dimension 5 census") {
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    auto res = enumerate_ke_links(spec);
    CHECK(res.total == 68);
    auto golden = load_golden("s5_census.txt");
    REQUIRE(res.tuples.size() == golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i)
        CHECK(res.tuples[i].exponents() == golden[i]);
    // every census member is Fano
    for (const auto& a : res.tuples) CHECK(ke_check(a).fano);
}

TEST_CASE("prefix census (2,3,7,m)") {
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    spec.prefix = std::vector<std::int64_t>{2, 3, 7};
    auto res = enumerate_ke_links(spec);
    CHECK(res.total == 27);
    for (const auto& a : res.tuples) {
        const auto& e = a.exponents();
        CHECK(e.front() == 2);
        CHECK(e.back() <= 41);
    }
}

TEST_CASE("census is deterministic across jobs") {
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::HomotopySphere, Predicate::KEPasses};
    auto r1 = enumerate_ke_links(spec, 1);
    auto r3 = enumerate_ke_links(spec, 3);
    CHECK(r1.tuples == r3.tuples);
    CHECK(r1.per_class == r3.per_class);
}

TEST_CASE("unbounded predicate sets are refused") {
    CensusSpec spec;
    spec.dimension = 5;
    spec.predicates = {Predicate::Fano};
    CHECK_THROWS_AS(enumerate_ke_links(spec), unbounded_search_error);

    // reciprocal-sum-1 plateau with no homology filter
    spec.predicates = {Predicate::KEPasses};
    spec.prefix = std::vector<std::int64_t>{2, 3, 6};
    CHECK_THROWS_AS(enumerate_ke_links(spec), unbounded_search_error);
}

TEST_CASE("c sequence") {
    CHECK(c_sequence(1) == 2);
    CHECK(c_sequence(2) == 3);
    CHECK(c_sequence(3) == 7);
    CHECK(c_sequence(4) == 43);
    CHECK(c_sequence(5) == 1807);
    CHECK(c_sequence(6) == 3263443);
    CHECK(c_sequence(7) == BigInt("10650056950807"));
}

TEST_CASE("kervaire family") {
    auto f4 = kervaire_family(4);
    REQUIRE(f4.size() == 2);
    CHECK(f4[0].prime == 7);
    CHECK(f4[0].type == KervaireType::Standard);
    CHECK(f4[1].prime == 11);
    CHECK(f4[1].type == KervaireType::Kervaire);

    std::size_t prev = 0;
    for (unsigned m = 4; m <= 6; ++m) {
        auto f = kervaire_family(m);
        CHECK(f.size() >= prev);
        prev = f.size();
        bool std_found = false, kv_found = false;
        for (const auto& e : f) {
            if (e.type == KervaireType::Standard) std_found = true;
            if (e.type == KervaireType::Kervaire) kv_found = true;
        }
        CHECK(std_found);
        CHECK(kv_found);
    }
    // prime window length grows like c^2
    for (unsigned m = 5; m <= 7; ++m) {
        BigInt len = 2 * c_sequence(m - 1) - 2 - 2 * c_sequence(m - 2);
        BigInt prev_len = 2 * c_sequence(m - 2) - 2 - 2 * c_sequence(m - 3);
        CHECK(len > prev_len * prev_len / 8);
    }
}

TEST_CASE("rhs family tables") {
    auto rows = rhs_family(3, 15);
    for (const auto& r : rows) {
        if (std::gcd(r.k, std::int64_t(3)) == 1) {
            CHECK(r.rational_hs);
            CHECK(r.torsion_order == r.k * r.k);
            CHECK(r.ke_passes == (r.k > 6));
        } else if (r.k > 6) {
            CHECK(r.betti == 6);  // companion series L(3,3,3,3n), n > 2
        }
    }
    auto rows4 = rhs_family(4, 7);
    for (const auto& r : rows4) {
        if (std::gcd(r.k, std::int64_t(4)) == 1) {
            BigInt expect = 1;
            for (int i = 0; i < 21; ++i) expect *= r.k;
            CHECK(r.rational_hs);
            CHECK(r.torsion_order == expect);
        }
    }
}

TEST_CASE("reproduce harness") {
    auto ids = reproduce_ids();
    CHECK(ids.size() == 9);
    CHECK_THROWS_AS(reproduce("no-such-table"), usage_error);

    auto r = reproduce("c-sequence");
    CHECK(r.all_match);
    REQUIRE(r.cells.size() == 7);
    CHECK(r.cells[6].computed == "10650056950807");

    r = reproduce("bp-orders");
    CHECK_FALSE(r.all_match);  // the m=5 entry: formula gives 261632
    CHECK(r.cells[0].match);
    CHECK(r.cells[1].match);
    CHECK(r.cells[2].match);
    CHECK_FALSE(r.cells[3].match);
    CHECK(r.cells[3].computed == "261632");

    r = reproduce("brieskorn-28");
    CHECK(r.all_match);

    r = reproduce("rhs-m3");
    CHECK(r.all_match);
    r = reproduce("companion-b2");
    CHECK(r.all_match);

    r = reproduce("s5-2377m");
    CHECK(r.cells[0].match);  // ke + homotopy-sphere = 27
}
