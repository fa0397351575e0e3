#include <set>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "ginvar/error.hpp"
#include "ginvar/gin.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/monideal.hpp"
#include "ginvar/parser.hpp"
#include "ginvar/rng.hpp"

using namespace ginvar;

namespace {

template <class F> IdealInput<F> parse_as(const std::string& text) {
    return std::get<IdealInput<F>>(parse_ideal(text));
}

MonomialIdeal ideal(int nvars, std::vector<std::vector<int>> exps) {
    std::vector<Monomial> gens;
    for (auto& e : exps) gens.emplace_back(e);
    return minimalize(nvars, std::move(gens));
}

MonomialIdeal borel_closure(int nvars, std::vector<Monomial> seeds) {
    std::set<std::vector<int>> seen;
    std::vector<Monomial> queue = seeds, all;
    while (!queue.empty()) {
        Monomial u = queue.back();
        queue.pop_back();
        if (!seen.insert(u.e).second) continue;
        all.push_back(u);
        for (int j = 1; j < nvars; ++j) {
            if (u.e[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                auto e = u.e;
                --e[j];
                ++e[i];
                queue.emplace_back(e);
            }
        }
    }
    return minimalize(nvars, std::move(all));
}

MonomialIdeal random_borel(int nvars, int maxdeg, Rng& rng) {
    std::vector<Monomial> seeds;
    int count = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < count; ++k) {
        auto basis = monomials_of_degree(nvars, 1 + static_cast<int>(rng.below(maxdeg)));
        seeds.push_back(basis[rng.below(basis.size())]);
    }
    return borel_closure(nvars, std::move(seeds));
}

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("axial constants read off the pure powers") {
    auto J = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto a = axial_constants(J);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == ExtNat::of(2));
    CHECK(a[1] == ExtNat::of(3));
    auto open = ideal(2, {{2, 0}, {1, 1}});
    CHECK(axial_constants(open)[1] == ExtNat::inf());
}

TEST_CASE("annihilator table of a small strongly stable ideal") {
    auto table = annihilator_table(ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
    CHECK(table.dimension == 2);
    CHECK(table.at(0, 1) == 1);
    CHECK(table.at(0, 2) == 1);
    CHECK(table.at(1, 1) == 1);
    CHECK(table.entries.size() == 3);
    CHECK(table.max_twist() == 2);
    CHECK(table.extremal == std::set<std::pair<int, int>>({{0, 2}}));
    CHECK(table.coextremal == std::set<std::pair<int, int>>({{0, 2}, {1, 1}}));
}

TEST_CASE("inputs that are no revlex gin are rejected") {
    // (y^2) is not Borel-fixed, so x is not almost regular on R/(y^2)
    CHECK_THROWS_WITH_AS(annihilator_table(ideal(2, {{0, 2}})),
                         doctest::Contains("not almost regular"), DomainError);
}

TEST_CASE("sectional regularity values from the table") {
    auto table = annihilator_table(ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
    CHECK(sreg_from_table(table, 0) == 1);
    CHECK(sreg_from_table(table, 1) == 2);
    CHECK(sreg_from_table(table, 2) == 3);
    auto hyper = annihilator_table(ideal(2, {{1, 0}}));
    CHECK(sreg_from_table(hyper, 1) == 1);
    CHECK(sreg_from_table(hyper, 2) == 1);
}

TEST_CASE("reduction numbers: infinite below the dimension, shifted sreg above") {
    auto artinian = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    auto ra = reduction_numbers(artinian, annihilator_table(artinian));
    REQUIRE(ra.size() == 2);
    CHECK(ra.at(0) == ExtNat::of(2));
    CHECK(ra.at(1) == ExtNat::of(1));
    // strongly stable: the same values come from the pure powers
    CHECK(ra.at(0).value() == pure_power_degree(artinian, 2).value() - 1);
    CHECK(ra.at(1).value() == pure_power_degree(artinian, 1).value() - 1);

    auto curve = ideal(2, {{2, 0}, {1, 1}}); // one-dimensional quotient
    auto rc = reduction_numbers(curve, annihilator_table(curve));
    CHECK(rc.at(0) == ExtNat::inf());
    CHECK(rc.at(1) == ExtNat::of(1));
}

TEST_CASE("regularity equals the top generator degree when strongly stable") {
    auto J = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    CHECK(regularity_of_gin(J, annihilator_table(J)) == 3);
    auto cubes = ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    CHECK(regularity_of_gin(cubes, annihilator_table(cubes)) == 7);
    auto zero = minimalize(2, {});
    CHECK_THROWS_AS(regularity_of_gin(zero, AnnihilatorTable{}), DomainError);
}

TEST_CASE("all three sectional regularity routes agree in characteristic zero") {
    auto input = parse_as<RationalField>(
        "field Q\nvars x y z\ngens x^2 - y*z, 2*x*y + z^2, y^3 - x*z^2\n");
    auto gin = gin_rev(3, input.gens, input.field, 3);
    REQUIRE(gin.certified);
    for (int i = 0; i <= 3; ++i) {
        long table = sectional_regularity(input, gin, i, SregRoute::annihilator, 91);
        long omega = sectional_regularity(input, gin, i, SregRoute::gin_omega, 91);
        long section = sectional_regularity(input, gin, i, SregRoute::random_section, 91);
        CHECK(table == omega);
        CHECK(table == section);
    }
}

TEST_CASE("the partial-degree route requires strong stability") {
    auto modp = parse_as<PrimeField>("field Fp 3\nvars x y z\ngens x^3, y^3, z^3\n");
    auto gin = gin_rev(3, modp.gens, modp.field, 0);
    REQUIRE(gin.certified);
    REQUIRE_FALSE(gin.strongly_stable);
    CHECK_THROWS_AS(sectional_regularity(modp, gin, 2, SregRoute::gin_omega, 1), DomainError);
    CHECK(sectional_regularity(modp, gin, 2, SregRoute::annihilator, 1) == 5);
}

TEST_CASE("full report on a complete intersection of conics") {
    auto input = parse_as<RationalField>("field Q\nvars x y\ngens x^2 - y^2, x*y\n");
    auto gin = gin_rev(2, input.gens, input.field, 0);
    REQUIRE(gin.certified);
    auto r = equivalence_report(input, gin, 0, 2, true);
    CHECK(r.d == 2);
    CHECK(r.height == 2);
    CHECK(r.initial_degree == 2);
    CHECK(r.regularity == 3);
    CHECK(r.sreg == std::vector<long>({2, 3}));
    CHECK(r.omega == std::vector<long>({2, 3}));
    CHECK(r.axial[0] == ExtNat::of(2));
    CHECK(r.axial[1] == ExtNat::of(3));
    CHECK(r.cross_checked);
    CHECK(r.sreg_sections == r.sreg);
    for (const auto& [key, v] : r.verdicts) {
        CHECK(v.holds);
        INFO(key);
        CHECK(v.applicable); // every hypothesis is met here, nothing vacuous
    }
    CHECK(r.verdicts.count("route_agreement") == 1);
}

TEST_CASE("certificates flatten the gin metadata") {
    auto f2 = parse_as<PrimeField>(
        "field Fp 2\nvars x y z\ngens x^2 + y*z, y^2 + x*z, z^2 + x*y\n");
    auto failed = gin_rev(3, f2.gens, f2.field, 0);
    auto cert = certificate_of(failed);
    CHECK_FALSE(cert.certified);
    CHECK(cert.small_field);
    CHECK(cert.escalations == 3);
    CHECK(cert.seeds.size() == failed.trials.size());
    CHECK_FALSE(cert.diagnostic.empty());
}

TEST_CASE("randomized strongly stable ideals satisfy the structural identities") {
    Rng rng(41);
    for (int round = 0; round < 10; ++round) {
        int d = 2 + static_cast<int>(rng.below(3));
        auto J = random_borel(d, 4, rng);
        if (J.contains_one()) continue;
        auto table = annihilator_table(J);
        auto a = axial_constants(J);
        for (int i = 1; i <= d; ++i) CHECK(a[i - 1] == pure_power_degree(J, i));
        long prev = sreg_from_table(table, 0);
        CHECK(prev == 1);
        for (int i = 1; i <= d; ++i) {
            long cur = sreg_from_table(table, i);
            CHECK(cur >= prev); // the sequence never decreases
            prev = cur;
        }
        CHECK(sreg_from_table(table, d) == J.max_gen_degree());
        for (const auto& [key, val] : table.entries) CHECK(val > 0);
        for (const auto& pos : table.coextremal) {
            for (const auto& [key, val] : table.entries) {
                bool dominates = key.first >= pos.first && key.second >= pos.second;
                CHECK((key == pos || !dominates));
            }
        }
        for (const auto& pos : table.extremal) {
            for (const auto& [key, val] : table.entries) {
                bool dominates = key.first <= pos.first && key.second >= pos.second;
                CHECK((key == pos || !dominates));
            }
        }
    }
}

} // TEST_SUITE
