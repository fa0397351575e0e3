#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "ginvar/error.hpp"
#include "ginvar/groebner.hpp"
#include "ginvar/parser.hpp"
#include "ginvar/rng.hpp"

using namespace ginvar;

namespace {

const RationalField Q;
constexpr auto grevlex = MonomialOrder::grevlex;

std::vector<Polynomial<RationalField>> gens_q(const std::string& text) {
    return std::get<IdealInput<RationalField>>(parse_ideal(text)).gens;
}

Polynomial<RationalField> poly(std::vector<std::pair<long, std::vector<int>>> terms) {
    std::vector<Term<RationalField>> ts;
    for (auto& [c, e] : terms) ts.push_back({Q.from_int(c), Monomial(e)});
    return make_poly(std::move(ts), grevlex, Q);
}

std::vector<Polynomial<RationalField>> random_gens(int nvars, Rng& rng) {
    std::vector<Polynomial<RationalField>> gens;
    int ngens = 2 + static_cast<int>(rng.below(2));
    for (int g = 0; g < ngens; ++g) {
        auto basis = monomials_of_degree(nvars, 1 + static_cast<int>(rng.below(3)));
        std::vector<Term<RationalField>> ts;
        for (int k = 0; k < 3; ++k)
            ts.push_back({Q.from_int(rng.range(-4, 4)), basis[rng.below(basis.size())]});
        auto f = make_poly(std::move(ts), grevlex, Q);
        if (!f.is_zero()) gens.push_back(f);
    }
    return gens;
}

} // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced basis of a complete intersection of quadrics") {
    auto gb = buchberger(gens_q("field Q\nvars x y\ngens x^2 - y^2, x*y\n"), grevlex, Q);
    REQUIRE(gb.elems.size() == 3);
    CHECK(gb.elems[0].equals(poly({{1, {2, 0}}, {-1, {0, 2}}}), Q));
    CHECK(gb.elems[1].equals(poly({{1, {1, 1}}}), Q));
    CHECK(gb.elems[2].equals(poly({{1, {0, 3}}}), Q));
    CHECK_FALSE(gb.degree_cap.has_value());
    auto in = initial_ideal(2, gb);
    CHECK(in == minimalize(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})}));
    CHECK(initial_degree(gb) == 2);
    CHECK(buchberger_criterion_holds(gb, Q));
}

TEST_CASE("normal forms reduce to zero exactly on ideal members") {
    auto gb = buchberger(gens_q("field Q\nvars x y\ngens x^2 - y^2, x*y\n"), grevlex, Q);
    CHECK(normal_form(poly({{1, {3, 0}}}), gb.elems, Q).is_zero());   // x^3 lies inside
    auto r = normal_form(poly({{1, {0, 2}}, {1, {1, 0}}}), gb.elems, Q);
    CHECK(r.equals(poly({{1, {0, 2}}, {1, {1, 0}}}), Q)); // y^2 + x is already reduced
    for (const auto& t : r.terms)
        for (const auto& g : gb.elems) CHECK_FALSE(g.leading_term().m.divides(t.m));
}

TEST_CASE("the criterion detects incomplete bases") {
    GroebnerBasis<RationalField> partial;
    partial.elems = {poly({{1, {2, 0}}, {-1, {0, 2}}}), poly({{1, {1, 1}}})};
    CHECK_FALSE(buchberger_criterion_holds(partial, Q));
}

TEST_CASE("the reduced basis is canonical under permutation and scaling") {
    auto a = buchberger(gens_q("field Q\nvars x y z\ngens x^2 - y*z, x*y - z^2, y^2 - x*z\n"),
                        grevlex, Q);
    auto scrambled = gens_q("field Q\nvars x y z\ngens 5*y^2 - 5*x*z, -x^2 + y*z, 3*x*y - 3*z^2\n");
    auto b = buchberger(scrambled, grevlex, Q);
    REQUIRE(a.elems.size() == b.elems.size());
    for (size_t k = 0; k < a.elems.size(); ++k) CHECK(a.elems[k].equals(b.elems[k], Q));
}

TEST_CASE("degree cap skips high S-pairs and records itself") {
    auto gens = gens_q("field Q\nvars x y\ngens x^2 - y^2, x*y\n");
    auto capped = buchberger(gens, grevlex, Q, 2);
    CHECK(capped.degree_cap == 2);
    auto in = initial_ideal(2, capped);
    CHECK(in == minimalize(2, {Monomial({2, 0}), Monomial({1, 1})})); // y^3 not found
}

TEST_CASE("powers of an ideal multiply out generator products") {
    auto two = ideal_power(gens_q("field Q\nvars x y\ngens x, y\n"), 2, Q);
    CHECK(two.size() == 3);
    auto cubes = ideal_power(gens_q("field Q\nvars x y\ngens x^2, y^3\n"), 3, Q);
    CHECK(cubes.size() == 4); // x^6, x^4y^3, x^2y^6, y^9
    auto same = gens_q("field Q\nvars x y\ngens x*y, x*y\n");
    CHECK(ideal_power(same, 5, Q).size() == 1);
    auto one = ideal_power(cubes, 1, Q);
    CHECK(one.size() == cubes.size());
}

TEST_CASE("hilbert function through the initial ideal") {
    auto gb = buchberger(gens_q("field Q\nvars x y\ngens x^2 - y^2, x*y\n"), grevlex, Q);
    std::vector<long> h;
    for (long t = 0; t <= 5; ++t) h.push_back(hilbert_function(2, gb, t));
    CHECK(h == std::vector<long>({1, 2, 1, 0, 0, 0}));
}

TEST_CASE("prime field bases are monic with exact inverses") {
    PrimeField F7(7);
    auto input = std::get<IdealInput<PrimeField>>(
        parse_ideal("field Fp 7\nvars x y\ngens 2*x^2 - y^2, 3*x*y\n"));
    auto gb = buchberger(input.gens, grevlex, F7);
    REQUIRE(gb.elems.size() == 3);
    for (const auto& g : gb.elems) CHECK(F7.is_one(g.leading_term().c));
    // 2x^2 - y^2 rescales to x^2 + 3y^2 since 2^{-1} = 4 and -4 = 3 mod 7
    CHECK(gb.elems[0].terms[1].c == 3);
    CHECK(initial_ideal(2, gb) ==
          minimalize(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})}));
    CHECK(buchberger_criterion_holds(gb, F7));
}

TEST_CASE("random bases are reduced and pass the criterion") {
    Rng rng(17);
    for (int round = 0; round < 8; ++round) {
        auto gens = random_gens(3, rng);
        if (gens.empty()) continue;
        auto gb = buchberger(gens, grevlex, Q);
        CHECK(buchberger_criterion_holds(gb, Q));
        for (size_t a = 0; a < gb.elems.size(); ++a) {
            CHECK(Q.is_one(gb.elems[a].leading_term().c));
            for (size_t b = 0; b < gb.elems.size(); ++b) {
                if (a == b) continue;
                for (const auto& t : gb.elems[a].terms)
                    CHECK_FALSE(gb.elems[b].leading_term().m.divides(t.m));
            }
        }
        for (const auto& f : gens) CHECK(normal_form(f, gb.elems, Q).is_zero());
    }
}

TEST_CASE("zero ideal yields an empty basis") {
    auto gb = buchberger(std::vector<Polynomial<RationalField>>{}, grevlex, Q);
    CHECK(gb.elems.empty());
    CHECK(initial_ideal(2, gb).is_zero());
    CHECK_THROWS_AS(initial_degree(gb), DomainError);
}

} // TEST_SUITE
