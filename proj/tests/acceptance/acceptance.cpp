// End-to-end acceptance checks.  Each criterion prints exactly one PASS/FAIL
// line with its wall time; every numeric comparison is exact.  Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ginvar/asymptotics.hpp"
#include "ginvar/error.hpp"
#include "ginvar/gin.hpp"
#include "ginvar/groebner.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/monideal.hpp"
#include "ginvar/oracle.hpp"
#include "ginvar/parser.hpp"
#include "ginvar/verify.hpp"

using namespace ginvar;

namespace {

struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
    std::string note(size_t limit = 3) const {
        std::string s;
        for (size_t k = 0; k < failures.size() && k < limit; ++k) {
            if (k) s += "; ";
            s += failures[k];
        }
        if (failures.size() > limit)
            s += "; and " + std::to_string(failures.size() - limit) + " more";
        return s;
    }
};

template <class F> IdealInput<F> parse_as(const char* text) {
    return std::get<IdealInput<F>>(parse_ideal(text));
}

std::string seq_str(const std::vector<ExtNat>& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += v[k].str();
    }
    return s + ")";
}

bool axial_equals(const std::vector<ExtNat>& got, const std::vector<long>& finite_prefix, int d) {
    if (static_cast<int>(got.size()) != d) return false;
    for (int k = 0; k < d; ++k) {
        if (k < static_cast<int>(finite_prefix.size())) {
            if (!(got[k] == ExtNat::of(finite_prefix[k]))) return false;
        } else if (got[k].is_finite()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 1: six-variable Borel-fixed reference ideal, every invariant and
// both mark sets reproduced exactly, Betti table included.

const char* kReferenceIdeal =
    "field Q\n"
    "vars x1 x2 x3 x4 x5 x6\n"
    "gens x1^2, x1*x2, x1*x3, x1*x4, x1*x5, x1*x6,\n"
    "     x2^3, x2^2*x3, x2*x3^3, x2*x3^2*x4, x3^5\n";

Check criterion_reference() {
    Check c;
    auto input = parse_as<RationalField>(kReferenceIdeal);
    auto gin = gin_rev(input.nvars(), input.gens, input.field, 0);
    c.require(gin.certified, "gin not certified");
    c.require(gin.borel_fixed && gin.strongly_stable, "gin not strongly stable");

    std::vector<Monomial> expected_gens;
    for (const auto& f : input.gens) expected_gens.push_back(f.leading_term().m);
    c.require(gin.gin == minimalize(6, expected_gens), "gin differs from the fixed ideal");

    auto r = equivalence_report(input, gin, 0);
    c.require(axial_equals(r.axial, {2, 3, 5}, 6), "axial != (2,3,5,inf,inf,inf): " + seq_str(r.axial));
    c.require(r.sreg == std::vector<long>({2, 3, 5, 5, 5, 5}), "sreg != (2,3,5,5,5,5)");
    c.require(r.omega == std::vector<long>({2, 3, 5, 5, 5, 5}), "omega != (2,3,5,5,5,5)");
    c.require(r.height == 3, "height != 3");
    c.require(r.regularity == 5, "regularity != 5");
    c.require(r.initial_degree == 2, "initial degree != 2");

    std::map<int, ExtNat> red = {{0, ExtNat::inf()}, {1, ExtNat::inf()}, {2, ExtNat::inf()},
                                 {3, ExtNat::of(4)}, {4, ExtNat::of(2)}, {5, ExtNat::of(1)}};
    c.require(r.reduction == red, "reduction numbers differ");

    std::map<std::pair<int, int>, long> alpha = {
        {{0, 1}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 1}, 1}, {{3, 2}, 1},
        {{3, 3}, 1}, {{3, 4}, 1}, {{4, 1}, 1}, {{4, 2}, 1}, {{5, 1}, 1}};
    c.require(r.alpha.entries == alpha, "annihilator table differs");
    std::set<std::pair<int, int>> ext = {{0, 1}, {2, 3}, {3, 4}};
    std::set<std::pair<int, int>> coext = {{5, 1}, {4, 2}, {3, 4}};
    c.require(r.alpha.extremal == ext, "extremal marks differ");
    c.require(r.alpha.coextremal == coext, "coextremal marks differ");

    for (const auto& [key, v] : r.verdicts)
        c.require(v.holds, "verdict fails: " + key + " (" + v.detail + ")");
    c.require(!r.verdicts.at("last_axial_equals_regularity").applicable,
              "last-axial verdict should be vacuous here");

    auto betti = ek_betti(gin.gin);
    std::map<std::pair<int, int>, long> expect_betti = {
        {{0, 0}, 1},  {{1, 1}, 6}, {{2, 1}, 15}, {{3, 1}, 20}, {{4, 1}, 15}, {{5, 1}, 6},
        {{6, 1}, 1},  {{1, 2}, 2}, {{2, 2}, 3},  {{3, 2}, 1},  {{1, 3}, 2},  {{2, 3}, 5},
        {{3, 3}, 4},  {{4, 3}, 1}, {{1, 4}, 1},  {{2, 4}, 2},  {{3, 4}, 1}};
    bool betti_ok = betti.beta.size() == expect_betti.size();
    for (const auto& [key, val] : expect_betti)
        if (betti.get(key.first, key.second) != val) betti_ok = false;
    c.require(betti_ok, "Betti table differs");
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 2: pure p-th powers of the variables over F_p keep the formulas
// a_i = p, sreg_i = (p-1)i + 1, r_s = (p-1)(d-s), reg = (p-1)d + 1, and the
// gin is the ideal itself: Borel-fixed but not strongly stable, so the
// identities tying axial constants to sreg and reductions genuinely fail.

Check criterion_char_p() {
    Check c;
    auto input = parse_as<PrimeField>("field Fp 3\nvars x y z\ngens x^3, y^3, z^3\n");
    const long p = 3, d = 3;
    auto gin = gin_rev(input.nvars(), input.gens, input.field, 0);
    c.require(gin.certified, "gin not certified");
    c.require(gin.borel_fixed && !gin.strongly_stable && gin.small_field,
              "certificate flags differ");
    std::vector<Monomial> cubes;
    for (const auto& f : input.gens) cubes.push_back(f.leading_term().m);
    c.require(gin.gin == minimalize(3, cubes), "gin should be the ideal itself");

    auto r = equivalence_report(input, gin, 0);
    c.require(axial_equals(r.axial, {p, p, p}, 3), "axial != (3,3,3)");
    std::vector<long> sreg;
    for (long i = 1; i <= d; ++i) sreg.push_back((p - 1) * i + 1);
    c.require(r.sreg == sreg, "sreg != (3,5,7)");
    c.require(r.regularity == (p - 1) * d + 1, "regularity != 7");
    for (long s = 0; s < d; ++s)
        c.require(r.reduction.at(static_cast<int>(s)) == ExtNat::of((p - 1) * (d - s)),
                  "r_" + std::to_string(s) + " != " + std::to_string((p - 1) * (d - s)));

    std::map<std::pair<int, int>, long> alpha = {
        {{0, 2}, 1}, {{0, 3}, 2}, {{0, 4}, 3}, {{0, 5}, 2}, {{0, 6}, 1},
        {{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{2, 2}, 1}};
    c.require(r.alpha.entries == alpha, "annihilator table differs");
    c.require(r.alpha.extremal == std::set<std::pair<int, int>>({{0, 6}}), "extremal marks differ");
    c.require(r.alpha.coextremal == std::set<std::pair<int, int>>({{0, 6}, {1, 4}, {2, 2}}),
              "coextremal marks differ");

    c.require(!r.verdicts.at("axial_equals_sreg").holds, "axial=sreg should fail here");
    c.require(!r.verdicts.at("sreg_equals_omega").holds, "sreg=omega should fail here");
    c.require(!r.verdicts.at("axial_equals_reduction_plus_one").holds,
              "axial=reduction+1 should fail here");
    c.require(r.verdicts.at("finiteness_window").holds, "finiteness window fails");
    c.require(r.verdicts.at("monotone").holds, "monotonicity fails");
    c.require(r.verdicts.at("initial_degree_equals_a1").holds, "initial degree verdict fails");
    return c;
}

// ---------------------------------------------------------------------------
// Random corpus over Q shared by criteria 3-6: dimensions 3 and 4, at most
// three generators of degree at most 3, drawn from one fixed seed.

struct CorpusCase {
    IdealInput<RationalField> input;
    GinResult<RationalField> gin;
    InvariantReport report;
};

std::vector<IdealInput<RationalField>> random_corpus(int count, uint64_t seed) {
    RationalField field;
    std::vector<IdealInput<RationalField>> out;
    Rng rng(seed);
    while (static_cast<int>(out.size()) < count) {
        int d = 3 + static_cast<int>(rng.below(2));
        int ngens = 2 + static_cast<int>(rng.below(2));
        std::vector<std::string> vars;
        for (int k = 1; k <= d; ++k) vars.push_back("x" + std::to_string(k));
        std::vector<Polynomial<RationalField>> gens;
        for (int g = 0; g < ngens; ++g) {
            int deg = 1 + static_cast<int>(rng.below(3));
            auto basis = monomials_of_degree(d, deg);
            int nterms = 2 + static_cast<int>(rng.below(3));
            std::vector<Term<RationalField>> terms;
            for (int t = 0; t < nterms; ++t) {
                long coeff = rng.range(-3, 3);
                if (coeff == 0) coeff = 1;
                terms.push_back({field.from_int(coeff), basis[rng.below(basis.size())]});
            }
            auto f = make_poly(std::move(terms), MonomialOrder::grevlex, field);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        out.push_back({field, vars, gens});
    }
    return out;
}

Check criterion_corpus_verdicts(std::vector<CorpusCase>& corpus) {
    Check c;
    auto inputs = random_corpus(20, 20260814);
    bool saw3 = false, saw4 = false;
    for (size_t k = 0; k < inputs.size(); ++k) {
        auto& input = inputs[k];
        (input.nvars() == 3 ? saw3 : saw4) = true;
        auto gin = gin_rev(input.nvars(), input.gens, input.field, 100 + k);
        c.require(gin.certified, "ideal " + std::to_string(k) + ": gin not certified");
        if (!gin.certified) continue;
        c.require(gin.strongly_stable,
                  "ideal " + std::to_string(k) + ": gin not strongly stable over Q");
        auto r = equivalence_report(input, gin, 100 + k);
        for (const auto& [key, v] : r.verdicts)
            c.require(v.holds,
                      "ideal " + std::to_string(k) + ": " + key + " fails (" + v.detail + ")");
        c.require(r.sreg.back() == r.regularity,
                  "ideal " + std::to_string(k) + ": sreg_d != regularity");
        corpus.push_back({std::move(input), std::move(gin), std::move(r)});
    }
    c.require(saw3 && saw4, "corpus missing a dimension");
    c.require(corpus.size() == 20, "corpus incomplete");
    return c;
}

Check criterion_oracle_sections(const std::vector<CorpusCase>& corpus) {
    Check c;
    c.require(!corpus.empty(), "corpus unavailable");
    VerifyPlan plan;
    plan.sections = true;
    for (size_t k = 0; k < corpus.size(); ++k) {
        auto issues = oracle_discrepancies(corpus[k].input, &corpus[k].gin, nullptr, plan);
        for (const auto& msg : issues) c.require(false, "ideal " + std::to_string(k) + ": " + msg);
    }
    return c;
}

Check criterion_oracle_initial_and_colons(const std::vector<CorpusCase>& corpus) {
    Check c;
    c.require(!corpus.empty(), "corpus unavailable");
    VerifyPlan plan;
    plan.initial_ideal = true;
    plan.colons = true;
    for (size_t k = 0; k < corpus.size(); ++k) {
        auto issues =
            oracle_discrepancies(corpus[k].input, &corpus[k].gin, &corpus[k].report.alpha, plan);
        for (const auto& msg : issues) c.require(false, "ideal " + std::to_string(k) + ": " + msg);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 6: on every strongly stable gin in the corpus (plus the reference
// ideal), jumps of the sreg sequence biject with coextremal positions; the
// finite jumps of the axial sequence are the coextremal positions in columns
// s >= d - height (past the height the axial constants are infinite while
// sreg can still grow, so the wider columns belong to sreg jumps alone); and
// extremal positions carry exactly the corner Betti numbers with equal values.

void check_correspondences(const std::string& label, const InvariantReport& r, Check& c) {
    int d = r.d, ht = r.height;
    std::set<std::pair<int, int>> sreg_jumps; // (d-i, sreg_i - 1), sreg_0 = 0
    long prev = 0;
    for (int i = 1; i <= d; ++i) {
        if (r.sreg[i - 1] > prev)
            sreg_jumps.insert({d - i, static_cast<int>(r.sreg[i - 1]) - 1});
        prev = r.sreg[i - 1];
    }
    c.require(sreg_jumps == r.alpha.coextremal, label + ": sreg jumps != coextremal positions");

    const auto& a = r.axial;
    std::set<std::pair<int, int>> jumps; // (d-i, a_i - 1) for each finite jump i
    for (int i = 1; i <= d; ++i) {
        if (!a[i - 1].is_finite()) continue;
        if (i >= 2 && !(a[i - 2] < a[i - 1])) continue;
        jumps.insert({d - i, static_cast<int>(a[i - 1].value()) - 1});
    }
    std::set<std::pair<int, int>> window;
    std::set<long> window_values, axial_values;
    for (const auto& pos : r.alpha.coextremal)
        if (pos.first >= d - ht) {
            window.insert(pos);
            window_values.insert(pos.second + 1);
        }
    for (int i = 1; i <= ht; ++i)
        if (a[i - 1].is_finite()) axial_values.insert(a[i - 1].value());
    c.require(jumps == window, label + ": axial jumps != coextremal positions in the window");
    c.require(axial_values == window_values, label + ": axial values != coextremal twists + 1");

    auto betti = ek_betti(r.gin);
    std::set<std::pair<int, int>> corners;
    for (const auto& [key, val] : betti.beta) {
        if (val == 0) continue;
        bool dominated = false;
        for (const auto& [other, oval] : betti.beta)
            if (oval != 0 && other != key && other.first >= key.first &&
                other.second >= key.second)
                dominated = true;
        if (!dominated) corners.insert(key);
    }
    std::set<std::pair<int, int>> from_alpha;
    for (const auto& pos : r.alpha.extremal) {
        from_alpha.insert({d - pos.first, pos.second});
        mpz_class expect(r.alpha.at(pos.first, pos.second));
        c.require(betti.get(d - pos.first, pos.second) == expect,
                  label + ": Betti value differs at extremal position");
    }
    c.require(corners == from_alpha, label + ": extremal positions != Betti corners");
}

Check criterion_correspondences(const std::vector<CorpusCase>& corpus) {
    Check c;
    c.require(!corpus.empty(), "corpus unavailable");
    for (size_t k = 0; k < corpus.size(); ++k)
        if (corpus[k].gin.strongly_stable)
            check_correspondences("ideal " + std::to_string(k), corpus[k].report, c);
    auto input = parse_as<RationalField>(kReferenceIdeal);
    auto gin = gin_rev(input.nvars(), input.gens, input.field, 0);
    check_correspondences("reference", equivalence_report(input, gin, 0), c);
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 7: invariants along powers grow linearly with the expected
// slopes, and the regularity sequence is cross-checked against oracle
// Hilbert functions (top nonvanishing degree of the Artinian quotient).

void check_fit(const char* text, const char* selector, const std::vector<long>& values,
               long slope, long intercept, Check& c) {
    auto input = parse_as<RationalField>(text);
    auto seq = power_sequence(input, parse_selector(selector),
                              static_cast<int>(values.size()), 0);
    c.require(!seq.certification_failure, std::string(selector) + ": certification failed");
    std::vector<std::pair<int, long>> expect;
    for (size_t n = 1; n <= values.size(); ++n)
        expect.push_back({static_cast<int>(n), values[n - 1]});
    auto points = finite_points(seq);
    c.require(points == expect, std::string(selector) + ": sequence differs");
    auto fit = fit_eventual_linear(points);
    c.require(fit.stabilized && fit.stable_from == 1, std::string(selector) + ": not stabilized");
    c.require(fit.slope == slope && fit.intercept == intercept,
              std::string(selector) + ": fit differs");
}

Check criterion_power_growth() {
    Check c;
    const char* two_gen = "field Q\nvars x y\ngens x^2, x*y\n";
    check_fit(two_gen, "sreg:2", {2, 4, 6, 8, 10, 12}, 2, 0, c);
    check_fit(two_gen, "axial:1", {2, 4, 6, 8, 10, 12}, 2, 0, c);

    const char* ci = "field Q\nvars x y\ngens x^2, y^3\n";
    std::vector<long> reg = {4, 7, 10, 13, 16};
    check_fit(ci, "regularity", reg, 3, 1, c);

    // Oracle cross-check: R/I^n is Artinian here, so its regularity is one
    // past the top degree with a nonzero Hilbert value.
    auto input = parse_as<RationalField>(ci);
    for (int n = 1; n <= 5; ++n) {
        auto gens = ideal_power(input.gens, n, input.field);
        auto h = hilbert_by_linear_algebra(2, gens, 3 * n + 3, input.field);
        long top = -1;
        for (long t = 0; t < static_cast<long>(h.size()); ++t)
            if (h[t] != 0) top = t;
        c.require(top + 1 == reg[n - 1],
                  "oracle regularity differs at n=" + std::to_string(n));
    }
    return c;
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
};

} // namespace

int main() {
    std::vector<CorpusCase> corpus;
    const std::vector<std::pair<Criterion, std::function<Check()>>> criteria = {
        {{1, "six-variable reference ideal reproduced exactly", 5.0},
         [] { return criterion_reference(); }},
        {{2, "char-3 pure cubes closed forms", 5.0}, [] { return criterion_char_p(); }},
        {{3, "random corpus identity verdicts", 600.0},
         [&] { return criterion_corpus_verdicts(corpus); }},
        {{4, "oracle section Hilbert agreement", 600.0},
         [&] { return criterion_oracle_sections(corpus); }},
        {{5, "oracle initial ideal and colon agreement", 600.0},
         [&] { return criterion_oracle_initial_and_colons(corpus); }},
        {{6, "jump and Betti correspondences", 600.0},
         [&] { return criterion_correspondences(corpus); }},
        {{7, "linear growth along powers vs oracle", 120.0},
         [] { return criterion_power_growth(); }},
    };

    int passed = 0;
    for (const auto& [meta, fn] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > meta.budget_seconds)
            c.require(false, "exceeded " + std::to_string(meta.budget_seconds) + "s budget");
        bool pass = c.ok();
        passed += pass;
        std::printf("criterion %d: %s (%.2fs) %s%s%s\n", meta.id, pass ? "PASS" : "FAIL", secs,
                    meta.name, pass ? "" : ": ", pass ? "" : c.note().c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/7 passed\n", passed);
    return passed == 7 ? 0 : 1;
}
