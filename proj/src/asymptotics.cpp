#include "ginvar/asymptotics.hpp"

#include <cassert>
#include <chrono>

#include "ginvar/error.hpp"
#include "ginvar/groebner.hpp"
#include "ginvar/rng.hpp"

namespace ginvar {

std::string InvariantSelector::str() const {
    switch (kind) {
    case Kind::axial: return "axial:" + std::to_string(index);
    case Kind::sreg: return "sreg:" + std::to_string(index);
    case Kind::regularity: return "regularity";
    case Kind::reduction: return "reduction:" + std::to_string(index);
    }
    return "?";
}

InvariantSelector parse_selector(const std::string& text) {
    InvariantSelector sel;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    if (head == "regularity") {
        if (colon != std::string::npos)
            throw DomainError("regularity takes no index");
        sel.kind = InvariantSelector::Kind::regularity;
        return sel;
    }
    if (head == "axial") sel.kind = InvariantSelector::Kind::axial;
    else if (head == "sreg") sel.kind = InvariantSelector::Kind::sreg;
    else if (head == "reduction") sel.kind = InvariantSelector::Kind::reduction;
    else throw DomainError("unknown invariant '" + text + "'");
    if (colon == std::string::npos)
        throw DomainError("'" + head + "' needs an index, e.g. '" + head + ":1'");
    try {
        sel.index = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw DomainError("bad index in '" + text + "'");
    }
    return sel;
}

namespace {

ExtNat evaluate(const InvariantSelector& sel, const MonomialIdeal& gin) {
    switch (sel.kind) {
    case InvariantSelector::Kind::axial: {
        if (sel.index < 1 || sel.index > gin.nvars) throw DomainError("axial index out of range");
        return pure_power_degree(gin, sel.index);
    }
    case InvariantSelector::Kind::sreg: {
        if (sel.index < 0 || sel.index > gin.nvars) throw DomainError("sreg index out of range");
        return ExtNat::of(sreg_from_table(annihilator_table(gin), sel.index));
    }
    case InvariantSelector::Kind::regularity:
        return ExtNat::of(regularity_of_gin(gin, annihilator_table(gin)));
    case InvariantSelector::Kind::reduction: {
        if (sel.index < 0 || sel.index >= gin.nvars)
            throw DomainError("reduction index out of range");
        return reduction_numbers(gin, annihilator_table(gin)).at(sel.index);
    }
    }
    throw DomainError("unknown invariant");
}

} // namespace

template <class F>
PowerSequence power_sequence(const IdealInput<F>& input, InvariantSelector selector, int n_max,
                             uint64_t seed, int trials, long budget_ms) {
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    if (input.gens.empty()) throw DomainError("zero ideal");
    PowerSequence seq;
    seq.invariant = selector;
    using clock = std::chrono::steady_clock;
    for (int n = 1; n <= n_max; ++n) {
        auto started = clock::now();
        std::vector<Polynomial<F>> gens = ideal_power(input.gens, n, input.field);
        uint64_t power_seed = splitmix64(seed + 0xd1342543de82ef95ULL * n);
        GinResult<F> gin = gin_rev(input.nvars(), gens, input.field, power_seed, trials);
        if (!gin.certified) {
            seq.certification_failure = true;
            seq.note = "power " + std::to_string(n) + ": " + gin.diagnostic;
            return seq;
        }
        seq.points.push_back({n, evaluate(selector, gin.gin)});
        auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - started);
        if (budget_ms >= 0 && spent.count() >= budget_ms && n < n_max) {
            seq.note = "stopped after power " + std::to_string(n) + ": budget exceeded";
            return seq;
        }
    }
    return seq;
}

std::vector<std::pair<int, long>> finite_points(const PowerSequence& seq) {
    std::vector<std::pair<int, long>> out;
    for (const auto& p : seq.points) {
        if (!p.value.is_finite()) throw DomainError("invariant infinite along powers");
        out.emplace_back(p.n, p.value.value());
    }
    return out;
}

LinearFit fit_eventual_linear(const std::vector<std::pair<int, long>>& seq) {
    if (seq.size() < 2) throw DomainError("need at least two points to fit");
    for (size_t k = 0; k + 1 < seq.size(); ++k)
        if (seq[k + 1].first != seq[k].first + 1)
            throw DomainError("points must have consecutive n");
    const size_t m = seq.size();
    std::vector<long> diff;
    for (size_t k = 0; k + 1 < m; ++k) diff.push_back(seq[k + 1].second - seq[k].second);
    size_t start = diff.size() - 1;
    while (start > 0 && diff[start - 1] == diff.back()) --start;
    LinearFit fit;
    fit.slope = diff.back();
    fit.stable_from = seq[start].first;
    fit.intercept = mpq_class(seq[start].second) - fit.slope * seq[start].first;
    fit.window.assign(seq.begin() + start, seq.end());
    fit.stabilized = fit.window.size() >= 3;
    return fit;
}

#define GINVAR_INSTANTIATE_ASYMPTOTICS(F)                                                        \
    template PowerSequence power_sequence<F>(const IdealInput<F>&, InvariantSelector, int,       \
                                             uint64_t, int, long);

GINVAR_INSTANTIATE_ASYMPTOTICS(RationalField)
GINVAR_INSTANTIATE_ASYMPTOTICS(PrimeField)

} // namespace ginvar
