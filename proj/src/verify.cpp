#include "ginvar/verify.hpp"

#include <algorithm>

#include "ginvar/groebner.hpp"
#include "ginvar/oracle.hpp"

namespace ginvar {

long default_verify_degree(int max_gen_degree) {
    return std::max(10L, 2L * max_gen_degree + 2);
}

namespace {

std::string gens_str(const MonomialIdeal& j, const std::vector<std::string>& vars) {
    return j.str(vars);
}

} // namespace

template <class F>
std::vector<std::string> oracle_discrepancies(const IdealInput<F>& input,
                                              const GinResult<F>* gin,
                                              const AnnihilatorTable* alpha,
                                              const VerifyPlan& plan) {
    std::vector<std::string> issues;
    const int d = input.nvars();
    int maxdeg = 0;
    for (const auto& g : input.gens) maxdeg = std::max(maxdeg, g.degree());
    const long t_max = plan.t_max >= 0 ? plan.t_max : default_verify_degree(maxdeg);

    GroebnerBasis<F> gb;
    if (plan.initial_ideal || plan.hilbert)
        gb = buchberger(input.gens, MonomialOrder::grevlex, input.field);

    if (plan.initial_ideal) {
        MonomialIdeal engine = initial_ideal(d, gb);
        std::vector<Monomial> trunc;
        for (const auto& u : engine.gens)
            if (u.deg <= t_max) trunc.push_back(u);
        MonomialIdeal mac = macaulay_initial_ideal(d, input.gens, t_max, input.field);
        if (trunc != mac.gens)
            issues.push_back("initial ideal: buchberger " +
                             gens_str({d, trunc}, input.vars) + " vs macaulay " +
                             gens_str(mac, input.vars) + " up to degree " + std::to_string(t_max));
    }

    if (plan.hilbert) {
        std::vector<long> ranks = hilbert_by_linear_algebra(d, input.gens, t_max, input.field);
        for (long t = 0; t <= t_max; ++t) {
            long engine = hilbert_function(d, gb, t);
            if (engine != ranks[t])
                issues.push_back("hilbert: degree " + std::to_string(t) + " groebner " +
                                 std::to_string(engine) + " vs ranks " + std::to_string(ranks[t]));
        }
        if (gin != nullptr) {
            std::vector<long> series = hilbert_values(hilbert_series(gin->gin), t_max);
            for (long t = 0; t <= t_max; ++t)
                if (series[t] != ranks[t])
                    issues.push_back("hilbert: degree " + std::to_string(t) + " gin series " +
                                     std::to_string(series[t]) + " vs ranks " +
                                     std::to_string(ranks[t]));
        }
    }

    if (plan.sections && gin != nullptr) {
        for (const auto& trial : gin->trials) {
            std::vector<Polynomial<F>> moved;
            for (const auto& g : input.gens)
                moved.push_back(apply_change(g, trial.change, input.field));
            for (int i = 0; i <= d; ++i) {
                std::vector<Polynomial<F>> cut = moved;
                for (int k = i + 1; k <= d; ++k)
                    cut.push_back(poly_of_monomial<F>(Monomial::var(d, k), MonomialOrder::grevlex,
                                                      input.field));
                std::vector<long> ranks = hilbert_by_linear_algebra(d, cut, t_max, input.field);
                std::vector<long> series =
                    hilbert_values(hilbert_series(adjoin_trailing_variables(gin->gin, i)), t_max);
                for (long t = 0; t <= t_max; ++t)
                    if (ranks[t] != series[t])
                        issues.push_back("section i=" + std::to_string(i) + " seed " +
                                         std::to_string(trial.seed) + ": degree " +
                                         std::to_string(t) + " ranks " + std::to_string(ranks[t]) +
                                         " vs gin series " + std::to_string(series[t]));
            }
        }
    }

    if (plan.colons && gin != nullptr && alpha != nullptr) {
        for (int i = 0; i < d; ++i) {
            MonomialIdeal k_i = adjoin_trailing_variables(gin->gin, d - i);
            std::vector<Polynomial<F>> gens;
            for (const auto& u : k_i.gens)
                gens.push_back(poly_of_monomial<F>(u, MonomialOrder::grevlex, input.field));
            long j_top = std::min(t_max - 1, static_cast<long>(alpha->max_twist()) + 1);
            for (long j = 0; j <= j_top; ++j) {
                long kernel =
                    colon_dimension_by_linear_algebra(d, gens, d - i, j, input.field);
                long entry = alpha->at(i, static_cast<int>(j));
                if (kernel != entry)
                    issues.push_back("alpha(" + std::to_string(i) + "," + std::to_string(j) +
                                     "): table " + std::to_string(entry) + " vs kernel " +
                                     std::to_string(kernel));
            }
        }
    }

    return issues;
}

#define GINVAR_INSTANTIATE_VERIFY(F)                                                        \
    template std::vector<std::string> oracle_discrepancies<F>(                              \
        const IdealInput<F>&, const GinResult<F>*, const AnnihilatorTable*, const VerifyPlan&);

GINVAR_INSTANTIATE_VERIFY(RationalField)
GINVAR_INSTANTIATE_VERIFY(PrimeField)

} // namespace ginvar
