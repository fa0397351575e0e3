#include "ginvar/gin.hpp"

#include "ginvar/error.hpp"
#include "ginvar/rng.hpp"

namespace ginvar {

template <class F>
GinResult<F> gin_rev(int nvars, const std::vector<Polynomial<F>>& gens, const F& field,
                     uint64_t seed, int trials, long bound) {
    if (trials < 2) throw DomainError("certification requires at least 2 trials");
    for (const auto& g : gens)
        if (!g.is_homogeneous()) throw DomainError("generic initial ideal requires homogeneous generators");

    GinResult<F> result;
    result.small_field = field.characteristic() > 0 && field.characteristic() < 100;

    const int max_escalations = 3;
    for (int esc = 0; esc <= max_escalations; ++esc) {
        result.trials.clear();
        result.bound = bound << esc;
        result.escalations = esc;
        bool agree = true;
        for (int k = 0; k < trials; ++k) {
            GinTrial<F> trial;
            trial.seed = splitmix64(seed + 0x100000001ULL * static_cast<uint64_t>(esc)) +
                         static_cast<uint64_t>(k);
            Rng rng(trial.seed);
            trial.change = random_change(nvars, rng, field, result.bound);
            std::vector<Polynomial<F>> moved;
            moved.reserve(gens.size());
            for (const auto& g : gens)
                moved.push_back(apply_change(g, trial.change, field));
            trial.basis = buchberger(moved, MonomialOrder::grevlex, field);
            trial.in_ideal = initial_ideal(nvars, trial.basis);
            if (k > 0 && !(trial.in_ideal == result.trials.front().in_ideal)) agree = false;
            result.trials.push_back(std::move(trial));
        }
        if (agree) {
            result.gin = result.trials.front().in_ideal;
            result.borel_fixed = is_borel_fixed(result.gin, field.characteristic());
            result.strongly_stable = is_strongly_stable(result.gin);
            if (field.characteristic() == 0 && result.borel_fixed != result.strongly_stable)
                throw DomainError("internal error: Borel-fixed and strongly stable disagree in characteristic 0");
            result.certified = result.borel_fixed;
            if (!result.certified)
                result.diagnostic = "trials agree but the initial ideal is not Borel-fixed; "
                                    "retry with a different seed or more trials";
            return result;
        }
        if (field.characteristic() > 0) continue; // fresh seeds only; no bound over F_p
    }
    result.gin = result.trials.front().in_ideal;
    result.certified = false;
    result.borel_fixed = is_borel_fixed(result.gin, field.characteristic());
    result.strongly_stable = is_strongly_stable(result.gin);
    result.diagnostic = "trials disagree after " + std::to_string(max_escalations) +
                        " bound escalations; result is the first trial and is not certified";
    return result;
}

template GinResult<RationalField> gin_rev<RationalField>(int, const std::vector<Polynomial<RationalField>>&,
                                                         const RationalField&, uint64_t, int, long);
template GinResult<PrimeField> gin_rev<PrimeField>(int, const std::vector<Polynomial<PrimeField>>&,
                                                   const PrimeField&, uint64_t, int, long);

} // namespace ginvar
