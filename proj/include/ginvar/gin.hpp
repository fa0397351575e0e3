#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginvar/groebner.hpp"
#include "ginvar/monideal.hpp"
#include "ginvar/polynomial.hpp"

namespace ginvar {

/// One randomized trial: the change drawn from the trial seed and the initial
/// ideal of the transformed generators.
template <class F> struct GinTrial {
    uint64_t seed = 0;
    LinearChange<F> change;
    MonomialIdeal in_ideal;
    GroebnerBasis<F> basis; // reduced basis of the transformed ideal
};

/// Result of the randomized generic initial ideal computation under the
/// reverse lexicographic order.  certified means all trials agreed and the
/// agreed ideal is Borel-fixed.
template <class F> struct GinResult {
    MonomialIdeal gin;
    bool certified = false;
    bool borel_fixed = false;
    bool strongly_stable = false;
    bool small_field = false; // characteristic p with p < 100
    long bound = 0;           // coefficient bound of the accepted trials (Q only)
    int escalations = 0;      // bound doublings that were needed
    std::vector<GinTrial<F>> trials;
    std::string diagnostic;   // nonempty when not certified
};

/// Computes in(g.I) for `trials` independent random changes g derived
/// deterministically from (seed, trial index).  On disagreement the
/// coefficient bound is doubled (at most 3 times) and all trials rerun.
/// Identical inputs and seeds give identical results.
template <class F>
GinResult<F> gin_rev(int nvars, const std::vector<Polynomial<F>>& gens, const F& field,
                     uint64_t seed, int trials = 2, long bound = 10000);

} // namespace ginvar
