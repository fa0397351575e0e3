#pragma once

#include <string>
#include <vector>

#include "ginvar/gin.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/parser.hpp"

namespace ginvar {

/// Which oracle cross-checks to run.
struct VerifyPlan {
    bool initial_ideal = false; // Buchberger in(I) vs Macaulay pivots
    bool hilbert = false;       // H(R/I) by Groebner, by gin series, by ranks
    bool sections = false;      // H(change.I + trailing vars) vs H(gin + trailing vars)
    bool colons = false;        // annihilator entries vs kernel dimensions
    long t_max = -1;            // -1: max(10, 2 * max generator degree + 2)

    static VerifyPlan all() { return {true, true, true, true, -1}; }
};

long default_verify_degree(int max_gen_degree);

/// Runs the requested checks and describes every discrepancy; an empty result
/// means everything agreed.  The section and colon checks need a gin result;
/// pass the one the invariants were computed from.
template <class F>
std::vector<std::string> oracle_discrepancies(const IdealInput<F>& input,
                                              const GinResult<F>* gin,
                                              const AnnihilatorTable* alpha,
                                              const VerifyPlan& plan);

} // namespace ginvar
