#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ginvar/extnat.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/parser.hpp"

namespace ginvar {

/// Which invariant to track along the powers of an ideal.
struct InvariantSelector {
    enum class Kind { axial, sreg, regularity, reduction };
    Kind kind = Kind::regularity;
    int index = 0; // i for axial/sreg, s for reduction; unused for regularity

    std::string str() const;
};

/// Accepts "regularity", "axial:i", "sreg:i", "reduction:s".
InvariantSelector parse_selector(const std::string& text);

struct PowerPoint {
    int n = 0;
    ExtNat value;
};

/// Sampled invariant values of I^n for n = 1..n_max, possibly truncated.
struct PowerSequence {
    InvariantSelector invariant;
    std::vector<PowerPoint> points;
    std::string note;                  // why the sequence was truncated
    bool certification_failure = false;
};

/// Computes I^n, a fresh certified gin per power, and the selected invariant.
/// A power whose gin fails certification truncates the sequence with a
/// diagnostic; a power that exceeds budget_ms truncates without one
/// (budget_ms < 0 disables the budget).
template <class F>
PowerSequence power_sequence(const IdealInput<F>& input, InvariantSelector selector, int n_max,
                             uint64_t seed, int trials = 2, long budget_ms = 30000);

/// Eventually linear law value(n) = slope*n + intercept detected on the
/// longest suffix with constant successive differences.
struct LinearFit {
    mpq_class slope;
    mpq_class intercept;
    int stable_from = 1;                       // first n of the fitted suffix
    std::vector<std::pair<int, long>> window;  // the fitted suffix points
    bool stabilized = false;                   // suffix has >= 3 points
};

/// Requires >= 2 points with consecutive n and finite values.
LinearFit fit_eventual_linear(const std::vector<std::pair<int, long>>& seq);

/// Points of a sequence as (n, value) pairs; errors on any infinite value
/// ("invariant infinite along powers").
std::vector<std::pair<int, long>> finite_points(const PowerSequence& seq);

} // namespace ginvar
