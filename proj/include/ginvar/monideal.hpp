#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ginvar/extnat.hpp"
#include "ginvar/monomial.hpp"

namespace ginvar {

/// Monomial ideal held by its unique minimal generating set, sorted in the
/// canonical display order (degree ascending, grevlex descending inside a
/// degree).  Equality of the generator vectors is ideal equality.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;

    bool is_zero() const { return gens.empty(); }
    bool contains_one() const { return !gens.empty() && gens.front().is_one(); }
    bool contains(const Monomial& m) const;
    int max_gen_degree() const; // -1 for the zero ideal
    bool operator==(const MonomialIdeal&) const = default;
    std::string str(const std::vector<std::string>& vars) const;
};

/// Discard generators divisible by another generator, sort canonically.
MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

/// (J : x_i), i 1-based.
MonomialIdeal colon_by_variable(const MonomialIdeal& J, int i);

/// J + (x_{i+1}, ..., x_d); i = d returns J, i = 0 adjoins every variable.
MonomialIdeal adjoin_trailing_variables(const MonomialIdeal& J, int i);

/// Numerator of the Hilbert series of R/J over (1-t)^nvars.
struct HilbertSeries {
    int nvars = 0;
    std::vector<mpz_class> num; // num[k] is the coefficient of t^k

    bool operator==(const HilbertSeries&) const = default;
};

HilbertSeries hilbert_series(const MonomialIdeal& J);

/// H(R/J)(t) for a single degree, and for all degrees 0..t_max.
long hilbert_value(const HilbertSeries& hs, long t);
std::vector<long> hilbert_values(const HilbertSeries& hs, long t_max);

/// Largest sum of the first i exponents over the minimal generators.
/// Errors on the zero ideal.
int partial_degree_bound(const MonomialIdeal& J, int i);

/// Least e with x_i^e in J; infinite if no pure power of x_i lies in J.
ExtNat pure_power_degree(const MonomialIdeal& J, int i);

/// Number of variables with a finite pure power degree.  For valid inputs the
/// finite indices are exactly 1..c; a gap means the ideal is not Borel-fixed
/// and raises an error.
int stable_height(const MonomialIdeal& J);

/// true if every minimal generator u with x_j | u satisfies
/// (u/x_j)*x_i in J for all i < j.
bool is_strongly_stable(const MonomialIdeal& J);

/// Borel-fixed test; p = 0 reduces to strong stability, p > 0 restricts the
/// exchanges to exponents t whose base-p digits are dominated by those of the
/// x_j-exponent (binomial C(a,t) nonzero mod p).
bool is_borel_fixed(const MonomialIdeal& J, unsigned long p);

/// Graded Betti numbers addressed as (i, j) -> beta_{i, i+j}(R/J).
struct BettiTable {
    int nvars = 0;
    std::map<std::pair<int, int>, mpz_class> beta; // key (homological i, twist j)

    mpz_class get(int i, int j) const;
};

/// Eliahou-Kervaire formula; requires a strongly stable ideal.
BettiTable ek_betti(const MonomialIdeal& J);

} // namespace ginvar
