#pragma once

#include <optional>
#include <vector>

#include "ginvar/monideal.hpp"
#include "ginvar/polynomial.hpp"

namespace ginvar {

/// Reduced basis: every element is monic, no term of any element is divisible
/// by the leading term of another.  Elements are sorted canonically by
/// leading monomial (degree ascending, grevlex descending within a degree).
/// degree_cap, when set, means S-pairs above that total degree were skipped;
/// leading terms are then only complete up to the cap.
template <class F> struct GroebnerBasis {
    MonomialOrder ord = MonomialOrder::grevlex;
    std::vector<Polynomial<F>> elems;
    std::optional<int> degree_cap;
};

/// Remainder of f under full division by basis; no term of the result is
/// divisible by any basis leading term.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const F& field);

/// Buchberger with the normal selection strategy (S-pairs by ascending lcm
/// degree), the coprime and chain criteria, and full inter-reduction of the
/// result.  The zero ideal yields an empty basis.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord,
                            const F& field, std::optional<int> degree_cap = std::nullopt);

/// Monomial ideal of leading terms.
template <class F> MonomialIdeal initial_ideal(int nvars, const GroebnerBasis<F>& gb);

/// Checks that every S-pair of the basis normal-forms to zero.
template <class F> bool buchberger_criterion_holds(const GroebnerBasis<F>& gb, const F& field);

/// Generators of I^n: all n-fold products of the given generators,
/// deduplicated.  n >= 1.
template <class F>
std::vector<Polynomial<F>> ideal_power(const std::vector<Polynomial<F>>& gens, int n, const F& field);

/// H(R/I)(t) through the initial ideal.
template <class F> long hilbert_function(int nvars, const GroebnerBasis<F>& gb, long t);

/// Least total degree of a basis element (the least degree of a nonzero
/// element of the ideal); errors on the zero ideal.
template <class F> int initial_degree(const GroebnerBasis<F>& gb);

} // namespace ginvar
