#pragma once

#include <vector>

#include "ginvar/monideal.hpp"
#include "ginvar/polynomial.hpp"

namespace ginvar {

/// Gröbner-free reference computations on Macaulay blocks: in each degree t
/// the rows are monomial multiples of the generators, the columns all degree-t
/// monomials in descending grevlex.  Ranks come from exact elimination
/// (fraction-free Bareiss over Q, plain elimination over F_p).  These exist to
/// be obviously correct, not fast.

/// H(R/I)(t) = dim R_t - rank I_t for t = 0..t_max.
template <class F>
std::vector<long> hilbert_by_linear_algebra(int nvars, const std::vector<Polynomial<F>>& gens,
                                            long t_max, const F& field);

/// Minimal generators of the initial ideal read off as pivot columns of the
/// row-reduced Macaulay blocks, complete up to degree t_max.
template <class F>
MonomialIdeal macaulay_initial_ideal(int nvars, const std::vector<Polynomial<F>>& gens, long t_max,
                                     const F& field);

/// dim { v in (R/I)_j : x_i * v = 0 }, the kernel of multiplication
/// (R/I)_j -> (R/I)_{j+1}.
template <class F>
long colon_dimension_by_linear_algebra(int nvars, const std::vector<Polynomial<F>>& gens, int var_i,
                                       long j, const F& field);

} // namespace ginvar
