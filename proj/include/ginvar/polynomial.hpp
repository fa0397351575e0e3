#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginvar/field.hpp"
#include "ginvar/monomial.hpp"
#include "ginvar/rng.hpp"

namespace ginvar {

template <class F> struct Term {
    typename F::Elem c;
    Monomial m;
};

/// Sparse polynomial; terms are strictly descending in the carried order and
/// never have zero coefficient.
template <class F> struct Polynomial {
    MonomialOrder ord = MonomialOrder::grevlex;
    std::vector<Term<F>> terms;

    bool is_zero() const { return terms.empty(); }
    int nterms() const { return static_cast<int>(terms.size()); }
    /// Total degree, -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    const Term<F>& leading_term() const; // error on zero
    bool equals(const Polynomial& g, const F& field) const;
};

/// Normalizes arbitrary terms into a valid polynomial: sorts, merges equal
/// monomials, drops zeros.
template <class F>
Polynomial<F> make_poly(std::vector<Term<F>> terms, MonomialOrder ord, const F& field);

template <class F> Polynomial<F> poly_zero(MonomialOrder ord);
template <class F> Polynomial<F> poly_of_monomial(const Monomial& m, MonomialOrder ord, const F& field);

template <class F> Polynomial<F> poly_add(const Polynomial<F>& f, const Polynomial<F>& g, const F& field);
template <class F> Polynomial<F> poly_sub(const Polynomial<F>& f, const Polynomial<F>& g, const F& field);
template <class F> Polynomial<F> poly_neg(const Polynomial<F>& f, const F& field);
template <class F> Polynomial<F> poly_scale(const Polynomial<F>& f, const typename F::Elem& c, const F& field);
/// f * c*m
template <class F>
Polynomial<F> poly_mul_term(const Polynomial<F>& f, const typename F::Elem& c, const Monomial& m, const F& field);
template <class F> Polynomial<F> poly_multiply(const Polynomial<F>& f, const Polynomial<F>& g, const F& field);
/// Divide by the leading coefficient.
template <class F> Polynomial<F> poly_monic(const Polynomial<F>& f, const F& field);

template <class F>
std::string poly_str(const Polynomial<F>& f, const std::vector<std::string>& vars, const F& field);

/// Invertible linear change of coordinates; row i is the image of x_{i+1},
/// i.e. g sends x_i to sum_j mat[i][j] * x_j.
template <class F> struct LinearChange {
    std::vector<std::vector<typename F::Elem>> mat;
    int nvars() const { return static_cast<int>(mat.size()); }
};

template <class F> bool change_is_invertible(const LinearChange<F>& g, const F& field);
template <class F> LinearChange<F> change_identity(int nvars, const F& field);
template <class F> LinearChange<F> change_inverse(const LinearChange<F>& g, const F& field); // error if singular
template <class F> LinearChange<F> change_compose(const LinearChange<F>& a, const LinearChange<F>& b, const F& field);

/// Substitute x_i -> sum_j g[i][j] x_j in f.  Exact; preserves homogeneity
/// and degree for invertible g.
template <class F>
Polynomial<F> apply_change(const Polynomial<F>& f, const LinearChange<F>& g, const F& field);

/// Uniform random invertible change.  Over Q entries are drawn from
/// {-bound..bound} \ {0}; over F_p uniformly from the field.  Redraws the
/// whole matrix while singular, up to 100 attempts.
template <class F> LinearChange<F> random_change(int nvars, Rng& rng, const F& field, long bound);

} // namespace ginvar
