#include "ginvar/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "ginvar/error.hpp"

namespace ginvar {

template <class F> int Polynomial<F>::degree() const {
    int d = -1;
    for (const auto& t : terms) d = std::max(d, t.m.deg);
    return d;
}

template <class F> bool Polynomial<F>::is_homogeneous() const {
    for (const auto& t : terms)
        if (t.m.deg != terms.front().m.deg) return false;
    return true;
}

template <class F> const Term<F>& Polynomial<F>::leading_term() const {
    if (terms.empty()) throw DomainError("leading term of the zero polynomial");
    return terms.front();
}

template <class F> bool Polynomial<F>::equals(const Polynomial& g, const F& field) const {
    if (terms.size() != g.terms.size()) return false;
    for (size_t k = 0; k < terms.size(); ++k)
        if (!(terms[k].m == g.terms[k].m) || !field.eq(terms[k].c, g.terms[k].c)) return false;
    return true;
}

template <class F>
Polynomial<F> make_poly(std::vector<Term<F>> terms, MonomialOrder ord, const F& field) {
    std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
        return order_greater(a.m, b.m, ord);
    });
    Polynomial<F> f;
    f.ord = ord;
    for (auto& t : terms) {
        if (!f.terms.empty() && f.terms.back().m == t.m)
            f.terms.back().c = field.add(f.terms.back().c, t.c);
        else
            f.terms.push_back(std::move(t));
        if (!f.terms.empty() && field.is_zero(f.terms.back().c)) f.terms.pop_back();
    }
    return f;
}

template <class F> Polynomial<F> poly_zero(MonomialOrder ord) {
    Polynomial<F> f;
    f.ord = ord;
    return f;
}

template <class F> Polynomial<F> poly_of_monomial(const Monomial& m, MonomialOrder ord, const F& field) {
    Polynomial<F> f;
    f.ord = ord;
    f.terms.push_back({field.one(), m});
    return f;
}

// merge of two descending term lists
template <class F>
static Polynomial<F> merge(const Polynomial<F>& f, const Polynomial<F>& g, bool subtract, const F& field) {
    assert(f.ord == g.ord);
    Polynomial<F> r;
    r.ord = f.ord;
    r.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) { r.terms.push_back(f.terms[i++]); continue; }
        typename F::Elem gc = subtract ? field.neg(g.terms[j].c) : g.terms[j].c;
        if (i == f.terms.size()) { r.terms.push_back({gc, g.terms[j].m}); ++j; continue; }
        auto cmp = order_compare(f.terms[i].m, g.terms[j].m, f.ord);
        if (cmp == std::strong_ordering::greater) {
            r.terms.push_back(f.terms[i++]);
        } else if (cmp == std::strong_ordering::less) {
            r.terms.push_back({gc, g.terms[j].m});
            ++j;
        } else {
            typename F::Elem c = field.add(f.terms[i].c, gc);
            if (!field.is_zero(c)) r.terms.push_back({c, f.terms[i].m});
            ++i; ++j;
        }
    }
    return r;
}

template <class F> Polynomial<F> poly_add(const Polynomial<F>& f, const Polynomial<F>& g, const F& field) {
    return merge(f, g, false, field);
}

template <class F> Polynomial<F> poly_sub(const Polynomial<F>& f, const Polynomial<F>& g, const F& field) {
    return merge(f, g, true, field);
}

template <class F> Polynomial<F> poly_neg(const Polynomial<F>& f, const F& field) {
    Polynomial<F> r = f;
    for (auto& t : r.terms) t.c = field.neg(t.c);
    return r;
}

template <class F> Polynomial<F> poly_scale(const Polynomial<F>& f, const typename F::Elem& c, const F& field) {
    if (field.is_zero(c)) return poly_zero<F>(f.ord);
    Polynomial<F> r = f;
    for (auto& t : r.terms) t.c = field.mul(t.c, c);
    return r;
}

template <class F>
Polynomial<F> poly_mul_term(const Polynomial<F>& f, const typename F::Elem& c, const Monomial& m, const F& field) {
    if (field.is_zero(c)) return poly_zero<F>(f.ord);
    Polynomial<F> r;
    r.ord = f.ord;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({field.mul(t.c, c), t.m.mul(m)});
    return r;
}

template <class F> Polynomial<F> poly_multiply(const Polynomial<F>& f, const Polynomial<F>& g, const F& field) {
    Polynomial<F> r = poly_zero<F>(f.ord);
    for (const auto& t : g.terms) r = poly_add(r, poly_mul_term(f, t.c, t.m, field), field);
    return r;
}

template <class F> Polynomial<F> poly_monic(const Polynomial<F>& f, const F& field) {
    if (f.is_zero()) return f;
    return poly_scale(f, field.inv(f.terms.front().c), field);
}

template <class F>
std::string poly_str(const Polynomial<F>& f, const std::vector<std::string>& vars, const F& field) {
    if (f.is_zero()) return "0";
    std::string s;
    for (size_t k = 0; k < f.terms.size(); ++k) {
        const auto& t = f.terms[k];
        std::string c = field.str(t.c);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (k == 0)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (t.m.is_one())
            s += c;
        else if (c == "1")
            s += t.m.str(vars);
        else
            s += c + "*" + t.m.str(vars);
    }
    return s;
}

template <class F> bool change_is_invertible(const LinearChange<F>& g, const F& field) {
    // plain elimination on a copy
    auto a = g.mat;
    int n = g.nvars();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!field.is_zero(a[row][col])) { piv = row; break; }
        if (piv < 0) return false;
        std::swap(a[col], a[piv]);
        for (int row = col + 1; row < n; ++row) {
            if (field.is_zero(a[row][col])) continue;
            typename F::Elem q = field.div(a[row][col], a[col][col]);
            for (int k = col; k < n; ++k) a[row][k] = field.sub(a[row][k], field.mul(q, a[col][k]));
        }
    }
    return true;
}

template <class F> LinearChange<F> change_identity(int nvars, const F& field) {
    LinearChange<F> g;
    g.mat.assign(nvars, std::vector<typename F::Elem>(nvars, field.zero()));
    for (int i = 0; i < nvars; ++i) g.mat[i][i] = field.one();
    return g;
}

template <class F> LinearChange<F> change_inverse(const LinearChange<F>& g, const F& field) {
    int n = g.nvars();
    auto a = g.mat;
    auto inv = change_identity(n, field).mat;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!field.is_zero(a[row][col])) { piv = row; break; }
        if (piv < 0) throw DomainError("linear change is singular");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        typename F::Elem d = field.inv(a[col][col]);
        for (int k = 0; k < n; ++k) {
            a[col][k] = field.mul(a[col][k], d);
            inv[col][k] = field.mul(inv[col][k], d);
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || field.is_zero(a[row][col])) continue;
            typename F::Elem q = a[row][col];
            for (int k = 0; k < n; ++k) {
                a[row][k] = field.sub(a[row][k], field.mul(q, a[col][k]));
                inv[row][k] = field.sub(inv[row][k], field.mul(q, inv[col][k]));
            }
        }
    }
    LinearChange<F> r;
    r.mat = std::move(inv);
    return r;
}

template <class F>
LinearChange<F> change_compose(const LinearChange<F>& a, const LinearChange<F>& b, const F& field) {
    // (a then b) acting on variables: x_i -> a_i(x) -> substitute b into it,
    // which is the matrix product a*b.
    int n = a.nvars();
    LinearChange<F> r;
    r.mat.assign(n, std::vector<typename F::Elem>(n, field.zero()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                r.mat[i][j] = field.add(r.mat[i][j], field.mul(a.mat[i][k], b.mat[k][j]));
    return r;
}

template <class F>
Polynomial<F> apply_change(const Polynomial<F>& f, const LinearChange<F>& g, const F& field) {
    int n = g.nvars();
    // linear images of the variables
    std::vector<Polynomial<F>> image(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Term<F>> ts;
        for (int j = 0; j < n; ++j)
            if (!field.is_zero(g.mat[i][j])) ts.push_back({g.mat[i][j], Monomial::var(n, j + 1)});
        image[i] = make_poly(std::move(ts), f.ord, field);
    }
    // cache image powers on demand
    std::vector<std::vector<Polynomial<F>>> pow(n);
    auto power = [&](int i, int e) -> const Polynomial<F>& {
        auto& cache = pow[i];
        if (cache.empty()) {
            Polynomial<F> unit;
            unit.ord = f.ord;
            unit.terms.push_back({field.one(), Monomial::one(n)});
            cache.push_back(std::move(unit));
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(poly_multiply(cache.back(), image[i], field));
        return cache[e];
    };
    Polynomial<F> out = poly_zero<F>(f.ord);
    for (const auto& t : f.terms) {
        Polynomial<F> prod;
        prod.ord = f.ord;
        prod.terms.push_back({t.c, Monomial::one(n)});
        for (int i = 0; i < n; ++i)
            if (t.m.e[i] > 0) prod = poly_multiply(prod, power(i, t.m.e[i]), field);
        out = poly_add(out, prod, field);
    }
    return out;
}

template <class F> LinearChange<F> random_change(int nvars, Rng& rng, const F& field, long bound) {
    if (bound < 2) throw DomainError("coefficient bound must be at least 2");
    for (int attempt = 0; attempt < 100; ++attempt) {
        LinearChange<F> g;
        g.mat.assign(nvars, std::vector<typename F::Elem>(nvars, field.zero()));
        for (int i = 0; i < nvars; ++i)
            for (int j = 0; j < nvars; ++j) {
                if constexpr (std::is_same_v<F, PrimeField>) {
                    g.mat[i][j] = static_cast<typename F::Elem>(rng.below(field.characteristic()));
                } else {
                    long v;
                    do { v = rng.range(-bound, bound); } while (v == 0);
                    g.mat[i][j] = field.from_int(v);
                }
            }
        if (change_is_invertible(g, field)) return g;
    }
    throw CertificationError("could not draw an invertible change in 100 attempts");
}

// instantiations for the two supported fields
#define GINVAR_INSTANTIATE(F)                                                                      \
    template struct Polynomial<F>;                                                                 \
    template Polynomial<F> make_poly<F>(std::vector<Term<F>>, MonomialOrder, const F&);            \
    template Polynomial<F> poly_zero<F>(MonomialOrder);                                            \
    template Polynomial<F> poly_of_monomial<F>(const Monomial&, MonomialOrder, const F&);          \
    template Polynomial<F> poly_add<F>(const Polynomial<F>&, const Polynomial<F>&, const F&);      \
    template Polynomial<F> poly_sub<F>(const Polynomial<F>&, const Polynomial<F>&, const F&);      \
    template Polynomial<F> poly_neg<F>(const Polynomial<F>&, const F&);                            \
    template Polynomial<F> poly_scale<F>(const Polynomial<F>&, const typename F::Elem&, const F&); \
    template Polynomial<F> poly_mul_term<F>(const Polynomial<F>&, const typename F::Elem&,         \
                                            const Monomial&, const F&);                           \
    template Polynomial<F> poly_multiply<F>(const Polynomial<F>&, const Polynomial<F>&, const F&); \
    template Polynomial<F> poly_monic<F>(const Polynomial<F>&, const F&);                          \
    template std::string poly_str<F>(const Polynomial<F>&, const std::vector<std::string>&, const F&); \
    template bool change_is_invertible<F>(const LinearChange<F>&, const F&);                       \
    template LinearChange<F> change_identity<F>(int, const F&);                                    \
    template LinearChange<F> change_inverse<F>(const LinearChange<F>&, const F&);                  \
    template LinearChange<F> change_compose<F>(const LinearChange<F>&, const LinearChange<F>&, const F&); \
    template Polynomial<F> apply_change<F>(const Polynomial<F>&, const LinearChange<F>&, const F&); \
    template LinearChange<F> random_change<F>(int, Rng&, const F&, long);

GINVAR_INSTANTIATE(RationalField)
GINVAR_INSTANTIATE(PrimeField)
#undef GINVAR_INSTANTIATE

} // namespace ginvar
