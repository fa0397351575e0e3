#include "ginvar/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ginvar/error.hpp"

namespace ginvar {

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const F& field) {
    Polynomial<F> rem = poly_zero<F>(f.ord);
    Polynomial<F> work = f;
    while (!work.is_zero()) {
        const Term<F>& lt = work.terms.front();
        const Polynomial<F>* divisor = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && g.terms.front().m.divides(lt.m)) { divisor = &g; break; }
        if (divisor) {
            typename F::Elem c = field.div(lt.c, divisor->terms.front().c);
            Monomial q = lt.m.div(divisor->terms.front().m);
            work = poly_sub(work, poly_mul_term(*divisor, c, q, field), field);
        } else {
            // leading terms are strictly decreasing, so push_back keeps order
            rem.terms.push_back(lt);
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;
}

namespace {

struct PairKey {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        auto c = order_compare(a.lcm, b.lcm, ord);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

} // namespace

template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, MonomialOrder ord,
                            const F& field, std::optional<int> degree_cap) {
    std::vector<Polynomial<F>> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        Polynomial<F> h = g;
        if (h.ord != ord) h = make_poly(std::move(h.terms), ord, field);
        basis.push_back(poly_monic(h, field));
    }

    std::set<PairKey, PairLess> queue(PairLess{ord});
    std::set<std::pair<int, int>> pending; // index pairs currently in the queue
    auto push_pairs = [&](int t) {
        const Monomial& mt = basis[t].terms.front().m;
        for (int k = 0; k < t; ++k) {
            const Monomial& mk = basis[k].terms.front().m;
            if (mk.coprime(mt)) continue; // S-pair reduces to zero
            Monomial l = mk.lcm(mt);
            if (degree_cap && l.deg > *degree_cap) continue;
            queue.insert({l.deg, l, k, t});
            pending.insert({k, t});
        }
    };
    for (int t = 0; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pk.i, pk.j});

        // chain criterion: a third leading term divides the lcm and both
        // side pairs have already been treated
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis[k].terms.front().m.divides(pk.lcm)) continue;
            auto p1 = std::minmax(pk.i, k);
            auto p2 = std::minmax(pk.j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        const Monomial& mi = basis[pk.i].terms.front().m;
        const Monomial& mj = basis[pk.j].terms.front().m;
        Polynomial<F> s = poly_sub(poly_mul_term(basis[pk.i], field.one(), pk.lcm.div(mi), field),
                                   poly_mul_term(basis[pk.j], field.one(), pk.lcm.div(mj), field), field);
        Polynomial<F> r = normal_form(s, basis, field);
        if (!r.is_zero()) {
            basis.push_back(poly_monic(r, field));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimal: drop elements whose leading term another one divides
    std::vector<Polynomial<F>> minimal;
    for (size_t a = 0; a < basis.size(); ++a) {
        bool drop = false;
        for (size_t b = 0; b < basis.size() && !drop; ++b) {
            if (a == b) continue;
            const Monomial& ma = basis[a].terms.front().m;
            const Monomial& mb = basis[b].terms.front().m;
            if (mb.divides(ma) && (!(ma == mb) || b < a)) drop = true;
        }
        if (!drop) minimal.push_back(basis[a]);
    }
    // reduced: every tail in normal form with respect to the others
    GroebnerBasis<F> gb;
    gb.ord = ord;
    gb.degree_cap = degree_cap;
    for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial<F>> others;
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        gb.elems.push_back(poly_monic(normal_form(minimal[a], others, field), field));
    }
    std::sort(gb.elems.begin(), gb.elems.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
        return display_less(x.terms.front().m, y.terms.front().m);
    });
    return gb;
}

template <class F> MonomialIdeal initial_ideal(int nvars, const GroebnerBasis<F>& gb) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.elems) lts.push_back(g.terms.front().m);
    return minimalize(nvars, std::move(lts));
}

template <class F> bool buchberger_criterion_holds(const GroebnerBasis<F>& gb, const F& field) {
    int n = static_cast<int>(gb.elems.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Monomial& mi = gb.elems[i].terms.front().m;
            const Monomial& mj = gb.elems[j].terms.front().m;
            Monomial l = mi.lcm(mj);
            if (gb.degree_cap && l.deg > *gb.degree_cap) continue;
            Polynomial<F> s =
                poly_sub(poly_mul_term(gb.elems[i], field.one(), l.div(mi), field),
                         poly_mul_term(gb.elems[j], field.one(), l.div(mj), field), field);
            if (!normal_form(s, gb.elems, field).is_zero()) return false;
        }
    return true;
}

template <class F>
static void power_products(const std::vector<Polynomial<F>>& gens, int n, size_t from,
                           const Polynomial<F>& acc, const F& field,
                           std::vector<Polynomial<F>>& out) {
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (size_t k = from; k < gens.size(); ++k)
        power_products(gens, n - 1, k, poly_multiply(acc, gens[k], field), field, out);
}

template <class F>
std::vector<Polynomial<F>> ideal_power(const std::vector<Polynomial<F>>& gens, int n, const F& field) {
    if (n < 1) throw DomainError("ideal power requires n >= 1");
    std::vector<Polynomial<F>> products;
    if (!gens.empty()) {
        Polynomial<F> unit;
        unit.ord = gens.front().ord;
        unit.terms.push_back({field.one(), Monomial::one(gens.front().terms.empty()
                                                             ? 0
                                                             : gens.front().terms.front().m.nvars())});
        // nvars from any nonzero generator
        for (const auto& g : gens)
            if (!g.is_zero()) {
                unit.terms.front().m = Monomial::one(g.terms.front().m.nvars());
                break;
            }
        power_products(gens, n, 0, unit, field, products);
    }
    std::vector<Polynomial<F>> out;
    for (auto& p : products) {
        if (p.is_zero()) continue;
        bool dup = false;
        for (const auto& q : out)
            if (p.equals(q, field)) { dup = true; break; }
        if (!dup) out.push_back(std::move(p));
    }
    return out;
}

template <class F> long hilbert_function(int nvars, const GroebnerBasis<F>& gb, long t) {
    return hilbert_value(hilbert_series(initial_ideal(nvars, gb)), t);
}

template <class F> int initial_degree(const GroebnerBasis<F>& gb) {
    if (gb.elems.empty()) throw DomainError("initial degree of the zero ideal");
    int d = gb.elems.front().degree();
    for (const auto& g : gb.elems) d = std::min(d, g.degree());
    return d;
}

#define GINVAR_INSTANTIATE(F)                                                                      \
    template struct GroebnerBasis<F>;                                                              \
    template Polynomial<F> normal_form<F>(const Polynomial<F>&, const std::vector<Polynomial<F>>&, \
                                          const F&);                                               \
    template GroebnerBasis<F> buchberger<F>(const std::vector<Polynomial<F>>&, MonomialOrder,      \
                                            const F&, std::optional<int>);                         \
    template MonomialIdeal initial_ideal<F>(int, const GroebnerBasis<F>&);                         \
    template bool buchberger_criterion_holds<F>(const GroebnerBasis<F>&, const F&);                \
    template std::vector<Polynomial<F>> ideal_power<F>(const std::vector<Polynomial<F>>&, int,     \
                                                       const F&);                                  \
    template long hilbert_function<F>(int, const GroebnerBasis<F>&, long);                         \
    template int initial_degree<F>(const GroebnerBasis<F>&);

GINVAR_INSTANTIATE(RationalField)
GINVAR_INSTANTIATE(PrimeField)
#undef GINVAR_INSTANTIATE

} // namespace ginvar
