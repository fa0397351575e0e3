#include "ginvar/monideal.hpp"

#include <algorithm>
#include <cassert>

#include "ginvar/error.hpp"

namespace ginvar {

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

int MonomialIdeal::max_gen_degree() const {
    int d = -1;
    for (const auto& g : gens) d = std::max(d, g.deg);
    return d;
}

std::string MonomialIdeal::str(const std::vector<std::string>& vars) const {
    if (gens.empty()) return "(0)";
    std::string s = "(";
    for (size_t k = 0; k < gens.size(); ++k) {
        if (k) s += ", ";
        s += gens[k].str(vars);
    }
    return s + ")";
}

MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), display_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal J;
    J.nvars = nvars;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : J.gens)
            if (kept.divides(m)) { redundant = true; break; } // kept has lower or equal degree
        if (!redundant) J.gens.push_back(m);
    }
    return J;
}

MonomialIdeal colon_by_variable(const MonomialIdeal& J, int i) {
    std::vector<Monomial> out;
    out.reserve(J.gens.size());
    for (const auto& g : J.gens) {
        Monomial m = g;
        if (m.e[i - 1] > 0) {
            m.e[i - 1] -= 1;
            m.deg -= 1;
        }
        out.push_back(std::move(m));
    }
    return minimalize(J.nvars, std::move(out));
}

MonomialIdeal adjoin_trailing_variables(const MonomialIdeal& J, int i) {
    std::vector<Monomial> out = J.gens;
    for (int k = i + 1; k <= J.nvars; ++k) out.push_back(Monomial::var(J.nvars, k));
    return minimalize(J.nvars, std::move(out));
}

// ---- Hilbert series ------------------------------------------------------

static bool disjoint_supports(const std::vector<Monomial>& gens) {
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b)
            if (!gens[a].coprime(gens[b])) return false;
    return true;
}

static void poly_add_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& p, int shift) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
    for (size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k];
}

// numerator of R/J; relies on the exact sequence splitting J along a pivot
// variable: num(J) = num(J + (x)) + t * num(J : x)
static std::vector<mpz_class> series_num(const MonomialIdeal& J) {
    if (J.contains_one()) return {mpz_class(0)};
    if (J.is_zero()) return {mpz_class(1)};
    if (disjoint_supports(J.gens)) {
        // regular sequence: product of (1 - t^deg)
        std::vector<mpz_class> num{mpz_class(1)};
        for (const auto& g : J.gens) {
            std::vector<mpz_class> next(num.size() + g.deg, 0);
            for (size_t k = 0; k < num.size(); ++k) {
                next[k] += num[k];
                next[k + g.deg] -= num[k];
            }
            num = std::move(next);
        }
        return num;
    }
    // pivot: variable dividing the most generators (ties to the smallest
    // index); disjointness above guarantees it occurs at least twice
    std::vector<int> count(J.nvars, 0);
    for (const auto& g : J.gens)
        for (int k = 0; k < J.nvars; ++k)
            if (g.e[k] > 0) ++count[k];
    int pivot = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin()) + 1;
    assert(count[pivot - 1] >= 2);

    std::vector<Monomial> plus = J.gens;
    plus.push_back(Monomial::var(J.nvars, pivot));
    std::vector<mpz_class> num = series_num(minimalize(J.nvars, std::move(plus)));
    std::vector<mpz_class> colon = series_num(colon_by_variable(J, pivot));
    poly_add_shifted(num, colon, 1);
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return num;
}

HilbertSeries hilbert_series(const MonomialIdeal& J) {
    HilbertSeries hs;
    hs.nvars = J.nvars;
    hs.num = series_num(J);
    return hs;
}

long hilbert_value(const HilbertSeries& hs, long t) {
    // H(t) = sum_k num[k] * C(t - k + d - 1, d - 1)
    mpz_class acc = 0;
    for (size_t k = 0; k < hs.num.size(); ++k) {
        long shift = t - static_cast<long>(k);
        if (shift < 0) continue;
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(shift + hs.nvars - 1),
                     static_cast<unsigned long>(hs.nvars - 1));
        acc += hs.num[k] * bin;
    }
    if (!acc.fits_slong_p()) throw DomainError("Hilbert value out of range");
    return acc.get_si();
}

std::vector<long> hilbert_values(const HilbertSeries& hs, long t_max) {
    std::vector<long> out;
    out.reserve(t_max + 1);
    for (long t = 0; t <= t_max; ++t) out.push_back(hilbert_value(hs, t));
    return out;
}

// ---- degree bounds -------------------------------------------------------

int partial_degree_bound(const MonomialIdeal& J, int i) {
    if (J.is_zero()) throw DomainError("partial degree bound of the zero ideal");
    int best = 0;
    for (const auto& g : J.gens) best = std::max(best, g.partial_degree(i));
    return best;
}

ExtNat pure_power_degree(const MonomialIdeal& J, int i) {
    // x_i^e lies in J iff some minimal generator is a pure power x_i^a, a <= e
    ExtNat best = ExtNat::inf();
    for (const auto& g : J.gens)
        if (g.max_index() == i && g.e[i - 1] == g.deg) {
            ExtNat cand = ExtNat::of(g.deg);
            if (cand < best) best = cand;
        }
    return best;
}

int stable_height(const MonomialIdeal& J) {
    int c = 0;
    for (int i = 1; i <= J.nvars; ++i)
        if (pure_power_degree(J, i).is_finite()) {
            if (i != c + 1)
                throw DomainError("pure-power indices are not contiguous; ideal is not Borel-fixed");
            c = i;
        }
    return c;
}

// ---- stability -----------------------------------------------------------

bool is_strongly_stable(const MonomialIdeal& J) {
    for (const auto& u : J.gens)
        for (int j = 2; j <= J.nvars; ++j) {
            if (u.e[j - 1] == 0) continue;
            Monomial w = u;
            w.e[j - 1] -= 1;
            for (int i = 1; i < j; ++i) {
                w.e[i - 1] += 1;
                if (!J.contains(w)) return false;
                w.e[i - 1] -= 1;
            }
        }
    return true;
}

// base-p digits of t dominated by those of a, i.e. C(a,t) != 0 mod p
static bool digits_dominated(int t, int a, unsigned long p) {
    while (t > 0 || a > 0) {
        if (t % static_cast<int>(p) > a % static_cast<int>(p)) return false;
        t /= static_cast<int>(p);
        a /= static_cast<int>(p);
    }
    return true;
}

bool is_borel_fixed(const MonomialIdeal& J, unsigned long p) {
    if (p == 0) return is_strongly_stable(J);
    for (const auto& u : J.gens)
        for (int j = 2; j <= J.nvars; ++j) {
            int a = u.e[j - 1];
            if (a == 0) continue;
            for (int t = 1; t <= a; ++t) {
                if (!digits_dominated(t, a, p)) continue;
                Monomial w = u;
                w.e[j - 1] -= t;
                w.deg -= t;
                for (int i = 1; i < j; ++i) {
                    w.e[i - 1] += t;
                    w.deg += t;
                    if (!J.contains(w)) return false;
                    w.e[i - 1] -= t;
                    w.deg -= t;
                }
            }
        }
    return true;
}

// ---- Betti numbers -------------------------------------------------------

mpz_class BettiTable::get(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? mpz_class(0) : it->second;
}

BettiTable ek_betti(const MonomialIdeal& J) {
    if (!is_strongly_stable(J))
        throw DomainError("Betti formula requires a strongly stable ideal");
    BettiTable bt;
    bt.nvars = J.nvars;
    bt.beta[{0, 0}] = 1;
    for (const auto& u : J.gens) {
        int m = u.max_index();
        int j = u.deg - 1; // row of beta_{i,i+j}(R/J) contributed by u
        for (int i = 1; i <= m; ++i) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(m - 1),
                         static_cast<unsigned long>(i - 1));
            if (bin != 0) bt.beta[{i, j}] += bin;
        }
    }
    return bt;
}

} // namespace ginvar
