#include "ginvar/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ginvar/error.hpp"

namespace ginvar {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    deg = std::accumulate(e.begin(), e.end(), 0);
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::var(int nvars, int i, int exp) {
    std::vector<int> v(nvars, 0);
    v[i - 1] = exp;
    return Monomial(std::move(v));
}

int Monomial::partial_degree(int i) const {
    int s = 0;
    for (int k = 0; k < i && k < nvars(); ++k) s += e[k];
    return s;
}

int Monomial::max_index() const {
    for (int k = nvars() - 1; k >= 0; --k)
        if (e[k] > 0) return k + 1;
    return 0;
}

bool Monomial::divides(const Monomial& m) const {
    if (deg > m.deg) return false;
    for (int k = 0; k < nvars(); ++k)
        if (e[k] > m.e[k]) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& m) const {
    Monomial r = *this;
    for (int k = 0; k < nvars(); ++k) r.e[k] += m.e[k];
    r.deg += m.deg;
    return r;
}

Monomial Monomial::div(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r = *this;
    for (int k = 0; k < nvars(); ++k) r.e[k] -= m.e[k];
    r.deg -= m.deg;
    return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
    Monomial r = *this;
    for (int k = 0; k < nvars(); ++k) r.e[k] = std::max(r.e[k], m.e[k]);
    r.deg = std::accumulate(r.e.begin(), r.e.end(), 0);
    return r;
}

bool Monomial::coprime(const Monomial& m) const {
    for (int k = 0; k < nvars(); ++k)
        if (e[k] > 0 && m.e[k] > 0) return false;
    return true;
}

std::string Monomial::str(const std::vector<std::string>& vars) const {
    if (is_one()) return "1";
    std::string s;
    for (int k = 0; k < nvars(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[k];
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

std::strong_ordering order_compare(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    assert(a.nvars() == b.nvars());
    switch (ord) {
    case MonomialOrder::grevlex: {
        if (a.deg != b.deg) return a.deg <=> b.deg;
        for (int k = a.nvars() - 1; k >= 0; --k)
            if (a.e[k] != b.e[k]) return b.e[k] <=> a.e[k];
        return std::strong_ordering::equal;
    }
    case MonomialOrder::lex: {
        for (int k = 0; k < a.nvars(); ++k)
            if (a.e[k] != b.e[k]) return a.e[k] <=> b.e[k];
        return std::strong_ordering::equal;
    }
    case MonomialOrder::grlex: {
        if (a.deg != b.deg) return a.deg <=> b.deg;
        for (int k = 0; k < a.nvars(); ++k)
            if (a.e[k] != b.e[k]) return a.e[k] <=> b.e[k];
        return std::strong_ordering::equal;
    }
    }
    throw DomainError("unknown monomial order");
}

bool display_less(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return order_greater(a, b, MonomialOrder::grevlex);
}

static void enumerate(int nvars, int pos, int rem, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = rem;
        out.push_back(Monomial(cur));
        return;
    }
    for (int k = rem; k >= 0; --k) {
        cur[pos] = k;
        enumerate(nvars, pos + 1, rem - k, cur, out);
    }
    cur[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int t) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (t == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, 0, t, cur, out);
    std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
        return order_greater(x, y, MonomialOrder::grevlex);
    });
    return out;
}

} // namespace ginvar
