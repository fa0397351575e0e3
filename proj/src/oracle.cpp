#include "ginvar/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "ginvar/error.hpp"

namespace ginvar {

namespace {

// Sparse row over mpz, entries sorted by column.
using ZRow = std::vector<std::pair<int, mpz_class>>;
// Sparse row over F_p.
using PRow = std::vector<std::pair<int, uint64_t>>;

void strip_content(ZRow& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target := a*target - b*pivot, exact and fraction-free; leading column of
// target must match pivot's and cancels.
ZRow combine_z(const ZRow& target, const ZRow& pivot, const mpz_class& a, const mpz_class& b) {
    ZRow out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            mpz_class v = a * target[i].second - b * pivot[j].second;
            if (v != 0) out.emplace_back(target[i].first, std::move(v));
            ++i; ++j;
        }
    }
    strip_content(out);
    return out;
}

PRow combine_p(const PRow& target, const PRow& pivot, uint64_t factor, const PrimeField& field) {
    // target := target - factor*pivot
    PRow out;
    out.reserve(target.size() + pivot.size());
    size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.push_back(target[i]);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, field.neg(field.mul(factor, pivot[j].second)));
            ++j;
        } else {
            uint64_t v = field.sub(target[i].second, field.mul(factor, pivot[j].second));
            if (v != 0) out.emplace_back(target[i].first, v);
            ++i; ++j;
        }
    }
    return out;
}

// Structured elimination by leading column; returns the pivot columns in
// ascending column order.  Row scaling is irrelevant for ranks and pivot
// columns, which keeps the integer arithmetic exact.
std::vector<int> pivot_columns_z(std::vector<ZRow> rows) {
    std::map<int, std::vector<ZRow>> buckets; // leading column -> rows
    for (auto& r : rows)
        if (!r.empty()) {
            strip_content(r);
            buckets[r.front().first].push_back(std::move(r));
        }
    std::vector<int> pivots;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        int col = it->first;
        std::vector<ZRow> bucket = std::move(it->second);
        buckets.erase(it);
        // fewest entries first keeps the fill-in down; deterministic
        size_t best = 0;
        for (size_t k = 1; k < bucket.size(); ++k)
            if (bucket[k].size() < bucket[best].size()) best = k;
        std::swap(bucket[0], bucket[best]);
        const ZRow piv = std::move(bucket[0]);
        pivots.push_back(col);
        for (size_t k = 1; k < bucket.size(); ++k) {
            ZRow next = combine_z(bucket[k], piv, piv.front().second, bucket[k].front().second);
            assert(next.empty() || next.front().first > col);
            if (!next.empty()) buckets[next.front().first].push_back(std::move(next));
        }
    }
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

std::vector<int> pivot_columns_p(std::vector<PRow> rows, const PrimeField& field) {
    std::map<int, std::vector<PRow>> buckets;
    for (auto& r : rows)
        if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
    std::vector<int> pivots;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        int col = it->first;
        std::vector<PRow> bucket = std::move(it->second);
        buckets.erase(it);
        const PRow piv = std::move(bucket[0]);
        uint64_t inv = field.inv(piv.front().second);
        pivots.push_back(col);
        for (size_t k = 1; k < bucket.size(); ++k) {
            PRow next = combine_p(bucket[k], piv, field.mul(bucket[k].front().second, inv), field);
            if (!next.empty()) buckets[next.front().first].push_back(std::move(next));
        }
    }
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

// Column index of each degree-t monomial under descending grevlex.
struct ColumnIndex {
    std::vector<Monomial> cols;
    std::map<std::vector<int>, int> pos;

    explicit ColumnIndex(int nvars, int t) : cols(monomials_of_degree(nvars, t)) {
        for (int k = 0; k < static_cast<int>(cols.size()); ++k) pos[cols[k].e] = k;
    }
    int at(const Monomial& m) const { return pos.at(m.e); }
};

template <class F> struct RowBuilder;

template <> struct RowBuilder<RationalField> {
    using Row = ZRow;
    // a generator is integerized once; row scaling is free
    static std::vector<mpz_class> coeffs(const Polynomial<RationalField>& g) {
        mpz_class den = 1;
        for (const auto& t : g.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
        std::vector<mpz_class> out;
        out.reserve(g.terms.size());
        for (const auto& t : g.terms) out.push_back(mpq_class(t.c * den).get_num());
        return out;
    }
    static std::vector<int> run(std::vector<Row> rows, const RationalField&) {
        return pivot_columns_z(std::move(rows));
    }
};

template <> struct RowBuilder<PrimeField> {
    using Row = PRow;
    static std::vector<uint64_t> coeffs(const Polynomial<PrimeField>& g) {
        std::vector<uint64_t> out;
        out.reserve(g.terms.size());
        for (const auto& t : g.terms) out.push_back(t.c);
        return out;
    }
    static std::vector<int> run(std::vector<Row> rows, const PrimeField& field) {
        return pivot_columns_p(std::move(rows), field);
    }
};

// Rows spanning I_t: every monomial multiple of every generator.
template <class F>
std::vector<typename RowBuilder<F>::Row> macaulay_rows(int nvars,
                                                       const std::vector<Polynomial<F>>& gens,
                                                       long t, const ColumnIndex& ci) {
    std::vector<typename RowBuilder<F>::Row> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw DomainError("reference computation requires homogeneous generators");
        int dg = g.degree();
        if (dg > t) continue;
        auto cs = RowBuilder<F>::coeffs(g);
        for (const auto& m : monomials_of_degree(nvars, static_cast<int>(t) - dg)) {
            typename RowBuilder<F>::Row row;
            row.reserve(g.terms.size());
            for (size_t k = 0; k < g.terms.size(); ++k)
                row.emplace_back(ci.at(g.terms[k].m.mul(m)), cs[k]);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

template <class F> long block_rank(int nvars, const std::vector<Polynomial<F>>& gens, long t, const F& field) {
    ColumnIndex ci(nvars, static_cast<int>(t));
    return static_cast<long>(RowBuilder<F>::run(macaulay_rows(nvars, gens, t, ci), field).size());
}

} // namespace

template <class F>
std::vector<long> hilbert_by_linear_algebra(int nvars, const std::vector<Polynomial<F>>& gens,
                                            long t_max, const F& field) {
    std::vector<long> out;
    out.reserve(t_max + 1);
    for (long t = 0; t <= t_max; ++t) {
        mpz_class dim;
        mpz_bin_uiui(dim.get_mpz_t(), static_cast<unsigned long>(t + nvars - 1),
                     static_cast<unsigned long>(nvars - 1));
        out.push_back(dim.get_si() - block_rank(nvars, gens, t, field));
    }
    return out;
}

template <class F>
MonomialIdeal macaulay_initial_ideal(int nvars, const std::vector<Polynomial<F>>& gens, long t_max,
                                     const F& field) {
    std::vector<Monomial> leading;
    for (long t = 0; t <= t_max; ++t) {
        ColumnIndex ci(nvars, static_cast<int>(t));
        for (int col : RowBuilder<F>::run(macaulay_rows(nvars, gens, t, ci), field))
            leading.push_back(ci.cols[col]);
    }
    return minimalize(nvars, std::move(leading));
}

template <class F>
long colon_dimension_by_linear_algebra(int nvars, const std::vector<Polynomial<F>>& gens, int var_i,
                                       long j, const F& field) {
    // dim ker((R/I)_j -> (R/I)_{j+1}) =
    //   dim (R/I)_j - [rank(x_i*R_j rows stacked on I_{j+1} rows) - rank(I_{j+1})]
    ColumnIndex cj(nvars, static_cast<int>(j));
    ColumnIndex cj1(nvars, static_cast<int>(j) + 1);
    long dim_rj = static_cast<long>(cj.cols.size());
    long rank_ij = static_cast<long>(RowBuilder<F>::run(macaulay_rows(nvars, gens, j, cj), field).size());

    auto below = macaulay_rows(nvars, gens, j + 1, cj1);
    long rank_b = static_cast<long>(RowBuilder<F>::run(below, field).size());

    Monomial xi = Monomial::var(nvars, var_i);
    auto stacked = std::move(below);
    for (const auto& m : cj.cols) {
        typename RowBuilder<F>::Row row;
        if constexpr (std::is_same_v<F, PrimeField>)
            row.emplace_back(cj1.at(m.mul(xi)), field.one());
        else
            row.emplace_back(cj1.at(m.mul(xi)), mpz_class(1));
        stacked.push_back(std::move(row));
    }
    long rank_stack = static_cast<long>(RowBuilder<F>::run(std::move(stacked), field).size());

    return (dim_rj - rank_ij) - (rank_stack - rank_b);
}

#define GINVAR_INSTANTIATE(F)                                                                      \
    template std::vector<long> hilbert_by_linear_algebra<F>(int, const std::vector<Polynomial<F>>&, \
                                                            long, const F&);                       \
    template MonomialIdeal macaulay_initial_ideal<F>(int, const std::vector<Polynomial<F>>&, long, \
                                                     const F&);                                    \
    template long colon_dimension_by_linear_algebra<F>(int, const std::vector<Polynomial<F>>&,    \
                                                       int, long, const F&);

GINVAR_INSTANTIATE(RationalField)
GINVAR_INSTANTIATE(PrimeField)
#undef GINVAR_INSTANTIATE

} // namespace ginvar
