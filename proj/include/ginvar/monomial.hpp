#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ginvar {

/// Exponent vector with cached total degree.  Variables are numbered 1..d
/// externally; e[k] stores the exponent of x_{k+1}.
struct Monomial {
    std::vector<int> e;
    int deg = 0;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);
    static Monomial var(int nvars, int i, int exp = 1); // x_i^exp, i 1-based

    int nvars() const { return static_cast<int>(e.size()); }

    /// Sum of the exponents of x_1..x_i.
    int partial_degree(int i) const;
    /// Largest 1-based index of a variable dividing the monomial; 0 for 1.
    int max_index() const;

    bool is_one() const { return deg == 0; }
    bool divides(const Monomial& m) const;

    Monomial mul(const Monomial& m) const;
    Monomial div(const Monomial& m) const; // requires m.divides(*this)
    Monomial lcm(const Monomial& m) const;
    bool coprime(const Monomial& m) const;

    bool operator==(const Monomial&) const = default;

    std::string str(const std::vector<std::string>& vars) const;
};

enum class MonomialOrder { grevlex, lex, grlex };

/// Strict total order; greater means larger in the term order.
/// All orders refine total degree except lex; ties within a degree:
///  - grevlex: smaller exponent at the largest differing index wins,
///  - lex/grlex: larger exponent at the smallest differing index wins.
/// Convention x_1 > x_2 > ... > x_d throughout.
std::strong_ordering order_compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline bool order_less(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    return order_compare(a, b, ord) == std::strong_ordering::less;
}
inline bool order_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    return order_compare(a, b, ord) == std::strong_ordering::greater;
}

/// Canonical generator ordering used for display and stored ideals:
/// ascending total degree, descending grevlex within a degree.
bool display_less(const Monomial& a, const Monomial& b);

/// All monomials of total degree t in nvars variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int t);

} // namespace ginvar
