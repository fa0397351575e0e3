#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ginvar/field.hpp"
#include "ginvar/polynomial.hpp"

namespace ginvar {

/// Parsed ideal over Q or over F_p.  Generators are homogeneous (checked),
/// deduplicated, in file order, with terms sorted under grevlex.
template <class F> struct IdealInput {
    F field;
    std::vector<std::string> vars;
    std::vector<Polynomial<F>> gens;

    int nvars() const { return static_cast<int>(vars.size()); }
};

using ParsedIdeal = std::variant<IdealInput<RationalField>, IdealInput<PrimeField>>;

/// Text format, line oriented, '#' starts a comment:
///   field Q            (or: field Fp <prime>)
///   vars x y z
///   gens x^2 - y^2, x*y
/// The generator list may continue over following lines.  Terms are
/// 'c*m', 'c' or 'm' where m multiplies 'var^exp' factors with '*'.
/// Coefficients are integers or fractions a/b (over Q).
/// Inhomogeneous generators are rejected with a diagnostic.
ParsedIdeal parse_ideal(std::string_view text);

/// Canonical rendering; parse_ideal(print_ideal(x)) reproduces x.
std::string print_ideal(const ParsedIdeal& input);

} // namespace ginvar
