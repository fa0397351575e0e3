#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ginvar/asymptotics.hpp"
#include "ginvar/gin.hpp"
#include "ginvar/groebner.hpp"
#include "ginvar/invariants.hpp"
#include "ginvar/monideal.hpp"

namespace ginvar {

using ordered_json = nlohmann::ordered_json;

/// Annihilator table, rows = twist j (0..largest nonzero twist), columns
/// i = 0..d-1, "." for zeros, extremal entries marked [e], coextremal [c],
/// both [ec].
std::string render_alpha_table_text(const AnnihilatorTable& table);
ordered_json alpha_json(const AnnihilatorTable& table);

/// Betti table, rows = twist j, columns = homological index 0..d.
std::string render_betti_table_text(const BettiTable& betti);
ordered_json betti_json(const BettiTable& betti);

std::string render_report_text(const InvariantReport& report);
ordered_json report_json(const InvariantReport& report);

/// fit may be null (infinite values or too few points).
std::string render_powers_text(const PowerSequence& seq, const LinearFit* fit);
ordered_json powers_json(const PowerSequence& seq, const LinearFit* fit);

template <class F>
std::string render_gb_text(const GroebnerBasis<F>& gb, const std::vector<std::string>& vars,
                           const F& field);
template <class F>
ordered_json gb_json(const GroebnerBasis<F>& gb, const std::vector<std::string>& vars,
                     const F& field);

template <class F>
std::string render_gin_text(const GinResult<F>& result, const std::vector<std::string>& vars);
template <class F>
ordered_json gin_json(const GinResult<F>& result, const std::vector<std::string>& vars);

} // namespace ginvar
