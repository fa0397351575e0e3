#include "ginvar/render.hpp"

#include <algorithm>
#include <functional>

namespace ginvar {

namespace {

std::string pad_left(const std::string& s, size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

// Grid renderer shared by the alpha and Betti tables: rows j = 0..max_twist,
// the corner label names the table.
std::string render_grid(const std::string& corner, int cols, int max_twist,
                        const std::function<std::string(int, int)>& cell) {
    int rows = std::max(max_twist, 0) + 1;
    std::vector<std::vector<std::string>> text(rows + 1, std::vector<std::string>(cols + 1));
    text[0][0] = corner;
    for (int i = 0; i < cols; ++i) text[0][i + 1] = std::to_string(i);
    for (int j = 0; j < rows; ++j) {
        text[j + 1][0] = "j=" + std::to_string(j);
        for (int i = 0; i < cols; ++i) text[j + 1][i + 1] = cell(i, j);
    }
    std::vector<size_t> width(cols + 1, 0);
    for (const auto& row : text)
        for (int k = 0; k <= cols; ++k) width[k] = std::max(width[k], row[k].size());
    std::string out;
    for (const auto& row : text) {
        for (int k = 0; k <= cols; ++k) out += (k ? "  " : "") + pad_left(row[k], width[k]);
        out += "\n";
    }
    return out;
}

std::string alpha_mark(const AnnihilatorTable& t, int i, int j) {
    bool e = t.extremal.count({i, j}) > 0;
    bool c = t.coextremal.count({i, j}) > 0;
    if (e && c) return "[ec]";
    if (e) return "[e]";
    if (c) return "[c]";
    return "";
}

ordered_json extnat_json(const ExtNat& v) {
    return v.is_finite() ? ordered_json(v.value()) : ordered_json(nullptr);
}

ordered_json rational_json(const mpq_class& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

std::string verdict_line(const std::string& key, const Verdict& w) {
    std::string tag = !w.applicable ? "n/a " : w.holds ? "ok  " : "FAIL";
    return "  [" + tag + "] " + key + ": " + w.detail + "\n";
}

} // namespace

std::string render_alpha_table_text(const AnnihilatorTable& table) {
    if (table.entries.empty()) return "no entries\n";
    return render_grid("alpha", table.dimension, table.max_twist(), [&](int i, int j) {
        long v = table.at(i, j);
        return v == 0 ? std::string(".") : std::to_string(v) + alpha_mark(table, i, j);
    });
}

ordered_json alpha_json(const AnnihilatorTable& table) {
    ordered_json list = ordered_json::array();
    for (const auto& [key, value] : table.entries) {
        bool e = table.extremal.count(key) > 0;
        bool c = table.coextremal.count(key) > 0;
        ordered_json mark;
        if (e && c) mark = "both";
        else if (e) mark = "extremal";
        else if (c) mark = "coextremal";
        list.push_back({key.first, key.second, value, mark});
    }
    return list;
}

std::string render_betti_table_text(const BettiTable& betti) {
    int max_twist = 0;
    for (const auto& [key, value] : betti.beta) max_twist = std::max(max_twist, key.second);
    return render_grid("betti", betti.nvars + 1, max_twist, [&](int i, int j) {
        mpz_class v = betti.get(i, j);
        return v == 0 ? std::string(".") : v.get_str();
    });
}

ordered_json betti_json(const BettiTable& betti) {
    ordered_json list = ordered_json::array();
    for (const auto& [key, value] : betti.beta)
        if (value != 0)
            list.push_back({key.first, key.second, value.fits_slong_p()
                                                       ? ordered_json(value.get_si())
                                                       : ordered_json(value.get_str())});
    return list;
}

namespace {

std::string join_extnat(const std::vector<ExtNat>& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
    return s + ")";
}

std::string join_long(const std::vector<long>& v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
    return s + ")";
}

std::string certificate_text(const GinCertificate& cert) {
    std::string out = "certified = ";
    out += cert.certified ? "yes" : "no";
    out += " (seeds";
    for (uint64_t s : cert.seeds) out += " " + std::to_string(s);
    if (cert.bound > 0) out += ", bound " + std::to_string(cert.bound);
    if (cert.escalations > 0) out += ", " + std::to_string(cert.escalations) + " escalations";
    out += ")\n";
    out += std::string("borel_fixed = ") + (cert.borel_fixed ? "yes" : "no") +
           ", strongly_stable = " + (cert.strongly_stable ? "yes" : "no");
    if (cert.small_field) out += ", small field";
    out += "\n";
    if (!cert.diagnostic.empty()) out += "diagnostic: " + cert.diagnostic + "\n";
    return out;
}

ordered_json certificate_json(const GinCertificate& cert) {
    ordered_json j;
    j["certified"] = cert.certified;
    j["borel_fixed"] = cert.borel_fixed;
    j["strongly_stable"] = cert.strongly_stable;
    j["small_field"] = cert.small_field;
    j["bound"] = cert.bound;
    j["escalations"] = cert.escalations;
    j["seeds"] = cert.seeds;
    if (!cert.diagnostic.empty()) j["diagnostic"] = cert.diagnostic;
    return j;
}

} // namespace

std::string render_report_text(const InvariantReport& report) {
    std::string out;
    out += "gin = " + report.gin.str(report.vars) + "\n";
    out += certificate_text(report.cert);
    out += "height = " + std::to_string(report.height) + "\n";
    out += "initial degree = " + std::to_string(report.initial_degree) + "\n";
    out += "axial      a = " + join_extnat(report.axial) + "\n";
    out += "sreg         = " + join_long(report.sreg) + "\n";
    if (!report.sreg_sections.empty())
        out += "sreg (sections) = " + join_long(report.sreg_sections) + "\n";
    out += "omega        = " + join_long(report.omega) + "\n";
    std::vector<ExtNat> r;
    for (const auto& [s, value] : report.reduction) r.push_back(value);
    out += "reduction r_s, s=0.." + std::to_string(report.d - 1) + " = " + join_extnat(r) + "\n";
    out += "regularity   = " + std::to_string(report.regularity) + "\n";
    out += render_alpha_table_text(report.alpha);
    out += "verdicts:\n";
    for (const auto& key : verdict_keys()) {
        auto it = report.verdicts.find(key);
        if (it != report.verdicts.end()) out += verdict_line(key, it->second);
    }
    return out;
}

ordered_json report_json(const InvariantReport& report) {
    ordered_json j;
    ordered_json axial = ordered_json::array();
    for (const auto& a : report.axial) axial.push_back(extnat_json(a));
    j["axial"] = axial;
    j["sreg"] = report.sreg;
    j["omega"] = report.omega;
    ordered_json reduction;
    for (const auto& [s, value] : report.reduction)
        reduction[std::to_string(s)] = extnat_json(value);
    j["reduction"] = reduction;
    j["regularity"] = report.regularity;
    j["height"] = report.height;
    j["initial_degree"] = report.initial_degree;
    j["alpha"] = alpha_json(report.alpha);
    ordered_json verdicts;
    for (const auto& key : verdict_keys()) {
        auto it = report.verdicts.find(key);
        if (it == report.verdicts.end()) continue;
        verdicts[key] = {{"holds", it->second.holds},
                         {"applicable", it->second.applicable},
                         {"detail", it->second.detail}};
    }
    j["verdicts"] = verdicts;
    if (report.cross_checked) j["sreg_sections"] = report.sreg_sections;
    ordered_json gin;
    gin["generators"] = ordered_json::array();
    for (const auto& u : report.gin.gens) gin["generators"].push_back(u.str(report.vars));
    gin.update(certificate_json(report.cert));
    j["gin"] = gin;
    return j;
}

std::string render_powers_text(const PowerSequence& seq, const LinearFit* fit) {
    std::string out = "invariant " + seq.invariant.str() + "\n";
    for (const auto& p : seq.points)
        out += "  n=" + std::to_string(p.n) + "  value=" + p.value.str() + "\n";
    if (!seq.note.empty()) out += "note: " + seq.note + "\n";
    if (fit) {
        out += std::string("status = ") + (fit->stabilized ? "stabilized" : "unstabilized") +
               "\n";
        out += "fit: value = " + fit->slope.get_str() + "*n + " + fit->intercept.get_str() +
               " from n=" + std::to_string(fit->stable_from) + "\n";
    } else {
        out += "status = no fit\n";
    }
    return out;
}

ordered_json powers_json(const PowerSequence& seq, const LinearFit* fit) {
    ordered_json j;
    j["invariant"] = [&] {
        switch (seq.invariant.kind) {
        case InvariantSelector::Kind::axial: return "axial";
        case InvariantSelector::Kind::sreg: return "sreg";
        case InvariantSelector::Kind::regularity: return "regularity";
        case InvariantSelector::Kind::reduction: return "reduction";
        }
        return "?";
    }();
    if (seq.invariant.kind == InvariantSelector::Kind::axial ||
        seq.invariant.kind == InvariantSelector::Kind::sreg)
        j["i"] = seq.invariant.index;
    if (seq.invariant.kind == InvariantSelector::Kind::reduction) j["s"] = seq.invariant.index;
    ordered_json points = ordered_json::array();
    for (const auto& p : seq.points) points.push_back({p.n, extnat_json(p.value)});
    j["points"] = points;
    if (fit) {
        j["slope"] = rational_json(fit->slope);
        j["intercept"] = rational_json(fit->intercept);
        j["stable_from"] = fit->stable_from;
        j["status"] = fit->stabilized ? "stabilized" : "unstabilized";
    } else {
        bool infinite = false;
        for (const auto& p : seq.points) infinite |= !p.value.is_finite();
        j["slope"] = nullptr;
        j["intercept"] = nullptr;
        j["status"] = infinite ? "infinite" : "insufficient";
    }
    if (!seq.note.empty()) j["note"] = seq.note;
    return j;
}

template <class F>
std::string render_gb_text(const GroebnerBasis<F>& gb, const std::vector<std::string>& vars,
                           const F& field) {
    std::string out;
    for (const auto& g : gb.elems) out += poly_str(g, vars, field) + "\n";
    MonomialIdeal in = initial_ideal(static_cast<int>(vars.size()), gb);
    out += "initial ideal = " + in.str(vars) + "\n";
    if (gb.degree_cap) out += "degree cap = " + std::to_string(*gb.degree_cap) + "\n";
    return out;
}

template <class F>
ordered_json gb_json(const GroebnerBasis<F>& gb, const std::vector<std::string>& vars,
                     const F& field) {
    ordered_json j;
    j["order"] = "grevlex";
    j["basis"] = ordered_json::array();
    for (const auto& g : gb.elems) j["basis"].push_back(poly_str(g, vars, field));
    MonomialIdeal in = initial_ideal(static_cast<int>(vars.size()), gb);
    j["initial_ideal"] = ordered_json::array();
    for (const auto& u : in.gens) j["initial_ideal"].push_back(u.str(vars));
    j["degree_cap"] = gb.degree_cap ? ordered_json(*gb.degree_cap) : ordered_json(nullptr);
    return j;
}

template <class F>
std::string render_gin_text(const GinResult<F>& result, const std::vector<std::string>& vars) {
    std::string out = "gin = " + result.gin.str(vars) + "\n";
    out += certificate_text(certificate_of(result));
    return out;
}

template <class F>
ordered_json gin_json(const GinResult<F>& result, const std::vector<std::string>& vars) {
    ordered_json j;
    j["gin"] = ordered_json::array();
    for (const auto& u : result.gin.gens) j["gin"].push_back(u.str(vars));
    j.update(certificate_json(certificate_of(result)));
    ordered_json agreements = ordered_json::array();
    for (const auto& trial : result.trials) agreements.push_back(trial.in_ideal == result.gin);
    j["agreements"] = agreements;
    return j;
}

#define GINVAR_INSTANTIATE_RENDER(F)                                                          \
    template std::string render_gb_text<F>(const GroebnerBasis<F>&,                          \
                                           const std::vector<std::string>&, const F&);       \
    template ordered_json gb_json<F>(const GroebnerBasis<F>&, const std::vector<std::string>&, \
                                     const F&);                                              \
    template std::string render_gin_text<F>(const GinResult<F>&,                             \
                                            const std::vector<std::string>&);                \
    template ordered_json gin_json<F>(const GinResult<F>&, const std::vector<std::string>&);

GINVAR_INSTANTIATE_RENDER(RationalField)
GINVAR_INSTANTIATE_RENDER(PrimeField)

} // namespace ginvar
