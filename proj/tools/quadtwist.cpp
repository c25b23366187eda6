// quadtwist: local data, norm indices and Sha predictions for quadratic
// twists of elliptic curves over Q, in exact arithmetic.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadtwist/curves.hpp"
#include "quadtwist/errors.hpp"
#include "quadtwist/localdata.hpp"
#include "quadtwist/mkt.hpp"
#include "quadtwist/predict.hpp"
#include "quadtwist/report.hpp"
#include "quadtwist/tunnell.hpp"

namespace qt = quadtwist;
using nlohmann::json;
using qt::Int;
using qt::Rat;

namespace {

constexpr const char* kOmegaDecimal = "2.6220575";  // display only

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw qt::input_error("malformed rational: " + s);
    }
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw qt::input_error("malformed integer: " + s);
    }
}

qt::CurveQ parse_curve(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    qt::CurveQ E;
    if (parts.size() == 2) {
        E = qt::CurveQ::short_form(parse_rat(parts[0]), parse_rat(parts[1]));
    } else if (parts.size() == 5) {
        E.a1 = parse_rat(parts[0]);
        E.a2 = parse_rat(parts[1]);
        E.a3 = parse_rat(parts[2]);
        E.a4 = parse_rat(parts[3]);
        E.a6 = parse_rat(parts[4]);
    } else {
        throw qt::input_error("--curve expects a,b or a1,a2,a3,a4,a6");
    }
    if (E.discriminant() == 0) throw qt::input_error("curve is singular");
    return E;
}

json curve_json(const qt::CurveQ& E) {
    return json{{"a1", qt::rat_str(E.a1)}, {"a2", qt::rat_str(E.a2)},
                {"a3", qt::rat_str(E.a3)}, {"a4", qt::rat_str(E.a4)},
                {"a6", qt::rat_str(E.a6)}, {"disc", qt::rat_str(E.discriminant())}};
}

json prediction_json(const qt::ShaPrediction& sp) {
    json j{{"kind", qt::to_string(sp.kind)},
           {"value", qt::rat_str(sp.value)},
           {"ledger",
            {{"r_df", sp.r_df}, {"r_f", sp.r_f}, {"delta", sp.delta}, {"index", sp.index.get_str()}}}};
    if (sp.has_corrected) j["index_corrected_value"] = qt::rat_str(sp.corrected_value);
    return j;
}

json diagnostics_json(const qt::ShaPrediction& sp) {
    return json{{"integral", sp.integral},
                {"perfect_square", sp.perfect_square},
                {"vacuous", sp.vacuous},
                {"notes", sp.notes}};
}

struct Output {
    bool as_json = false;
    json doc;
    std::vector<std::string> text;

    void line(const std::string& s) { text.push_back(s); }
    void flush() {
        if (as_json) {
            doc["version"] = qt::version_string();
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& s : text) std::cout << s << "\n";
        }
    }
};

std::string kodaira_line(const qt::ReductionData& rd) { return qt::describe(rd); }

// ---------------------------------------------------------------- twist

int cmd_twist(const std::string& curve, const std::string& d, Output& out) {
    qt::CurveQ E = parse_curve(curve);
    Int D = parse_int(d);
    qt::CurveQ ED = E.twist(D);
    out.doc["input"] = {{"curve", curve_json(E)}, {"d", D.get_str()}};
    out.doc["result"] = {{"twist", curve_json(ED)},
                         {"c4", qt::rat_str(ED.c4())},
                         {"c6", qt::rat_str(ED.c6())}};
    out.doc["assumptions"] = json::array();
    out.doc["diagnostics"] = json::object();
    out.line("E_D: y^2 = x^3 + (" + qt::rat_str(ED.a4) + ") x + (" + qt::rat_str(ED.a6) + ")");
    out.line("disc = " + qt::rat_str(ED.discriminant()));
    return 0;
}

// ---------------------------------------------------------------- local

int cmd_local(const std::string& curve, const std::string& p, const std::string& d, Output& out) {
    qt::CurveQ E = parse_curve(curve);
    Int P = parse_int(p);
    qt::LocalFieldDesc F =
        d.empty() ? qt::LocalFieldDesc::base(P) : qt::LocalFieldDesc::completion(P, parse_int(d));
    qt::ReductionData rd = qt::tate_reduction(E, F);
    out.doc["input"] = {{"curve", curve_json(E)}, {"p", P.get_str()}, {"d", d.empty() ? "1" : d}};
    json res{{"kodaira", rd.kodaira.str()},
             {"v_min_disc", rd.v_min_disc},
             {"tamagawa", rd.tamagawa.get_str()},
             {"kind", qt::to_string(rd.kind)}};
    if (rd.kind == qt::ReductionKind::multiplicative) res["split"] = rd.split_mult;
    if (rd.kind == qt::ReductionKind::good) {
        res["subkind"] = qt::to_string(rd.good_subkind);
        qt::ResidueCurveInfo ri = qt::residue_curve_info(E, F);
        res["residue_points"] = ri.count_fq.get_str();
        res["two_torsion_dim"] = ri.two_torsion_dim;
    }
    out.doc["result"] = res;
    out.doc["assumptions"] = json::array();
    out.doc["diagnostics"] = json::object();
    out.line(kodaira_line(rd));
    return 0;
}

// ---------------------------------------------------------------- mkt

int cmd_mkt(const std::string& curve, const std::string& d, Output& out) {
    qt::CurveQ E = parse_curve(curve);
    Int D = parse_int(d);
    qt::MktBreakdown mb = qt::mkt_index(E, D);
    qt::KramerBreakdown kb = qt::delta_kramer(E, D);
    if (mb.delta != kb.delta)
        throw qt::internal_error("mkt: product formula and decomposition disagree");
    json terms = json::array();
    for (const auto& t : mb.terms)
        terms.push_back({{"p", t.p.get_str()},
                         {"log2_tamagawa_ratio", qt::rat_str(t.A)},
                         {"discriminant_coeff", qt::rat_str(t.B)},
                         {"term", t.term}});
    out.doc["input"] = {{"curve", curve_json(E)}, {"d", D.get_str()}};
    out.doc["result"] = {{"delta", mb.delta},
                         {"delta_inf", mb.delta_inf},
                         {"delta_f", mb.delta_f},
                         {"terms", terms},
                         {"kramer",
                          {{"delta_g", kb.delta_g},
                           {"delta_m", kb.delta_m},
                           {"delta_a", kb.delta_a}}}};
    out.doc["assumptions"] = json::array();
    out.doc["diagnostics"] = {{"paths_agree", true}};
    out.line("delta = " + std::to_string(mb.delta) + "  (delta_inf = " +
             std::to_string(mb.delta_inf) + ", delta_f = " + std::to_string(mb.delta_f) + ")");
    out.line("kramer: delta_g = " + std::to_string(kb.delta_g) + ", delta_m = " +
             std::to_string(kb.delta_m) + ", delta_a = " + std::to_string(kb.delta_a));
    return 0;
}

// ---------------------------------------------------------------- tunnell

json tunnell_record_json(const qt::TunnellRecord& r) {
    return json{{"n", r.n},
                {"coeff", r.coeff.get_str()},
                {"l_ratio", qt::rat_str(r.l_ratio)},
                {"verdict", qt::to_string(r.verdict)}};
}

std::string tunnell_record_line(const qt::TunnellRecord& r) {
    bool even = (r.n % 2 == 0);
    std::string name = even ? ("a'_" + std::to_string(r.n / 2)) : ("a_" + std::to_string(r.n));
    return "n = " + std::to_string(r.n) + ": " + name + " = " + r.coeff.get_str() +
           ", L-ratio = " + qt::rat_str(r.l_ratio) + ", " + qt::to_string(r.verdict);
}

int cmd_tunnell(const std::string& n_opt, const std::string& range, Output& out) {
    if (!range.empty()) {
        auto dots = range.find("..");
        if (dots == std::string::npos) throw qt::input_error("--range expects A..B");
        long lo = std::stol(range.substr(0, dots));
        long hi = std::stol(range.substr(dots + 2));
        json records = json::array();
        qt::tunnell_range(lo, hi, [&](const qt::TunnellRecord& r) {
            if (out.as_json)
                records.push_back(tunnell_record_json(r));
            else
                std::cout << tunnell_record_line(r) << "\n";
        });
        out.doc["input"] = {{"range", range}};
        out.doc["result"] = records;
        out.doc["assumptions"] = json::array();
        out.doc["diagnostics"] = json::object();
        return 0;
    }
    Int n = parse_int(n_opt);
    if (n <= 0 || !n.fits_slong_p()) throw qt::input_error("--n must be a small positive integer");
    qt::TunnellRecord r;
    r.n = n.get_si();
    r.coeff = (r.n % 2 == 0) ? qt::coeff_a_prime(n / 2) : qt::coeff_a(n);
    r.l_ratio = qt::l_value_ratio(n);
    r.verdict = qt::congruent_verdict(n);
    out.doc["input"] = {{"n", r.n}};
    out.doc["result"] = tunnell_record_json(r);
    out.doc["assumptions"] = json::array();
    out.doc["diagnostics"] = json::object();
    out.line(tunnell_record_line(r));
    return 0;
}

int cmd_congruent(const std::string& n_opt, Output& out) {
    Int n = parse_int(n_opt);
    qt::CongruentVerdict v = qt::congruent_verdict(n);
    out.doc["input"] = {{"n", n.get_str()}};
    out.doc["result"] = {{"verdict", qt::to_string(v)},
                         {"l_ratio", qt::rat_str(qt::l_value_ratio(n))}};
    out.doc["assumptions"] =
        json::array({"nonvanishing L-value rules out rational points unconditionally",
                     "vanishing implies congruent only under Sha finiteness / BSD"});
    out.doc["diagnostics"] = json::object();
    out.line(n.get_str() + ": " + qt::to_string(v));
    return 0;
}

// ---------------------------------------------------------------- predict-sha

int cmd_predict_sha(const std::string& n_opt, const std::string& curve, const std::string& d,
                    int r_f, int r_df, const std::string& index, Output& out) {
    qt::ShaPrediction sp;
    if (!n_opt.empty()) {
        Int n = parse_int(n_opt);
        sp = qt::sha_order_en(n);
        out.doc["input"] = {{"n", n.get_str()}, {"curve", "y^2 = x^3 - x"}};
    } else {
        if (curve.empty() || d.empty())
            throw qt::input_error("predict-sha needs --n, or --curve with --d");
        qt::CurveQ E = parse_curve(curve);
        Int D = parse_int(d);
        sp = qt::sha_ratio(E, D, r_f, r_df, index.empty() ? Int(1) : parse_int(index));
        out.doc["input"] = {{"curve", curve_json(E)},
                            {"d", D.get_str()},
                            {"r_f", r_f},
                            {"r_df", r_df},
                            {"index", index}};
    }
    out.doc["result"] = prediction_json(sp);
    out.doc["assumptions"] = sp.assumptions;
    out.doc["diagnostics"] = diagnostics_json(sp);
    out.line(qt::describe(sp));
    for (const auto& a : sp.assumptions) out.line("assuming: " + a);
    return 0;
}

// ---------------------------------------------------------------- heegner

int cmd_heegner(const std::string& d, const std::string& curve, const std::string& index_opt,
                bool l_nonzero, Output& out) {
    Int D = parse_int(d);
    qt::CurveQ E =
        curve.empty() ? qt::CurveQ::short_form(-1, Rat(1, 4)) : parse_curve(curve);
    bool l_vanishes = !l_nonzero;
    Int index;
    json diag = json::object();
    if (!index_opt.empty()) {
        index = parse_int(index_opt);
    } else {
        // derive the norm index for the rank-one built-in curve from the
        // archimedean obstruction against P0 = (0, 1/2)
        if (!curve.empty())
            throw qt::input_error("heegner: --index is required for a custom curve");
        qt::NormIndexReport ni = qt::heegner_norm_index(E, 0, Rat(1, 2), D);
        if (!ni.decided) throw qt::internal_error("heegner: norm index undecided");
        index = ni.index;
        diag["norm_index"] = {{"torsion_trivial", ni.torsion_trivial},
                              {"two_components", ni.two_components},
                              {"bounded_component", ni.bounded_component},
                              {"index", ni.index.get_str()}};
    }
    qt::ShaPrediction sp = qt::heegner_sha(E, D, l_vanishes, index);
    out.doc["input"] = {{"curve", curve_json(E)},
                        {"d", D.get_str()},
                        {"l_vanishes", l_vanishes},
                        {"index", index.get_str()}};
    out.doc["result"] = prediction_json(sp);
    out.doc["assumptions"] = sp.assumptions;
    json dg = diagnostics_json(sp);
    dg.update(diag);
    out.doc["diagnostics"] = dg;
    out.line(qt::describe(sp));
    for (const auto& nline : sp.notes) out.line(nline);
    for (const auto& a : sp.assumptions) out.line("assuming: " + a);
    if (sp.kind == qt::PredictionKind::heegner_order && sp.value == 1 &&
        sp.assumptions.size() > 1)
        out.line("Sha(E/K) is trivial");
    return 0;
}

// ---------------------------------------------------------------- verify-h1

qt::GeneratedSubgroup parse_gens_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qt::input_error("cannot open generator file: " + path);
    qt::GeneratedSubgroup G;
    bool have_header = false;
    std::string line;
    long budget = qt::enum_budget_default();
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 4 || tok[0] != "curve")
                throw qt::input_error("generator file: expected header 'curve a b D'");
            G.E = qt::CurveQ::short_form(parse_rat(tok[1]), parse_rat(tok[2]));
            G.D = parse_int(tok[3]);
            have_header = true;
            continue;
        }
        if (tok.size() != 4)
            throw qt::input_error("generator file: expected point line 'x_a x_b y_a y_b'");
        qt::QuadPoint P = qt::QuadPoint::affine(
            qt::QuadElem(parse_rat(tok[0]), parse_rat(tok[1]), G.D),
            qt::QuadElem(parse_rat(tok[2]), parse_rat(tok[3]), G.D));
        if (!qt::on_curve(G.E, P, G.D))
            throw qt::input_error("generator file: point is not on the curve");
        if (qt::point_order(G.E, P, budget).has_value())
            G.torsion_gens.push_back(P);
        else if (qt::sigma(P) == P)
            G.free_fixed.push_back(P);
        else if (qt::sigma(P) == qt::neg(G.E, P))
            G.free_anti.push_back(P);
        else
            throw qt::input_error(
                "generator file: free generators must satisfy sigma(g) = g or -g");
    }
    if (!have_header) throw qt::input_error("generator file: missing header");
    return G;
}

int cmd_verify_h1(const std::string& path, Output& out) {
    qt::GeneratedSubgroup G = parse_gens_file(path);
    qt::H1Check hc = qt::verify_h1_order(G, qt::enum_budget_default());
    out.doc["input"] = {{"gens", path},
                        {"curve", curve_json(G.E)},
                        {"d", G.D.get_str()},
                        {"torsion_gens", G.torsion_gens.size()},
                        {"free_fixed", G.free_fixed.size()},
                        {"free_anti", G.free_anti.size()}};
    out.doc["result"] = {{"lhs", hc.lhs.get_str()},
                         {"rhs", hc.rhs.get_str()},
                         {"index", hc.index.get_str()},
                         {"match", hc.match}};
    out.doc["assumptions"] =
        json::array({"supplied generators generate the relevant subgroup of E(K)"});
    out.doc["diagnostics"] = json::object();
    out.line("#H^1(G, E(K)) = " + hc.lhs.get_str() + ", 2^{r_DF - r_F} * index = " +
             hc.rhs.get_str() + ", index = " + hc.index.get_str() +
             (hc.match ? "  [match]" : "  [MISMATCH]"));
    return hc.match ? 0 : 3;
}

// ---------------------------------------------------------------- bsd-check

int cmd_bsd_check(const std::string& n_opt, Output& out) {
    Int n = parse_int(n_opt);
    qt::BsdAssembly b = qt::bsd_assembly_en(n);
    std::string sq = "sqrt(" + Int(abs(n)).get_str() + ")";
    out.doc["input"] = {{"n", n.get_str()}, {"omega_decimal", kOmegaDecimal}};
    out.doc["result"] = {{"lhs_q", qt::rat_str(b.lhs_q)},
                         {"rhs_q", qt::rat_str(b.rhs_q)},
                         {"equal_q", b.equal_q},
                         {"lhs_k", qt::rat_str(b.lhs_k)},
                         {"rhs_k", qt::rat_str(b.rhs_k)},
                         {"equal_k", b.equal_k},
                         {"sha_en", qt::rat_str(b.sha_en)},
                         {"sha_ek", qt::rat_str(b.sha_ek)},
                         {"tamagawa_q", qt::rat_str(b.tamagawa_q)},
                         {"tamagawa_k", qt::rat_str(b.tamagawa_k)},
                         {"torsion_q", b.torsion_q},
                         {"torsion_k", b.torsion_k},
                         {"disc_mult", b.disc_mult}};
    out.doc["assumptions"] = b.assumptions;
    out.doc["diagnostics"] = {{"vacuous", b.vacuous},
                              {"corrected_k_checked", b.has_corrected_k},
                              {"equal_k_corrected", b.equal_k_corrected}};
    out.line("L(E_n/Q,1)  = " + qt::rat_str(b.lhs_q) + " * omega / " + sq + "   [BSD rhs " +
             qt::rat_str(b.rhs_q) + (b.equal_q ? ", equal]" : ", NOT EQUAL]"));
    out.line("L(E/K,1)    = " + qt::rat_str(b.lhs_k) + " * omega^2 / " + sq + " [BSD rhs " +
             qt::rat_str(b.rhs_k) + (b.equal_k ? ", equal]" : ", NOT EQUAL]"));
    if (b.has_corrected_k)
        out.line(std::string("index-corrected K-side check: ") +
                 (b.equal_k_corrected ? "equal" : "NOT EQUAL"));
    out.line("omega = " + std::string(kOmegaDecimal) + " (display only)");
    if (b.vacuous) return 0;
    if (!b.equal_q) return 3;
    if (!b.equal_k && !b.equal_k_corrected) return 3;
    return 0;
}

// ---------------------------------------------------------------- table

struct Lemma41Row {
    long cls;          // residue class: odd n mod 8, even n mod 16
    bool even;
    const char* field;
    long ord;
    Int c;
    long rep;          // squarefree representative used to regenerate
};

const std::vector<Lemma41Row>& lemma41_golden() {
    static const std::vector<Lemma41Row> rows = {
        {1, false, "Q2", 6, 2, 17},        {5, false, "Q2(sqrt -3)", 6, 2, 5},
        {3, false, "Q2(sqrt 3)", 12, 2, 3}, {7, false, "Q2(sqrt -1)", 12, 4, 7},
        {2, true, "Q2(sqrt 2)", 12, 4, 2},  {10, true, "Q2(sqrt -6)", 12, 4, 10},
        {6, true, "Q2(sqrt 6)", 12, 2, 6},  {14, true, "Q2(sqrt -2)", 12, 2, 14},
    };
    return rows;
}

int cmd_table(const std::string& which, Output& out) {
    qt::CurveQ E = qt::CurveQ::short_form(-1, 0);
    bool all_match = true;
    json rows = json::array();
    if (which == "lemma-4.1") {
        for (const auto& row : lemma41_golden()) {
            qt::ReductionData rd =
                qt::tate_reduction(E, qt::LocalFieldDesc::completion(2, row.rep));
            bool ok = (rd.v_min_disc == row.ord && rd.tamagawa == row.c);
            all_match = all_match && ok;
            rows.push_back({{"class", row.cls},
                            {"modulus", row.even ? 16 : 8},
                            {"field", row.field},
                            {"ord_w_disc", rd.v_min_disc},
                            {"c_w", rd.tamagawa.get_str()},
                            {"golden_ord", row.ord},
                            {"golden_c", row.c.get_str()},
                            {"match", ok}});
            out.line("n = " + std::to_string(row.cls) + " (mod " +
                     std::to_string(row.even ? 16 : 8) + "): " + row.field + ", ord = " +
                     std::to_string(rd.v_min_disc) + ", c = " + rd.tamagawa.get_str() +
                     (ok ? "" : "  [DIFFERS FROM GOLDEN]"));
        }
    } else if (which == "lemma-4.2") {
        for (long n = -100; n <= 100; ++n) {
            if (n == 0 || n == 1 || !qt::is_squarefree(n)) continue;
            long delta = qt::mkt_index(E, n).delta;
            long closed = qt::mkt_congruent_closed_form(n);
            bool ok = (delta == closed);
            all_match = all_match && ok;
            rows.push_back({{"n", n}, {"delta", delta}, {"closed_form", closed}, {"match", ok}});
            if (!ok)
                out.line("n = " + std::to_string(n) + ": delta " + std::to_string(delta) +
                         " != closed form " + std::to_string(closed));
        }
        out.line(all_match ? "lemma-4.2 table matches the closed form for all squarefree |n| <= 100"
                           : "lemma-4.2 table has mismatches");
    } else {
        throw qt::input_error("table expects lemma-4.1 or lemma-4.2");
    }
    out.doc["input"] = {{"table", which}};
    out.doc["result"] = rows;
    out.doc["assumptions"] = json::array();
    out.doc["diagnostics"] = {{"all_match", all_match}};
    return all_match ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local data and Sha predictions for quadratic twists"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one structured JSON document");

    std::string curve, d, n_opt, range, index_opt, gens_path, table_name, p_opt;
    int r_f = 0, r_df = 0;
    bool l_nonzero = false;

    auto* c_twist = app.add_subcommand("twist", "quadratic twist of a curve")->fallthrough();
    c_twist->add_option("--curve", curve)->required();
    c_twist->add_option("--d", d)->required();

    auto* c_local = app.add_subcommand("local", "Tate algorithm at one place")->fallthrough();
    c_local->add_option("--curve", curve)->required();
    c_local->add_option("--p", p_opt)->required();
    c_local->add_option("--d", d);

    auto* c_mkt = app.add_subcommand("mkt", "norm index exponent delta")->fallthrough();
    c_mkt->add_option("--curve", curve)->required();
    c_mkt->add_option("--d", d)->required();

    auto* c_tun = app.add_subcommand("tunnell", "theta coefficients")->fallthrough();
    c_tun->add_option("--n", n_opt);
    c_tun->add_option("--range", range);

    auto* c_cong = app.add_subcommand("congruent", "congruent number verdict")->fallthrough();
    c_cong->add_option("--n", n_opt)->required();

    auto* c_pred = app.add_subcommand("predict-sha", "Sha order / ratio prediction")->fallthrough();
    c_pred->add_option("--n", n_opt);
    c_pred->add_option("--curve", curve);
    c_pred->add_option("--d", d);
    c_pred->add_option("--rf", r_f);
    c_pred->add_option("--rdf", r_df);
    c_pred->add_option("--index", index_opt);

    auto* c_heeg = app.add_subcommand("heegner", "Heegner-case Sha prediction")->fallthrough();
    c_heeg->add_option("--d", d)->required();
    c_heeg->add_option("--curve", curve);
    c_heeg->add_option("--index", index_opt);
    c_heeg->add_flag("--l-nonzero", l_nonzero, "assert L(E/Q,1) != 0");

    auto* c_h1 = app.add_subcommand("verify-h1", "check the H^1 order identity")->fallthrough();
    c_h1->add_option("--gens", gens_path)->required();

    auto* c_bsd = app.add_subcommand("bsd-check", "assemble both sides of the L-value identities")->fallthrough();
    c_bsd->add_option("--n", n_opt)->required();

    auto* c_table = app.add_subcommand("table", "regenerate a table against goldens")->fallthrough();
    c_table->add_option("name", table_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;  // bad flags and unknown subcommands are input errors
    }

    Output out;
    out.as_json = as_json;
    int rc = 0;
    try {
        if (c_twist->parsed()) rc = cmd_twist(curve, d, out);
        else if (c_local->parsed()) rc = cmd_local(curve, p_opt, d, out);
        else if (c_mkt->parsed()) rc = cmd_mkt(curve, d, out);
        else if (c_tun->parsed()) rc = cmd_tunnell(n_opt, range, out);
        else if (c_cong->parsed()) rc = cmd_congruent(n_opt, out);
        else if (c_pred->parsed()) rc = cmd_predict_sha(n_opt, curve, d, r_f, r_df, index_opt, out);
        else if (c_heeg->parsed()) rc = cmd_heegner(d, curve, index_opt, l_nonzero, out);
        else if (c_h1->parsed()) rc = cmd_verify_h1(gens_path, out);
        else if (c_bsd->parsed()) rc = cmd_bsd_check(n_opt, out);
        else if (c_table->parsed()) rc = cmd_table(table_name, out);
    } catch (const qt::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qt::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const qt::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    out.flush();
    return rc;
}
