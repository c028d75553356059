#include "cgraphs/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgraphs/charpoly.hpp"
#include "cgraphs/construct.hpp"
#include "cgraphs/graph_io.hpp"
#include "cgraphs/quotient.hpp"
#include "cgraphs/recognize.hpp"
#include "cgraphs/spectra.hpp"
#include "cgraphs/sweep.hpp"

namespace cgraphs {

namespace {

using ordered_json = nlohmann::ordered_json;

// Coefficient lists print as JSON numbers when every entry fits in 64 bits,
// otherwise as decimal strings (arbitrary precision survives either way).
ordered_json json_integers(const std::vector<Integer>& values) {
    bool all_small = true;
    for (const auto& v : values)
        if (!v.fits_slong_p()) {
            all_small = false;
            break;
        }
    auto arr = ordered_json::array();
    for (const auto& v : values) {
        if (all_small)
            arr.push_back(static_cast<long>(v.get_si()));
        else
            arr.push_back(v.get_str());
    }
    return arr;
}

ordered_json json_poly(const IntPoly& p) { return json_integers(p.coeffs()); }

ordered_json json_matrix(const IntMatrix& m) {
    auto rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        std::vector<Integer> row;
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(json_integers(row));
    }
    return rows;
}

ordered_json json_inertia(const Inertia& in) {
    ordered_json j;
    j["n_minus"] = in.n_minus;
    j["n_zero"] = in.n_zero;
    j["n_plus"] = in.n_plus;
    return j;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

void print_report(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string_view trim_trailing_ws(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int cmd_build(const std::vector<int>& alpha, const std::string& format_name_str,
              const std::string& out_path, std::ostream& out) {
    auto format = parse_format_name(format_name_str);
    if (!format) throw std::invalid_argument("unknown format: " + format_name_str);
    Composition c(alpha);
    auto [g, part] = build_cgraph(c);
    std::string payload = emit_graph(g, *format);

    ordered_json j;
    j["command"] = "build";
    j["alpha"] = alpha;
    j["n"] = g.order();
    j["format"] = format_name_str;
    if (out_path.empty()) {
        if (*format == GraphFormat::Json)
            j["graph"] = ordered_json::parse(payload);
        else
            j["graph"] = payload;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << payload << "\n";
        j["out"] = out_path;
    }
    print_report(out, j);
    return 0;
}

int cmd_quotient(const std::vector<int>& alpha, std::ostream& out) {
    Composition c(alpha);
    QuotientMatrix q = quotient_matrix(c);
    auto [g, part] = build_cgraph(c);

    ordered_json j;
    j["command"] = "quotient";
    j["alpha"] = alpha;
    j["k"] = c.k();
    j["matrix"] = json_matrix(q.mat);
    j["equitable"] = check_equitable(g, part, q);
    j["structural_identity"] = check_structural_identity(c);
    print_report(out, j);
    return 0;
}

int cmd_charpoly(const std::vector<int>& alpha, const std::string& via, std::ostream& out) {
    Composition c(alpha);
    ordered_json j;
    j["command"] = "charpoly";
    j["alpha"] = alpha;
    j["n"] = c.vertex_count();
    j["k"] = c.k();
    j["via"] = via;

    bool want_formula = via == "formula" || via == "both";
    bool want_oracle = via == "oracle" || via == "both";
    IntPoly f_pi, f_full, o_pi, o_full;
    if (want_formula) {
        f_pi = psi_pi(c);
        f_full = psi_full(c);
        j["psi_pi"] = json_poly(f_pi);
        j["psi"] = json_poly(f_full);
    }
    if (want_oracle) {
        o_pi = charpoly_oracle(quotient_matrix(c).mat);
        o_full = charpoly_oracle(adjacency_matrix(build_cgraph(c).first));
        j["oracle_psi_pi"] = json_poly(o_pi);
        j["oracle_psi"] = json_poly(o_full);
    }
    int rc = 0;
    if (via == "both") {
        bool agree = f_pi == o_pi && f_full == o_full;
        j["agreement"] = agree;
        if (!agree) rc = 1;
    }
    print_report(out, j);
    return rc;
}

int cmd_spectrum(const std::vector<int>& alpha, bool with_oracle, std::ostream& out) {
    Composition c(alpha);
    ordered_json j;
    j["command"] = "spectrum";
    j["alpha"] = alpha;
    j["n"] = c.vertex_count();
    j["k"] = c.k();
    j["inertia"] = json_inertia(inertia_formula(c));
    j["quotient_inertia"] = json_inertia(quotient_inertia(c));
    MultiplicityReport m = multiplicity_formula(c);
    j["m0"] = m.m0;
    j["m_minus1"] = m.m_minus1;
    auto minus_one = quotient_minus_one(c);
    j["quotient_minus_one_eigenvector"] =
        minus_one ? json_integers(*minus_one) : ordered_json(nullptr);
    IntervalReport interval = interval_check(c);
    {
        ordered_json ji;
        ji["lambda_minus_ub"] = rational_str(interval.lambda_minus_ub);
        ji["lambda_plus_lb"] = rational_str(interval.lambda_plus_lb);
        ji["count_in_gap"] = interval.count_in_gap;
        j["interval"] = ji;
    }
    IntPoly psi = psi_full(c);
    {
        ordered_json jd;
        jd["squarefree_degree"] = squarefree_part(psi).degree();
        jd["bound"] = 2 * c.k() + 2;
        jd["holds"] = distinct_count_bound(c, psi);
        j["distinct"] = jd;
    }

    int rc = 0;
    if (with_oracle) {
        IntPoly oracle = charpoly_oracle(adjacency_matrix(build_cgraph(c).first));
        Inertia oi = inertia_from_poly(oracle);
        long om0 = factor_multiplicity(oracle, IntPoly::x());
        long om1 = factor_multiplicity(oracle, make_poly({1, 1}));
        bool agree = oi == inertia_formula(c) && om0 == m.m0 && om1 == m.m_minus1;
        ordered_json jo;
        jo["inertia"] = json_inertia(oi);
        jo["m0"] = om0;
        jo["m_minus1"] = om1;
        jo["agreement"] = agree;
        j["oracle"] = jo;
        if (!agree) rc = 1;
    }
    print_report(out, j);
    return rc;
}

int cmd_recognize(const std::string& in_path, const std::string& format_name_str, std::ostream& out) {
    auto format = parse_format_name(format_name_str);
    if (!format) throw std::invalid_argument("unknown format: " + format_name_str);
    std::string text = read_input(in_path);
    std::string_view payload{text};
    if (*format == GraphFormat::Graph6) payload = trim_trailing_ws(payload);
    Graph g = parse_graph(payload, *format);
    PeelReport r = recognize(g);

    ordered_json j;
    j["command"] = "recognize";
    j["n"] = g.order();
    j["sequence"] = r.sequence;
    j["parity"] = r.even_length ? "even" : "odd";
    j["verdict"] = std::string(verdict_name(r.verdict));
    auto classes = ordered_json::array();
    for (int cls : r.class_of) {
        if (cls < 0)
            classes.push_back(nullptr);
        else
            classes.push_back(cls + 1);  // classes are 1-based in reports
    }
    j["class_of"] = classes;
    print_report(out, j);
    return 0;
}

int cmd_verify(int max_n, const std::vector<std::string>& check_names, int jobs, std::ostream& out) {
    std::vector<Check> checks;
    for (const auto& name : check_names) {
        auto c = parse_check_name(name);
        if (!c) throw std::invalid_argument("unknown check: " + name);
        checks.push_back(*c);
    }
    SweepReport report = run_sweep(max_n, std::move(checks), jobs);

    ordered_json j;
    j["command"] = "verify";
    j["max_n"] = report.max_n;
    auto names = ordered_json::array();
    for (Check c : report.checks) names.push_back(std::string(check_name(c)));
    j["checks"] = names;
    j["compositions"] = report.composition_count;
    auto failures = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json jf;
        jf["alpha"] = f.alpha;
        jf["check"] = std::string(check_name(f.check));
        jf["detail"] = f.detail;
        failures.push_back(jf);
    }
    j["failures"] = failures;
    j["pass"] = report.pass();
    print_report(out, j);
    return report.pass() ? 0 : 1;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact spectral toolkit for the sequence-defined cograph family"};
    app.name("cgraphs");
    app.require_subcommand(1);

    std::vector<int> alpha;
    std::string format_str = "graph6";
    std::string out_path;
    auto* build = app.add_subcommand("build", "Construct the graph of a composition");
    build->add_option("--alpha", alpha, "Composition parts a1,a2,...")->required()->delimiter(',');
    build->add_option("--format", format_str, "graph6|edgelist|json")->capture_default_str();
    build->add_option("--out", out_path, "Write the graph to a file instead of inline");

    std::vector<int> q_alpha;
    auto* quotient = app.add_subcommand("quotient", "Quotient matrix of the class partition");
    quotient->add_option("--alpha", q_alpha, "Composition parts a1,a2,...")->required()->delimiter(',');

    std::vector<int> cp_alpha;
    std::string via = "formula";
    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomials");
    charpoly->add_option("--alpha", cp_alpha, "Composition parts a1,a2,...")->required()->delimiter(',');
    charpoly->add_option("--via", via, "formula|oracle|both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}))
        ->capture_default_str();

    std::vector<int> sp_alpha;
    bool sp_oracle = false;
    auto* spectrum = app.add_subcommand("spectrum", "Inertia, multiplicities, interval and bound");
    spectrum->add_option("--alpha", sp_alpha, "Composition parts a1,a2,...")->required()->delimiter(',');
    spectrum->add_flag("--oracle", sp_oracle, "Cross-check the formulas against the exact oracle");

    std::string in_path;
    std::string rec_format = "graph6";
    auto* recognize_cmd = app.add_subcommand("recognize", "Class membership of an arbitrary graph");
    recognize_cmd->add_option("--in", in_path, "Input file ('-' for stdin)")->required();
    recognize_cmd->add_option("--format", rec_format, "graph6|edgelist|json")->capture_default_str();

    int max_n = 0;
    std::vector<std::string> check_names;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "Exhaustive verification sweep");
    verify->add_option("--max-n", max_n, "Largest vertex count to sweep")->required();
    verify->add_option("--checks", check_names, "Comma-separated check names (default: all)")
        ->delimiter(',');
    verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    std::vector<std::string> argv_storage(args.begin(), args.end());
    try {
        std::vector<const char*> argv;
        argv.push_back("cgraphs");
        for (const auto& a : argv_storage) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(alpha, format_str, out_path, out);
        if (quotient->parsed()) return cmd_quotient(q_alpha, out);
        if (charpoly->parsed()) return cmd_charpoly(cp_alpha, via, out);
        if (spectrum->parsed()) return cmd_spectrum(sp_alpha, sp_oracle, out);
        if (recognize_cmd->parsed()) return cmd_recognize(in_path, rec_format, out);
        if (verify->parsed()) return cmd_verify(max_n, check_names, jobs, out);
    } catch (const OutsideCEvenError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Graph6Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: invalid json input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace cgraphs
