// sgt: command line front end for the signed graph toolkit.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// parse error.  Every failure prints a single reason line.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgt/balance.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/line_graph.hpp"
#include "sgt/matrices.hpp"
#include "sgt/oracle.hpp"
#include "sgt/report.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/spectra.hpp"
#include "sgt/vsr.hpp"

namespace {

constexpr double kVerifyTol = 1e-8;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ','))
        out.push_back(sgt::detail::parse_int(tok, 1, "list entry"));
    return out;
}

sgt::Orientation orientation_or_default(const sgt::SignedGraph& g,
                                        const std::optional<sgt::Orientation>& o) {
    return o ? *o : sgt::default_orientation(g);
}

void print_list(const char* label, const std::vector<int>& xs) {
    std::cout << label;
    for (int x : xs) std::cout << ' ' << x;
    std::cout << '\n';
}

int run_balance(const sgt::SignedGraph& g) {
    sgt::BalanceCertificate cert = sgt::is_balanced(g);
    auto [b, c] = sgt::balanced_component_count(g);
    std::cout << (cert.balanced ? "balanced" : "unbalanced") << '\n';
    std::cout << "components " << c << " balanced-components " << b << '\n';
    if (cert.balanced) {
        print_list("X", cert.bipartition->first);
        print_list("Y", cert.bipartition->second);
    } else {
        print_list("witness", *cert.witness);
    }
    return 0;
}

void print_ar_matrix(const sgt::SignedGraph& g, bool csv) {
    sgt::ArMatrix r = sgt::ar_matrix(g);
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            if (j > 0) std::cout << (csv ? "," : " ");
            std::cout << sgt::ar_char(r(i, j));
        }
        std::cout << '\n';
    }
}

int run_matrix(const sgt::SignedGraph& g, const std::optional<sgt::Orientation>& o,
               const std::string& kind, const std::string& format) {
    sgt::MatrixFormat fmt =
        format == "csv" ? sgt::MatrixFormat::csv : sgt::MatrixFormat::plain;
    if (kind == "adj")
        std::cout << sgt::write_matrix(sgt::adjacency(g), fmt);
    else if (kind == "seidel")
        std::cout << sgt::write_matrix(sgt::seidel(sgt::underlying(g)), fmt);
    else if (kind == "incidence")
        std::cout << sgt::write_matrix(sgt::incidence(g, orientation_or_default(g, o)), fmt);
    else if (kind == "kirchhoff")
        std::cout << sgt::write_matrix(sgt::kirchhoff(g), fmt);
    else if (kind == "ar")
        print_ar_matrix(g, format == "csv");
    return 0;
}

int run_spectrum(const sgt::SignedGraph& g, const std::string& which, double tol) {
    sgt::IntMatrix m = which == "kirchhoff" ? sgt::kirchhoff(g) : sgt::adjacency(g);
    for (double x : sgt::eig_sym(m, tol))
        std::cout << std::setprecision(12) << x << '\n';
    return 0;
}

int run_rank(const sgt::SignedGraph& g, const std::optional<sgt::Orientation>& o,
             const std::string& field) {
    sgt::IntMatrix h = sgt::incidence(g, orientation_or_default(g, o));
    std::cout << (field == "gf2" ? sgt::rank_gf2(h) : sgt::rank_rational(h)) << '\n';
    return 0;
}

int print_report(const sgt::Report& rep) {
    for (const sgt::CheckItem& item : rep.items) {
        const char* tag = item.advisory ? "note" : (item.passed ? "ok" : "FAIL");
        std::cout << tag << ' ' << item.name;
        if (!item.detail.empty()) std::cout << ": " << item.detail;
        std::cout << '\n';
    }
    std::cout << (rep.ok() ? "pass" : "fail") << '\n';
    return rep.ok() ? 0 : 1;
}

sgt::Report suite_rank(const sgt::SignedGraph& g, const std::optional<sgt::Orientation>& o) {
    sgt::Report rep;
    sgt::IntMatrix h = sgt::incidence(g, orientation_or_default(g, o));
    auto [b, c] = sgt::balanced_component_count(g);
    int rq = sgt::rank_rational(h);
    int r2 = sgt::rank_gf2(h);
    rep.add("rank-q", rq == g.n() - b,
            "rank = " + std::to_string(rq) + ", n - b = " + std::to_string(g.n() - b));
    rep.add("rank-gf2", r2 == g.n() - c,
            "rank = " + std::to_string(r2) + ", n - c = " + std::to_string(g.n() - c));
    int b_oracle = 0;
    for (const auto& comp : sgt::components(g)) {
        bool neg = false;
        for (const sgt::Circle& circ : sgt::enumerate_circles(sgt::induced_subgraph(g, comp)))
            if (circ.sign < 0) neg = true;
        if (!neg) ++b_oracle;
    }
    rep.add("balanced-components-oracle", b_oracle == b,
            "circle enumeration gives b = " + std::to_string(b_oracle) +
                ", spanning forest gives " + std::to_string(b));
    return rep;
}

sgt::Report suite_walks(const sgt::SignedGraph& g) {
    sgt::Report rep;
    sgt::IntMatrix a = sgt::adjacency(g);
    sgt::IntMatrix au = sgt::abs_adjacency(g);
    long long checked = 0;
    std::string fail;
    for (int l = 0; l <= 4; ++l) {
        sgt::IntMatrix al = a.pow(l);
        sgt::IntMatrix aul = au.pow(l);
        for (int i = 1; i <= g.n(); ++i)
            for (int j = 1; j <= g.n(); ++j) {
                sgt::WalkCounts w = sgt::count_signed_walks(g, i, j, l);
                ++checked;
                bool ok = w.plus - w.minus == al(i - 1, j - 1) &&
                          w.plus + w.minus == aul(i - 1, j - 1);
                if (!ok && fail.empty())
                    fail = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                           ") length " + std::to_string(l);
            }
    }
    rep.add("walk-counts", fail.empty(),
            fail.empty() ? std::to_string(checked) + " pairs checked, lengths 0..4" : fail);
    return rep;
}

sgt::Report suite_linegraph(const sgt::SignedGraph& g, const std::optional<sgt::Orientation>& o) {
    sgt::Report rep;
    sgt::Orientation use = orientation_or_default(g, o);
    rep.merge(sgt::line_adjacency_identity(g, use));
    rep.merge(sgt::check_line_eigenvalues(g, kVerifyTol));
    if (g.n() <= 6)
        rep.merge(sgt::validate_circle_signs(sgt::line_graph(g, use)));
    else
        rep.add_advisory("circle-signs-skipped", true, "source larger than the n <= 6 guard");
    return rep;
}

sgt::Report suite_kirchhoff(const sgt::SignedGraph& g) {
    sgt::Report rep;
    rep.merge(sgt::check_kirchhoff_bounds(g, kVerifyTol));
    bool all = true;
    std::string fail;
    for (const sgt::Edge& e : g.edges()) {
        sgt::Report one = sgt::check_kirchhoff_edge_interlacing(g, e.id, kVerifyTol);
        if (!one.ok()) {
            all = false;
            if (fail.empty()) fail = "edge " + std::to_string(e.id);
        }
    }
    rep.add("kirchhoff-edge-interlacing", all,
            all ? std::to_string(g.m()) + " edges checked" : fail);
    return rep;
}

int run_verify(const sgt::SignedGraph& g, const std::optional<sgt::Orientation>& o,
               const std::string& suite) {
    sgt::Report rep;
    if (suite == "rank" || suite == "all") rep.merge(suite_rank(g, o));
    if (suite == "matrixtree" || suite == "all") rep.merge(sgt::matrix_tree_check(g));
    if (suite == "walks" || suite == "all") rep.merge(suite_walks(g));
    if (suite == "theta" || suite == "all") rep.merge(sgt::verify_theta_parity(g));
    if (suite == "linegraph" || suite == "all") rep.merge(suite_linegraph(g, o));
    if (suite == "kirchhoff-bounds" || suite == "all") rep.merge(suite_kirchhoff(g));
    return print_report(rep);
}

int run_vsr(const sgt::SignedGraph& g) {
    auto par = sgt::check_vsr(g);
    if (!par) {
        std::cout << "not-vsr\n";
        return 0;
    }
    std::cout << "vsr t " << par->t << " k " << par->k << " p " << par->p << " rho0 "
              << par->rho0 << " case " << par->case_tag << " degenerate-p "
              << (par->degenerate_p ? 1 : 0) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed graph matrix toolkit"};
    app.require_subcommand(1);

    std::string path, fmt = "plain", kind, field = "q", suite = "all", which = "adj";
    std::string set_csv, fn_path, mult_csv;
    double tol = 1e-10;
    bool do_reduce = false;

    auto* c_balance = app.add_subcommand("balance", "balance certificate");
    c_balance->add_option("file", path)->required();

    auto* c_switch = app.add_subcommand("switch", "switch by a vertex set or function file");
    c_switch->add_option("file", path)->required();
    auto* opt_set = c_switch->add_option("--set", set_csv, "comma separated vertices to negate");
    auto* opt_fn = c_switch->add_option("--fn", fn_path, "file of +1/-1 per vertex");
    opt_set->excludes(opt_fn);

    auto* c_matrix = app.add_subcommand("matrix", "print a matrix");
    c_matrix->add_option("file", path)->required();
    c_matrix->add_option("--kind", kind, "adj|seidel|incidence|kirchhoff|ar")
        ->required()
        ->check(CLI::IsMember({"adj", "seidel", "incidence", "kirchhoff", "ar"}));
    c_matrix->add_option("--format", fmt)->check(CLI::IsMember({"plain", "csv"}));

    auto* c_spectrum = app.add_subcommand("spectrum", "eigenvalues, descending");
    c_spectrum->add_option("file", path)->required();
    c_spectrum->add_option("--matrix", which)->check(CLI::IsMember({"adj", "kirchhoff"}));
    c_spectrum->add_option("--tol", tol);

    auto* c_rank = app.add_subcommand("rank", "incidence matrix rank");
    c_rank->add_option("file", path)->required();
    c_rank->add_option("--field", field)->check(CLI::IsMember({"q", "gf2"}));

    auto* c_linegraph = app.add_subcommand("linegraph", "line graph of the source");
    c_linegraph->add_option("file", path)->required();
    c_linegraph->add_flag("--reduce", do_reduce, "cancel parallel pairs");

    auto* c_glg = app.add_subcommand("glg", "generalized line graph of the underlying graph");
    c_glg->add_option("file", path)->required();
    c_glg->add_option("--m", mult_csv, "comma separated digon multiplicities, one per vertex")
        ->required();

    auto* c_vsr = app.add_subcommand("vsr", "very strong regularity parameters");
    c_vsr->add_option("file", path)->required();

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("file", path)->required();
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"rank", "matrixtree", "walks", "theta", "linegraph", "kirchhoff-bounds", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto [g, o] = sgt::read_graph(slurp(path));
        if (app.got_subcommand(c_balance)) return run_balance(g);
        if (app.got_subcommand(c_switch)) {
            if (opt_set->count() == 0 && opt_fn->count() == 0)
                throw std::invalid_argument("switch: one of --set or --fn is required");
            sgt::SwitchingFunction theta =
                opt_fn->count() ? sgt::read_switching(slurp(fn_path), g.n())
                                : sgt::SwitchingFunction::from_set(g.n(), parse_int_list(set_csv));
            if (o) {
                sgt::Orientation so = sgt::switch_orientation(*o, theta);
                std::cout << sgt::write_graph(sgt::switch_fn(g, theta), so);
            } else {
                std::cout << sgt::write_graph(sgt::switch_fn(g, theta));
            }
            return 0;
        }
        if (app.got_subcommand(c_matrix)) return run_matrix(g, o, kind, fmt);
        if (app.got_subcommand(c_spectrum)) return run_spectrum(g, which, tol);
        if (app.got_subcommand(c_rank)) return run_rank(g, o, field);
        if (app.got_subcommand(c_linegraph)) {
            sgt::OrientedLineGraph lg = sgt::line_graph(g, orientation_or_default(g, o));
            if (do_reduce)
                std::cout << sgt::write_graph(sgt::reduce(lg));
            else
                std::cout << sgt::write_graph(lg.graph, lg.orientation);
            return 0;
        }
        if (app.got_subcommand(c_glg)) {
            std::vector<int> mult = parse_int_list(mult_csv);
            std::cout << sgt::write_graph(
                sgt::generalized_line_graph(sgt::underlying(g), mult));
            return 0;
        }
        if (app.got_subcommand(c_vsr)) return run_vsr(g);
        if (app.got_subcommand(c_verify)) return run_verify(g, o, suite);
        return 2;
    } catch (const sgt::ParseError& e) {
        std::cout << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cout << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << '\n';
        return 1;
    }
}
