// idem: semiring matrix algebra, algebraic path problems, and interval
// Bellman solvers from the command line. JSON in, JSON out; exit 0 on
// success, 2 on input errors, 3 on mathematical failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "idem/bellman.hpp"
#include "idem/checks.hpp"
#include "idem/graph.hpp"
#include "idem/io.hpp"
#include "idem/log.hpp"

namespace {

using idem::io::json;

void emit(const json& j, const std::string& out_path) {
    std::string text = idem::io::dump(j);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        idem::raise(idem::Errc::ParseError,
                    "cannot open output file: " + out_path);
    out << text;
}

void warn_all(const idem::WeightedDigraph& g) {
    for (const std::string& w : g.warnings()) idem::log::info(w);
}

idem::io::ProblemFile load(const std::string& path,
                           idem::io::ProblemFile::Kind kind,
                           const char* expect) {
    idem::io::ProblemFile p = idem::io::load_problem(path);
    if (p.kind != kind)
        idem::raise(idem::Errc::ParseError,
                    std::string("expected a ") + expect + " problem file");
    return p;
}

int cmd_closure(const std::string& in, const std::string& out) {
    auto p = load(in, idem::io::ProblemFile::Kind::Matrix, "matrix");
    emit(idem::io::make_matrix_file(idem::closure(*p.matrix)), out);
    return 0;
}

int cmd_solve(const std::string& in, const std::string& out, bool interval,
              bool do_iterate, bool check_spectral, int samples,
              std::uint64_t seed) {
    auto p = load(in, idem::io::ProblemFile::Kind::Bellman, "bellman-problem");
    idem::BellmanProblem& prob = *p.bellman;

    json report;
    report["semiring"] = std::string(p.sr->key());
    bool failed_math = false;

    if (prob.is_interval() || interval) {
        idem::IntervalMatrix a = prob.interval_a();
        idem::IntervalMatrix b = prob.interval_b();
        idem::IntervalMatrix sol = idem::solve_interval(a, b);
        report["interval"] = true;
        report["solution"] = idem::io::interval_matrix_to_json(sol);
        if (check_spectral)
            report["spectral_ok"] = idem::spectral_criterion(a);
        if (do_iterate) {
            idem::IntervalMatrix x0 = idem::IntervalMatrix::zero(
                *p.sr, b.rows(), b.cols(), a.mode());
            idem::IterationTrace tr = idem::iterate(a, b, x0);
            report["converged"] = tr.converged;
            if (tr.stabilized_at) report["stabilized_at"] = *tr.stabilized_at;
            if (!tr.converged) failed_math = true;
        }
        if (samples > 0) {
            idem::SampleReport sr = idem::sample_united_check(a, b, samples,
                                                              seed);
            report["sample_failures"] = sr.containment_failures;
            report["bounds_attained"] =
                sr.lower_attained && sr.upper_attained;
            if (sr.containment_failures > 0) failed_math = true;
        }
    } else {
        idem::Matrix sol = idem::solve_point(*prob.point_a, *prob.point_b);
        report["interval"] = false;
        report["solution"] = idem::io::matrix_to_json(sol);
        if (check_spectral)
            report["spectral_ok"] = idem::spectral_criterion(
                idem::IntervalMatrix::degenerate(*prob.point_a));
        if (do_iterate) {
            idem::IntervalMatrix a =
                idem::IntervalMatrix::degenerate(*prob.point_a);
            idem::IntervalMatrix b =
                idem::IntervalMatrix::degenerate(*prob.point_b);
            idem::IterationTrace tr = idem::iterate(
                a, b,
                idem::IntervalMatrix::zero(*p.sr, b.rows(), b.cols(),
                                           a.mode()));
            report["converged"] = tr.converged;
            if (tr.stabilized_at) report["stabilized_at"] = *tr.stabilized_at;
            if (!tr.converged) failed_math = true;
        }
    }
    emit(report, out);
    if (failed_math) {
        std::cerr << "error: iteration or sampling reported failures "
                     "(see JSON report)\n";
        return 3;
    }
    return 0;
}

int cmd_path(const std::string& in, const std::string& out,
             const std::string& problem, std::optional<int> horizon) {
    auto p = load(in, idem::io::ProblemFile::Kind::Graph, "graph");
    warn_all(*p.graph);

    idem::Matrix result = [&] {
        if (problem == "shortest") return idem::shortest_paths(*p.graph);
        if (problem == "width") return idem::max_width_paths(*p.graph);
        if (problem == "generic") return idem::algebraic_path(*p.graph);
        if (problem == "profit") {
            if (!p.terminal)
                idem::raise(idem::Errc::ParseError,
                            "profit needs a \"terminal\" column in the "
                            "graph payload");
            return idem::best_profit(*p.graph, *p.terminal, horizon);
        }
        idem::raise(idem::Errc::ParseError,
                    "unknown --problem: " + problem);
    }();

    json report;
    report["semiring"] = std::string(p.sr->key());
    report["problem"] = problem;
    json nodes = json::array();
    for (const std::string& l : p.graph->labels()) nodes.push_back(l);
    report["nodes"] = nodes;
    report["matrix"] = idem::io::matrix_to_json(result);
    emit(report, out);
    return 0;
}

int cmd_eigen(const std::string& in, const std::string& out) {
    auto p = load(in, idem::io::ProblemFile::Kind::Matrix, "matrix");
    const idem::Matrix& a = *p.matrix;
    idem::EigenResult eig = idem::eigenvalue(a);
    idem::BlockStructure blocks = idem::scc_blocks(a);

    json report;
    report["semiring"] = std::string(p.sr->key());
    report["eigenvalue"] = idem::io::element_to_json(*p.sr, eig.eigenvalue);
    report["unique"] = eig.unique;
    if (eig.eigenvector)
        report["eigenvector"] = idem::io::matrix_to_json(*eig.eigenvector);
    report["spectral_radius"] =
        idem::io::element_to_json(*p.sr, idem::spectral_radius(a));
    report["blocks"] = json{{"order", blocks.order},
                            {"starts", blocks.block_starts}};
    emit(report, out);
    return 0;
}

int cmd_check(const std::string& key, int cases, std::uint64_t seed,
              const std::string& out) {
    const idem::Semiring& sr = idem::Semiring::of(key);
    idem::CheckReport rep = idem::run_axiom_suite(sr, cases, seed);

    json checks = json::array();
    for (const idem::CheckOutcome& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"failures", c.failures}});
    json report{{"semiring", rep.semiring},
                {"cases", rep.cases},
                {"failures", rep.failures},
                {"checks", checks}};
    emit(report, out);
    if (rep.failures > 0) {
        std::cerr << "error: axiom suite reported failures\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiring matrix algebra and interval Bellman solvers"};
    app.require_subcommand(1);

    std::string in, out;
    std::uint64_t seed = 12345;

    auto* closure_cmd =
        app.add_subcommand("closure", "Kleene closure of a matrix file");
    closure_cmd->add_option("--in", in, "input problem file")->required();
    closure_cmd->add_option("--out", out, "output file (default stdout)");

    bool interval = false, do_iterate = false, check_spectral = false;
    int samples = 0;
    auto* solve_cmd =
        app.add_subcommand("solve", "solve X = AX add B (point or interval)");
    solve_cmd->add_option("--in", in, "bellman-problem file")->required();
    solve_cmd->add_option("--out", out, "output file (default stdout)");
    solve_cmd->add_flag("--interval", interval,
                        "force interval semantics (degenerate promotion)");
    solve_cmd->add_flag("--iterate", do_iterate,
                        "also run the fixed-point iteration from X0 = O");
    solve_cmd->add_flag("--check-spectral", check_spectral,
                        "report whether the spectral criterion holds");
    solve_cmd->add_option("--samples", samples,
                          "run the containment sampling oracle");
    solve_cmd->add_option("--seed", seed, "sampling seed (default 12345)");

    std::string problem = "generic";
    int horizon_arg = -1;
    auto* path_cmd =
        app.add_subcommand("path", "optimization pipelines on a graph file");
    path_cmd->add_option("--in", in, "graph file")->required();
    path_cmd->add_option("--out", out, "output file (default stdout)");
    path_cmd->add_option("--problem", problem,
                         "shortest | width | profit | generic");
    path_cmd->add_option("--horizon", horizon_arg,
                         "profit horizon k >= 0; omit for unbounded");

    auto* eigen_cmd = app.add_subcommand(
        "eigen", "eigenvalue, spectral radius, and block structure");
    eigen_cmd->add_option("--in", in, "matrix file")->required();
    eigen_cmd->add_option("--out", out, "output file (default stdout)");

    std::string semiring_key;
    int cases = 1000;
    auto* check_cmd =
        app.add_subcommand("check", "randomized axiom suite for a semiring");
    check_cmd->add_option("--semiring", semiring_key, "semiring key")
        ->required();
    check_cmd->add_option("--cases", cases, "random cases (default 1000)");
    check_cmd->add_option("--seed", seed, "case seed (default 12345)");
    check_cmd->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(closure_cmd)) return cmd_closure(in, out);
        if (app.got_subcommand(solve_cmd))
            return cmd_solve(in, out, interval, do_iterate, check_spectral,
                             samples, seed);
        if (app.got_subcommand(path_cmd)) {
            std::optional<int> horizon;
            if (path_cmd->count("--horizon")) horizon = horizon_arg;
            return cmd_path(in, out, problem, horizon);
        }
        if (app.got_subcommand(eigen_cmd)) return cmd_eigen(in, out);
        if (app.got_subcommand(check_cmd))
            return cmd_check(semiring_key, cases, seed, out);
    } catch (const idem::AlgebraError& e) {
        json err{{"error",
                  {{"code", idem::errc_name(e.code())},
                   {"message", e.what()}}}};
        std::cout << idem::io::dump(err);
        std::cerr << "error: " << e.what() << "\n";
        return idem::is_input_error(e.code()) ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
