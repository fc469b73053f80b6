// End-to-end checks of the command-line surface: file ingestion, subcommand
// behavior, exit-code contract (0 ok, 2 input error, 3 math failure), and
// byte-identical reruns. Takes the binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

int g_failures = 0;

#define REQUIRE_MSG(cond, msg)                                               \
    do {                                                                     \
        if (cond) {                                                          \
            std::cout << "[ok] " << msg << "\n";                             \
        } else {                                                             \
            std::cout << "[FAIL] " << msg << " (" << __FILE__ << ":"         \
                      << __LINE__ << ")\n";                                  \
            ++g_failures;                                                    \
        }                                                                    \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::filesystem::path& p, const json& j) {
    std::ofstream out(p);
    out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-binary>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const std::filesystem::path dir = "cli_fixtures";
    std::filesystem::create_directories(dir);

    // --- closure -----------------------------------------------------------
    write_file(dir / "minplus.json",
               json{{"semiring", "min-plus"},
                    {"kind", "matrix"},
                    {"payload",
                     {{"rows", 2},
                      {"cols", 2},
                      {"data", {{"inf", 1}, {2, "inf"}}}}}});
    RunResult c1 = run(bin + " closure --in " + (dir / "minplus.json").string());
    REQUIRE_MSG(c1.exit_code == 0, "closure exits 0 on the min-plus example");
    {
        json j = json::parse(c1.out);
        REQUIRE_MSG(j["kind"] == "matrix" && j["semiring"] == "min-plus",
                    "closure output is a matrix problem file");
        json want = {{0.0, 1.0}, {2.0, 0.0}};
        REQUIRE_MSG(j["payload"]["data"] == want,
                    "closure output matches the two-node distances");
    }
    RunResult c2 = run(bin + " closure --in " + (dir / "minplus.json").string());
    REQUIRE_MSG(c1.out == c2.out, "closure reruns byte-identically");

    // closure output re-enters the same schema, and closing twice is a no-op
    {
        std::ofstream again(dir / "closed.json");
        again << c1.out;
    }
    RunResult c3 = run(bin + " closure --in " + (dir / "closed.json").string());
    REQUIRE_MSG(c3.exit_code == 0 && c3.out == c1.out,
                "closure of a closure file is a fixed point");

    write_file(dir / "bool.json",
               json{{"semiring", "boolean"},
                    {"kind", "matrix"},
                    {"payload",
                     {{"rows", 2}, {"cols", 2}, {"data", {{0, 1}, {0, 0}}}}}});
    RunResult cb = run(bin + " closure --in " + (dir / "bool.json").string());
    {
        json want = json::array(
            {json::array({"1", "1"}), json::array({"0", "1"})});
        bool ok = cb.exit_code == 0 &&
                  json::parse(cb.out)["payload"]["data"] == want;
        REQUIRE_MSG(ok, "boolean closure is the reflexive-transitive closure");
    }

    write_file(dir / "negcycle.json",
               json{{"semiring", "min-plus"},
                    {"kind", "matrix"},
                    {"payload",
                     {{"rows", 2},
                      {"cols", 2},
                      {"data", {{"inf", 1}, {-3, "inf"}}}}}});
    RunResult cn = run(bin + " closure --in " + (dir / "negcycle.json").string());
    REQUIRE_MSG(cn.exit_code == 3, "negative cycle exits 3");
    REQUIRE_MSG(json::parse(cn.out)["error"]["code"] == "ClosureDiverges",
                "negative cycle reports ClosureDiverges");

    {
        std::ofstream bad(dir / "garbage.json");
        bad << "not json at all\n";
    }
    RunResult cg = run(bin + " closure --in " + (dir / "garbage.json").string());
    REQUIRE_MSG(cg.exit_code == 2, "unparsable input exits 2");
    RunResult cm = run(bin + " closure --in " + (dir / "missing.json").string());
    REQUIRE_MSG(cm.exit_code == 2, "missing input exits 2");

    // --- solve ---------------------------------------------------------------
    write_file(dir / "bellman_point.json",
               json{{"semiring", "max-plus"},
                    {"kind", "bellman-problem"},
                    {"payload",
                     {{"A",
                       {{"rows", 1}, {"cols", 1}, {"data", {{-2}}}}},
                      {"B", {{"rows", 1}, {"cols", 1}, {"data", {{0}}}}}}}});
    RunResult s1 = run(bin + " solve --in " +
                       (dir / "bellman_point.json").string());
    REQUIRE_MSG(s1.exit_code == 0, "point solve exits 0");
    {
        json want = {{0.0}};
        bool ok = json::parse(s1.out)["solution"]["data"] == want;
        REQUIRE_MSG(ok, "point solve returns x = 0");
    }

    RunResult s2 = run(bin + " solve --interval --in " +
                       (dir / "bellman_point.json").string());
    {
        json j = json::parse(s2.out);
        json want = {{{0.0, 0.0}}};
        bool ok = j["interval"] == true && j["solution"]["data"] == want;
        REQUIRE_MSG(ok, "degenerate interval solve equals the point solution");
    }

    write_file(
        dir / "bellman_iv.json",
        json{{"semiring", "max-plus"},
             {"kind", "bellman-problem"},
             {"payload",
              {{"A",
                {{"rows", 2},
                 {"cols", 2},
                 {"mode", "weak"},
                 {"data",
                  {{{"-inf", "-inf"}, {-3, -1}},
                   {{-4, -2}, {"-inf", "-inf"}}}}}},
               {"B",
                {{"rows", 2},
                 {"cols", 1},
                 {"mode", "weak"},
                 {"data", {{{0, 1}}, {{-1, 2}}}}}}}}});
    RunResult s3 = run(bin + " solve --iterate --check-spectral --samples 200"
                             " --seed 99 --in " +
                       (dir / "bellman_iv.json").string());
    REQUIRE_MSG(s3.exit_code == 0, "interval solve with oracle exits 0");
    {
        json j = json::parse(s3.out);
        bool spectral = j["spectral_ok"] == true;
        REQUIRE_MSG(spectral, "spectral criterion holds");
        bool stab = j["converged"] == true && j["stabilized_at"] <= 2;
        REQUIRE_MSG(stab, "iteration stabilizes within n steps");
        bool oracle_ok =
            j["sample_failures"] == 0 && j["bounds_attained"] == true;
        REQUIRE_MSG(oracle_ok,
                    "sampling oracle reports no escapes and sharp bounds");
    }

    // a cycle above the unity has no closure: solve reports the math failure
    write_file(dir / "bellman_diverge.json",
               json{{"semiring", "max-plus"},
                    {"kind", "bellman-problem"},
                    {"payload",
                     {{"A",
                       {{"rows", 1}, {"cols", 1}, {"data", {{1}}}}},
                      {"B", {{"rows", 1}, {"cols", 1}, {"data", {{0}}}}}}}});
    RunResult sd = run(bin + " solve --in " +
                       (dir / "bellman_diverge.json").string());
    REQUIRE_MSG(sd.exit_code == 3 &&
                    json::parse(sd.out)["error"]["code"] == "ClosureDiverges",
                "divergent system exits 3 with ClosureDiverges");

    // nonneg-real converges geometrically: 2n + 2 steps cannot reach the
    // stabilization tolerance, so --iterate reports non-convergence
    write_file(dir / "bellman_slow.json",
               json{{"semiring", "nonneg-real"},
                    {"kind", "bellman-problem"},
                    {"payload",
                     {{"A",
                       {{"rows", 1}, {"cols", 1}, {"data", {{0.9}}}}},
                      {"B", {{"rows", 1}, {"cols", 1}, {"data", {{1}}}}}}}});
    RunResult ss = run(bin + " solve --iterate --in " +
                       (dir / "bellman_slow.json").string());
    REQUIRE_MSG(ss.exit_code == 3, "non-stabilized iteration exits 3");
    {
        json j = json::parse(ss.out);
        bool ok = j["converged"] == false && !j.contains("stabilized_at") &&
                  j.contains("solution");
        REQUIRE_MSG(ok, "slow convergence still reports the solution");
    }

    write_file(dir / "bellman_bad.json",
               json{{"semiring", "max-plus"},
                    {"kind", "bellman-problem"},
                    {"payload",
                     {{"A",
                       {{"rows", 2},
                        {"cols", 2},
                        {"data", {{"-inf", 0}, {0, "-inf"}}}}},
                      {"B",
                       {{"rows", 1}, {"cols", 1}, {"data", {{0}}}}}}}});
    RunResult s4 = run(bin + " solve --in " +
                       (dir / "bellman_bad.json").string());
    REQUIRE_MSG(s4.exit_code == 2, "shape mismatch exits 2");

    // --- path ----------------------------------------------------------------
    write_file(dir / "graph_short.json",
               json{{"semiring", "min-plus"},
                    {"kind", "graph"},
                    {"payload",
                     {{"nodes", {"a", "b"}},
                      {"arcs",
                       {{{"from", "a"}, {"to", "b"}, {"w", 1}},
                        {{"from", "b"}, {"to", "a"}, {"w", 2}}}}}}});
    RunResult p1 = run(bin + " path --problem shortest --in " +
                       (dir / "graph_short.json").string());
    {
        json want = {{0.0, 1.0}, {2.0, 0.0}};
        json labels = {"a", "b"};
        json j = json::parse(p1.out);
        bool ok = p1.exit_code == 0 && j["matrix"]["data"] == want;
        REQUIRE_MSG(ok, "shortest-path pipeline emits the distance matrix");
        bool lab = j["nodes"] == labels;
        REQUIRE_MSG(lab, "path report carries the node labels");
    }

    write_file(dir / "graph_width.json",
               json{{"semiring", "max-min"},
                    {"kind", "graph"},
                    {"payload",
                     {{"nodes", {"1", "2", "3"}},
                      {"arcs",
                       {{{"from", "1"}, {"to", "2"}, {"w", 5}},
                        {{"from", "1"}, {"to", "3"}, {"w", 3}},
                        {{"from", "3"}, {"to", "2"}, {"w", 7}}}}}}});
    RunResult p2 = run(bin + " path --problem width --in " +
                       (dir / "graph_width.json").string());
    REQUIRE_MSG(p2.exit_code == 0 &&
                    json::parse(p2.out)["matrix"]["data"][0][1] == 5.0,
                "width pipeline finds the bottleneck");

    write_file(dir / "graph_profit.json",
               json{{"semiring", "max-plus"},
                    {"kind", "graph"},
                    {"payload",
                     {{"nodes", {"1", "2"}},
                      {"arcs", {{{"from", "1"}, {"to", "2"}, {"w", 2}}}},
                      {"terminal", {1, 4}}}}});
    RunResult p3 = run(bin + " path --problem profit --horizon 0 --in " +
                       (dir / "graph_profit.json").string());
    {
        json want = {{1.0}, {4.0}};
        bool ok = p3.exit_code == 0 &&
                  json::parse(p3.out)["matrix"]["data"] == want;
        REQUIRE_MSG(ok, "profit at horizon zero echoes the terminal payoffs");
    }

    // --- eigen ---------------------------------------------------------------
    write_file(dir / "eigen.json",
               json{{"semiring", "max-plus"},
                    {"kind", "matrix"},
                    {"payload",
                     {{"rows", 2}, {"cols", 2}, {"data", {{1, 3}, {2, 1}}}}}});
    RunResult e1 = run(bin + " eigen --in " + (dir / "eigen.json").string());
    {
        json j = json::parse(e1.out);
        bool ok = e1.exit_code == 0 && j["eigenvalue"] == 2.5 &&
                  j["spectral_radius"] == 2.5 && j["unique"] == true;
        REQUIRE_MSG(ok, "eigen reports the cycle-mean eigenvalue");
        json starts = {0, 2};
        bool blocks_ok = j["blocks"]["starts"] == starts;
        REQUIRE_MSG(blocks_ok, "eigen reports the single SCC block");
    }

    write_file(dir / "eigen_maxmin.json",
               json{{"semiring", "max-min"},
                    {"kind", "matrix"},
                    {"payload",
                     {{"rows", 2}, {"cols", 2}, {"data", {{1, 3}, {2, 1}}}}}});
    RunResult e2 = run(bin + " eigen --in " +
                       (dir / "eigen_maxmin.json").string());
    REQUIRE_MSG(e2.exit_code == 3 &&
                    json::parse(e2.out)["error"]["code"] ==
                        "CapabilityMissing",
                "eigen on a non-cancellative carrier exits 3");

    // --- check ---------------------------------------------------------------
    for (const char* key : {"max-plus", "min-plus", "max-min", "boolean",
                            "max-plus-hat", "nonneg-real"}) {
        RunResult ck = run(bin + " check --semiring " + key +
                           " --cases 400 --seed 7");
        bool ok = ck.exit_code == 0 && json::parse(ck.out)["failures"] == 0;
        REQUIRE_MSG(ok, std::string("axiom suite clean for ") + key);
    }
    RunResult cu = run(bin + " check --semiring not-a-semiring");
    REQUIRE_MSG(cu.exit_code == 2, "unknown semiring key exits 2");

    std::cout << (g_failures == 0 ? "all cli checks passed\n"
                                  : "cli checks FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
