#include "idem/io.hpp"

#include <fstream>
#include <sstream>

namespace idem::io {

namespace {

[[noreturn]] void bad(const std::string& what) {
    raise(Errc::ParseError, what);
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_number_integer()) bad(std::string(key) + " must be an integer");
    return f.get<int>();
}

}  // namespace

json element_to_json(const Semiring& sr, const Value& v) {
    (void)sr;
    switch (v.tag()) {
    case Tag::NegInf: return json("-inf");
    case Tag::PosInf: return json("inf");
    case Tag::BoolZero: return json("0");
    case Tag::BoolOne: return json("1");
    case Tag::Finite: return json(v.num());
    }
    bad("unencodable element");
}

Value element_from_json(const Semiring& sr, const json& j) {
    if (j.is_string()) return sr.parse(j.get<std::string>());
    if (j.is_boolean()) {
        if (sr.instance() != Instance::Boolean)
            bad("true/false elements are only valid in the boolean semiring");
        return j.get<bool>() ? Value::bool_one() : Value::bool_zero();
    }
    if (j.is_number()) {
        double x = j.get<double>();
        if (sr.instance() == Instance::Boolean) {
            if (x == 0.0) return Value::bool_zero();
            if (x == 1.0) return Value::bool_one();
            bad("boolean element must be 0 or 1");
        }
        Value v = Value::finite(x);
        if (!sr.valid(v))
            bad("element " + j.dump() + " not admitted by semiring " +
                std::string(sr.key()));
        return v;
    }
    bad("element must be a number or string, got " + j.dump());
}

json matrix_to_json(const Matrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j)
            row.push_back(element_to_json(a.semiring(), a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", rows}};
}

Matrix matrix_from_json(const Semiring& sr, const json& j) {
    int rows = int_field(j, "rows");
    int cols = int_field(j, "cols");
    if (rows <= 0 || cols <= 0) bad("matrix dimensions must be positive");
    const json& data = field(j, "data");
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        bad("data must be an array of " + std::to_string(rows) + " rows");
    Matrix a(sr, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            bad("row " + std::to_string(i) + " must have " +
                std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k)
            a.set(i, k, element_from_json(sr, row[k]));
    }
    return a;
}

json interval_matrix_to_json(const IntervalMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) {
            Interval iv = a.at(i, j);
            row.push_back(json::array(
                {element_to_json(a.semiring(), iv.lo()),
                 element_to_json(a.semiring(), iv.hi())}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", a.rows()},
                {"cols", a.cols()},
                {"mode", a.mode() == IvMode::Strong ? "strong" : "weak"},
                {"data", rows}};
}

IntervalMatrix interval_matrix_from_json(const Semiring& sr, const json& j) {
    int rows = int_field(j, "rows");
    int cols = int_field(j, "cols");
    if (rows <= 0 || cols <= 0) bad("matrix dimensions must be positive");
    const json& mode_j = field(j, "mode");
    IvMode mode;
    if (mode_j == "weak")
        mode = IvMode::Weak;
    else if (mode_j == "strong")
        mode = IvMode::Strong;
    else
        bad("mode must be \"weak\" or \"strong\"");
    const json& data = field(j, "data");
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        bad("data must be an array of " + std::to_string(rows) + " rows");
    Matrix lo(sr, rows, cols), hi(sr, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            bad("row " + std::to_string(i) + " must have " +
                std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k) {
            const json& cell = row[k];
            if (!cell.is_array() || cell.size() != 2)
                bad("interval entry must be a [lo, hi] pair");
            lo.set(i, k, element_from_json(sr, cell[0]));
            hi.set(i, k, element_from_json(sr, cell[1]));
        }
    }
    return IntervalMatrix(std::move(lo), std::move(hi), mode);
}

json graph_to_json(const WeightedDigraph& g) {
    json nodes = json::array();
    for (const std::string& l : g.labels()) nodes.push_back(l);
    json arcs = json::array();
    for (const Arc& a : g.arcs())
        arcs.push_back(json{{"from", g.labels()[a.from]},
                            {"to", g.labels()[a.to]},
                            {"w", element_to_json(g.semiring(), a.weight)}});
    return json{{"nodes", nodes}, {"arcs", arcs}};
}

WeightedDigraph graph_from_json(const Semiring& sr, const json& j) {
    const json& nodes = field(j, "nodes");
    if (!nodes.is_array() || nodes.empty())
        bad("nodes must be a non-empty array of labels");
    std::vector<std::string> labels;
    for (const json& n : nodes) {
        if (n.is_string())
            labels.push_back(n.get<std::string>());
        else if (n.is_number_integer())
            labels.push_back(std::to_string(n.get<long long>()));
        else
            bad("node label must be a string or integer");
    }
    WeightedDigraph g(sr, std::move(labels));
    const json& arcs = field(j, "arcs");
    if (!arcs.is_array()) bad("arcs must be an array");
    auto endpoint = [&](const json& e) -> int {
        if (e.is_string()) return g.index_of(e.get<std::string>());
        if (e.is_number_integer()) {
            long long one_based = e.get<long long>();
            if (one_based < 1 || one_based > g.node_count())
                bad("arc endpoint index out of range: " +
                    std::to_string(one_based));
            return static_cast<int>(one_based - 1);
        }
        bad("arc endpoint must be a label or 1-based index");
    };
    for (const json& a : arcs) {
        int from = endpoint(field(a, "from"));
        int to = endpoint(field(a, "to"));
        g.add_arc(from, to, element_from_json(sr, field(a, "w")));
    }
    return g;
}

ProblemFile problem_from_json(const json& j) {
    ProblemFile p;
    const json& key = field(j, "semiring");
    if (!key.is_string()) bad("semiring must be a string key");
    p.sr = &Semiring::of(key.get<std::string>());
    const json& kind = field(j, "kind");
    const json& payload = field(j, "payload");

    if (kind == "matrix") {
        p.kind = ProblemFile::Kind::Matrix;
        p.matrix = matrix_from_json(*p.sr, payload);
    } else if (kind == "interval-matrix") {
        p.kind = ProblemFile::Kind::IntervalMatrix;
        p.imatrix = interval_matrix_from_json(*p.sr, payload);
    } else if (kind == "graph") {
        p.kind = ProblemFile::Kind::Graph;
        p.graph = graph_from_json(*p.sr, payload);
        if (payload.contains("terminal")) {
            const json& t = payload["terminal"];
            if (!t.is_array() ||
                static_cast<int>(t.size()) != p.graph->node_count())
                bad("terminal must list one element per node");
            Matrix b(*p.sr, p.graph->node_count(), 1);
            for (int i = 0; i < p.graph->node_count(); ++i)
                b.set(i, 0, element_from_json(*p.sr, t[i]));
            p.terminal = std::move(b);
        }
    } else if (kind == "bellman-problem") {
        p.kind = ProblemFile::Kind::Bellman;
        const json& a = field(payload, "A");
        const json& b = field(payload, "B");
        const bool a_iv = a.contains("mode");
        const bool b_iv = b.contains("mode");
        if (a_iv || b_iv) {
            IntervalMatrix ia =
                a_iv ? interval_matrix_from_json(*p.sr, a)
                     : IntervalMatrix::degenerate(
                           matrix_from_json(*p.sr, a),
                           b_iv ? interval_matrix_from_json(*p.sr, b).mode()
                                : IvMode::Weak);
            IntervalMatrix ib =
                b_iv ? interval_matrix_from_json(*p.sr, b)
                     : IntervalMatrix::degenerate(matrix_from_json(*p.sr, b),
                                                  ia.mode());
            p.bellman = BellmanProblem::interval(std::move(ia), std::move(ib));
        } else {
            p.bellman = BellmanProblem::point(matrix_from_json(*p.sr, a),
                                              matrix_from_json(*p.sr, b));
        }
    } else {
        bad("unknown kind: " + kind.dump());
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        bad("invalid JSON in " + path + ": " + e.what());
    }
    return problem_from_json(j);
}

json make_matrix_file(const Matrix& a) {
    return json{{"semiring", std::string(a.semiring().key())},
                {"kind", "matrix"},
                {"payload", matrix_to_json(a)}};
}

json make_interval_matrix_file(const IntervalMatrix& a) {
    return json{{"semiring", std::string(a.semiring().key())},
                {"kind", "interval-matrix"},
                {"payload", interval_matrix_to_json(a)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace idem::io
