#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "idem/bellman.hpp"
#include "idem/graph.hpp"

namespace idem::io {

using json = nlohmann::json;

// Element codec: finite values are JSON numbers, infinities the strings
// "-inf"/"inf", Boolean constants the strings "0"/"1". Parsing also accepts
// numeric 0/1 for Boolean and numeric literals in strings.
json element_to_json(const Semiring& sr, const Value& v);
Value element_from_json(const Semiring& sr, const json& j);

// {"rows": r, "cols": c, "data": [[...], ...]}
json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Semiring& sr, const json& j);

// {"rows": r, "cols": c, "mode": "weak"|"strong", "data": [[[lo,hi],...],...]}
json interval_matrix_to_json(const IntervalMatrix& a);
IntervalMatrix interval_matrix_from_json(const Semiring& sr, const json& j);

// {"nodes": [...], "arcs": [{"from":.., "to":.., "w":..}, ...]}
// plus an optional "terminal" column used by the profit pipeline.
json graph_to_json(const WeightedDigraph& g);
WeightedDigraph graph_from_json(const Semiring& sr, const json& j);

/// Parsed problem file: {"semiring": key, "kind": ..., "payload": {...}}.
struct ProblemFile {
    enum class Kind { Matrix, IntervalMatrix, Graph, Bellman };

    const Semiring* sr = nullptr;
    Kind kind = Kind::Matrix;
    std::optional<Matrix> matrix;
    std::optional<IntervalMatrix> imatrix;
    std::optional<WeightedDigraph> graph;
    std::optional<BellmanProblem> bellman;
    std::optional<Matrix> terminal;  // graph payloads only
};

ProblemFile problem_from_json(const json& j);
ProblemFile load_problem(const std::string& path);

json make_matrix_file(const Matrix& a);
json make_interval_matrix_file(const IntervalMatrix& a);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace idem::io
