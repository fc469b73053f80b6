#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idem/matrix.hpp"

namespace idem {

struct Arc {
    int from = 0;
    int to = 0;
    Value weight;
};

/// Weighted digraph over a bound semiring: labelled nodes, at most one arc
/// per ordered pair (parallel arcs are add-merged at ingestion, with a
/// warning), loops allowed, arc weights nonzero.
class WeightedDigraph {
public:
    WeightedDigraph(const Semiring& sr, std::vector<std::string> labels);

    static WeightedDigraph from_matrix(const Matrix& a);
    static WeightedDigraph from_matrix(const Matrix& a,
                                       std::vector<std::string> labels);

    const Semiring& semiring() const { return *sr_; }
    int node_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(std::string_view label) const;  // throws ParseError

    /// Returns true when the arc was merged into an existing one.
    bool add_arc(int from, int to, const Value& weight);
    bool add_arc(std::string_view from, std::string_view to,
                 const Value& weight);

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    Matrix to_matrix() const;

    /// mul-product of arc weights along the node sequence; a single node is
    /// the empty path with weight one. Throws NotAPath on a missing arc or
    /// an empty sequence.
    Value path_weight(std::span<const int> nodes) const;

private:
    const Semiring* sr_;
    std::vector<std::string> labels_;
    std::vector<Arc> arcs_;
    std::vector<int> arc_index_;  // node_count^2 lookup, -1 = absent
    std::vector<std::string> warnings_;
};

/// Closure of the induced matrix: per node pair, the add-supremum of path
/// weights over all connecting paths.
Matrix algebraic_path(const WeightedDigraph& g);

/// All-pairs shortest distances over min-plus arc lengths; diagonal zero.
/// Throws ClosureDiverges on a negative cycle.
Matrix shortest_paths(const WeightedDigraph& g);

/// All-pairs bottleneck capacities over max-min arc widths.
Matrix max_width_paths(const WeightedDigraph& g);

/// Best achievable profit per start node over max-plus arc profits with
/// terminal payoff column `terminal`: A^k terminal for a fixed horizon k,
/// A* terminal when unbounded. The unbounded form requires the absence of a
/// positive-weight cycle and names the offending cycle otherwise.
Matrix best_profit(const WeightedDigraph& g, const Matrix& terminal,
                   std::optional<int> horizon);

}  // namespace idem
