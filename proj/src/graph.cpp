#include "idem/graph.hpp"

#include <string>

namespace idem {

WeightedDigraph::WeightedDigraph(const Semiring& sr,
                                 std::vector<std::string> labels)
    : sr_(&sr), labels_(std::move(labels)) {
    if (labels_.empty())
        raise(Errc::ParseError, "graph needs at least one node");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                raise(Errc::ParseError,
                      "duplicate node label: " + labels_[i]);
    arc_index_.assign(labels_.size() * labels_.size(), -1);
}

WeightedDigraph WeightedDigraph::from_matrix(const Matrix& a) {
    std::vector<std::string> labels;
    labels.reserve(a.rows());
    for (int i = 0; i < a.rows(); ++i) labels.push_back(std::to_string(i + 1));
    return from_matrix(a, std::move(labels));
}

WeightedDigraph WeightedDigraph::from_matrix(const Matrix& a,
                                             std::vector<std::string> labels) {
    if (!a.square())
        raise(Errc::DimensionMismatch, "graph matrix must be square");
    if (static_cast<int>(labels.size()) != a.rows())
        raise(Errc::ParseError, "label count does not match matrix order");
    WeightedDigraph g(a.semiring(), std::move(labels));
    const Value zero = a.semiring().zero();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != zero) g.add_arc(i, j, a.at(i, j));
    return g;
}

int WeightedDigraph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    raise(Errc::ParseError, "unknown node label: " + std::string(label));
}

bool WeightedDigraph::add_arc(int from, int to, const Value& weight) {
    const int n = node_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        raise(Errc::ParseError, "arc endpoint out of range");
    if (!sr_->valid(weight))
        raise(Errc::ParseError, "arc weight not admitted by semiring " +
                                    std::string(sr_->key()));
    if (weight == sr_->zero())
        raise(Errc::ParseError,
              "arc weights must be nonzero; omit the arc instead");
    int& slot = arc_index_[static_cast<std::size_t>(from) * n + to];
    if (slot >= 0) {
        Arc& arc = arcs_[static_cast<std::size_t>(slot)];
        arc.weight = sr_->add(arc.weight, weight);
        warnings_.push_back("parallel arc " + labels_[from] + " -> " +
                            labels_[to] + " merged by add");
        return true;
    }
    slot = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{from, to, weight});
    return false;
}

bool WeightedDigraph::add_arc(std::string_view from, std::string_view to,
                              const Value& weight) {
    return add_arc(index_of(from), index_of(to), weight);
}

Matrix WeightedDigraph::to_matrix() const {
    Matrix a(*sr_, node_count(), node_count());
    for (const Arc& arc : arcs_) a.set(arc.from, arc.to, arc.weight);
    return a;
}

Value WeightedDigraph::path_weight(std::span<const int> nodes) const {
    if (nodes.empty()) raise(Errc::NotAPath, "empty node sequence");
    const int n = node_count();
    for (int v : nodes)
        if (v < 0 || v >= n) raise(Errc::NotAPath, "node index out of range");
    Value w = sr_->one();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        int slot = arc_index_[static_cast<std::size_t>(nodes[i]) * n +
                              nodes[i + 1]];
        if (slot < 0)
            raise(Errc::NotAPath, "no arc " + labels_[nodes[i]] + " -> " +
                                      labels_[nodes[i + 1]]);
        w = sr_->mul(w, arcs_[static_cast<std::size_t>(slot)].weight);
    }
    return w;
}

Matrix algebraic_path(const WeightedDigraph& g) { return closure(g.to_matrix()); }

namespace {

void require_instance(const WeightedDigraph& g, Instance k, const char* who) {
    if (g.semiring().instance() != k)
        raise(Errc::CapabilityMissing,
              std::string(who) + " expects semiring " +
                  std::string(Semiring::of(k).key()) + ", graph is bound to " +
                  std::string(g.semiring().key()));
}

// First elementary cycle whose weight is not below unity, as node indices.
std::optional<std::vector<int>> find_heavy_cycle(const Matrix& a) {
    const Semiring& sr = a.semiring();
    const int n = a.rows();
    if (n > 16) return std::nullopt;  // enumeration blows up; caller degrades
    std::optional<std::vector<int>> found;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    auto dfs = [&](auto&& self, int s, int u) -> void {
        if (found) return;
        for (int t = s; t < n && !found; ++t) {
            if (a.at(u, t) == sr.zero()) continue;
            if (t == s) {
                Value w = sr.one();
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    w = sr.mul(w, a.at(path[i], path[i + 1]));
                w = sr.mul(w, a.at(path.back(), s));
                if (!is_true(sr.leq(w, sr.one()))) found = path;
            } else if (!on_path[t]) {
                path.push_back(t);
                on_path[t] = 1;
                self(self, s, t);
                on_path[t] = 0;
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < n && !found; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
    return found;
}

}  // namespace

Matrix shortest_paths(const WeightedDigraph& g) {
    require_instance(g, Instance::MinPlus, "shortest_paths");
    return closure(g.to_matrix());
}

Matrix max_width_paths(const WeightedDigraph& g) {
    require_instance(g, Instance::MaxMin, "max_width_paths");
    return closure(g.to_matrix());
}

Matrix best_profit(const WeightedDigraph& g, const Matrix& terminal,
                   std::optional<int> horizon) {
    require_instance(g, Instance::MaxPlus, "best_profit");
    if (terminal.rows() != g.node_count() || terminal.cols() != 1)
        raise(Errc::DimensionMismatch,
              "terminal must be a column of one entry per node");
    Matrix a = g.to_matrix();
    if (horizon) {
        if (*horizon < 0)
            raise(Errc::ParseError, "horizon must be nonnegative");
        return mul(pow(a, *horizon), terminal);
    }
    if (!is_semi_definite(a)) {
        std::string msg =
            "unbounded-horizon profit diverges: positive-profit cycle";
        if (auto cyc = find_heavy_cycle(a)) {
            msg += " through nodes {";
            for (std::size_t i = 0; i < cyc->size(); ++i)
                msg += (i ? ", " : "") + g.labels()[(*cyc)[i]];
            msg += "}";
        }
        raise(Errc::ClosureDiverges, msg);
    }
    return mul(closure(a), terminal);
}

}  // namespace idem
