#ifndef LAPREP_GRAPH_HPP
#define LAPREP_GRAPH_HPP

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace laprep {

/// Undirected, unit-weight state-transition graph. Immutable after
/// construction; safe to share across threads read-only.
struct StateGraph {
    int n_states = 0;
    /// Unique undirected edges, stored as (i, j) with i < j, ascending.
    std::vector<std::pair<int, int>> edges;
    /// Optional opaque labels, one per state (may be empty).
    std::vector<std::string> state_labels;

    std::vector<int> degrees() const;
};

/// Deduplicates and symmetrizes raw transitions into a StateGraph.
/// Self-transitions are dropped. Throws std::invalid_argument("empty graph")
/// when no proper edge remains.
StateGraph build_graph(const std::vector<std::pair<int, int>>& transitions);

/// Dense L = D - A.
Eigen::MatrixXd laplacian(const StateGraph& g);

/// u^T L u. Throws on dimension mismatch.
double quadratic_form(const Eigen::MatrixXd& L, const Eigen::VectorXd& u);

/// Same quantity computed as the sum over edges of (u[i]-u[j])^2,
/// independent of the matrix representation.
double edge_quadratic_form(const StateGraph& g, const Eigen::VectorXd& u);

/// Edge-list text format: header "n_states=<n>", then one "i j" per line.
std::string graph_to_edge_list(const StateGraph& g);
StateGraph graph_from_edge_list(const std::string& text);

/// Path graph 0-1-...-(n-1); the closed-form spectrum makes it a
/// verification workhorse.
StateGraph path_graph(int n);
StateGraph cycle_graph(int n);

}  // namespace laprep

#endif
