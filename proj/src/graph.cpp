#include "laprep/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laprep {

std::vector<int> StateGraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_states), 0);
    for (auto [i, j] : edges) {
        deg[static_cast<std::size_t>(i)]++;
        deg[static_cast<std::size_t>(j)]++;
    }
    return deg;
}

StateGraph build_graph(const std::vector<std::pair<int, int>>& transitions) {
    if (transitions.empty()) throw std::invalid_argument("empty graph");
    std::set<std::pair<int, int>> uniq;
    int max_state = 0;
    for (auto [a, b] : transitions) {
        if (a < 0 || b < 0) throw std::invalid_argument("negative state index");
        max_state = std::max({max_state, a, b});
        if (a == b) continue;  // wall bumps contribute nothing to (u[s]-u[s'])^2
        uniq.insert({std::min(a, b), std::max(a, b)});
    }
    if (uniq.empty()) throw std::invalid_argument("empty graph");
    StateGraph g;
    g.n_states = max_state + 1;
    g.edges.assign(uniq.begin(), uniq.end());
    return g;
}

Eigen::MatrixXd laplacian(const StateGraph& g) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n_states, g.n_states);
    for (auto [i, j] : g.edges) {
        L(i, j) -= 1.0;
        L(j, i) -= 1.0;
        L(i, i) += 1.0;
        L(j, j) += 1.0;
    }
    return L;
}

double quadratic_form(const Eigen::MatrixXd& L, const Eigen::VectorXd& u) {
    if (L.rows() != u.size() || L.cols() != u.size())
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    return u.dot(L * u);
}

double edge_quadratic_form(const StateGraph& g, const Eigen::VectorXd& u) {
    if (u.size() != g.n_states)
        throw std::invalid_argument("edge_quadratic_form: dimension mismatch");
    double acc = 0.0;
    for (auto [i, j] : g.edges) {
        double d = u[i] - u[j];
        acc += d * d;
    }
    return acc;
}

std::string graph_to_edge_list(const StateGraph& g) {
    std::ostringstream out;
    out << "n_states=" << g.n_states << '\n';
    for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
    return out.str();
}

StateGraph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header.rfind("n_states=", 0) != 0)
        throw std::invalid_argument("edge list: missing n_states header");
    StateGraph g;
    g.n_states = std::stoi(header.substr(9));
    int a, b;
    while (in >> a >> b) g.edges.push_back({a, b});
    return g;
}

StateGraph path_graph(int n) {
    std::vector<std::pair<int, int>> t;
    for (int i = 0; i + 1 < n; ++i) t.push_back({i, i + 1});
    return build_graph(t);
}

StateGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> t;
    for (int i = 0; i < n; ++i) t.push_back({i, (i + 1) % n});
    return build_graph(t);
}

}  // namespace laprep
