#include "laprep/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "laprep/csv.hpp"

namespace laprep {

namespace {

// One cyclic Jacobi pass over the strict upper triangle. Rotations with
// |a_pq| below the stage threshold are skipped. Returns the largest
// off-diagonal magnitude seen.
double jacobi_sweep(Eigen::MatrixXd& a, Eigen::MatrixXd& v, double skip_below) {
    const Eigen::Index n = a.rows();
    double largest = 0.0;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
            double apq = a(p, q);
            double mag = std::abs(apq);
            largest = std::max(largest, mag);
            if (mag <= skip_below) continue;

            double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            double c = 1.0 / std::sqrt(t * t + 1.0);
            double s = t * c;

            double app = a(p, p), aqq = a(q, q);
            a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
            a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            for (Eigen::Index k = 0; k < n; ++k) {
                if (k == p || k == q) continue;
                double akp = a(k, p), akq = a(k, q);
                a(k, p) = c * akp - s * akq;
                a(p, k) = a(k, p);
                a(k, q) = s * akp + c * akq;
                a(q, k) = a(k, q);
            }
            for (Eigen::Index k = 0; k < n; ++k) {
                double vkp = v(k, p), vkq = v(k, q);
                v(k, p) = c * vkp - s * vkq;
                v(k, q) = s * vkp + c * vkq;
            }
        }
    }
    return largest;
}

void fix_sign(Eigen::Ref<Eigen::VectorXd> col) {
    double scale = col.cwiseAbs().maxCoeff();
    if (scale == 0.0) return;
    for (Eigen::Index i = 0; i < col.size(); ++i) {
        if (std::abs(col[i]) > 1e-9 * scale) {
            if (col[i] < 0.0) col = -col;
            return;
        }
    }
}

}  // namespace

EigenPairs eig_sym(const Eigen::MatrixXd& M, int d) {
    const Eigen::Index n = M.rows();
    if (M.cols() != n) throw std::invalid_argument("eig_sym: matrix not square");
    if (d < 1 || d > n) throw std::invalid_argument("eig_sym: d out of range");
    double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("eig_sym: matrix not symmetric");

    Eigen::MatrixXd a = M;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double tol = 1e-12 * scale;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        // Annealed skip threshold speeds the early sweeps; the final
        // sweeps run un-thresholded until convergence.
        double skip = (sweep < 4) ? tol * std::pow(10.0, 4 - sweep) : 0.0;
        double largest = jacobi_sweep(a, v, skip);
        if (largest <= tol) break;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

    EigenPairs out;
    out.values.resize(d);
    out.vectors.resize(n, d);
    for (int i = 0; i < d; ++i) {
        Eigen::Index k = order[static_cast<std::size_t>(i)];
        out.values[i] = a(k, k);
        out.vectors.col(i) = v.col(k);
        out.vectors.col(i).normalize();
        fix_sign(out.vectors.col(i));
    }
    return out;
}

Eigen::MatrixXd ground_truth_representation(const StateGraph& g, int d) {
    // connectivity check: BFS over the edge set
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_states));
    for (auto [i, j] : g.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n_states), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int t : adj[static_cast<std::size_t>(s)]) {
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                ++reached;
                q.push(t);
            }
        }
    }
    if (reached != g.n_states)
        throw std::invalid_argument("ground_truth_representation: graph not connected");
    return eig_sym(laplacian(g), d).vectors;
}

DistinctnessReport check_distinct_eigvals(const EigenPairs& pairs, int d) {
    if (d > pairs.count()) throw std::invalid_argument("check_distinct_eigvals: d too large");
    DistinctnessReport r;
    r.min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < d; ++i)
        r.min_gap = std::min(r.min_gap, pairs.values[i + 1] - pairs.values[i]);
    if (d < 2) r.min_gap = 0.0;
    r.distinct = r.min_gap > 1e-6;
    return r;
}

std::string eigenpairs_to_csv(const EigenPairs& p) {
    std::ostringstream out;
    out << "index,lambda,e\n";
    for (int i = 0; i < p.count(); ++i) {
        out << i + 1 << ',' << format_double(p.values[i]);
        for (Eigen::Index r = 0; r < p.vectors.rows(); ++r)
            out << ',' << format_double(p.vectors(r, i));
        out << '\n';
    }
    return out.str();
}

}  // namespace laprep
