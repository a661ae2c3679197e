#ifndef LAPREP_EIGENSOLVER_HPP
#define LAPREP_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <string>

#include "laprep/graph.hpp"

namespace laprep {

/// Eigenvalues ascending; eigenvectors are the matching unit columns.
/// Sign convention: the first entry of each vector whose magnitude exceeds
/// 1e-9 times the column max is positive.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // n x d, column i pairs with values[i]

    int count() const { return static_cast<int>(values.size()); }
};

/// Dense symmetric eigendecomposition by the cyclic Jacobi rotation method.
/// Returns the d smallest eigenpairs. Throws on asymmetric input (beyond
/// 1e-12 relative) or d > n. Deterministic.
EigenPairs eig_sym(const Eigen::MatrixXd& M, int d);

/// phi(s) = (e_1[s], ..., e_d[s]) for every state: n_states x d table.
/// Requires a connected graph.
Eigen::MatrixXd ground_truth_representation(const StateGraph& g, int d);

struct DistinctnessReport {
    bool distinct = false;
    double min_gap = 0.0;
};

/// True iff the d smallest eigenvalues are pairwise separated by > 1e-6.
DistinctnessReport check_distinct_eigvals(const EigenPairs& pairs, int d);

/// CSV rows: index,lambda,e[0..n)
std::string eigenpairs_to_csv(const EigenPairs& p);

}  // namespace laprep

#endif
