#pragma once

#include <Eigen/Sparse>

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace apne {

// Malformed or inconsistent input data. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric failure (divergence, size guard). The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SpMat = Eigen::SparseMatrix<double>;                      // col-major
using SpMatRow = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Undirected weighted network. Node identifiers are opaque strings mapped to
// dense indices in first-seen order; adjacency is symmetric and holds only
// strictly positive weights. Immutable after construction.
struct Graph {
  std::vector<std::string> node_ids;
  std::unordered_map<std::string, int> index_of;
  SpMatRow adjacency;
  std::int64_t num_edges = 0;  // unordered pairs, self-loops counted once

  int num_nodes() const { return static_cast<int>(node_ids.size()); }

  double degree(int u) const {
    double s = 0.0;
    for (SpMatRow::InnerIterator it(adjacency, u); it; ++it) s += it.value();
    return s;
  }

  // adjacent nodes, excluding u itself
  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for (SpMatRow::InnerIterator it(adjacency, u); it; ++it) {
      if (static_cast<int>(it.col()) != u) out.push_back(static_cast<int>(it.col()));
    }
    return out;
  }

  bool has_edge(int u, int v) const { return adjacency.coeff(u, v) > 0.0; }
};

// Row-stochastic random-walk matrix. Rows of degree-zero nodes are all-zero
// and listed in isolated_nodes.
struct TransitionMatrix {
  SpMatRow rows;
  std::vector<int> isolated_nodes;

  int num_nodes() const { return static_cast<int>(rows.rows()); }
};

// Sparse feature-by-node matrix, one column per node in graph order.
struct ContentMatrix {
  SpMat matrix;  // num_features x |V|
  int num_features = 0;

  int num_nodes() const { return static_cast<int>(matrix.cols()); }
};

// Partial node -> class assignment. Classes are indexed in first-seen order.
struct LabelSet {
  std::unordered_map<int, int> assignments;   // node index -> class index
  std::vector<std::string> class_names;
  std::vector<std::vector<int>> members;      // class index -> node indices

  int num_classes() const { return static_cast<int>(class_names.size()); }
  bool empty() const { return assignments.empty(); }
};

// Edge list: UTF-8 text, whitespace separated, '#' comments. Lines are
// "u v" (weight 1) or, with weighted=true, "u v w" with w > 0. Duplicate
// edges merge by weight summation; the adjacency is symmetrized.
Graph load_edge_list(std::istream& in, bool weighted);

// P[i][j] = w_ij / sum_k w_ik; zero rows exactly for degree-zero nodes.
TransitionMatrix transition_matrix(const Graph& g);

// Sparse triplet format "node feature_index value". num_features = 0 infers
// the dimensionality from the largest index seen.
ContentMatrix load_features(std::istream& in, const Graph& g, int num_features = 0);

// Dense CSV: header row of feature names, data rows "node,v1,...,vNf".
ContentMatrix load_features_csv(std::istream& in, const Graph& g);

// Two-column text "node class"; a node may appear at most once.
LabelSet load_labels(std::istream& in, const Graph& g);

}  // namespace apne
