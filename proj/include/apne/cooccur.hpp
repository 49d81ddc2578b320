#pragma once

#include "apne/graph.hpp"

#include <cstdint>
#include <ostream>
#include <vector>

namespace apne {

struct WalkConfig {
  int walk_length = 40;
  int walks_per_node = 80;
  int window = 5;
  std::uint64_t rng_seed = 1;

  void validate() const;
};

struct WalkSet {
  std::vector<std::vector<std::int32_t>> walks;
  int num_nodes = 0;
};

// Sparse symmetric integer co-occurrence counts with exact aggregates.
struct CooccurrenceMatrix {
  using CountMat = Eigen::SparseMatrix<std::int64_t, Eigen::RowMajor>;

  CountMat counts;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> row_sums;  // #(i)
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> col_sums;  // #(c)
  std::int64_t total = 0;                                   // |D|

  int num_nodes() const { return static_cast<int>(counts.rows()); }
  std::int64_t count(int i, int j) const { return counts.coeff(i, j); }

  static CooccurrenceMatrix from_triplets(
      int num_nodes, const std::vector<Eigen::Triplet<std::int64_t>>& trips);

  // triplet text "i j count", row-major
  void write_triplets(std::ostream& out) const;
  static CooccurrenceMatrix read_triplets(std::istream& in, int num_nodes);
};

// walks_per_node walks from every non-isolated node, start nodes cycled in
// index order per epoch. Each walk draws from an independent RNG stream
// keyed by (seed, epoch, start node), so the result does not depend on
// scheduling. Walks terminate early on a zero transition row.
WalkSet sample_walks(const TransitionMatrix& p, const WalkConfig& cfg);

// Exhaustive enumeration: for every walk and every position pair at offset
// 1..window, both counts[v_i][v_j] and counts[v_j][v_i] gain 1.
CooccurrenceMatrix build_cooccurrence(const WalkSet& walks, int window);

// m rounds of label context: pick a labeled node uniformly (classes of size
// one excluded), pick a distinct same-label node uniformly, add a symmetric
// co-occurrence. Returns a new matrix; the input is untouched.
CooccurrenceMatrix inject_label_context(const CooccurrenceMatrix& dmat, const LabelSet& labels,
                                        std::int64_t m, std::uint64_t rng_seed);

// one walk per line, space-separated node identifiers
void write_walks(std::ostream& out, const WalkSet& walks,
                 const std::vector<std::string>& node_ids);

}  // namespace apne
