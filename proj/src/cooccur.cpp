#include "apne/cooccur.hpp"

#include "apne/rng.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace apne {

void WalkConfig::validate() const {
  if (walk_length < 2) throw DataError("walk_length must be >= 2");
  if (walks_per_node < 1) throw DataError("walks_per_node must be >= 1");
  if (window < 1) throw DataError("window must be >= 1");
  if (window >= walk_length) throw DataError("window must be < walk_length");
}

CooccurrenceMatrix CooccurrenceMatrix::from_triplets(
    int num_nodes, const std::vector<Eigen::Triplet<std::int64_t>>& trips) {
  CooccurrenceMatrix d;
  d.counts.resize(num_nodes, num_nodes);
  d.counts.setFromTriplets(trips.begin(), trips.end());  // duplicates sum
  d.counts.makeCompressed();
  d.row_sums.setZero(num_nodes);
  d.col_sums.setZero(num_nodes);
  d.total = 0;
  for (int i = 0; i < d.counts.outerSize(); ++i) {
    for (CountMat::InnerIterator it(d.counts, i); it; ++it) {
      d.row_sums[it.row()] += it.value();
      d.col_sums[it.col()] += it.value();
      d.total += it.value();
    }
  }
  return d;
}

void CooccurrenceMatrix::write_triplets(std::ostream& out) const {
  for (int i = 0; i < counts.outerSize(); ++i) {
    for (CountMat::InnerIterator it(counts, i); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    }
  }
}

CooccurrenceMatrix CooccurrenceMatrix::read_triplets(std::istream& in, int num_nodes) {
  std::vector<Eigen::Triplet<std::int64_t>> trips;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream iss(line);
    long long i = -1, j = -1, c = 0;
    if (!(iss >> i >> j >> c)) {
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (blank) continue;
      throw DataError("cooccurrence line " + std::to_string(lineno) + ": expected 'i j count'");
    }
    if (i < 0 || j < 0 || i >= num_nodes || j >= num_nodes || c < 0) {
      throw DataError("cooccurrence line " + std::to_string(lineno) + ": entry out of range");
    }
    trips.emplace_back(static_cast<int>(i), static_cast<int>(j), c);
  }
  return from_triplets(num_nodes, trips);
}

namespace {

// cumulative transition row for binary-search sampling
struct RowSampler {
  std::vector<std::int32_t> targets;
  std::vector<double> cumulative;
};

std::vector<RowSampler> build_row_samplers(const TransitionMatrix& p) {
  const int n = p.num_nodes();
  std::vector<RowSampler> rows(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (SpMatRow::InnerIterator it(p.rows, i); it; ++it) {
      acc += it.value();
      rows[i].targets.push_back(static_cast<std::int32_t>(it.col()));
      rows[i].cumulative.push_back(acc);
    }
  }
  return rows;
}

std::int32_t sample_next(const RowSampler& row, Rng& rng) {
  const double r = rng.uniform01() * row.cumulative.back();
  auto it = std::upper_bound(row.cumulative.begin(), row.cumulative.end(), r);
  if (it == row.cumulative.end()) --it;
  return row.targets[static_cast<std::size_t>(it - row.cumulative.begin())];
}

}  // namespace

WalkSet sample_walks(const TransitionMatrix& p, const WalkConfig& cfg) {
  cfg.validate();
  const int n = p.num_nodes();
  std::vector<int> starts;
  {
    std::vector<bool> isolated(n, false);
    for (int i : p.isolated_nodes) isolated[i] = true;
    for (int i = 0; i < n; ++i) {
      if (!isolated[i]) starts.push_back(i);
    }
  }
  if (starts.empty()) throw DataError("all nodes are isolated; nothing to walk");

  const auto rows = build_row_samplers(p);
  WalkSet ws;
  ws.num_nodes = n;
  ws.walks.reserve(static_cast<std::size_t>(starts.size()) * cfg.walks_per_node);
  for (int epoch = 0; epoch < cfg.walks_per_node; ++epoch) {
    for (int s : starts) {
      Rng rng(mix_seed(cfg.rng_seed, static_cast<std::uint64_t>(epoch),
                       static_cast<std::uint64_t>(s)));
      std::vector<std::int32_t> walk;
      walk.reserve(cfg.walk_length);
      std::int32_t cur = s;
      walk.push_back(cur);
      for (int step = 1; step < cfg.walk_length; ++step) {
        if (rows[cur].targets.empty()) break;  // unreachable for symmetric graphs
        cur = sample_next(rows[cur], rng);
        walk.push_back(cur);
      }
      ws.walks.push_back(std::move(walk));
    }
  }
  return ws;
}

CooccurrenceMatrix build_cooccurrence(const WalkSet& walks, int window) {
  if (walks.walks.empty()) throw DataError("empty walk set");
  if (window < 1) throw DataError("window must be >= 1");
  const int n = walks.num_nodes;

  // dense accumulator when it fits, hash map otherwise
  const bool dense = static_cast<std::int64_t>(n) * n <= (1LL << 24);
  std::vector<std::int64_t> grid;
  std::unordered_map<std::int64_t, std::int64_t> sparse;
  if (dense) {
    grid.assign(static_cast<std::size_t>(n) * n, 0);
  }
  auto bump = [&](std::int32_t a, std::int32_t b) {
    if (dense) {
      grid[static_cast<std::size_t>(a) * n + b] += 1;
    } else {
      sparse[static_cast<std::int64_t>(a) * n + b] += 1;
    }
  };

  for (const auto& walk : walks.walks) {
    const int len = static_cast<int>(walk.size());
    for (int i = 0; i < len; ++i) {
      const int jmax = std::min(len - 1, i + window);
      for (int j = i + 1; j <= jmax; ++j) {
        bump(walk[i], walk[j]);
        bump(walk[j], walk[i]);
      }
    }
  }

  std::vector<Eigen::Triplet<std::int64_t>> trips;
  if (dense) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::int64_t c = grid[static_cast<std::size_t>(i) * n + j];
        if (c > 0) trips.emplace_back(i, j, c);
      }
    }
  } else {
    trips.reserve(sparse.size());
    for (const auto& [key, c] : sparse) {
      trips.emplace_back(static_cast<int>(key / n), static_cast<int>(key % n), c);
    }
  }
  return CooccurrenceMatrix::from_triplets(n, trips);
}

CooccurrenceMatrix inject_label_context(const CooccurrenceMatrix& dmat, const LabelSet& labels,
                                        std::int64_t m, std::uint64_t rng_seed) {
  if (m < 0) throw DataError("label context count must be non-negative");

  // labeled nodes whose class has a same-label partner
  std::vector<int> eligible;
  for (int c = 0; c < labels.num_classes(); ++c) {
    if (labels.members[c].size() >= 2) {
      eligible.insert(eligible.end(), labels.members[c].begin(), labels.members[c].end());
    }
  }
  std::sort(eligible.begin(), eligible.end());
  if (m > 0 && eligible.empty()) {
    throw DataError("label context requires a class with at least two members");
  }

  std::vector<Eigen::Triplet<std::int64_t>> extra;
  extra.reserve(static_cast<std::size_t>(2 * m));
  Rng rng(mix_seed(rng_seed, 0x6c61626564ULL, 0));
  for (std::int64_t k = 0; k < m; ++k) {
    const int vi = eligible[rng.index(eligible.size())];
    const auto& mates = labels.members[labels.assignments.at(vi)];
    int vj = vi;
    while (vj == vi) vj = mates[rng.index(mates.size())];
    extra.emplace_back(vi, vj, 1);
    extra.emplace_back(vj, vi, 1);
  }

  CooccurrenceMatrix out = dmat;
  if (!extra.empty()) {
    CooccurrenceMatrix::CountMat add(dmat.num_nodes(), dmat.num_nodes());
    add.setFromTriplets(extra.begin(), extra.end());
    out.counts = dmat.counts + add;
    out.counts.makeCompressed();
    for (const auto& t : extra) {
      out.row_sums[t.row()] += t.value();
      out.col_sums[t.col()] += t.value();
      out.total += t.value();
    }
  }
  return out;
}

void write_walks(std::ostream& out, const WalkSet& walks,
                 const std::vector<std::string>& node_ids) {
  for (const auto& walk : walks.walks) {
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (i) out << ' ';
      out << node_ids[static_cast<std::size_t>(walk[i])];
    }
    out << '\n';
  }
}

}  // namespace apne
