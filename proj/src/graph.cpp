#include "apne/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace apne {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream iss(line);
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

bool skip_line(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

double parse_weight(const std::string& tok, int lineno) {
  std::size_t pos = 0;
  double w = 0.0;
  try {
    w = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(lineno) + ": bad weight '" + tok + "'");
  }
  if (pos != tok.size()) {
    throw DataError("line " + std::to_string(lineno) + ": bad weight '" + tok + "'");
  }
  return w;
}

}  // namespace

Graph load_edge_list(std::istream& in, bool weighted) {
  Graph g;
  auto intern = [&g](const std::string& id) {
    auto it = g.index_of.find(id);
    if (it != g.index_of.end()) return it->second;
    int idx = static_cast<int>(g.node_ids.size());
    g.node_ids.push_back(id);
    g.index_of.emplace(id, idx);
    return idx;
  };

  // unordered pair -> merged weight
  std::map<std::pair<int, int>, double> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto toks = split_ws(line);
    const std::size_t want = weighted ? 3 : 2;
    if (toks.size() != want) {
      throw DataError("line " + std::to_string(lineno) + ": expected " +
                      std::to_string(want) + " fields, got " + std::to_string(toks.size()));
    }
    double w = 1.0;
    if (weighted) {
      w = parse_weight(toks[2], lineno);
      if (w <= 0.0) {
        throw DataError("line " + std::to_string(lineno) + ": non-positive weight");
      }
    }
    int u = intern(toks[0]);
    int v = intern(toks[1]);
    if (u > v) std::swap(u, v);
    edges[{u, v}] += w;
  }
  if (edges.empty()) throw DataError("empty edge list");

  const int n = g.num_nodes();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * edges.size());
  for (const auto& [uv, w] : edges) {
    trips.emplace_back(uv.first, uv.second, w);
    if (uv.first != uv.second) trips.emplace_back(uv.second, uv.first, w);
  }
  g.adjacency.resize(n, n);
  g.adjacency.setFromTriplets(trips.begin(), trips.end());
  g.adjacency.makeCompressed();
  g.num_edges = static_cast<std::int64_t>(edges.size());
  return g;
}

TransitionMatrix transition_matrix(const Graph& g) {
  const int n = g.num_nodes();
  TransitionMatrix p;
  p.rows = g.adjacency;
  for (int i = 0; i < n; ++i) {
    double d = 0.0;
    for (SpMatRow::InnerIterator it(p.rows, i); it; ++it) d += it.value();
    if (d <= 0.0) {
      p.isolated_nodes.push_back(i);
      continue;
    }
    for (SpMatRow::InnerIterator it(p.rows, i); it; ++it) it.valueRef() /= d;
  }
  return p;
}

ContentMatrix load_features(std::istream& in, const Graph& g, int num_features) {
  std::vector<Eigen::Triplet<double>> trips;
  int max_feature = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 3) {
      throw DataError("features line " + std::to_string(lineno) +
                      ": expected 'node feature_index value'");
    }
    auto it = g.index_of.find(toks[0]);
    if (it == g.index_of.end()) {
      throw DataError("features line " + std::to_string(lineno) + ": unknown node '" +
                      toks[0] + "'");
    }
    int feat = -1;
    try {
      feat = std::stoi(toks[1]);
    } catch (const std::exception&) {
      feat = -1;
    }
    if (feat < 0) {
      throw DataError("features line " + std::to_string(lineno) + ": bad feature index '" +
                      toks[1] + "'");
    }
    double val = parse_weight(toks[2], lineno);
    max_feature = std::max(max_feature, feat);
    trips.emplace_back(feat, it->second, val);
  }
  if (trips.empty()) throw DataError("empty feature set");

  int nf = num_features > 0 ? num_features : max_feature + 1;
  if (max_feature >= nf) {
    throw DataError("feature index " + std::to_string(max_feature) +
                    " exceeds declared dimensionality " + std::to_string(nf));
  }
  ContentMatrix f;
  f.num_features = nf;
  f.matrix.resize(nf, g.num_nodes());
  f.matrix.setFromTriplets(trips.begin(), trips.end());  // duplicates sum
  f.matrix.makeCompressed();
  return f;
}

ContentMatrix load_features_csv(std::istream& in, const Graph& g) {
  auto split_csv = [](const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  };

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty feature set");
  const auto header = split_csv(line);
  if (header.size() < 2) throw DataError("features csv: header must name at least one feature");
  const int nf = static_cast<int>(header.size()) - 1;

  std::vector<Eigen::Triplet<double>> trips;
  int lineno = 1;
  bool any = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto toks = split_csv(line);
    if (static_cast<int>(toks.size()) != nf + 1) {
      throw DataError("features csv line " + std::to_string(lineno) +
                      ": inconsistent feature dimensionality");
    }
    auto it = g.index_of.find(toks[0]);
    if (it == g.index_of.end()) {
      throw DataError("features csv line " + std::to_string(lineno) + ": unknown node '" +
                      toks[0] + "'");
    }
    any = true;
    for (int k = 0; k < nf; ++k) {
      double v = parse_weight(toks[k + 1], lineno);
      if (v != 0.0) trips.emplace_back(k, it->second, v);
    }
  }
  if (!any) throw DataError("empty feature set");

  ContentMatrix f;
  f.num_features = nf;
  f.matrix.resize(nf, g.num_nodes());
  f.matrix.setFromTriplets(trips.begin(), trips.end());
  f.matrix.makeCompressed();
  return f;
}

LabelSet load_labels(std::istream& in, const Graph& g) {
  LabelSet labels;
  std::unordered_map<std::string, int> class_index;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip_line(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() != 2) {
      throw DataError("labels line " + std::to_string(lineno) + ": expected 'node class'");
    }
    auto it = g.index_of.find(toks[0]);
    if (it == g.index_of.end()) {
      throw DataError("labels line " + std::to_string(lineno) + ": unknown node '" + toks[0] +
                      "'");
    }
    if (labels.assignments.count(it->second)) {
      throw DataError("labels line " + std::to_string(lineno) + ": duplicate label for node '" +
                      toks[0] + "'");
    }
    auto [cit, inserted] = class_index.emplace(toks[1], labels.num_classes());
    if (inserted) {
      labels.class_names.push_back(toks[1]);
      labels.members.emplace_back();
    }
    labels.assignments.emplace(it->second, cit->second);
    labels.members[cit->second].push_back(it->second);
  }
  return labels;
}

}  // namespace apne
