#include "tmotif/motif.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tmotif {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Motif::Motif(std::vector<PatternEdge> edges, Timestamp delta) : edges_(std::move(edges)), delta_(delta) {
  if (delta_ <= 0) throw MotifError("delta must be positive");
  if (edges_.empty()) throw MotifError("motif has no edges");
  int max_vertex = -1;
  for (const auto& e : edges_) {
    if (e.src < 0 || e.dst < 0) throw MotifError("negative motif vertex index");
    if (e.src == e.dst) throw MotifError("self-loop in motif pattern");
    max_vertex = std::max({max_vertex, e.src, e.dst});
  }
  num_vertices_ = max_vertex + 1;

  std::vector<bool> used(num_vertices_, false);
  for (const auto& e : edges_) used[e.src] = used[e.dst] = true;
  for (int v = 0; v < num_vertices_; ++v)
    if (!used[v])
      throw MotifError("motif vertex index gap: vertex " + std::to_string(v) + " unused");

  std::vector<int> parent(num_vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  int components = num_vertices_;
  for (const auto& e : edges_) {
    int a = find_root(parent, e.src), b = find_root(parent, e.dst);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw MotifError("motif pattern is disconnected");
}

Motif parse_motif(std::istream& in, Timestamp delta) {
  std::vector<PatternEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    PatternEdge e{};
    std::string rest;
    if (!(ls >> e.src >> e.dst) || (ls >> rest))
      throw MotifError("motif line " + std::to_string(lineno) + ": expected \"x y\"");
    edges.push_back(e);
  }
  return Motif(std::move(edges), delta);
}

Motif load_motif_file(const std::string& path, Timestamp delta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open motif file: " + path);
  return parse_motif(in, delta);
}

}  // namespace tmotif
