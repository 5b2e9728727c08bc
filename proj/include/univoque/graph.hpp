#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "univoque/base.hpp"

namespace univoque {

enum class Variant { FULL, TILDE, TILDE1 };
const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Vertex kinds; a vertex may carry several.
enum VertexKind : unsigned {
  A_RIGHT = 1,     // (a_i⁻, a_i)
  B_LEFT = 2,      // (b_i, b_i⁺)
  AB = 4,          // (a_i, b_j)
  THETA_LEFT = 8,  // (θ_i⁻, θ_i), i ≥ 1
  ETA_RIGHT = 16,  // (η_j, η_j⁺)
};

struct Vertex {
  int left = 0, right = 0;  // indices into the point order
  std::string left_name, right_name;
  AlgebraicReal lo, hi;
  unsigned kinds = 0;
  Digit forced = 0;  // the digit every expansion of a point of the interval starts with
  std::string name() const { return "(" + left_name + "," + right_name + ")"; }
  bool is(VertexKind k) const { return (kinds & k) != 0; }
};

struct Edge {
  int from;
  Digit label;
  int to;
  auto operator<=>(const Edge&) const = default;
};

struct UnivoqueGraph {
  Variant variant = Variant::FULL;
  Digit M = 1;
  std::vector<Vertex> vertices;  // in increasing interval order
  std::vector<Edge> edges;       // sorted

  std::size_t size() const { return vertices.size(); }
  std::vector<std::vector<Edge>> out_edges() const;
  std::vector<std::vector<Edge>> in_edges() const;
  // vertex index by "(l,r)" name, -1 if absent
  int find(const std::string& name) const;
};

UnivoqueGraph build_graph(const BaseContext& ctx, Variant variant);
UnivoqueGraph build_graph(const BaseContext& ctx, const PointOrder& order, Variant variant);
// Keeps the listed vertices (in their original order) and the edges among them.
UnivoqueGraph induced_subgraph(const UnivoqueGraph& g, const std::vector<int>& keep);

struct SccResult {
  std::vector<int> comp;                 // vertex -> component
  std::vector<std::vector<int>> members;  // components ordered by smallest vertex
  std::set<std::pair<int, int>> dag;     // condensation edges
  bool strongly_connected() const { return members.size() == 1; }
  // component contains a cycle
  bool nontrivial(const UnivoqueGraph& g, int c) const;
};

SccResult scc(const UnivoqueGraph& g);

// Vertices reachable from the sources.
std::vector<bool> reachable(const UnivoqueGraph& g, const std::vector<int>& sources);

struct ConnectivityReport {
  bool direct = false;       // G̃ strongly connected
  bool p121 = false;         // every AB and THETA_LEFT vertex reachable from G̃₁
  bool p125 = false;         // b₂ < min{a_i : 1 < i < N}
  bool tilde1_strong = false;
  std::vector<std::string> unreached;  // AB / THETA_LEFT vertices not reached from G̃₁
  std::size_t components = 0;
};

ConnectivityReport connectivity_report(const BaseContext& ctx);

// Bijection g1 -> g2 preserving labeled edges.
std::optional<std::vector<int>> check_isomorphic(const UnivoqueGraph& g1, const UnivoqueGraph& g2);

struct TowerDecomposition {
  std::vector<BaseContext> chain;            // q_0 … q_m
  std::vector<UnivoqueGraph> graphs;         // G(q_1) … G(q_m)
  std::vector<std::vector<int>> blocks;      // V_1 … V_m as vertex ids of G(q_m)
  std::vector<std::vector<int>> cycles;      // C_2 … C_m in cycle order, ids of G(q_m)
  std::vector<Word> cycle_words;             // label words of C_2 … C_m
  std::size_t n = 0;                         // N(q_0)
};

// Builds the tower along successors and verifies its structure; throws ConsistencyError on failure.
TowerDecomposition tower_decompose(const BaseContext& ctx0, int m);

// Number of distinct label words of length L along paths.
std::uint64_t count_label_paths(const UnivoqueGraph& g, int L);
std::set<Word> label_words(const UnivoqueGraph& g, int L);

std::string to_dot(const UnivoqueGraph& g);
std::string to_json(const UnivoqueGraph& g, int places = 12);

}  // namespace univoque
