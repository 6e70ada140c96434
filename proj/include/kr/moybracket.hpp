#pragma once

#include <array>
#include <string>
#include <vector>

#include "kr/diagram.hpp"
#include "kr/laurent.hpp"

namespace kr {

LaurentPoly quantum_integer(int n);
/// [n][n-1]/[2], by exact division.
LaurentPoly double_loop_value(int n);

/// Closed planar trivalent graph. A merge vertex takes two single edges in and
/// sends one double edge out; a split vertex does the reverse.
struct MoyGraph {
  struct Vertex {
    bool merge = true;
    std::array<int, 2> singles{-1, -1};
    int dbl = -1;
    bool alive = true;
  };
  struct Edge {
    bool is_double = false;
    int src = -1;
    int dst = -1;
    bool alive = true;
  };

  int n = 2;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int single_loops = 0;
  int double_loops = 0;
  LaurentPoly coefficient = LaurentPoly(1);

  std::size_t live_vertices() const;
  std::string to_string() const;
};

enum class MoyRule { Digon, Bigon, Square };

struct MoyMatch {
  MoyRule rule = MoyRule::Digon;
  std::vector<int> vertices;  // digon: split, merge; bigon: merge, split, shared edge; square: A, B, C, D
};

/// Planar graphs (with coefficients) for a closed diagram; each crossing is
/// expanded into its two resolutions. Throws ValidationError when not closed.
std::vector<MoyGraph> moy_graphs(const Diagram& d);

std::vector<MoyMatch> applicable_rules(const MoyGraph& g);
std::vector<MoyGraph> apply_rule(const MoyGraph& g, const MoyMatch& m);

/// Deterministic evaluation: always the first applicable rule. Throws StuckGraph.
LaurentPoly bracket(const MoyGraph& g);
LaurentPoly bracket(const Diagram& d);

/// Every value reachable by choosing rules in any order; a confluent graph
/// yields exactly one value.
std::vector<LaurentPoly> bracket_all_paths(const MoyGraph& g);

}  // namespace kr
