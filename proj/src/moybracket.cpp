#include "kr/moybracket.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "kr/errors.hpp"

namespace kr {

LaurentPoly quantum_integer(int n) { return LaurentPoly::quantum_integer(n); }

LaurentPoly double_loop_value(int n) {
  return exact_div(quantum_integer(n) * quantum_integer(n - 1), quantum_integer(2));
}

std::size_t MoyGraph::live_vertices() const {
  std::size_t k = 0;
  for (const auto& v : vertices) k += v.alive ? 1 : 0;
  return k;
}

std::string MoyGraph::to_string() const {
  std::ostringstream out;
  out << "coefficient " << coefficient.to_string() << ", loops " << single_loops << " single / " << double_loops
      << " double";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex& v = vertices[i];
    if (!v.alive) continue;
    out << "; v" << i << (v.merge ? " merge(e" : " split(e") << v.singles[0] << ",e" << v.singles[1] << " | e"
        << v.dbl << ")";
  }
  return out.str();
}

namespace {

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

struct VertexSpec {
  bool merge;
  std::array<int, 2> single_ports;
  int double_port;
};

// Builds a graph from arcs (port pairs joined by union), vertices, and glue unions.
MoyGraph assemble(int n, UnionFind& uf, int port_count, const std::vector<bool>& port_double,
                  const std::vector<VertexSpec>& specs) {
  MoyGraph g;
  g.n = n;
  std::map<int, int> edge_of_class;
  std::map<int, bool> class_has_vertex;
  auto edge_for = [&](int port) {
    const int cls = uf.find(port);
    auto it = edge_of_class.find(cls);
    if (it != edge_of_class.end()) return it->second;
    const int id = static_cast<int>(g.edges.size());
    g.edges.push_back({port_double[port], -1, -1, true});
    edge_of_class.emplace(cls, id);
    return id;
  };
  for (const auto& proto : specs) {
    const int vid = static_cast<int>(g.vertices.size());
    MoyGraph::Vertex v;
    v.merge = proto.merge;
    for (int k = 0; k < 2; ++k) {
      const int e = edge_for(proto.single_ports[k]);
      v.singles[k] = e;
      int& end = proto.merge ? g.edges[e].dst : g.edges[e].src;
      if (end != -1) throw Error(ErrorKind::ValidationError, "edge has two ends at vertices on one side");
      end = vid;
      class_has_vertex[uf.find(proto.single_ports[k])] = true;
    }
    const int d = edge_for(proto.double_port);
    v.dbl = d;
    int& end = proto.merge ? g.edges[d].src : g.edges[d].dst;
    if (end != -1) throw Error(ErrorKind::ValidationError, "double edge has two ends at vertices on one side");
    end = vid;
    class_has_vertex[uf.find(proto.double_port)] = true;
    g.vertices.push_back(v);
  }
  std::set<int> loops;
  for (int p = 0; p < port_count; ++p) {
    const int cls = uf.find(p);
    if (class_has_vertex.count(cls) != 0 || !loops.insert(cls).second) continue;
    if (port_double[p]) {
      ++g.double_loops;
    } else {
      ++g.single_loops;
    }
  }
  for (const auto& e : g.edges) {
    if (e.src == -1 || e.dst == -1) throw Error(ErrorKind::ValidationError, "graph has a dangling edge");
  }
  return g;
}

// Resolved piece: a crossing is replaced by arcs or a wide edge.
MoyGraph planar_graph(const Diagram& d, const std::vector<bool>& crossing_to_wide) {
  UnionFind uf;
  std::map<ParamName, int> port;
  std::vector<bool> port_double;
  auto port_of = [&](ParamName p) {
    auto it = port.find(p);
    if (it != port.end()) return it->second;
    const int id = uf.add();
    port_double.push_back(p.is_double);
    port.emplace(p, id);
    return id;
  };
  auto fresh_double = [&]() {
    const int id = uf.add();
    port_double.push_back(true);
    return id;
  };
  std::vector<VertexSpec> specs;
  std::size_t crossing = 0;
  for (const auto& piece : d.pieces) {
    const auto& ps = piece.params;
    PieceKind kind = piece.kind;
    if (kind == PieceKind::XPlus || kind == PieceKind::XMinus) {
      kind = crossing_to_wide[crossing++] ? PieceKind::Wide : PieceKind::Arc;
      if (kind == PieceKind::Arc) {
        // Oriented resolution: x3 -> x1 and x4 -> x2.
        uf.unite(port_of(ps[2]), port_of(ps[0]));
        uf.unite(port_of(ps[3]), port_of(ps[1]));
        continue;
      }
    }
    switch (kind) {
      case PieceKind::Arc:
      case PieceKind::DLine:
        uf.unite(port_of(ps[0]), port_of(ps[1]));
        break;
      case PieceKind::Vin:
        specs.push_back({true, {port_of(ps[0]), port_of(ps[1])}, port_of(ps[2])});
        break;
      case PieceKind::Vout:
        specs.push_back({false, {port_of(ps[1]), port_of(ps[2])}, port_of(ps[0])});
        break;
      case PieceKind::Wide: {
        const int mid = fresh_double();
        specs.push_back({true, {port_of(ps[2]), port_of(ps[3])}, mid});
        specs.push_back({false, {port_of(ps[0]), port_of(ps[1])}, mid});
        break;
      }
      default:
        break;
    }
  }
  for (const auto& gl : d.glues) uf.unite(port_of(gl.p), port_of(gl.q));
  return assemble(d.n, uf, static_cast<int>(port_double.size()), port_double, specs);
}

// Joins the open head of edge a to the open tail of edge b. Pending merges
// that mention b are redirected to a.
void merge_edges(MoyGraph& g, std::vector<std::pair<int, int>> merges) {
  for (std::size_t k = 0; k < merges.size(); ++k) {
    const auto [a, b] = merges[k];
    if (a == b) {
      if (g.edges[a].is_double) {
        ++g.double_loops;
      } else {
        ++g.single_loops;
      }
      g.edges[a].alive = false;
      continue;
    }
    const int target = g.edges[b].dst;
    g.edges[a].dst = target;
    if (target != -1) {
      MoyGraph::Vertex& v = g.vertices[target];
      for (int& e : v.singles)
        if (e == b) e = a;
      if (v.dbl == b) v.dbl = a;
    }
    g.edges[b].alive = false;
    for (std::size_t j = k + 1; j < merges.size(); ++j) {
      if (merges[j].first == b) merges[j].first = a;
      if (merges[j].second == b) merges[j].second = a;
    }
  }
}

void remove_vertices(MoyGraph& g, std::initializer_list<int> vs, std::initializer_list<int> internal_edges) {
  for (int v : vs) {
    g.vertices[v].alive = false;
    for (int e : g.vertices[v].singles) {
      if (g.edges[e].src == v) g.edges[e].src = -1;
      if (g.edges[e].dst == v) g.edges[e].dst = -1;
    }
    const int d = g.vertices[v].dbl;
    if (g.edges[d].src == v) g.edges[d].src = -1;
    if (g.edges[d].dst == v) g.edges[d].dst = -1;
  }
  for (int e : internal_edges) g.edges[e].alive = false;
}

int other_single(const MoyGraph::Vertex& v, int e) { return v.singles[0] == e ? v.singles[1] : v.singles[0]; }

}  // namespace

std::vector<MoyGraph> moy_graphs(const Diagram& d) {
  validate(d);
  if (!is_closed(d)) throw Error(ErrorKind::ValidationError, "the bracket needs a closed diagram");
  std::size_t crossings = 0;
  for (const auto& p : d.pieces) crossings += (p.kind == PieceKind::XPlus || p.kind == PieceKind::XMinus) ? 1 : 0;
  if (crossings > 20) throw Error(ErrorKind::ValidationError, "too many crossings");
  std::vector<MoyGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << crossings); ++mask) {
    std::vector<bool> wide(crossings);
    LaurentPoly coeff(1);
    std::size_t c = 0;
    for (const auto& p : d.pieces) {
      if (p.kind != PieceKind::XPlus && p.kind != PieceKind::XMinus) continue;
      wide[c] = ((mask >> c) & 1u) != 0;
      const int s = p.kind == PieceKind::XPlus ? 1 : -1;
      // Positive: q^{n-1} (arcs) - q^n (wide); negative: q^{1-n} (arcs) - q^{-n} (wide).
      coeff = coeff * (wide[c] ? LaurentPoly::monomial(s * d.n, -1) : LaurentPoly::monomial(s * (d.n - 1), 1));
      ++c;
    }
    MoyGraph g = planar_graph(d, wide);
    g.coefficient = coeff;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<MoyMatch> applicable_rules(const MoyGraph& g) {
  std::vector<MoyMatch> digons, bigons, squares;
  const auto& V = g.vertices;
  const auto& E = g.edges;
  for (int s = 0; s < static_cast<int>(V.size()); ++s) {
    if (!V[s].alive || V[s].merge) continue;
    // Digon: split s sends both singles into one merge vertex.
    const int m0 = E[V[s].singles[0]].dst, m1 = E[V[s].singles[1]].dst;
    if (m0 == m1) digons.push_back({MoyRule::Digon, {s, m0}});
  }
  for (int a = 0; a < static_cast<int>(V.size()); ++a) {
    if (!V[a].alive || !V[a].merge) continue;
    const int b = E[V[a].dbl].dst;
    // Bigon: merge a -> split b by the double edge, with a single edge b -> a.
    for (int e : V[b].singles) {
      if (E[e].dst == a) {
        bigons.push_back({MoyRule::Bigon, {a, b, e}});
        break;
      }
    }
    // Square: a -> b double, b -> c single, c -> d double, d -> a single.
    for (int bc : V[b].singles) {
      const int c = E[bc].dst;
      if (c == a || !V[c].merge) continue;
      const int dd = E[V[c].dbl].dst;
      if (dd == a || dd == b || dd == c) continue;
      for (int da : V[dd].singles) {
        if (E[da].dst == a && da != bc) {
          squares.push_back({MoyRule::Square, {a, b, c, dd, bc, da}});
        }
      }
    }
  }
  std::vector<MoyMatch> out = digons;
  out.insert(out.end(), bigons.begin(), bigons.end());
  out.insert(out.end(), squares.begin(), squares.end());
  return out;
}

std::vector<MoyGraph> apply_rule(const MoyGraph& g, const MoyMatch& m) {
  const int n = g.n;
  std::vector<MoyGraph> out;
  switch (m.rule) {
    case MoyRule::Digon: {
      const int s = m.vertices[0], w = m.vertices[1];
      MoyGraph h = g;
      const int d_in = g.vertices[s].dbl, d_out = g.vertices[w].dbl;
      remove_vertices(h, {s, w}, {g.vertices[s].singles[0], g.vertices[s].singles[1]});
      merge_edges(h, {{d_in, d_out}});
      h.coefficient = h.coefficient * quantum_integer(2);
      out.push_back(std::move(h));
      break;
    }
    case MoyRule::Bigon: {
      const int a = m.vertices[0], b = m.vertices[1], shared = m.vertices[2];
      MoyGraph h = g;
      const int sa = other_single(g.vertices[a], shared);
      const int ta = other_single(g.vertices[b], shared);
      remove_vertices(h, {a, b}, {g.vertices[a].dbl, shared});
      merge_edges(h, {{sa, ta}});
      h.coefficient = h.coefficient * quantum_integer(n - 1);
      out.push_back(std::move(h));
      break;
    }
    case MoyRule::Square: {
      const int a = m.vertices[0], b = m.vertices[1], c = m.vertices[2], d = m.vertices[3];
      const int bc = m.vertices[4], da = m.vertices[5];
      const int i_a = other_single(g.vertices[a], da);
      const int o_b = other_single(g.vertices[b], bc);
      const int i_c = other_single(g.vertices[c], bc);
      const int o_d = other_single(g.vertices[d], da);
      MoyGraph base = g;
      remove_vertices(base, {a, b, c, d}, {g.vertices[a].dbl, g.vertices[c].dbl, bc, da});
      MoyGraph straight = base;  // i_a -> o_d, i_c -> o_b
      merge_edges(straight, {{i_a, o_d}, {i_c, o_b}});
      MoyGraph turned = base;  // i_a -> o_b, i_c -> o_d, weighted [n-2]
      merge_edges(turned, {{i_a, o_b}, {i_c, o_d}});
      turned.coefficient = turned.coefficient * quantum_integer(n - 2);
      out.push_back(std::move(straight));
      out.push_back(std::move(turned));
      break;
    }
  }
  return out;
}

namespace {

LaurentPoly closed_value(const MoyGraph& g) {
  LaurentPoly v = g.coefficient;
  for (int i = 0; i < g.single_loops; ++i) v = v * quantum_integer(g.n);
  if (g.double_loops > 0) {
    const LaurentPoly dl = double_loop_value(g.n);
    for (int i = 0; i < g.double_loops; ++i) v = v * dl;
  }
  return v;
}

}  // namespace

LaurentPoly bracket(const MoyGraph& g) {
  if (g.live_vertices() == 0) return closed_value(g);
  const auto matches = applicable_rules(g);
  if (matches.empty()) throw Error(ErrorKind::StuckGraph, "no relation applies to " + g.to_string());
  LaurentPoly total;
  for (const auto& h : apply_rule(g, matches.front())) total += bracket(h);
  return total;
}

LaurentPoly bracket(const Diagram& d) {
  LaurentPoly total;
  for (const auto& g : moy_graphs(d)) total += bracket(g);
  return total;
}

std::vector<LaurentPoly> bracket_all_paths(const MoyGraph& g) {
  if (g.live_vertices() == 0) return {closed_value(g)};
  const auto matches = applicable_rules(g);
  if (matches.empty()) throw Error(ErrorKind::StuckGraph, "no relation applies to " + g.to_string());
  std::map<std::string, LaurentPoly> distinct;
  for (const auto& match : matches) {
    // Sum over the terms of this rule, combining every value of every term.
    std::vector<LaurentPoly> partial{LaurentPoly()};
    for (const auto& h : apply_rule(g, match)) {
      std::vector<LaurentPoly> next;
      for (const auto& v : bracket_all_paths(h))
        for (const auto& p : partial) next.push_back(p + v);
      partial = std::move(next);
    }
    for (const auto& v : partial) distinct.emplace(v.to_string(), v);
  }
  std::vector<LaurentPoly> out;
  for (auto& [k, v] : distinct) out.push_back(v);
  return out;
}

}  // namespace kr
