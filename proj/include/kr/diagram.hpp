#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kr/mfcore.hpp"

namespace kr {

enum class PieceKind { Arc, Wide, DLine, Vin, Vout, XPlus, XMinus };

enum class Orientation { In, Out };

/// x<k> names a single parameter x_k; d<k> names a double parameter (y_k, z_k).
struct ParamName {
  bool is_double = false;
  int index = 0;

  static ParamName parse(std::string_view text);  // throws SyntaxError
  std::string to_string() const;
  VarId single() const { return VarId::x(index); }
  VarId y() const { return VarId::y(index); }
  VarId z() const { return VarId::z(index); }
  friend auto operator<=>(const ParamName&, const ParamName&) = default;
};

struct Piece {
  PieceKind kind = PieceKind::Arc;
  std::vector<ParamName> params;
  int line = 0;
};

/// Identifies an in use with an out use; given in either order.
struct GlueStmt {
  ParamName p;
  ParamName q;
  int line = 0;
};

struct Diagram {
  int n = 0;
  std::vector<Piece> pieces;
  std::vector<GlueStmt> glues;
};

struct ParamUse {
  std::size_t piece = 0;
  std::size_t slot = 0;
  Orientation orientation = Orientation::In;
};

std::string_view keyword(PieceKind kind);
std::size_t arity(PieceKind kind);
/// Orientation and kind (true for double) of each slot.
std::vector<std::pair<Orientation, bool>> slot_layout(PieceKind kind);

/// Parses and validates the diagram language. Errors carry "line L, col C".
Diagram parse_diagram(std::string_view text);
/// Structural checks shared by the parser and the generators.
void validate(const Diagram& d);
std::map<ParamName, ParamUse> parameter_uses(const Diagram& d);
bool is_closed(const Diagram& d);
bool has_crossings(const Diagram& d);
std::string to_dsl(const Diagram& d);

KoszulMF build_arc(int n, VarId tail, VarId head);
KoszulMF build_wide(int n, VarId x1, VarId x2, VarId x3, VarId x4);
KoszulMF build_dline(int n, ParamName head, ParamName tail);
KoszulMF build_vin(int n, VarId x1, VarId x2, ParamName d3);
KoszulMF build_vout(int n, ParamName d3, VarId x1, VarId x2);
/// Throws ArityMismatch, KindMismatch, UnsupportedN.
KoszulMF build_primitive(PieceKind kind, int n, const std::vector<ParamName>& params);

/// Tensor product of all pieces followed by the substitution in := out for
/// every glue statement.
KoszulMF glue(const Diagram& d);
/// Sum of x^{n+1} and f(y, z) over unglued uses, + for out and - for in.
Poly boundary_potential(const Diagram& d);

struct CrossingObject {
  KoszulMF mf;
  int applied_shift = 0;
  int translations = 0;
};

struct CrossingComplex {
  int sign = 1;
  std::map<int, CrossingObject> objects;  // homological position -> object; maps unset
};

/// Params as for a wide edge: x1, x2 outgoing, x3, x4 incoming.
CrossingComplex crossing_complex(int sign, int n, const std::array<ParamName, 4>& params);

/// Random diagram with 1..max_pieces pieces and random compatible gluings.
Diagram random_diagram(std::mt19937_64& rng, int n, int max_pieces);

}  // namespace kr
