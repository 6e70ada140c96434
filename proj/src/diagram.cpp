#include "kr/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "kr/errors.hpp"

namespace kr {

namespace {

Error located(ErrorKind kind, int line, int col, const std::string& msg) {
  std::string where = "line " + std::to_string(line);
  if (col > 0) where += ", col " + std::to_string(col);
  return Error(kind, where + ": " + msg);
}

bool parse_int(std::string_view text, int& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

struct Token {
  std::string_view text;
  int col;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool uses_double_lines(const Diagram& d) {
  return std::any_of(d.pieces.begin(), d.pieces.end(), [](const Piece& p) {
    return p.kind == PieceKind::DLine || p.kind == PieceKind::Vin || p.kind == PieceKind::Vout;
  });
}

Poly boundary_term(int n, ParamName p) {
  if (p.is_double) return power_sum_at(n, Poly::var(p.y()), Poly::var(p.z()));
  return Poly::var(p.single()).pow(static_cast<unsigned>(n + 1));
}

}  // namespace

ParamName ParamName::parse(std::string_view text) {
  ParamName p;
  int idx = 0;
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'd') || !parse_int(text.substr(1), idx) || idx < 1) {
    throw Error(ErrorKind::SyntaxError, "bad parameter name '" + std::string(text) + "' (expected x<k> or d<k>)");
  }
  p.is_double = text[0] == 'd';
  p.index = idx;
  return p;
}

std::string ParamName::to_string() const { return (is_double ? "d" : "x") + std::to_string(index); }

std::string_view keyword(PieceKind kind) {
  switch (kind) {
    case PieceKind::Arc: return "arc";
    case PieceKind::Wide: return "wide";
    case PieceKind::DLine: return "dline";
    case PieceKind::Vin: return "vin";
    case PieceKind::Vout: return "vout";
    case PieceKind::XPlus: return "xplus";
    case PieceKind::XMinus: return "xminus";
  }
  return "?";
}

std::vector<std::pair<Orientation, bool>> slot_layout(PieceKind kind) {
  using O = Orientation;
  switch (kind) {
    case PieceKind::Arc: return {{O::In, false}, {O::Out, false}};
    case PieceKind::DLine: return {{O::Out, true}, {O::In, true}};
    case PieceKind::Vin: return {{O::In, false}, {O::In, false}, {O::Out, true}};
    case PieceKind::Vout: return {{O::In, true}, {O::Out, false}, {O::Out, false}};
    case PieceKind::Wide:
    case PieceKind::XPlus:
    case PieceKind::XMinus: return {{O::Out, false}, {O::Out, false}, {O::In, false}, {O::In, false}};
  }
  return {};
}

std::size_t arity(PieceKind kind) { return slot_layout(kind).size(); }

std::map<ParamName, ParamUse> parameter_uses(const Diagram& d) {
  std::map<ParamName, ParamUse> uses;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const Piece& piece = d.pieces[i];
    const auto layout = slot_layout(piece.kind);
    if (piece.params.size() != layout.size()) {
      throw located(ErrorKind::ArityMismatch, piece.line, 0,
                    std::string(keyword(piece.kind)) + " takes " + std::to_string(layout.size()) + " parameters");
    }
    for (std::size_t s = 0; s < layout.size(); ++s) {
      const ParamName p = piece.params[s];
      if (p.is_double != layout[s].second) {
        throw located(ErrorKind::KindMismatch, piece.line, 0,
                      p.to_string() + " in slot " + std::to_string(s + 1) + " of " + std::string(keyword(piece.kind)) +
                          " must be a " + (layout[s].second ? "double" : "single") + " parameter");
      }
      if (!uses.emplace(p, ParamUse{i, s, layout[s].first}).second) {
        throw located(ErrorKind::DuplicateUse, piece.line, 0, p.to_string() + " is used twice");
      }
    }
  }
  return uses;
}

void validate(const Diagram& d) {
  if (d.n < 2) throw Error(ErrorKind::UnsupportedN, "n must be at least 2, got " + std::to_string(d.n));
  if (d.n < 3 && uses_double_lines(d)) {
    throw Error(ErrorKind::UnsupportedN, "double lines need n >= 3, got " + std::to_string(d.n));
  }
  const auto uses = parameter_uses(d);
  std::set<ParamName> glued;
  for (const auto& g : d.glues) {
    for (ParamName p : {g.p, g.q}) {
      if (uses.count(p) == 0) throw located(ErrorKind::UnknownParameter, g.line, 0, p.to_string() + " is not used by any piece");
      if (!glued.insert(p).second) throw located(ErrorKind::DuplicateUse, g.line, 0, p.to_string() + " is glued twice");
    }
    if (g.p.is_double != g.q.is_double) {
      throw located(ErrorKind::KindMismatch, g.line, 0, "cannot glue " + g.p.to_string() + " to " + g.q.to_string());
    }
    if (uses.at(g.p).orientation == uses.at(g.q).orientation) {
      throw located(ErrorKind::OrientationMismatch, g.line, 0,
                    g.p.to_string() + " and " + g.q.to_string() + " are both " +
                        (uses.at(g.p).orientation == Orientation::In ? "incoming" : "outgoing"));
    }
  }
}

Diagram parse_diagram(std::string_view text) {
  Diagram d;
  bool have_n = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view head = tokens[0].text;
    if (head == "n") {
      if (have_n) throw located(ErrorKind::SyntaxError, line_no, tokens[0].col, "n is already set");
      if (tokens.size() != 2 || !parse_int(tokens[1].text, d.n)) {
        throw located(ErrorKind::SyntaxError, line_no, tokens[0].col, "expected 'n <int>'");
      }
      have_n = true;
      continue;
    }
    if (!have_n) throw located(ErrorKind::SyntaxError, line_no, tokens[0].col, "the first statement must be 'n <int>'");

    auto names = [&](std::size_t count, const std::string& what) {
      if (tokens.size() - 1 != count) {
        throw located(ErrorKind::ArityMismatch, line_no, tokens[0].col,
                      what + " takes " + std::to_string(count) + " parameters, got " + std::to_string(tokens.size() - 1));
      }
      std::vector<ParamName> out;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        try {
          out.push_back(ParamName::parse(tokens[i].text));
        } catch (const Error& e) {
          throw located(ErrorKind::SyntaxError, line_no, tokens[i].col,
                        "bad parameter name '" + std::string(tokens[i].text) + "' (expected x<k> or d<k>)");
        }
      }
      return out;
    };

    if (head == "glue") {
      auto ps = names(2, "glue");
      d.glues.push_back({ps[0], ps[1], line_no});
      continue;
    }
    static const PieceKind kinds[] = {PieceKind::Arc,  PieceKind::Wide,  PieceKind::DLine, PieceKind::Vin,
                                      PieceKind::Vout, PieceKind::XPlus, PieceKind::XMinus};
    bool matched = false;
    for (PieceKind k : kinds) {
      if (head != keyword(k)) continue;
      d.pieces.push_back({k, names(arity(k), std::string(keyword(k))), line_no});
      matched = true;
      break;
    }
    if (!matched) {
      throw located(ErrorKind::SyntaxError, line_no, tokens[0].col, "unknown statement '" + std::string(head) + "'");
    }
  }
  if (!have_n) throw located(ErrorKind::SyntaxError, line_no, 0, "missing 'n <int>'");
  validate(d);
  return d;
}

bool is_closed(const Diagram& d) { return parameter_uses(d).size() == 2 * d.glues.size(); }

bool has_crossings(const Diagram& d) {
  return std::any_of(d.pieces.begin(), d.pieces.end(),
                     [](const Piece& p) { return p.kind == PieceKind::XPlus || p.kind == PieceKind::XMinus; });
}

std::string to_dsl(const Diagram& d) {
  std::ostringstream out;
  out << "n " << d.n << "\n";
  for (const auto& p : d.pieces) {
    out << keyword(p.kind);
    for (const auto& name : p.params) out << " " << name.to_string();
    out << "\n";
  }
  for (const auto& g : d.glues) out << "glue " << g.p.to_string() << " " << g.q.to_string() << "\n";
  return out.str();
}

// ------------------------------------------------------------- primitives

namespace {

KoszulMF rows_to_mf(const std::vector<std::pair<Poly, Poly>>& rows, int shift) {
  KoszulMF m;
  for (const auto& [a, b] : rows) m = tensor(m, koszul_new(a, b));
  m.shift = shift;
  return m;
}

Poly f_at(int n, const Poly& s1, const Poly& s2) { return power_sum_at(n, s1, s2); }

}  // namespace

KoszulMF build_arc(int n, VarId tail, VarId head) {
  if (n < 1) throw Error(ErrorKind::UnsupportedN, "n must be positive");
  return rows_to_mf({{pi_poly(n, head, tail), Poly::var(head) - Poly::var(tail)}}, 0);
}

KoszulMF build_wide(int n, VarId x1, VarId x2, VarId x3, VarId x4) {
  if (n < 1) throw Error(ErrorKind::UnsupportedN, "n must be positive");
  const UV uv = uv_polys(n, x1, x2, x3, x4);
  const Poly a = Poly::var(x1), b = Poly::var(x2), c = Poly::var(x3), d = Poly::var(x4);
  return rows_to_mf({{uv.u, a + b - c - d}, {uv.v, a * b - c * d}}, -1);
}

KoszulMF build_dline(int n, ParamName head, ParamName tail) {
  const Poly y1 = Poly::var(head.y()), z1 = Poly::var(head.z());
  const Poly y2 = Poly::var(tail.y()), z2 = Poly::var(tail.z());
  return rows_to_mf({{exact_div(f_at(n, y1, z1) - f_at(n, y2, z1), y1 - y2), y1 - y2},
                     {exact_div(f_at(n, y2, z1) - f_at(n, y2, z2), z1 - z2), z1 - z2}},
                    0);
}

KoszulMF build_vin(int n, VarId x1, VarId x2, ParamName d3) {
  const Poly s1 = Poly::var(x1) + Poly::var(x2), s2 = Poly::var(x1) * Poly::var(x2);
  const Poly y = Poly::var(d3.y()), z = Poly::var(d3.z());
  return rows_to_mf({{exact_div(f_at(n, y, z) - f_at(n, s1, z), y - s1), y - s1},
                     {exact_div(f_at(n, s1, z) - f_at(n, s1, s2), z - s2), z - s2}},
                    0);
}

KoszulMF build_vout(int n, ParamName d3, VarId x1, VarId x2) {
  const Poly s1 = Poly::var(x1) + Poly::var(x2), s2 = Poly::var(x1) * Poly::var(x2);
  const Poly y = Poly::var(d3.y()), z = Poly::var(d3.z());
  return rows_to_mf({{exact_div(f_at(n, s1, s2) - f_at(n, y, s2), s1 - y), s1 - y},
                     {exact_div(f_at(n, y, s2) - f_at(n, y, z), s2 - z), s2 - z}},
                    -1);
}

KoszulMF build_primitive(PieceKind kind, int n, const std::vector<ParamName>& params) {
  const auto layout = slot_layout(kind);
  if (params.size() != layout.size()) {
    throw Error(ErrorKind::ArityMismatch,
                std::string(keyword(kind)) + " takes " + std::to_string(layout.size()) + " parameters");
  }
  for (std::size_t s = 0; s < layout.size(); ++s) {
    if (params[s].is_double != layout[s].second) {
      throw Error(ErrorKind::KindMismatch, params[s].to_string() + " has the wrong kind for " + std::string(keyword(kind)));
    }
  }
  const bool doubles = kind == PieceKind::DLine || kind == PieceKind::Vin || kind == PieceKind::Vout;
  if (n < 2 || (doubles && n < 3)) {
    throw Error(ErrorKind::UnsupportedN, std::string(keyword(kind)) + " is not defined for n = " + std::to_string(n));
  }
  switch (kind) {
    case PieceKind::Arc: return build_arc(n, params[0].single(), params[1].single());
    case PieceKind::Wide:
      return build_wide(n, params[0].single(), params[1].single(), params[2].single(), params[3].single());
    case PieceKind::DLine: return build_dline(n, params[0], params[1]);
    case PieceKind::Vin: return build_vin(n, params[0].single(), params[1].single(), params[2]);
    case PieceKind::Vout: return build_vout(n, params[0], params[1].single(), params[2].single());
    case PieceKind::XPlus:
    case PieceKind::XMinus: break;
  }
  throw Error(ErrorKind::ValidationError, "a crossing is a complex, not a single factorization");
}

KoszulMF glue(const Diagram& d) {
  validate(d);
  if (has_crossings(d)) {
    throw Error(ErrorKind::ValidationError, "crossings have no single factorization; use crossing_complex or bracket");
  }
  KoszulMF m;
  for (const auto& p : d.pieces) m = tensor(m, build_primitive(p.kind, d.n, p.params));
  const auto uses = parameter_uses(d);
  std::map<VarId, Poly> subst;
  for (const auto& g : d.glues) {
    const bool p_is_out = uses.at(g.p).orientation == Orientation::Out;
    const ParamName out = p_is_out ? g.p : g.q;
    const ParamName in = p_is_out ? g.q : g.p;
    if (out.is_double) {
      subst[in.y()] = Poly::var(out.y());
      subst[in.z()] = Poly::var(out.z());
    } else {
      subst[in.single()] = Poly::var(out.single());
    }
  }
  KoszulMF out;
  out.shift = m.shift;
  out.parity = m.parity;
  std::set<VarId> vars;
  for (const auto& r : m.rows) {
    KoszulRow row{r.a.substitute(subst), r.b.substitute(subst), r.internal_shift};
    for (VarId v : row.a.variables()) vars.insert(v);
    for (VarId v : row.b.variables()) vars.insert(v);
    out.rows.push_back(std::move(row));
  }
  out.base = QuotientRing(vars);
  return out;
}

Poly boundary_potential(const Diagram& d) {
  std::set<ParamName> glued;
  for (const auto& g : d.glues) {
    glued.insert(g.p);
    glued.insert(g.q);
  }
  Poly w;
  for (const auto& [name, use] : parameter_uses(d)) {
    if (glued.count(name) != 0) continue;
    if (use.orientation == Orientation::Out) {
      w += boundary_term(d.n, name);
    } else {
      w -= boundary_term(d.n, name);
    }
  }
  return w;
}

CrossingComplex crossing_complex(int sign, int n, const std::array<ParamName, 4>& params) {
  if (n < 2) throw Error(ErrorKind::UnsupportedN, "crossings need n >= 2");
  for (const auto& p : params) {
    if (p.is_double) throw Error(ErrorKind::KindMismatch, "crossing parameters are single lines");
  }
  const VarId x1 = params[0].single(), x2 = params[1].single(), x3 = params[2].single(), x4 = params[3].single();
  const KoszulMF wide = build_wide(n, x1, x2, x3, x4);
  const KoszulMF arcs = tensor(build_arc(n, x3, x1), build_arc(n, x4, x2));
  auto object = [](const KoszulMF& m, int s) { return CrossingObject{translate(shift(m, s)), s, 1}; };
  CrossingComplex c;
  c.sign = sign >= 0 ? 1 : -1;
  if (c.sign > 0) {
    c.objects.emplace(-1, object(wide, n));
    c.objects.emplace(0, object(arcs, n - 1));
  } else {
    c.objects.emplace(0, object(arcs, 1 - n));
    c.objects.emplace(1, object(wide, -n));
  }
  return c;
}

Diagram random_diagram(std::mt19937_64& rng, int n, int max_pieces) {
  Diagram d;
  d.n = n;
  std::uniform_int_distribution<int> count(1, std::max(1, max_pieces));
  const int pieces = count(rng);
  const std::vector<PieceKind> singles_only = {PieceKind::Arc, PieceKind::Wide};
  const std::vector<PieceKind> all = {PieceKind::Arc, PieceKind::Wide, PieceKind::DLine, PieceKind::Vin,
                                      PieceKind::Vout};
  const auto& menu = n >= 3 ? all : singles_only;
  std::uniform_int_distribution<std::size_t> pick(0, menu.size() - 1);
  int next_x = 1, next_d = 1;
  for (int i = 0; i < pieces; ++i) {
    Piece p;
    p.kind = menu[pick(rng)];
    for (const auto& [orient, is_double] : slot_layout(p.kind)) {
      p.params.push_back(ParamName{is_double, is_double ? next_d++ : next_x++});
    }
    d.pieces.push_back(std::move(p));
  }
  // Random matching of out uses against in uses of the same kind.
  std::vector<ParamName> outs[2], ins[2];
  for (const auto& [name, use] : parameter_uses(d)) {
    (use.orientation == Orientation::Out ? outs : ins)[name.is_double ? 1 : 0].push_back(name);
  }
  std::bernoulli_distribution coin(0.6);
  for (int k = 0; k < 2; ++k) {
    std::shuffle(outs[k].begin(), outs[k].end(), rng);
    std::shuffle(ins[k].begin(), ins[k].end(), rng);
    const std::size_t m = std::min(outs[k].size(), ins[k].size());
    for (std::size_t i = 0; i < m; ++i) {
      if (!coin(rng)) continue;
      if (coin(rng)) {
        d.glues.push_back({outs[k][i], ins[k][i], 0});
      } else {
        d.glues.push_back({ins[k][i], outs[k][i], 0});
      }
    }
  }
  validate(d);
  return d;
}

}  // namespace kr
