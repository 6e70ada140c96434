#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kr/laurent.hpp"

namespace kr::cli {

/// What euler and homology report, and what bracket fills in.
struct ResultDocument {
  int n = 0;
  LaurentPoly euler;
  LaurentPoly poincare0;
  LaurentPoly poincare1;
  std::optional<LaurentPoly> bracket;
  int steps = 0;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// {"<exp>": coeff, ...} with decimal exponent keys.
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ResultDocument& doc);
ResultDocument from_json(const nlohmann::json& j);

/// Runs one command line (without the program name). Returns the exit status:
/// 0 success, 1 domain error or unreadable input, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kr::cli
