#pragma once

#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "polycone/bilevel.hpp"

namespace polycone::cli {

// A parsed "polycone/1" problem file. `xstar` comes from "normal", or from
// "lower_c" as -c.
struct ProblemFile {
  std::shared_ptr<const ProblemInstance> inst;
  RatVec point;
  std::optional<RatVec> xstar;
  std::optional<BilevelProblem> bilevel;
};

// Throws ParseError with a JSON-path location such as "theta.rows[2].a[1]".
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

// "1,-1/2,0" -> vector; ParseError names `what`.
RatVec parse_vector_arg(const std::string& text, std::size_t dim, const std::string& what);

}  // namespace polycone::cli
