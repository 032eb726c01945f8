#pragma once

#include <optional>
#include <string>

#include "ybe/quadratic_set.hpp"

namespace ybe {

// A quadratic set as stored on disk. JSON object with
//   "n": size,
//   exactly one of
//     "r": n x n array of [k, l] pairs (1-based; row x, column y, r(x,y)=(k,l))
//     "permutation": {"f": [...], "g": [...]} (1-based one-line images),
//   optional "name".
struct SolutionDocument {
  std::optional<std::string> name;
  QuadraticSet set;
};

// Throws InvalidInput naming the offending field and index.
SolutionDocument parse_document(const std::string& text);
SolutionDocument load_document(const std::string& path);

// Single-line JSON in the "r" form.
std::string serialize_document(const QuadraticSet& q, const std::optional<std::string>& name = std::nullopt);

}  // namespace ybe
