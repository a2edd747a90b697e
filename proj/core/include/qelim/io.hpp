#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qelim/bounds.hpp"
#include "qelim/decision_tree.hpp"
#include "qelim/distribution.hpp"
#include "qelim/elimination.hpp"
#include "qelim/function.hpp"

namespace qelim::io {

// Text formats (UTF-8, LF line endings). Lines starting with '#' and blank
// lines are ignored by every parser. `source` names the input in ParseError
// messages.
//
// Function file:
//   n k
//   <output labels, space separated>
//   <k^n label indices, x_1 most significant>
//
// Distribution file: n lines, line j holding k rationals "num/den" for the
// marginal of coordinate j.
//
// Tree file: pre-order, one node per line, "L <label>" or "Q <coordinate>"
// followed by its k children.

FiniteFunction parse_function(std::string_view text, const std::string& source = "<function>");
std::string serialize_function(const FiniteFunction& f);

ProductDistribution parse_distribution(std::string_view text,
                                       const std::string& source = "<distribution>");
std::string serialize_distribution(const ProductDistribution& mu);

DecisionTree parse_tree(std::string_view text, std::size_t alphabet_size,
                        const std::string& source = "<tree>");
std::string serialize_tree(const DecisionTree& t);

/// Reads a whole file; throws ParseError (line 0) when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Ordered key/value report printed as one "key<TAB>value" line per entry.
class Report {
public:
  void add(std::string key, std::string value);
  void add(std::string key, const Rat& value) { add(std::move(key), value.str()); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void append(const Report& other);

  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  [[nodiscard]] std::string str() const;

private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

Report analysis_report(const FiniteFunction& f, const ProductDistribution& mu);
Report bound_report(const BoundReport& r);
Report corollary_report(const CorollaryBound& r);
Report transcript_report(const EliminationTranscript& t);

}  // namespace qelim::io
