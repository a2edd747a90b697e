#include "qelim/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "qelim/analysis.hpp"
#include "qelim/errors.hpp"

namespace qelim::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    out.push_back(std::move(line));
  }
  return out;
}

template <typename T>
T parse_int(const std::string& tok, const std::string& source, std::size_t line,
            const char* what) {
  T value{};
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(source, line, std::string("expected ") + what + ", got '" + tok + "'");
  }
  return value;
}

Rat parse_rat(const std::string& tok, const std::string& source, std::size_t line) {
  try {
    return Rat::parse(tok);
  } catch (const ParseError&) {
    throw ParseError(source, line, "expected a rational num/den, got '" + tok + "'");
  }
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  return out.str();
}

class TreeParser {
public:
  TreeParser(std::string_view text, std::size_t k, const std::string& source)
      : source_(source), k_(k) {
    for (Line& line : content_lines(text)) {
      for (std::string& tok : line.tokens) tokens_.push_back({line.number, std::move(tok)});
    }
  }

  DecisionTree parse_all() {
    DecisionTree t = node();
    if (pos_ != tokens_.size()) {
      throw ParseError(source_, tokens_[pos_].first, "trailing tokens after the tree");
    }
    return t;
  }

private:
  const std::pair<std::size_t, std::string>& next(const char* what) {
    if (pos_ >= tokens_.size()) {
      const std::size_t line = tokens_.empty() ? 1 : tokens_.back().first;
      throw ParseError(source_, line, std::string("unexpected end of tree, expected ") + what);
    }
    return tokens_[pos_++];
  }

  DecisionTree node() {
    const auto& [line, kind] = next("a node");
    if (kind == "L") {
      const auto& [vline, value] = next("a label");
      return DecisionTree::leaf(parse_int<Label>(value, source_, vline, "an integer label"));
    }
    if (kind == "Q") {
      const auto& [cline, value] = next("a coordinate");
      const auto coord = parse_int<std::size_t>(value, source_, cline, "a coordinate");
      if (coord == 0) throw ParseError(source_, cline, "coordinates are 1-based");
      std::vector<DecisionTree> children;
      children.reserve(k_);
      for (std::size_t a = 0; a < k_; ++a) children.push_back(node());
      return DecisionTree::query(coord, std::move(children));
    }
    throw ParseError(source_, line, "expected 'L' or 'Q', got '" + kind + "'");
  }

  const std::string& source_;
  std::size_t k_;
  std::vector<std::pair<std::size_t, std::string>> tokens_;
  std::size_t pos_ = 0;
};

void serialize_tree_to(const DecisionTree& t, std::ostringstream& out) {
  if (t.is_leaf()) {
    out << "L " << t.label() << '\n';
    return;
  }
  out << "Q " << t.coord() << '\n';
  for (const DecisionTree& child : t.children()) serialize_tree_to(child, out);
}

}  // namespace

FiniteFunction parse_function(std::string_view text, const std::string& source) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.size() != 3) {
    const std::size_t at = lines.empty() ? 1 : lines.back().number;
    throw ParseError(source, at, "expected 3 content lines (header, labels, table), found " +
                                     std::to_string(lines.size()));
  }
  const Line& header = lines[0];
  if (header.tokens.size() != 2) throw ParseError(source, header.number, "header must be 'n k'");
  const auto n = parse_int<std::size_t>(header.tokens[0], source, header.number, "arity n");
  const auto k = parse_int<std::size_t>(header.tokens[1], source, header.number, "alphabet size k");
  if (n == 0) throw ParseError(source, header.number, "arity must be positive");
  if (k < 2) throw ParseError(source, header.number, "alphabet size must be at least 2");

  std::vector<Label> labels;
  for (const auto& tok : lines[1].tokens) {
    labels.push_back(parse_int<Label>(tok, source, lines[1].number, "an integer label"));
  }

  std::size_t size = 0;
  try {
    size = table_size(n, k);
  } catch (const CapacityError& e) {
    throw ParseError(source, header.number, e.what());
  }
  const Line& body = lines[2];
  if (body.tokens.size() != size) {
    throw ParseError(source, body.number, "table has " + std::to_string(body.tokens.size()) +
                                              " entries, expected " + std::to_string(size));
  }
  std::vector<std::uint32_t> table;
  table.reserve(size);
  for (const auto& tok : body.tokens) {
    const auto v = parse_int<std::uint32_t>(tok, source, body.number, "a label index");
    if (v >= labels.size()) {
      throw ParseError(source, body.number, "label index " + tok + " out of range");
    }
    table.push_back(v);
  }
  try {
    return FiniteFunction(n, k, std::move(labels), std::move(table));
  } catch (const ShapeError& e) {
    throw ParseError(source, lines[1].number, e.what());
  }
}

std::string serialize_function(const FiniteFunction& f) {
  std::ostringstream out;
  out << f.arity() << ' ' << f.alphabet_size() << '\n';
  out << join(f.labels()) << '\n';
  out << join(f.table()) << '\n';
  return out.str();
}

ProductDistribution parse_distribution(std::string_view text, const std::string& source) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(source, 1, "distribution has no marginals");
  std::vector<std::vector<Rat>> marginals;
  for (const Line& line : lines) {
    std::vector<Rat> marginal;
    for (const auto& tok : line.tokens) marginal.push_back(parse_rat(tok, source, line.number));
    Rat total;
    for (const Rat& p : marginal) {
      if (p <= Rat(0)) {
        throw ParseError(source, line.number, "probability " + p.str() + " is not positive");
      }
      total += p;
    }
    if (total != Rat(1)) {
      throw ParseError(source, line.number, "marginal sums to " + total.str() + ", not 1/1");
    }
    if (marginal.size() != lines.front().tokens.size() || marginal.size() < 2) {
      throw ParseError(source, line.number, "marginal width differs from the first line or is < 2");
    }
    marginals.push_back(std::move(marginal));
  }
  return ProductDistribution(std::move(marginals));
}

std::string serialize_distribution(const ProductDistribution& mu) {
  std::ostringstream out;
  for (const auto& marginal : mu.marginals()) out << join(marginal) << '\n';
  return out.str();
}

DecisionTree parse_tree(std::string_view text, std::size_t alphabet_size, const std::string& source) {
  return TreeParser(text, alphabet_size, source).parse_all();
}

std::string serialize_tree(const DecisionTree& t) {
  std::ostringstream out;
  serialize_tree_to(t, out);
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  out << contents;
}

void Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}

void Report::append(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::string Report::str() const {
  std::string out;
  for (const auto& [key, value] : entries_) out += key + '\t' + value + '\n';
  return out;
}

namespace {

void add_variance(Report& r, const VarianceRatio& v) {
  r.add("variance", v.variance);
  r.add("variance_ratio", v.infinite ? std::string("inf") : v.ratio.str());
}

}  // namespace

Report analysis_report(const FiniteFunction& f, const ProductDistribution& mu) {
  Report r;
  r.add("n", f.arity());
  r.add("k", f.alphabet_size());
  for (const auto& [label, p] : output_distribution(f, mu)) r.add("pr " + std::to_string(label), p);
  r.add("plurality_error", plurality_error(f, mu));
  MaxInfluence best{Rat(0), 1};
  for (std::size_t i = 1; i <= f.arity(); ++i) {
    Rat v = influence(f, mu, i);
    r.add("inf " + std::to_string(i), v);
    if (v > best.value) best = {std::move(v), i};
  }
  r.add("inf_max", best.value);
  r.add("inf_argmax", best.coord);
  if (f.labels().size() == 2) add_variance(r, variance_ratio(f, mu));
  return r;
}

Report bound_report(const BoundReport& b) {
  Report r;
  r.add("plurality_error", b.plurality_error);
  r.add("inf_max", b.inf_max);
  r.add("inf_argmax", b.inf_argmax);
  r.add("epsilon", b.epsilon);
  r.add("bound", b.bound);
  if (b.variance_ratio) add_variance(r, *b.variance_ratio);
  return r;
}

Report corollary_report(const CorollaryBound& c) {
  Report r;
  r.add("delta", c.delta);
  r.append(bound_report(c.report));
  return r;
}

Report transcript_report(const EliminationTranscript& t) {
  Report r;
  r.add("epsilon", t.epsilon);
  r.add("initial_error", t.initial_error);
  r.add("steps", t.steps.size());
  for (std::size_t s = 0; s < t.steps.size(); ++s) {
    const EliminationStep& step = t.steps[s];
    r.add("step", s + 1);
    r.add("eliminated_coordinate", step.eliminated_coordinate);
    r.add("influence_of_coordinate", step.influence_of_coordinate);
    r.add("error_before", step.error_before);
    r.add("error_randomized", step.error_randomized);
    r.add("chosen_symbol", std::to_string(step.chosen_symbol));
    r.add("error_after", step.error_after);
    r.add("depth_after", step.depth_after);
  }
  r.add("final_error", t.final_error);
  r.add("final_label", std::to_string(t.final_label));
  r.add("plurality_error", t.plurality_error);
  r.add("inf_max", t.inf_max);
  r.add("implied_lower_bound", t.implied_lower_bound);
  return r;
}

}  // namespace qelim::io
