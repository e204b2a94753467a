#include "coxgrowth/coxfile.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "coxgrowth/errors.hpp"

namespace coxgrowth {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> to_long(std::string_view s) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Weight symbol_weight(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "∞") return kInfinity;
  auto v = to_long(s);
  if (!v || *v < 3 || *v > 1000000) throw ParseError("bad symbol entry '" + std::string(s) + "'", 0);
  return Weight(static_cast<std::uint32_t>(*v));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

// "3^{a,b,c}" or "3^{a,b}"
std::vector<int> branch_lengths(std::string_view s) {
  s = trim(s);
  if (s.substr(0, 3) != "3^{" || s.back() != '}') throw ParseError("bad branch entry '" + std::string(s) + "'", 0);
  std::vector<int> out;
  for (auto part : split(s.substr(3, s.size() - 4), ',')) {
    auto v = to_long(trim(part));
    if (!v || *v < 1 || *v > 63) throw ParseError("bad branch length in '" + std::string(s) + "'", 0);
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

}  // namespace

CoxeterGraph parse_cox(std::string_view text) {
  std::optional<int> n;
  WeightMap raw;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!n) {
      if (tok[0] != "vertices" || tok.size() != 2) throw ParseError("expected 'vertices <N>'", line_no);
      auto v = to_long(tok[1]);
      if (!v || *v < 1 || *v > CoxeterGraph::kMaxOrder)
        throw ParseError("vertex count must be between 1 and " + std::to_string(CoxeterGraph::kMaxOrder), line_no);
      n = static_cast<int>(*v);
      continue;
    }
    if (tok[0] != "edge" || tok.size() != 4) throw ParseError("expected 'edge <i> <j> <m>'", line_no);
    auto i = to_long(tok[1]);
    auto j = to_long(tok[2]);
    if (!i || !j) throw ParseError("edge endpoints must be integers", line_no);
    if (*i < 1 || *i > *n || *j < 1 || *j > *n) throw ParseError("edge endpoint out of range 1.." + std::to_string(*n), line_no);
    if (*i == *j) throw ParseError("loop edge at vertex " + std::to_string(*i), line_no);
    Weight m;
    if (tok[3] == "inf") {
      m = kInfinity;
    } else {
      auto v = to_long(tok[3]);
      if (!v) throw ParseError("edge weight must be an integer or 'inf'", line_no);
      if (*v < 2) throw ParseError("weight < 2", line_no);
      if (*v == 2) throw ParseError("weight 2 is implicit; edges need m >= 3", line_no);
      if (*v >= static_cast<long>(Weight::kInfinityCode)) throw ParseError("edge weight too large", line_no);
      m = Weight(static_cast<std::uint32_t>(*v));
    }
    const std::pair<int, int> key = std::minmax(static_cast<int>(*i), static_cast<int>(*j));
    if (!seen.insert(key).second)
      throw ParseError("duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second), line_no);
    raw[{static_cast<int>(*i), static_cast<int>(*j)}] = m;
    raw[{static_cast<int>(*j), static_cast<int>(*i)}] = m;
  }
  if (!n) throw ParseError("missing 'vertices <N>' line", 0);
  return validate(raw, *n);
}

std::string serialize_cox(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << "edge " << e.i + 1 << ' ' << e.j + 1 << ' ' << e.m.to_string() << '\n';
  return os.str();
}

CoxeterGraph parse_symbol(std::string_view symbol) {
  std::string_view s = trim(symbol);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("symbol must be enclosed in [ ]", 0);
  s = s.substr(1, s.size() - 2);

  // Split on top-level commas only; braces hold branch lengths.
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '{') ++depth;
    if (i < s.size() && s[i] == '}') --depth;
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced braces in symbol", 0);

  const bool branched = parts.back().find('^') != std::string_view::npos;
  if (!branched) {
    std::vector<Weight> ws;
    for (auto p : parts) ws.push_back(symbol_weight(p));
    return from_linear_symbol(ws);
  }
  const std::vector<int> lens = branch_lengths(parts.back());
  if (parts.size() == 1) {
    if (lens.size() != 3) throw ParseError("[3^{a,b,c}] needs three branch lengths", 0);
    return star(lens);
  }
  if (parts.size() != 2 || lens.size() != 2) throw ParseError("only [p,3^{k,l}] and [3^{a,b,c}] are supported", 0);
  return y_shape(symbol_weight(parts[0]), lens[0], lens[1]);
}

}  // namespace coxgrowth
