#ifndef COXGROWTH_COXFILE_HPP
#define COXGROWTH_COXFILE_HPP

#include <string>
#include <string_view>

#include "coxgrowth/graph.hpp"

namespace coxgrowth {

/// Parses the `.cox` text format:
///
///   # comment
///   vertices <N>
///   edge <i> <j> <m>     (1-based, i != j, m >= 3 or "inf")
///
/// Throws ParseError with the offending line number.
CoxeterGraph parse_cox(std::string_view text);

/// Canonical serialization: header line, then edges sorted by (i, j).
std::string serialize_cox(const CoxeterGraph& g);

/// Coxeter symbols: "[6,3,3]", "[inf]" (or "[∞]"), "[4,3^{2,1}]" and "[3^{a,b,c}]".
CoxeterGraph parse_symbol(std::string_view symbol);

}  // namespace coxgrowth

#endif  // COXGROWTH_COXFILE_HPP
