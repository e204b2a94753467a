#ifndef COXGROWTH_REPLAY_HPP
#define COXGROWTH_REPLAY_HPP

#include <string>
#include <vector>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/poly.hpp"

namespace coxgrowth {

struct Check {
  std::string id;
  bool passed = false;
  std::string computed;
  std::string expected;
  /// "published" for printed values, "derived" for values obtained by an
  /// independent computation.
  std::string provenance;
  /// Set when a discrepancy is reported without failing the check.
  std::string note;
  double elapsed_ms = 0;
};

struct ReplayReport {
  std::vector<Check> checks;
  bool passed() const;
};

struct ReplayOptions {
  Rational eps = default_epsilon();
  ExponentTable table;
  /// 0 picks COXGROWTH_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
};

/// Ids of the checks in report order.
const std::vector<std::string>& replay_check_ids();

/// Runs every verification check; report order is fixed.
ReplayReport replay(const ReplayOptions& options = {});

/// Runs a single check by id; throws InvalidArgument for unknown ids.
Check replay_check(const std::string& id, const ReplayOptions& options = {});

/// Order-n+1 quasi-Lanner census sizes used to cross-check the simplex corpus.
int census_count(int n);

}  // namespace coxgrowth

#endif  // COXGROWTH_REPLAY_HPP
