#pragma once

// Enumeration of primitive hyperbolic conjugacy classes of PSL(2,Z) (modular
// knots) ordered by trace, with an exhaustive oracle and a bounded
// conjugacy search.

#include <cstdint>
#include <vector>

#include "modknot/sl2.hpp"

namespace modknot {

struct ClassRecord {
  LRNecklace necklace;
  Mat2 rep;  // word_to_matrix(necklace)
  SpectralData spectral;
};

/// Total order used for every enumeration output: (trace, necklace).
bool record_less(const ClassRecord& x, const ClassRecord& y);

/// Checks rep/spectral consistency, |trace| > 2 and aperiodicity.
/// Throws Error on the first violation.
void validate_record(const ClassRecord& r);

ClassRecord make_record(LRNecklace necklace);

struct EnumerationParams {
  std::int64_t trace_bound = 3;  // strict: keeps 2 < trace < trace_bound
  int worker_count = 1;
  int split_depth = 12;       // prefix length at which subtrees go to workers
  bool prune_by_trace = true;  // off: only the length bound |w| <= bound - 2 prunes
};

/// Exactly one record per primitive hyperbolic class with trace below the
/// bound, sorted by record_less. Output does not depend on worker_count.
std::vector<ClassRecord> enumerate_classes(const EnumerationParams& p);

inline constexpr std::int64_t kDefaultOracleGuard = 24;

/// Exhaustive oracle: canonicalizes every word of length <= bound - 2.
/// Throws Error(OracleBoundExceeded) above the guard.
std::vector<ClassRecord> brute_force_classes(std::int64_t trace_bound,
                                             std::int64_t guard = kDefaultOracleGuard);

/// Trace bound covering all classes with length < length_bound.
std::int64_t trace_bound_for_length(double length_bound);

/// All classes with 2 ln xi < length_bound, sorted by (length, necklace).
std::vector<ClassRecord> classes_by_length(double length_bound, int worker_count = 1);

/// Semi-decision: searches conjugators P given by freely reduced words of
/// length <= depth in L, R, L^-1, R^-1 with P M1 P^-1 = +-M2.
bool are_conjugate_oracle(const Mat2& m1, const Mat2& m2, int depth);

}  // namespace modknot
