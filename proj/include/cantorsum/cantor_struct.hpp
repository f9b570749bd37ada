#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cantorsum/intset.hpp"

namespace cantorsum {

enum class PrefixFamily { kP1, kP2, kP3, kP4 };

/// Prefix pattern parameters: P1 = {0,1,k} (k>2), P2 = {0..3,k} (k>4),
/// P3 = {0..7,k} (k>8), P4 = {0..r,k} (r>=10, k>r+1).
struct PrefixSpec {
  PrefixFamily family;
  uint64_t k;
  uint64_t r;  // P4 only

  PrefixSpec(PrefixFamily f, uint64_t k_, uint64_t r_ = 0);

  /// Largest member of the interval part of the prefix (2, 3, 7, or r).
  uint64_t interval_top() const;
};

/// Generators whose subset sums realize the prefix exactly: the interval
/// part on [0, k-1] plus k itself. Zeros contribute nothing to subset sums
/// and are never emitted.
std::vector<uint64_t> construct_generators(const PrefixSpec& spec);

/// The interval-coverage margin test from the P4 construction:
/// C(n+1,2) - n >= C(n+2,2) - C(n+1,2), exact integer arithmetic.
bool check_prefix_condition(uint64_t n);

/// FS(B) on [0, k] must be exactly {0..interval_top} followed by the gap
/// and then k itself.
bool prefix_realized(const PrefixSpec& spec, const std::vector<uint64_t>& B);

struct SuperIncreasingCheck {
  bool pass = true;
  size_t first_violation = 0;  // 1-based element index; 0 when pass
};

/// Every element must strictly exceed the sum of its predecessors, and the
/// first element must be 1.
SuperIncreasingCheck superincreasing(const std::vector<uint64_t>& B);

struct CantorTypeCheck {
  bool pass = false;
  ShiftInvarianceReport shift_invariance;
  bool decomposition_ok = false;  // FS(b1..bj) = FS(b1..b_{j-1}) + {0,bj}
  std::optional<size_t> decomposition_fail_depth;
};

/// Structural checks on FS(B) over [0, N]: piecewise shift invariance
/// (unresolved boundary gaps excluded) and the depth-by-depth sumset
/// decomposition identity.
CantorTypeCheck cantor_type_check(const std::vector<uint64_t>& B, uint64_t N);

/// cantor_type_check behind the super-increasing precondition; throws
/// std::invalid_argument when the precondition fails.
CantorTypeCheck verify_converse(const std::vector<uint64_t>& B, uint64_t N);

struct RecoveredGenerators {
  std::vector<uint64_t> generators;
  uint64_t resolvable_bound = 0;
  bool validated = false;
  std::optional<uint64_t> first_mismatch;
};

/// Greedy recovery: repeatedly adopt the least member not yet representable
/// as a subset sum of the generators found so far, then validate
/// FS(recovered) against A on [0, bound]. Validation failure certifies that
/// A is not greedily representable at this truncation.
RecoveredGenerators recover_generators(const IntSetBitmap& A);

}  // namespace cantorsum
