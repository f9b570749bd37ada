#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cantorsum {

/// Arithmetic progression start, start+diff, ..., start+(length-1)*diff.
/// Singletons carry diff = 1 by convention.
struct APWitness {
  int64_t start = 0;
  int64_t diff = 1;
  uint64_t length = 0;
};

/// True iff every term of the progression appears in the sorted list Z.
bool ap_contained(const APWitness& ap, const std::vector<int64_t>& Z);

/// Longest AP inside Z (strictly increasing), by dynamic programming over
/// pairs. Ties prefer smaller diff, then smaller start.
APWitness longest_ap(const std::vector<int64_t>& Z);

enum class Provenance { kExhaustive, kLiterature };

struct VdwEntry {
  uint32_t s = 1;
  uint32_t k = 1;
  uint64_t W = 1;
  Provenance prov = Provenance::kExhaustive;
};

struct InverseVdw {
  uint64_t length = 1;
  bool table_limited = false;  // true when W(s, length+1) is unknown here
};

/// Known van der Waerden numbers: the exact families W(1,k)=k, W(s,1)=1,
/// W(s,2)=s+1, the searched W(2,3)=9, and literature values flagged as
/// such (never used by acceptance checks). Extra entries load from a JSON
/// file (schema: [{"s":..,"k":..,"W":..,"provenance":"literature"}]).
class VdwTable {
 public:
  static const VdwTable& builtin();
  static VdwTable with_extra_file(const std::string& json_path);
  /// Honors CSL_TABLE_PATH when set, else the builtin table.
  static VdwTable from_env();

  std::optional<VdwEntry> lookup(uint32_t s, uint32_t k,
                                 bool certified_only) const;

  /// Largest k with a known W(s,k) <= N: the AP length guaranteed by every
  /// s-coloring of [1, N]. table_limited marks a bare lower bound.
  InverseVdw inverse(uint32_t s, uint64_t N, bool certified_only = false) const;

  const std::vector<VdwEntry>& entries() const { return entries_; }

 private:
  std::vector<VdwEntry> entries_;  // explicit entries only; families computed
};

struct VdwCertificate {
  uint32_t s = 0;
  uint32_t k = 0;
  uint64_t W = 0;
  std::vector<uint8_t> witness;  // coloring of [1, W-1] with no mono k-AP
  bool verified = false;         // exhaustion proved no coloring of [1, W]
  uint64_t nodes = 0;            // search nodes visited
};

/// Determines W(s,k) by backtracking: finds a witness coloring of [1, W-1]
/// and exhausts all colorings of [1, W]. Throws when the search exceeds the
/// node budget ("infeasible at desk scale").
VdwCertificate vdw_search(uint32_t s, uint32_t k,
                          uint64_t node_budget = 200'000'000);

/// True iff the coloring (values 0..s-1 over positions 1..N) has no
/// monochromatic k-term AP. Independent scanner used to validate witnesses.
bool coloring_has_no_mono_ap(const std::vector<uint8_t>& coloring, uint32_t k);

struct BoundedGapExtract {
  APWitness ap;
  uint64_t target_length = 1;  // inverse vdW guarantee that was searched for
  bool table_limited = false;
  uint32_t color = 0;  // residue class the blocks agreed on
};

/// Constructive AP extraction from a sequence with consecutive differences
/// in [1, K]: color block i of width K by the offset of its first element,
/// find a monochromatic AP of the guaranteed length among the block
/// colors, and translate it back into Z. Throws std::invalid_argument when
/// the gap bound is violated (message names the first offender).
BoundedGapExtract bounded_gap_ap_extract(const std::vector<int64_t>& Z,
                                         uint32_t K, const VdwTable& table,
                                         bool certified_only = false);

/// m integers starting at 0 with steps drawn uniformly from [1, K]
/// (mt19937_64), for seeded bounded-gap test sets.
std::vector<int64_t> random_bounded_gap_set(uint64_t seed, uint32_t K,
                                            size_t m);

}  // namespace cantorsum
