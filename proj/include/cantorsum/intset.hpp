#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cantorsum {

/// Membership bitmap for a set of integers in [0, bound]. Bit i of word
/// i/64 at position i%64; words little-endian on disk so serialized
/// bitmaps are byte-exact across platforms.
class IntSetBitmap {
 public:
  explicit IntSetBitmap(uint64_t bound);

  uint64_t bound() const { return bound_; }

  bool test(uint64_t i) const {
    return i <= bound_ && (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(uint64_t i);

  uint64_t count() const;
  uint64_t count_upto(uint64_t n) const;  // |S ∩ [0, n]|
  std::optional<uint64_t> max_member() const;
  std::optional<uint64_t> min_member() const;
  std::optional<uint64_t> next_member(uint64_t from) const;  // least >= from

  std::vector<uint64_t> members(size_t limit = SIZE_MAX) const;

  /// this |= (src << shift), clipped to [0, bound].
  void or_shifted(const IntSetBitmap& src, uint64_t shift);

  /// True iff {q + t : q in [lo, hi], q in S} is contained in S.
  /// Requires hi + t <= bound.
  bool shifted_range_subset(uint64_t lo, uint64_t hi, uint64_t t) const;

  bool operator==(const IntSetBitmap& o) const {
    return bound_ == o.bound_ && words_ == o.words_;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  // 16-byte header (magic "CSLB", u32 version, u64 bound LE) + raw words LE.
  std::vector<uint8_t> serialize() const;
  static IntSetBitmap deserialize(const std::vector<uint8_t>& bytes);
  void save(const std::string& path) const;
  static IntSetBitmap load(const std::string& path);

 private:
  uint64_t bound_;
  std::vector<uint64_t> words_;

  friend IntSetBitmap sumset(const IntSetBitmap&, const IntSetBitmap&,
                             uint64_t);
};

/// Open interval (left, right) of missing integers; both endpoints present.
struct Gap {
  uint64_t left;
  uint64_t right;
  uint64_t missing() const { return right - left - 1; }
  bool operator==(const Gap& o) const {
    return left == o.left && right == o.right;
  }
};

/// Subset sums of B clipped to [0, N], by iterated shift-or. Terms beyond N
/// cannot contribute below N and are skipped. 0 is always present.
IntSetBitmap fs_bitmap(const std::vector<uint64_t>& B, uint64_t N);
IntSetBitmap fs_bitmap(const std::vector<mpz_class>& B, uint64_t N);

/// {a + b : a in A, b in B} on [0, N]. Shift-or over the members of the
/// sparser operand, ascending, stopping early once [0, N] is full.
IntSetBitmap sumset(const IntSetBitmap& A, const IntSetBitmap& B, uint64_t N);

/// {a + t*b : a, b in A} on [0, N]; t >= 1.
IntSetBitmap scaled_sumset(const IntSetBitmap& A, uint64_t t, uint64_t N);

struct CoverResult {
  bool covered = false;
  uint64_t first_missing = 0;  // meaningful when !covered
};

/// Does A+B cover [0, hi]? Exact, with early exit in both directions: once
/// the iteration passes an unfilled position that position can never fill.
CoverResult sumset_covers(const IntSetBitmap& A, const IntSetBitmap& B,
                          uint64_t hi);

/// Maximal runs of absent integers strictly between members; absence past
/// the largest member is a truncation artifact, not a gap.
std::vector<Gap> gaps(const IntSetBitmap& S);

/// |S ∩ [0, N]| / (N+1), exact.
mpq_class density(const IntSetBitmap& S, uint64_t N);

enum class GapStatus { kOk, kViolated, kUnresolved };

struct GapCheck {
  Gap gap;
  uint64_t block_start = 0;  // alpha_i: left end of the gap-free block
  uint64_t shift = 0;        // t_i = right - block_start
  GapStatus status = GapStatus::kOk;
};

struct ShiftInvarianceReport {
  bool pass = true;  // no violated gap (unresolved gaps allowed)
  std::vector<GapCheck> checks;
  ptrdiff_t first_violation = -1;  // index into checks
  size_t unresolved = 0;
};

/// For each gap (b, g): take the largest left-adjacent interval [a, b] free
/// of gaps at least as long, set t = g - a, and require the block to
/// translate into the set and the gap to translate into a gap. Checks whose
/// image crosses the truncation bound are reported unresolved, not failed.
ShiftInvarianceReport piecewise_shift_invariant(const IntSetBitmap& S);

/// 1 + (exponent of 2 in k), k = 1..n. OEIS A001511.
std::vector<uint32_t> ruler_sequence(size_t n);

struct RulerCorrespondence {
  bool pass = false;
  std::vector<uint32_t> gap_indices;  // log3(gap length) + 1, left to right
};

/// Builds the level-l discrete middle-thirds set FS({2*3^i : i < l}) on
/// [0, 3^l - 1], maps each gap of length 3^(j-1) to index j, and compares
/// against the first 2^l - 1 ruler terms.
RulerCorrespondence gap_index_correspondence(uint32_t level);

}  // namespace cantorsum
