#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cantorsum/ap.hpp"
#include "cantorsum/generator.hpp"
#include "cantorsum/intset.hpp"

namespace cantorsum {

/// The descending values y_k = s_n - delta_k, k = 1..n, each of which
/// decomposes as (s_n - x_k) + (p-1)*s_{k-1} and so lies in C + (p-1)C.
/// The kept subsequence drops indices with a zero digit, leaving
/// consecutive differences in [1, p-1].
struct YSequence {
  size_t n = 0;
  int64_t p = 2;
  std::vector<int64_t> delta;      // delta_0..delta_n
  std::optional<mpz_class> s_n;    // materialized tables only
  std::vector<size_t> kept;        // ascending k in [1, n] with eta_k != 0

  size_t m() const { return kept.size(); }

  mpz_class y(size_t k) const {
    if (k < 1 || k > n || !s_n) throw std::out_of_range("y index");
    return *s_n - delta[k];
  }

  /// Smallest kept value is s_n - anchor_delta().
  int64_t anchor_delta() const { return kept.empty() ? 0 : delta[kept.back()]; }

  /// Kept values as ascending offsets above the smallest one; consecutive
  /// steps are the nonzero digits, so they lie in [1, p-1].
  std::vector<int64_t> kept_offsets_ascending() const;
};

YSequence y_sequence(const GeneratorTable& table, size_t n);

struct YMembershipReport {
  bool pass = true;
  size_t checked = 0;
  ptrdiff_t first_fail = -1;          // k of the first failing value
  std::vector<uint8_t> per_k;         // index 0 <-> k = 1
};

/// Checks, for each k <= n, that y_k lands in the bitset of
/// FS(B) + (p-1)*FS(B) on [0, N] and that its constructive decomposition
/// w + (p-1)*s_{k-1} with w = s_n - x_k has both summands in FS(B).
/// Throws std::invalid_argument ("bound too small") when s_n > N.
YMembershipReport verify_y_membership(const GeneratorTable& table, size_t n,
                                      uint64_t N);

struct APContentReport {
  int64_t p = 2;
  size_t n = 0;
  size_t m = 0;
  double ratio = 0.0;      // m / n
  double predicted = 0.0;  // (p-1)/p
  uint32_t K = 1;
  bool has_ap = false;
  BoundedGapExtract extraction;  // in kept-offset coordinates
  int64_t anchor_delta = 0;      // smallest kept value = s_n - anchor_delta
  std::optional<mpz_class> ap_start_absolute;  // materialized tables only
};

/// Full pipeline: digits -> delta table -> kept subsequence -> bounded-gap
/// AP extraction with K = p-1. Deep runs use TermPolicy::kDeltasOnly and
/// report the progression in offset coordinates.
APContentReport ap_content_pipeline(const DigitStream& stream, size_t n,
                                    TermPolicy policy,
                                    const VdwTable& table,
                                    bool certified_only = false);

struct SumsetCoverReport {
  bool pass = false;
  uint64_t first_missing = 0;  // meaningful when !pass
  size_t depth = 0;
  uint64_t s_n = 0;
  uint64_t bound = 0;
};

/// Base-2 doubling check: FS(B) + FS(B) must cover [0, s_n] with B built to
/// depth n. Throws std::invalid_argument when the stream is not base 2 or
/// the bound is too small for s_n.
SumsetCoverReport verify_sumset_cover(const DigitStream& stream, size_t n,
                                      std::optional<uint64_t> bound = {});

/// Decomposition x = u + v with explicit generator index sets; the two
/// sides are independent subset sums and may share an index.
struct SumWitness {
  mpz_class x, u, v;
  std::vector<size_t> left;   // indices summing to u
  std::vector<size_t> right;  // indices summing to v
};

/// Constructive witness for x in FS(B)+FS(B), base 2: greedy one-sided
/// representation when x is itself a subset sum, else the inductive
/// gap-filling construction. Throws "no witness at this depth" when
/// x > s_n for the table's depth.
SumWitness witness_decompose(const mpz_class& x, const GeneratorTable& table);

struct DensityRow {
  uint64_t scale = 0;
  mpq_class base;                 // density of FS(B) on [0, scale]
  std::optional<mpq_class> sum;   // density of FS(B) + t*FS(B), when asked
};

struct DensityReport {
  int64_t p = 2;
  uint64_t N = 0;
  std::optional<uint64_t> t;
  std::vector<DensityRow> rows;               // at N/100, N/10, N
  std::optional<mpq_class> predicted_base;    // 1/alpha for rational sources
};

DensityReport density_report(const DigitStream& stream,
                             std::optional<uint64_t> t, uint64_t N);

}  // namespace cantorsum
