#pragma once

#include <cstdint>
#include <vector>

#include "cantorsum/digit_stream.hpp"

namespace cantorsum {

/// Whether a table carries the full big-integer terms. The terms grow like
/// p^n, so deep tables (n ~ 10^6) track only the delta sequence, with the
/// defining identity delta_k = x_k - (p-1)*s_{k-1} spot-checked modulo two
/// fixed 61/62-bit primes at every index.
enum class TermPolicy { kMaterialize, kDeltasOnly };

/// Terms x_k = floor(p^k * alpha), partial sums s_k, and
/// delta_k = x_k - (p-1)*s_{k-1} (with s_{-1} = 0, so delta_0 = x_0 = 1).
struct GeneratorTable {
  int64_t p = 2;
  size_t n = 0;
  TermPolicy policy = TermPolicy::kMaterialize;
  std::string source;  // "num/den" or "seed:..."

  Digits digits;                 // eta_0..eta_n
  std::vector<mpz_class> x;      // materialized only
  std::vector<mpz_class> s;      // materialized only; s[k] = x_0+..+x_k
  std::vector<int64_t> delta;    // delta_0..delta_n

  // kDeltasOnly integrity result of the modular identity check.
  bool mod_ok = true;
  ptrdiff_t mod_first_fail = -1;

  bool materialized() const { return policy == TermPolicy::kMaterialize; }

  /// Sum of x over a set of distinct indices in [0, n]. Materialized only.
  mpz_class subset_sum(const std::vector<size_t>& indices) const;

  /// Terms <= bound, as machine words, for the bitset engine.
  std::vector<uint64_t> terms_upto(uint64_t bound) const;
};

GeneratorTable build_table(const DigitStream& stream, size_t n,
                           TermPolicy policy = TermPolicy::kMaterialize);

struct DeltaIdentityCheck {
  bool pass = true;
  ptrdiff_t first_fail = -1;  // -1 when pass
};

/// Checks delta_k == eta_0 + ... + eta_k for every k <= n. For materialized
/// tables the deltas were computed from the big-integer definition, so this
/// compares two independent routes; for delta-only tables it additionally
/// folds in the modular identity result.
DeltaIdentityCheck verify_delta_identity(const GeneratorTable& table);

/// floor(p^n * num/den) by direct big-integer arithmetic, independent of the
/// recursion x_{k+1} = p*x_k + eta_{k+1}.
mpz_class floor_power_oracle(const RationalAlpha& alpha, Radix radix,
                             size_t n);

/// {0..n} minus the given index set. Throws std::out_of_range on indices
/// beyond n and std::invalid_argument on duplicates.
std::vector<size_t> complement_in_prefix(const std::vector<size_t>& subset,
                                         size_t n);

/// All terms floor(p^k * alpha) that fit in [1, bound], ascending.
std::vector<uint64_t> generator_terms_upto(const DigitStream& stream,
                                           uint64_t bound);

}  // namespace cantorsum
