#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cantorsum/rational.hpp"

namespace cantorsum {

using Digits = std::vector<uint32_t>;

/// Base-p digits eta_0..eta_n of alpha in (1,2), by exact long division.
/// eta_0 = 1 always; terminating expansions stay terminated (greedy, no
/// trailing (p-1)-run convention).
Digits expand_rational(const RationalAlpha& alpha, Radix radix, size_t n);

/// eta_0 = 1, eta_1..eta_n i.i.d. uniform over {0,..,p-1} from mt19937_64
/// with rejection sampling, so identical (seed, p, n) is reproducible
/// bit-for-bit across platforms.
Digits random_stream(uint64_t seed, Radix radix, size_t n);

/// Running sums eta_0, eta_0+eta_1, ... ; empty input gives empty output.
std::vector<int64_t> digit_prefix_sums(const Digits& digits);

/// A digit source: exact rational or seeded pseudo-random. Immutable;
/// digits(n) is a pure function of the construction parameters.
class DigitStream {
 public:
  static DigitStream rational(RationalAlpha alpha, Radix radix) {
    return DigitStream(Source(std::move(alpha)), radix);
  }
  static DigitStream seeded(uint64_t seed, Radix radix) {
    return DigitStream(Source(seed), radix);
  }

  Digits digits(size_t n) const {
    if (const auto* a = std::get_if<RationalAlpha>(&source_))
      return expand_rational(*a, radix_, n);
    return random_stream(std::get<uint64_t>(source_), radix_, n);
  }

  int64_t p() const { return radix_.p; }
  Radix radix() const { return radix_; }
  bool is_rational() const {
    return std::holds_alternative<RationalAlpha>(source_);
  }
  const RationalAlpha* alpha() const {
    return std::get_if<RationalAlpha>(&source_);
  }
  uint64_t seed() const { return std::get<uint64_t>(source_); }

  /// "3/2" or "seed:42", for report provenance.
  std::string source_str() const {
    if (const auto* a = std::get_if<RationalAlpha>(&source_)) return a->str();
    return "seed:" + std::to_string(std::get<uint64_t>(source_));
  }

 private:
  using Source = std::variant<RationalAlpha, uint64_t>;
  DigitStream(Source s, Radix r) : source_(std::move(s)), radix_(r) {}

  Source source_;
  Radix radix_;
};

}  // namespace cantorsum
