#include "cantorsum/digit_stream.hpp"

#include <limits>
#include <random>

namespace cantorsum {

Digits expand_rational(const RationalAlpha& alpha, Radix radix, size_t n) {
  Digits out;
  out.reserve(n + 1);
  out.push_back(1);
  mpz_class rem = alpha.num - alpha.den;  // fractional part, scaled by den
  mpz_class scaled, q;
  for (size_t i = 1; i <= n; ++i) {
    scaled = rem * radix.p;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                alpha.den.get_mpz_t());
    out.push_back(static_cast<uint32_t>(q.get_ui()));
  }
  return out;
}

Digits random_stream(uint64_t seed, Radix radix, size_t n) {
  Digits out;
  out.reserve(n + 1);
  out.push_back(1);
  std::mt19937_64 rng(seed);
  const uint64_t p = static_cast<uint64_t>(radix.p);
  // Largest multiple of p below 2^64; draws above it are rejected so the
  // residues stay exactly uniform.
  const uint64_t bound = (std::numeric_limits<uint64_t>::max() / p) * p;
  for (size_t i = 1; i <= n; ++i) {
    uint64_t r = rng();
    while (r >= bound) r = rng();
    out.push_back(static_cast<uint32_t>(r % p));
  }
  return out;
}

std::vector<int64_t> digit_prefix_sums(const Digits& digits) {
  std::vector<int64_t> sums;
  sums.reserve(digits.size());
  int64_t acc = 0;
  for (uint32_t d : digits) {
    acc += d;
    sums.push_back(acc);
  }
  return sums;
}

}  // namespace cantorsum
