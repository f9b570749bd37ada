#include "cantorsum/generator.hpp"

#include <stdexcept>

namespace cantorsum {

namespace {

// Two large primes for the delta-only integrity check.
constexpr uint64_t kMod1 = (uint64_t(1) << 61) - 1;
constexpr uint64_t kMod2 = (uint64_t(1) << 62) - 57;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

}  // namespace

mpz_class GeneratorTable::subset_sum(const std::vector<size_t>& indices) const {
  if (!materialized())
    throw std::logic_error("subset_sum requires a materialized table");
  mpz_class acc = 0;
  for (size_t i : indices) {
    if (i > n) throw std::out_of_range("index beyond table depth");
    acc += x[i];
  }
  return acc;
}

std::vector<uint64_t> GeneratorTable::terms_upto(uint64_t bound) const {
  if (!materialized())
    throw std::logic_error("terms_upto requires a materialized table");
  std::vector<uint64_t> out;
  for (const mpz_class& t : x) {
    if (t > bound) break;
    out.push_back(t.get_ui());
  }
  return out;
}

GeneratorTable build_table(const DigitStream& stream, size_t n,
                           TermPolicy policy) {
  GeneratorTable t;
  t.p = stream.p();
  t.n = n;
  t.policy = policy;
  t.source = stream.source_str();
  t.digits = stream.digits(n);
  t.delta.resize(n + 1);
  t.delta[0] = 1;  // delta_0 = x_0 = eta_0

  if (policy == TermPolicy::kMaterialize) {
    t.x.resize(n + 1);
    t.s.resize(n + 1);
    t.x[0] = 1;
    t.s[0] = 1;
    mpz_class d;
    for (size_t k = 1; k <= n; ++k) {
      t.x[k] = t.x[k - 1] * t.p + t.digits[k];
      t.s[k] = t.s[k - 1] + t.x[k];
      d = t.x[k] - (t.p - 1) * t.s[k - 1];
      if (!d.fits_slong_p())
        throw std::overflow_error("delta exceeds machine range");
      t.delta[k] = d.get_si();
    }
  } else {
    const uint64_t p = static_cast<uint64_t>(t.p);
    uint64_t x1 = 1, s1 = 0, x2 = 1, s2 = 0;  // s holds s_{k-1}
    for (size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        t.delta[k] = t.delta[k - 1] + t.digits[k];
        x1 = (mulmod(x1, p, kMod1) + t.digits[k]) % kMod1;
        x2 = (mulmod(x2, p, kMod2) + t.digits[k]) % kMod2;
      }
      uint64_t d1 = submod(x1, mulmod((p - 1) % kMod1, s1, kMod1), kMod1);
      uint64_t d2 = submod(x2, mulmod((p - 1) % kMod2, s2, kMod2), kMod2);
      uint64_t want = static_cast<uint64_t>(t.delta[k]);
      if (t.mod_ok && (d1 != want % kMod1 || d2 != want % kMod2)) {
        t.mod_ok = false;
        t.mod_first_fail = static_cast<ptrdiff_t>(k);
      }
      s1 = (s1 + x1) % kMod1;
      s2 = (s2 + x2) % kMod2;
    }
  }
  return t;
}

DeltaIdentityCheck verify_delta_identity(const GeneratorTable& table) {
  int64_t acc = 0;
  for (size_t k = 0; k <= table.n; ++k) {
    acc += table.digits[k];
    if (table.delta[k] != acc)
      return {false, static_cast<ptrdiff_t>(k)};
  }
  if (table.policy == TermPolicy::kDeltasOnly && !table.mod_ok)
    return {false, table.mod_first_fail};
  return {true, -1};
}

mpz_class floor_power_oracle(const RationalAlpha& alpha, Radix radix,
                             size_t n) {
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(radix.p),
                static_cast<unsigned long>(n));
  pw *= alpha.num;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), pw.get_mpz_t(), alpha.den.get_mpz_t());
  return q;
}

std::vector<uint64_t> generator_terms_upto(const DigitStream& stream,
                                           uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 1) return out;
  // p >= 2 doubles the term each step, so 128 digits always suffice for
  // 64-bit bounds.
  Digits d = stream.digits(128);
  mpz_class x = 1;
  for (size_t k = 0; k < 128; ++k) {
    if (k > 0) x = x * stream.p() + d[k];
    if (x > bound) break;
    out.push_back(x.get_ui());
  }
  return out;
}

std::vector<size_t> complement_in_prefix(const std::vector<size_t>& subset,
                                         size_t n) {
  std::vector<bool> in(n + 1, false);
  for (size_t i : subset) {
    if (i > n) throw std::out_of_range("subset index beyond prefix");
    if (in[i]) throw std::invalid_argument("duplicate index in subset");
    in[i] = true;
  }
  std::vector<size_t> out;
  out.reserve(n + 1 - subset.size());
  for (size_t i = 0; i <= n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace cantorsum
