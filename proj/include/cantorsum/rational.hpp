#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cantorsum {

/// Integer base p >= 2.
struct Radix {
  int64_t p;

  explicit Radix(int64_t p_) : p(p_) {
    if (p < 2) throw std::invalid_argument("radix must be an integer >= 2");
    if (p > INT32_MAX) throw std::invalid_argument("radix too large");
  }
};

/// Reduced fraction num/den with 1 < num/den < 2.
struct RationalAlpha {
  mpz_class num;
  mpz_class den;

  RationalAlpha(mpz_class num_, mpz_class den_)
      : num(std::move(num_)), den(std::move(den_)) {
    if (den <= 0 || num <= 0)
      throw std::invalid_argument("alpha must be a positive fraction");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    num /= g;
    den /= g;
    if (!(den < num && num < 2 * den))
      throw std::invalid_argument("alpha must lie in the open interval (1,2)");
  }

  /// Parses the CLI form "num/den".
  static RationalAlpha parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
      throw std::invalid_argument("rational must have the form num/den");
    mpz_class n, d;
    if (n.set_str(text.substr(0, slash), 10) != 0 ||
        d.set_str(text.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("rational must have the form num/den");
    return RationalAlpha(n, d);
  }

  mpq_class value() const {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  std::string str() const { return num.get_str() + "/" + den.get_str(); }

  bool operator==(const RationalAlpha& o) const {
    return num == o.num && den == o.den;
  }
};

}  // namespace cantorsum
