#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "harmsum/errors.hpp"
#include "harmsum/rational.hpp"

namespace harmsum {

/// H_n = 1 + 1/2 + ... + 1/n, exactly. Throws domain_error for n = 0.
inline ExactRational harmonic(unsigned long n) {
  if (n == 0) throw domain_error("harmonic: n must be >= 1");
  // num/den over the common denominator n!, reduced once at the end.
  BigInt num = 0, den = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    num = num * k + den;
    den *= k;
  }
  return ExactRational(num, den);
}

/// C(2n, n).
inline BigInt central_binomial(unsigned long n) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace detail {

// B_0..B_m with B_1 = -1/2, grown on demand. Readers get an immutable snapshot.
class BernoulliTable {
 public:
  static std::shared_ptr<const std::vector<ExactRational>> upto(std::size_t m) {
    static BernoulliTable table;
    std::lock_guard lock(table.mu_);
    if (!table.values_ || table.values_->size() <= m) {
      auto grown = std::make_shared<std::vector<ExactRational>>(table.values_ ? *table.values_
                                                                              : std::vector<ExactRational>{});
      extend(*grown, std::max<std::size_t>(m + 1, 2 * (grown->size())));
      table.values_ = std::move(grown);
    }
    return table.values_;
  }

 private:
  // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1.
  static void extend(std::vector<ExactRational>& b, std::size_t count) {
    if (b.empty()) b.emplace_back(1);
    for (std::size_t j = b.size(); j < count; ++j) {
      if (j > 1 && j % 2 == 1) {
        b.emplace_back(0);
        continue;
      }
      ExactRational acc(0);
      BigInt binom = 1;  // C(j+1, k)
      for (std::size_t k = 0; k < j; ++k) {
        if (!(k > 1 && k % 2 == 1)) acc += ExactRational(binom) * b[k];
        binom = binom * static_cast<unsigned long>(j + 1 - k) / static_cast<unsigned long>(k + 1);
      }
      b.push_back(-acc / ExactRational(static_cast<long>(j + 1)));
    }
  }

  std::mutex mu_;
  std::shared_ptr<const std::vector<ExactRational>> values_;
};

}  // namespace detail

/// Bernoulli number B_m (B_1 = -1/2 convention).
inline ExactRational bernoulli(std::size_t m) { return (*detail::BernoulliTable::upto(m))[m]; }

}  // namespace harmsum
