#ifndef LENSTC_WEIGHTS_HPP
#define LENSTC_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenstc/cohomology.hpp"
#include "lenstc/operations.hpp"

namespace lenstc {

/// A zero-divisor together with a certified lower bound on its TC-weight.
struct WeightedClass {
  TensorElement element;
  std::uint32_t weight = 1;
  std::string provenance;
  std::optional<WeightCertificate> certificate;

  bool operator==(const WeightedClass&) const = default;
};

struct CupLengthResult {
  std::uint32_t length = 0;
  std::uint32_t weighted_sum = 0;
  std::vector<WeightedClass> witness;
  TensorElement product;

  bool operator==(const CupLengthResult&) const = default;
};

// C(n, k) reduced mod m by exact big-integer arithmetic.
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t m);

// Whether m divides C(k+l, k); checked both by big-integer reduction and
// by prime-power valuations of m, which must agree.
bool binomial_divisible(std::uint32_t m, std::uint32_t k, std::uint32_t l);

// bar(x) with weight 1 and, for n >= 1, bar(y) with weight 2 certified by
// the Bockstein excess. With widened scope, bar(u) with weight 1 for every
// remaining basis monomial of positive degree.
std::vector<WeightedClass> canonical_zero_divisors(LensParams params,
                                                   bool widened = false);

/// Best pair (k, l) with 0 <= k, l <= n and m not dividing C(k+l, k),
/// maximizing k+l; the witness bar(x)*bar(y)^{k+l} is verified nonzero by
/// multiplication. bound() = weighted_sum + 1 = 2(k+l) + 2.
struct WeightedLowerBound {
  CupLengthResult result;
  std::uint32_t k = 0;
  std::uint32_t l = 0;

  std::uint32_t bound() const { return result.weighted_sum + 1; }
  bool operator==(const WeightedLowerBound&) const = default;
};

WeightedLowerBound weighted_lower_bound(LensParams params);

// Longest nonzero product of the generators (repetition allowed), searched
// exhaustively over multisets with degree pruning.
CupLengthResult unweighted_cup_length(LensParams params,
                                      const std::vector<WeightedClass>& gens,
                                      std::uint32_t max_len);

// Coefficient of (y^k, y^l) in bar(y)^{k+l}; equals (-1)^k C(k+l,k) mod m.
std::uint32_t verify_binomial_term(LensParams params, std::uint32_t k,
                                   std::uint32_t l);

}  // namespace lenstc

#endif
