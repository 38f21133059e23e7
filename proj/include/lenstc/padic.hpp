#ifndef LENSTC_PADIC_HPP
#define LENSTC_PADIC_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lenstc {

struct InternalConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t p);

/// Base-p digit expansion, least-significant digit first.
/// Canonical form: no trailing zero digits, value 0 has no digits.
struct PAdicExpansion {
  std::uint64_t p = 2;
  std::vector<std::uint32_t> digits;

  std::uint64_t value() const;

  // Digit at index i, reading past the stored expansion as 0.
  std::uint32_t digit(std::size_t i) const {
    return i < digits.size() ? digits[i] : 0;
  }

  bool operator==(const PAdicExpansion&) const = default;
};

// Throws std::invalid_argument if p is not prime.
PAdicExpansion expand(std::uint64_t p, std::uint64_t n);

// Exponent of p in n! via the floor-sum identity.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

/// v_p(C(n+m, n)) together with the base-p carry positions of n + m.
struct ValuationCertificate {
  std::uint64_t p = 2;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t valuation = 0;
  std::vector<std::size_t> carry_positions;
};

// Computes the valuation three independent ways (Legendre difference,
// carry counting, digit-condition count) and throws InternalConsistencyError
// if they disagree.
ValuationCertificate binomial_valuation(std::uint64_t p, std::uint64_t n,
                                        std::uint64_t m);

// Carry-chain count of the base-p digits of n; equals v_p(C(2n, n)).
// For p = 2 this is the number of ones in the binary expansion.
std::uint64_t alpha_p(std::uint64_t p, std::uint64_t n);

}  // namespace lenstc

#endif
