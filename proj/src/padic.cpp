#include "lenstc/padic.hpp"

#include <algorithm>

namespace lenstc {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

static void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

std::uint64_t PAdicExpansion::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p + *it;
  return v;
}

PAdicExpansion expand(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  PAdicExpansion e{p, {}};
  while (n > 0) {
    e.digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return e;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  std::uint64_t sum = 0;
  while (n > 0) {
    n /= p;
    sum += n;
  }
  return sum;
}

// Positions where adding n and m in base p produces a carry.
static std::vector<std::size_t> kummer_carries(std::uint64_t p,
                                               const PAdicExpansion& a,
                                               const PAdicExpansion& b) {
  std::vector<std::size_t> positions;
  std::size_t len = std::max(a.digits.size(), b.digits.size());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t s = a.digit(i) + b.digit(i) + carry;
    carry = s >= p ? 1 : 0;
    if (carry) positions.push_back(i);
  }
  return positions;
}

// Count of indices i with n_i + m_i >= p, or with a digit-sum run
// n_i + m_i = ... = n_{i-r} + m_{i-r} = p-1 ending in n_{i-r-1} + m_{i-r-1} >= p.
static std::uint64_t digit_condition_count(std::uint64_t p,
                                           const PAdicExpansion& a,
                                           const PAdicExpansion& b) {
  std::size_t len = std::max(a.digits.size(), b.digits.size());
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t s = a.digit(i) + b.digit(i);
    if (s >= p) {
      ++count;
      continue;
    }
    if (s == p - 1) {
      // Walk down through the run of digit-sums equal to p-1.
      std::size_t j = i;
      while (j > 0 && a.digit(j - 1) + b.digit(j - 1) == p - 1) --j;
      if (j > 0 && a.digit(j - 1) + b.digit(j - 1) >= p) ++count;
    }
  }
  return count;
}

ValuationCertificate binomial_valuation(std::uint64_t p, std::uint64_t n,
                                        std::uint64_t m) {
  require_prime(p);
  PAdicExpansion a = expand(p, n);
  PAdicExpansion b = expand(p, m);

  ValuationCertificate cert{p, n, m, 0, kummer_carries(p, a, b)};
  cert.valuation = cert.carry_positions.size();

  std::uint64_t legendre = legendre_valuation(p, n + m) -
                           legendre_valuation(p, n) - legendre_valuation(p, m);
  std::uint64_t conditions = digit_condition_count(p, a, b);
  if (cert.valuation != legendre || cert.valuation != conditions)
    throw InternalConsistencyError("binomial_valuation: methods disagree");
  return cert;
}

std::uint64_t alpha_p(std::uint64_t p, std::uint64_t n) {
  require_prime(p);
  PAdicExpansion e = expand(p, n);
  if (p == 2) {
    return std::count(e.digits.begin(), e.digits.end(), 1u);
  }
  std::uint32_t half = static_cast<std::uint32_t>((p - 1) / 2);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (2ull * e.digit(i) < p) continue;
    // r_i = 1 + length of the run of digits equal to (p-1)/2 above i.
    // Digits past the stored expansion are 0 and terminate the run.
    std::uint64_t r = 1;
    for (std::size_t j = i + 1; e.digit(j) == half; ++j) ++r;
    sum += r;
  }
  return sum;
}

}  // namespace lenstc
