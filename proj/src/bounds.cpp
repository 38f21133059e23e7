#include "lenstc/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lenstc/padic.hpp"

namespace lenstc {

std::uint32_t fibration_upper_rules(std::uint32_t tc_fiber,
                                    std::uint32_t cat_base_sq) {
  if (tc_fiber == 0 || cat_base_sq == 0)
    throw std::invalid_argument("TC(F) and cat(BxB) must be positive");
  return tc_fiber * cat_base_sq;
}

UpperBound upper_bound(LensParams params) {
  const std::uint32_t n = params.n;
  UpperBound out;
  out.certificate.rule = "fibration S^1 -> L -> CP^n";
  out.certificate.tc_fiber = 2;
  out.certificate.cat_base_sq = 2 * n + 1;
  out.certificate.constants_citation =
      "TC(S^1) = 2 [Farber 2003]; cat(CP^n x CP^n) = 2n+1";
  out.certificate.dimension_rule_bound = 2 * params.dim() + 1;
  out.value = std::min(
      fibration_upper_rules(out.certificate.tc_fiber,
                            out.certificate.cat_base_sq),
      out.certificate.dimension_rule_bound);
  return out;
}

static ExactnessConditions evaluate_conditions(LensParams params) {
  ExactnessConditions c;
  std::uint32_t m = params.m, n = params.n;

  for (std::uint32_t p = 2; p <= m; ++p) {
    if (!is_prime(p) || m % p) continue;
    std::uint64_t a = alpha_p(p, n);
    std::uint64_t pw = 1;
    bool divides = true;
    for (std::uint64_t i = 0; i <= a; ++i) {
      pw *= p;
      if (pw > m) {
        divides = false;
        break;
      }
    }
    if (divides && m % pw == 0) c.a = true;
  }

  if (m % 2 == 1 && is_prime(m)) {
    c.b = true;
    for (auto d : expand(m, n).digits)
      if (2u * d > m - 1) c.b = false;
  }

  if (std::has_single_bit(m)) {
    std::uint32_t r = static_cast<std::uint32_t>(std::bit_width(m)) - 1;
    c.c = std::popcount(n) + 1 <= r;  // alpha(n) <= r - 1
  }
  return c;
}

TCBoundReport tc_report(LensParams params) {
  TCBoundReport report;
  report.params = params;

  report.lower_certificate = weighted_lower_bound(params);
  std::uint32_t weighted = report.lower_certificate.bound();

  auto gens = canonical_zero_divisors(params);
  report.unweighted =
      unweighted_cup_length(params, gens, 2 * params.dim());
  std::uint32_t unweighted = report.unweighted.length + 1;

  report.lower = std::max({weighted, unweighted, 2u});
  report.notes.push_back(weighted >= unweighted
                             ? "lower bound from weighted cup-length"
                             : "lower bound from unweighted cup-length");

  UpperBound ub = upper_bound(params);
  report.upper = ub.value;
  report.upper_certificate = ub.certificate;

  if (report.lower == report.upper) report.exact = report.lower;

  report.conditions = evaluate_conditions(params);
  if (report.conditions.any() && report.exact != 4 * params.n + 2)
    throw InternalConsistencyError(
        "exactness condition fired but the computed bounds do not close");

  if (params.m == 2) {
    report.notes.push_back(
        "L_2^{2n+1} = RP^{2n+1}: sharper values are known externally "
        "[Farber-Tabachnikov-Yuzvinsky 2003]" +
        std::string(params.n == 1 ? "; TC(RP^3) = 4" : ""));
  }
  return report;
}

TCBoundReport tc_report(std::uint32_t m, std::uint32_t n) {
  return tc_report(LensParams::make(m, n));
}

static void check_ranges(Range m_range, Range n_range) {
  if (m_range.lo > m_range.hi || n_range.lo > n_range.hi)
    throw std::invalid_argument("empty range");
  if (m_range.lo < 2) throw std::invalid_argument("m must be at least 2");
}

std::vector<TCBoundReport> tc_table_serial(Range m_range, Range n_range) {
  check_ranges(m_range, n_range);
  std::vector<TCBoundReport> out;
  out.reserve(static_cast<std::size_t>(m_range.size()) * n_range.size());
  for (std::uint32_t m = m_range.lo; m <= m_range.hi; ++m)
    for (std::uint32_t n = n_range.lo; n <= n_range.hi; ++n)
      out.push_back(tc_report(m, n));
  return out;
}

std::vector<TCBoundReport> tc_table(Range m_range, Range n_range) {
  check_ranges(m_range, n_range);
  const std::int64_t rows =
      static_cast<std::int64_t>(m_range.size()) * n_range.size();
  std::vector<TCBoundReport> out(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < rows; ++i) {
    std::uint32_t m = m_range.lo + static_cast<std::uint32_t>(i) / n_range.size();
    std::uint32_t n = n_range.lo + static_cast<std::uint32_t>(i) % n_range.size();
    out[static_cast<std::size_t>(i)] = tc_report(m, n);
  }
  return out;
}

}  // namespace lenstc
