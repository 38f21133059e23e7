#ifndef LENSTC_BOUNDS_HPP
#define LENSTC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenstc/weights.hpp"

namespace lenstc {

struct UpperBoundCertificate {
  std::string rule;              // rule that produced the bound
  std::uint32_t tc_fiber = 0;    // TC(S^1)
  std::uint32_t cat_base_sq = 0; // cat(CP^n x CP^n)
  std::string constants_citation;
  std::uint32_t dimension_rule_bound = 0;  // superseded 2*dim + 1 alternative

  bool operator==(const UpperBoundCertificate&) const = default;
};

// TC(E) <= TC(F) * cat(B x B); both inputs must be positive.
std::uint32_t fibration_upper_rules(std::uint32_t tc_fiber,
                                    std::uint32_t cat_base_sq);

struct UpperBound {
  std::uint32_t value = 0;
  UpperBoundCertificate certificate;
};

// 4n + 2 via the circle-fibration rule over CP^n.
UpperBound upper_bound(LensParams params);

/// Which of the sufficient exactness conditions fired:
///   a: some prime p has p^{alpha_p(n)+1} | m
///   b: m is an odd prime and every base-m digit of n is <= (m-1)/2
///   c: m = 2^r and the binary weight of n is <= r-1
struct ExactnessConditions {
  bool a = false;
  bool b = false;
  bool c = false;

  bool any() const { return a || b || c; }
  bool operator==(const ExactnessConditions&) const = default;
};

struct TCBoundReport {
  LensParams params;
  std::uint32_t lower = 2;
  std::uint32_t upper = 0;
  std::optional<std::uint32_t> exact;
  WeightedLowerBound lower_certificate;
  CupLengthResult unweighted;
  UpperBoundCertificate upper_certificate;
  ExactnessConditions conditions;
  std::vector<std::string> notes;

  bool operator==(const TCBoundReport&) const = default;
};

TCBoundReport tc_report(LensParams params);
TCBoundReport tc_report(std::uint32_t m, std::uint32_t n);

struct Range {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;  // inclusive

  std::uint32_t size() const { return hi - lo + 1; }
};

// Reports for the Cartesian product, m outer, n inner. The parallel
// version computes rows with OpenMP; row order is identical to serial.
std::vector<TCBoundReport> tc_table(Range m_range, Range n_range);
std::vector<TCBoundReport> tc_table_serial(Range m_range, Range n_range);

}  // namespace lenstc

#endif
