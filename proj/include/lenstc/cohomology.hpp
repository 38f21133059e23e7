#ifndef LENSTC_COHOMOLOGY_HPP
#define LENSTC_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace lenstc {

/// The pair (m, n) identifying L_m^{2n+1}, plus the ring constant a
/// in x^2 = a*y (a = 0 for odd m, a = m/2 for even m).
struct LensParams {
  std::uint32_t m = 2;
  std::uint32_t n = 0;
  std::uint32_t a = 0;

  static LensParams make(std::uint32_t m, std::uint32_t n);

  std::uint32_t dim() const { return 2 * n + 1; }
  bool operator==(const LensParams&) const = default;
};

/// x^s y^r with s in {0,1} and 0 <= r <= n.
struct RingMonomial {
  std::uint8_t s = 0;
  std::uint32_t r = 0;

  std::uint32_t degree() const { return s + 2 * r; }
  auto operator<=>(const RingMonomial&) const = default;
};

inline const RingMonomial kUnitMonomial{0, 0};
inline const RingMonomial kX{1, 0};
inline const RingMonomial kY{0, 1};

/// Sparse element of Z_m[x, y] / (y^{n+1}, x^2 - a*y).
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(LensParams params) : params_(params) {}
  static RingElement monomial(LensParams params, RingMonomial mono,
                              std::uint32_t coeff = 1);
  static RingElement unit(LensParams params) {
    return monomial(params, kUnitMonomial);
  }

  const LensParams& params() const { return params_; }
  const std::map<RingMonomial, std::uint32_t>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(RingMonomial mono) const;

  // Common degree of all monomials, or nullopt when mixed (zero counts as
  // homogeneous of any degree; returns nullopt for zero).
  std::optional<std::uint32_t> homogeneous_degree() const;

  void add_term(RingMonomial mono, std::uint64_t coeff);

  RingElement operator+(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator-(const RingElement& other) const {
    return *this + (-other);
  }
  bool operator==(const RingElement&) const = default;

 private:
  LensParams params_;
  std::map<RingMonomial, std::uint32_t> terms_;
};

RingElement ring_multiply(const RingElement& u, const RingElement& v);

using TensorMonomial = std::pair<RingMonomial, RingMonomial>;

inline std::uint32_t degree(const TensorMonomial& t) {
  return t.first.degree() + t.second.degree();
}

/// Sparse element of the tensor square with Koszul-sign multiplication.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(LensParams params) : params_(params) {}
  static TensorElement monomial(LensParams params, TensorMonomial mono,
                                std::uint32_t coeff = 1);
  static TensorElement unit(LensParams params) {
    return monomial(params, {kUnitMonomial, kUnitMonomial});
  }

  const LensParams& params() const { return params_; }
  const std::map<TensorMonomial, std::uint32_t>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(TensorMonomial mono) const;
  std::optional<std::uint32_t> homogeneous_degree() const;

  void add_term(TensorMonomial mono, std::uint64_t coeff);

  TensorElement operator+(const TensorElement& other) const;
  TensorElement operator-() const;
  TensorElement operator-(const TensorElement& other) const {
    return *this + (-other);
  }
  bool operator==(const TensorElement&) const = default;

 private:
  LensParams params_;
  std::map<TensorMonomial, std::uint32_t> terms_;
};

// (alpha x beta)(gamma x delta) = (-1)^{|beta||gamma|} alpha*gamma x beta*delta,
// extended bilinearly term by term.
TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v);

// 1 x u - u x 1 for homogeneous u of positive degree.
TensorElement bar(const RingElement& u);

// The cup-product map: sends sum c*(alpha x beta) to sum c*alpha*beta.
// An element is a zero-divisor iff its image is zero.
RingElement diagonal_restriction(const TensorElement& u);

TensorElement power(const TensorElement& u, std::uint64_t k);

}  // namespace lenstc

#endif
