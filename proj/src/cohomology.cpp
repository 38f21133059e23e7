#include "lenstc/cohomology.hpp"

namespace lenstc {

LensParams LensParams::make(std::uint32_t m, std::uint32_t n) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  return LensParams{m, n, m % 2 == 0 ? m / 2 : 0};
}

static void check_same_params(const LensParams& a, const LensParams& b) {
  if (!(a == b)) throw std::invalid_argument("mismatched lens parameters");
}

static void check_monomial(const LensParams& p, RingMonomial mono) {
  if (mono.s > 1 || mono.r > p.n)
    throw std::invalid_argument("monomial outside the ring basis");
}

RingElement RingElement::monomial(LensParams params, RingMonomial mono,
                                  std::uint32_t coeff) {
  check_monomial(params, mono);
  RingElement e(params);
  e.add_term(mono, coeff);
  return e;
}

std::uint32_t RingElement::coefficient(RingMonomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::uint32_t> RingElement::homogeneous_degree() const {
  std::optional<std::uint32_t> deg;
  for (const auto& [mono, coeff] : terms_) {
    if (deg && *deg != mono.degree()) return std::nullopt;
    deg = mono.degree();
  }
  return deg;
}

void RingElement::add_term(RingMonomial mono, std::uint64_t coeff) {
  coeff %= params_.m;
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, 0);
  it->second = static_cast<std::uint32_t>((it->second + coeff) % params_.m);
  if (it->second == 0) terms_.erase(it);
}

RingElement RingElement::operator+(const RingElement& other) const {
  check_same_params(params_, other.params_);
  RingElement out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out(params_);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(mono, params_.m - coeff);
  return out;
}

// Product of basis monomials with rewriting x^2 -> a*y and y^{n+1} -> 0.
static void accumulate_monomial_product(RingElement& out, RingMonomial u,
                                        RingMonomial v, std::uint64_t coeff) {
  const LensParams& p = out.params();
  std::uint32_t s = u.s + v.s;
  std::uint32_t r = u.r + v.r;
  if (s == 2) {
    s = 0;
    r += 1;
    coeff = coeff * p.a % p.m;
  }
  if (r > p.n) return;
  out.add_term(RingMonomial{static_cast<std::uint8_t>(s), r}, coeff);
}

RingElement ring_multiply(const RingElement& u, const RingElement& v) {
  check_same_params(u.params(), v.params());
  RingElement out(u.params());
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms())
      accumulate_monomial_product(out, mu, mv,
                                  static_cast<std::uint64_t>(cu) * cv);
  return out;
}

TensorElement TensorElement::monomial(LensParams params, TensorMonomial mono,
                                      std::uint32_t coeff) {
  check_monomial(params, mono.first);
  check_monomial(params, mono.second);
  TensorElement e(params);
  e.add_term(mono, coeff);
  return e;
}

std::uint32_t TensorElement::coefficient(TensorMonomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<std::uint32_t> TensorElement::homogeneous_degree() const {
  std::optional<std::uint32_t> deg;
  for (const auto& [mono, coeff] : terms_) {
    if (deg && *deg != degree(mono)) return std::nullopt;
    deg = degree(mono);
  }
  return deg;
}

void TensorElement::add_term(TensorMonomial mono, std::uint64_t coeff) {
  coeff %= params_.m;
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, 0);
  it->second = static_cast<std::uint32_t>((it->second + coeff) % params_.m);
  if (it->second == 0) terms_.erase(it);
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  check_same_params(params_, other.params_);
  TensorElement out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

TensorElement TensorElement::operator-() const {
  TensorElement out(params_);
  for (const auto& [mono, coeff] : terms_)
    out.add_term(mono, params_.m - coeff);
  return out;
}

TensorElement tensor_multiply(const TensorElement& u, const TensorElement& v) {
  check_same_params(u.params(), v.params());
  const LensParams& p = u.params();
  TensorElement out(p);
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      // Koszul sign from the degrees of the inner factors.
      bool negate = (mu.second.degree() * mv.first.degree()) % 2 != 0;

      // Factorwise products, each a single monomial after rewriting.
      RingElement left(p), right(p);
      accumulate_monomial_product(left, mu.first, mv.first, 1);
      accumulate_monomial_product(right, mu.second, mv.second, 1);
      std::uint64_t coeff = static_cast<std::uint64_t>(cu) * cv % p.m;
      if (negate) coeff = (p.m - coeff) % p.m;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms())
          out.add_term({ml, mr},
                       coeff * cl % p.m * cr % p.m);
    }
  }
  return out;
}

TensorElement bar(const RingElement& u) {
  auto deg = u.homogeneous_degree();
  if (!deg || *deg == 0)
    throw std::invalid_argument(
        "bar requires a homogeneous element of positive degree");
  const LensParams& p = u.params();
  TensorElement out(p);
  for (const auto& [mono, coeff] : u.terms()) {
    out.add_term({kUnitMonomial, mono}, coeff);
    out.add_term({mono, kUnitMonomial}, p.m - coeff);
  }
  return out;
}

RingElement diagonal_restriction(const TensorElement& u) {
  RingElement out(u.params());
  for (const auto& [mono, coeff] : u.terms())
    accumulate_monomial_product(out, mono.first, mono.second, coeff);
  return out;
}

TensorElement power(const TensorElement& u, std::uint64_t k) {
  TensorElement out = TensorElement::unit(u.params());
  for (std::uint64_t i = 0; i < k; ++i) out = tensor_multiply(out, u);
  return out;
}

}  // namespace lenstc
