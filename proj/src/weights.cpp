#include "lenstc/weights.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "lenstc/padic.hpp"

namespace lenstc {

std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t m) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  mpz_class r = b % m;
  return static_cast<std::uint32_t>(r.get_ui());
}

static std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers(
    std::uint32_t m) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  return factors;
}

bool binomial_divisible(std::uint32_t m, std::uint32_t k, std::uint32_t l) {
  bool by_bigint = binomial_mod(k + l, k, m) == 0;

  // m | C(k+l,k) iff v_p(C(k+l,k)) >= e for every p^e || m.
  bool by_valuations = true;
  for (auto [p, e] : prime_powers(m))
    if (binomial_valuation(p, k, l).valuation < e) by_valuations = false;

  if (by_bigint != by_valuations)
    throw InternalConsistencyError(
        "binomial divisibility: big-integer and valuation routes disagree");
  return by_bigint;
}

std::vector<WeightedClass> canonical_zero_divisors(LensParams params,
                                                   bool widened) {
  std::vector<WeightedClass> out;
  out.push_back({bar(RingElement::monomial(params, kX)), 1, "bar(x)",
                 std::nullopt});
  if (params.n >= 1) {
    // y = beta(x) and the Bockstein has excess 1 >= deg(x).
    auto cert = certify_weight(bockstein(), 1, CertificateKind::TCWeightGe2);
    out.push_back({bar(RingElement::monomial(params, kY)), 2,
                   "bar(y), y = beta(x)", cert});
  }
  if (widened) {
    for (std::uint32_t r = 0; r <= params.n; ++r) {
      for (std::uint8_t s = 0; s <= 1; ++s) {
        RingMonomial mono{s, r};
        if (mono.degree() == 0 || mono == kX || mono == kY) continue;
        out.push_back({bar(RingElement::monomial(params, mono)), 1,
                       "bar(x^" + std::to_string(s) + " y^" +
                           std::to_string(r) + ")",
                       std::nullopt});
      }
    }
  }
  return out;
}

WeightedLowerBound weighted_lower_bound(LensParams params) {
  const std::uint32_t n = params.n;

  // Decreasing k+l, then decreasing min(k,l); first feasible pair wins.
  std::uint32_t best_k = 0, best_l = 0;
  bool found = false;
  for (std::uint32_t s = 2 * n + 1; s-- > 0 && !found;) {
    std::uint32_t lo = s > n ? s - n : 0;
    for (std::uint32_t k = s / 2; k + 1 > lo && !found; --k) {
      std::uint32_t l = s - k;
      if (!binomial_divisible(params.m, k, l)) {
        best_k = k;
        best_l = l;
        found = true;
      }
    }
  }

  WeightedLowerBound out;
  out.k = best_k;
  out.l = best_l;

  auto gens = canonical_zero_divisors(params);
  CupLengthResult& res = out.result;
  res.witness.push_back(gens[0]);  // bar(x)
  res.product = gens[0].element;
  for (std::uint32_t i = 0; i < best_k + best_l; ++i) {
    res.witness.push_back(gens[1]);  // bar(y), weight 2
    res.product = tensor_multiply(res.product, gens[1].element);
  }
  if (res.product.is_zero())
    throw InternalConsistencyError(
        "weighted witness product vanished despite feasible (k, l)");
  res.length = static_cast<std::uint32_t>(res.witness.size());
  for (const auto& w : res.witness) res.weighted_sum += w.weight;
  return out;
}

namespace {

struct MultisetSearch {
  const std::vector<WeightedClass>* gens;
  std::uint32_t max_len;
  std::uint32_t degree_cap;
  CupLengthResult best;

  // Products of the same multiset differ only by sign under graded
  // commutativity, so nonzeroness depends on the multiset alone.
  void visit(std::size_t from, const TensorElement& product,
             std::vector<std::size_t>& picked) {
    if (picked.size() > best.length) {
      best.length = static_cast<std::uint32_t>(picked.size());
      best.product = product;
      best.witness.clear();
      best.weighted_sum = 0;
      for (auto i : picked) {
        best.witness.push_back((*gens)[i]);
        best.weighted_sum += (*gens)[i].weight;
      }
    }
    if (picked.size() >= max_len) return;
    for (std::size_t i = from; i < gens->size(); ++i) {
      const TensorElement& g = (*gens)[i].element;
      auto gdeg = g.homogeneous_degree();
      auto pdeg = product.homogeneous_degree();
      if (gdeg && pdeg && *gdeg + *pdeg > degree_cap) continue;
      TensorElement next = tensor_multiply(product, g);
      if (next.is_zero()) continue;
      picked.push_back(i);
      visit(i, next, picked);
      picked.pop_back();
    }
  }
};

}  // namespace

CupLengthResult unweighted_cup_length(LensParams params,
                                      const std::vector<WeightedClass>& gens,
                                      std::uint32_t max_len) {
  for (const auto& g : gens)
    if (!diagonal_restriction(g.element).is_zero())
      throw std::invalid_argument("generator is not a zero-divisor");

  MultisetSearch search{&gens, max_len, 2 * params.dim(),
                        CupLengthResult{0, 0, {}, TensorElement::unit(params)}};
  search.best.product = TensorElement::unit(params);
  std::vector<std::size_t> picked;
  search.visit(0, TensorElement::unit(params), picked);
  return search.best;
}

std::uint32_t verify_binomial_term(LensParams params, std::uint32_t k,
                                   std::uint32_t l) {
  if (k > params.n || l > params.n)
    throw std::invalid_argument("k and l must be at most n");
  TensorElement ybar = bar(RingElement::monomial(params, kY));
  TensorElement pw = power(ybar, k + l);
  return pw.coefficient({RingMonomial{0, k}, RingMonomial{0, l}});
}

}  // namespace lenstc
