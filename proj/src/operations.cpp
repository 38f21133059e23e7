#include "lenstc/operations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lenstc/padic.hpp"

namespace lenstc {

bool is_admissible(const std::vector<std::uint32_t>& sequence) {
  if (sequence.empty()) throw std::invalid_argument("empty sequence");
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k)
    if (sequence[k] < 2 * sequence[k + 1]) return false;
  return true;
}

static void check_sequence(const std::vector<std::uint32_t>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  for (auto i : seq)
    if (i == 0) throw std::invalid_argument("sequence entries must be positive");
}

// max_k { i_k - i_{k+1} - ... - i_n }, clamped at 0.
static std::uint32_t suffix_max_lower_bound(
    const std::vector<std::uint32_t>& seq) {
  std::int64_t best = 0;
  std::int64_t suffix = 0;  // i_{k+1} + ... + i_n
  for (std::size_t k = seq.size(); k-- > 0;) {
    best = std::max(best, static_cast<std::int64_t>(seq[k]) - suffix);
    suffix += seq[k];
  }
  return static_cast<std::uint32_t>(best);
}

// sum_k (i_k - 2*i_{k+1}) with i_{n+1} = 0; valid for admissible sequences.
static std::uint32_t admissible_excess(const std::vector<std::uint32_t>& seq) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    std::int64_t next = k + 1 < seq.size() ? seq[k + 1] : 0;
    sum += static_cast<std::int64_t>(seq[k]) - 2 * next;
  }
  return static_cast<std::uint32_t>(sum);
}

OperationDescriptor bockstein() {
  OperationDescriptor op;
  op.kind = OperationKind::Bockstein;
  op.degree = 1;
  op.excess_lower_bound = 1;
  op.excess_exact = 1;
  return op;
}

OperationDescriptor steenrod_squares(const std::vector<std::uint32_t>& seq) {
  check_sequence(seq);
  OperationDescriptor op;
  op.kind = OperationKind::SteenrodSquareComposite;
  op.sequence = seq;
  op.degree = std::accumulate(seq.begin(), seq.end(), 0u);
  op.excess_lower_bound = suffix_max_lower_bound(seq);
  if (is_admissible(seq)) op.excess_exact = admissible_excess(seq);
  return op;
}

OperationDescriptor steenrod_powers(std::uint32_t p,
                                    const std::vector<std::uint32_t>& seq) {
  check_sequence(seq);
  if (p == 2)
    throw std::invalid_argument("use steenrod_squares for p = 2");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  OperationDescriptor op;
  op.kind = OperationKind::SteenrodPowerComposite;
  op.prime = p;
  op.sequence = seq;
  for (auto i : seq) op.degree += 2 * i * (p - 1);
  if (seq.size() == 1) {
    // e(P^i) = 2i; no excess formula is used for longer composites.
    op.excess_exact = 2 * seq[0];
    op.excess_lower_bound = 2 * seq[0];
  }
  return op;
}

std::string OperationDescriptor::display() const {
  switch (kind) {
    case OperationKind::Bockstein:
      return "beta";
    case OperationKind::SteenrodSquareComposite: {
      std::string s;
      for (auto i : sequence) s += "Sq^" + std::to_string(i) + " ";
      if (!s.empty()) s.pop_back();
      return s;
    }
    case OperationKind::SteenrodPowerComposite: {
      std::string s;
      for (auto i : sequence)
        s += "P^" + std::to_string(i) + " ";
      if (!s.empty()) s.pop_back();
      return s + " (p=" + std::to_string(prime) + ")";
    }
  }
  return "";
}

WeightCertificate certify_weight(const OperationDescriptor& op,
                                 std::uint32_t class_dim,
                                 CertificateKind kind) {
  if (class_dim == 0)
    throw std::invalid_argument("class dimension must be positive");
  WeightCertificate cert{op, class_dim, kind, false};
  cert.valid = op.guaranteed_excess() >= class_dim;
  return cert;
}

}  // namespace lenstc
