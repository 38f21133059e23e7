#ifndef LENSTC_OPERATIONS_HPP
#define LENSTC_OPERATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lenstc {

enum class OperationKind {
  Bockstein,
  SteenrodSquareComposite,
  SteenrodPowerComposite,
};

// i_k >= 2*i_{k+1} for all consecutive pairs.
bool is_admissible(const std::vector<std::uint32_t>& sequence);

/// Symbolic stable cohomology operation with its degree and excess data.
/// Operations are never evaluated on classes; only degree and excess are
/// needed for the weight certificates.
struct OperationDescriptor {
  OperationKind kind = OperationKind::Bockstein;
  std::uint32_t prime = 0;  // coefficient prime for power operations
  std::vector<std::uint32_t> sequence;

  std::uint32_t degree = 0;
  std::uint32_t excess_lower_bound = 0;
  std::optional<std::uint32_t> excess_exact;

  // The guarantee usable in certificates: exact value when known,
  // otherwise the lower bound.
  std::uint32_t guaranteed_excess() const {
    return excess_exact ? *excess_exact : excess_lower_bound;
  }

  std::string display() const;
  bool operator==(const OperationDescriptor&) const = default;
};

OperationDescriptor bockstein();
OperationDescriptor steenrod_squares(const std::vector<std::uint32_t>& seq);
// p must be an odd prime.
OperationDescriptor steenrod_powers(std::uint32_t p,
                                    const std::vector<std::uint32_t>& seq);

enum class CertificateKind {
  TCWeightGe2,
  StrictCategoryWeightGe2,
};

/// Certifies weight >= 2 for the image of a class of the given dimension,
/// valid iff the guaranteed excess reaches the class dimension.
struct WeightCertificate {
  OperationDescriptor operation;
  std::uint32_t class_dimension = 1;
  CertificateKind kind = CertificateKind::TCWeightGe2;
  bool valid = false;

  bool operator==(const WeightCertificate&) const = default;
};

WeightCertificate certify_weight(const OperationDescriptor& op,
                                 std::uint32_t class_dim,
                                 CertificateKind kind);

}  // namespace lenstc

#endif
