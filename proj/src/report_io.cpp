#include "lenstc/report_io.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lenstc {

using nlohmann::json;

static json element_to_json(const TensorElement& e) {
  json terms = json::array();
  for (const auto& [mono, coeff] : e.terms())
    terms.push_back({mono.first.s, mono.first.r, mono.second.s, mono.second.r,
                     coeff});
  return terms;
}

static TensorElement element_from_json(LensParams params, const json& j) {
  TensorElement e(params);
  for (const auto& t : j) {
    TensorMonomial mono{
        {t.at(0).get<std::uint8_t>(), t.at(1).get<std::uint32_t>()},
        {t.at(2).get<std::uint8_t>(), t.at(3).get<std::uint32_t>()}};
    e.add_term(mono, t.at(4).get<std::uint32_t>());
  }
  return e;
}

static std::string kind_name(OperationKind kind) {
  switch (kind) {
    case OperationKind::Bockstein:
      return "bockstein";
    case OperationKind::SteenrodSquareComposite:
      return "steenrod_square";
    case OperationKind::SteenrodPowerComposite:
      return "steenrod_power";
  }
  return "";
}

static OperationKind kind_from_name(const std::string& name) {
  if (name == "bockstein") return OperationKind::Bockstein;
  if (name == "steenrod_square") return OperationKind::SteenrodSquareComposite;
  if (name == "steenrod_power") return OperationKind::SteenrodPowerComposite;
  throw std::invalid_argument("unknown operation kind: " + name);
}

static json certificate_to_json(const WeightCertificate& cert) {
  json op{{"kind", kind_name(cert.operation.kind)},
          {"prime", cert.operation.prime},
          {"sequence", cert.operation.sequence},
          {"degree", cert.operation.degree},
          {"excess_lower_bound", cert.operation.excess_lower_bound},
          {"excess_exact", cert.operation.excess_exact
                               ? json(*cert.operation.excess_exact)
                               : json(nullptr)}};
  return json{{"operation", op},
              {"class_dimension", cert.class_dimension},
              {"kind", cert.kind == CertificateKind::TCWeightGe2
                           ? "tc_weight_ge_2"
                           : "strict_category_weight_ge_2"},
              {"valid", cert.valid}};
}

static WeightCertificate certificate_from_json(const json& j) {
  WeightCertificate cert;
  const json& op = j.at("operation");
  cert.operation.kind = kind_from_name(op.at("kind").get<std::string>());
  cert.operation.prime = op.at("prime").get<std::uint32_t>();
  cert.operation.sequence =
      op.at("sequence").get<std::vector<std::uint32_t>>();
  cert.operation.degree = op.at("degree").get<std::uint32_t>();
  cert.operation.excess_lower_bound =
      op.at("excess_lower_bound").get<std::uint32_t>();
  if (!op.at("excess_exact").is_null())
    cert.operation.excess_exact = op.at("excess_exact").get<std::uint32_t>();
  cert.class_dimension = j.at("class_dimension").get<std::uint32_t>();
  cert.kind = j.at("kind").get<std::string>() == "tc_weight_ge_2"
                  ? CertificateKind::TCWeightGe2
                  : CertificateKind::StrictCategoryWeightGe2;
  cert.valid = j.at("valid").get<bool>();
  return cert;
}

static json cup_length_to_json(const CupLengthResult& r) {
  json witness = json::array();
  for (const auto& w : r.witness)
    witness.push_back(
        {{"element", element_to_json(w.element)},
         {"weight", w.weight},
         {"provenance", w.provenance},
         {"certificate",
          w.certificate ? certificate_to_json(*w.certificate) : json(nullptr)}});
  return json{{"length", r.length},
              {"weighted_sum", r.weighted_sum},
              {"witness", witness},
              {"product", element_to_json(r.product)}};
}

static CupLengthResult cup_length_from_json(LensParams params, const json& j) {
  CupLengthResult r;
  r.length = j.at("length").get<std::uint32_t>();
  r.weighted_sum = j.at("weighted_sum").get<std::uint32_t>();
  for (const auto& w : j.at("witness")) {
    WeightedClass wc{element_from_json(params, w.at("element")),
                     w.at("weight").get<std::uint32_t>(),
                     w.at("provenance").get<std::string>(), std::nullopt};
    if (!w.at("certificate").is_null())
      wc.certificate = certificate_from_json(w.at("certificate"));
    r.witness.push_back(std::move(wc));
  }
  r.product = element_from_json(params, j.at("product"));
  return r;
}

json report_to_json(const TCBoundReport& report) {
  const auto& r = report;
  json lower_cert{{"witness_k", r.lower_certificate.k},
                  {"witness_l", r.lower_certificate.l},
                  {"cup_length", cup_length_to_json(r.lower_certificate.result)}};
  return json{
      {"params", {{"m", r.params.m}, {"n", r.params.n}, {"a", r.params.a}}},
      {"lower", r.lower},
      {"upper", r.upper},
      {"exact", r.exact ? json(*r.exact) : json(nullptr)},
      {"lower_certificate", lower_cert},
      {"unweighted", cup_length_to_json(r.unweighted)},
      {"upper_certificate",
       {{"rule", r.upper_certificate.rule},
        {"tc_fiber", r.upper_certificate.tc_fiber},
        {"cat_base_sq", r.upper_certificate.cat_base_sq},
        {"constants_citation", r.upper_certificate.constants_citation},
        {"dimension_rule_bound", r.upper_certificate.dimension_rule_bound}}},
      {"conditions",
       {{"a", r.conditions.a}, {"b", r.conditions.b}, {"c", r.conditions.c}}},
      {"notes", r.notes}};
}

TCBoundReport report_from_json(const json& j) {
  TCBoundReport r;
  const json& p = j.at("params");
  r.params = LensParams{p.at("m").get<std::uint32_t>(),
                        p.at("n").get<std::uint32_t>(),
                        p.at("a").get<std::uint32_t>()};
  r.lower = j.at("lower").get<std::uint32_t>();
  r.upper = j.at("upper").get<std::uint32_t>();
  if (!j.at("exact").is_null()) r.exact = j.at("exact").get<std::uint32_t>();
  const json& lc = j.at("lower_certificate");
  r.lower_certificate.k = lc.at("witness_k").get<std::uint32_t>();
  r.lower_certificate.l = lc.at("witness_l").get<std::uint32_t>();
  r.lower_certificate.result =
      cup_length_from_json(r.params, lc.at("cup_length"));
  r.unweighted = cup_length_from_json(r.params, j.at("unweighted"));
  const json& uc = j.at("upper_certificate");
  r.upper_certificate.rule = uc.at("rule").get<std::string>();
  r.upper_certificate.tc_fiber = uc.at("tc_fiber").get<std::uint32_t>();
  r.upper_certificate.cat_base_sq = uc.at("cat_base_sq").get<std::uint32_t>();
  r.upper_certificate.constants_citation =
      uc.at("constants_citation").get<std::string>();
  r.upper_certificate.dimension_rule_bound =
      uc.at("dimension_rule_bound").get<std::uint32_t>();
  const json& c = j.at("conditions");
  r.conditions = {c.at("a").get<bool>(), c.at("b").get<bool>(),
                  c.at("c").get<bool>()};
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string csv_row(const TCBoundReport& r) {
  std::ostringstream out;
  out << r.params.m << ',' << r.params.n << ',' << r.params.dim() << ','
      << r.lower << ',' << r.upper << ',';
  if (r.exact) out << *r.exact;
  out << ',' << int(r.conditions.a) << ',' << int(r.conditions.b) << ','
      << int(r.conditions.c) << ',' << r.lower_certificate.k << ','
      << r.lower_certificate.l;
  return out.str();
}

std::string text_table(const std::vector<TCBoundReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "m" << std::setw(6) << "n"
      << std::setw(6) << "dim" << std::setw(7) << "lower" << std::setw(7)
      << "upper" << std::setw(7) << "exact" << std::setw(12) << "conditions"
      << "witness (k,l)\n";
  for (const auto& r : reports) {
    std::string conds;
    if (r.conditions.a) conds += 'a';
    if (r.conditions.b) conds += 'b';
    if (r.conditions.c) conds += 'c';
    if (conds.empty()) conds = "-";
    out << std::left << std::setw(6) << r.params.m << std::setw(6)
        << r.params.n << std::setw(6) << r.params.dim() << std::setw(7)
        << r.lower << std::setw(7) << r.upper << std::setw(7)
        << (r.exact ? std::to_string(*r.exact) : std::string("-"))
        << std::setw(12) << conds << '(' << r.lower_certificate.k << ','
        << r.lower_certificate.l << ")\n";
  }
  return out.str();
}

}  // namespace lenstc
