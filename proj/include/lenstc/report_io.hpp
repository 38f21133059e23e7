#ifndef LENSTC_REPORT_IO_HPP
#define LENSTC_REPORT_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lenstc/bounds.hpp"

namespace lenstc {

nlohmann::json report_to_json(const TCBoundReport& report);
TCBoundReport report_from_json(const nlohmann::json& j);

inline constexpr const char* kCsvHeader =
    "m,n,dim,lower,upper,exact,condition_a,condition_b,condition_c,"
    "witness_k,witness_l";

std::string csv_row(const TCBoundReport& report);

// Fixed-width table for human consumption; one row per report.
std::string text_table(const std::vector<TCBoundReport>& reports);

}  // namespace lenstc

#endif
