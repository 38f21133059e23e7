#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lenstc/bounds.hpp"
#include "lenstc/operations.hpp"
#include "lenstc/padic.hpp"
#include "lenstc/report_io.hpp"
#include "lenstc/weights.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

lenstc::Range parse_range(const std::string& spec) {
  auto pos = spec.find("..");
  lenstc::Range r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = static_cast<std::uint32_t>(std::stoul(spec));
    } else {
      r.lo = static_cast<std::uint32_t>(std::stoul(spec.substr(0, pos)));
      r.hi = static_cast<std::uint32_t>(std::stoul(spec.substr(pos + 2)));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected \"a..b\" or a single value: " + spec);
  }
  if (r.lo > r.hi)
    throw CLI::ValidationError("range", "empty range: " + spec);
  return r;
}

void emit_reports(const std::vector<lenstc::TCBoundReport>& reports,
                  const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(lenstc::report_to_json(r));
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << lenstc::kCsvHeader << '\n';
    for (const auto& r : reports) out << lenstc::csv_row(r) << '\n';
  } else {
    out << lenstc::text_table(reports);
  }
}

lenstc::OperationDescriptor parse_operation(const std::string& spec) {
  std::istringstream in(spec);
  std::string head;
  in >> head;
  if (head == "bockstein") return lenstc::bockstein();
  auto read_seq = [&in, &spec]() {
    std::vector<std::uint32_t> seq;
    std::string tok;
    while (in >> tok) {
      try {
        seq.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw CLI::ValidationError("op", "bad token \"" + tok + "\" in: " + spec);
      }
    }
    return seq;
  };
  if (head == "sq") return lenstc::steenrod_squares(read_seq());
  if (head == "pow") {
    auto seq = read_seq();
    if (seq.size() < 2)
      throw CLI::ValidationError("op", "pow needs a prime and a sequence");
    std::uint32_t p = seq.front();
    seq.erase(seq.begin());
    return lenstc::steenrod_powers(p, seq);
  }
  throw CLI::ValidationError("op", "unknown operation \"" + head + "\" in: " + spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified topological complexity bounds for lens spaces"};
  app.require_subcommand(1);

  std::uint32_t m = 2, n = 0;
  std::string format = "text-table";
  std::string m_range_spec, n_range_spec, out_path, op_spec;
  std::uint32_t padic_p = 2;
  std::uint64_t padic_n = 0, padic_m = 0;
  bool widened = false;
  std::uint32_t max_len = 0;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "text-table, csv, or json")
        ->check(CLI::IsMember({"text-table", "csv", "json"}));
  };

  auto* cmd_bounds = app.add_subcommand("bounds", "TC bounds for one lens space");
  cmd_bounds->add_option("--m", m, "order of the cyclic group")
      ->required()
      ->check(CLI::Range(2u, 1u << 20));
  cmd_bounds->add_option("--n", n, "dimension parameter (space has dimension 2n+1)")
      ->required();
  add_format(cmd_bounds);

  auto* cmd_table = app.add_subcommand("table", "TC bounds over a parameter grid");
  cmd_table->add_option("--m-range", m_range_spec, "inclusive range a..b")->required();
  cmd_table->add_option("--n-range", n_range_spec, "inclusive range a..b")->required();
  cmd_table->add_option("--out", out_path, "write to file instead of stdout");
  bool serial = false;
  cmd_table->add_flag("--serial", serial, "use the serial reference path");
  add_format(cmd_table);

  auto* cmd_alpha = app.add_subcommand("alpha", "carry-chain count alpha_p(n)");
  cmd_alpha->add_option("p", padic_p)->required();
  cmd_alpha->add_option("n", padic_n)->required();

  auto* cmd_binom = app.add_subcommand("binom", "v_p(C(n+m, n)) with carry positions");
  cmd_binom->add_option("p", padic_p)->required();
  cmd_binom->add_option("n", padic_n)->required();
  cmd_binom->add_option("m", padic_m)->required();

  auto* cmd_excess = app.add_subcommand("excess", "excess of a stable operation");
  cmd_excess
      ->add_option("--op", op_spec, "\"bockstein\", \"sq i1 i2 ...\", or \"pow p i1 i2 ...\"")
      ->required();

  auto* cmd_cuplen = app.add_subcommand("cuplength", "zero-divisor cup-length search");
  cmd_cuplen->add_option("--m", m)->required()->check(CLI::Range(2u, 1u << 20));
  cmd_cuplen->add_option("--n", n)->required();
  bool weighted = false;
  cmd_cuplen->add_flag("--weighted", weighted, "weighted (k,l) search instead");
  cmd_cuplen->add_flag("--widened", widened, "widen the generator set");
  cmd_cuplen->add_option("--max-len", max_len, "search depth cap (default 2*dim)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_bounds) {
      emit_reports({lenstc::tc_report(m, n)}, format, std::cout);
    } else if (*cmd_table) {
      lenstc::Range mr = parse_range(m_range_spec);
      lenstc::Range nr = parse_range(n_range_spec);
      if (mr.lo < 2) {
        std::cerr << "error: m must be at least 2\n";
        return kExitUsage;
      }
      auto reports = serial ? lenstc::tc_table_serial(mr, nr)
                            : lenstc::tc_table(mr, nr);
      if (out_path.empty()) {
        emit_reports(reports, format, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot open " << out_path << " for writing\n";
          return 1;
        }
        emit_reports(reports, format, out);
      }
    } else if (*cmd_alpha) {
      std::cout << lenstc::alpha_p(padic_p, padic_n) << '\n';
    } else if (*cmd_binom) {
      auto cert = lenstc::binomial_valuation(padic_p, padic_n, padic_m);
      std::cout << "valuation " << cert.valuation << '\n' << "carries";
      for (auto pos : cert.carry_positions) std::cout << ' ' << pos;
      std::cout << '\n';
    } else if (*cmd_excess) {
      auto op = parse_operation(op_spec);
      std::cout << op.display() << '\n';
      if (op.kind == lenstc::OperationKind::SteenrodSquareComposite)
        std::cout << "admissible "
                  << (lenstc::is_admissible(op.sequence) ? "yes" : "no") << '\n';
      std::cout << "degree " << op.degree << '\n';
      if (op.excess_exact)
        std::cout << "excess " << *op.excess_exact << '\n';
      else
        std::cout << "excess >= " << op.excess_lower_bound << '\n';
    } else if (*cmd_cuplen) {
      auto params = lenstc::LensParams::make(m, n);
      if (weighted) {
        auto wlb = lenstc::weighted_lower_bound(params);
        std::cout << "weighted lower bound " << wlb.bound() << " via (k,l)=("
                  << wlb.k << ',' << wlb.l << ")\n";
      } else {
        auto gens = lenstc::canonical_zero_divisors(params, widened);
        std::uint32_t cap = max_len ? max_len : 2 * params.dim();
        auto res = lenstc::unweighted_cup_length(params, gens, cap);
        std::cout << "cup-length " << res.length << '\n';
        for (const auto& w : res.witness)
          std::cout << "  " << w.provenance << " (weight " << w.weight << ")\n";
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lenstc::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
