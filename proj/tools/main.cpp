// cubepack: build and verify packing colorings of hypercubes, enumerate the
// extended-Hamming code family, and evaluate the bound formulas.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubepack/bounds.hpp"
#include "cubepack/certificate.hpp"
#include "cubepack/codes.hpp"
#include "cubepack/coloring.hpp"
#include "cubepack/distance_table.hpp"
#include "cubepack/errors.hpp"

namespace {

using nlohmann::json;

int require_format(const std::string& format,
                   const std::vector<std::string>& allowed) {
  for (const auto& a : allowed) {
    if (format == a) return 0;
  }
  std::cerr << "unsupported --format '" << format << "' for this subcommand\n";
  return 2;
}

int run_code(const std::string& family, int i, int m, int n, bool as_matrix) {
  if (family == "narrowed") {
    std::cout << cubepack::format_code_set(cubepack::narrowed_code(i, m, n));
    return 0;
  }
  if (family == "expanded") {
    std::cout << cubepack::format_code_set(cubepack::expanded_code(i, m, n));
    return 0;
  }
  cubepack::LinearCode code = [&] {
    if (family == "hamming") return cubepack::hamming_code(m);
    if (family == "extended") return cubepack::extended_hamming_code(m);
    return cubepack::code_A(i, m);
  }();
  if (as_matrix || code.dimension() > cubepack::kMaxEnumerationDimension) {
    std::cout << cubepack::format_linear_code(code);
  } else {
    std::cout << cubepack::format_code_set(
        cubepack::CodeSet(code.length(), code.enumerate()));
  }
  return 0;
}

int run_coloring(int n, const std::string& out_path) {
  cubepack::PackingColoring pc = cubepack::construct_packing_coloring(n);
  cubepack::VerificationReport report = cubepack::verify_packing_coloring(pc);
  if (!report.valid) {
    std::cerr << "internal error: constructed coloring failed verification\n";
    return 1;
  }
  if (out_path.empty()) {
    cubepack::write_certificate(pc, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open '" << out_path << "' for writing\n";
      return 1;
    }
    cubepack::write_certificate(pc, out);
  }
  std::cerr << "n=" << n << " colors=" << report.colors_used << " valid=yes\n";
  for (const auto& note : pc.notes) std::cerr << "note: " << note << "\n";
  return 0;
}

int run_verify(const std::string& in_path, const std::string& format) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open '" << in_path << "'\n";
    return 1;
  }
  cubepack::PackingColoring pc = cubepack::read_certificate(in);
  cubepack::VerificationReport report = cubepack::verify_packing_coloring(pc);
  if (format == "json") {
    std::cout << cubepack::format_report_json(report) << "\n";
  } else {
    std::cout << cubepack::format_report(report);
  }
  return report.valid ? 0 : 1;
}

int run_bounds(int from, int to, const std::string& format) {
  std::vector<cubepack::BoundReport> torres, general;
  for (int n = from; n <= to; ++n) {
    torres.push_back(cubepack::torres_bound(n));
    general.push_back(cubepack::general_upper_bound(n));
  }
  if (format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < torres.size(); ++k) {
      rows.push_back({{"n", torres[k].n},
                      {"torres_bound", torres[k].value},
                      {"new_bound", general[k].value},
                      {"difference", torres[k].value - general[k].value}});
    }
    std::cout << rows.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,torres_bound,new_bound,difference\n";
    for (std::size_t k = 0; k < torres.size(); ++k) {
      std::cout << torres[k].n << "," << torres[k].value << ","
                << general[k].value << ","
                << torres[k].value - general[k].value << "\n";
    }
  } else {
    std::cout << "n torres_bound new_bound difference\n";
    for (std::size_t k = 0; k < torres.size(); ++k) {
      std::cout << torres[k].n << " " << torres[k].value << " "
                << general[k].value << " "
                << torres[k].value - general[k].value << "\n";
    }
  }
  return 0;
}

int run_lower(int n, const std::string& data_path, const std::string& format) {
  cubepack::DistanceTable table = cubepack::ingest_distance_table(data_path);
  cubepack::BipartiteLowerBoundReport r = cubepack::bipartite_lower_bound(n, table);
  if (format == "json") {
    json j{{"n", r.n},
           {"cutoff", r.cutoff},
           {"caps", r.caps},
           {"colored_total", r.colored_total},
           {"bound", r.bound},
           {"data_conditional", r.data_conditional},
           {"bounds", "bipartition-respecting packing chromatic number"}};
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,cutoff,colored_total,bound\n";
    std::cout << r.n << "," << r.cutoff << "," << r.colored_total << ","
              << r.bound << "\n";
  } else {
    std::cout << "n=" << r.n << "\n";
    for (std::size_t c = 0; c < r.caps.size(); ++c) {
      std::cout << "color " << (c + 1) << ": " << r.caps[c] << "\n";
    }
    std::cout << "colored vertices: " << r.colored_total << "\n";
    std::cout << "bound: " << r.bound << "\n";
    std::cout << "applies to: bipartition-respecting packing chromatic number"
              << (r.data_conditional ? " (data-conditional)" : "") << "\n";
  }
  return 0;
}

int run_counterexample(int n, std::uint64_t chi_factor, std::uint64_t order,
                       const std::string& data_path, const std::string& format) {
  cubepack::DistanceTable table = cubepack::ingest_distance_table(data_path);
  cubepack::ProductQuestionReport r =
      cubepack::product_question_check(n, chi_factor, order, table);
  const bool reference_instance = n == 14 && chi_factor == 49 && order == 128;
  const std::uint64_t ref_colored = 9958, ref_unique = 6426, ref_bound = 6439;
  if (format == "json") {
    json j{{"n", r.n},
           {"product_value", r.product_value},
           {"cutoff", r.cutoff},
           {"colored_total", r.colored_total},
           {"unique_count", r.unique_count},
           {"lower_bound", r.lower_bound},
           {"negative_answer", r.negative_answer},
           {"trivial_instance", r.trivial_instance},
           {"data_conditional", r.data_conditional}};
    if (reference_instance) {
      j["reference"] = {{"colored_total", ref_colored},
                        {"unique_count", ref_unique},
                        {"lower_bound", ref_bound}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "product value: " << r.chi_factor << " * " << r.factor_order
              << " = " << r.product_value
              << (r.trivial_instance ? " (trivial instance)" : "") << "\n";
    std::cout << "colored vertices (colors 1.." << r.cutoff
              << "): " << r.colored_total << "\n";
    std::cout << "unique colors needed: " << r.unique_count << "\n";
    std::cout << "lower bound: " << r.lower_bound << "\n";
    if (reference_instance) {
      std::cout << "reference totals: colored " << ref_colored << ", unique "
                << ref_unique << ", bound " << ref_bound << "\n";
      if (r.colored_total != ref_colored || r.lower_bound != ref_bound) {
        std::cout << "note: ingested-data arithmetic deviates from the "
                     "reference totals above\n";
      }
    }
    std::cout << (r.negative_answer
                      ? "lower bound exceeds the product value: question "
                        "answered negatively\n"
                      : "no contradiction from this instance\n");
  }
  return r.negative_answer ? 0 : 1;
}

int run_exact(int n, const std::string& format) {
  int value = cubepack::exact_packing_chromatic(n);
  if (format == "json") {
    std::cout << json{{"n", n}, {"value", value}}.dump(2) << "\n";
  } else {
    std::cout << "chi_rho(Q_" << n << ") = " << value << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing colorings of hypercubes from extended Hamming codes"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* code = app.add_subcommand("code", "print a code from the family");
  std::string family;
  int code_i = 0, code_m = 0, code_n = 0;
  bool as_matrix = false;
  code->add_option("--family", family, "hamming|extended|A|narrowed|expanded")
      ->required()
      ->check(CLI::IsMember({"hamming", "extended", "A", "narrowed", "expanded"}));
  code->add_option("--i", code_i, "family index i");
  code->add_option("--m", code_m, "family order m")->required();
  code->add_option("--n", code_n, "target length for narrowed/expanded");
  code->add_flag("--matrix", as_matrix, "print the generator matrix block");

  auto* coloring = app.add_subcommand("coloring", "build a packing coloring");
  int coloring_n = 0;
  std::string out_path;
  coloring->add_option("--n", coloring_n, "hypercube dimension")
      ->required()
      ->check(CLI::Range(5, 20));
  coloring->add_option("--out", out_path, "certificate output path");

  auto* verify = app.add_subcommand("verify", "re-check a coloring certificate");
  std::string in_path;
  verify->add_option("--in", in_path, "certificate path")->required();

  auto* bounds = app.add_subcommand("bounds", "print the upper-bound table");
  int from = 5, to = 64;
  bounds->add_option("--from", from)->check(CLI::Range(5, 64));
  bounds->add_option("--to", to)->check(CLI::Range(5, 64));

  auto* lower = app.add_subcommand("lower", "bipartition-respecting lower bound");
  int lower_n = 0;
  std::string data_path;
  lower->add_option("--n", lower_n, "hypercube dimension")->required();
  lower->add_option("--data", data_path, "A(n,d) table CSV")->required();

  auto* counter = app.add_subcommand("counterexample",
                                     "Cartesian-product question check");
  int ce_n = 14;
  std::uint64_t chi_factor = 49, factor_order = 128;
  std::string ce_data;
  counter->add_option("--n", ce_n, "product dimension");
  counter->add_option("--chi-factor", chi_factor, "chi of one factor");
  counter->add_option("--factor-order", factor_order, "order of the other factor");
  counter->add_option("--data", ce_data, "A(n,d) table CSV")->required();

  auto* exact = app.add_subcommand("exact", "exact value by branch and bound");
  int exact_n = 0;
  exact->add_option("--n", exact_n, "hypercube dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code_ = app.exit(e);
    return code_ == 0 ? 0 : 2;
  }

  try {
    if (code->parsed()) {
      if (int rc = require_format(format, {"text"})) return rc;
      return run_code(family, code_i, code_m, code_n, as_matrix);
    }
    if (coloring->parsed()) {
      if (int rc = require_format(format, {"text"})) return rc;
      return run_coloring(coloring_n, out_path);
    }
    if (verify->parsed()) {
      if (int rc = require_format(format, {"text", "json"})) return rc;
      return run_verify(in_path, format);
    }
    if (bounds->parsed()) {
      if (from > to) {
        std::cerr << "--from must not exceed --to\n";
        return 2;
      }
      return run_bounds(from, to, format);
    }
    if (lower->parsed()) {
      if (int rc = require_format(format, {"text", "csv", "json"})) return rc;
      return run_lower(lower_n, data_path, format);
    }
    if (counter->parsed()) {
      if (int rc = require_format(format, {"text", "json"})) return rc;
      return run_counterexample(ce_n, chi_factor, factor_order, ce_data, format);
    }
    if (exact->parsed()) {
      if (int rc = require_format(format, {"text", "json"})) return rc;
      return run_exact(exact_n, format);
    }
  } catch (const cubepack::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
