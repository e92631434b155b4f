// Command-line front end for the D number measures library.
//
//   dnt compute <file> [--subset EXPR] [--format table|csv|json]
//   dnt verify  <file> [--fuzz N] [--seed K] [--tolerance T]
//   dnt matrix  <file> [--format csv|json]
//
// All numeric output is rendered at 12 significant digits (residuals and
// tolerances at 3), so identical inputs produce byte-identical output.
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 size cap exceeded,
// 5 theorem check failed.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnt/dnt.hpp"
#include "format.hpp"

namespace {

using dnt::tools::align_columns;
using dnt::tools::json_string;
using dnt::tools::num;
using dnt::tools::num3;

// ---------------------------------------------------------------- compute

struct TableRow {
  std::string subset;
  double bel = 0.0;
  double pl = 0.0;
  double width = 0.0;
};

std::vector<TableRow> single_row(const dnt::Instance& inst,
                                 const std::string& expression) {
  const dnt::Frame& frame = inst.frame();
  const dnt::SubsetIndex subset = frame.parse_subset(expression);
  const double bel = dnt::bel(inst.dnumber, inst.nonexclusivity, subset);
  const double pl = dnt::pl(inst.dnumber, inst.nonexclusivity, subset);
  return {{frame.format_subset(subset), bel, pl, pl - bel}};
}

std::vector<TableRow> full_table(const dnt::Instance& inst) {
  const dnt::Frame& frame = inst.frame();
  const auto bels = dnt::bel_vector(inst.dnumber, inst.nonexclusivity);
  const auto pls = dnt::pl_vector(inst.dnumber, inst.nonexclusivity);
  std::vector<TableRow> rows;
  rows.reserve(bels.size());
  for (const dnt::SubsetIndex subset : frame.subsets())
    rows.push_back({frame.format_subset(subset), bels[subset], pls[subset],
                    pls[subset] - bels[subset]});
  return rows;
}

void print_rows_table(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& row : rows)
    cells.push_back({row.subset, num(row.bel), num(row.pl), num(row.width)});
  std::fputs(align_columns({"subset", "bel", "pl", "width"}, cells).c_str(),
             stdout);
}

void print_rows_csv(const std::vector<TableRow>& rows) {
  std::fputs("subset,bel,pl,width\n", stdout);
  for (const auto& row : rows)
    std::printf("%s,%s,%s,%s\n", row.subset.c_str(), num(row.bel).c_str(),
                num(row.pl).c_str(), num(row.width).c_str());
}

void print_rows_json(const dnt::Instance& inst,
                     const std::vector<TableRow>& rows) {
  std::printf("{\n  \"total_mass\": %s,\n  \"rows\": [\n",
              num(inst.dnumber.total_mass()).c_str());
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::printf("    {\"subset\": %s, \"bel\": %s, \"pl\": %s, \"width\": %s}%s\n",
                json_string(rows[i].subset).c_str(), num(rows[i].bel).c_str(),
                num(rows[i].pl).c_str(), num(rows[i].width).c_str(),
                i + 1 < rows.size() ? "," : "");
  std::fputs("  ]\n}\n", stdout);
}

int run_compute(const std::string& path,
                const std::optional<std::string>& subset,
                const std::string& format) {
  const dnt::Instance inst = dnt::load_instance(path);
  const auto rows = subset ? single_row(inst, *subset) : full_table(inst);
  if (format == "csv")
    print_rows_csv(rows);
  else if (format == "json")
    print_rows_json(inst, rows);
  else
    print_rows_table(rows);
  return 0;
}

// ----------------------------------------------------------------- verify

struct CheckLine {
  int number = 0;
  std::string statement;
  double residual = 0.0;
  std::string witness;
  double tolerance = 0.0;
  bool passed = true;
};

void print_check_lines(const std::vector<CheckLine>& lines) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(lines.size());
  for (const auto& line : lines)
    cells.push_back({"theorem " + std::to_string(line.number), line.statement,
                     num3(line.residual), line.witness, num3(line.tolerance),
                     line.passed ? "pass" : "FAIL"});
  std::fputs(align_columns({"check", "statement", "max residual", "witness",
                            "tolerance", "status"},
                           cells)
                 .c_str(),
             stdout);
}

constexpr std::array<dnt::NonExclusivityStrategy, 3> kFuzzStrategies = {
    dnt::NonExclusivityStrategy::exclusive,
    dnt::NonExclusivityStrategy::element_derived,
    dnt::NonExclusivityStrategy::explicit_table,
};

/// Deterministic schedule: frame sizes cycle 1..8, strategies cycle every 8
/// instances, completeness flips every 24, and instance i uses seed base+i.
dnt::oracle::RandomInstance fuzz_instance(std::uint64_t base_seed,
                                          std::uint64_t i) {
  const std::size_t frame_size = 1 + static_cast<std::size_t>(i % 8);
  const auto strategy = kFuzzStrategies[(i / 8) % kFuzzStrategies.size()];
  const bool complete = (i / 24) % 2 == 0;
  return dnt::oracle::random_instance(base_seed + i, frame_size, strategy,
                                      complete);
}

int run_verify(const std::string& path, std::uint64_t fuzz_count,
               std::uint64_t base_seed, double tolerance) {
  const dnt::Instance inst = dnt::load_instance(path);
  const dnt::Frame& frame = inst.frame();
  const auto report =
      dnt::verify_theorems(inst.dnumber, inst.nonexclusivity, tolerance);

  std::printf("instance: %zu labels, %zu focal subsets, total mass %s, strategy %s\n",
              frame.size(), inst.dnumber.focal().size(),
              num(report.total_mass).c_str(),
              std::string(to_string(inst.nonexclusivity.strategy())).c_str());
  std::vector<CheckLine> lines;
  for (const auto& check : report.checks)
    lines.push_back({check.number, std::string(check.name), check.max_residual,
                     frame.format_subset(check.witness), check.tolerance,
                     check.passed()});
  print_check_lines(lines);
  bool all_ok = report.all_passed();
  std::printf("instance checks: %s (%zu subsets)\n", all_ok ? "pass" : "FAIL",
              report.subsets_checked);

  if (fuzz_count > 0) {
    std::array<CheckLine, 4> aggregate;
    std::size_t subsets_total = 0;
    bool fuzz_ok = true;
    for (std::uint64_t i = 0; i < fuzz_count; ++i) {
      const auto generated = fuzz_instance(base_seed, i);
      const auto fuzz_report = dnt::verify_theorems(
          generated.dnumber, generated.nonexclusivity, tolerance);
      subsets_total += fuzz_report.subsets_checked;
      fuzz_ok = fuzz_ok && fuzz_report.all_passed();
      for (std::size_t k = 0; k < fuzz_report.checks.size(); ++k) {
        const auto& check = fuzz_report.checks[k];
        if (i > 0 && check.max_residual <= aggregate[k].residual) continue;
        aggregate[k] = {check.number, std::string(check.name),
                        check.max_residual,
                        "instance " + std::to_string(i) + ", " +
                            generated.dnumber.frame().format_subset(check.witness),
                        check.tolerance, check.passed()};
      }
    }
    std::printf("fuzz: %llu generated instances, base seed %llu\n",
                static_cast<unsigned long long>(fuzz_count),
                static_cast<unsigned long long>(base_seed));
    print_check_lines({aggregate.begin(), aggregate.end()});
    std::printf("fuzz checks: %s (%zu subsets)\n", fuzz_ok ? "pass" : "FAIL",
                subsets_total);
    all_ok = all_ok && fuzz_ok;
  }

  if (!all_ok) {
    std::fprintf(stderr, "error: theorem check failed beyond tolerance\n");
    return 5;
  }
  return 0;
}

// ----------------------------------------------------------------- matrix

int run_matrix(const std::string& path, const std::string& format) {
  const dnt::Instance inst = dnt::load_instance(path);
  const dnt::Frame& frame = inst.frame();
  const dnt::DenseMatrix u = inst.nonexclusivity.matrix();
  const std::vector<double> mass = inst.dnumber.dense_vector();
  const std::vector<double> pls =
      dnt::pl_vector(inst.dnumber, inst.nonexclusivity);
  const std::vector<double> product = dnt::row_times_matrix(mass, u);

  double residual = 0.0;
  for (std::size_t k = 0; k < product.size(); ++k)
    residual = std::max(residual, std::abs(pls[k] - product[k]));

  std::vector<std::string> names;
  names.reserve(u.dim);
  for (const dnt::SubsetIndex subset : frame.subsets())
    names.push_back(frame.format_subset(subset));

  if (format == "json") {
    std::fputs("{\n  \"labels\": [", stdout);
    for (std::size_t i = 0; i < frame.size(); ++i)
      std::printf("%s%s", i ? ", " : "", json_string(frame.label(i)).c_str());
    std::fputs("],\n  \"subsets\": [", stdout);
    for (std::size_t i = 0; i < names.size(); ++i)
      std::printf("%s%s", i ? ", " : "", json_string(names[i]).c_str());
    std::fputs("],\n  \"matrix\": [\n", stdout);
    for (std::size_t row = 0; row < u.dim; ++row) {
      std::fputs("    [", stdout);
      for (std::size_t col = 0; col < u.dim; ++col)
        std::printf("%s%s", col ? ", " : "", num(u.at(row, col)).c_str());
      std::printf("]%s\n", row + 1 < u.dim ? "," : "");
    }
    std::fputs("  ],\n  \"mass\": [", stdout);
    for (std::size_t k = 0; k < mass.size(); ++k)
      std::printf("%s%s", k ? ", " : "", num(mass[k]).c_str());
    std::fputs("],\n  \"plausibility\": [", stdout);
    for (std::size_t k = 0; k < pls.size(); ++k)
      std::printf("%s%s", k ? ", " : "", num(pls[k]).c_str());
    std::printf("],\n  \"max_product_residual\": %s\n}\n",
                num3(residual).c_str());
    return 0;
  }

  std::printf("# nonexclusivity matrix (%zu x %zu, canonical subset order)\n",
              u.dim, u.dim);
  std::fputs("subset", stdout);
  for (const auto& name : names) std::printf(",%s", name.c_str());
  std::fputs("\n", stdout);
  for (std::size_t row = 0; row < u.dim; ++row) {
    std::fputs(names[row].c_str(), stdout);
    for (std::size_t col = 0; col < u.dim; ++col)
      std::printf(",%s", num(u.at(row, col)).c_str());
    std::fputs("\n", stdout);
  }
  std::fputs("# mass vector\n", stdout);
  for (std::size_t k = 0; k < mass.size(); ++k)
    std::printf("%s,%s\n", names[k].c_str(), num(mass[k]).c_str());
  std::fputs("# plausibility vector\n", stdout);
  for (std::size_t k = 0; k < pls.size(); ++k)
    std::printf("%s,%s\n", names[k].c_str(), num(pls[k]).c_str());
  std::fputs("# max absolute difference, plausibility vs mass-matrix product\n",
              stdout);
  std::printf("%s\n", num3(residual).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief and plausibility measures over D numbers"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 ok, 2 parse error, 3 validation error, "
             "4 size cap exceeded, 5 theorem check failed.");

  std::string compute_path;
  std::string subset_expression;
  std::string compute_format = "table";
  CLI::App* compute = app.add_subcommand(
      "compute", "Belief and plausibility for one subset or the full table");
  compute->add_option("path", compute_path, "instance file")->required();
  CLI::Option* subset_option = compute->add_option(
      "--subset", subset_expression, "single subset expression, e.g. a|c");
  compute->add_option("--format", compute_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::string verify_path;
  std::uint64_t fuzz_count = 0;
  std::uint64_t base_seed = 0;
  double tolerance = dnt::kDualityTolerance;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the four theorem contracts over every subset");
  verify->add_option("path", verify_path, "instance file")->required();
  verify->add_option("--fuzz", fuzz_count,
                     "additionally check this many generated instances");
  verify->add_option("--seed", base_seed,
                     "base seed for the generated instances");
  verify->add_option(
      "--tolerance", tolerance,
      "allowed residual for the equality check Bel(A) + Pl(A^c) = s");

  std::string matrix_path;
  std::string matrix_format = "csv";
  CLI::App* matrix = app.add_subcommand(
      "matrix",
      "Export the non-exclusivity matrix, mass and plausibility vectors");
  matrix->add_option("path", matrix_path, "instance file")->required();
  matrix->add_option("--format", matrix_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (compute->parsed())
      return run_compute(compute_path,
                         subset_option->count() > 0
                             ? std::optional<std::string>(subset_expression)
                             : std::nullopt,
                         compute_format);
    if (verify->parsed())
      return run_verify(verify_path, fuzz_count, base_seed, tolerance);
    return run_matrix(matrix_path, matrix_format);
  } catch (const dnt::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    switch (e.kind()) {
      case dnt::error_kind::parse: return 2;
      case dnt::error_kind::validation: return 3;
      case dnt::error_kind::size_cap: return 4;
    }
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
