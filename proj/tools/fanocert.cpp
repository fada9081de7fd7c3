// fanocert: verify the embedded E1-E1 case table and emit certificates.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fanocert/fanocert.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void print_values(std::ostream& os, const std::vector<fanocert::Int>& values) {
  os << "(";
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ")";
}

void explain(std::ostream& os, const fanocert::Certificate& cert) {
  for (const auto& c : cert.checks) {
    os << "    [" << fanocert::to_string(c.result) << "] " << c.name << " (" << fanocert::to_string(c.kind)
       << "; " << c.paper_ref << ")";
    for (const auto& in : c.inputs) os << " " << in.name << "=" << in.value;
    os << "\n";
    for (const auto& w : c.witnesses) {
      os << "        " << w.label << " ";
      print_values(os, w.values);
      os << "\n";
    }
  }
  for (const auto& d : cert.discrepancies) os << "    ! " << d.check << ": " << d.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of weak Fano E1-E1 numerical cases"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run the verification pipelines");

  bool all = false;
  fanocert::Int case_id = 0;
  std::string family;
  bool do_explain = false;
  bool strict = false;
  std::string json_path;
  std::string table_path;

  auto* all_opt = verify->add_flag("--all", all, "Verify every case (default)");
  auto* case_opt = verify->add_option("--case", case_id, "Verify one case id");
  auto* family_opt = verify->add_option("--family", family, "Verify one family")
                         ->check(CLI::IsMember({"quadric", "v4", "v5", "x14", "sporadic"}));
  all_opt->excludes(case_opt)->excludes(family_opt);
  case_opt->excludes(family_opt);
  verify->add_flag("--explain", do_explain, "Print the witness trail of each certificate");
  verify->add_flag("--strict", strict, "Exit with status 1 on any verdict mismatch");
  verify->add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
  verify->add_option("--table", table_path, "Case table JSON overriding the embedded one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::vector<fanocert::CaseRecord> table = fanocert::embedded_case_table();
  if (!table_path.empty()) {
    try {
      table = fanocert::load_table(table_path);
    } catch (const fanocert::config_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  fanocert::Selector sel;
  if (*case_opt) {
    sel.kind = fanocert::Selector::Kind::Case;
    sel.case_id = case_id;
  } else if (*family_opt) {
    sel.kind = fanocert::Selector::Kind::Family;
    sel.family = family;
  }

  fanocert::RunResult run;
  try {
    run = fanocert::run_all(table, sel);
  } catch (const fanocert::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (run.certificates.empty()) std::cerr << "warning: no case matches the selection\n";

  std::ostream& text = json_path == "-" ? std::cerr : std::cout;
  for (const auto& cert : run.certificates) {
    const auto& r = cert.record;
    text << "case " << r.case_id << " " << r.family << " (" << r.d << "," << r.g << "): "
         << fanocert::to_string(cert.computed);
    if (cert.mismatch()) text << " MISMATCH expected " << fanocert::to_string(r.expected);
    if (!cert.discrepancies.empty()) text << " [flagged]";
    text << "\n";
    if (do_explain) explain(text, cert);
  }
  const auto& s = run.summary;
  text << "total " << s.total << ", pass " << s.pass << ", open " << s.open << ", mismatch " << s.mismatch
       << ", flagged " << s.flagged << "\n";

  if (!json_path.empty()) {
    const std::string report = fanocert::report_string(run);
    if (json_path == "-") {
      std::cout << report;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return kExitUsage;
      }
      out << report;
    }
  }
  return strict && s.mismatch > 0 ? kExitMismatch : kExitOk;
}
