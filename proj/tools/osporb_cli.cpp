// Command-line front end: label queries, fusion-table export, and the law
// verifier. Exit codes: 0 success, 2 usage/parse error, 3 domain error,
// 4 verification failure. Every error additionally emits a one-line JSON
// diagnostic on stderr. Identical argv produces byte-identical stdout.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <osporb/osporb.hpp>

namespace {

using nlohmann::ordered_json;
using namespace osporb;

constexpr int kSchemaVersion = 1;

void emit_error(int exit_code, const std::string& kind, const std::string& message) {
  ordered_json err;
  err["exit_code"] = exit_code;
  err["kind"] = kind;
  err["message"] = message;
  ordered_json doc;
  doc["error"] = std::move(err);
  std::cerr << doc.dump() << '\n';
}

// Writes a command payload to stdout, or to --out when given.
void write_payload(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + out_path + "'");
  file << payload;
  file.flush();
  if (!file.good()) throw DomainError("failed writing output file '" + out_path + "'");
}

ordered_json sum_to_json(const FormalSum<OspOrbLabel>& sum) {
  ordered_json result = ordered_json::array();
  for (const auto& [x, m] : sum) {
    ordered_json term;
    term["label"] = format_label(x);
    term["mult"] = m;
    result.push_back(std::move(term));
  }
  return result;
}

std::string sum_to_text(const FormalSum<OspOrbLabel>& sum) {
  return render_sum(sum, [](const OspOrbLabel& x) { return format_label(x); });
}

struct CommonOpts {
  int level = 1;
  std::string format = "table";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--level", opts.level, "level k (positive integer)")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "write the payload to this file instead of stdout");
}

int run_labels(const CommonOpts& opts) {
  const Level lv(opts.level);
  const std::vector<OspOrbLabel> labels = enumerate_labels(lv);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    ordered_json arr = ordered_json::array();
    for (const OspOrbLabel& x : labels) arr.push_back(format_label(x));
    doc["labels"] = std::move(arr);
    payload = doc.dump(2) + "\n";
  } else {
    for (const OspOrbLabel& x : labels) payload += format_label(x) + "  " + pretty_label(x) + "\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

int run_fuse(const CommonOpts& opts, const std::string& a_text, const std::string& b_text) {
  const Level lv(opts.level);
  const OspOrbLabel a = parse_label(lv, a_text);
  const OspOrbLabel b = parse_label(lv, b_text);
  const FormalSum<OspOrbLabel> sum = fuse(lv, a, b);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["left"] = format_label(a);
    doc["right"] = format_label(b);
    doc["result"] = sum_to_json(sum);
    payload = doc.dump(2) + "\n";
  } else {
    payload = sum_to_text(sum) + "\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

int run_dual(const CommonOpts& opts, const std::string& text) {
  const Level lv(opts.level);
  const OspOrbLabel x = parse_label(lv, text);
  const OspOrbLabel d = dual(lv, x);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["label"] = format_label(x);
    doc["dual"] = format_label(d);
    payload = doc.dump(2) + "\n";
  } else {
    payload = format_label(d) + "\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

int run_decompose(const CommonOpts& opts, const std::string& text) {
  const Level lv(opts.level);
  const OspOrbLabel x = parse_label(lv, text);
  const Decomposition dec = decompose(lv, x);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["label"] = format_label(x);
    ordered_json comps = ordered_json::array();
    for (const DecompositionComponent& c : dec) {
      ordered_json entry;
      entry["sl2"] = format_sl2_label(lv, c.sl2);
      entry["vir"] = format_vir_label(c.vir);
      comps.push_back(std::move(entry));
    }
    doc["components"] = std::move(comps);
    payload = doc.dump(2) + "\n";
  } else {
    for (const DecompositionComponent& c : dec)
      payload += format_sl2_label(lv, c.sl2) + " ⊗ " + format_vir_label(c.vir) + "\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

int run_weight(const CommonOpts& opts, const std::string& text) {
  const Level lv(opts.level);
  const OspOrbLabel x = parse_label(lv, text);
  const std::vector<Rational> profile = weight_profile(lv, x);
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["label"] = format_label(x);
    ordered_json weights = ordered_json::array();
    for (const Rational& w : profile) weights.push_back(w.str());
    doc["weights"] = std::move(weights);
    payload = doc.dump(2) + "\n";
  } else {
    payload = "[";
    for (std::size_t n = 0; n < profile.size(); ++n) {
      if (n > 0) payload += ", ";
      payload += profile[n].str();
    }
    payload += "]\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

int run_table(const CommonOpts& opts, const std::string& filter) {
  const Level lv(opts.level);
  std::vector<OspOrbLabel> labels = enumerate_labels(lv);
  if (filter == "untwisted")
    labels.erase(std::remove_if(labels.begin(), labels.end(),
                                [](const OspOrbLabel& x) { return x.twist == Twist::twisted; }),
                 labels.end());
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["filter"] = filter;
    ordered_json names = ordered_json::array();
    for (const OspOrbLabel& x : labels) names.push_back(format_label(x));
    doc["labels"] = std::move(names);
    ordered_json products = ordered_json::array();
    for (const OspOrbLabel& a : labels)
      for (const OspOrbLabel& b : labels) {
        ordered_json entry;
        entry["left"] = format_label(a);
        entry["right"] = format_label(b);
        entry["result"] = sum_to_json(fuse(lv, a, b));
        products.push_back(std::move(entry));
      }
    doc["products"] = std::move(products);
    payload = doc.dump(2) + "\n";
  } else {
    for (const OspOrbLabel& a : labels)
      for (const OspOrbLabel& b : labels)
        payload += format_label(a) + " ⊠ " + format_label(b) + " = " +
                   sum_to_text(fuse(lv, a, b)) + "\n";
  }
  write_payload(payload, opts.out);
  return 0;
}

ordered_json report_to_json(const VerificationReport& rep) {
  ordered_json doc;
  doc["check"] = rep.check;
  doc["level"] = rep.level;
  doc["pass"] = rep.pass;
  doc["skipped"] = rep.skipped;
  doc["cases"] = rep.cases;
  ordered_json list = ordered_json::array();
  for (const Counterexample& ce : rep.counterexamples) {
    ordered_json entry;
    entry["inputs"] = ce.inputs;
    entry["expected"] = ce.expected;
    entry["got"] = ce.got;
    list.push_back(std::move(entry));
  }
  doc["counterexamples"] = std::move(list);
  doc["counterexamples_total"] = rep.counterexamples_total;
  doc["elapsed_ms"] = rep.elapsed_ms;
  return doc;
}

std::string report_to_text(const VerificationReport& rep) {
  std::string line = rep.skipped ? "SKIP" : rep.pass ? "PASS" : "FAIL";
  line += ' ';
  line += rep.check;
  line.append(line.size() < 27 ? 27 - line.size() : 1, ' ');
  line += "cases=" + std::to_string(rep.cases);
  line.append(line.size() < 45 ? 45 - line.size() : 1, ' ');
  line += "elapsed_ms=" + std::to_string(rep.elapsed_ms) + "\n";
  for (const Counterexample& ce : rep.counterexamples)
    line += "    " + ce.inputs + " | expected: " + ce.expected + " | got: " + ce.got + "\n";
  if (rep.counterexamples_total > static_cast<long long>(rep.counterexamples.size()))
    line += "    ... " + std::to_string(rep.counterexamples_total) + " records in total\n";
  return line;
}

int run_verify(const CommonOpts& opts, const std::vector<std::string>& checks,
               int max_assoc_level) {
  const Level lv(opts.level);
  const VerifyOptions vopts{max_assoc_level};
  const std::vector<VerificationReport> reports = verify(lv, checks, vopts);
  const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return r.pass; });
  std::string payload;
  if (opts.format == "json") {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["level"] = lv.k;
    doc["max_assoc_level"] = max_assoc_level;
    doc["pass"] = all_pass;
    ordered_json list = ordered_json::array();
    for (const VerificationReport& rep : reports) list.push_back(report_to_json(rep));
    doc["reports"] = std::move(list);
    payload = doc.dump(2) + "\n";
  } else {
    for (const VerificationReport& rep : reports) payload += report_to_text(rep);
  }
  write_payload(payload, opts.out);
  if (!all_pass) {
    long long failed = 0;
    for (const VerificationReport& rep : reports) failed += rep.pass ? 0 : 1;
    emit_error(4, "verification", std::to_string(failed) + " check(s) failed at level " +
                                      std::to_string(lv.k));
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "osporb — exact fusion-ring engine for the Z2-orbifold of the affine osp(1|2) "
      "vertex algebra"};
  app.require_subcommand(1);

  CommonOpts labels_opts;
  CLI::App* labels_cmd = app.add_subcommand("labels", "list all module labels at a level");
  add_common(labels_cmd, labels_opts);

  CommonOpts fuse_opts;
  std::string fuse_a, fuse_b;
  CLI::App* fuse_cmd = app.add_subcommand("fuse", "fusion product of two labels");
  add_common(fuse_cmd, fuse_opts);
  fuse_cmd->add_option("a", fuse_a, "left label, e.g. U:even+:2")->required();
  fuse_cmd->add_option("b", fuse_b, "right label")->required();

  CommonOpts dual_opts;
  std::string dual_a;
  CLI::App* dual_cmd = app.add_subcommand("dual", "contragredient dual of a label");
  add_common(dual_cmd, dual_opts);
  dual_cmd->add_option("label", dual_a, "label, e.g. T:even+:2")->required();

  CommonOpts decompose_opts;
  std::string decompose_a;
  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "sl2-orbifold (x) Virasoro decomposition of a label");
  add_common(decompose_cmd, decompose_opts);
  decompose_cmd->add_option("label", decompose_a, "label, e.g. U:even+:1")->required();

  CommonOpts weight_opts;
  std::string weight_a;
  CLI::App* weight_cmd =
      app.add_subcommand("weight", "sorted component weights of an untwisted label");
  add_common(weight_cmd, weight_opts);
  weight_cmd->add_option("label", weight_a, "untwisted label, e.g. U:even+:1")->required();

  CommonOpts table_opts;
  std::string table_filter = "all";
  CLI::App* table_cmd = app.add_subcommand("table", "export the full fusion table");
  add_common(table_cmd, table_opts);
  table_cmd->add_option("--filter", table_filter, "restrict the operand set")
      ->check(CLI::IsMember({"all", "untwisted"}))
      ->capture_default_str();

  CommonOpts verify_opts;
  std::vector<std::string> checks = all_check_names();
  int max_assoc_level = 3;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the fusion-ring law verifier");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--checks", checks, "comma-separated subset of checks")
      ->delimiter(',');
  verify_cmd
      ->add_option("--max-assoc-level", max_assoc_level,
                   "largest level running the full associativity sweep")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error(2, "usage", e.what());
    return 2;
  }

  try {
    if (app.got_subcommand(labels_cmd)) return run_labels(labels_opts);
    if (app.got_subcommand(fuse_cmd)) return run_fuse(fuse_opts, fuse_a, fuse_b);
    if (app.got_subcommand(dual_cmd)) return run_dual(dual_opts, dual_a);
    if (app.got_subcommand(decompose_cmd)) return run_decompose(decompose_opts, decompose_a);
    if (app.got_subcommand(weight_cmd)) return run_weight(weight_opts, weight_a);
    if (app.got_subcommand(table_cmd)) return run_table(table_opts, table_filter);
    if (app.got_subcommand(verify_cmd)) {
      const std::vector<std::string>& known = all_check_names();
      for (const std::string& name : checks)
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          emit_error(2, "usage", "unknown check name '" + name + "'");
          return 2;
        }
      return run_verify(verify_opts, checks, max_assoc_level);
    }
  } catch (const ParseError& e) {
    emit_error(2, "parse", e.what());
    return 2;
  } catch (const DomainError& e) {
    emit_error(3, "domain", e.what());
    return 3;
  } catch (const std::exception& e) {
    emit_error(3, "internal", e.what());
    return 3;
  }
  return 0;
}
