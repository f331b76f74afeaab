// toradd: additive actions on complete toric varieties, from the ray list.

#include <algorithm>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toradd/analysis.hpp"
#include "toradd/errors.hpp"
#include "toradd/fan_file.hpp"
#include "toradd/report.hpp"

namespace {

using namespace toradd;
using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, no_action = 1, input_error = 2, invariant = 3 };

enum class Command { analyze, roots, uniqueness, witness, oracle_check };

struct Settings {
  Command command = Command::analyze;
  ReportFormat format = ReportFormat::text;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> cap;
  std::optional<unsigned> box;
};

struct Outcome {
  int code = Exit::ok;
  std::string out;
  std::string err;
};

// Keeps only the named top-level fields of the structured report.
std::string select_fields(const AnalysisReport& r, const std::vector<std::string>& keys) {
  const Json full = Json::parse(emit_structured(r));
  Json j;
  for (const auto& k : {"label", "dim", "rays"}) j[k] = full[k];
  for (const auto& k : keys) j[k] = full[k];
  return j.dump(2) + "\n";
}

std::string roots_text(const AnalysisReport& r) {
  // The text report up to the collections block.
  const std::string full = emit_text(r);
  const auto cut = full.find("\ncomplete collections:");
  return cut == std::string::npos ? full : full.substr(0, cut + 1);
}

std::string uniqueness_text(const AnalysisReport& r) {
  const std::string full = emit_text(r);
  const auto from = full.find("uniqueness:");
  const auto to = full.find("\nwitness");
  std::string head = "fan: " + r.label.value_or("(unnamed)") + "\n";
  if (from == std::string::npos) return head;
  return head + full.substr(from, to == std::string::npos ? std::string::npos : to + 1 - from);
}

std::string witness_text(const AnalysisReport& r) {
  const std::string full = emit_text(r);
  const auto from = full.find("\nwitness");
  std::string head = "fan: " + r.label.value_or("(unnamed)") + "\n";
  return from == std::string::npos ? head : head + full.substr(from + 1);
}

Outcome oracle_check(const FanFile& ff, const Settings& st) {
  Outcome o;
  const RaySystem rs(ff.rays);
  const auto s = detect_additive_structure(rs);
  const RootCatalog cat = enumerate_roots(rs, s);
  Integer widest = 0;
  for (const auto& set : cat.per_ray) {
    for (const auto& e : set) widest = std::max(widest, e.max_norm());
  }
  const unsigned radius = st.box ? *st.box : static_cast<unsigned>(widest.get_ui()) + 2;
  const RootSets brute = brute_force_roots(rs, radius);

  std::vector<std::string> diffs;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (cat.per_ray[i] != brute[i]) {
      diffs.push_back("R" + std::to_string(i + 1) + ": enumerated " +
                      std::to_string(cat.per_ray[i].size()) + ", box scan " +
                      std::to_string(brute[i].size()));
    }
  }
  const bool in_box = widest <= radius;
  if (st.format == ReportFormat::structured) {
    Json j;
    j["label"] = ff.label ? Json(*ff.label) : Json(nullptr);
    j["box_radius"] = radius;
    j["max_root_norm"] = widest.get_str();
    j["roots"] = cat.size();
    j["agree"] = diffs.empty();
    j["discrepancies"] = diffs;
    o.out = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "fan: " << ff.label.value_or("(unnamed)") << "\n"
       << "oracle box radius " << radius << ", largest root coordinate " << widest.get_str()
       << ", " << cat.size() << " roots\n";
    for (const auto& d : diffs) os << "  mismatch " << d << "\n";
    os << (diffs.empty() ? "agree\n" : "DISAGREE\n");
    o.out = os.str();
  }
  if (!in_box) {
    o.err += "warning: box radius " + std::to_string(radius) +
             " is smaller than the largest root coordinate; mismatches are expected\n";
  }
  if (!diffs.empty() && in_box) o.code = Exit::invariant;
  return o;
}

Outcome run_one(const std::string& path, const Settings& st) {
  Outcome o;
  try {
    const FanFile ff = load_fan_file(path);
    for (const auto& w : ff.warnings) o.err += "warning: " + path + ": " + w + "\n";
    o.err += "warning: " + path + ": completeness assumed, not checked\n";

    if (st.command == Command::oracle_check) {
      Outcome r = oracle_check(ff, st);
      r.err = o.err + r.err;
      return r;
    }

    AnalysisOptions opts;
    opts.seed = st.seed;
    opts.cap = st.cap;
    opts.witness = st.command == Command::analyze || st.command == Command::witness;
    const AnalysisReport r = analyze(ff, opts);
    const bool structured = st.format == ReportFormat::structured;

    switch (st.command) {
      case Command::analyze:
        o.out = emit_report(r, st.format);
        break;
      case Command::roots:
        o.out = structured ? select_fields(r, {"existence", "roots", "dim_unipotent", "collections"})
                           : roots_text(r);
        break;
      case Command::uniqueness:
        if (!r.existence) throw NoAdditiveAction();
        o.out = structured ? select_fields(r, {"existence", "alpha", "uniqueness"})
                           : uniqueness_text(r);
        break;
      case Command::witness:
        if (!r.existence) throw NoAdditiveAction();
        o.out = structured ? select_fields(r, {"uniqueness", "witness"}) : witness_text(r);
        break;
      case Command::oracle_check:
        break;
    }
  } catch (const NoAdditiveAction& e) {
    o.code = Exit::no_action;
    o.err += path + ": " + e.what() + "\n";
  } catch (const InputError& e) {
    o.code = Exit::input_error;
    o.err += path + ": error: " + e.what() + "\n";
  } catch (const InvariantViolation& e) {
    o.code = Exit::invariant;
    o.err += path + ": internal error: " + e.what() + "\n";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive actions on complete toric varieties"};
  app.require_subcommand(1);

  Settings st;
  std::vector<std::string> files;
  std::string format = "text";

  const std::map<std::string, Command> commands = {
      {"analyze", Command::analyze},
      {"roots", Command::roots},
      {"uniqueness", Command::uniqueness},
      {"witness", Command::witness},
      {"oracle-check", Command::oracle_check},
  };
  const std::map<std::string, std::string> blurbs = {
      {"analyze", "Full report: structure, roots, collections, uniqueness, witness"},
      {"roots", "Demazure roots, dim U and complete collections"},
      {"uniqueness", "Uniqueness verdict with the three conditions"},
      {"witness", "Witness tuples and separation certificate"},
      {"oracle-check", "Compare root enumeration against a box scan"},
  };
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("files", files, "Fan files (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--seed", st.seed, "Seed for the certificate's random sampling");
    sub->add_option("--cap", st.cap, "Nilpotency cap (chain length limit)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--box", st.box, "Box radius for oracle-check");
    sub->callback([&st, cmd = cmd] { st.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : Exit::input_error;
  }
  st.format = format == "structured" ? ReportFormat::structured : ReportFormat::text;

  std::vector<std::future<Outcome>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, run_one, f, std::cref(st)));
  }

  int code = Exit::ok;
  bool first = true;
  for (auto& job : jobs) {
    const Outcome o = job.get();
    std::cerr << o.err;
    if (!o.out.empty()) {
      if (!first && st.format == ReportFormat::text) std::cout << "\n";
      std::cout << o.out;
      first = false;
    }
    code = std::max(code, o.code);
  }
  return code;
}
