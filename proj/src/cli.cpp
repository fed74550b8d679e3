#include "gensub/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "gensub/error.hpp"
#include "gensub/judge.hpp"
#include "gensub/types.hpp"

namespace gensub {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kFailure = 2;

int verdict(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << "\n";
  return value ? kTrue : kFalse;
}

void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) throw Error("cannot write " + *cfg.output_path);
  file << text;
}

const char* direction_text(GaloisViolation::Direction d) {
  return d == GaloisViolation::Direction::kErasureOnly ? "E(t) <= c but not t <: FT(c)"
                                                       : "t <: FT(c) but not E(t) <= c";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Generic nominal subtyping built from a subclassing relation"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--table", cfg.table_path, "Class-table file")->required();
  app.add_option("--depth", cfg.depth, "Argument nesting depth")->capture_default_str();
  std::string mode_name = "wildcards";
  app.add_option("--mode", mode_name, "wildcards or intervals")
      ->check(CLI::IsMember({"wildcards", "intervals"}))
      ->capture_default_str();
  app.add_option("--ceiling", cfg.element_ceiling, "Element-count ceiling")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.output_path, "Output file");

  auto* build_cmd = app.add_subcommand("build", "Build S_depth and print its size");

  std::string t1, t2;
  auto* sub_cmd = app.add_subcommand("sub", "Decide T1 <: T2");
  sub_cmd->add_option("T1", t1)->required();
  sub_cmd->add_option("T2", t2)->required();

  std::string a1, a2;
  auto* contains_cmd = app.add_subcommand("contains", "Decide containment of A1 in A2");
  contains_cmd->add_option("A1", a1)->required();
  contains_cmd->add_option("A2", a2)->required();

  auto* galois_cmd = app.add_subcommand("galois", "Check the erasure Galois connection");

  std::string cls;
  auto* fsub_cmd = app.add_subcommand("fsub", "List F-subtypes of a generic class");
  fsub_cmd->add_option("CLASS", cls)->required();
  auto* fsup_cmd = app.add_subcommand("fsup", "List F-supertypes of a generic class");
  fsup_cmd->add_option("CLASS", cls)->required();

  std::string type_text;
  auto* valid_cmd = app.add_subcommand("valid", "Report admittability and validity");
  valid_cmd->add_option("TYPE", type_text)->required();

  std::optional<std::string> lower, upper;
  std::string param = "T", candidate;
  auto* dfbg_cmd = app.add_subcommand("dfbg", "Check a candidate against (F-)bounds");
  dfbg_cmd->add_option("--lower", lower, "Lower bound expression");
  dfbg_cmd->add_option("--upper", upper, "Upper bound expression");
  dfbg_cmd->add_option("--param", param, "Parameter name used in the bounds")->capture_default_str();
  dfbg_cmd->add_option("CANDIDATE", candidate)->required();

  std::string what = "subtyping";
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a Hasse diagram as DOT");
  dot_cmd->add_option("--what", what)
      ->check(CLI::IsMember({"subtyping", "containment", "subclassing"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kFailure;
  }
  cfg.mode = mode_name == "intervals" ? ArgMode::kInterval : ArgMode::kWildcard;

  try {
    const ClassTable table = load_class_table(cfg.table_path);
    auto built = [&] { return build(table, cfg.depth, cfg.mode, cfg.element_ceiling); };

    if (build_cmd->parsed()) {
      const SubtypingApprox s = built();
      out << "mode: " << to_string(cfg.mode) << "\n"
          << "depth: " << s.depth << "\n"
          << "elements: " << s.poset.size() << "\n"
          << "covers: " << s.poset.cover_indices().size() << "\n";
      if (cfg.output_path) emit(cfg, out, export_dot(s.poset));
      return kTrue;
    }
    if (sub_cmd->parsed())
      return verdict(out, subtype(table, parse_type(t1, table), parse_type(t2, table)));
    if (contains_cmd->parsed())
      return verdict(out, contains(table, parse_arg(a1, table), parse_arg(a2, table)));
    if (galois_cmd->parsed()) {
      const GaloisReport report = check_galois(table, cfg.depth, cfg.element_ceiling);
      out << "checked " << report.checked_pairs << " pairs, " << report.counterexamples.size()
          << " counterexamples\n";
      for (const auto& v : report.counterexamples)
        out << "  " << render(v.type) << " / " << v.cls << ": " << direction_text(v.direction) << "\n";
      return report.holds() ? kTrue : kFalse;
    }
    if (fsub_cmd->parsed() || fsup_cmd->parsed()) {
      const auto found = fsub_cmd->parsed()
                             ? f_subtypes(table, cls, cfg.depth, cfg.mode, cfg.element_ceiling)
                             : f_supertypes(table, cls, cfg.depth, cfg.mode, cfg.element_ceiling);
      for (const auto& t : found) out << render(t) << "\n";
      return kTrue;
    }
    if (valid_cmd->parsed()) {
      Validity v;
      try {
        v = validity(table, parse_type(type_text, table), cfg.element_ceiling);
      } catch (const ParseError& e) {
        if (e.kind() == ParseError::Kind::kSyntax) throw;
        err << e.what() << "\n";
      }
      out << "admittable: " << (v.admittable ? "true" : "false")
          << ", valid: " << (v.valid ? "true" : "false") << "\n";
      return v.valid ? kTrue : kFalse;
    }
    if (dfbg_cmd->parsed()) {
      BoundSpec spec;
      spec.param_name = param;
      if (lower) spec.lower = parse_bound(*lower, table, param);
      if (upper) spec.upper = parse_bound(*upper, table, param);
      return verdict(out, dfbg_check(table, spec, parse_type(candidate, table)));
    }
    if (dot_cmd->parsed()) {
      if (what == "subclassing") {
        emit(cfg, out, export_dot(table.class_poset()));
      } else {
        const SubtypingApprox s = built();
        emit(cfg, out, export_dot(what == "subtyping" ? s.poset : containment_poset(s).base));
      }
      return kTrue;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace gensub
