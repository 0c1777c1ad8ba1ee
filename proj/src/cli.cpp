#include "cht/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cht/constructions.hpp"
#include "cht/diagram.hpp"
#include "cht/instance_io.hpp"
#include "cht/search.hpp"
#include "cht/svg.hpp"
#include "cht/verify.hpp"

namespace cht {

namespace {

// Bad input data (unreadable file, parse error, failed precondition).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlagOptions {
  bool containment = false;
  bool triple_interior = false;
  bool multiset = false;
  bool collinear = false;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--allow-containment", containment, "allow one hull inside another");
    cmd->add_flag("--allow-triple-interior", triple_interior, "allow triple intersections outside P");
    cmd->add_flag("--allow-multiset", multiset, "allow repeated hulls (implies --allow-containment)");
    cmd->add_flag("--allow-collinear", collinear, "allow collinear points");
  }

  VariantFlags flags() const {
    VariantFlags f;
    f.allow_containment = containment;
    f.allow_triple_interior = triple_interior;
    f.allow_multiset = multiset;
    f.allow_collinear = collinear;
    return f.normalized();
  }
};

std::string flag_words(const VariantFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* word) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += word;
  };
  add(f.allow_containment, "--allow-containment");
  add(f.allow_triple_interior, "--allow-triple-interior");
  add(f.allow_multiset, "--allow-multiset");
  add(f.allow_collinear, "--allow-collinear");
  return out;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
}

Instance load(const std::string& path, std::istream& in, const VariantFlags& flags) {
  Instance inst;
  try {
    inst = parse_instance(read_source(path, in));
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
  inst.flags = flags.normalized();
  return inst;
}

std::string hull_text(const Instance& inst, Index h) {
  std::string out = "#" + std::to_string(h) + " {";
  bool first = true;
  for (Index i : inst.family[h].indices()) {
    out += (first ? "" : " ") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

void print_report(const Instance& inst, const VerificationReport& r, std::ostream& out) {
  out << (r.valid ? "valid" : "invalid") << ", n=" << inst.n() << " m=" << inst.m() << '\n';
  for (const auto& v : r.condition1_violations) {
    out << "condition 1: hulls " << hull_text(inst, v.first) << " and " << hull_text(inst, v.second)
        << (v.issue == PairIssue::duplicate ? " are equal" : " are nested") << '\n';
  }
  for (const auto& [a, b] : r.condition2_violations) {
    out << "condition 2: hulls " << hull_text(inst, a) << " and " << hull_text(inst, b) << " are disjoint\n";
  }
  for (const auto& v : r.condition3_violations) {
    out << "condition 3: hulls " << hull_text(inst, v.hulls[0]) << ' ' << hull_text(inst, v.hulls[1]) << ' '
        << hull_text(inst, v.hulls[2]) << " meet in " << to_string(v.region) << '\n';
  }
  for (const auto& t : r.general_position_violations) {
    out << "general position: points " << t[0] << ' ' << t[1] << ' ' << t[2] << " are collinear\n";
  }
}

int cmd_verify(const std::string& file, const FlagOptions& fo, std::istream& in, std::ostream& out) {
  const Instance inst = load(file, in, fo.flags());
  const auto report = verify(inst);
  print_report(inst, report, out);
  return report.valid ? kExitOk : kExitInvalid;
}

int cmd_gen(const std::string& name, std::size_t n, const std::string& output, std::ostream& out) {
  const auto which = parse_construction_name(name);
  if (!which) throw CLI::ValidationError("gen", "unknown construction '" + name + "'");
  if (!accepts(*which, n)) {
    throw CLI::ValidationError("--n", "construction " + name + " does not accept n=" + std::to_string(n));
  }
  const Instance inst = generate(*which, n);
  std::string text = "# " + name + " n=" + std::to_string(n) + '\n';
  if (!inst.flags.is_default()) text += "# verify with: " + flag_words(inst.flags) + '\n';
  text += serialize_instance(inst);
  write_sink(output, text, out);
  return kExitOk;
}

struct SearchArgs {
  std::string file;
  std::size_t parabola = 0;
  std::optional<std::size_t> through;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> node_budget;
};

int cmd_search(const SearchArgs& a, const FlagOptions& fo, std::istream& in, std::ostream& out) {
  const VariantFlags flags = fo.flags();
  PointSet points;
  if (!a.file.empty()) {
    points = load(a.file, in, flags).points;
  } else {
    points = parabola_points(a.parabola);
  }
  PoolLimits limits;
  limits.override_points = a.limit;
  SearchOptions options;
  options.node_budget = a.node_budget;
  SearchResult result;
  try {
    result = a.through ? max_through_point(points, *a.through, flags, limits, options)
                       : max_thrackle(points, flags, limits, options);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  out << "max=" << result.max_size << '\n';
  out << "n=" << points.size() << '\n';
  out << "exhaustive=" << (result.exhaustive ? "yes" : "no") << '\n';
  out << "nodes=" << result.nodes_explored << '\n';
  out << "witness:\n";
  for (const auto& h : result.witness) {
    bool first = true;
    for (Index i : h.indices()) {
      out << (first ? "" : " ") << i;
      first = false;
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const std::string& file, const FlagOptions& fo, std::istream& in, std::ostream& out) {
  const Instance inst = load(file, in, fo.flags());
  const auto report = verify(inst);
  print_report(inst, report, out);
  if (!report.valid) return kExitInvalid;
  if (std::any_of(inst.family.begin(), inst.family.end(), [](const HullSet& h) { return h.size() < 2; })) {
    out << "family contains a single-point hull; no boundary diagram\n";
    return kExitOk;
  }

  bool ok = true;
  const auto diagram = boundary_diagram(inst);
  const long total = diagram.total_weight();
  out << "diagram segments=" << diagram.segments.size() << " total_weight=" << total << " 3m=" << 3 * inst.m()
      << " 6n=" << 6 * inst.n() << '\n';
  for (const auto& s : diagram.segments) {
    out << "segment " << s.a << ' ' << s.b << " weight=" << s.weight << " hulls=";
    for (std::size_t i = 0; i < s.contributors.size(); ++i) out << (i ? "," : "") << s.contributors[i];
    if (s.mixed()) out << " mixed";
    out << '\n';
  }
  if (inst.flags.is_default() && total > 6 * static_cast<long>(inst.n())) {
    out << "total weight exceeds 6n\n";
    ok = false;
  }

  long max_weight = 0;
  for (Index p = 0; p < inst.n(); ++p) {
    const long w = nonleftie_weight_at(p, diagram, inst);
    max_weight = std::max(max_weight, w);
    out << "vertex " << p << " nonleftie_weight=" << w << '\n';
  }
  const auto bound = nonleftie_weight_bound(inst.flags);
  out << "max_nonleftie_weight=" << max_weight << " bound=" << (bound ? std::to_string(*bound) : "none") << '\n';
  if (bound && max_weight > *bound) ok = false;

  const bool all_segments =
      std::all_of(inst.family.begin(), inst.family.end(), [](const HullSet& h) { return h.size() == 2; });
  out << "all_segments=" << (all_segments ? "yes" : "no");
  if (all_segments && !inst.flags.allow_multiset) {
    const bool linear_ok = inst.m() <= inst.n();
    out << " m<=n:" << (linear_ok ? "ok" : "VIOLATED");
    ok = ok && linear_ok;
  }
  out << '\n';

  const auto lemmas = check_leftie_lemmas(inst, diagram);
  for (const auto& v : lemmas.leftie_from_both) {
    out << "leftie from both ends: segment " << v.a << ' ' << v.b << " witnesses " << v.witness_from_a << ','
        << v.witness_from_b << '\n';
  }
  for (const auto& v : lemmas.nonleftie_wedge_pairs) {
    out << "disjoint wedges with non-leftie left sides at " << v.apex << ": hulls " << v.first.hull << ','
        << v.second.hull << '\n';
  }
  out << "leftie_lemmas=" << (lemmas.ok() ? "ok" : "VIOLATED") << '\n';
  ok = ok && lemmas.ok();
  return ok ? kExitOk : kExitInvalid;
}

int cmd_extract(const std::string& file, std::istream& in, std::ostream& out) {
  const Instance inst = load(file, in, {});
  std::optional<LinearInjection> injection;
  try {
    injection = extract_underlying_linear(inst);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  if (!injection) {
    out << "NONE\n";
    return kExitInvalid;
  }
  for (Index h = 0; h < inst.m(); ++h) {
    out << "hull " << hull_text(inst, h) << " -> " << (*injection)[h].first << ' ' << (*injection)[h].second
        << '\n';
  }
  return kExitOk;
}

int cmd_render(const std::string& file, const std::string& output, std::istream& in, std::ostream& out) {
  const Instance inst = load(file, in, {});
  write_sink(output, render_svg(inst), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification, construction and search for convex hull thrackles", "thrackle"};
  app.require_subcommand(1);

  FlagOptions verify_flags, search_flags, analyze_flags;
  std::string verify_file, analyze_file, extract_file, render_file, render_out, gen_name, gen_out;
  std::size_t gen_n = 0;
  SearchArgs sa;

  auto* verify_cmd = app.add_subcommand("verify", "check the thrackle conditions");
  verify_cmd->add_option("file", verify_file, "instance file, - for stdin")->required();
  verify_flags.attach(verify_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a known construction");
  gen_cmd->add_option("name", gen_name, "counterexample | odd_circle | star_neighbors | gossett | "
                                        "triple_blocks | double_star | parabola_points")
      ->required();
  gen_cmd->add_option("--n", gen_n, "number of points")->required();
  gen_cmd->add_option("-o,--output", gen_out, "output file, - for stdout");

  auto* search_cmd = app.add_subcommand("search", "exhaustive maximum family on a point set");
  auto* src_file = search_cmd->add_option("--file", sa.file, "take the points of this instance file");
  auto* src_parabola = search_cmd->add_option("--parabola", sa.parabola, "use (i, i^2) for i < N");
  src_file->excludes(src_parabola);
  src_parabola->excludes(src_file);
  search_cmd->add_option("--through", sa.through, "only hulls containing this point");
  search_cmd->add_option("--limit", sa.limit, "override the maximum number of points");
  search_cmd->add_option("--node-budget", sa.node_budget, "stop after this many search nodes");
  search_flags.attach(search_cmd);

  auto* analyze_cmd = app.add_subcommand("analyze", "boundary diagram and leftie checks");
  analyze_cmd->add_option("file", analyze_file, "instance file, - for stdin")->required();
  analyze_flags.attach(analyze_cmd);

  auto* extract_cmd = app.add_subcommand("extract-linear", "find an underlying linear thrackle");
  extract_cmd->add_option("file", extract_file, "instance file, - for stdin")->required();

  auto* render_cmd = app.add_subcommand("render", "draw an instance as SVG");
  render_cmd->add_option("file", render_file, "instance file, - for stdin")->required();
  render_cmd->add_option("-o,--output", render_out, "output SVG, - for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*search_cmd && sa.file.empty() && src_parabola->count() == 0) {
      throw CLI::RequiredError("--file or --parabola");
    }

    if (*verify_cmd) return cmd_verify(verify_file, verify_flags, in, out);
    if (*gen_cmd) return cmd_gen(gen_name, gen_n, gen_out, out);
    if (*search_cmd) return cmd_search(sa, search_flags, in, out);
    if (*analyze_cmd) return cmd_analyze(analyze_file, analyze_flags, in, out);
    if (*extract_cmd) return cmd_extract(extract_file, in, out);
    if (*render_cmd) return cmd_render(render_file, render_out, in, out);
    return kExitUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace cht
