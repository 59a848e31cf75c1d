#include "fusscat_cli/cli.hpp"

#include "fusscat_cli/svg.hpp"
#include "fusscat_cli/verify.hpp"

#include <fusscat/bijections.hpp>
#include <fusscat/json_io.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace fusscat::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  int n = 0;
  int m = 0;
  bool json = false;
  bool force = false;
  std::string out;
  std::string input;
};

std::uint64_t limit(const Globals& g) {
  return g.force ? std::numeric_limits<std::uint64_t>::max() : oracles::kDefaultCandidateLimit;
}

void guard(const Globals& g, const BigInt& candidates) {
  if (candidates > limit(g)) {
    throw InstanceTooLarge(fmt::format("{} objects exceed the limit {} (use --force to override)",
                                       candidates.str(), oracles::kDefaultCandidateLimit));
  }
}

json read_input(const Globals& g, std::istream& in) {
  if (g.input.empty() || g.input == "-") return json::parse(in);
  std::ifstream file(g.input);
  if (!file) throw IoError("cannot read " + g.input);
  return json::parse(file);
}

void emit(const Globals& g, std::ostream& out, const std::string& text) {
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw IoError("cannot write " + g.out);
}

int cmd_count(const Globals& g, std::ostream& out, const std::string& family, std::vector<int> J, bool has_J) {
  if (has_J && family != "refined") throw UsageError("--J is only valid with --family refined");
  require_parameters(g.n, g.m);
  BigInt count;
  if (family == "partitions") {
    count = count_partitions(g.n, g.m);
  } else if (family == "positive") {
    count = count_positive(g.n, g.m);
  } else if (family == "refined") {
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    count = refined_count(g.n, g.m, J);
  } else if (family == "regions") {
    guard(g, count_partitions(g.n, g.m));
    RegionEnumerator regions(g.n, g.m);
    while (regions.next()) ++count;
  } else {
    guard(g, count_partitions(g.n, g.m));
    for_each_dissection(alternating_labeling(g.n, g.m), [&](const Dissection&) { ++count; });
  }
  if (!g.json) {
    emit(g, out, count.str() + "\n");
    return kOk;
  }
  json j{{"family", family}, {"n", g.n}, {"m", g.m}, {"count", count.str()}};
  if (family == "refined") j["J"] = J;
  emit(g, out, j.dump() + "\n");
  return kOk;
}

int cmd_enumerate(const Globals& g, std::ostream& out, const std::string& family, const std::string& labeling) {
  require_parameters(g.n, g.m);
  guard(g, count_partitions(g.n, g.m));
  std::string text;
  auto line = [&](const auto& object) { text += (g.json ? to_json(object).dump() : object.to_string()) + "\n"; };
  if (family == "partitions" || family == "positive") {
    PartitionEnumerator partitions(g.n, g.m);
    while (auto p = partitions.next())
      if (family == "partitions" || max_parts(*p).empty()) line(*p);
  } else if (family == "regions") {
    RegionEnumerator regions(g.n, g.m);
    while (auto t = regions.next()) line(*t);
  } else {
    for_each_dissection(make_polygon(g.n, g.m, labeling_from_string(labeling)), line);
  }
  emit(g, out, text);
  return kOk;
}

Family family_from_name(const std::string& name) {
  if (name == "partition") return Family::Partition;
  if (name == "tableau") return Family::Tableau;
  return Family::Dissection;
}

int cmd_map(const Globals& g, std::istream& in, std::ostream& out, const std::string& from, const std::string& to) {
  const json input = read_input(g, in);
  const Family source = detect_family(input);
  if (!from.empty() && family_from_name(from) != source) {
    throw SchemaError("input is not a " + from + " object");
  }
  const Family target = family_from_name(to);

  json result;
  if (source == target) {
    switch (source) {
      case Family::Partition: result = to_json(partition_from_json(input)); break;
      case Family::Tableau: result = to_json(tableau_from_json(input)); break;
      case Family::Dissection: result = to_json(dissection_from_json(input)); break;
    }
  } else {
    StaircasePartition p = [&] {
      switch (source) {
        case Family::Partition: return partition_from_json(input);
        case Family::Tableau: return phi(tableau_from_json(input));
        case Family::Dissection: break;
      }
      return psi(dissection_from_json(input));
    }();
    switch (target) {
      case Family::Partition: result = to_json(p); break;
      case Family::Tableau: result = to_json(phi_inverse(p)); break;
      case Family::Dissection: result = to_json(psi_inverse(p)); break;
    }
  }

  // Re-validate before printing.
  switch (target) {
    case Family::Partition: partition_from_json(result); break;
    case Family::Tableau: tableau_from_json(result); break;
    case Family::Dissection: dissection_from_json(result); break;
  }
  emit(g, out, result.dump() + "\n");
  return kOk;
}

int cmd_verify(const Globals& g, std::ostream& out, const std::string& suite, int n_max, int m_max) {
  const auto verdicts = run_suite(suite, n_max, m_max, limit(g));
  std::string text;
  bool ok = true;
  for (const auto& v : verdicts) {
    text += to_json(v).dump() + "\n";
    ok = ok && v.ok;
  }
  emit(g, out, text);
  return ok ? kOk : kVerificationFailed;
}

int cmd_render(const Globals& g, std::istream& in, std::ostream& out) {
  const json input = read_input(g, in);
  std::string svg;
  if (input.is_object() && !input.contains("parts") && !input.contains("rows") && !input.contains("diagonals")) {
    const auto n = input.value("n", 0), m = input.value("m", 0);
    if (n < 1 || m < 1 || !input.contains("labeling")) {
      throw SchemaError("expected a partition, tableau, dissection or polygon {n, m, labeling}");
    }
    svg = render_svg(make_polygon(n, m, labeling_from_string(input.at("labeling").get<std::string>())));
  } else {
    switch (detect_family(input)) {
      case Family::Partition: svg = render_svg(partition_from_json(input)); break;
      case Family::Tableau: svg = render_svg(tableau_from_json(input)); break;
      case Family::Dissection: svg = render_svg(dissection_from_json(input)); break;
    }
  }
  emit(g, out, svg);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuss-Catalan objects of type A: partitions, Shi tableaux and polygon dissections", "fusscat"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("-n", g.n, "Rank n");
  app.add_option("-m", g.m, "Fuss parameter m");
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_flag("--force", g.force, "Ignore the 10^8 candidate guard rail");

  std::string family = "partitions", labeling = "alternating", from, to, suite = "all";
  std::vector<int> J;
  int n_max = 3, m_max = 2;

  auto* count = app.add_subcommand("count", "Print an exact count");
  count->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"partitions", "regions", "dissections", "positive", "refined"}));
  auto* j_opt = count->add_option("--J", J, "Subset J of [n] for --family refined")->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "List every object of a family");
  enumerate->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"partitions", "positive", "regions", "dissections"}));
  enumerate->add_option("--labeling", labeling, "Polygon labeling for dissections")
      ->check(CLI::IsMember({"standard", "alternating"}));

  auto* map = app.add_subcommand("map", "Map a JSON object to another family");
  map->add_option("--from", from)->check(CLI::IsMember({"partition", "tableau", "dissection"}));
  map->add_option("--to", to)->required()->check(CLI::IsMember({"partition", "tableau", "dissection"}));
  map->add_option("--input", g.input, "JSON file (default: stdin)");

  auto* verify = app.add_subcommand("verify", "Run verification suites and print JSON verdicts");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
  verify->add_option("--m-max", m_max)->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Render a JSON object as SVG");
  render->add_option("--input", g.input, "JSON file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto fail = [&](int code, const std::string& what) {
    fmt::print(err, "fusscat: {}\n", what);
    return code;
  };

  try {
    if (count->parsed()) return cmd_count(g, out, family, J, j_opt->count() > 0);
    if (enumerate->parsed()) return cmd_enumerate(g, out, family, labeling);
    if (map->parsed()) return cmd_map(g, in, out, from, to);
    if (verify->parsed()) return cmd_verify(g, out, suite, n_max, m_max);
    if (render->parsed()) return cmd_render(g, in, out);
  } catch (const UsageError& e) {
    return fail(kUsage, e.what());
  } catch (const InvalidParameters& e) {
    return fail(kUsage, e.what());
  } catch (const InstanceTooLarge& e) {
    return fail(kGuardRail, e.what());
  } catch (const SchemaError& e) {
    return fail(kSchema, e.what());
  } catch (const json::exception& e) {
    return fail(kSchema, e.what());
  } catch (const IoError& e) {
    return fail(kIo, e.what());
  } catch (const Error& e) {
    return fail(kInvariant, e.what());
  }
  return kUsage;
}

}  // namespace fusscat::cli
