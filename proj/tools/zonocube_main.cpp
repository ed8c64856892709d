#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "zonocube/checks.hpp"
#include "zonocube/io.hpp"
#include "zonocube/morphisms.hpp"

using namespace zonocube;

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << content;
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EnumClass parse_class(const std::string& s) {
  if (s == "all") return EnumClass::All;
  if (s == "symmetric") return EnumClass::Symmetric;
  if (s == "skew") return EnumClass::Skew;
  throw InvalidInput("unknown class: " + s + " (expected all|symmetric|skew)");
}

struct Common {
  int n = 0, d = 0;
  std::string cls = "all";
  std::string format = "json";
  std::string out;
  int threads = 1;
};

SearchOptions options_for(const Common& c) {
  SearchOptions opts;
  opts.threads = c.threads;
  return opts;
}

int run_enumerate(const Common& c) {
  auto nodes = enumerate_cubillages(c.n, c.d, parse_class(c.cls), options_for(c));
  if (c.format == "csv") {
    write_output(c.out, counts_csv({{c.n, c.d, c.cls, nodes.size()}}));
    return 0;
  }
  if (c.format != "json") throw InvalidInput("enumerate: format must be json or csv");
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) os << ",\n ";
    os << emit_cubillage(nodes[i]);
  }
  os << "]";
  write_output(c.out, os.str());
  return 0;
}

int run_digraph(const Common& c, bool no_fragment_check) {
  EnumClass cls = parse_class(c.cls);
  if (cls == EnumClass::Skew) throw InvalidInput("digraph: class must be all or symmetric");
  SearchOptions opts = options_for(c);
  opts.fragment_check = !no_fragment_check;
  FlipDigraph g = build_class_digraph(c.n, c.d, cls, opts);
  std::string doc = emit_digraph(g, c.cls);
  if (c.format == "json") {
    write_output(c.out, doc);
  } else if (c.format == "dot") {
    write_output(c.out, digraph_to_dot(parse_digraph(doc)));
  } else {
    throw InvalidInput("digraph: format must be json or dot");
  }
  return 0;
}

int run_flips(const std::string& in_path, const std::string& generator, const std::string& out) {
  ParsedCubillage in = parse_cubillage(read_input(in_path));
  const Cubillage& q = in.cubillage;
  Json j;
  j["n"] = q.n();
  j["d"] = q.d();
  if (generator == "typeA") {
    Json raise = Json::array(), lower = Json::array();
    for (ColorSet f : raising_flips_A(q)) raise.push_back(f.elements());
    for (ColorSet f : lowering_flips_A(q)) lower.push_back(f.elements());
    j["raising"] = raise;
    j["lowering"] = lower;
  } else if (generator == "symmetric") {
    auto dump = [](const std::vector<SymFlip>& flips) {
      Json arr = Json::array();
      for (const SymFlip& f : flips) {
        Json item;
        item["kind"] = flip_kind_name(f.kind);
        Json packets = Json::array();
        for (ColorSet p : f.moved_packets()) packets.push_back(p.elements());
        item["packets"] = packets;
        arr.push_back(item);
      }
      return arr;
    };
    j["raising"] = dump(symmetric_raising_flips(q));
    j["lowering"] = dump(symmetric_lowering_flips(q));
  } else {
    throw InvalidInput("flips: generator must be typeA or symmetric");
  }
  write_output(out, j.dump(1));
  return 0;
}

int run_map(const std::string& kind, const std::string& in_path, const std::string& out) {
  ParsedCubillage in = parse_cubillage(read_input(in_path));
  Cubillage image = kind == "red"   ? reduce_middle(in.cubillage)
                    : kind == "cor" ? core_map(in.cubillage)
                                    : throw InvalidInput("map: kind must be red or cor");
  write_output(out, emit_cubillage(image));
  return 0;
}

int run_lift(const Common& c, int chain_index) {
  EnumClass cls = parse_class(c.cls);
  if (cls == EnumClass::Skew) throw InvalidInput("lift: class must be all or symmetric");
  FlipDigraph g = build_class_digraph(c.n, c.d, cls, options_for(c));
  ChainList chains = maximal_chains(g);
  if (chains.truncated) throw BudgetExceeded("lift: maximal chain list truncated");
  if (chain_index >= 0) {
    if (chain_index >= static_cast<int>(chains.chains.size()))
      throw InvalidInput("lift: chain index out of range, only " +
                         std::to_string(chains.chains.size()) + " chains");
    write_output(c.out, emit_cubillage(lift_chain(g, chains.chains[chain_index])));
    return 0;
  }
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < chains.chains.size(); ++i) {
    if (i) os << ",\n ";
    os << "{\"chain\":" << i << ",";
    try {
      os << "\"lift\":" << emit_cubillage(lift_chain(g, chains.chains[i])) << "}";
    } catch (const BarrelHole& e) {
      os << "\"error\":\"barrel-hole\"}";
    }
  }
  os << "]";
  write_output(c.out, os.str());
  return 0;
}

int run_checks(const std::vector<CheckReport>& reports) {
  bool failed = false;
  for (const CheckReport& r : reports) {
    std::cout << r.to_json().dump() << "\n";
    failed = failed || r.failed();
  }
  return failed ? 1 : 0;
}

int run_export(const std::string& in_path, const std::string& format, const std::string& out) {
  std::string text = read_input(in_path);
  if (format == "dot") {
    write_output(out, digraph_to_dot(parse_digraph(text)));
  } else if (format == "svg") {
    ParsedCubillage in = parse_cubillage(text);
    write_output(out, cubillage_to_svg(in.cubillage, frame_default(in.cubillage.n(), 2)));
  } else {
    throw InvalidInput("export: format must be dot or svg");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cubillages of cyclic zonotopes: enumeration, symmetric flip digraphs,"
               " morphisms and verification suites"};
  app.require_subcommand(1);

  Common c;
  bool no_fragment_check = false;
  std::string in_path, out_path, generator = "typeA", map_kind, check_suite = "all";
  std::string export_format = "dot";
  int chain_index = -1;
  int m_half = 2;

  auto add_nd = [&](CLI::App* sub, bool required = true) {
    auto* n_opt = sub->add_option("--n", c.n, "number of colors");
    auto* d_opt = sub->add_option("--d", c.d, "dimension");
    if (required) {
      n_opt->required();
      d_opt->required();
    }
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate cubillages of a class");
  add_nd(enumerate_cmd);
  enumerate_cmd->add_option("--class", c.cls, "all|symmetric|skew")->capture_default_str();
  enumerate_cmd->add_option("--format", c.format, "json|csv")->capture_default_str();
  enumerate_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  enumerate_cmd->add_option("--out", c.out, "output file (default stdout)");

  auto* digraph_cmd = app.add_subcommand("digraph", "build the flip digraph of a class");
  add_nd(digraph_cmd);
  digraph_cmd->add_option("--class", c.cls, "all|symmetric")->capture_default_str();
  digraph_cmd->add_option("--format", c.format, "json|dot")->capture_default_str();
  digraph_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  digraph_cmd->add_flag("--no-fragment-check", no_fragment_check,
                        "use validity-only barrel applicability");
  digraph_cmd->add_option("--out", c.out, "output file (default stdout)");

  auto* flips_cmd = app.add_subcommand("flips", "list applicable flips of a cubillage document");
  flips_cmd->add_option("--in", in_path, "*.cub.json input")->required();
  flips_cmd->add_option("--generator", generator, "typeA|symmetric")->capture_default_str();
  flips_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* map_cmd = app.add_subcommand("map", "apply the reduction (red) or core (cor) map");
  map_cmd->add_option("--kind", map_kind, "red|cor")->required();
  map_cmd->add_option("--in", in_path, "*.cub.json input")->required();
  map_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* lift_cmd = app.add_subcommand("lift", "lift maximal chains one dimension up");
  add_nd(lift_cmd);
  lift_cmd->add_option("--class", c.cls, "all|symmetric")->capture_default_str();
  lift_cmd->add_option("--chain", chain_index, "lift only the chain with this index");
  lift_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();
  lift_cmd->add_option("--out", c.out, "output file (default stdout)");

  auto* check_cmd = app.add_subcommand(
      "check", "run verification suites; exits 1 on any assertive failure");
  check_cmd->add_option("suite", check_suite, "conjecture1|examples|barrel-divergence|morphisms|all")
      ->capture_default_str();
  add_nd(check_cmd, /*required=*/false);
  check_cmd->add_option("--m", m_half, "half color count for the morphisms suite")
      ->capture_default_str();
  check_cmd->add_option("--threads", c.threads, "worker threads")->capture_default_str();

  auto* export_cmd = app.add_subcommand("export", "render documents as dot or svg");
  export_cmd->add_option("--in", in_path, "*.dg.json or *.cub.json input")->required();
  export_cmd->add_option("--format", export_format, "dot|svg")->capture_default_str();
  export_cmd->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(enumerate_cmd)) return run_enumerate(c);
    if (app.got_subcommand(digraph_cmd)) return run_digraph(c, no_fragment_check);
    if (app.got_subcommand(flips_cmd)) return run_flips(in_path, generator, out_path);
    if (app.got_subcommand(map_cmd)) return run_map(map_kind, in_path, out_path);
    if (app.got_subcommand(lift_cmd)) return run_lift(c, chain_index);
    if (app.got_subcommand(export_cmd)) return run_export(in_path, export_format, out_path);

    if (app.got_subcommand(check_cmd)) {
      SearchOptions opts = options_for(c);
      std::vector<CheckReport> reports;
      if (check_suite == "conjecture1") {
        reports.push_back(check_conjecture1(c.n, c.d, opts));
      } else if (check_suite == "examples") {
        reports.push_back(check_example_fixtures(opts));
      } else if (check_suite == "barrel-divergence") {
        reports.push_back(check_barrel_criteria_divergence(c.n, c.d, opts));
      } else if (check_suite == "morphisms") {
        reports.push_back(check_morphism_conjectures(m_half, c.d, opts));
      } else if (check_suite == "all") {
        reports.push_back(check_example_fixtures(opts));
        for (auto [n, d] : std::vector<std::pair<int, int>>{
                 {6, 3}, {6, 5}, {8, 3}, {5, 2}, {7, 4}, {6, 2}, {7, 2}})
          reports.push_back(check_conjecture1(n, d, opts));
        for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}})
          reports.push_back(check_barrel_criteria_divergence(n, d, opts));
        reports.push_back(check_morphism_conjectures(2, 2, opts));
        reports.push_back(check_morphism_conjectures(3, 2, opts));
      } else {
        throw InvalidInput("unknown check suite: " + check_suite);
      }
      return run_checks(reports);
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ErrorCode::InvalidInput);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::Internal);
  }
}
