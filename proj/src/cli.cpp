#include "lando/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lando/census.hpp"
#include "lando/diagram_io.hpp"
#include "lando/enumeration.hpp"
#include "lando/error.hpp"
#include "lando/realizability.hpp"
#include "lando/unlinking.hpp"

namespace lando::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kEmptyInput, "cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kEmptyInput, "cannot write file '" + path + "'");
  }
  file << text;
}

// "v2{e1,e2}": vertex id with its incident labels.
std::string describe_vertex(const Tree& t, VertexId v) {
  std::string s = "v" + std::to_string(v) + "{";
  bool first = true;
  for (EdgeId e : incident_edges(t, v).members()) {
    if (!first) s += ',';
    first = false;
    s += t.label(e);
  }
  return s + "}";
}

std::string serialize(const Tree& t, const std::string& format) {
  if (format == "dot") return to_dot(t);
  if (format == "tree") return to_tree_file(t);
  return to_json(t);
}

long long millis(std::chrono::nanoseconds d) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

void print_report(const SearchReport& r, const Tree& g, const Tree& h,
                  std::ostream& out) {
  if (r.witness) {
    out << "witness: " << format_bijection(*r.witness, g, h) << "\n";
  } else {
    out << "none\n";
  }
  out << "nodes: " << r.nodes_explored << "\n";
  out << "millis: " << millis(r.elapsed) << "\n";
}

struct ParseArgs {
  std::string diagram;
  std::string tree;
  std::string format = "json";
};

struct UnlinkedArgs {
  std::string tree;
  std::string p;
  std::string q;
};

struct CheckArgs {
  std::string g;
  std::string h;
  std::string bijection;
};

struct SearchArgs {
  std::string g;
  std::string h;
  std::string strategy = "pruned";
  bool all = false;
  bool symmetry = false;
  std::size_t jobs = 1;
};

struct CensusArgs {
  std::size_t max_edges = 0;
  std::string out;
  std::size_t jobs = 1;
  bool timing = false;
};

struct FixtureArgs {
  std::string kind;
  std::vector<std::size_t> params;
  std::string format = "tree";
};

int cmd_parse(const ParseArgs& a, std::ostream& out) {
  const Tree t = a.diagram.empty()
                     ? parse_any(read_file(a.tree))
                     : diagram_to_tree(parse_diagram(read_file(a.diagram)));
  out << serialize(t, a.format);
  return kPositive;
}

int cmd_unlinked(const UnlinkedArgs& a, std::ostream& out) {
  const Tree t = parse_any(read_file(a.tree));
  const EdgeSet p = parse_label_set(a.p, t);
  const EdgeSet q = parse_label_set(a.q, t);
  const bool pq = on_one_side(t, p, q);
  const bool qp = on_one_side(t, q, p);
  out << "p on one side of q: " << (pq ? "yes" : "no") << "\n";
  out << "q on one side of p: " << (qp ? "yes" : "no") << "\n";
  out << (pq && qp ? "unlinked" : "not-unlinked") << "\n";
  return pq && qp ? kPositive : kNegative;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Tree g = parse_any(read_file(a.g));
  const Tree h = parse_any(read_file(a.h));
  const Bijection bij = parse_bijection(a.bijection, g, h);
  const Verdict v = is_realizing(g, h, bij);
  if (v.realizing()) {
    out << "realizing\n";
    return kPositive;
  }
  const Violation& x = *v.violation;
  const std::string a_name = describe_vertex(g, x.a);
  const std::string b_name = describe_vertex(g, x.b);
  out << "not realizing: same-colored vertices " << a_name << " and "
      << b_name << " of G\n";
  if (x.failure != SideFailure::kBOffSideOfA) {
    out << "  h(delta " << a_name << ") is not on one side of h(delta "
        << b_name << ")\n";
  }
  if (x.failure != SideFailure::kAOffSideOfB) {
    out << "  h(delta " << b_name << ") is not on one side of h(delta "
        << a_name << ")\n";
  }
  return kNegative;
}

int cmd_search(const SearchArgs& a, bool lando_mode, std::ostream& out) {
  const Tree g = parse_any(read_file(a.g));
  const Tree h = parse_any(read_file(a.h));
  const Strategy strategy =
      a.strategy == "brute" ? Strategy::kBrute : Strategy::kPruned;
  if (a.all) {
    if (strategy != Strategy::kBrute) {
      throw Error(ErrorCode::kInvalidParameter,
                  "--all requires --strategy brute");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t count = count_realizing(g, h);
    out << "realizing bijections: " << count << "\n";
    out << "millis: " << millis(std::chrono::steady_clock::now() - start)
        << "\n";
    return count > 0 ? kPositive : kNegative;
  }
  SearchReport r;
  if (lando_mode) {
    r = strategy == Strategy::kBrute ? brute_force_find(g, h)
                                     : decide_lando(g, h, a.jobs);
    out << "lando: " << (r.witness ? "yes" : "no") << "\n";
  } else {
    r = find_realizing(g, h, SearchOptions{strategy, a.symmetry, a.jobs});
  }
  print_report(r, g, h, out);
  return r.witness ? kPositive : kNegative;
}

int cmd_census(const CensusArgs& a, bool problem2, std::ostream& out,
               std::ostream& err) {
  const CensusOptions options{a.max_edges, a.jobs, a.timing, &err};
  const CensusResult r = problem2 ? run_problem2(options) : run_census(options);
  write_output(a.out, r.csv, out);
  const char* what = problem2 ? "problem2" : "census";
  if (r.negatives.empty()) {
    err << what << ": every case has a realizing bijection\n";
  } else {
    err << what << ": " << r.negatives.size()
        << " case(s) with NO realizing bijection:\n";
    for (const std::string& row : r.negatives) err << "  " << row << "\n";
  }
  return kPositive;
}

int cmd_fixture(const FixtureArgs& a, std::ostream& out) {
  const auto need = [&](std::size_t n) {
    if (a.params.size() != n) {
      throw Error(ErrorCode::kInvalidParameter,
                  a.kind + " takes " + std::to_string(n) + " parameter(s)");
    }
  };
  Tree t;
  if (a.kind == "path") {
    need(1);
    t = path_tree(a.params[0]);
  } else if (a.kind == "star") {
    need(1);
    t = star_tree(a.params[0]);
  } else if (a.kind == "double_star") {
    need(2);
    t = double_star(a.params[0], a.params[1]);
  } else {
    need(3);
    t = spider(a.params[0], a.params[1], a.params[2]);
  }
  out << serialize(t, a.format);
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Realizability of sphere intersection patterns via dual trees",
               "lando"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  const std::vector<std::string> formats{"dot", "json", "tree"};

  ParseArgs parse_args;
  auto* parse = app.add_subcommand("parse", "Parse a diagram or tree file and serialize it");
  auto* diagram_opt = parse->add_option("--diagram", parse_args.diagram, "Circle diagram file");
  auto* tree_opt = parse->add_option("--tree", parse_args.tree, "Tree file (or JSON)");
  diagram_opt->excludes(tree_opt);
  parse->add_option("--out", parse_args.format, "Output format")
      ->check(CLI::IsMember(formats));

  UnlinkedArgs unlinked_args;
  auto* unl = app.add_subcommand("unlinked", "Test whether two edge sets are unlinked");
  unl->add_option("--tree", unlinked_args.tree, "Tree file")->required();
  unl->add_option("--p", unlinked_args.p, "Comma-separated labels")->required();
  unl->add_option("--q", unlinked_args.q, "Comma-separated labels")->required();

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Test whether a bijection is realizing");
  check->add_option("--g", check_args.g, "First tree")->required();
  check->add_option("--h", check_args.h, "Second tree")->required();
  check->add_option("--bijection", check_args.bijection, "gLabel=hLabel,...")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for a realizing bijection");
  SearchArgs lando_args;
  auto* lando = app.add_subcommand("lando", "Decide whether the circle systems admit intersecting spheres");
  for (auto [cmd, sa] : {std::pair{search, &search_args}, std::pair{lando, &lando_args}}) {
    cmd->add_option("--g", sa->g, "First tree")->required();
    cmd->add_option("--h", sa->h, "Second tree")->required();
    cmd->add_option("--strategy", sa->strategy, "brute or pruned")
        ->check(CLI::IsMember({"brute", "pruned"}));
    cmd->add_flag("--all", sa->all, "Count all realizing bijections (brute only)");
    cmd->add_option("--jobs", sa->jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
  search->add_flag("--symmetry", search_args.symmetry,
                   "Prune the first edge's image by automorphism orbits");

  CensusArgs census_args;
  auto* census = app.add_subcommand("census", "Decide every pair of free trees up to a size");
  CensusArgs problem2_args;
  auto* problem2 = app.add_subcommand("problem2", "Decide every free tree against the path");
  for (auto [cmd, ca] : {std::pair{census, &census_args}, std::pair{problem2, &problem2_args}}) {
    cmd->add_option("--max-edges", ca->max_edges, "Largest edge count")->required();
    cmd->add_option("--out", ca->out, "CSV output file (default stdout)");
    cmd->add_option("--jobs", ca->jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", ca->timing, "Fill the millis column");
  }

  FixtureArgs fixture_args;
  auto* fixture = app.add_subcommand("fixture", "Print a named fixture tree");
  fixture->add_option("kind", fixture_args.kind, "path, star, double_star or spider")
      ->required()
      ->check(CLI::IsMember({"path", "star", "double_star", "spider"}));
  fixture->add_option("params", fixture_args.params, "Sizes")->required();
  fixture->add_option("--out", fixture_args.format, "Output format")
      ->check(CLI::IsMember(formats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (parse->parsed()) {
      if (parse_args.diagram.empty() && parse_args.tree.empty()) {
        throw Error(ErrorCode::kEmptyInput, "one of --diagram or --tree is required");
      }
      return cmd_parse(parse_args, out);
    }
    if (unl->parsed()) return cmd_unlinked(unlinked_args, out);
    if (check->parsed()) return cmd_check(check_args, out);
    if (search->parsed()) return cmd_search(search_args, false, out);
    if (lando->parsed()) return cmd_search(lando_args, true, out);
    if (census->parsed()) return cmd_census(census_args, false, out, err);
    if (problem2->parsed()) return cmd_census(problem2_args, true, out, err);
    if (fixture->parsed()) return cmd_fixture(fixture_args, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lando::cli
