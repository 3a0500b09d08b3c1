// posetprune: command-line front end for the poset pruning library.
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input or usage.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "posetprune/families.hpp"
#include "posetprune/io.hpp"
#include "posetprune/irreducibles.hpp"
#include "posetprune/pruning.hpp"
#include "posetprune/theorems.hpp"
#include "posetprune/veins.hpp"

namespace pp = posetprune;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw pp::PosetError(pp::ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw pp::PosetError(pp::ErrorCode::parse_error, "cannot write '" + path + "'");
  out << text;
}

std::string show(const pp::Poset& p, const std::vector<pp::Element>& elems) {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? ", " : "") + p.label(elems[i]);
  return s + "}";
}

pp::Mode parse_mode(const std::string& m) { return m == "oracle" ? pp::Mode::oracle : pp::Mode::fast; }

std::string format_poset(const pp::Poset& p, const std::string& format) {
  if (format == "json") return pp::emit_json(pp::to_document(p));
  if (format == "dot") return pp::emit_dot(p);
  return pp::emit_text(p);
}

int cmd_info(const std::string& file) {
  auto p = pp::read_poset(read_input(file));
  auto chains = p.maximal_chains();
  std::cout << "elements: " << p.size() << '\n'
            << "covers: " << p.cover_pairs().size() << '\n'
            << "relations: " << p.relation_count() << '\n'
            << "minimal: " << show(p, p.minimal_elements()) << '\n'
            << "maximal: " << show(p, p.maximal_elements()) << '\n'
            << "conditionally complete: " << (p.is_conditionally_complete() ? "yes" : "no") << '\n'
            << "maximal chains: " << chains.size() << '\n';
  for (const auto& c : chains) std::cout << "  " << show(p, c) << '\n';
  return exit_ok;
}

int cmd_veins(const std::string& file, const std::string& mode) {
  auto p = pp::read_poset(read_input(file));
  std::cout << "bridge edges:\n";
  for (const auto& [x, y] : pp::bridge_edges(p)) std::cout << "  " << p.label(x) << " < " << p.label(y) << '\n';
  std::cout << "strict veins:\n";
  for (const auto& v : pp::strict_veins(p, parse_mode(mode))) std::cout << "  " << show(p, v) << '\n';
  std::cout << "maximal veins:\n";
  for (const auto& v : pp::maximal_veins(p)) std::cout << "  " << show(p, v) << '\n';
  return exit_ok;
}

int cmd_prune(const std::string& file, const std::string& mode, const std::string& out,
              const std::string& format) {
  auto p = pp::read_poset(read_input(file));
  auto report = pp::prune(p, parse_mode(mode));
  std::cerr << "removed " << report.removed_relations << " of " << p.relation_count() << " relations\n";
  write_output(out, format_poset(report.pruned, format));
  return exit_ok;
}

int cmd_iterate(const std::string& file, std::size_t max_iters) {
  auto p = pp::read_poset(read_input(file));
  auto result = pp::iterate_prune(p, max_iters);
  for (std::size_t i = 0; i < result.sequence.size(); ++i)
    std::cout << "step " << i << ": " << result.sequence[i].relation_count() << " relations\n";
  if (!result.fixpoint_index) {
    std::cout << "no fixpoint within " << max_iters << " iterations\n";
    return exit_violation;
  }
  auto k = *result.fixpoint_index;
  std::cout << "fixpoint after " << k << (k == 1 ? " iteration" : " iterations") << '\n';
  return exit_ok;
}

int cmd_irr(const std::string& file) {
  auto p = pp::read_poset(read_input(file));
  auto report = pp::preservation_report(p, pp::Mode::fast, false);
  std::cout << "element\tirreducible\tcoirreducible\tdoubly\n";
  for (const auto& prof : report.original)
    std::cout << p.label(prof.element) << '\t' << prof.irreducible << '\t' << prof.coirreducible << '\t'
              << prof.doubly << '\n';
  if (!report.hypothesis_met) {
    std::cout << "preservation: not asserted (poset is not conditionally complete); observed "
              << (report.preserved ? "same" : "different") << " profiles after pruning\n";
    return exit_ok;
  }
  std::cout << "preservation: " << (report.preserved ? "preserved" : "VIOLATED") << '\n';
  return report.preserved ? exit_ok : exit_violation;
}

int cmd_check(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  auto start = std::chrono::steady_clock::now();
  auto summary = pp::run_theorem_suite({seed, count, max_size});
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& f : summary.failures) {
    std::cerr << "FAIL " << f.property << ": " << f.message << '\n'
              << "counterexample:\n"
              << pp::emit_text(f.counterexample);
  }
  std::cout << "checked " << summary.posets_checked << " posets, " << summary.property_runs
            << " property runs, " << summary.failures.size() << " failures in " << secs << " s\n";
  return summary.ok() ? exit_ok : exit_violation;
}

int cmd_gen(const std::string& kind, std::size_t size, std::uint64_t seed, std::optional<double> edge_prob,
            const std::string& name, const std::string& format) {
  auto parsed = pp::parse_gen_kind(kind);
  if (!parsed) throw pp::PosetError(pp::ErrorCode::invalid_spec, "unknown kind '" + kind + "'");
  auto p = pp::generate({*parsed, size, seed, edge_prob, name});
  std::cout << format_poset(p, format);
  return exit_ok;
}

int cmd_dot(const std::string& file) {
  auto p = pp::read_poset(read_input(file));
  std::cout << pp::emit_dot(p);
  return exit_ok;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POSETPRUNE_SEED")) return std::strtoull(env, nullptr, 10);
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veins, pruning order and irreducible elements of finite posets"};
  app.require_subcommand(1);

  std::string file, mode = "fast", out, format = "text", kind, name;
  std::size_t max_iters = pp::default_max_prune_iterations;
  std::size_t size = 3, count = 100, max_size = 10;
  std::uint64_t seed = default_seed();
  std::optional<double> edge_prob;
  const std::vector<std::string> modes{"fast", "oracle"};
  const std::vector<std::string> formats{"text", "json", "dot"};

  auto* info = app.add_subcommand("info", "Counts, maximal chains, conditional completeness");
  info->add_option("FILE", file, "poset file (text or JSON, - for stdin)")->required();

  auto* veins = app.add_subcommand("veins", "Bridge edges, strict veins and maximal veins");
  veins->add_option("FILE", file)->required();
  veins->add_option("--mode", mode)->check(CLI::IsMember(modes));

  auto* prune = app.add_subcommand("prune", "Compute the pruned poset");
  prune->add_option("FILE", file)->required();
  prune->add_option("--mode", mode)->check(CLI::IsMember(modes));
  prune->add_option("--out", out, "output file (default stdout)");
  prune->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* iterate = app.add_subcommand("iterate", "Prune repeatedly until nothing changes");
  iterate->add_option("FILE", file)->required();
  iterate->add_option("--max", max_iters)->check(CLI::PositiveNumber);

  auto* irr = app.add_subcommand("irr", "Irreducibility profiles and their preservation");
  irr->add_option("FILE", file)->required();

  auto* check = app.add_subcommand("check", "Run the property suite on a seeded corpus");
  check->add_option("--seed", seed);
  check->add_option("--count", count);
  check->add_option("--max-size", max_size)->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate a poset");
  gen->add_option("KIND", kind, "chain|antichain|boolean|fence|named|random|downset_lattice")->required();
  gen->add_option("--size", size);
  gen->add_option("--seed", seed);
  gen->add_option("--edge-prob", edge_prob);
  gen->add_option("--name", name, "fixture name for the named kind (C3, Yp, Vee, B3, A2)");
  gen->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json", "dot"}));

  auto* dot = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  dot->add_option("FILE", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*info) return cmd_info(file);
    if (*veins) return cmd_veins(file, mode);
    if (*prune) return cmd_prune(file, mode, out, format);
    if (*iterate) return cmd_iterate(file, max_iters);
    if (*irr) return cmd_irr(file);
    if (*check) return cmd_check(seed, count, max_size);
    if (*gen) return cmd_gen(kind, size, seed, edge_prob, name, format);
    if (*dot) return cmd_dot(file);
  } catch (const pp::PosetError& e) {
    std::cerr << "error (" << pp::to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == pp::ErrorCode::internal_order_violation ? exit_violation : exit_input;
  }
  return exit_input;
}
