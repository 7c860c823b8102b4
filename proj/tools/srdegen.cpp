#include "srdegen/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace srdegen;

enum ExitCode { ok = 0, failure = 1, parse_failure = 2, resource_limit = 3 };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int fail(int code, const std::string& message) {
  std::cerr << "srdegen: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free Groebner degenerations: analysis and obstruction search"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  std::string out_path;
  std::string job_path;
  std::string family;
  bool fifo = false;
  CommandOverrides overrides;

  app.add_option("--format", format, "Output format (json or text)")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs,-j", overrides.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", overrides.seed, "Random seed for lift search");
  app.add_option("--out,-o", out_path, "Write the report to this file");

  std::vector<CLI::App*> subcommands;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("job", job_path, "Job file, or - for stdin")->required();
    sub->add_flag("--fifo", fifo, "Process S-pairs in creation order");
    subcommands.push_back(sub);
    return sub;
  };
  auto* analyze_cmd = add("analyze", "Groebner basis, initial complex and obstructions");
  analyze_cmd->add_option("--prime", overrides.primes, "Also reduce modulo these primes");
  auto* scan_cmd = add("scan-orders", "Analyze under every permutation lex/degrevlex order");
  scan_cmd->add_option("--family", family, "lex, degrevlex or both")->check(CLI::IsMember({"lex", "degrevlex", "both"}));
  scan_cmd->add_flag("--squarefree-only", overrides.squarefree_only, "Keep square-free initial ideals only");
  add("complex", "Properties of a simplicial complex");
  auto* lift_cmd = add("lift-search", "Search Groebner lifts of a Stanley-Reisner ideal");
  lift_cmd->add_option("--budget", overrides.budget, "Maximum number of candidates")->check(CLI::PositiveNumber);
  auto* count_cmd = add("point-count", "Points of a plane cubic over GF(p)");
  count_cmd->add_option("--prime", overrides.primes, "Primes to count over");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse_failure;
  }

  try {
    if (fifo) overrides.strategy = PairStrategy::fifo;
    if (!family.empty()) overrides.family = parse_family(family);
    const JobSpec job = parse_job(read_input(job_path));
    std::string command;
    for (const auto* sub : subcommands) {
      if (sub->parsed()) command = sub->get_name();
    }
    const Json doc = run_command(command, job, overrides);
    const std::string chosen = !format.empty() ? format : job.format.value_or("json");
    emit(render_report(doc, parse_format(chosen)), out_path);
    return ok;
  } catch (const ParseError& e) {
    return fail(parse_failure, std::string("parse error: ") + e.what());
  } catch (const ResourceLimitError& e) {
    return fail(resource_limit, std::string("resource limit: ") + e.what());
  } catch (const std::exception& e) {
    return fail(failure, std::string("error: ") + e.what());
  }
}
