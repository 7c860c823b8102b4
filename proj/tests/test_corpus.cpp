#include <doctest.h>

#include "srdegen/commands.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace srdegen;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = SRDEGEN_CORPUS_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Golden {
  std::string stem;
  std::string command;
  fs::path path;
};

std::vector<Golden> goldens() {
  std::vector<Golden> out;
  for (const auto& entry : fs::directory_iterator(kCorpus / "golden")) {
    const std::string name = entry.path().filename().string();
    const auto dot = name.find('.');
    const auto ext = name.rfind(".json");
    if (dot == std::string::npos || ext == std::string::npos || ext <= dot) continue;
    out.push_back({name.substr(0, dot), name.substr(dot + 1, ext - dot - 1), entry.path()});
  }
  std::sort(out.begin(), out.end(), [](const Golden& a, const Golden& b) { return a.path < b.path; });
  return out;
}

}  // namespace

TEST_CASE("every corpus job parses and renders to a fixed point") {
  std::size_t jobs = 0;
  for (const auto& entry : fs::directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".job") continue;
    ++jobs;
    INFO(entry.path().string());
    const auto job = parse_job(slurp(entry.path()));
    const auto rendered = render_job(job);
    CHECK(render_job(parse_job(rendered)) == rendered);
  }
  CHECK(jobs >= 8);
}

TEST_CASE("golden reports match byte for byte") {
  const auto all = goldens();
  REQUIRE(all.size() >= 8);
  std::set<std::string> stems;
  for (const auto& g : all) {
    INFO(g.path.string());
    const auto job = parse_job(slurp(kCorpus / (g.stem + ".job")));
    const auto text = render_report(run_command(g.command, job), OutputFormat::json);
    CHECK(text == slurp(g.path));
    stems.insert(g.stem);
  }
  for (const auto& entry : fs::directory_iterator(kCorpus)) {
    if (entry.path().extension() == ".job") CHECK(stems.count(entry.path().stem().string()) == 1);
  }
}

TEST_CASE("corpus reports are stable under the fifo pair strategy and several workers") {
  CommandOverrides alt;
  alt.strategy = PairStrategy::fifo;
  alt.workers = 3;
  for (const auto& g : goldens()) {
    INFO(g.path.string());
    const auto job = parse_job(slurp(kCorpus / (g.stem + ".job")));
    CHECK(render_report(run_command(g.command, job, alt), OutputFormat::json) == slurp(g.path));
  }
}
