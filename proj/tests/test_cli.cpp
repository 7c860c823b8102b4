#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kBinary = SRDEGEN_CLI_PATH;
const fs::path kCorpus = SRDEGEN_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "\"" + kBinary + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_job(const std::string& name, const std::string& text) {
  const auto path = fs::temp_directory_path() / ("srdegen_cli_" + name + ".job");
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("analyze prints the golden report") {
  const auto r = run("analyze \"" + (kCorpus / "example1i.job").string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(kCorpus / "golden" / "example1i.analyze.json"));
}

TEST_CASE("global flags") {
  const auto job = (kCorpus / "cycle4.job").string();
  const auto text = run("--format text complex \"" + job + "\"");
  CHECK(text.code == 0);
  CHECK(text.out.find("cohen_macaulay: true") != std::string::npos);
  const auto a = run("--jobs 1 --seed 5 lift-search --budget 20 \"" + (kCorpus / "octahedron.job").string() + "\"");
  const auto b = run("--jobs 4 --seed 5 lift-search --budget 20 \"" + (kCorpus / "octahedron.job").string() + "\"");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto out = fs::temp_directory_path() / "srdegen_cli_out.json";
  CHECK(run("--out \"" + out.string() + "\" point-count \"" + (kCorpus / "fermat_cubic.job").string() + "\"").code == 0);
  CHECK(slurp(out) == slurp(kCorpus / "golden" / "fermat_cubic.point-count.json"));
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("analyze").code == 2);
  CHECK(run("analyze \"" + temp_job("bad", "ring QQ x,y\norder lex x>w\n").string() + "\"").code == 2);
  CHECK(run("analyze /nonexistent/file.job").code == 1);
  CHECK(run("lift-search \"" + temp_job("noface", "ring QQ x,y\nideal x*y\n").string() + "\"").code == 1);
  const auto nine = temp_job("nine", "ring QQ a,b,c,d,e,f,g,h,i\nideal a*b - c*d\n");
  CHECK(run("scan-orders \"" + nine.string() + "\"").code == 3);
  const auto steep = temp_job("steep", "ring QQ x,y\nideal x^41 + y^41\nideal x*y^40 + y^41\n");
  CHECK(run("analyze \"" + steep.string() + "\"").code == 3);
  CHECK(run("--help").code == 0);
}
