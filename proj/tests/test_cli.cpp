#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  std::filesystem::path dir = std::filesystem::temp_directory_path();
  std::filesystem::path out = dir / ("barker_cli_out_" + std::to_string(++counter));
  std::filesystem::path err = dir / ("barker_cli_err_" + std::to_string(counter));
  std::string cmd = std::string("\"") + BARKER_CLI_PATH + "\" " + args + " > " +
                    out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

std::string golden(const std::string& name) {
  return slurp(std::filesystem::path(BARKER_GOLDEN_DIR) / name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze text output matches the golden file") {
  CliRun r = run_cli("analyze \"+++-\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("analyze_barker4.txt"));
}

TEST_CASE("analyze json output matches the golden file") {
  CliRun r = run_cli("analyze \"+++-\" --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("analyze_barker4.json"));
}

TEST_CASE("analyze accepts comma lists and files") {
  CliRun r = run_cli("analyze \"1,1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("is_barker             yes") != std::string::npos);

  std::filesystem::path f = std::filesystem::temp_directory_path() / "barker_cli_seqs.txt";
  {
    std::ofstream o(f);
    o << "+++-\n\n++-\n";
  }
  CliRun file_run = run_cli("analyze --file " + f.string());
  CHECK(file_run.exit_code == 0);
  CHECK(file_run.out.find("+++-") != std::string::npos);
  CHECK(file_run.out.find("++-") != std::string::npos);
  CliRun json_run = run_cli("analyze --file " + f.string() + " --format json");
  CHECK(json_run.exit_code == 0);
  CHECK(json_run.out.rfind("[", 0) == 0);  // a file yields an array
  std::filesystem::remove(f);
}

TEST_CASE("exit code 2 on unparseable input") {
  CliRun r = run_cli("analyze \"+x\"");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("analyze --file /nonexistent/path").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("search text output is lines plus a summary") {
  CliRun r = run_cli("search 6");
  CHECK(r.exit_code == 0);  // empty result is still success
  CHECK(r.out == golden("search_n6.txt"));

  CliRun r13 = run_cli("search 13");
  CHECK(r13.exit_code == 0);
  CHECK(r13.out.find("+++++--++-+-+\n") != std::string::npos);
  CHECK(r13.out.find("# n=13 found=") != std::string::npos);
}

TEST_CASE("search json is schema stable") {
  CliRun r = run_cli("search 6 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("search_n6.json"));
}

TEST_CASE("search budget violations exit 2") {
  CHECK(run_cli("search 4096").exit_code == 2);
  CHECK(run_cli("search 33").exit_code == 2);
  CHECK(run_cli("search 25 --no-prune").exit_code == 2);
}

TEST_CASE("verify exits 0 when every identity holds") {
  CliRun r = run_cli("verify all 2..8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("eq1") != std::string::npos);
  CHECK(r.out.find("theorem1") != std::string::npos);
  CHECK(r.out.find("lemma7") != std::string::npos);
}

TEST_CASE("verify json matches the golden file") {
  CliRun r = run_cli("verify eq1 2..8 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("verify_eq1.json"));
}

TEST_CASE("verify theorem1 over a range") {
  CliRun r = run_cli("verify theorem1 4..12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("expect >0") != std::string::npos);
  CHECK(r.out.find("expect 0") != std::string::npos);
}

TEST_CASE("a falsified claim exits 1 and renders its counterexample") {
  CliRun r = run_cli("verify selftest 4..4");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("counterexample selftest: ----") != std::string::npos);
  CliRun js = run_cli("verify selftest 4..4 --format json");
  CHECK(js.exit_code == 1);
  CHECK(js.out.find("\"all_ok\": false") != std::string::npos);
  CHECK(js.out.find("\"sequence\": \"----\"") != std::string::npos);
}

TEST_CASE("leading-dash sequences pass after a -- separator") {
  CliRun r = run_cli("analyze -- \"--+-\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sequence              --+-") != std::string::npos);
}

TEST_CASE("verify usage errors exit 2") {
  CHECK(run_cli("verify bogus 2..8").exit_code == 2);
  CHECK(run_cli("verify eq1 nonsense").exit_code == 2);
  CHECK(run_cli("verify eq1 2..40").exit_code == 2);               // over budget
  CHECK(run_cli("verify eq1 50..60 --random").exit_code == 2);     // missing seed
  CHECK(run_cli("verify eq1 2..8 --format xml").exit_code == 2);   // bad flag value
}

TEST_CASE("stdout is byte-identical across worker counts") {
  CliRun w1 = run_cli("verify all 2..10 --workers 1");
  CliRun w2 = run_cli("verify all 2..10 --workers 2");
  CliRun w8 = run_cli("verify all 2..10 --workers 8");
  CHECK(w1.exit_code == 0);
  CHECK(w1.out == w2.out);
  CHECK(w1.out == w8.out);

  CliRun s1 = run_cli("search 13 --workers 1");
  CliRun s2 = run_cli("search 13 --workers 2");
  CliRun s8 = run_cli("search 13 --workers 8");
  CHECK(s1.out == s2.out);
  CHECK(s1.out == s8.out);
}

TEST_CASE("random mode with one seed is reproducible") {
  const std::string args = "verify eq1 60..70 --random --samples 500 --seed 7";
  CliRun a = run_cli(args);
  CliRun b = run_cli(args + " --workers 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("lengths output") {
  CliRun text = run_cli("lengths");
  CHECK(text.exit_code == 0);
  CHECK(text.out == "2 3 4 5 7 11 13\n");
  CliRun js = run_cli("lengths --format json");
  CHECK(js.exit_code == 0);
  CHECK(js.out == golden("lengths.json"));
}

}  // TEST_SUITE
