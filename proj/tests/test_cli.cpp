#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "permlll/apps/generate.hpp"
#include "permlll/apps/types.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(PERMLLL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe)) res.out.append(buffer, got);
  const int raw = pclose(pipe);
  res.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return res;
}

json parse_json(const CliResult& res) {
  REQUIRE_FALSE(res.out.empty());
  return json::parse(res.out);
}

// elapsed_ms differs between invocations of the same command; everything
// else must be byte-stable.
void strip_volatile(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_volatile(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_volatile(v);
  }
}

struct TempTree {
  fs::path dir;
  TempTree() {
    dir = fs::temp_directory_path() / ("permlll_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempTree() { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) const {
    const fs::path p = dir / name;
    std::ofstream os(p);
    os << content;
    return p.string();
  }

  std::string write_matrix(const std::string& name, const permlll::apps::ColorMatrix& m) const {
    std::string csv;
    for (int i = 0; i < m.n(); ++i) {
      for (int j = 0; j < m.n(); ++j) {
        if (j) csv += ',';
        csv += std::to_string(m.color(i, j));
      }
      csv += '\n';
    }
    return write(name, csv);
  }
};

const std::string kEvents =
    "perms 1 4\n"
    "event 1 1 1 1\n"
    "event 1 1 1 2\n"
    "event 1 1 3 3\n";

}  // namespace

TEST_CASE("solve reports success with a replayable log and witness summary") {
  TempTree tmp;
  const auto events = tmp.write("events.txt", kEvents);
  const auto log_path = (tmp.dir / "run.log").string();
  const auto res = run_cli("solve --input " + events + " --seed 7 --log " + log_path +
                           " --witness 1 --subdag 1");
  CHECK(res.exit_code == 0);
  const json j = parse_json(res);
  CHECK(j.at("status") == "success");
  CHECK(j.at("schema") == 1);
  CHECK(j.at("seed") == 7);
  const auto& perms = j.at("result").at("perms");
  REQUIRE(perms.size() == 1);
  CHECK(perms[0].size() == 4);
  if (j.at("resamplings").get<int>() > 0) {
    const auto& w = j.at("witness");
    CHECK(w.at("size").get<int>() >= 1);
    CHECK(w.at("appearance_bound").get<double>() > 0);
    CHECK(w.contains("signature"));
    CHECK(w.at("subdag").contains("nodes"));
    std::ifstream is(log_path);
    std::string first_line;
    const bool has_line = static_cast<bool>(std::getline(is, first_line));
    CHECK(has_line);
  }
}

TEST_CASE("identical invocations are byte-identical up to timing") {
  TempTree tmp;
  const auto events = tmp.write("events.txt", kEvents);
  const auto a = run_cli("solve --input " + events + " --seed 3");
  const auto b = run_cli("solve --input " + events + " --seed 3");
  CHECK(a.exit_code == 0);
  json ja = parse_json(a), jb = parse_json(b);
  strip_volatile(ja);
  strip_volatile(jb);
  CHECK(ja == jb);
  const auto c = run_cli("solve --input " + events + " --seed 4");
  json jc = parse_json(c);
  strip_volatile(jc);
  CHECK(ja != jc);
}

TEST_CASE("malformed input exits 1 with an invalid-input report") {
  TempTree tmp;
  const auto broken = tmp.write("broken.txt", "perms 1 4\nevent 1 1 9 1\n");
  const auto res = run_cli("solve --input " + broken);
  CHECK(res.exit_code == 1);
  const json j = parse_json(res);
  CHECK(j.at("status") == "invalid-input");
  CHECK(j.contains("error"));

  const auto missing = run_cli("solve --input " + (tmp.dir / "nope.txt").string());
  CHECK(missing.exit_code == 1);

  // A witness time past the end of the log is a usage error, not a silent
  // omission.
  const auto events = tmp.write("events.txt", kEvents);
  const auto late = run_cli("solve --input " + events + " --seed 7 --witness 1000000");
  CHECK(late.exit_code == 1);
  CHECK(parse_json(late).at("status") == "invalid-input");
}

TEST_CASE("criterion checking exits 0 when satisfied and 3 when not") {
  TempTree tmp;
  const auto events = tmp.write("events.txt", kEvents);
  const auto weights = tmp.write("mu.txt", "1 1\n2 1\n3 1/3\n");
  const auto good = run_cli("criterion --input " + events + " --mu-file " + weights);
  CHECK(good.exit_code == 0);
  const json jg = parse_json(good);
  CHECK(jg.at("satisfied") == true);

  const auto bad = run_cli("criterion --input " + events + " --mu 0.2");
  CHECK(bad.exit_code == 3);
  const json jb = parse_json(bad);
  CHECK(jb.at("satisfied") == false);
  CHECK(jb.at("status") == "criterion-failed");

  // Exactly one weight source must be given.
  const auto none = run_cli("criterion --input " + events);
  CHECK(none.exit_code == 1);
  const auto both = run_cli("criterion --input " + events + " --mu 1 --mu-x 0.5");
  CHECK(both.exit_code == 1);
}

TEST_CASE("latin batches aggregate runs in seed order") {
  TempTree tmp;
  using permlll::apps::diagonal_run_matrix;
  const auto csv = tmp.write_matrix("latin.csv", diagonal_run_matrix(12, 2));
  const auto res = run_cli("latin --input " + csv + " --seed 5 --runs 3");
  CHECK(res.exit_code == 0);
  const json j = parse_json(res);
  REQUIRE(j.at("runs").size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(j.at("runs")[i].at("seed") == 5 + i);
    CHECK(j.at("runs")[i].at("status") == "success");
  }
  const auto& agg = j.at("aggregate");
  CHECK(agg.at("count") == 3);
  CHECK(agg.at("successes") == 3);
  CHECK(agg.at("iteration_limits") == 0);

  // The same batch computed with two worker threads reports identically.
  const auto threaded = run_cli("latin --input " + csv + " --seed 5 --runs 3",
                                "PERM_LLL_THREADS=2");
  json jt = parse_json(threaded);
  json js = j;
  strip_volatile(jt);
  strip_volatile(js);
  CHECK(jt == js);
}

TEST_CASE("latin criterion failure surfaces as exit 3 without force") {
  TempTree tmp;
  using permlll::apps::diagonal_run_matrix;
  const auto csv = tmp.write_matrix("latin8.csv", diagonal_run_matrix(8, 2));
  const auto res = run_cli("latin --input " + csv);
  CHECK(res.exit_code == 3);
  const json j = parse_json(res);
  CHECK(j.at("status") == "criterion-failed");
  CHECK(j.at("criterion").at("satisfied") == false);

  const auto forced = run_cli("latin --input " + csv + " --force --seed 2");
  CHECK(forced.exit_code == 0);
  const json jf = parse_json(forced);
  CHECK(jf.at("status") == "success");
  CHECK(jf.at("result").at("columns").size() == 8);
}

TEST_CASE("round-based mode solves the same instance") {
  TempTree tmp;
  using permlll::apps::diagonal_run_matrix;
  const auto csv = tmp.write_matrix("latin.csv", diagonal_run_matrix(12, 2));
  const auto res = run_cli("latin --input " + csv + " --mode par --seed 1");
  CHECK(res.exit_code == 0);
  const json j = parse_json(res);
  CHECK(j.at("status") == "success");
  CHECK(j.at("rounds").get<int>() >= 0);
}

TEST_CASE("remaining solvers run end to end through the binary") {
  TempTree tmp;
  using namespace permlll::apps;
  const auto csv20 = tmp.write_matrix("m20.csv", diagonal_run_matrix(20, 3));
  const auto st = run_cli("s-transversal --input " + csv20 + " --s 4 --seed 1");
  CHECK(st.exit_code == 0);
  CHECK(parse_json(st).at("status") == "success");

  const auto csv80 = tmp.write_matrix("m80.csv", diagonal_run_matrix(80, 2));
  const auto tau = cycle_cover_permutation(80);
  std::string tau_text = "80\n";
  for (int v : tau) tau_text += std::to_string(v + 1) + "\n";
  const auto tau_path = tmp.write("tau.txt", tau_text);
  const auto rb = run_cli("rainbow --input " + csv80 + " --tau " + tau_path + " --seed 1");
  CHECK(rb.exit_code == 0);
  CHECK(parse_json(rb).at("status") == "success");

  const BlockGraph g = random_block_graph(6, 10, 2, 31);
  std::string bg = std::to_string(g.vertices()) + " " + std::to_string(g.edges().size()) + " " +
                   std::to_string(g.blocks()) + " " + std::to_string(g.block_size()) + "\n";
  for (const auto& [u, v] : g.edges())
    bg += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  for (int b = 0; b < g.blocks(); ++b) {
    std::string line;
    for (int v : g.block(b)) line += (line.empty() ? "" : " ") + std::to_string(v + 1);
    bg += line + "\n";
  }
  const auto bg_path = tmp.write("blocks.txt", bg);
  const auto sc = run_cli("strong-color --input " + bg_path + " --seed 1 --force");
  CHECK(sc.exit_code == 0);
  CHECK(parse_json(sc).at("status") == "success");
  const auto it = run_cli("strong-color --iterative --input " + bg_path + " --seed 1");
  CHECK(it.exit_code == 0);
  const json jit = parse_json(it);
  CHECK(jit.at("status") == "success");
  // Each phase colors at least one new vertex, so the trace is monotone
  // and the final count covers the whole graph.
  REQUIRE(!jit.at("phases").empty());
  CHECK(jit.at("phases").size() <= 60);
  int prev_colored = 0;
  for (const auto& ph : jit.at("phases")) {
    const int after = ph.at("colored_after").get<int>();
    CHECK(after > prev_colored);
    prev_colored = after;
  }
  CHECK(prev_colored == 60);
  const auto iv =
      run_cli("independent-transversal --input " + bg_path + " --seed 1 --require 7 --force");
  CHECK(iv.exit_code == 0);
  const json jiv = parse_json(iv);
  CHECK(jiv.at("status") == "success");
  bool has7 = false;
  for (const auto& v : jiv.at("result").at("chosen")) has7 = has7 || (v.get<int>() == 7);
  CHECK(has7);

  const Hypergraph h1 = random_hypergraph(20, 12, 3, 3);
  const Hypergraph h2 = random_hypergraph(20, 12, 3, 4);
  auto hyper_text = [](const Hypergraph& h) {
    std::string s = std::to_string(h.vertices) + " " + std::to_string(h.edges.size()) + " " +
                    std::to_string(h.edge_size) + "\n";
    for (const auto& e : h.edges) {
      std::string line;
      for (int v : e) line += (line.empty() ? "" : " ") + std::to_string(v + 1);
      s += line + "\n";
    }
    return s;
  };
  const auto h1p = tmp.write("h1.txt", hyper_text(h1));
  const auto h2p = tmp.write("h2.txt", hyper_text(h2));
  const auto pk = run_cli("pack --h1 " + h1p + " --h2 " + h2p + " --n 40 --seed 1");
  CHECK(pk.exit_code == 0);
  CHECK(parse_json(pk).at("status") == "success");
}

TEST_CASE("self-check subcommand") {
  const auto res = run_cli("verify --check lfmis --seed 2");
  CHECK(res.exit_code == 0);
  const json j = parse_json(res);
  CHECK(j.at("status") == "success");
  CHECK(j.at("checks").at("first_mis").at("ok") == true);
}

TEST_CASE("text format renders without JSON punctuation") {
  TempTree tmp;
  const auto events = tmp.write("events.txt", kEvents);
  const auto res = run_cli("solve --input " + events + " --format text --seed 1");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("status") != std::string::npos);
  CHECK(res.out.find('{') == std::string::npos);
}
