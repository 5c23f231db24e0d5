#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TGSTC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(TGSTC_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "tgstc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

}  // namespace

TEST(Cli, StaticExactFigureOne) {
  auto r = run("static -i " + data("fig1.txt") + " --algo exact --top-k 2");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["weak_weight"], 2);
  EXPECT_EQ(j["strong"], json::parse("[[0,1],[2,3]]"));
  EXPECT_EQ(j["metrics"]["pct_strong"], 50.0);
  EXPECT_EQ(j["metrics"]["precision"], 1.0);
}

TEST(Cli, StaticExactUnweighted) {
  auto r = run("static -i " + data("fig1.txt") + " --algo exact --unweighted");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["weak"], json::parse("[[0,1]]"));
  EXPECT_EQ(j["n_strong"], 3);
}

TEST(Cli, IlpExportWritesModel) {
  auto out = scratch("fig1.lp");
  auto r = run("static -i " + data("fig1.txt") + " --algo ilp-export-min -o " + out.string());
  ASSERT_EQ(r.code, 0);
  auto text = slurp(out);
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find(" w0: y_0_1 + y_1_2 >= 1"), std::string::npos);
  EXPECT_NE(text.find(" w1: y_0_1 + y_1_3 >= 1"), std::string::npos);
  EXPECT_EQ(text.find(" w2:"), std::string::npos);
}

TEST(Cli, PricingOnTriangleAllStrong) {
  auto in = scratch("tri.txt");
  std::ofstream(in) << "0 1 1\n1 2 2\n0 2 3\n";
  auto r = run("static -i " + in.string() + " --algo pricing");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["n_weak"], 0);
}

TEST(Cli, StreamOneRecordPerWindow) {
  auto r = run("stream -i " + data("window_demo.txt") + " --delta 3");
  ASSERT_EQ(r.code, 0);
  auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 5u);
  EXPECT_EQ(recs[1]["t_start"], 2);
  EXPECT_EQ(recs[1]["t_end"], 4);
  EXPECT_TRUE(recs[0].contains("strong"));
  EXPECT_FALSE(recs[0].contains("weak"));
}

TEST(Cli, StreamModesAgreeOnWedgeColumns) {
  auto a = scratch("dyn.csv"), b = scratch("rec.csv");
  ASSERT_EQ(run("stream -i " + data("window_demo.txt") + " --delta 3 --summary --stats " + a.string()).code, 0);
  ASSERT_EQ(
      run("stream -i " + data("window_demo.txt") + " --delta 3 --summary --mode recompute --stats " + b.string()).code,
      0);
  auto cols = [](const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      std::istringstream ls(l);
      std::string f, row;
      for (int i = 0; i < 6 && std::getline(ls, f, ','); ++i) row += f + ",";
      out.push_back(row);
    }
    return out;
  };
  auto x = cols(slurp(a)), y = cols(slurp(b));
  ASSERT_EQ(x.size(), 6u);
  EXPECT_EQ(x, y);
}

TEST(Cli, StreamEmptyInput) {
  auto in = scratch("empty.txt");
  std::ofstream(in) << "# nothing\n";
  auto r = run("stream -i " + in.string() + " --delta 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, StreamWindowUnits) {
  auto in = scratch("hours.txt");
  std::ofstream(in) << "0 1 0\n1 2 1\n2 3 4\n";
  auto r = run("stream -i " + in.string() + " --window hour --seconds-per-unit 1800 --summary");
  ASSERT_EQ(r.code, 0);
  auto recs = lines(r.out);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs[0]["t_end"], 1);  // one hour = two units of 1800 s
  EXPECT_EQ(run("stream -i " + in.string() + " --window hour").code, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("stream -i " + data("fig1.txt")).code, 1);  // no window length
  EXPECT_EQ(run("static -i " + data("fig1.txt") + " --algo nope").code, 1);
  auto loop = scratch("loop.txt");
  std::ofstream(loop) << "5 5 9\n";
  EXPECT_EQ(run("static -i " + loop.string()).code, 2);
  EXPECT_EQ(run("static -i " + loop.string() + " --skip-self-loops").code, 0);
  auto order = scratch("order.txt");
  std::ofstream(order) << "0 1 5\n1 2 4\n";
  EXPECT_EQ(run("stream -i " + order.string() + " --delta 2").code, 2);
  EXPECT_EQ(run("static -i " + data("fig1.txt") + " --weighting duration").code, 2);
  EXPECT_EQ(run("static -i /nonexistent/file --algo pricing").code, 2);
  EXPECT_EQ(run("static -i " + data("fig1.txt") + " --algo exact --oracle-cap 3").code, 3);
}

TEST(Cli, MetricsCsv) {
  auto r = run("metrics -i " + data("fig1.txt") + " --top-k 2 --algo exact-w --algo exact-nw");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string header, w, nw;
  std::getline(in, header);
  std::getline(in, w);
  std::getline(in, nw);
  EXPECT_EQ(w, "exact-w,4,2,2,50,6,1,12,2,2,1,1");
  EXPECT_EQ(nw.substr(0, 14), "exact-nw,4,3,1");
  EXPECT_NE(nw.find(",2,0.333333,0.5"), std::string::npos);
}

TEST(Cli, SynthDeterministicAndParseable) {
  auto a = run("synth --nodes 100 --edges 5000 --seed 1");
  auto b = run("synth --nodes 100 --edges 5000 --seed 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("synth --nodes 100 --edges 5000 --seed 2").out);
  auto file = scratch("synth.txt");
  std::ofstream(file) << a.out;
  EXPECT_EQ(run("static -i " + file.string() + " --algo pricing --no-edges").code, 0);

  auto none = run("synth --edges 0");
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(std::count(none.out.begin(), none.out.end(), '\n'), 1);
  EXPECT_EQ(none.out[0], '#');
}

TEST(Cli, GzipInput) {
  auto gz = scratch("fig1.txt.gz");
  std::string cmd = "gzip -c " + data("fig1.txt") + " > " + gz.string();
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  auto r = run("static -i " + gz.string() + " --algo exact");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["weak_weight"], 2);
}

TEST(Cli, RepeatRunsByteIdentical) {
  auto a = run("stream -i " + data("window_demo.txt") + " --delta 2 --with-weak");
  auto b = run("stream -i " + data("window_demo.txt") + " --delta 2 --with-weak");
  EXPECT_EQ(a.out, b.out);
}
