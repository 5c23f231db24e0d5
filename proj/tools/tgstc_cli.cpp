// tgstc: strong triadic closure over static and streaming temporal networks.

#include <zlib.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <streambuf>
#include <string>
#include <vector>

#include "tgstc/tgstc.hpp"

using json = nlohmann::json;
using namespace tgstc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads plain or gzip-compressed files through zlib.
class GzStreamBuf : public std::streambuf {
 public:
  explicit GzStreamBuf(const std::string& path) : file_(gzopen(path.c_str(), "rb")) {
    if (!file_) throw IoError("cannot open " + path);
  }
  ~GzStreamBuf() override {
    if (file_) gzclose(file_);
  }
  GzStreamBuf(const GzStreamBuf&) = delete;
  GzStreamBuf& operator=(const GzStreamBuf&) = delete;

 protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    int n = gzread(file_, buf_, sizeof buf_);
    if (n < 0) throw IoError("read error in compressed input");
    if (n == 0) return traits_type::eof();
    setg(buf_, buf_, buf_ + n);
    return traits_type::to_int_type(*gptr());
  }

 private:
  gzFile file_;
  char buf_[1 << 16];
};

struct Input {
  std::unique_ptr<GzStreamBuf> buf;
  std::unique_ptr<std::istream> owned;
  std::istream* in = nullptr;
};

Input open_input(const std::string& path) {
  Input r;
  if (path.empty() || path == "-") {
    r.in = &std::cin;
    return r;
  }
  r.buf = std::make_unique<GzStreamBuf>(path);
  r.owned = std::make_unique<std::istream>(r.buf.get());
  r.in = r.owned.get();
  return r;
}

struct Output {
  std::ofstream file;
  std::ostream* out = &std::cout;
};

void open_output(Output& o, const std::string& path) {
  if (path.empty() || path == "-") return;
  o.file.open(path);
  if (!o.file) throw IoError("cannot write " + path);
  o.out = &o.file;
}

enum class Weighting { freq, decay, duration };

template <class F>
decltype(auto) with_weighting(Weighting w, F&& f) {
  switch (w) {
    case Weighting::decay: return f(DecayWeight{});
    case Weighting::duration: return f(DurationWeight{});
    case Weighting::freq: break;
  }
  return f(FrequencyWeight{});
}

json edge_list(const std::vector<EdgeKey>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back({e.u, e.v});
  return a;
}

// ---- static ---------------------------------------------------------------

struct StaticOpts {
  std::string input;
  std::string output;
  Weighting weighting = Weighting::freq;
  std::string algo = "pricing";
  bool unweighted = false;
  std::size_t oracle_cap = 20;
  std::size_t top_k = 100;
  RankBy rank = RankBy::weight;
  bool skip_self_loops = false;
  bool no_edges = false;
};

template <class Phi>
StrongWeakLabeling<typename Phi::weight_type> solve(const WeightedGraph<typename Phi::weight_type>& a,
                                                    const std::string& algo, bool unweighted, std::size_t cap) {
  if (algo == "pricing") return stc_pricing(a);
  if (algo == "matching") return stc_matching(a);
  if (algo == "highdeg") return stc_highdeg(a);
  if (algo == "exact") return stc_exact(a, unweighted ? ExactObjective::unweighted : ExactObjective::weighted, cap);
  throw UsageError("unknown algorithm " + algo);
}

template <class W>
json metrics_json(const WeightedGraph<W>& a, const StrongWeakLabeling<W>& lab, std::size_t k, RankBy rank) {
  auto s = strong_stats(a, lab);
  json j;
  j["pct_strong"] = s.pct_strong;
  j["mean_strong_weight"] = s.strong_empty ? json(nullptr) : json(s.mean_strong_weight);
  j["mean_weak_weight"] = s.weak_empty ? json(nullptr) : json(s.mean_weak_weight);
  if (a.edge_count() > 0) {
    auto pr = precision_recall_topk(a, lab, k, rank);
    j["top_k"] = pr.k;
    j["precision"] = pr.precision;
    j["recall"] = pr.recall;
    if (pr.truncated) {
      j["top_k_truncated"] = true;
      std::cerr << "warning: top-k " << k << " exceeds " << a.edge_count() << " aggregated edges\n";
    }
  }
  return j;
}

int cmd_static(const StaticOpts& o) {
  Input in = open_input(o.input);
  auto edges = read_edges(*in.in, o.skip_self_loops);
  Output out;
  open_output(out, o.output);

  return with_weighting(o.weighting, [&](auto phi) {
    using Phi = decltype(phi);
    auto agg = aggregate<Phi>(edges, phi);
    const auto& a = agg.graph();
    if (o.algo == "ilp-export-max" || o.algo == "ilp-export-min") {
      write_stc_lp(*out.out, a, o.algo == "ilp-export-max" ? IlpSense::maximize_strong : IlpSense::minimize_weak);
      return kExitOk;
    }
    auto lab = solve<Phi>(a, o.algo, o.unweighted, o.oracle_cap);
    json j;
    j["algo"] = o.algo;
    j["weighting"] = Phi::name;
    if (o.algo == "exact") j["objective"] = o.unweighted ? "unweighted" : "weighted";
    j["nodes"] = a.node_count();
    j["edges"] = a.edge_count();
    j["wedges"] = count_wedges(a);
    j["n_strong"] = lab.strong.size();
    j["n_weak"] = lab.weak.size();
    j["strong_weight"] = lab.strong_weight;
    j["weak_weight"] = lab.weak_weight;
    j["metrics"] = metrics_json(a, lab, o.top_k, o.rank);
    if (!o.no_edges) {
      j["strong"] = edge_list(lab.strong);
      j["weak"] = edge_list(lab.weak);
    }
    *out.out << j.dump() << '\n';
    return kExitOk;
  });
}

// ---- metrics --------------------------------------------------------------

struct MetricsOpts {
  std::string input;
  std::string output;
  Weighting weighting = Weighting::freq;
  std::vector<std::string> algos;
  std::size_t oracle_cap = 20;
  std::size_t top_k = 100;
  RankBy rank = RankBy::weight;
  bool skip_self_loops = false;
  std::string format = "csv";
};

int cmd_metrics(const MetricsOpts& o) {
  Input in = open_input(o.input);
  auto edges = read_edges(*in.in, o.skip_self_loops);
  Output out;
  open_output(out, o.output);
  std::vector<std::string> algos = o.algos;
  if (algos.empty()) algos = {"pricing", "matching", "highdeg", "exact-w", "exact-nw"};

  return with_weighting(o.weighting, [&](auto phi) {
    using Phi = decltype(phi);
    auto agg = aggregate<Phi>(edges, phi);
    const auto& a = agg.graph();
    json rows = json::array();
    if (o.format == "csv")
      *out.out << "algo,edges,n_strong,n_weak,pct_strong,mean_strong_weight,mean_weak_weight,strong_weight,"
                  "weak_weight,top_k,precision,recall\n";
    for (const auto& name : algos) {
      std::string algo = name;
      bool unweighted = false;
      if (name == "exact-w") algo = "exact";
      if (name == "exact-nw") algo = "exact", unweighted = true;
      auto lab = solve<Phi>(a, algo, unweighted, o.oracle_cap);
      auto s = strong_stats(a, lab);
      std::optional<PrecisionRecall> pr;
      if (a.edge_count() > 0) pr = precision_recall_topk(a, lab, o.top_k, o.rank);
      if (o.format == "csv") {
        auto& os = *out.out;
        os << name << ',' << a.edge_count() << ',' << s.n_strong << ',' << s.n_weak << ',' << s.pct_strong << ',';
        if (!s.strong_empty) os << s.mean_strong_weight;
        os << ',';
        if (!s.weak_empty) os << s.mean_weak_weight;
        os << ',' << lab.strong_weight << ',' << lab.weak_weight << ',';
        if (pr) os << pr->k << ',' << pr->precision << ',' << pr->recall;
        else os << ",,";
        os << '\n';
      } else {
        json j = metrics_json(a, lab, o.top_k, o.rank);
        j["algo"] = name;
        j["n_strong"] = s.n_strong;
        j["n_weak"] = s.n_weak;
        j["strong_weight"] = lab.strong_weight;
        j["weak_weight"] = lab.weak_weight;
        rows.push_back(j);
      }
    }
    if (o.format != "csv") *out.out << rows.dump() << '\n';
    return kExitOk;
  });
}

// ---- stream ---------------------------------------------------------------

struct StreamOpts {
  std::string input;
  std::string output;
  std::string stats;
  Weighting weighting = Weighting::freq;
  Timestamp delta = 0;
  std::string window_unit;
  double seconds_per_unit = 0;
  Timestamp stride = 1;
  StreamMode mode = StreamMode::dynamic;
  bool summary = false;
  bool with_weak = false;
  bool skip_unchanged = false;
  bool timing = false;
  bool skip_self_loops = false;
};

Timestamp resolve_delta(const StreamOpts& o) {
  if (o.delta > 0) {
    if (!o.window_unit.empty()) throw UsageError("--delta and --window are mutually exclusive");
    return o.delta;
  }
  if (o.window_unit.empty()) throw UsageError("stream requires --delta or --window");
  if (o.seconds_per_unit <= 0) throw UsageError("--window requires --seconds-per-unit");
  static const std::map<std::string, double> seconds{{"hour", 3600.0}, {"day", 86400.0}, {"week", 604800.0}};
  const double units = std::ceil(seconds.at(o.window_unit) / o.seconds_per_unit);
  return std::max<Timestamp>(1, static_cast<Timestamp>(units));
}

int cmd_stream(const StreamOpts& o) {
  StreamConfig cfg;
  cfg.delta = resolve_delta(o);
  cfg.stride = o.stride;
  cfg.mode = o.mode;
  cfg.keep_labeling = !o.summary;
  cfg.emit_unchanged = !o.skip_unchanged;

  Input in = open_input(o.input);
  EdgeReader reader(*in.in, o.skip_self_loops);
  Output out;
  open_output(out, o.output);
  std::ofstream stats;
  if (!o.stats.empty()) {
    stats.open(o.stats);
    if (!stats) throw IoError("cannot write " + o.stats);
    stats << "t_start,t_end,changed,edges,wedge_vertices,wedge_edges,sigma_length,examined,n_strong,n_weak,weak_weight";
    if (o.timing) stats << ",wall_ns";
    stats << '\n';
  }

  with_weighting(o.weighting, [&](auto phi) {
    using Phi = decltype(phi);
    using W = typename Phi::weight_type;
    auto sink = [&](const WindowResult<W>& r) {
      json j;
      j["t_start"] = r.window.start;
      j["t_end"] = r.window.end();
      j["changed"] = r.changed;
      j["n_strong"] = r.n_strong;
      j["n_weak"] = r.n_weak;
      j["weak_weight"] = r.weak_weight;
      if (!o.summary && r.changed) {
        j["strong"] = edge_list(r.strong);
        if (o.with_weak) j["weak"] = edge_list(r.weak);
      }
      *out.out << j.dump() << '\n';
      if (stats.is_open()) {
        stats << r.window.start << ',' << r.window.end() << ',' << (r.changed ? 1 : 0) << ','
              << (r.n_strong + r.n_weak) << ',' << r.wedge_vertices << ',' << r.wedge_edges << ','
              << r.sigma_length << ',' << r.examined << ',' << r.n_strong << ',' << r.n_weak << ','
              << r.weak_weight;
        if (o.timing) stats << ',' << r.wall_ns;
        stats << '\n';
      }
    };
    run_stream<Phi>([&] { return reader.next(); }, cfg, sink, phi);
  });
  if (reader.skipped_self_loops() > 0)
    std::cerr << "skipped " << reader.skipped_self_loops() << " self-loop lines\n";
  return kExitOk;
}

// ---- synth ----------------------------------------------------------------

struct SynthOpts {
  SynthConfig cfg;
  std::string output;
};

int cmd_synth(const SynthOpts& o) {
  auto edges = generate_synthetic_stream(o.cfg);
  Output out;
  open_output(out, o.output);
  const auto& c = o.cfg;
  *out.out << "# synthetic temporal edges: nodes=" << c.nodes << " edges=" << c.edges << " lifetime=" << c.lifetime
           << " pairs=" << c.pairs << " locality=" << c.locality << " exponent=" << c.exponent
           << " burstiness=" << c.burstiness << " seed=" << c.seed << '\n';
  write_edge_list(*out.out, edges);
  return kExitOk;
}

void add_weighting(CLI::App* cmd, Weighting& w) {
  std::map<std::string, Weighting> m{{"freq", Weighting::freq}, {"decay", Weighting::decay}, {"duration", Weighting::duration}};
  cmd->add_option("--weighting", w, "edge weighting: freq, decay, duration")
      ->transform(CLI::CheckedTransformer(m, CLI::ignore_case));
}

void add_rank(CLI::App* cmd, RankBy& r) {
  std::map<std::string, RankBy> m{{"weight", RankBy::weight}, {"degree", RankBy::degree}};
  cmd->add_option("--rank-by", r, "reference ranking for top-k: weight (default) or degree (d(u)+d(v))")
      ->transform(CLI::CheckedTransformer(m, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong triadic closure labeling for temporal networks"};
  app.require_subcommand(1);

  StaticOpts so;
  auto* st = app.add_subcommand("static", "aggregate the whole stream and solve once");
  st->add_option("-i,--input", so.input, "edge list (u v t [dur]); gzip accepted; - for stdin")->required();
  st->add_option("-o,--output", so.output, "result file (JSON, or LP for ilp-export-*)");
  add_weighting(st, so.weighting);
  st->add_option("--algo", so.algo, "pricing, matching, highdeg, exact, ilp-export-max, ilp-export-min")
      ->check(CLI::IsMember({"pricing", "matching", "highdeg", "exact", "ilp-export-max", "ilp-export-min"}));
  st->add_flag("--unweighted", so.unweighted, "exact: minimize the number of weak edges");
  st->add_option("--oracle-cap", so.oracle_cap, "exact: maximum wedge-graph vertices")->check(CLI::Range(1, 64));
  st->add_option("--top-k", so.top_k, "reference set size for precision/recall")->check(CLI::PositiveNumber);
  add_rank(st, so.rank);
  st->add_flag("--no-edges", so.no_edges, "omit strong/weak edge lists");
  st->add_flag("--skip-self-loops", so.skip_self_loops, "drop u == v lines instead of failing");

  MetricsOpts mo;
  auto* me = app.add_subcommand("metrics", "strong-edge statistics and top-k precision/recall per algorithm");
  me->add_option("-i,--input", mo.input, "edge list")->required();
  me->add_option("-o,--output", mo.output, "report file");
  add_weighting(me, mo.weighting);
  me->add_option("--algo", mo.algos, "pricing, matching, highdeg, exact-w, exact-nw (repeatable)")
      ->check(CLI::IsMember({"pricing", "matching", "highdeg", "exact-w", "exact-nw"}));
  me->add_option("--oracle-cap", mo.oracle_cap, "exact: maximum wedge-graph vertices")->check(CLI::Range(1, 64));
  me->add_option("--top-k", mo.top_k, "reference set size")->check(CLI::PositiveNumber);
  add_rank(me, mo.rank);
  me->add_option("--format", mo.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  me->add_flag("--skip-self-loops", mo.skip_self_loops, "drop u == v lines instead of failing");

  StreamOpts ro;
  auto* sr = app.add_subcommand("stream", "sliding-window labeling, one JSON line per window");
  sr->add_option("-i,--input", ro.input, "chronological edge list")->required();
  sr->add_option("-o,--output", ro.output, "JSON-lines file (default stdout)");
  sr->add_option("--stats", ro.stats, "per-window statistics CSV");
  add_weighting(sr, ro.weighting);
  sr->add_option("--delta", ro.delta, "window length in time units")->check(CLI::PositiveNumber);
  sr->add_option("--window", ro.window_unit, "window length as hour, day or week")
      ->check(CLI::IsMember({"hour", "day", "week"}));
  sr->add_option("--seconds-per-unit", ro.seconds_per_unit, "seconds per timestamp unit, for --window");
  sr->add_option("--stride", ro.stride, "window step")->check(CLI::PositiveNumber);
  std::map<std::string, StreamMode> modes{{"dynamic", StreamMode::dynamic}, {"recompute", StreamMode::recompute}};
  sr->add_option("--mode", ro.mode, "dynamic or recompute")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  sr->add_flag("--summary", ro.summary, "counts only, no edge lists");
  sr->add_flag("--with-weak", ro.with_weak, "also list weak edges");
  sr->add_flag("--skip-unchanged", ro.skip_unchanged, "emit only windows whose edge set changed");
  sr->add_flag("--timing", ro.timing, "add wall time to the stats CSV");
  sr->add_flag("--skip-self-loops", ro.skip_self_loops, "drop u == v lines instead of failing");

  SynthOpts yo;
  auto* sy = app.add_subcommand("synth", "write a synthetic chronological edge list");
  sy->add_option("-o,--output", yo.output, "file (default stdout)");
  sy->add_option("--nodes", yo.cfg.nodes, "node count");
  sy->add_option("--edges", yo.cfg.edges, "temporal edge count");
  sy->add_option("--lifetime", yo.cfg.lifetime, "timestamps 0 .. lifetime-1");
  sy->add_option("--pairs", yo.cfg.pairs, "distinct node pairs (0: 3 x nodes)");
  sy->add_option("--locality", yo.cfg.locality, "max id distance of a pair");
  sy->add_option("--exponent", yo.cfg.exponent, "pair popularity exponent");
  sy->add_option("--burstiness", yo.cfg.burstiness, "activity spread as a fraction of lifetime");
  sy->add_option("--seed", yo.cfg.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (st->parsed()) return cmd_static(so);
    if (me->parsed()) return cmd_metrics(mo);
    if (sr->parsed()) return cmd_stream(ro);
    if (sy->parsed()) return cmd_synth(yo);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
