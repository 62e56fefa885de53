// lexp: command-line front end for line expansions of hypergraphs.
//
// Exit codes: 0 success, 1 a check or validation failed, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lexp/checks.hpp"
#include "lexp/error.hpp"
#include "lexp/expansions.hpp"
#include "lexp/gcn.hpp"
#include "lexp/graph.hpp"
#include "lexp/random.hpp"
#include "lexp/reconstruction.hpp"
#include "lexp/stats.hpp"
#include "lexp/unify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Raised for problems that map to exit code 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lexp::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lexp::Error("cannot open '" + path + "'");
  return in;
}

// Writes to a temporary sibling and renames, so a failed run never leaves a
// partial output behind. "-" means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw lexp::Error("cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw lexp::Error("cannot write '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

// "out.hg" -> "out.<tag>.hg"
std::string with_suffix(const std::string& path, const std::string& tag) {
  std::filesystem::path p(path);
  const auto ext = p.extension().string();
  p.replace_extension();
  return p.string() + "." + tag + ext;
}

// ---- expand ---------------------------------------------------------------

struct ExpandOptions {
  std::string input;
  std::string out = "-";
  std::string mode = "line";
  bool unlabeled = false;
};

int cmd_expand(const ExpandOptions& o) {
  const auto h = lexp::load_hypergraph(o.input);
  lexp::GraphDump dump;
  if (o.mode == "line")
    dump = lexp::line_expansion_dump(lexp::line_expand(h), !o.unlabeled);
  else if (o.mode == "clique")
    dump = lexp::clique_expansion_dump(h);
  else
    dump = lexp::star_expansion_dump(h);
  std::ostringstream ss;
  lexp::write_graph_dump(ss, dump);
  write_output(o.out, ss.str());
  return kOk;
}

// ---- stats ----------------------------------------------------------------

struct StatsOptions {
  std::string input;
  std::size_t delta_v = 8;
  std::size_t delta_e = 8;
  bool json = false;
};

int cmd_stats(const StatsOptions& o) {
  const auto h = lexp::load_hypergraph(o.input);
  const auto s = lexp::structure_stats(h, {o.delta_v, o.delta_e});
  std::cout << (o.json ? lexp::stats_json(s) : lexp::stats_table(s));
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string dump;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  bool reconstruct = false;
  bool json = false;
  bool quiet = false;
};

class VerifyLog {
 public:
  explicit VerifyLog(const VerifyOptions& o) : o_(o) {}

  void add(const lexp::EquivalenceReport& r) {
    ++total_;
    if (!r.pass) ++failed_;
    if (o_.json)
      std::cout << r.json_line() << '\n';
    else if (!r.pass || !o_.quiet)
      std::cout << r.text() << '\n';
  }

  void note(const std::string& line) {
    if (!o_.json && !o_.quiet) std::cout << "note  " << line << '\n';
  }

  int finish() const {
    if (!o_.json)
      std::cout << (failed_ ? "FAILED " : "OK ") << (total_ - failed_) << "/" << total_
                << " checks passed\n";
    return failed_ ? kCheckFailed : kOk;
  }

 private:
  const VerifyOptions& o_;
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
};

void verify_hypergraph(const lexp::Hypergraph& h, std::optional<std::uint64_t> seed,
                       bool reconstruct, VerifyLog& log) {
  const auto report = lexp::validate(h);
  if (!report.ok) {
    log.add(lexp::make_report("validate", "no empty hyperedges", report.summary(), 1.0, 0.0,
                              h.num_vertices(), h.num_hyperedges(), seed));
    return;
  }
  log.add(lexp::check_block_gram(h, seed));
  log.add(lexp::check_projection_adjacency(h, seed));
  log.add(lexp::check_size_formulas(h, seed));
  try {
    log.add(lexp::check_line_graph_of_star(h, seed));
  } catch (const lexp::SizeError& e) {
    log.note(std::string("line-graph comparison skipped: ") + e.what());
  }
  log.add(lexp::check_labeled_round_trip(h, seed));

  // The degraded adjacency divides by vertex degree; isolated vertices are
  // dropped first.
  const auto core = lexp::compact(h);
  if (core.num_vertices() > 0 && core.num_vertices() <= lexp::kMaxAnalysisVertices) {
    log.add(lexp::check_star_equivalence(core, lexp::kDefaultTolerance,
                                         lexp::StarNormalizer::weighted_degree, seed));
    const auto plain = lexp::check_star_equivalence(core, lexp::kDefaultTolerance,
                                                    lexp::StarNormalizer::vertex_degree, seed);
    log.note("star with unweighted vertex-degree normalizer: max_diff " +
             std::to_string(plain.max_diff) + (plain.pass ? " (matches)" : " (differs)"));
  }
  if (reconstruct) {
    if (auto r = lexp::check_unlabeled_round_trip(h, seed))
      log.add(*r);
    else
      log.note("unlabeled reconstruction skipped: instance beyond exact-search limits");
  }
}

int cmd_verify(const VerifyOptions& o) {
  VerifyLog log(o);
  if (!o.dump.empty()) {
    auto in = open_input(o.dump);
    log.add(lexp::check_dump(lexp::read_graph_dump(in)));
  }
  if (!o.input.empty()) {
    verify_hypergraph(lexp::load_hypergraph(o.input), std::nullopt, o.reconstruct, log);
  } else if (o.dump.empty()) {
    lexp::Rng params(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const std::uint64_t seed = params.next_u64();
      const auto nv = 1 + static_cast<std::size_t>(params.below(20));
      const auto ne = 1 + static_cast<std::size_t>(params.below(15));
      const double p = params.uniform(0.1, 0.5);
      const auto h = lexp::random_hypergraph(nv, ne, p, seed);
      verify_hypergraph(h, seed, o.reconstruct && nv <= 8 && ne <= 6, log);

      const auto n = 2 + static_cast<std::size_t>(params.below(29));
      const auto g = lexp::random_connected_graph(n, params.uniform(0.05, 0.4), seed);
      log.add(lexp::check_simple_graph_factor(g, lexp::kDefaultTolerance, seed));
    }
  }
  return log.finish();
}

// ---- train ----------------------------------------------------------------

struct TrainOptions {
  std::string hypergraph;
  std::string features;
  std::string labels;
  std::string split;
  std::string config;
  std::string out = "-";
  std::optional<std::size_t> epochs;
  std::optional<std::uint64_t> seed;
  bool wall_time = false;
};

int cmd_train(const TrainOptions& o) {
  const auto h = lexp::load_hypergraph(o.hypergraph);
  auto features_in = open_input(o.features);
  auto x = lexp::read_features_csv(features_in);
  auto labels_in = open_input(o.labels);
  auto labels = lexp::read_labels(labels_in, x.rows());
  auto split_in = open_input(o.split);
  const auto split = lexp::read_split_json(split_in);
  lexp::TrainConfig cfg;
  if (!o.config.empty()) cfg = lexp::parse_train_config(slurp(o.config));
  if (o.epochs) cfg.epochs = *o.epochs;
  if (o.seed) cfg.seed = *o.seed;

  const auto data = lexp::assemble_dataset(std::move(x), std::move(labels), split);
  const auto result = lexp::train(h, data, cfg);
  write_output(o.out, lexp::report_json(result.report, o.wall_time));
  if (result.report.diverged) {
    std::cerr << "training diverged: " << result.report.message << '\n';
    return kCheckFailed;
  }
  std::cerr << "test accuracy " << result.report.test_accuracy << " over "
            << result.report.test_count << " vertices\n";
  return kOk;
}

// ---- reconstruct ----------------------------------------------------------

struct ReconstructOptions {
  std::string input;
  std::string out = "-";
};

int cmd_reconstruct(const ReconstructOptions& o) {
  auto in = open_input(o.input);
  const auto dump = lexp::read_graph_dump(in);
  if (dump.fully_labeled()) {
    const auto h = lexp::back_project_labeled(lexp::line_expansion_from_dump(dump));
    write_output(o.out, lexp::render_hypergraph(h));
    return kOk;
  }
  const auto rec = lexp::krausz_reconstruct(dump.graph);
  if (o.out.empty() || o.out == "-") {
    std::cout << "# candidate 0\n" << lexp::render_hypergraph(rec.candidates[0]);
    std::cout << "# candidate 1 (dual)\n" << lexp::render_hypergraph(rec.candidates[1]);
  } else {
    write_output(with_suffix(o.out, "0"), lexp::render_hypergraph(rec.candidates[0]));
    write_output(with_suffix(o.out, "1"), lexp::render_hypergraph(rec.candidates[1]));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line expansions of hypergraphs: build, inspect, verify, train, reconstruct"};
  app.require_subcommand(1);

  ExpandOptions expand;
  auto* ex = app.add_subcommand("expand", "Write the clique, star or line expansion as a graph dump");
  ex->add_option("--input,-i", expand.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  ex->add_option("--out,-o", expand.out, "Output path ('-' for stdout)");
  ex->add_option("--mode", expand.mode, "Expansion kind")
      ->check(CLI::IsMember({"line", "clique", "star"}));
  ex->add_flag("--unlabeled", expand.unlabeled, "Replace line-node labels with '?'");

  StatsOptions stats;
  auto* st = app.add_subcommand("stats", "Print size and density figures");
  st->add_option("--input,-i", stats.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  st->add_option("--delta-v", stats.delta_v, "Vertex-similar sampling threshold")
      ->check(CLI::PositiveNumber);
  st->add_option("--delta-e", stats.delta_e, "Hyperedge-similar sampling threshold")
      ->check(CLI::PositiveNumber);
  st->add_flag("--json", stats.json, "Emit JSON");

  VerifyOptions verify;
  auto* ve = app.add_subcommand("verify", "Check the expansion identities on a file or a random corpus");
  ve->add_option("--input,-i", verify.input, "Hypergraph file (otherwise a random corpus)")
      ->check(CLI::ExistingFile);
  ve->add_option("--dump", verify.dump, "Labeled line-expansion dump to check for consistency")
      ->check(CLI::ExistingFile);
  ve->add_option("--trials", verify.trials, "Random instances");
  ve->add_option("--seed", verify.seed, "Corpus seed");
  ve->add_flag("--reconstruct", verify.reconstruct, "Also reconstruct from unlabeled topology");
  ve->add_flag("--json", verify.json, "One JSON report per line");
  ve->add_flag("--quiet,-q", verify.quiet, "Only print failures and the summary");

  TrainOptions tr;
  auto* tc = app.add_subcommand("train", "Train the line-expansion GCN and write a JSON report");
  tc->add_option("--hypergraph", tr.hypergraph, "Hypergraph file")->required()->check(CLI::ExistingFile);
  tc->add_option("--features", tr.features, "Feature CSV")->required()->check(CLI::ExistingFile);
  tc->add_option("--labels", tr.labels, "Label file")->required()->check(CLI::ExistingFile);
  tc->add_option("--split", tr.split, "Split JSON")->required()->check(CLI::ExistingFile);
  tc->add_option("--config", tr.config, "key = value config")->check(CLI::ExistingFile);
  tc->add_option("--out,-o", tr.out, "Report path ('-' for stdout)");
  tc->add_option("--epochs", tr.epochs, "Override epochs");
  tc->add_option("--seed", tr.seed, "Override seed");
  tc->add_flag("--wall-time", tr.wall_time, "Include wall time in the report");

  ReconstructOptions rc;
  auto* re = app.add_subcommand("reconstruct", "Recover a hypergraph from a line-expansion dump");
  re->add_option("--input,-i", rc.input, "Graph dump")->required()->check(CLI::ExistingFile);
  re->add_option("--out,-o", rc.out, "Output path; unlabeled input writes <out>.0 and <out>.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ex) return cmd_expand(expand);
    if (*st) return cmd_stats(stats);
    if (*ve) return cmd_verify(verify);
    if (*tc) return cmd_train(tr);
    if (*re) return cmd_reconstruct(rc);
  } catch (const lexp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lexp::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lexp::NotLineExpansionError& e) {
    std::cerr << "not a line expansion: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const lexp::InconsistentInputError& e) {
    std::cerr << "inconsistent input: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const lexp::InvalidInputError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const lexp::SizeError& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const lexp::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const lexp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
