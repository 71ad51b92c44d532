#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cech/clustering.hpp"
#include "cech/diagnostics.hpp"
#include "cech/driver.hpp"
#include "cech/generators.hpp"
#include "cech/io.hpp"
#include "cech/net_tree.hpp"
#include "cech/plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitBound = 3;

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

struct GenerateOpts {
  std::string kind;
  std::string out;
  std::uint64_t seed = 0;
  std::vector<int> counts;
  std::vector<double> radii;
  double noise = 0.02;
  int n = 0;
  double step = cech::kLorenzDefaultStep;
  int discard = cech::kLorenzDefaultDiscard;
  int max_lag = 100;
  int embed_dim = 3;
};

int cmd_generate(const GenerateOpts& g) {
  cech::PointCloud cloud;
  if (g.kind == "circle-wedge") {
    cloud = cech::gen_circle_wedge(g.counts, g.radii, g.noise, g.seed);
  } else if (g.kind == "rp2") {
    cloud = cech::gen_rp2(g.n, g.seed);
  } else if (g.kind == "lorenz-embed") {
    const auto emb = cech::lorenz_delay_embedding(g.n, g.step, g.discard, g.max_lag, g.embed_dim);
    std::cout << "delay=" << emb.delay << "\n";
    cloud = emb.cloud;
  } else {
    throw CLI::ValidationError("unknown generator kind: " + g.kind);
  }
  cech::save_point_cloud(g.out, cloud);
  std::cout << "points=" << cloud.size() << "\n";
  return kExitOk;
}

struct RunOpts {
  std::string engine;
  std::string cloud_path;
  std::string out;
  std::string trace_out;
  std::string dendro_in;
  std::string dendro_out;
  double epsilon = 0.0;
  double alpha_max = 1.0;
  double alpha0 = 0.0;
  int max_dim = 2;
  std::size_t batch = 1000;
  std::uint64_t seed = 0;
  std::size_t memory_cap = 5000000;
};

int cmd_run(const RunOpts& r) {
  const cech::PointCloud cloud = cech::load_point_cloud(r.cloud_path);

  if (r.engine == "oracle") {
    const auto diagram = cech::oracle_cech(cloud, r.alpha_max, r.max_dim, r.memory_cap);
    cech::save_diagram(r.out, diagram);
    std::cout << "intervals=" << diagram.intervals.size() << "\n";
    return kExitOk;
  }

  if (r.engine == "nettree") {
    if (r.alpha0 <= 0.0) throw CLI::ValidationError("nettree requires --alpha0 > 0");
    cech::NetRunResult result;
    try {
      result = cech::run_net_persistence(cloud, r.alpha0, r.epsilon, r.alpha_max, r.max_dim,
                                         r.memory_cap);
    } catch (const cech::MemoryCapExceeded& e) {
      if (!r.trace_out.empty()) cech::save_trace(r.trace_out, e.partial_trace);
      std::cerr << "error: " << e.what() << "\n";
      return kExitComputation;
    } catch (const std::runtime_error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitComputation;
    }
    cech::save_diagram(r.out, result.diagram);
    if (!r.trace_out.empty()) cech::save_trace(r.trace_out, result.trace);
    std::cout << "intervals=" << result.diagram.intervals.size() << "\n"
              << "final_simplices=" << result.final_simplex_count << "\n";
    return kExitOk;
  }

  if (r.engine == "cech" || r.engine == "collapse") {
    cech::RunConfig cfg;
    cfg.epsilon = (r.engine == "cech") ? 0.0 : r.epsilon;
    cfg.alpha_max = r.alpha_max;
    cfg.max_dim = r.max_dim;
    cfg.batch = r.batch;
    cfg.seed = r.seed;
    cfg.memory_cap = r.memory_cap;

    cech::Dendrogram dendro;
    if (!r.dendro_in.empty())
      dendro = cech::load_dendrogram(r.dendro_in);
    else
      dendro = cech::complete_linkage(cloud);
    if (!r.dendro_out.empty()) cech::save_dendrogram(r.dendro_out, dendro);

    cech::CollapseResult result;
    try {
      result = cech::run_collapse(cloud, cfg, dendro);
    } catch (const cech::MemoryCapExceeded& e) {
      if (!r.trace_out.empty()) cech::save_trace(r.trace_out, e.partial_trace);
      std::cerr << "error: " << e.what() << "\n";
      return kExitComputation;
    }
    cech::save_diagram(r.out, result.diagram);
    if (!r.trace_out.empty()) cech::save_trace(r.trace_out, result.trace);
    std::cout << "intervals=" << result.diagram.intervals.size() << "\n"
              << "final_simplices=" << result.final_simplex_count << "\n"
              << "collapse_rounds=" << result.levels << "\n";
    return kExitOk;
  }

  throw CLI::ValidationError("unknown engine: " + r.engine);
}

struct CompareOpts {
  std::string a, b;
  int dim = 1;
  bool log_scale = false;
  double floor_value = 0.0;  // 0 = auto: 1e-3 * max death seen
  double bound = -1.0;
  double cap = 0.0;  // cap deaths at this scale before comparing (0 = off)
};

int cmd_compare(const CompareOpts& c) {
  cech::PersistenceDiagram a = cech::load_diagram(c.a);
  cech::PersistenceDiagram b = cech::load_diagram(c.b);
  if (c.cap > 0.0) {
    a = a.capped(c.cap);
    b = b.capped(c.cap);
  }
  double distance;
  if (c.log_scale) {
    double floor_value = c.floor_value;
    if (floor_value <= 0.0) {
      double top = 0.0;
      for (const auto& iv : a.intervals) top = std::max(top, iv.essential() ? iv.birth : iv.death);
      for (const auto& iv : b.intervals) top = std::max(top, iv.essential() ? iv.birth : iv.death);
      floor_value = (top > 0.0) ? 1e-3 * top : 1e-3;
      std::cout << "floor=" << floor_value << "\n";
    }
    distance = cech::log_bottleneck(a, b, c.dim, floor_value);
  } else {
    distance = cech::bottleneck(a, b, c.dim);
  }
  std::cout << "distance=" << distance << "\n";
  if (c.bound >= 0.0) {
    const double limit = c.log_scale ? std::log(c.bound) : c.bound;
    std::cout << "bound=" << limit << "\n";
    if (distance > limit) return kExitBound;
  }
  return kExitOk;
}

struct PlotOpts {
  std::string input;
  std::string out;
  std::string kind = "diagram";
  double alpha_max = 0.0;
};

int cmd_plot(const PlotOpts& p) {
  if (p.kind == "diagram") {
    const auto diagram = cech::load_diagram(p.input);
    double alpha_max = p.alpha_max;
    if (alpha_max <= 0.0) {
      for (const auto& iv : diagram.intervals)
        alpha_max = std::max(alpha_max, iv.essential() ? iv.birth : iv.death);
      if (alpha_max <= 0.0) alpha_max = 1.0;
    }
    write_text(p.out, cech::plot_diagram_svg(diagram, alpha_max));
  } else if (p.kind == "trace") {
    write_text(p.out, cech::plot_trace_svg(cech::load_trace(p.input)));
  } else {
    throw CLI::ValidationError("unknown plot kind: " + p.kind);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cech persistence with collapse and net-tree approximation"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "Sample an experiment point cloud");
  g->add_option("kind", gen.kind, "circle-wedge | rp2 | lorenz-embed")->required();
  g->add_option("--out", gen.out, "output point-cloud file")->required();
  g->add_option("--seed", gen.seed, "random seed")->required();
  g->add_option("--counts", gen.counts, "points per circle (circle-wedge)");
  g->add_option("--radii", gen.radii, "circle radii (circle-wedge)");
  g->add_option("--noise", gen.noise, "radial noise fraction (circle-wedge)");
  g->add_option("--n", gen.n, "sample count (rp2) or series length (lorenz-embed)");
  g->add_option("--step", gen.step, "integrator step (lorenz-embed)");
  g->add_option("--discard", gen.discard, "transient samples to drop (lorenz-embed)");
  g->add_option("--max-lag", gen.max_lag, "autocorrelation search bound (lorenz-embed)");
  g->add_option("--embed-dim", gen.embed_dim, "embedding dimension (lorenz-embed)");

  RunOpts run;
  auto* r = app.add_subcommand("run", "Compute a persistence diagram");
  r->add_option("engine", run.engine, "cech | collapse | nettree | oracle")->required();
  r->add_option("--cloud", run.cloud_path, "input point-cloud file")->required();
  r->add_option("--out", run.out, "output diagram file")->required();
  r->add_option("--trace", run.trace_out, "output trace file (collapse/nettree)");
  r->add_option("--epsilon", run.epsilon, "collapse aggressiveness / net growth");
  r->add_option("--alpha-max", run.alpha_max, "terminal scale")->required();
  r->add_option("--alpha0", run.alpha0, "net-tree base scale");
  r->add_option("--max-dim", run.max_dim, "largest simplex dimension D");
  r->add_option("--batch", run.batch, "adds between collapse scans (L)");
  r->add_option("--seed", run.seed, "seed recorded with the run");
  r->add_option("--memory-cap", run.memory_cap, "simplex budget before aborting");
  r->add_option("--dendrogram-in", run.dendro_in, "precomputed dendrogram file");
  r->add_option("--dendrogram-out", run.dendro_out, "write the dendrogram used");

  CompareOpts cmp;
  auto* c = app.add_subcommand("compare", "Bottleneck distance between diagrams");
  c->add_option("a", cmp.a, "first diagram")->required();
  c->add_option("b", cmp.b, "second diagram")->required();
  c->add_option("--dim", cmp.dim, "homology dimension");
  c->add_flag("--log", cmp.log_scale, "compare on the log scale");
  c->add_option("--floor", cmp.floor_value, "log-scale birth floor");
  c->add_option("--bound", cmp.bound, "exit nonzero if distance exceeds (log of) this");
  c->add_option("--cap", cmp.cap, "cap deaths at this scale first");

  PlotOpts plot;
  auto* p = app.add_subcommand("plot", "Render a diagram or trace as SVG");
  p->add_option("input", plot.input, "diagram or trace file")->required();
  p->add_option("--out", plot.out, "output SVG file")->required();
  p->add_option("--kind", plot.kind, "diagram | trace");
  p->add_option("--alpha-max", plot.alpha_max, "plot range (diagram)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen);
    if (r->parsed()) return cmd_run(run);
    if (c->parsed()) return cmd_compare(cmp);
    if (p->parsed()) return cmd_plot(plot);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
