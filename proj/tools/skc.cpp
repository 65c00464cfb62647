// skc: spectral k-clustering toolkit.
//
// Subcommands: generate, spectrum, embed, cluster, evaluate, rerun.
// Exit codes: 0 ok, 1 usage, 2 data (parse/mismatch), 3 numerical.
// Every run writes "<primary output>.manifest.json" with the resolved
// parameters and input digests; `rerun --manifest M` repeats a run and
// must reproduce all outputs byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "skc/cluster.hpp"
#include "skc/errors.hpp"
#include "skc/generator.hpp"
#include "skc/graph.hpp"
#include "skc/io.hpp"
#include "skc/manifest.hpp"
#include "skc/metrics.hpp"
#include "skc/partition.hpp"
#include "skc/plot.hpp"
#include "skc/spectral.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kMaxK = 50;
constexpr long long kMaxN = 1'000'000;
constexpr std::uint64_t kDefaultSeed = 1;

void guard_k(int k, bool force) {
  if (!force && k > kMaxK)
    throw skc::UsageError("k = " + std::to_string(k) + " exceeds the guard of " +
                          std::to_string(kMaxK) + "; pass --force to override");
}

void guard_n(long long n, bool force) {
  if (!force && n > kMaxN)
    throw skc::UsageError("n = " + std::to_string(n) + " exceeds the guard of " +
                          std::to_string(kMaxN) + "; pass --force to override");
}

// Seed precedence: explicit flag, then SPECTRAL_SEED, then 1.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("SPECTRAL_SEED")) {
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20)
      throw skc::UsageError("SPECTRAL_SEED must be a non-negative integer, got '" + s + "'");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw skc::UsageError("SPECTRAL_SEED out of range: '" + s + "'");
    }
  }
  return kDefaultSeed;
}

std::vector<std::vector<int>> parse_supergroups(const std::string& s) {
  std::vector<std::vector<int>> groups;
  if (s.empty()) return groups;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t bar = s.find('|', start);
    const std::string part = s.substr(start, bar == std::string::npos ? bar : bar - start);
    std::vector<int> group;
    std::size_t p = 0;
    while (p <= part.size()) {
      const std::size_t comma = part.find(',', p);
      const std::string tok = part.substr(p, comma == std::string::npos ? comma : comma - p);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw skc::UsageError("bad supergroup spec '" + s + "': expected digits, ',' and '|'");
      group.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    groups.push_back(std::move(group));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return groups;
}

skc::SpectrumOptions spectrum_options(double tol, int max_iter, int dense_cutoff) {
  skc::SpectrumOptions opt;
  opt.tol = tol;
  opt.max_iter = max_iter;
  opt.dense_cutoff = dense_cutoff;
  return opt;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateParams {
  std::vector<int> blocks;
  double p_in = 0.0, p_mid = 0.0, p_out = 0.0;
  std::vector<std::vector<int>> supergroups;  // resolved, never empty in manifests
  std::uint64_t seed = kDefaultSeed;
  std::string out, blocks_out;
  bool force = false;
};

ordered_json generate_params_json(const GenerateParams& p) {
  ordered_json j;
  j["blocks"] = p.blocks;
  j["p_in"] = p.p_in;
  j["p_mid"] = p.p_mid;
  j["p_out"] = p.p_out;
  j["supergroups"] = p.supergroups;
  j["seed"] = p.seed;
  j["out"] = p.out;
  j["blocks_out"] = p.blocks_out;
  j["force"] = p.force;
  return j;
}

GenerateParams generate_params_from_json(const nlohmann::json& j) {
  GenerateParams p;
  p.blocks = j.at("blocks").get<std::vector<int>>();
  p.p_in = j.at("p_in").get<double>();
  p.p_mid = j.at("p_mid").get<double>();
  p.p_out = j.at("p_out").get<double>();
  p.supergroups = j.at("supergroups").get<std::vector<std::vector<int>>>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.out = j.at("out").get<std::string>();
  p.blocks_out = j.at("blocks_out").get<std::string>();
  p.force = j.at("force").get<bool>();
  return p;
}

void run_generate(GenerateParams p) {
  skc::PlantedModel model;
  model.block_sizes = p.blocks;
  model.p_in = p.p_in;
  model.p_mid = p.p_mid;
  model.p_out = p.p_out;
  if (p.supergroups.empty())
    p.supergroups = skc::default_supergroups(static_cast<int>(p.blocks.size()));
  model.supergroups = p.supergroups;
  model.validate();
  guard_n(model.num_vertices(), p.force);

  const skc::PlantedGraph pg = skc::generate_planted(model, p.seed);
  skc::save_edge_list(pg.graph, p.out);
  if (!p.blocks_out.empty())
    skc::atomic_write_text(p.blocks_out, skc::partition_to_csv(pg.blocks));

  skc::RunManifest m;
  m.subcommand = "generate";
  m.params = generate_params_json(p);
  m.add_output("out", p.out);
  if (!p.blocks_out.empty()) m.add_output("blocks_out", p.blocks_out);
  skc::write_manifest(m, p.out);
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumParams {
  std::string graph;
  int k = 0;
  double tol = 1e-10;
  int max_iter = 0;
  int dense_cutoff = 300;
  std::string out, plot;
  bool force = false;
};

ordered_json spectrum_params_json(const SpectrumParams& p) {
  ordered_json j;
  j["graph"] = p.graph;
  j["k"] = p.k;
  j["tol"] = p.tol;
  j["max_iter"] = p.max_iter;
  j["dense_cutoff"] = p.dense_cutoff;
  j["out"] = p.out;
  j["plot"] = p.plot;
  j["force"] = p.force;
  return j;
}

SpectrumParams spectrum_params_from_json(const nlohmann::json& j) {
  SpectrumParams p;
  p.graph = j.at("graph").get<std::string>();
  p.k = j.at("k").get<int>();
  p.tol = j.at("tol").get<double>();
  p.max_iter = j.at("max_iter").get<int>();
  p.dense_cutoff = j.at("dense_cutoff").get<int>();
  p.out = j.at("out").get<std::string>();
  p.plot = j.at("plot").get<std::string>();
  p.force = j.at("force").get<bool>();
  return p;
}

void run_spectrum(const SpectrumParams& p) {
  guard_k(p.k, p.force);
  const skc::Graph g = skc::load_edge_list(p.graph);
  guard_n(g.num_vertices(), p.force);
  // One pair beyond k so the file and plot expose the gap at k.
  const int m = std::min(p.k + 1, g.num_vertices());
  const skc::Spectrum sp =
      skc::compute_spectrum(g, m, spectrum_options(p.tol, p.max_iter, p.dense_cutoff));

  skc::atomic_write_text(p.out, skc::spectrum_to_csv(sp.values));
  if (!p.plot.empty()) skc::emit_spectrum_plot(sp.values, p.k, p.plot);

  skc::RunManifest man;
  man.subcommand = "spectrum";
  man.params = spectrum_params_json(p);
  man.params["pairs_computed"] = m;
  man.add_input("graph", p.graph);
  man.add_output("out", p.out);
  if (!p.plot.empty()) man.add_output("plot", p.plot);
  skc::write_manifest(man, p.out);
}

// ---------------------------------------------------------------------------
// embed

struct EmbedParams {
  std::string graph;
  int k = 0;
  double tol = 1e-10;
  int max_iter = 0;
  int dense_cutoff = 300;
  std::string out;
  bool force = false;
};

ordered_json embed_params_json(const EmbedParams& p) {
  ordered_json j;
  j["graph"] = p.graph;
  j["k"] = p.k;
  j["tol"] = p.tol;
  j["max_iter"] = p.max_iter;
  j["dense_cutoff"] = p.dense_cutoff;
  j["out"] = p.out;
  j["force"] = p.force;
  return j;
}

EmbedParams embed_params_from_json(const nlohmann::json& j) {
  EmbedParams p;
  p.graph = j.at("graph").get<std::string>();
  p.k = j.at("k").get<int>();
  p.tol = j.at("tol").get<double>();
  p.max_iter = j.at("max_iter").get<int>();
  p.dense_cutoff = j.at("dense_cutoff").get<int>();
  p.out = j.at("out").get<std::string>();
  p.force = j.at("force").get<bool>();
  return p;
}

void run_embed(const EmbedParams& p) {
  guard_k(p.k, p.force);
  const skc::Graph g = skc::load_edge_list(p.graph);
  guard_n(g.num_vertices(), p.force);
  const skc::Spectrum sp =
      skc::compute_spectrum(g, p.k, spectrum_options(p.tol, p.max_iter, p.dense_cutoff));
  const Eigen::MatrixXd emb = skc::embed(g, sp, p.k);

  skc::atomic_write_text(p.out, skc::embedding_to_csv(emb));

  skc::RunManifest man;
  man.subcommand = "embed";
  man.params = embed_params_json(p);
  man.add_input("graph", p.graph);
  man.add_output("out", p.out);
  skc::write_manifest(man, p.out);
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterParams {
  std::string graph;
  int k = 0;
  std::string method;  // greedy | fast | kmeans
  double epsilon = 0.0;
  double radius_scale = 0.0;  // 0 = unset
  double radius = 0.0;        // 0 = unset
  std::uint64_t seed = kDefaultSeed;
  int kmeans_iters = 100;
  double tol = 1e-10;
  int max_iter = 0;
  int dense_cutoff = 300;
  std::string out, trace;
  bool force = false;
};

ordered_json cluster_params_json(const ClusterParams& p) {
  ordered_json j;
  j["graph"] = p.graph;
  j["k"] = p.k;
  j["method"] = p.method;
  j["epsilon"] = p.epsilon;
  j["radius_scale"] = p.radius_scale;
  j["radius"] = p.radius;
  j["seed"] = p.seed;
  j["kmeans_iters"] = p.kmeans_iters;
  j["tol"] = p.tol;
  j["max_iter"] = p.max_iter;
  j["dense_cutoff"] = p.dense_cutoff;
  j["out"] = p.out;
  j["trace"] = p.trace;
  j["force"] = p.force;
  return j;
}

ClusterParams cluster_params_from_json(const nlohmann::json& j) {
  ClusterParams p;
  p.graph = j.at("graph").get<std::string>();
  p.k = j.at("k").get<int>();
  p.method = j.at("method").get<std::string>();
  p.epsilon = j.at("epsilon").get<double>();
  p.radius_scale = j.at("radius_scale").get<double>();
  p.radius = j.at("radius").get<double>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.kmeans_iters = j.at("kmeans_iters").get<int>();
  p.tol = j.at("tol").get<double>();
  p.max_iter = j.at("max_iter").get<int>();
  p.dense_cutoff = j.at("dense_cutoff").get<int>();
  p.out = j.at("out").get<std::string>();
  p.trace = j.at("trace").get<std::string>();
  p.force = j.at("force").get<bool>();
  return p;
}

ordered_json trace_to_json(const skc::ClusterTrace& trace, bool sampled) {
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json step;
    step["iter"] = s.iter;
    step["center"] = s.center;
    step["ball_size"] = s.ball_size;
    step["remaining"] = s.remaining;
    if (sampled) step["sampled_ids"] = s.sampled_ids;
    steps.push_back(std::move(step));
  }
  return steps;
}

void run_cluster(const ClusterParams& p) {
  if (p.k < 2) throw skc::UsageError("clustering needs k >= 2");
  guard_k(p.k, p.force);
  if (p.method != "greedy" && p.method != "fast" && p.method != "kmeans")
    throw skc::UsageError("unknown method '" + p.method + "'");
  if (p.method != "fast" && p.epsilon != 0.0)
    throw skc::UsageError("--epsilon only applies to the fast method");
  if (p.method == "kmeans" && (p.radius_scale != 0.0 || p.radius != 0.0))
    throw skc::UsageError("radius flags do not apply to kmeans");
  if (p.method == "kmeans" && !p.trace.empty())
    throw skc::UsageError("kmeans produces no trace");
  if (p.radius_scale != 0.0 && p.radius != 0.0)
    throw skc::UsageError("--radius-scale and --radius are mutually exclusive");

  const skc::Graph g = skc::load_edge_list(p.graph);
  guard_n(g.num_vertices(), p.force);
  const skc::Spectrum sp =
      skc::compute_spectrum(g, p.k, spectrum_options(p.tol, p.max_iter, p.dense_cutoff));
  const Eigen::MatrixXd emb = skc::embed(g, sp, p.k);

  skc::GreedyConfig cfg;
  cfg.k = p.k;
  if (p.radius != 0.0) {
    cfg.radius_mode = skc::RadiusMode::Explicit;
    cfg.radius = p.radius;
  } else if (p.radius_scale != 0.0) {
    cfg.radius_mode = skc::RadiusMode::Scaled;
    cfg.radius_scale = p.radius_scale;
  }
  cfg.epsilon = p.epsilon;
  cfg.seed = p.seed;

  skc::Partition part;
  skc::ClusterTrace trace;
  std::optional<double> resolved_radius;
  if (p.method == "greedy") {
    std::tie(part, trace) = skc::greedy_cluster(g, emb, cfg);
    resolved_radius = trace.radius;
  } else if (p.method == "fast") {
    if (p.epsilon <= 0.0) throw skc::UsageError("fast method needs --epsilon > 0");
    std::tie(part, trace) = skc::fast_cluster(g, emb, cfg);
    resolved_radius = trace.radius;
  } else {
    part = skc::kmeans_baseline(emb, p.k, p.seed, p.kmeans_iters);
  }

  skc::atomic_write_text(p.out, skc::partition_to_csv(part));
  if (!p.trace.empty())
    skc::atomic_write_text(p.trace,
                           trace_to_json(trace, p.method == "fast").dump(2) + "\n");

  skc::RunManifest man;
  man.subcommand = "cluster";
  man.params = cluster_params_json(p);
  man.params["resolved_radius"] =
      resolved_radius ? ordered_json(*resolved_radius) : ordered_json(nullptr);
  man.add_input("graph", p.graph);
  man.add_output("out", p.out);
  if (!p.trace.empty()) man.add_output("trace", p.trace);
  skc::write_manifest(man, p.out);
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateParams {
  std::string graph, partition, reference;
  int k = 0;  // 0 = use the partition's cluster count
  int exact_limit = 20;
  double alpha_in = -1.0, alpha_out = -1.0;  // < 0 = no verdict requested
  double tol = 1e-10;
  int max_iter = 0;
  int dense_cutoff = 300;
  std::string out;
  bool force = false;
};

ordered_json evaluate_params_json(const EvaluateParams& p) {
  ordered_json j;
  j["graph"] = p.graph;
  j["partition"] = p.partition;
  j["reference"] = p.reference;
  j["k"] = p.k;
  j["exact_limit"] = p.exact_limit;
  j["alpha_in"] = p.alpha_in;
  j["alpha_out"] = p.alpha_out;
  j["tol"] = p.tol;
  j["max_iter"] = p.max_iter;
  j["dense_cutoff"] = p.dense_cutoff;
  j["out"] = p.out;
  j["force"] = p.force;
  return j;
}

EvaluateParams evaluate_params_from_json(const nlohmann::json& j) {
  EvaluateParams p;
  p.graph = j.at("graph").get<std::string>();
  p.partition = j.at("partition").get<std::string>();
  p.reference = j.at("reference").get<std::string>();
  p.k = j.at("k").get<int>();
  p.exact_limit = j.at("exact_limit").get<int>();
  p.alpha_in = j.at("alpha_in").get<double>();
  p.alpha_out = j.at("alpha_out").get<double>();
  p.tol = j.at("tol").get<double>();
  p.max_iter = j.at("max_iter").get<int>();
  p.dense_cutoff = j.at("dense_cutoff").get<int>();
  p.out = j.at("out").get<std::string>();
  p.force = j.at("force").get<bool>();
  return p;
}

ordered_json json_number_or_null(double v) {
  if (std::isinf(v) || std::isnan(v)) return nullptr;
  return v;
}

void run_evaluate(const EvaluateParams& p) {
  const skc::Graph g = skc::load_edge_list(p.graph);
  guard_n(g.num_vertices(), p.force);
  const skc::Partition part = skc::load_partition_csv(p.partition, g.num_vertices());
  part.validate();

  const int gap_k = p.k > 0 ? p.k : part.k;
  guard_k(std::max(gap_k, part.k), p.force);
  if (gap_k >= g.num_vertices())
    throw skc::UsageError("gap at k = " + std::to_string(gap_k) + " needs k+1 <= n = " +
                          std::to_string(g.num_vertices()));

  skc::StrengthOptions sopt;
  sopt.brute_limit = p.exact_limit;
  const skc::StrengthReport strength = skc::strength_report(g, part, sopt);

  const int pairs = std::min(std::max(gap_k, part.k) + 1, g.num_vertices());
  const skc::Spectrum sp =
      skc::compute_spectrum(g, pairs, spectrum_options(p.tol, p.max_iter, p.dense_cutoff));
  const Eigen::MatrixXd emb = skc::embed(g, sp, part.k);
  const double lambda_pk = sp.values[part.k - 1];

  const skc::GapReport gap = skc::gap_report(sp, gap_k, &strength);

  // r values never need alpha_in; the printed ceilings do. With no positive
  // certified alpha_in the ceilings are meaningless and reported as null.
  const bool have_alpha = strength.alpha_in_lower > 0.0;
  const skc::ConcentrationReport conc = skc::concentration_check(
      g, emb, part, lambda_pk, have_alpha ? strength.alpha_in_lower : 1.0);

  ordered_json rep;
  rep["tool"] = "skc";
  rep["version"] = skc::kToolVersion;
  rep["n"] = g.num_vertices();
  rep["k"] = part.k;
  rep["gap_k"] = gap_k;

  rep["per_cluster"] = ordered_json::array();
  for (const auto& c : strength.clusters) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["size"] = c.size;
    jc["phi_out"] = c.phi_out;
    ordered_json in;
    in["lower"] = c.phi_in.lower;
    in["upper"] = c.phi_in.upper;
    if (c.phi_in.exact) in["exact"] = *c.phi_in.exact;
    if (c.phi_in.disconnected) in["disconnected"] = true;
    if (c.degenerate) in["degenerate"] = true;
    jc["phi_in"] = std::move(in);
    rep["per_cluster"].push_back(std::move(jc));
  }
  rep["alpha_out"] = strength.alpha_out;
  rep["alpha_in"] = {{"lower", strength.alpha_in_lower}, {"upper", strength.alpha_in_upper}};

  if (p.alpha_in >= 0.0 && p.alpha_out >= 0.0)
    rep["verdict"] = skc::verdict_name(skc::judge_strength(strength, p.alpha_in, p.alpha_out));

  if (!p.reference.empty()) {
    const skc::Partition ref = skc::load_partition_csv(p.reference, g.num_vertices());
    const skc::PartitionDistance d = skc::partition_distance(part, ref);
    rep["distance_to_reference"] = d.distance;
    rep["optimal_sigma"] = d.sigma;
  }

  rep["lambda"] = sp.values;
  {
    ordered_json jg;
    jg["lambda_k"] = gap.lambda_k;
    jg["lambda_k_plus_1"] = gap.lambda_k_plus_1;
    jg["ratio"] = gap.ratio_infinite ? ordered_json(nullptr) : json_number_or_null(gap.ratio);
    jg["ratio_infinite"] = gap.ratio_infinite;
    jg["cheeger_bound_ok"] = gap.cheeger_bound_ok ? ordered_json(*gap.cheeger_bound_ok)
                                                  : ordered_json(nullptr);
    rep["gap"] = std::move(jg);
  }

  rep["concentration"] = conc.r;
  {
    ordered_json jb;
    jb["alpha_in_used"] = have_alpha ? ordered_json(strength.alpha_in_lower) : ordered_json(nullptr);
    jb["dmax_cubed"] = have_alpha ? json_number_or_null(conc.bound_dmax_cubed) : ordered_json(nullptr);
    jb["dmax_linear"] = have_alpha ? json_number_or_null(conc.bound_dmax_linear) : ordered_json(nullptr);
    jb["within_dmax_cubed"] = have_alpha ? ordered_json(conc.within_dmax_cubed) : ordered_json(nullptr);
    jb["within_dmax_linear"] = have_alpha ? ordered_json(conc.within_dmax_linear) : ordered_json(nullptr);
    rep["concentration_bounds"] = std::move(jb);
  }

  {
    // Worst (lhs, rhs) pair per cluster; clusters without a positive internal
    // conductance bound cannot be scored and say why.
    ordered_json arr = ordered_json::array();
    bool all_ok = true;
    const auto clusters = part.clusters();
    for (const auto& c : strength.clusters) {
      ordered_json jc;
      jc["cluster"] = c.id;
      const double phi = c.phi_in.exact ? *c.phi_in.exact : c.phi_in.lower;
      if (c.degenerate || phi <= 0.0) {
        jc["skipped"] = c.degenerate ? "singleton cluster" : "no positive phi_in bound";
        arr.push_back(std::move(jc));
        continue;
      }
      const skc::PairsumReport pr =
          skc::pairsum_check(g, emb, lambda_pk, clusters[c.id], phi);
      const skc::PairsumEntry* worst = &pr.entries.front();
      for (const auto& e : pr.entries)
        if (e.lhs * worst->rhs > worst->lhs * e.rhs) worst = &e;
      jc["phi_in_used"] = phi;
      jc["worst_dim"] = worst->dim;
      jc["lhs"] = worst->lhs;
      jc["rhs"] = worst->rhs;
      jc["ok"] = pr.ok;
      all_ok = all_ok && pr.ok;
      arr.push_back(std::move(jc));
    }
    rep["pairsum"] = {{"ok", all_ok}, {"per_cluster", std::move(arr)}};
  }

  skc::atomic_write_text(p.out, rep.dump(2) + "\n");

  skc::RunManifest man;
  man.subcommand = "evaluate";
  man.params = evaluate_params_json(p);
  man.add_input("graph", p.graph);
  man.add_input("partition", p.partition);
  if (!p.reference.empty()) man.add_input("reference", p.reference);
  man.add_output("out", p.out);
  skc::write_manifest(man, p.out);
}

// ---------------------------------------------------------------------------
// rerun

void run_rerun(const std::string& manifest_path) {
  const skc::RunManifest m = skc::load_manifest(manifest_path);

  for (const auto& [role, obj] : m.inputs.items()) {
    const std::string path = obj.at("path").get<std::string>();
    const std::string digest = obj.at("digest").get<std::string>();
    const std::string now = skc::digest_string(skc::fnv1a64_file(path));
    if (now != digest)
      throw skc::DataError("input '" + role + "' (" + path + ") has digest " + now +
                           " but the manifest recorded " + digest);
  }

  try {
    if (m.subcommand == "generate")
      run_generate(generate_params_from_json(m.params));
    else if (m.subcommand == "spectrum")
      run_spectrum(spectrum_params_from_json(m.params));
    else if (m.subcommand == "embed")
      run_embed(embed_params_from_json(m.params));
    else if (m.subcommand == "cluster")
      run_cluster(cluster_params_from_json(m.params));
    else if (m.subcommand == "evaluate")
      run_evaluate(evaluate_params_from_json(m.params));
    else
      throw skc::DataError("manifest names unknown subcommand '" + m.subcommand + "'");
  } catch (const nlohmann::json::exception& e) {
    throw skc::DataError("malformed manifest params: " + std::string(e.what()));
  }
}

// ---------------------------------------------------------------------------

int app_main(int argc, char** argv) {
  CLI::App app{"spectral k-clustering toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("skc ") + skc::kToolVersion +
                                        " (manifest format " + skc::kManifestFormat + ")");

  GenerateParams gen;
  std::string gen_supergroups;
  auto* cgen = app.add_subcommand("generate", "sample a planted-partition graph");
  cgen->add_option("--blocks", gen.blocks, "comma-separated block sizes")
      ->required()
      ->delimiter(',');
  cgen->add_option("--p-in", gen.p_in, "intra-block edge probability")->required();
  cgen->add_option("--p-mid", gen.p_mid, "same-supergroup inter-block probability");
  cgen->add_option("--p-out", gen.p_out, "cross-supergroup probability");
  cgen->add_option("--supergroups", gen_supergroups,
                   "block groups as '0,1|2,3,4' (default: {0,1} vs rest)");
  auto* gen_seed = cgen->add_option("--seed", gen.seed, "RNG seed");
  cgen->add_option("--out", gen.out, "edge-list output path")->required();
  cgen->add_option("--blocks-out", gen.blocks_out, "ground-truth partition CSV");
  cgen->add_flag("--force", gen.force, "override size guards");

  SpectrumParams spec;
  auto* cspec = app.add_subcommand("spectrum", "first k+1 normalized-Laplacian eigenvalues");
  cspec->add_option("--graph", spec.graph, "edge-list input")->required();
  cspec->add_option("--k", spec.k, "target cluster count")->required()
      ->check(CLI::PositiveNumber);
  cspec->add_option("--tol", spec.tol, "residual tolerance");
  cspec->add_option("--max-iter", spec.max_iter, "Lanczos step cap (0 = 10n)");
  cspec->add_option("--dense-cutoff", spec.dense_cutoff, "dense solver below this n");
  cspec->add_option("--out", spec.out, "CSV output path")->required();
  cspec->add_option("--plot", spec.plot, "SVG plot path");
  cspec->add_flag("--force", spec.force, "override size guards");

  EmbedParams emb;
  auto* cemb = app.add_subcommand("embed", "degree-rescaled spectral embedding");
  cemb->add_option("--graph", emb.graph, "edge-list input")->required();
  cemb->add_option("--k", emb.k, "embedding dimension")->required()
      ->check(CLI::PositiveNumber);
  cemb->add_option("--tol", emb.tol, "residual tolerance");
  cemb->add_option("--max-iter", emb.max_iter, "Lanczos step cap (0 = 10n)");
  cemb->add_option("--dense-cutoff", emb.dense_cutoff, "dense solver below this n");
  cemb->add_option("--out", emb.out, "CSV output path")->required();
  cemb->add_flag("--force", emb.force, "override size guards");

  ClusterParams clu;
  auto* cclu = app.add_subcommand("cluster", "partition a graph in its spectral embedding");
  cclu->add_option("--graph", clu.graph, "edge-list input")->required();
  cclu->add_option("--k", clu.k, "cluster count")->required();
  cclu->add_option("--method", clu.method, "greedy | fast | kmeans")->required();
  cclu->add_option("--epsilon", clu.epsilon, "sampling accuracy (fast only)");
  auto* opt_rs = cclu->add_option("--radius-scale", clu.radius_scale,
                                  "multiply the derived packing radius");
  auto* opt_r = cclu->add_option("--radius", clu.radius, "explicit packing radius");
  opt_rs->excludes(opt_r);
  auto* clu_seed = cclu->add_option("--seed", clu.seed, "RNG seed (fast/kmeans)");
  cclu->add_option("--kmeans-iters", clu.kmeans_iters, "Lloyd iteration cap");
  cclu->add_option("--tol", clu.tol, "eigensolver residual tolerance");
  cclu->add_option("--max-iter", clu.max_iter, "Lanczos step cap (0 = 10n)");
  cclu->add_option("--dense-cutoff", clu.dense_cutoff, "dense solver below this n");
  cclu->add_option("--out", clu.out, "partition CSV output")->required();
  cclu->add_option("--trace", clu.trace, "per-iteration trace JSON (greedy/fast)");
  cclu->add_flag("--force", clu.force, "override size guards");

  EvaluateParams ev;
  auto* cev = app.add_subcommand("evaluate", "score a partition against the graph");
  cev->add_option("--graph", ev.graph, "edge-list input")->required();
  cev->add_option("--partition", ev.partition, "partition CSV to score")->required();
  cev->add_option("--reference", ev.reference, "reference partition CSV");
  cev->add_option("--k", ev.k, "gap position (default: partition's k)");
  cev->add_option("--exact-limit", ev.exact_limit,
                  "max cluster size for exact internal conductance");
  cev->add_option("--alpha-in", ev.alpha_in, "strength threshold for the verdict");
  cev->add_option("--alpha-out", ev.alpha_out, "strength threshold for the verdict");
  cev->add_option("--tol", ev.tol, "eigensolver residual tolerance");
  cev->add_option("--max-iter", ev.max_iter, "Lanczos step cap (0 = 10n)");
  cev->add_option("--dense-cutoff", ev.dense_cutoff, "dense solver below this n");
  cev->add_option("--out", ev.out, "report JSON output")->required();
  cev->add_flag("--force", ev.force, "override size guards");

  std::string manifest_path;
  auto* crer = app.add_subcommand("rerun", "repeat a run from its manifest");
  crer->add_option("--manifest", manifest_path, "manifest JSON path")->required();

  app.parse(argc, argv);

  if (cgen->parsed()) {
    gen.seed = resolve_seed(gen_seed->count() > 0, gen.seed);
    gen.supergroups = parse_supergroups(gen_supergroups);
    run_generate(std::move(gen));
  } else if (cspec->parsed()) {
    run_spectrum(spec);
  } else if (cemb->parsed()) {
    run_embed(emb);
  } else if (cclu->parsed()) {
    clu.seed = resolve_seed(clu_seed->count() > 0, clu.seed);
    run_cluster(clu);
  } else if (cev->parsed()) {
    run_evaluate(ev);
  } else if (crer->parsed()) {
    run_rerun(manifest_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return app_main(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << e.what() << "\n";
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << "skc " << skc::kToolVersion << " (manifest format " << skc::kManifestFormat
              << ")\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  } catch (const skc::UsageError& e) {
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 1;
  } catch (const skc::DataError& e) {
    std::cerr << "error[data]: " << e.what() << "\n";
    return 2;
  } catch (const skc::NumericalError& e) {
    std::cerr << "error[numeric]: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 70;
  }
}
