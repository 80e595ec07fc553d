#include "spinwedge/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinwedge/combinadics.hpp"
#include "spinwedge/corpus.hpp"
#include "spinwedge/dynamics.hpp"
#include "spinwedge/errors.hpp"
#include "spinwedge/spectra.hpp"
#include "spinwedge/spin_system.hpp"
#include "spinwedge/verify.hpp"
#include "spinwedge/wedge.hpp"

namespace spinwedge {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string graph_source;
  std::string k = "all";
  std::string model = "xy";
  double field_B = 0.0;
  double tol = kSpectrumTol;
  std::string output;
  std::string format;
  // closed-form
  std::string family;
  int n = 0;
  bool cross_check = false;
  // verify
  std::uint64_t seed = 0;
  int random_states = 20;
  std::string fault;
  int threads = 0;
  // evolve
  std::string from;
  std::string to;
  std::vector<double> times;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("invalid " + what + " '" + text + "'");
    }
  }
  return out;
}

// "all" -> nullopt
std::optional<int> parse_k(const std::string& text) {
  if (text == "all") return std::nullopt;
  const auto v = parse_int_list(text, "k");
  if (v.size() != 1) throw UsageError("k must be an integer or 'all'");
  return v[0];
}

void require_k_in_range(int k, int n) {
  if (k < 0 || k > n) {
    throw UsageError("k = " + std::to_string(k) + " out of range [0," + std::to_string(n) + "]");
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + temp.string());
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
    if (!file) throw UsageError("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

std::string csv_number(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string cmd_wedge(const RunConfig& cfg) {
  const NamedGraph g = parse_graph_source(cfg.graph_source);
  const auto k = parse_k(cfg.k);
  if (!k) throw UsageError("wedge needs a single k");
  require_k_in_range(*k, g.graph.num_vertices());
  const WedgeGraph w = build_wedge_graph(g.graph, *k);
  if (cfg.format == "dot") return wedge_to_dot(w);
  if (cfg.format.empty() || cfg.format == "json") return wedge_to_json(w);
  throw UsageError("wedge supports --format json or dot");
}

std::string cmd_export(const RunConfig& cfg) {
  const NamedGraph g = parse_graph_source(cfg.graph_source);
  const int n = g.graph.num_vertices();
  std::vector<WedgeGraph> wedges;
  for (int k = 0; k <= n; ++k) wedges.push_back(build_wedge_graph(g.graph, k));

  if (cfg.format.empty() || cfg.format == "dot") {
    std::ostringstream dot;
    dot << "graph {\n";
    for (const auto& w : wedges) {
      const auto names = w.vertex_names();
      auto id = [&](std::uint64_t r) { return "\"k" + std::to_string(w.k()) + "_" + names[r] + "\""; };
      dot << "  subgraph cluster_k" << w.k() << " {\n";
      dot << "    label=\"k=" << w.k() << "\";\n";
      for (std::uint64_t r = 0; r < names.size(); ++r) {
        dot << "    " << id(r) << " [label=\"" << names[r] << "\"];\n";
      }
      for (const auto& e : w.signed_edges()) {
        dot << "    " << id(e.a) << " -- " << id(e.b);
        if (e.sign < 0) dot << " [label=\"-1\", style=dashed]";
        dot << ";\n";
      }
      dot << "  }\n";
    }
    dot << "}\n";
    return dot.str();
  }
  if (cfg.format == "json") {
    json j;
    j["graph"] = json::parse(graph_to_json(g.graph));
    j["wedges"] = json::array();
    for (const auto& w : wedges) j["wedges"].push_back(json::parse(wedge_to_json(w)));
    return j.dump(2);
  }
  throw UsageError("export supports --format dot or json");
}

ModelSpec model_spec(const RunConfig& cfg) {
  ModelSpec spec{parse_model(cfg.model), cfg.field_B};
  spec.validate();
  return spec;
}

json spectrum_json(const Spectrum& s) { return json::parse(s.to_json()); }

std::string spectra_report(const json& header, const std::vector<std::pair<int, Spectrum>>& blocks,
                           const std::optional<Spectrum>& union_spec, const std::string& format) {
  if (format == "csv") {
    std::ostringstream csv;
    csv << "k,index,value\n";
    for (const auto& [k, s] : blocks) {
      for (std::size_t i = 0; i < s.size(); ++i) csv << k << ',' << i << ',' << csv_number(s.values()[i]) << '\n';
    }
    return csv.str();
  }
  if (!format.empty() && format != "json") throw UsageError("supported formats: json, csv");
  json j = header;
  j["blocks"] = json::array();
  double ground = std::numeric_limits<double>::infinity();
  for (const auto& [k, s] : blocks) {
    json b;
    b["k"] = k;
    b["dim"] = s.size();
    if (s.size()) {
      b["ground_energy"] = s.min();
      ground = std::min(ground, s.min());
    }
    b["spectrum"] = spectrum_json(s);
    j["blocks"].push_back(b);
  }
  if (union_spec) j["union"] = spectrum_json(*union_spec);
  j["ground_energy"] = ground;
  return j.dump(2);
}

std::string cmd_spectrum(const RunConfig& cfg) {
  const NamedGraph g = parse_graph_source(cfg.graph_source);
  const int n = g.graph.num_vertices();
  const ModelSpec spec = model_spec(cfg);
  const auto k = parse_k(cfg.k);
  std::vector<int> ks;
  if (k) {
    require_k_in_range(*k, n);
    ks.push_back(*k);
  } else {
    for (int i = 0; i <= n; ++i) ks.push_back(i);
  }
  std::vector<std::pair<int, Spectrum>> blocks;
  std::optional<Spectrum> union_spec;
  for (int kk : ks) {
    Spectrum s(spectrum_of(block_hamiltonian(g.graph, kk, spec)).values(), cfg.tol);
    union_spec = union_spec ? union_spec->merged(s) : s;
    blocks.emplace_back(kk, std::move(s));
  }
  if (k) union_spec.reset();
  json header;
  header["graph"] = g.name;
  header["n"] = n;
  header["model"] = std::string(model_name(spec.model));
  header["field"] = spec.field_B;
  header["tol"] = cfg.tol;
  return spectra_report(header, blocks, union_spec, cfg.format);
}

std::string cmd_closed_form(const RunConfig& cfg) {
  const ModelSpec spec = model_spec(cfg);
  const int n = cfg.n;
  if (n < 1) throw UsageError("closed-form needs --n >= 1");
  const auto k = parse_k(cfg.k);
  if (k) require_k_in_range(*k, n);

  std::function<Spectrum(int)> block_formula;
  Graph graph;
  if (cfg.family == "path") {
    if (spec.model != Model::XY) throw UsageError("the path closed form covers the xy model only");
    block_formula = [&](int kk) { return xy_path_spectrum(n, kk).shifted(field_shift(spec.field_B, n, kk)); };
    graph = path_graph(n);
  } else if (cfg.family == "complete") {
    block_formula = [&](int kk) {
      const Spectrum adj = johnson_spectrum(n, kk);
      std::vector<double> v = adj.values();
      if (spec.model == Model::Heisenberg) {
        for (double& x : v) x = static_cast<double>(kk * (n - kk)) - x;
      }
      return Spectrum(std::move(v)).shifted(field_shift(spec.field_B, n, kk));
    };
    graph = complete_graph(n);
  } else {
    throw UsageError("no closed form for family '" + cfg.family + "' (supported: path, complete)");
  }

  std::vector<int> ks;
  if (k) {
    ks.push_back(*k);
  } else {
    for (int i = 0; i <= n; ++i) ks.push_back(i);
  }
  std::vector<std::pair<int, Spectrum>> blocks;
  std::optional<Spectrum> union_spec;
  for (int kk : ks) {
    Spectrum s(block_formula(kk).values(), cfg.tol);
    union_spec = union_spec ? union_spec->merged(s) : s;
    blocks.emplace_back(kk, std::move(s));
  }

  json header;
  header["family"] = cfg.family;
  header["n"] = n;
  header["model"] = std::string(model_name(spec.model));
  header["field"] = spec.field_B;
  header["tol"] = cfg.tol;
  header["distinct"] = union_spec->distinct();
  if (cfg.cross_check) {
    bool agrees = true;
    double gap = 0.0;
    for (const auto& [kk, s] : blocks) {
      const auto cmp = compare_spectra(s, spectrum_of(block_hamiltonian(graph, kk, spec)));
      agrees = agrees && cmp.equal;
      gap = std::max(gap, cmp.max_gap);
    }
    header["cross_check"] = {{"performed", true}, {"agrees", agrees}, {"max_gap", gap}};
  } else {
    header["cross_check"] = {{"performed", false}};
  }
  if (k) union_spec.reset();
  return spectra_report(header, blocks, union_spec, cfg.format);
}

std::optional<SignFault> parse_fault(const std::string& text) {
  if (text.empty()) return std::nullopt;
  // NAME may itself contain ':' (e.g. "complete:4"), so split from the right
  const auto last = text.rfind(':');
  const auto middle = last == std::string::npos ? std::string::npos : text.rfind(':', last - 1);
  if (middle == std::string::npos || middle == 0) throw UsageError("--inject-sign-flip expects GRAPH:K:EDGE");
  SignFault f;
  f.graph = text.substr(0, middle);
  const auto k = parse_int_list(text.substr(middle + 1, last - middle - 1), "fault k");
  const auto e = parse_int_list(text.substr(last + 1), "fault edge");
  if (k.size() != 1 || e.size() != 1 || e[0] < 0) throw UsageError("--inject-sign-flip expects GRAPH:K:EDGE");
  f.k = k[0];
  f.edge = static_cast<std::size_t>(e[0]);
  return f;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<NamedGraph> corpus;
  if (cfg.graph_source.empty()) {
    corpus = default_corpus();
  } else {
    corpus.push_back(parse_graph_source(cfg.graph_source));
  }
  VerifyOptions options;
  options.tol = cfg.tol;
  options.seed = cfg.seed;
  options.random_states = cfg.random_states;
  options.fault = parse_fault(cfg.fault);
  options.threads = cfg.threads;

  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = run_verification(corpus, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::ostringstream text;
  if (cfg.format == "json") {
    json j;
    j["passed"] = report.passed();
    j["graphs"] = corpus.size();
    j["seconds"] = seconds;
    j["checks"] = json::array();
    for (const auto& s : report.summaries()) {
      j["checks"].push_back({{"check", s.check}, {"evaluations", s.evaluations},
                             {"max_error", std::isfinite(s.max_error) ? json(s.max_error) : json("inf")},
                             {"passed", s.passed}});
    }
    if (const auto* f = report.first_failure()) {
      j["first_failure"] = {{"graph", f->graph}, {"k", f->k}, {"check", f->check}, {"detail", f->detail}};
    }
    text << j.dump(2) << '\n';
  } else if (cfg.format.empty() || cfg.format == "text") {
    for (const auto& s : report.summaries()) {
      text << (s.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << s.check << " evaluations="
           << std::setw(5) << s.evaluations << " max_error=" << std::setprecision(3) << std::scientific
           << s.max_error << std::defaultfloat << '\n';
    }
    text << "verify: " << (report.passed() ? "PASS" : "FAIL") << " (" << corpus.size() << " graphs, "
         << report.records.size() << " checks, tol " << cfg.tol << ", " << std::fixed << std::setprecision(1)
         << seconds << " s)\n";
  } else {
    throw UsageError("verify supports --format text or json");
  }
  write_output(text.str(), cfg.output, out);

  if (const auto* f = report.first_failure()) {
    err << "first failure: graph=" << f->graph << " k=" << f->k << " check=" << f->check
        << " error=" << f->error;
    if (!f->detail.empty()) err << " (" << f->detail << ")";
    err << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

std::string cmd_evolve(const RunConfig& cfg) {
  const NamedGraph g = parse_graph_source(cfg.graph_source);
  const int n = g.graph.num_vertices();
  const ModelSpec spec = model_spec(cfg);
  if (cfg.from.empty()) throw UsageError("evolve needs --from (vertex or comma-separated subset)");
  if (cfg.times.empty()) throw UsageError("evolve needs --times");

  std::vector<int> initial = parse_int_list(cfg.from, "initial subset");
  std::sort(initial.begin(), initial.end());
  const auto k = parse_k(cfg.k);
  const int kk = k ? *k : static_cast<int>(initial.size());
  if (static_cast<int>(initial.size()) != kk) {
    throw UsageError("initial subset has " + std::to_string(initial.size()) + " vertices but k = " +
                     std::to_string(kk));
  }
  require_k_in_range(kk, n);
  WaveState state = basis_state(n, initial);

  std::optional<std::uint64_t> target;
  if (!cfg.to.empty()) {
    auto t = parse_int_list(cfg.to, "target subset");
    std::sort(t.begin(), t.end());
    if (static_cast<int>(t.size()) != kk) throw UsageError("target subset must have k vertices");
    target = rank_subset(t, n);
  }

  const Propagator u(block_hamiltonian(g.graph, kk, spec));
  const WedgeGraph names_source = build_wedge_graph(empty_graph(n), kk);
  json series = json::array();
  std::ostringstream csv;
  csv << 't';
  if (target) {
    csv << ",p_" << names_source.vertex_name(*target);
  } else {
    for (std::uint64_t r = 0; r < names_source.num_vertices(); ++r) csv << ",p_" << names_source.vertex_name(r);
  }
  csv << '\n';

  for (double t : cfg.times) {
    const Eigen::VectorXcd psi = u.apply(state.amplitudes, t);
    std::vector<double> probs(static_cast<std::size_t>(psi.size()));
    for (Eigen::Index i = 0; i < psi.size(); ++i) probs[i] = std::norm(psi(i));
    json entry;
    entry["t"] = t;
    entry["probabilities"] = probs;
    entry["norm"] = psi.norm();
    if (target) entry["target_probability"] = probs[*target];
    series.push_back(entry);

    csv << csv_number(t);
    if (target) {
      csv << ',' << csv_number(probs[*target]);
    } else {
      for (double p : probs) csv << ',' << csv_number(p);
    }
    csv << '\n';
  }

  if (cfg.format == "csv") return csv.str();
  if (!cfg.format.empty() && cfg.format != "json") throw UsageError("evolve supports --format json or csv");
  json j;
  j["graph"] = g.name;
  j["model"] = std::string(model_name(spec.model));
  j["field"] = spec.field_B;
  j["k"] = kk;
  j["initial"] = initial;
  j["basis"] = names_source.vertex_names();
  if (target) j["target"] = names_source.vertex_name(*target);
  j["series"] = series;
  return j.dump(2);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wedge-product graphs and the XY / Heisenberg spin models on graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-g,--graph", cfg.graph_source,
                                "Graph: path:N, cycle:N, complete:N, empty:N, random:N:P:SEED, or a JSON file");
    if (required) opt->required();
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("-m,--model", cfg.model, "xy or heis")->capture_default_str();
    sub->add_option("-B,--field", cfg.field_B, "Uniform z-field B")->capture_default_str();
  };
  auto add_io = [&](CLI::App* sub, const std::string& formats) {
    sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    sub->add_option("-f,--format", cfg.format, formats);
  };

  auto* wedge = app.add_subcommand("wedge", "Build the k-th wedge graph");
  add_graph(wedge, true);
  wedge->add_option("-k", cfg.k, "Number of particles")->required();
  add_io(wedge, "json or dot");

  auto* spectrum = app.add_subcommand("spectrum", "Sector spectra by exact diagonalization");
  add_graph(spectrum, true);
  spectrum->add_option("-k", cfg.k, "Sector, or 'all'")->capture_default_str();
  add_model(spectrum);
  spectrum->add_option("--tol", cfg.tol, "Multiplicity grouping tolerance")->capture_default_str();
  add_io(spectrum, "json or csv");

  auto* closed = app.add_subcommand("closed-form", "Closed-form spectra for paths and complete graphs");
  closed->add_option("family", cfg.family, "path or complete")->required();
  closed->add_option("-n,--n", cfg.n, "Number of vertices")->required();
  closed->add_option("-k", cfg.k, "Sector, or 'all'")->capture_default_str();
  add_model(closed);
  closed->add_option("--tol", cfg.tol, "Comparison tolerance")->capture_default_str();
  closed->add_flag("--check", cfg.cross_check, "Also diagonalize numerically and compare");
  add_io(closed, "json or csv");

  auto* verify = app.add_subcommand("verify", "Run every consistency check over the corpus");
  add_graph(verify, false);
  verify->add_option("--tol", cfg.tol, "Tolerance for all numeric checks")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for random dynamics states")->capture_default_str();
  verify->add_option("--random-states", cfg.random_states, "Random states per graph and sector")
      ->capture_default_str();
  verify->add_option("--inject-sign-flip", cfg.fault, "Testing aid: negate one wedge edge sign, GRAPH:K:EDGE");
  verify->add_option("--threads", cfg.threads, "Worker threads (default: SPINWEDGE_THREADS or all cores)");
  add_io(verify, "text or json");

  auto* evolve = app.add_subcommand("evolve", "Time evolution within one excitation sector");
  add_graph(evolve, true);
  evolve->add_option("-k", cfg.k, "Sector (default: size of --from)");
  add_model(evolve);
  evolve->add_option("--from", cfg.from, "Initial vertex or comma-separated subset")->required();
  evolve->add_option("--to", cfg.to, "Target vertex or subset to track");
  evolve->add_option("--times", cfg.times, "Times")->required()->delimiter(',');
  add_io(evolve, "json or csv");

  auto* exporter = app.add_subcommand("export", "All wedge graphs k = 0..N as one DOT or JSON document");
  add_graph(exporter, true);
  add_io(exporter, "dot or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (wedge->parsed()) {
      write_output(cmd_wedge(cfg), cfg.output, out);
    } else if (spectrum->parsed()) {
      write_output(cmd_spectrum(cfg), cfg.output, out);
    } else if (closed->parsed()) {
      write_output(cmd_closed_form(cfg), cfg.output, out);
    } else if (verify->parsed()) {
      return cmd_verify(cfg, out, err);
    } else if (evolve->parsed()) {
      write_output(cmd_evolve(cfg), cfg.output, out);
    } else if (exporter->parsed()) {
      write_output(cmd_export(cfg), cfg.output, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace spinwedge
