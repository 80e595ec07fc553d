#include "spinwedge/corpus.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "spinwedge/errors.hpp"

namespace spinwedge {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InputError("invalid " + what + " '" + text + "'");
  return value;
}

}  // namespace

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("random graph needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

NamedGraph parse_graph_source(const std::string& source) {
  const auto parts = split(source, ':');
  static const std::vector<std::pair<std::string, Family>> families = {
      {"path", Family::Path}, {"cycle", Family::Cycle}, {"complete", Family::Complete},
      {"empty", Family::Empty}, {"random", Family::Random}};
  if (parts.size() >= 2) {
    for (const auto& [prefix, family] : families) {
      if (parts[0] != prefix) continue;
      if (family == Family::Random) {
        if (parts.size() != 4) throw InputError("random graphs are written random:N:P:SEED");
        const int n = parse_number<int>(parts[1], "vertex count");
        const double p = parse_number<double>(parts[2], "edge probability");
        const auto seed = parse_number<std::uint64_t>(parts[3], "seed");
        return {source, family, erdos_renyi(n, p, seed)};
      }
      if (parts.size() != 2) throw InputError("family graphs are written " + prefix + ":N");
      const int n = parse_number<int>(parts[1], "vertex count");
      switch (family) {
        case Family::Path: return {source, family, path_graph(n)};
        case Family::Cycle: return {source, family, cycle_graph(n)};
        case Family::Complete: return {source, family, complete_graph(n)};
        default: return {source, family, empty_graph(n)};
      }
    }
  }
  std::ifstream in(source);
  if (!in) throw InputError("'" + source + "' is neither a graph family such as path:5 nor a readable file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {source, Family::Custom, graph_from_json(buffer.str())};
}

std::vector<NamedGraph> default_corpus() {
  std::vector<NamedGraph> corpus;
  for (int n = 2; n <= 8; ++n) corpus.push_back(parse_graph_source("path:" + std::to_string(n)));
  for (int n = 3; n <= 7; ++n) corpus.push_back(parse_graph_source("cycle:" + std::to_string(n)));
  for (int n = 2; n <= 6; ++n) corpus.push_back(parse_graph_source("complete:" + std::to_string(n)));
  for (int seed = 0; seed < 5; ++seed) corpus.push_back(parse_graph_source("random:6:0.5:" + std::to_string(seed)));
  return corpus;
}

}  // namespace spinwedge
