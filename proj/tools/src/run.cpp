#include "sftglue_cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "sftglue/sftglue.hpp"

namespace sftglue::cli {
namespace {

using io::json;

constexpr std::pair<Command, const char*> kNames[] = {
    {Command::kAnalyze, "analyze"},         {Command::kTrace, "trace"},
    {Command::kShadow, "shadow"},           {Command::kCantor, "cantor"},
    {Command::kCensus, "census"},           {Command::kHyperRefute, "hyper-refute"},
    {Command::kEntropy, "entropy"},         {Command::kExample31, "example31"},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses `what`, prefixing parse diagnostics with `label`.
json parse_labelled(const std::string& text, const std::string& label) {
  try {
    return io::parse_json(text);
  } catch (const ParseError& e) {
    throw ParseError(label + ": malformed JSON", e.line(), e.column());
  }
}

// Inline JSON when it looks like JSON, a file path otherwise.
json load_json_argument(const std::string& value, const std::string& flag) {
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) {
    return parse_labelled(value, flag);
  }
  return parse_labelled(read_file(value), value);
}

SftGraph load_graph(const RunConfig& c) {
  return io::graph_from_json(parse_labelled(read_file(c.input), c.input));
}

SymbolicPoint point_or_default(const RunConfig& c, const SftGraph& g) {
  if (c.point) return io::point_from_json(load_json_argument(*c.point, "--point"));
  const auto ess = essential_subgraph(g);
  if (!ess.graph) throw HypothesisError("the graph has no bi-infinite walks");
  return point_of(g, Word{ess.original.front()});
}

// Random orbit sequence for `trace` when no blocks are given.
OrbitSequence random_blocks(const SftGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
  };
  std::vector<OrbitBlock> blocks;
  const std::size_t k = 1 + pick(3);
  for (std::size_t j = 0; j < k; ++j) {
    Word w{static_cast<Symbol>(pick(g.size() - 1))};
    const std::size_t extra = pick(4);
    for (std::size_t i = 0; i < extra; ++i) {
      const auto s = g.successors(w.back());
      w.push_back(s[pick(s.size() - 1)]);
    }
    blocks.push_back({point_of(g, w), static_cast<std::int64_t>(pick(6))});
  }
  return OrbitSequence(std::move(blocks));
}

json run_analyze(const RunConfig& c) {
  const auto g = load_graph(c);
  return io::to_json(analyze(g, static_cast<std::size_t>(c.terms)));
}

json run_entropy(const RunConfig& c) {
  return io::to_json(entropy(load_graph(c), static_cast<std::size_t>(c.terms)));
}

json run_trace(const RunConfig& c) {
  const auto g = load_graph(c);
  const Resolution n(c.resolution);
  const auto seq = c.blocks
                       ? io::orbit_sequence_from_json(load_json_argument(*c.blocks, "--blocks"))
                       : random_blocks(g, c.seed);
  const auto t = construct_trace(g, seq, n);
  const io::TraceCertificate cert{t.z, t.gap, n.value(), verify_trace(g, t.z, seq, t.gap, n)};
  json out = io::to_json(cert);
  out["blocks"] = io::to_json(seq);
  out["gap_bound"] = gap_bound(g, n);
  return out;
}

json run_shadow(const RunConfig& c) {
  const auto g = load_graph(c);
  const Resolution n(c.resolution);
  const json j = load_json_argument(*c.pseudo_orbit, "--pseudo-orbit");
  if (!j.is_array()) throw InputError("--pseudo-orbit must be a JSON array of points");
  std::vector<SymbolicPoint> po;
  for (const auto& p : j) po.push_back(io::point_from_json(p));
  const auto z = shadow(g, po, n);
  return json{{"z", io::to_json(z)}, {"resolution", n.value()}, {"length", po.size()}};
}

json run_cantor(const RunConfig& c) {
  const auto g = load_graph(c);
  const auto x = point_or_default(c, g);
  return io::to_json(cantor_construct(g, x, Resolution(c.resolution),
                                      static_cast<std::size_t>(c.depth)));
}

json run_census(const RunConfig& c) {
  const auto g = load_graph(c);
  const auto x = point_or_default(c, g);
  json out = io::to_json(
      stable_census(g, x, Resolution(c.resolution), static_cast<std::size_t>(c.depth)));
  out["point"] = io::to_json(x);
  out["depth"] = c.depth;
  return out;
}

json run_hyper(const SftGraph& g, int n, int max_gap, int k) {
  return io::to_json(refute_hyper_gluing(g, Resolution(n), max_gap, k));
}

json run_example31() {
  const SftGraph m({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
  json out = io::to_json(analyze(m));
  out["matrix"] = m.rows();
  out["M2"] = io::to_json(matrix_power(m, 2));
  out["M3"] = io::to_json(matrix_power(m, 3));
  const auto r = refute_hyper_gluing(m, Resolution(1), 4, 2);
  out["hyper_refutation"] = r.all_unsat() ? "UNSAT" : "SAT";
  out["hyper_refutation_parameters"] = json{{"N", 1}, {"M_max", 4}, {"k", 2}};
  out["refutation"] = io::to_json(r);
  return out;
}

void check_range(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw InputError(std::string(name) + " = " + std::to_string(value) +
                     " is outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v.get<double>();
    return ss.str();
  }
  return v.dump();
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& row) {
           return row.is_array() && std::all_of(row.begin(), row.end(), [](const json& e) {
                    return e.is_number() || e.is_string();
                  });
         });
}

}  // namespace

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kNames)
    if (name == n) return cmd;
  throw InputError("unknown command \"" + name + "\"");
}

std::string command_name(Command c) {
  for (const auto& [cmd, n] : kNames)
    if (cmd == c) return n;
  return "?";
}

void validate(const RunConfig& c) {
  check_range("resolution N", c.resolution, 1, kMaxParameter);
  check_range("depth k", c.depth, c.command == Command::kCensus ? 1 : 0, kMaxParameter);
  check_range("max-gap M_max", c.max_gap, 1, kMaxParameter);
  check_range("terms", c.terms, 1, 4096);
  if (c.command != Command::kExample31 && c.input.empty()) {
    throw InputError(command_name(c.command) + " needs --input");
  }
  if (c.command == Command::kShadow && !c.pseudo_orbit) {
    throw InputError("shadow needs --pseudo-orbit");
  }
}

RunResult run(const RunConfig& c) {
  RunResult result;
  try {
    validate(c);
    switch (c.command) {
      case Command::kAnalyze: result.report = run_analyze(c); break;
      case Command::kEntropy: result.report = run_entropy(c); break;
      case Command::kTrace: result.report = run_trace(c); break;
      case Command::kShadow: result.report = run_shadow(c); break;
      case Command::kCantor: result.report = run_cantor(c); break;
      case Command::kCensus: result.report = run_census(c); break;
      case Command::kHyperRefute:
        result.report = run_hyper(load_graph(c), c.resolution, c.max_gap, c.depth);
        if (result.report.at("all_unsat").get<bool>()) result.exit_code = kExitRefuted;
        break;
      case Command::kExample31: result.report = run_example31(); break;
    }
  } catch (const Error& e) {
    result.exit_code = kExitInputError;
    result.report = nullptr;
    result.output = std::string("error: ") + e.what() + "\n";
    return result;
  }
  result.output = c.format == Format::kJson ? result.report.dump(2) + "\n"
                                            : render_text(result.report);
  return result;
}

std::string render_text(const json& report) {
  if (!report.is_object()) return report.dump(2) + "\n";
  std::size_t width = 0;
  for (const auto& [key, _] : report.items()) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << key;
    if (is_matrix(value)) {
      bool first = true;
      for (const auto& row : value) {
        if (!first) out << std::string(width + 2, ' ');
        first = false;
        for (const auto& e : row) out << std::right << std::setw(4) << scalar_text(e);
        out << '\n';
      }
    } else if (value.is_structured()) {
      out << value.dump() << '\n';
    } else {
      out << scalar_text(value) << '\n';
    }
  }
  return out.str();
}

}  // namespace sftglue::cli
