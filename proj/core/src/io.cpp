#include "sftglue/io.hpp"

#include <algorithm>

#include "sftglue/error.hpp"

namespace sftglue::io {
namespace {

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

json period_to_json(const VertexPeriod& p) {
  return p ? json(*p) : json("infinite");
}

VertexPeriod period_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinite") return std::nullopt;
  return j.get<std::size_t>();
}

json bigint_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based position of the byte that failed.
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

json to_json(const SftGraph& g) {
  return json{{"states", g.size()}, {"matrix", g.rows()}};
}

SftGraph graph_from_json(const json& j) {
  const auto states = get_field<std::size_t>(j, "states");
  const auto matrix = get_field<std::vector<std::vector<int>>>(j, "matrix");
  if (matrix.size() != states) {
    throw InputError("\"states\" is " + std::to_string(states) +
                     " but the matrix has " + std::to_string(matrix.size()) +
                     " rows");
  }
  return SftGraph(matrix);
}

json to_json(const SymbolicPoint& x) {
  return json{{"left_period", format_word(x.left_period())},
              {"core", format_word(x.core())},
              {"right_period", format_word(x.right_period())},
              {"anchor", x.anchor()}};
}

SymbolicPoint point_from_json(const json& j) {
  if (!j.is_object()) throw InputError("a point literal must be a JSON object");
  const auto core = j.contains("core") ? get_field<std::string>(j, "core")
                                       : std::string();
  return SymbolicPoint(parse_word(get_field<std::string>(j, "left_period")),
                       core.empty() ? Word{} : parse_word(core),
                       parse_word(get_field<std::string>(j, "right_period")),
                       j.contains("anchor") ? get_field<std::int64_t>(j, "anchor")
                                            : 0);
}

json to_json(const OrbitSequence& c) {
  json out = json::array();
  for (const auto& b : c.blocks())
    out.push_back({{"point", to_json(b.point)}, {"m", b.length}});
  return out;
}

OrbitSequence orbit_sequence_from_json(const json& j) {
  if (!j.is_array()) throw InputError("an orbit sequence must be a JSON array");
  std::vector<OrbitBlock> blocks;
  for (const auto& b : j) {
    if (!b.is_object() || !b.contains("point")) {
      throw InputError("orbit block needs a \"point\" field");
    }
    blocks.push_back({point_from_json(b.at("point")),
                      get_field<std::int64_t>(b, "m")});
  }
  return OrbitSequence(std::move(blocks));
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(bigint_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

IntMatrix int_matrix_from_json(const json& j) {
  IntMatrix out;
  for (const auto& row : j) {
    std::vector<BigInt> r;
    for (const auto& v : row) r.push_back(bigint_from_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const SpaceClass& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SinglePeriodicOrbit>) {
          return {{"kind", "SinglePeriodicOrbit"}, {"length", v.length}};
        } else if constexpr (std::is_same_v<T, Perfect>) {
          return {{"kind", "Perfect"}};
        } else {
          return {{"kind", "FiniteUnion"}, {"orbit_lengths", v.orbit_lengths}};
        }
      },
      c);
}

SpaceClass space_class_from_json(const json& j) {
  const auto kind = get_field<std::string>(j, "kind");
  if (kind == "SinglePeriodicOrbit")
    return SinglePeriodicOrbit{get_field<std::size_t>(j, "length")};
  if (kind == "Perfect") return Perfect{};
  if (kind == "FiniteUnion")
    return FiniteUnion{get_field<std::vector<std::size_t>>(j, "orbit_lengths")};
  throw InputError("unknown space class \"" + kind + "\"");
}

json to_json(const AnalysisReport& r) {
  json per = json::array();
  for (const auto& p : r.per_vertex_periods) per.push_back(period_to_json(p));
  return json{{"irreducible", r.irreducible},
              {"period", period_to_json(r.period)},
              {"per_vertex_periods", per},
              {"mixing", r.mixing},
              {"entropy_spectral", r.entropy_spectral},
              {"entropy_word_count", r.entropy_word_count},
              {"space_class", to_json(r.space_class)},
              {"gluing_orbit", r.gluing_orbit},
              {"hyper_gluing_possible", r.hyper_gluing_possible},
              {"hyper_gluing_possible_note", "necessary condition only"}};
}

AnalysisReport analysis_report_from_json(const json& j) {
  AnalysisReport r;
  r.irreducible = get_field<bool>(j, "irreducible");
  r.period = period_from_json(j.at("period"));
  for (const auto& p : j.at("per_vertex_periods"))
    r.per_vertex_periods.push_back(period_from_json(p));
  r.mixing = get_field<bool>(j, "mixing");
  r.entropy_spectral = get_field<double>(j, "entropy_spectral");
  r.entropy_word_count = get_field<double>(j, "entropy_word_count");
  r.space_class = space_class_from_json(j.at("space_class"));
  r.gluing_orbit = get_field<bool>(j, "gluing_orbit");
  r.hyper_gluing_possible = get_field<bool>(j, "hyper_gluing_possible");
  return r;
}

json to_json(const EntropyEstimate& e) {
  json counts = json::array();
  for (const auto& c : e.word_counts) counts.push_back(bigint_to_json(c));
  return json{{"word_counts", counts},
              {"word_count_rate", e.word_count_rate},
              {"spectral", e.spectral},
              {"spectral_radius", e.spectral_radius},
              {"iterations", e.iterations}};
}

json to_json(const TraceCertificate& c) {
  return json{{"z", to_json(c.z)},
              {"gaps", c.gap.gaps()},
              {"resolution", c.resolution},
              {"verified", c.verified}};
}

TraceCertificate trace_certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("z")) {
    throw InputError("trace certificate needs a \"z\" field");
  }
  return {point_from_json(j.at("z")),
          GapSchedule(get_field<std::vector<std::int64_t>>(j, "gaps")),
          get_field<int>(j, "resolution"), get_field<bool>(j, "verified")};
}

json to_json(const CantorApproximation& c) {
  json levels = json::array();
  for (const auto& level : c.levels) {
    json pts = json::array();
    for (const auto& p : level) pts.push_back(to_json(p));
    levels.push_back(std::move(pts));
  }
  return json{{"base", to_json(c.base)},
              {"resolution", c.resolution.value()},
              {"levels", levels}};
}

json to_json(const StableCensus& c) {
  return json{{"count", bigint_to_json(c.count)},
              {"previous_count", bigint_to_json(c.previous_count)},
              {"verdict", c.verdict == CensusVerdict::kGrowingUncountableAtDepth
                              ? "GrowingUncountableAtDepth"
                              : "ConstantCountableAtDepth"}};
}

json to_json(const HyperRefutation& r) {
  json verdicts = json::array();
  for (const auto& cv : r.verdicts) {
    json gaps = json::array();
    for (const auto& gv : cv.gaps) {
      json g{{"gap", gv.gap}, {"sat", gv.sat}};
      if (gv.sat) {
        json set = json::array();
        for (const auto& p : gv.tracing_set) set.push_back(to_json(p));
        g["tracing_set"] = std::move(set);
      } else if (gv.uncovered) {
        g["uncovered_block"] = gv.uncovered->block;
        g["uncovered_time"] = gv.uncovered->time;
        g["uncovered_element"] = to_json(gv.uncovered->element);
        g["parity_blocked"] = gv.uncovered->parity_blocked;
      }
      gaps.push_back(std::move(g));
    }
    verdicts.push_back({{"M", cv.max_gap},
                        {"verdict", cv.sat ? "SAT" : "UNSAT"},
                        {"gaps", std::move(gaps)}});
  }
  return json{{"x", to_json(r.x)},
              {"y", to_json(r.y)},
              {"period", r.period},
              {"resolution", r.resolution.value()},
              {"k", r.k},
              {"all_unsat", r.all_unsat()},
              {"verdicts", std::move(verdicts)}};
}

HyperRefutation hyper_refutation_from_json(const json& j) {
  HyperRefutation r{point_from_json(j.at("x")),
                    point_from_json(j.at("y")),
                    get_field<std::size_t>(j, "period"),
                    Resolution(get_field<int>(j, "resolution")),
                    get_field<std::int64_t>(j, "k"),
                    {}};
  for (const auto& v : j.at("verdicts")) {
    ConstantVerdict cv;
    cv.max_gap = get_field<std::int64_t>(v, "M");
    cv.sat = get_field<std::string>(v, "verdict") == "SAT";
    for (const auto& g : v.at("gaps")) {
      GapVerdict gv;
      gv.gap = get_field<std::int64_t>(g, "gap");
      gv.sat = get_field<bool>(g, "sat");
      if (g.contains("tracing_set")) {
        for (const auto& p : g.at("tracing_set"))
          gv.tracing_set.push_back(point_from_json(p));
      }
      if (g.contains("uncovered_element")) {
        gv.uncovered = UncoveredPair{
            get_field<std::size_t>(g, "uncovered_block"),
            get_field<std::int64_t>(g, "uncovered_time"),
            point_from_json(g.at("uncovered_element")),
            get_field<bool>(g, "parity_blocked")};
      }
      cv.gaps.push_back(std::move(gv));
    }
    r.verdicts.push_back(std::move(cv));
  }
  return r;
}

}  // namespace sftglue::io
