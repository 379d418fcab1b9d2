#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/model/common.hpp"

namespace pathobj {

struct LawRecord {
  std::string law;
  std::string anchor;
  int samples = 0;
  int cases = 0;  // distinct instances (squares, situations) the law ranged over; 0 for a single one
  bool exhaustive = false;
  bool passed = true;
  std::optional<nlohmann::ordered_json> witness;
  double wall_ms = 0;
};

struct SuiteReport {
  std::string suite;
  std::string backend;
  std::uint64_t seed = 0;
  std::vector<LawRecord> laws;
  double wall_ms = 0;

  bool passed() const {
    for (auto& l : laws)
      if (!l.passed) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (auto& l : laws) n += l.passed ? 0 : 1;
    return n;
  }

  // Stable key order; the timing field is omitted when `timing` is false.
  nlohmann::ordered_json to_json(bool timing = true) const {
    nlohmann::ordered_json laws_json = nlohmann::ordered_json::array();
    for (auto& l : laws) {
      nlohmann::ordered_json r;
      r["law"] = l.law;
      r["anchor"] = l.anchor;
      r["samples"] = l.samples;
      if (l.cases > 0) r["cases"] = l.cases;
      r["exhaustive"] = l.exhaustive;
      r["status"] = l.passed ? "pass" : "fail";
      if (l.witness) r["witness"] = *l.witness;
      if (timing) r["wall_ms"] = l.wall_ms;
      laws_json.push_back(r);
    }
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["backend"] = backend;
    j["seed"] = seed;
    j["passed"] = passed();
    j["laws"] = laws_json;
    if (timing) j["wall_ms"] = wall_ms;
    return j;
  }

  std::string text() const {
    std::ostringstream out;
    out << suite << " [" << backend << ", seed " << seed << "]\n";
    for (auto& l : laws) {
      out << (l.passed ? "  PASS " : "  FAIL ") << l.law << "  (" << l.anchor << ")  ";
      out << (l.exhaustive ? "checked exhaustively on " : "verified on ") << l.samples << " samples";
      if (l.cases > 0) out << " over " << l.cases << " cases";
      out << "\n";
      if (l.witness) out << "    witness: " << l.witness->dump() << "\n";
    }
    out << (passed() ? "all laws pass" : std::to_string(failures()) + " law(s) fail") << "\n";
    return out.str();
  }
};

inline void append(SuiteReport& into, const SuiteReport& from) {
  into.laws.insert(into.laws.end(), from.laws.begin(), from.laws.end());
  into.wall_ms += from.wall_ms;
}

// FNV-1a, so derived seeds do not depend on the standard library.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Runs laws over model probes. Each law draws its probes from a generator seeded by the suite
// seed and the law name, so a law's outcome does not depend on which other laws ran.
template <class Model>
class LawRunner {
 public:
  using Object = typename Model::Object;
  using Element = typename Model::Element;
  // Nullopt when the law holds at the element; otherwise a description of the failure.
  using Check = std::function<std::optional<nlohmann::ordered_json>(const Element&)>;

  LawRunner(const Model& M, ProbeConfig cfg, std::uint64_t seed) : M_(M), cfg_(cfg), seed_(seed) {}

  const Model& model() const { return M_; }
  const ProbeConfig& config() const { return cfg_; }
  std::uint64_t seed() const { return seed_; }
  std::vector<LawRecord>& records() { return records_; }

  void law(const std::string& name, const std::string& anchor, const Object& dom, const Check& check) {
    const auto start = std::chrono::steady_clock::now();
    LawRecord rec{name, anchor, 0, 0, true, true, std::nullopt};
    Rng rng(seed_ ^ stable_hash(name));
    run_case(rec, rng, cfg_, dom, check, std::nullopt);
    rec.wall_ms = since(start);
    records_.push_back(std::move(rec));
  }

  struct Case {
    std::string label;
    Object dom;
    Check check;
  };

  // One law over many instances; the probe budget is split between them, at least 4 each,
  // unless `per_case` gives each instance its own.
  void law_cases(const std::string& name, const std::string& anchor, const std::vector<Case>& cases,
                 std::optional<ProbeConfig> per_case = std::nullopt) {
    const auto start = std::chrono::steady_clock::now();
    LawRecord rec{name, anchor, 0, static_cast<int>(cases.size()), true, true, std::nullopt};
    Rng rng(seed_ ^ stable_hash(name));
    ProbeConfig each = cfg_;
    if (per_case)
      each = *per_case;
    else if (!cases.empty())
      each.samples = std::max(4, cfg_.samples / static_cast<int>(cases.size()));
    for (auto& c : cases)
      if (!run_case(rec, rng, each, c.dom, c.check, c.label)) break;
    rec.wall_ms = since(start);
    records_.push_back(std::move(rec));
  }

  // lhs(e) = rhs(e) in `cod` for every probe e of `dom`.
  void equal(const std::string& name, const std::string& anchor, const Object& dom, const Object& cod,
             std::function<Element(const Element&)> lhs, std::function<Element(const Element&)> rhs) {
    const Model& M = M_;
    law(name, anchor, dom, [&M, cod, lhs, rhs](const Element& e) -> std::optional<nlohmann::ordered_json> {
      Element a = lhs(e), b = rhs(e);
      if (a == b) return std::nullopt;
      return nlohmann::ordered_json{{"lhs", M.to_json(cod, a)}, {"rhs", M.to_json(cod, b)}};
    });
  }

 private:
  // Accumulates into rec; false once a failure has been recorded.
  bool run_case(LawRecord& rec, Rng& rng, const ProbeConfig& cfg, const Object& dom, const Check& check,
                const std::optional<std::string>& label) {
    Probes<Element> probes;
    try {
      probes = M_.probes(dom, cfg, rng);
    } catch (const Error& e) {
      rec.passed = false;
      rec.exhaustive = false;
      rec.witness = nlohmann::ordered_json{{"error", std::string("probe generation: ") + e.what()}};
      if (label) (*rec.witness)["case"] = *label;
      return false;
    }
    rec.exhaustive = rec.exhaustive && probes.exhaustive;
    rec.samples += static_cast<int>(probes.elements.size());
    if (label && probes.elements.empty() && !probes.exhaustive) {
      rec.passed = false;
      rec.witness = nlohmann::ordered_json{{"case", *label}, {"error", "no probes"}};
      return false;
    }
    for (const Element& e : probes.elements) {
      auto bad = guarded(check, e);
      if (!bad) continue;
      Element small = shrink(dom, e, check);
      auto detail = guarded(check, small);
      rec.passed = false;
      nlohmann::ordered_json w;
      if (label) w["case"] = *label;
      w["input"] = M_.to_json(dom, small);
      if (detail)
        for (auto& [k, v] : detail->items()) w[k] = v;
      rec.witness = w;
      return false;
    }
    return true;
  }

  static double since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  static std::optional<nlohmann::ordered_json> guarded(const Check& check, const Element& e) {
    try {
      return check(e);
    } catch (const Error& ex) {
      return nlohmann::ordered_json{{"error", ex.what()}};
    }
  }

  // Greedy descent through the model's candidate list; deterministic.
  Element shrink(const Object& dom, Element e, const Check& check) const {
    if constexpr (requires { M_.shrink_candidates(dom, e); }) {
      for (int round = 0; round < 64; ++round) {
        bool moved = false;
        std::vector<Element> cands;
        try {
          cands = M_.shrink_candidates(dom, e);
        } catch (const Error&) {
          break;
        }
        for (auto& c : cands)
          if (guarded(check, c)) {
            e = c;
            moved = true;
            break;
          }
        if (!moved) break;
      }
    }
    return e;
  }

  const Model& M_;
  ProbeConfig cfg_;
  std::uint64_t seed_;
  std::vector<LawRecord> records_;
};

template <class Model>
SuiteReport finish(LawRunner<Model>& run, const std::string& suite, std::chrono::steady_clock::time_point start) {
  SuiteReport r;
  r.suite = suite;
  r.backend = Model::backend_name();
  r.seed = run.seed();
  r.laws = std::move(run.records());
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace pathobj
