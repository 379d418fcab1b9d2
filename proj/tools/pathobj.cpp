#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathobj/errors.hpp"
#include "pathobj/fault.hpp"
#include "pathobj/io/sset_json.hpp"
#include "pathobj/laws/anchors.hpp"
#include "pathobj/laws/axioms.hpp"
#include "pathobj/laws/id_laws.hpp"
#include "pathobj/laws/wfs_laws.hpp"
#include "pathobj/model/chain.hpp"
#include "pathobj/model/groupoid.hpp"
#include "pathobj/model/sset.hpp"

using namespace pathobj;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string backend;
  std::string input;
  std::string suite;
  std::string expr;
  int samples = 200;
  std::uint64_t seed = 1;
  int max_dim = 2;
  int max_length = 6;
  std::string weak = "1";
  std::string format = "json";
  std::vector<std::string> mutate;
  std::string field = "q";
  std::size_t maps = 8;
  bool timing = false;

  ProbeConfig probes() const { return {samples, max_dim, max_length, 0}; }
};

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// A string names a file relative to the referring document; anything else is inline.
json resolve(const json& j, const std::filesystem::path& base) {
  return j.is_string() ? read_json(base.parent_path() / j.get<std::string>()) : j;
}

unsigned parse_faults(const std::vector<std::string>& names) {
  static const std::map<std::string, unsigned> table{
      {"plus_mirror", fault::plus_mirror}, {"eta_keep_first", fault::eta_keep_first}, {"pi_order", fault::pi_order}};
  unsigned bits = fault::none;
  for (auto& n : names) {
    auto it = table.find(n);
    if (it == table.end()) throw InputError("--mutate: unknown fault '" + n + "'");
    bits |= it->second;
  }
  return bits;
}

// An input is either a bare space or {"space": .., "maps": {"label": map, ..}} with endomaps of it.
template <class Model>
struct Instance {
  typename Model::Object X;
  std::vector<typename Model::Morphism> maps;
};

struct Source {
  json space;
  std::optional<json> maps;
};

Source read_source(const std::filesystem::path& path) {
  json j = read_json(path);
  if (j.is_object() && j.contains("space"))
    return {resolve(j.at("space"), path), j.contains("maps") ? std::optional<json>(j.at("maps")) : std::nullopt};
  return {j, std::nullopt};
}

Instance<GroupoidModel> load(const GroupoidModel& M, const Source& src, const Options& o) {
  Instance<GroupoidModel> in{M.base(groupoid_from_json(src.space), "X"), {}};
  if (src.maps)
    for (auto& [k, v] : src.maps->items()) in.maps.push_back(groupoid_map_from_json(M, in.X, in.X, v, k));
  else
    in.maps = all_functors(M, in.X, in.X, "f", o.maps);
  return in;
}

Instance<SSetModel> load(const SSetModel& M, const Source& src, const Options& o) {
  auto P = presentation_from_json(src.space);
  Instance<SSetModel> in{M.presented(P, "X"), {}};
  if (src.maps) {
    for (auto& [k, v] : src.maps->items()) in.maps.push_back(M.presented_map(in.X, in.X, map_from_json(P, P, v), k));
  } else {
    for (auto& m : all_maps(P, P, o.maps)) in.maps.push_back(M.presented_map(in.X, in.X, m, "f" + std::to_string(in.maps.size())));
  }
  return in;
}

template <class F>
Instance<ChainModel<F>> load(const ChainModel<F>& M, const Source& src, const Options& o) {
  Instance<ChainModel<F>> in{complex_from_json<F>(src.space, "X"), {}};
  if (src.maps) {
    for (auto& [k, v] : src.maps->items()) in.maps.push_back(chain_map_from_json(M, in.X, in.X, v, k));
  } else {
    Rng rng(o.seed);
    for (std::size_t i = 0; i < o.maps; ++i)
      in.maps.push_back(random_chain_map(rng, M, in.X, in.X, "f" + std::to_string(i)));
  }
  return in;
}

// ---- check ---------------------------------------------------------------------------

template <class Model>
SuiteReport run_suite(const Model& M, const Instance<Model>& in, const Options& o) {
  const auto cfg = o.probes();
  if (o.suite == "axioms") return axiom_suite(M, AxiomInput<Model>{in.X, in.maps}, parse_axiom_level(o.weak), cfg, o.seed);
  if (o.suite == "wfs")
    return wfs_suite(M, WfsInput<Model>{in.X, in.maps, composable_squares(M, in.maps, in.maps)}, cfg, o.seed);
  IdModel<Model> I(M);
  if (o.suite == "id") {
    SuiteReport r = id_suite(M, I.closed(in.X), cfg, o.seed);
    if (!in.maps.empty()) append(r, id_suite(M, I.path_fibration(in.maps.front()), cfg, o.seed));
    return r;
  }
  if (o.suite == "stability") {
    std::vector<Situation<Model>> sit;
    for (auto& u : in.maps) {
      auto A = I.path_fibration(u);
      for (auto& f : in.maps) sit.push_back({A, f});
    }
    if (sit.empty()) sit.push_back({I.closed(in.X), M.identity(in.X)});
    return stability_suite(M, sit, cfg, o.seed);
  }
  throw InputError("unknown suite '" + o.suite + "'");
}

int report(const SuiteReport& r, const Options& o) {
  if (o.format == "text")
    std::cout << r.text();
  else
    std::cout << r.to_json(o.timing).dump(2) << "\n";
  std::cerr << r.suite << " [" << r.backend << "]: " << r.laws.size() << " laws, " << r.failures() << " failed\n";
  return r.passed() ? 0 : 1;
}

template <class Model>
int check(const Model& M, const Options& o) {
  return report(run_suite(M, load(M, read_source(o.input), o), o), o);
}

// ---- eval ----------------------------------------------------------------------------

GElem element_from_json(const GroupoidModel&, const GObjPtr& X, const json& j) {
  return GElem::arrow(X->base->find_arrow(j.get<std::string>()));
}

SElem element_from_json(const SSetModel&, const SObjPtr& X, const json& j) {
  return SElem::simplex(simplex_from_json(X->pres, j));
}

template <class F>
CElem<F> element_from_json(const ChainModel<F>&, const CObjPtr<F>& X, const json& j) {
  if (!j.is_object() || !j.contains("deg") || !j.contains("v"))
    throw InputError("chain element: expected {\"deg\", \"v\"}");
  CElem<F> e{j.at("deg").get<int>(), {}};
  for (auto& x : j.at("v")) e.v.push_back(field_from_json<F>(x));
  if (static_cast<int>(e.v.size()) != X->dim(e.deg))
    throw InputError("chain element: degree " + std::to_string(e.deg) + " has dimension " + std::to_string(X->dim(e.deg)));
  return e;
}

GMor map_from_expr(const GroupoidModel& M, const GObjPtr& X, const json& j) {
  return groupoid_map_from_json(M, X, X, j, "f");
}

SMor map_from_expr(const SSetModel& M, const SObjPtr& X, const json& j) {
  return M.presented_map(X, X, map_from_json(X->pres, X->pres, j), "f");
}

template <class F>
CMor<F> map_from_expr(const ChainModel<F>& M, const CObjPtr<F>& X, const json& j) {
  return chain_map_from_json(M, X, X, j, "f");
}

const json& arg(const json& e, const std::string& key) {
  if (!e.contains(key)) throw InputError("eval: '" + e.value("op", std::string()) + "' needs \"" + key + "\"");
  return e.at(key);
}

SimplicialOperator operator_from_json(const json& j) {
  if (j.contains("face")) return SimplicialOperator::face(j.at("face")[0].get<int>(), j.at("face")[1].get<int>());
  if (j.contains("degeneracy"))
    return SimplicialOperator::degeneracy(j.at("degeneracy")[0].get<int>(), j.at("degeneracy")[1].get<int>());
  if (j.contains("cod") && j.contains("images"))
    return SimplicialOperator(j.at("cod").get<int>(), j.at("images").get<std::vector<int>>());
  throw InputError("operator: expected {\"face\": [n, i]}, {\"degeneracy\": [n, i]} or {\"cod\", \"images\"}");
}

// Operations on Moore paths of a presented simplicial set.
ordered_json eval_paths(const PresentationPtr& P, const json& e, const std::filesystem::path& base) {
  const std::string op = e.at("op").get<std::string>();
  // A path argument is a literal, a file name, or {"reverse": path argument}.
  auto parse = [&](auto&& self, const json& j) -> MoorePath<Simplex> {
    if (j.is_object() && j.contains("reverse")) return reverse(self(self, j.at("reverse")));
    return path_from_json(P, resolve(j, base));
  };
  auto path = [&](const std::string& k) { return parse(parse, arg(e, k)); };
  if (op == "compose") return path_to_json(compose(path("p"), path("q")));
  if (op == "reverse") return path_to_json(reverse(path("p")));
  if (op == "act") return path_to_json(path("p").act(operator_from_json(arg(e, "operator"))));
  if (op == "const")
    return path_to_json(const_path(traversal_from_json(arg(e, "traversal")), simplex_from_json(P, arg(e, "simplex"))));
  if (op == "eta") {
    auto z = eta(path("p"));
    return path_to_json(z, [](const MoorePath<Simplex>& q) { return path_to_json(q); });
  }
  throw InputError("eval: unknown op '" + op + "'");
}

// Factorization, lifting and J on an input space: results are rechecked before printing.
template <class Model>
ordered_json eval_model(const Model& M, const typename Model::Object& X, const json& e) {
  const std::string op = e.at("op").get<std::string>();
  IdModel<Model> I(M);
  const Wfs<Model>& W = I.wfs();
  const auto f = e.contains("map") ? map_from_expr(M, X, e.at("map")) : M.identity(X);
  const auto x = element_from_json(M, X, arg(e, "element"));
  if (op == "factorize") {
    auto F = W.factorize(f);
    auto w = M.apply(F.lambda, x);
    return {{"lambda", M.to_json(F.P.object, w)},
            {"rho", M.to_json(f.cod, M.apply(F.rho, w))},
            {"factors", M.apply(F.rho, w) == M.apply(f, x)}};
  }
  if (op == "lift") {
    auto F = W.factorize(f);
    auto j = W.lift(W.sigma(F), W.pi(F), F.lambda, F.rho);
    auto w = M.apply(F.lambda, x);
    auto v = M.apply(j, w);
    return {{"value", M.to_json(F.P.object, v)},
            {"upper_triangle", v == w},
            {"lower_triangle", M.apply(F.rho, v) == M.apply(F.rho, w)}};
  }
  if (op == "j_elim") {
    if (e.contains("map")) throw InputError("eval: j_elim takes no \"map\"; it eliminates over the closed type of the space");
    auto T = I.id_type(I.closed(X));
    const std::string family = e.value("family", std::string("transport"));
    for (auto& el : standard_eliminators(I, T)) {
      if (el.label != family) continue;
      auto J = I.j_elim(T, el.C, el.d);
      auto r = M.apply(T.fp.r, x);
      auto v = M.apply(J, r);
      return {{"refl", M.to_json(T.fp.P.object, r)},
              {"value", M.to_json(el.C.total, v)},
              {"computation", v == M.apply(el.d, x)},
              {"section", M.apply(el.C.proj, v) == r}};
    }
    throw InputError("eval: unknown family '" + family + "'; use transport, constant or endpoint");
  }
  throw InputError("eval: unknown op '" + op + "'");
}

template <class Model>
int eval_in(const Model& M, const json& space, const json& e) {
  const auto X = load(M, Source{space, json::object()}, Options{}).X;
  std::cout << eval_model(M, X, e).dump(2) << "\n";
  return 0;
}

int eval(const Options& o) {
  const std::filesystem::path path = o.expr;
  const json e = read_json(path);
  if (!e.is_object() || !e.contains("op") || !e.contains("space"))
    throw InputError("eval: expected {\"op\", \"space\", ..}");
  const json space = resolve(e.at("space"), path);
  const std::string backend = e.value("backend", o.backend.empty() ? std::string("sset") : o.backend);
  const std::string op = e.at("op").get<std::string>();
  const bool path_op = op == "compose" || op == "reverse" || op == "act" || op == "const" || op == "eta";
  if (path_op) {
    if (backend != "sset") throw InputError("eval: '" + op + "' acts on Moore paths and needs the sset backend");
    std::cout << eval_paths(presentation_from_json(space), e, path).dump(2) << "\n";
    return 0;
  }
  if (backend == "groupoid") return eval_in(GroupoidModel{}, space, e);
  if (backend == "sset") return eval_in(SSetModel{}, space, e);
  if (backend == "chain") return eval_in(ChainModel<Rational>{}, space, e);
  throw InputError("unknown backend '" + backend + "'");
}

// ---- dispatch ------------------------------------------------------------------------

int check(const Options& o) {
  if (o.backend == "groupoid") return check(GroupoidModel{}, o);
  if (o.backend == "sset") return check(SSetModel{}, o);
  if (o.backend == "chain") {
    if (o.field == "q") return check(ChainModel<Rational>{}, o);
    if (o.field == "f2") return check(ChainModel<Fp<2>>{}, o);
    if (o.field == "f3") return check(ChainModel<Fp<3>>{}, o);
    if (o.field == "f101") return check(ChainModel<Fp<101>>{}, o);
    throw InputError("--field must be q, f2, f3 or f101");
  }
  throw InputError("--backend must be groupoid, chain or sset");
}

int list_anchors() {
  ordered_json out = ordered_json::object();
  for (auto& [suite, anchors] : suite_anchors()) out[suite] = anchors;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path-object law checker"};
  app.require_subcommand(1);
  Options o;

  auto* chk = app.add_subcommand("check", "Run a law suite on an input space");
  chk->add_option("suite", o.suite, "axioms, wfs, id or stability")
      ->required()
      ->check(CLI::IsMember({"axioms", "wfs", "id", "stability"}));
  chk->add_option("--backend", o.backend, "groupoid, chain or sset")->required();
  chk->add_option("--input", o.input, "space, or {\"space\", \"maps\"}")->required();
  chk->add_option("--samples", o.samples, "probes per law on sampled backends");
  chk->add_option("--seed", o.seed, "probe seed");
  chk->add_option("--max-dim", o.max_dim, "largest probed simplex dimension");
  chk->add_option("--max-length", o.max_length, "longest probed traversal");
  chk->add_option("--weak", o.weak, "axiom level: 1, 1p or 1pp");
  chk->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  chk->add_option("--mutate", o.mutate, "inject faults: plus_mirror, eta_keep_first, pi_order");
  chk->add_option("--field", o.field, "chain coefficients: q, f2, f3 or f101");
  chk->add_option("--maps", o.maps, "generated endomaps when the input lists none");
  chk->add_flag("--timing", o.timing, "include wall times in the JSON report");

  auto* ev = app.add_subcommand("eval", "Evaluate one operation from an expression file");
  ev->add_option("expr", o.expr, "{\"op\", \"space\", ..}")->required();
  ev->add_option("--backend", o.backend, "backend when the expression names none");
  ev->add_option("--mutate", o.mutate, "inject faults");

  app.add_subcommand("anchors", "List the law anchors of every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    fault::Scoped faults(parse_faults(o.mutate));
    if (app.got_subcommand("anchors")) return list_anchors();
    if (app.got_subcommand("eval")) return eval(o);
    return check(o);
  } catch (const ContractViolation& e) {
    std::cerr << "contract violated: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  }
}
