#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/model/common.hpp"

namespace pathobj {

// A finite groupoid. Arrows 0..objects-1 are the identities, in object order.
class FinGroupoid {
 public:
  struct Arrow {
    std::string name;
    int src;
    int tgt;
  };

  // `comp(g, f)` returns the index of g o f for composable g, f (src g = tgt f).
  FinGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows, const std::function<int(int, int)>& comp)
      : objects_(std::move(objects)), arrows_(std::move(arrows)) {
    const int n = static_cast<int>(arrows_.size());
    const int k = static_cast<int>(objects_.size());
    if (n < k) throw InputError("groupoid: fewer arrows than objects");
    for (int o = 0; o < k; ++o)
      if (arrows_[o].src != o || arrows_[o].tgt != o) throw InputError("groupoid: arrow " + std::to_string(o) + " must be the identity of object " + objects_[o]);
    for (auto& a : arrows_)
      if (a.src < 0 || a.src >= k || a.tgt < 0 || a.tgt >= k) throw InputError("groupoid: arrow '" + a.name + "' has an unknown endpoint");
    comp_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) {
        if (arrows_[g].src != arrows_[f].tgt) continue;
        int h = comp(g, f);
        if (h < 0 || h >= n) throw InputError("groupoid: missing composite " + arrows_[g].name + " o " + arrows_[f].name);
        if (arrows_[h].src != arrows_[f].src || arrows_[h].tgt != arrows_[g].tgt)
          throw InputError("groupoid: composite " + arrows_[g].name + " o " + arrows_[f].name + " has the wrong endpoints");
        comp_[static_cast<std::size_t>(g) * n + f] = h;
      }
    for (int f = 0; f < n; ++f) {
      if (at(arrows_[f].tgt, f) != f || at(f, arrows_[f].src) != f)
        throw InputError("groupoid: identities are not units at '" + arrows_[f].name + "'");
    }
    for (int h = 0; h < n; ++h)
      for (int g = 0; g < n; ++g) {
        if (arrows_[h].src != arrows_[g].tgt) continue;
        for (int f = 0; f < n; ++f) {
          if (arrows_[g].src != arrows_[f].tgt) continue;
          if (at(at(h, g), f) != at(h, at(g, f)))
            throw InputError("groupoid: composition is not associative at (" + arrows_[h].name + ", " +
                             arrows_[g].name + ", " + arrows_[f].name + ")");
        }
      }
    inv_.assign(n, -1);
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        if (arrows_[g].src == arrows_[f].tgt && arrows_[g].tgt == arrows_[f].src && at(g, f) == arrows_[f].src &&
            at(f, g) == arrows_[f].tgt)
          inv_[f] = g;
    for (int f = 0; f < n; ++f)
      if (inv_[f] < 0) throw InputError("groupoid: arrow '" + arrows_[f].name + "' has no inverse");
  }

  int object_count() const { return static_cast<int>(objects_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int o) const { return objects_.at(o); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  int identity(int o) const { return o; }
  int compose(int g, int f) const {
    int h = at(g, f);
    if (h < 0) throw ContractViolation("groupoid compose", arrows_[g].name + " o " + arrows_[f].name + " not composable");
    return h;
  }
  int inverse(int f) const { return inv_.at(f); }
  int find_arrow(const std::string& name) const {
    for (int a = 0; a < arrow_count(); ++a)
      if (arrows_[a].name == name) return a;
    throw InputError("groupoid: unknown arrow '" + name + "'");
  }
  int find_object(const std::string& name) const {
    for (int o = 0; o < object_count(); ++o)
      if (objects_[o] == name) return o;
    throw InputError("groupoid: unknown object '" + name + "'");
  }

  // The action groupoid of a group acting on {0..points-1}. `act[g][x]` is g . x, `mul[g][h]`
  // is gh, element 0 is the unit.
  static FinGroupoid action(int points, const std::vector<std::vector<int>>& act,
                            const std::vector<std::vector<int>>& mul) {
    const int order = static_cast<int>(mul.size());
    std::vector<std::string> objs;
    for (int x = 0; x < points; ++x) objs.push_back("p" + std::to_string(x));
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> label;  // (group element, source)
    for (int x = 0; x < points; ++x) {
      arrows.push_back({"id_p" + std::to_string(x), x, x});
      label.push_back({0, x});
    }
    for (int g = 1; g < order; ++g)
      for (int x = 0; x < points; ++x) {
        arrows.push_back({"g" + std::to_string(g) + "@p" + std::to_string(x), x, act[g][x]});
        label.push_back({g, x});
      }
    auto index = [&](int g, int x) {
      for (std::size_t a = 0; a < label.size(); ++a)
        if (label[a] == std::pair{g, x}) return static_cast<int>(a);
      return -1;
    };
    return FinGroupoid(objs, arrows, [&](int a, int b) { return index(mul[label[a].first][label[b].first], label[b].second); });
  }

  // The two-object groupoid with a single isomorphism between the objects.
  static FinGroupoid interval() {
    return FinGroupoid({"0", "1"}, {{"id_0", 0, 0}, {"id_1", 1, 1}, {"i", 0, 1}, {"j", 1, 0}}, [](int g, int f) {
      static const int table[4][4] = {{0, -1, -1, 3}, {-1, 1, 2, -1}, {2, -1, -1, 1}, {-1, 3, 0, -1}};
      return table[g][f];
    });
  }

 private:
  int at(int g, int f) const { return comp_[static_cast<std::size_t>(g) * arrows_.size() + f]; }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> comp_;
  std::vector<int> inv_;
};

// {"objects": [..], "arrows": [{"name", "src", "tgt"}], "comp": [["g", "f", "g o f"], ..]}.
// Identities "id_<object>" are added; composites with identities are implied.
inline std::shared_ptr<FinGroupoid> groupoid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("objects")) throw InputError("groupoid: missing \"objects\"");
  std::vector<std::string> objs = j.at("objects").get<std::vector<std::string>>();
  std::map<std::string, int> obj_index;
  for (std::size_t o = 0; o < objs.size(); ++o)
    if (!obj_index.emplace(objs[o], static_cast<int>(o)).second) throw InputError("groupoid: duplicate object " + objs[o]);
  std::vector<FinGroupoid::Arrow> arrows;
  for (auto& o : objs) arrows.push_back({"id_" + o, obj_index[o], obj_index[o]});
  auto obj = [&](const nlohmann::json& v) {
    auto it = obj_index.find(v.get<std::string>());
    if (it == obj_index.end()) throw InputError("groupoid: unknown object " + v.dump());
    return it->second;
  };
  for (auto& a : j.value("arrows", nlohmann::json::array())) {
    if (!a.contains("name") || !a.contains("src") || !a.contains("tgt"))
      throw InputError("groupoid: arrow needs name, src, tgt");
    arrows.push_back({a.at("name").get<std::string>(), obj(a.at("src")), obj(a.at("tgt"))});
  }
  std::map<std::string, int> arrow_index;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (!arrow_index.emplace(arrows[a].name, static_cast<int>(a)).second)
      throw InputError("groupoid: duplicate arrow " + arrows[a].name);
  auto arr = [&](const nlohmann::json& v) {
    auto it = arrow_index.find(v.get<std::string>());
    if (it == arrow_index.end()) throw InputError("groupoid: unknown arrow " + v.dump());
    return it->second;
  };
  std::map<std::pair<int, int>, int> table;
  for (auto& c : j.value("comp", nlohmann::json::array())) {
    if (!c.is_array() || c.size() != 3) throw InputError("groupoid: comp entry must be [g, f, g o f]");
    table[{arr(c[0]), arr(c[1])}] = arr(c[2]);
  }
  const int k = static_cast<int>(objs.size());
  return std::make_shared<FinGroupoid>(objs, arrows, [&](int g, int f) {
    if (g < k) return f;
    if (f < k) return g;
    auto it = table.find({g, f});
    return it == table.end() ? -1 : it->second;
  });
}

// An arrow of a groupoid built from base groupoids by pullback and path objects. Objects are
// represented by their identity arrows.
struct GElem {
  enum class Kind : std::uint8_t { arrow, unit, pair, square };
  Kind kind = Kind::unit;
  int id = 0;               // arrow index, for Kind::arrow
  std::vector<GElem> kids;  // pair: {a, b}; square: {f, g, u, v}, an arrow f -> g with legs u, v

  static GElem arrow(int a) { return {Kind::arrow, a, {}}; }
  static GElem unit() { return {Kind::unit, 0, {}}; }
  static GElem pair(GElem a, GElem b) { return {Kind::pair, 0, {std::move(a), std::move(b)}}; }
  static GElem square(GElem f, GElem g, GElem u, GElem v) {
    return {Kind::square, 0, {std::move(f), std::move(g), std::move(u), std::move(v)}};
  }

  friend bool operator==(const GElem&, const GElem&) = default;
  friend bool operator<(const GElem& a, const GElem& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.id != b.id) return a.id < b.id;
    return std::lexicographical_compare(a.kids.begin(), a.kids.end(), b.kids.begin(), b.kids.end());
  }
};

struct GObj;
using GObjPtr = std::shared_ptr<const GObj>;

struct GMor {
  GObjPtr dom, cod;
  std::function<GElem(const GElem&)> fn;
  std::string label;
};

struct GObj {
  enum class Kind { base, terminal, pullback, paths };
  Kind kind;
  std::string name;
  std::shared_ptr<const FinGroupoid> base;
  GMor f, g;      // pullback legs
  GObjPtr inner;  // paths

  mutable std::once_flag arrows_once;
  mutable std::vector<GElem> arrows_cache;
};

// The groupoid path object category: MX = X^I, elements are arrows.
class GroupoidModel {
 public:
  using Object = GObjPtr;
  using Element = GElem;
  using Morphism = GMor;
  using Pullback = PullbackOf<GObjPtr, GMor>;

  static std::string backend_name() { return "groupoid"; }

  Object base(std::shared_ptr<const FinGroupoid> G, std::string name) const {
    auto o = std::make_shared<GObj>();
    o->kind = GObj::Kind::base;
    o->name = std::move(name);
    o->base = std::move(G);
    return o;
  }

  Object terminal() const {
    static const Object one = [] {
      auto o = std::make_shared<GObj>();
      o->kind = GObj::Kind::terminal;
      o->name = "1";
      return Object(o);
    }();
    return one;
  }

  Pullback pullback(const Morphism& f, const Morphism& g) const {
    if (f.cod->name != g.cod->name)
      throw ContractViolation("pullback", "codomains " + f.cod->name + " and " + g.cod->name + " differ");
    auto o = std::make_shared<GObj>();
    o->kind = GObj::Kind::pullback;
    o->name = "(" + f.dom->name + " x_" + f.cod->name + " " + g.dom->name + " via " + f.label + "," + g.label + ")";
    o->f = f;
    o->g = g;
    Object P = o;
    return {P, {P, f.dom, [](const GElem& e) { return e.kids.at(0); }, "pr1"},
            {P, g.dom, [](const GElem& e) { return e.kids.at(1); }, "pr2"}, f, g};
  }

  Pullback product(const Object& A, const Object& B) const { return pullback(terminal_map(A), terminal_map(B)); }

  Element pair(const Pullback&, const Element& a, const Element& b) const { return GElem::pair(a, b); }

  Object path_object(const Object& X) const {
    auto o = std::make_shared<GObj>();
    o->kind = GObj::Kind::paths;
    o->name = "M" + X->name;
    o->inner = X;
    return o;
  }

  Morphism map_path(const Morphism& F) const {
    auto fn = F.fn;
    return {path_object(F.dom), path_object(F.cod),
            [fn](const GElem& s) { return GElem::square(fn(s.kids[0]), fn(s.kids[1]), fn(s.kids[2]), fn(s.kids[3])); },
            "M(" + F.label + ")"};
  }

  Element pair_paths(const Pullback&, const Element& pa, const Element& pb) const {
    return GElem::square(GElem::pair(pa.kids[0], pb.kids[0]), GElem::pair(pa.kids[1], pb.kids[1]),
                         GElem::pair(pa.kids[2], pb.kids[2]), GElem::pair(pa.kids[3], pb.kids[3]));
  }

  Morphism source(const Object& X) const {
    return {path_object(X), X, [](const GElem& s) { return s.kids.at(2); }, "s_" + X->name};
  }
  Morphism target(const Object& X) const {
    return {path_object(X), X, [](const GElem& s) { return s.kids.at(3); }, "t_" + X->name};
  }
  Morphism refl(const Object& X) const {
    return {X, path_object(X), [this, X](const GElem& c) { return refl_square(*X, c); }, "r_" + X->name};
  }

  // Pairs (g, f) with s(g) = t(f).
  Pullback composable(const Object& X) const { return pullback(source(X), target(X)); }

  Morphism compose_paths(const Object& X) const {
    return {composable(X).object, path_object(X),
            [this, X](const GElem& p) {
              const GElem &G = p.kids[0], &F = p.kids[1];
              return GElem::square(comp(*X, G.kids[0], F.kids[0]), comp(*X, G.kids[1], F.kids[1]), F.kids[2], G.kids[3]);
            },
            "m_" + X->name};
  }

  Morphism reverse_paths(const Object& X) const {
    return {path_object(X), path_object(X),
            [this, X](const GElem& s) {
              return GElem::square(inv(*X, s.kids[0]), inv(*X, s.kids[1]), s.kids[3], s.kids[2]);
            },
            "tau_" + X->name};
  }

  // alpha_{1,X} : M1 x X -> MX.
  Morphism strength(const Object& X) const {
    return {product(path_object(terminal()), X).object, path_object(X),
            [this, X](const GElem& p) { return refl_square(*X, p.kids[1]); }, "alpha_" + X->name};
  }

  Morphism contract(const Object& X) const {
    Object MX = path_object(X);
    return {MX, path_object(MX),
            [this, X](const GElem& s) {
              const GElem &f = s.kids[0], &g = s.kids[1], &v = s.kids[3];
              return GElem::square(to_target(*X, f), to_target(*X, g), s, refl_square(*X, v));
            },
            "eta_" + X->name};
  }

  Morphism identity(const Object& X) const {
    return {X, X, [](const GElem& e) { return e; }, "id_" + X->name};
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.cod->name != g.dom->name)
      throw ContractViolation("compose", g.label + " o " + f.label + ": " + f.cod->name + " is not " + g.dom->name);
    auto gf = g.fn, ff = f.fn;
    return {f.dom, g.cod, [gf, ff](const GElem& e) { return gf(ff(e)); }, g.label + " o " + f.label};
  }

  Morphism terminal_map(const Object& X) const {
    return {X, terminal(), [](const GElem&) { return GElem::unit(); }, "!_" + X->name};
  }

  Morphism morphism(const Object& dom, const Object& cod, std::function<GElem(const GElem&)> fn,
                    std::string label) const {
    return {dom, cod, std::move(fn), std::move(label)};
  }

  Element apply(const Morphism& f, const Element& x) const { return f.fn(x); }

  Probes<GElem> probes(const Object& X, const ProbeConfig& cfg, Rng& rng) const {
    return subsample(arrows(X), cfg, rng);
  }

  // ---- groupoid structure on every object --------------------------------

  GElem dom(const GObj& X, const GElem& a) const {
    switch (X.kind) {
      case GObj::Kind::base:
        return GElem::arrow(X.base->arrow(a.id).src);
      case GObj::Kind::terminal:
        return a;
      case GObj::Kind::pullback:
        return GElem::pair(dom(*X.f.dom, a.kids[0]), dom(*X.g.dom, a.kids[1]));
      case GObj::Kind::paths:
        return identity_square(*X.inner, a.kids[0]);
    }
    return a;
  }

  GElem cod(const GObj& X, const GElem& a) const {
    switch (X.kind) {
      case GObj::Kind::base:
        return GElem::arrow(X.base->arrow(a.id).tgt);
      case GObj::Kind::terminal:
        return a;
      case GObj::Kind::pullback:
        return GElem::pair(cod(*X.f.dom, a.kids[0]), cod(*X.g.dom, a.kids[1]));
      case GObj::Kind::paths:
        return identity_square(*X.inner, a.kids[1]);
    }
    return a;
  }

  // b o a.
  GElem comp(const GObj& X, const GElem& b, const GElem& a) const {
    switch (X.kind) {
      case GObj::Kind::base:
        return GElem::arrow(X.base->compose(b.id, a.id));
      case GObj::Kind::terminal:
        return a;
      case GObj::Kind::pullback:
        return GElem::pair(comp(*X.f.dom, b.kids[0], a.kids[0]), comp(*X.g.dom, b.kids[1], a.kids[1]));
      case GObj::Kind::paths:
        if (!(a.kids[1] == b.kids[0])) throw ContractViolation("groupoid compose", "squares do not meet");
        return GElem::square(a.kids[0], b.kids[1], comp(*X.inner, b.kids[2], a.kids[2]),
                             comp(*X.inner, b.kids[3], a.kids[3]));
    }
    return a;
  }

  GElem inv(const GObj& X, const GElem& a) const {
    switch (X.kind) {
      case GObj::Kind::base:
        return GElem::arrow(X.base->inverse(a.id));
      case GObj::Kind::terminal:
        return a;
      case GObj::Kind::pullback:
        return GElem::pair(inv(*X.f.dom, a.kids[0]), inv(*X.g.dom, a.kids[1]));
      case GObj::Kind::paths:
        return GElem::square(a.kids[1], a.kids[0], inv(*X.inner, a.kids[2]), inv(*X.inner, a.kids[3]));
    }
    return a;
  }

  bool is_identity(const GObj& X, const GElem& a) const { return dom(X, a) == a; }

  // Every arrow, in a deterministic order.
  const std::vector<GElem>& arrows(const Object& X) const {
    std::call_once(X->arrows_once, [&] { X->arrows_cache = enumerate(*X); });
    return X->arrows_cache;
  }

  // The identity square r(c) : dom c -> cod c with both legs c.
  GElem refl_square(const GObj& X, const GElem& c) const { return GElem::square(dom(X, c), cod(X, c), c, c); }

  nlohmann::ordered_json to_json(const Object& X, const GElem& e) const { return elem_json(*X, e); }

 private:
  GElem identity_square(const GObj& X, const GElem& f) const { return GElem::square(f, f, dom(X, f), cod(X, f)); }

  // The square from f to the identity at its codomain, with legs (f, id).
  GElem to_target(const GObj& X, const GElem& f) const {
    GElem b = cod(X, f);
    return GElem::square(f, b, f, b);
  }

  std::vector<GElem> enumerate(const GObj& X) const {
    std::vector<GElem> out;
    switch (X.kind) {
      case GObj::Kind::base:
        for (int a = 0; a < X.base->arrow_count(); ++a) out.push_back(GElem::arrow(a));
        break;
      case GObj::Kind::terminal:
        out.push_back(GElem::unit());
        break;
      case GObj::Kind::pullback: {
        std::map<GElem, std::vector<GElem>> by_image;
        for (auto& b : arrows(X.g.dom)) by_image[X.g.fn(b)].push_back(b);
        for (auto& a : arrows(X.f.dom)) {
          auto it = by_image.find(X.f.fn(a));
          if (it == by_image.end()) continue;
          for (auto& b : it->second) out.push_back(GElem::pair(a, b));
        }
        break;
      }
      case GObj::Kind::paths: {
        const auto& xs = arrows(X.inner);
        std::map<GElem, std::vector<GElem>> out_of;
        for (auto& u : xs) out_of[dom(*X.inner, u)].push_back(u);
        for (auto& f : xs)
          for (auto& u : out_of[dom(*X.inner, f)])
            for (auto& g : out_of[cod(*X.inner, u)]) {
              GElem v = comp(*X.inner, comp(*X.inner, g, u), inv(*X.inner, f));
              out.push_back(GElem::square(f, g, u, v));
            }
        break;
      }
    }
    return out;
  }

  nlohmann::ordered_json elem_json(const GObj& X, const GElem& e) const {
    switch (X.kind) {
      case GObj::Kind::base:
        return X.base->arrow(e.id).name;
      case GObj::Kind::terminal:
        return "*";
      case GObj::Kind::pullback:
        return {{"pair", {elem_json(*X.f.dom, e.kids[0]), elem_json(*X.g.dom, e.kids[1])}}};
      case GObj::Kind::paths:
        return {{"square",
                 {{"from", elem_json(*X.inner, e.kids[0])},
                  {"to", elem_json(*X.inner, e.kids[1])},
                  {"s", elem_json(*X.inner, e.kids[2])},
                  {"t", elem_json(*X.inner, e.kids[3])}}}};
    }
    return nullptr;
  }
};

// A functor between base groupoids given on non-identity arrows: {"arrows": {"u": "v", ..}}
// plus {"objects": {"a": "b", ..}}; checked to preserve endpoints and composition.
inline GMor groupoid_map_from_json(const GroupoidModel& M, const GObjPtr& dom, const GObjPtr& cod,
                                   const nlohmann::json& j, const std::string& label) {
  if (dom->kind != GObj::Kind::base || cod->kind != GObj::Kind::base)
    throw InputError("groupoid map: endpoints must be input groupoids");
  const FinGroupoid &A = *dom->base, &B = *cod->base;
  std::vector<int> on_obj(A.object_count(), -1), on_arr(A.arrow_count(), -1);
  const nlohmann::json objects = j.value("objects", nlohmann::json::object());
  const nlohmann::json arrows = j.value("arrows", nlohmann::json::object());
  for (auto& [k, v] : objects.items())
    on_obj[A.find_object(k)] = B.find_object(v.get<std::string>());
  for (int o = 0; o < A.object_count(); ++o) {
    if (on_obj[o] < 0) throw InputError("groupoid map '" + label + "': object " + A.object_name(o) + " unassigned");
    on_arr[o] = on_obj[o];
  }
  for (auto& [k, v] : arrows.items())
    on_arr[A.find_arrow(k)] = B.find_arrow(v.get<std::string>());
  for (int a = 0; a < A.arrow_count(); ++a) {
    if (on_arr[a] < 0) throw InputError("groupoid map '" + label + "': arrow " + A.arrow(a).name + " unassigned");
    if (B.arrow(on_arr[a]).src != on_obj[A.arrow(a).src] || B.arrow(on_arr[a]).tgt != on_obj[A.arrow(a).tgt])
      throw InputError("groupoid map '" + label + "': arrow " + A.arrow(a).name + " sent to the wrong endpoints");
  }
  for (int g = 0; g < A.arrow_count(); ++g)
    for (int f = 0; f < A.arrow_count(); ++f)
      if (A.arrow(g).src == A.arrow(f).tgt && on_arr[A.compose(g, f)] != B.compose(on_arr[g], on_arr[f]))
        throw InputError("groupoid map '" + label + "': not functorial at " + A.arrow(g).name + " o " + A.arrow(f).name);
  return M.morphism(dom, cod, [on_arr](const GElem& e) { return GElem::arrow(on_arr.at(e.id)); }, label);
}

// Every functor between two input groupoids, by backtracking over non-identity arrows.
inline std::vector<GMor> all_functors(const GroupoidModel& M, const GObjPtr& dom, const GObjPtr& cod,
                                      const std::string& prefix, std::size_t limit = 10000) {
  if (dom->kind != GObj::Kind::base || cod->kind != GObj::Kind::base)
    throw InputError("all_functors: endpoints must be input groupoids");
  const FinGroupoid &A = *dom->base, &B = *cod->base;
  const int na = A.arrow_count(), ka = A.object_count();
  std::vector<int> on(na, -1);
  std::vector<GMor> out;
  auto functorial = [&] {
    for (int g = 0; g < na; ++g)
      for (int f = 0; f < na; ++f)
        if (A.arrow(g).src == A.arrow(f).tgt && on[A.compose(g, f)] != B.compose(on[g], on[f])) return false;
    return true;
  };
  auto arrows = [&](auto&& self, int a) -> void {
    if (out.size() >= limit) return;
    if (a == na) {
      if (functorial())
        out.push_back(M.morphism(dom, cod, [m = on](const GElem& e) { return GElem::arrow(m.at(e.id)); },
                                 prefix + std::to_string(out.size())));
      return;
    }
    for (int b = 0; b < B.arrow_count(); ++b)
      if (B.arrow(b).src == on[A.arrow(a).src] && B.arrow(b).tgt == on[A.arrow(a).tgt]) {
        on[a] = b;
        self(self, a + 1);
      }
  };
  auto objects = [&](auto&& self, int o) -> void {
    if (o == ka) return arrows(arrows, ka);
    for (int b = 0; b < B.object_count(); ++b) {
      on[o] = b;
      self(self, o + 1);
    }
  };
  objects(objects, 0);
  return out;
}

}  // namespace pathobj
