#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/io/sset_json.hpp"
#include "pathobj/model/common.hpp"
#include "pathobj/moore_path.hpp"
#include "pathobj/simplex/presentation.hpp"
#include "pathobj/walk.hpp"

namespace pathobj {

struct SNode;

// A simplex of a simplicial object built from presented sets by pullback and Moore paths:
// a presented simplex, the n-simplex of the terminal object, a pair, or a Moore path.
class SElem {
 public:
  enum class Kind : std::uint8_t { simplex, point, pair, path };

  static SElem simplex(Simplex s);
  static SElem point(int dim);
  static SElem pair(SElem a, SElem b);
  static SElem path(MoorePath<SElem> p);

  Kind kind() const;
  int dim() const;
  const Simplex& as_simplex() const;
  const SElem& first() const;
  const SElem& second() const;
  const MoorePath<SElem>& as_path() const;

  SElem act(const SimplicialOperator& alpha) const;

  friend bool operator==(const SElem& a, const SElem& b);

 private:
  explicit SElem(std::shared_ptr<const SNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const SNode> n_;
};

struct SNode {
  SElem::Kind kind;
  int dim;
  std::optional<Simplex> simplex;
  std::vector<SElem> kids;
  std::optional<MoorePath<SElem>> path;
};

inline SElem SElem::simplex(Simplex s) {
  int d = s.dim();
  return SElem(std::make_shared<const SNode>(SNode{Kind::simplex, d, std::move(s), {}, std::nullopt}));
}
inline SElem SElem::point(int dim) {
  return SElem(std::make_shared<const SNode>(SNode{Kind::point, dim, std::nullopt, {}, std::nullopt}));
}
inline SElem SElem::pair(SElem a, SElem b) {
  if (a.dim() != b.dim()) throw ContractViolation("pair", "components of different dimensions");
  int d = a.dim();
  return SElem(std::make_shared<const SNode>(SNode{Kind::pair, d, std::nullopt, {std::move(a), std::move(b)}, std::nullopt}));
}
inline SElem SElem::path(MoorePath<SElem> p) {
  int d = p.dim();
  return SElem(std::make_shared<const SNode>(SNode{Kind::path, d, std::nullopt, {}, std::move(p)}));
}
inline SElem::Kind SElem::kind() const { return n_->kind; }
inline int SElem::dim() const { return n_->dim; }
inline const Simplex& SElem::as_simplex() const {
  if (!n_->simplex) throw ContractViolation("element", "not a presented simplex");
  return *n_->simplex;
}
inline const SElem& SElem::first() const {
  if (n_->kind != Kind::pair) throw ContractViolation("element", "not a pair");
  return n_->kids[0];
}
inline const SElem& SElem::second() const {
  if (n_->kind != Kind::pair) throw ContractViolation("element", "not a pair");
  return n_->kids[1];
}
inline const MoorePath<SElem>& SElem::as_path() const {
  if (!n_->path) throw ContractViolation("element", "not a Moore path");
  return *n_->path;
}
inline SElem SElem::act(const SimplicialOperator& alpha) const {
  if (alpha.codomain_rank() != dim())
    throw InputError("act: operator " + alpha.to_string() + " applied to a " + std::to_string(dim()) + "-simplex");
  switch (kind()) {
    case Kind::simplex:
      return simplex(n_->simplex->act(alpha));
    case Kind::point:
      return point(alpha.domain_rank());
    case Kind::pair:
      return pair(n_->kids[0].act(alpha), n_->kids[1].act(alpha));
    case Kind::path:
      return path(n_->path->act(alpha));
  }
  return *this;
}
inline bool operator==(const SElem& a, const SElem& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case SElem::Kind::simplex:
      return *a.n_->simplex == *b.n_->simplex;
    case SElem::Kind::point:
      return true;
    case SElem::Kind::pair:
      return a.n_->kids == b.n_->kids;
    case SElem::Kind::path:
      return *a.n_->path == *b.n_->path;
  }
  return false;
}

using SPath = MoorePath<SElem>;

inline nlohmann::ordered_json selem_to_json(const SElem& e) {
  switch (e.kind()) {
    case SElem::Kind::simplex:
      return simplex_to_json(e.as_simplex());
    case SElem::Kind::point:
      return {{"point", e.dim()}};
    case SElem::Kind::pair:
      return {{"pair", {selem_to_json(e.first()), selem_to_json(e.second())}}};
    case SElem::Kind::path:
      return path_to_json(e.as_path(), [](const SElem& x) { return selem_to_json(x); });
  }
  return nullptr;
}

struct SObj;
using SObjPtr = std::shared_ptr<const SObj>;

struct SMor {
  SObjPtr dom, cod;
  std::function<SElem(const SElem&)> fn;
  std::string label;
  // Every preimage of a simplex, when that set is finite and computable.
  std::function<std::optional<std::vector<SElem>>(const SElem&)> fiber;
  // One random preimage, when a direct construction exists.
  std::function<std::optional<SElem>(const SElem&, Rng&)> sampler;
  // One random preimage under M of this morphism.
  std::function<std::optional<SElem>(const SElem&, Rng&)> path_sampler;
};

struct SObj {
  enum class Kind { presented, terminal, pullback, paths };
  Kind kind;
  std::string name;
  PresentationPtr pres;
  SMor f, g;
  SObjPtr inner;

  mutable std::mutex cache_mutex;
  mutable std::map<int, std::vector<SElem>> cache;
};

// The simplicial path object category: MX is the simplicial set of Moore paths.
class SSetModel {
 public:
  using Object = SObjPtr;
  using Element = SElem;
  using Morphism = SMor;
  using Pullback = PullbackOf<SObjPtr, SMor>;

  explicit SSetModel(ProbeConfig cfg = {}) : cfg_(cfg) {}
  SSetModel(const SSetModel&) = delete;
  SSetModel& operator=(const SSetModel&) = delete;

  static std::string backend_name() { return "sset"; }
  const ProbeConfig& config() const { return cfg_; }
  void set_config(const ProbeConfig& c) { cfg_ = c; }

  Object presented(PresentationPtr p, std::string name) const {
    auto o = std::make_shared<SObj>();
    o->kind = SObj::Kind::presented;
    o->name = std::move(name);
    o->pres = std::move(p);
    return o;
  }

  Object terminal() const {
    static const Object one = [] {
      auto o = std::make_shared<SObj>();
      o->kind = SObj::Kind::terminal;
      o->name = "1";
      return Object(o);
    }();
    return one;
  }

  Pullback pullback(const Morphism& f, const Morphism& g) const {
    if (f.cod->name != g.cod->name)
      throw ContractViolation("pullback", "codomains " + f.cod->name + " and " + g.cod->name + " differ");
    auto o = std::make_shared<SObj>();
    o->kind = SObj::Kind::pullback;
    o->name = "(" + f.dom->name + " x_" + f.cod->name + " " + g.dom->name + " via " + f.label + "," + g.label + ")";
    o->f = f;
    o->g = g;
    Object P = o;
    Morphism first{P, f.dom, [](const SElem& e) { return e.first(); }, "pr1", {}, {}};
    Morphism second{P, g.dom, [](const SElem& e) { return e.second(); }, "pr2", {}, {}};
    first.fiber = [this, f, g](const SElem& a) -> std::optional<std::vector<SElem>> {
      auto bs = fiber_list(g, f.fn(a));
      if (!bs) return std::nullopt;
      std::vector<SElem> out;
      for (auto& b : *bs) out.push_back(SElem::pair(a, b));
      return out;
    };
    first.sampler = [this, f, g](const SElem& a, Rng& rng) -> std::optional<SElem> {
      auto b = sample_preimage(g, f.fn(a), rng);
      if (!b) return std::nullopt;
      return SElem::pair(a, *b);
    };
    second.fiber = [this, f, g](const SElem& b) -> std::optional<std::vector<SElem>> {
      auto as = fiber_list(f, g.fn(b));
      if (!as) return std::nullopt;
      std::vector<SElem> out;
      for (auto& a : *as) out.push_back(SElem::pair(a, b));
      return out;
    };
    second.sampler = [this, f, g](const SElem& b, Rng& rng) -> std::optional<SElem> {
      auto a = sample_preimage(f, g.fn(b), rng);
      if (!a) return std::nullopt;
      return SElem::pair(*a, b);
    };
    return {P, first, second, f, g};
  }

  // (u, v) |-> (a u, b v) from P to Q; preimages are computed componentwise.
  Morphism pullback_map(const Pullback& P, const Pullback& Q, const Morphism& a, const Morphism& b,
                        const std::string& label) const {
    Morphism m{P.object, Q.object,
               [a, b](const SElem& e) { return SElem::pair(a.fn(e.first()), b.fn(e.second())); }, label, {}, {}};
    const auto f = P.f, g = P.g;
    m.fiber = [this, a, b, f, g](const SElem& c) -> std::optional<std::vector<SElem>> {
      auto us = fiber_list(a, c.first());
      if (!us) return std::nullopt;
      auto vs = fiber_list(b, c.second());
      if (!vs) return std::nullopt;
      std::vector<SElem> out;
      for (auto& u : *us)
        for (auto& v : *vs)
          if (f.fn(u) == g.fn(v)) out.push_back(SElem::pair(u, v));
      return out;
    };
    return m;
  }

  Pullback product(const Object& A, const Object& B) const { return pullback(terminal_map(A), terminal_map(B)); }

  Element pair(const Pullback&, const Element& a, const Element& b) const { return SElem::pair(a, b); }

  Object path_object(const Object& X) const {
    auto o = std::make_shared<SObj>();
    o->kind = SObj::Kind::paths;
    o->name = "M" + X->name;
    o->inner = X;
    return o;
  }

  Morphism map_path(const Morphism& f) const {
    auto fn = f.fn;
    Morphism m{path_object(f.dom), path_object(f.cod),
               [fn](const SElem& p) { return SElem::path(p.as_path().map(fn)); }, "M(" + f.label + ")", {}, {}};
    if (f.path_sampler) {
      m.sampler = f.path_sampler;
      return m;
    }
    m.sampler = [this, f](const SElem& q, Rng& rng) -> std::optional<SElem> {
      auto p = lift_path(f, q.as_path(), std::nullopt, rng);
      if (!p) return std::nullopt;
      return SElem::path(*p);
    };
    return m;
  }

  Element pair_paths(const Pullback&, const Element& pa, const Element& pb) const {
    const SPath &a = pa.as_path(), &b = pb.as_path();
    if (!(a.traversal() == b.traversal())) throw ContractViolation("pair_paths", "paths of different shapes");
    std::vector<SElem> z, ph;
    for (std::size_t i = 0; i < a.zetas().size(); ++i) z.push_back(SElem::pair(a.zetas()[i], b.zetas()[i]));
    for (std::size_t i = 0; i < a.phis().size(); ++i) ph.push_back(SElem::pair(a.phis()[i], b.phis()[i]));
    return SElem::path(SPath(a.traversal(), std::move(z), std::move(ph)));
  }

  Morphism source(const Object& X) const {
    Morphism m{path_object(X), X, [](const SElem& p) { return p.as_path().source(); }, "s_" + X->name, {}, {}};
    m.sampler = [this, X](const SElem& x, Rng& rng) -> std::optional<SElem> { return path_from(X, x, rng); };
    // M s o eta = id.
    m.path_sampler = [](const SElem& q, Rng&) -> std::optional<SElem> { return wrap(eta(q.as_path())); };
    return m;
  }
  Morphism target(const Object& X) const {
    Morphism m{path_object(X), X, [](const SElem& p) { return p.as_path().target(); }, "t_" + X->name, {}, {}};
    m.sampler = [this, X](const SElem& x, Rng& rng) -> std::optional<SElem> { return path_to(X, x, rng); };
    // M t o M tau o eta = M s o eta = id.
    m.path_sampler = [](const SElem& q, Rng&) -> std::optional<SElem> {
      return SElem::path(eta(q.as_path()).map([](const SPath& p) { return SElem::path(reverse(p)); }));
    };
    return m;
  }
  Morphism refl(const Object& X) const {
    Morphism m{X, path_object(X), [](const SElem& x) { return SElem::path(SPath::refl(x)); }, "r_" + X->name, {}, {}};
    m.fiber = [](const SElem& p) -> std::optional<std::vector<SElem>> {
      if (p.as_path().length() == 0) return std::vector<SElem>{p.as_path().source()};
      return std::vector<SElem>{};
    };
    return m;
  }

  Pullback composable(const Object& X) const { return pullback(source(X), target(X)); }

  // m(g, f) is the concatenation f then g.
  Morphism compose_paths(const Object& X) const {
    Morphism m{composable(X).object, path_object(X),
               [](const SElem& e) { return SElem::path(pathobj::compose(e.second().as_path(), e.first().as_path())); },
               "m_" + X->name, {}, {}};
    m.fiber = [](const SElem& p) -> std::optional<std::vector<SElem>> {
      std::vector<SElem> out;
      const SPath& q = p.as_path();
      for (int i = 0; i <= q.length(); ++i) out.push_back(SElem::pair(SElem::path(tail(q, i)), SElem::path(head(q, i))));
      return out;
    };
    return m;
  }

  Morphism reverse_paths(const Object& X) const {
    Morphism m{path_object(X), path_object(X), [](const SElem& p) { return SElem::path(reverse(p.as_path())); },
               "tau_" + X->name, {}, {}};
    m.fiber = [](const SElem& p) -> std::optional<std::vector<SElem>> {
      return std::vector<SElem>{SElem::path(reverse(p.as_path()))};
    };
    return m;
  }

  // alpha_{1,X}(theta, x) is the constant path of shape theta at x.
  Morphism strength(const Object& X) const {
    Morphism m{product(path_object(terminal()), X).object, path_object(X),
               [](const SElem& e) { return SElem::path(const_path(e.first().as_path().traversal(), e.second())); },
               "alpha_" + X->name, {}, {}};
    m.fiber = [this](const SElem& p) -> std::optional<std::vector<SElem>> {
      const SPath& q = p.as_path();
      if (!(const_path(q.traversal(), q.source()) == q)) return std::vector<SElem>{};
      return std::vector<SElem>{SElem::pair(shape(q.traversal()), q.source())};
    };
    return m;
  }

  Morphism contract(const Object& X) const {
    Object MX = path_object(X);
    Morphism m{MX, path_object(MX), [](const SElem& p) { return wrap(eta(p.as_path())); }, "eta_" + X->name, {}, {}};
    m.fiber = [](const SElem& P) -> std::optional<std::vector<SElem>> {
      const SElem& p = P.as_path().source();
      if (wrap(eta(p.as_path())) == P) return std::vector<SElem>{p};
      return std::vector<SElem>{};
    };
    return m;
  }

  Morphism identity(const Object& X) const {
    Morphism m{X, X, [](const SElem& e) { return e; }, "id_" + X->name, {}, {}};
    m.fiber = [](const SElem& e) -> std::optional<std::vector<SElem>> { return std::vector<SElem>{e}; };
    return m;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.cod->name != g.dom->name)
      throw ContractViolation("compose", g.label + " o " + f.label + ": " + f.cod->name + " is not " + g.dom->name);
    auto gf = g.fn, ff = f.fn;
    Morphism m{f.dom, g.cod, [gf, ff](const SElem& e) { return gf(ff(e)); }, g.label + " o " + f.label, {}, {}};
    m.sampler = [this, g, f](const SElem& c, Rng& rng) -> std::optional<SElem> {
      auto b = sample_preimage(g, c, rng);
      if (!b) return std::nullopt;
      return sample_preimage(f, *b, rng);
    };
    return m;
  }

  Morphism terminal_map(const Object& X) const {
    Morphism m{X, terminal(), [](const SElem& e) { return SElem::point(e.dim()); }, "!_" + X->name, {}, {}};
    m.sampler = [this, X](const SElem& pt, Rng& rng) { return sample_of_dim(X, pt.dim(), rng); };
    return m;
  }

  Morphism morphism(const Object& dom, const Object& cod, std::function<SElem(const SElem&)> fn,
                    std::string label) const {
    return {dom, cod, std::move(fn), std::move(label), {}, {}};
  }

  Element apply(const Morphism& f, const Element& x) const { return f.fn(x); }

  // A presented map as a morphism between presented objects.
  Morphism presented_map(const Object& dom, const Object& cod, const SSetMap& f, std::string label) const {
    if (dom->kind != SObj::Kind::presented || cod->kind != SObj::Kind::presented || dom->pres != f.domain() ||
        cod->pres != f.codomain())
      throw InputError("presented map '" + label + "': endpoints do not match");
    return morphism(dom, cod, [f](const SElem& e) { return SElem::simplex(f(e.as_simplex())); }, std::move(label));
  }

  // ---- sampling -------------------------------------------------------------

  bool finite_type(const Object& X) const {
    switch (X->kind) {
      case SObj::Kind::presented:
      case SObj::Kind::terminal:
        return true;
      case SObj::Kind::pullback:
        return finite_type(X->f.dom) && finite_type(X->g.dom);
      case SObj::Kind::paths:
        return false;
    }
    return false;
  }

  // Every d-simplex of a finite-type object.
  const std::vector<SElem>& simplices(const Object& X, int d) const {
    std::lock_guard<std::mutex> lock(X->cache_mutex);
    auto it = X->cache.find(d);
    if (it != X->cache.end()) return it->second;
    std::vector<SElem> out;
    switch (X->kind) {
      case SObj::Kind::presented:
        for (auto& c : X->pres->simplices(d)) out.push_back(SElem::simplex(Simplex(X->pres, c)));
        break;
      case SObj::Kind::terminal:
        out.push_back(SElem::point(d));
        break;
      case SObj::Kind::pullback: {
        const auto& as = simplices(X->f.dom, d);
        const auto& bs = simplices(X->g.dom, d);
        std::vector<SElem> gb;
        for (auto& b : bs) gb.push_back(X->g.fn(b));
        for (auto& a : as) {
          SElem fa = X->f.fn(a);
          for (std::size_t k = 0; k < bs.size(); ++k)
            if (gb[k] == fa) out.push_back(SElem::pair(a, bs[k]));
        }
        break;
      }
      case SObj::Kind::paths:
        throw InternalInconsistency("simplices: path objects are not finite");
    }
    return X->cache.emplace(d, std::move(out)).first->second;
  }

  std::optional<std::vector<SElem>> fiber_list(const Morphism& f, const SElem& c) const {
    if (f.fiber) return f.fiber(c);
    if (!finite_type(f.dom)) return std::nullopt;
    std::vector<SElem> out;
    for (auto& e : simplices(f.dom, c.dim()))
      if (f.fn(e) == c) out.push_back(e);
    return out;
  }

  std::optional<SElem> sample_preimage(const Morphism& f, const SElem& c, Rng& rng) const {
    if (f.sampler) return f.sampler(c, rng);
    auto list = fiber_list(f, c);
    if (!list || list->empty()) return std::nullopt;
    return (*list)[pick(rng, list->size())];
  }

  // A path in the domain over q, starting at `start` when given.
  std::optional<SPath> lift_path(const Morphism& f, const SPath& q, std::optional<SElem> start, Rng& rng) const {
    if (!start) start = sample_preimage(f, q.source(), rng);
    if (!start) return std::nullopt;
    const int n = q.dim();
    std::vector<SElem> zetas{*start}, phis;
    for (int j = 0; j < q.length(); ++j) {
      const SimplicialOperator lo = SimplicialOperator::face(n + 1, q.traversal().lower(j));
      const SimplicialOperator hi = SimplicialOperator::face(n + 1, q.traversal().upper(j));
      std::optional<SElem> step;
      if (auto list = fiber_list(f, q.phis()[j])) {
        std::vector<const SElem*> ok;
        for (auto& u : *list)
          if (u.act(lo) == zetas.back()) ok.push_back(&u);
        if (!ok.empty()) step = *ok[pick(rng, ok.size())];
      } else {
        for (int attempt = 0; attempt < 8 && !step; ++attempt) {
          auto u = sample_preimage(f, q.phis()[j], rng);
          if (u && u->act(lo) == zetas.back()) step = u;
        }
      }
      if (!step) return std::nullopt;
      phis.push_back(*step);
      zetas.push_back(step->act(hi));
    }
    return SPath(q.traversal(), std::move(zetas), std::move(phis));
  }

  // A random path starting at x; always succeeds.
  SElem path_from(const Object& X, const SElem& x, Rng& rng) const {
    const int len = static_cast<int>(pick(rng, cfg_.max_length + 1));
    switch (X->kind) {
      case SObj::Kind::presented:
      case SObj::Kind::terminal:
        return SElem::path(random_walk(x, len, simplices(X, x.dim() + 1), rng));
      case SObj::Kind::pullback: {
        if (finite_type(X)) return SElem::path(random_walk(x, len, simplices(X, x.dim() + 1), rng));
        const bool left_first = pick(rng, 2) == 0;
        for (int side = 0; side < 2; ++side) {
          const bool left = left_first != (side == 1);
          const SMor& along = left ? X->f : X->g;
          const SMor& other = left ? X->g : X->f;
          const SElem& here = left ? x.first() : x.second();
          const SElem& there = left ? x.second() : x.first();
          SElem pa = path_from(along.dom, here, rng);
          SPath q = pa.as_path().map(along.fn);
          auto pb = lift_path(other, q, there, rng);
          if (!pb) continue;
          SElem pbe = SElem::path(*pb);
          return left ? pair_paths({}, pa, pbe) : pair_paths({}, pbe, pa);
        }
        return SElem::path(const_path(random_traversal(rng, x.dim(), len), x));
      }
      case SObj::Kind::paths: {
        switch (pick(rng, 4)) {
          case 0:
            return wrap(eta(x.as_path()));
          case 1:
            return SElem::path(pathobj::compose(eta(x.as_path()), reverse(eta(x.as_path()))).map([](const SPath& p) {
              return SElem::path(p);
            }));
          case 2:
            return SElem::path(const_path(random_traversal(rng, x.dim(), len), x));
          default:
            return SElem::path(SPath::refl(x));
        }
      }
    }
    return SElem::path(SPath::refl(x));
  }

  SElem path_to(const Object& X, const SElem& x, Rng& rng) const {
    return SElem::path(reverse(path_from(X, x, rng).as_path()));
  }

  std::optional<SElem> sample_of_dim(const Object& X, int d, Rng& rng) const {
    switch (X->kind) {
      case SObj::Kind::presented: {
        const auto& all = simplices(X, d);
        if (all.empty()) return std::nullopt;
        // Half the time draw a nondegenerate simplex when one exists.
        if (pick(rng, 2) == 0) {
          std::vector<const SElem*> nd;
          for (auto& e : all)
            if (!e.as_simplex().is_degenerate()) nd.push_back(&e);
          if (!nd.empty()) return *nd[pick(rng, nd.size())];
        }
        return all[pick(rng, all.size())];
      }
      case SObj::Kind::terminal:
        return SElem::point(d);
      case SObj::Kind::pullback: {
        if (finite_type(X)) {
          const auto& all = simplices(X, d);
          if (all.empty()) return std::nullopt;
          return all[pick(rng, all.size())];
        }
        for (int attempt = 0; attempt < 16; ++attempt) {
          const bool left = pick(rng, 2) == 0;
          const SMor& along = left ? X->f : X->g;
          const SMor& other = left ? X->g : X->f;
          auto a = sample_of_dim(along.dom, d, rng);
          if (!a) continue;
          auto b = sample_preimage(other, along.fn(*a), rng);
          if (!b) continue;
          return left ? SElem::pair(*a, *b) : SElem::pair(*b, *a);
        }
        return std::nullopt;
      }
      case SObj::Kind::paths: {
        auto x = sample_of_dim(X->inner, d, rng);
        if (!x) return std::nullopt;
        return path_from(X->inner, *x, rng);
      }
    }
    return std::nullopt;
  }

  Probes<SElem> probes(const Object& X, const ProbeConfig& cfg, Rng& rng) const {
    Probes<SElem> p;
    int misses = 0;
    while (static_cast<int>(p.elements.size()) < cfg.samples && misses < 20 * cfg.samples + 100) {
      int d = static_cast<int>(pick(rng, cfg.max_dim + 1));
      auto e = sample_of_dim(X, d, rng);
      if (e)
        p.elements.push_back(*e);
      else
        ++misses;
    }
    return p;
  }

  // Whether e is a simplex of X.
  bool member(const Object& X, const SElem& e) const {
    switch (X->kind) {
      case SObj::Kind::presented:
        return e.kind() == SElem::Kind::simplex && e.as_simplex().space() == X->pres;
      case SObj::Kind::terminal:
        return e.kind() == SElem::Kind::point;
      case SObj::Kind::pullback:
        return e.kind() == SElem::Kind::pair && member(X->f.dom, e.first()) && member(X->g.dom, e.second()) &&
               X->f.fn(e.first()) == X->g.fn(e.second());
      case SObj::Kind::paths: {
        if (e.kind() != SElem::Kind::path || !e.as_path().valid()) return false;
        for (auto& z : e.as_path().zetas())
          if (!member(X->inner, z)) return false;
        for (auto& z : e.as_path().phis())
          if (!member(X->inner, z)) return false;
        return true;
      }
    }
    return false;
  }

  // Smaller simplices of X near e: faces first, then shorter paths.
  std::vector<SElem> shrink_candidates(const Object& X, const SElem& e) const {
    std::vector<SElem> out;
    if (e.dim() > 0)
      for (int i = 0; i <= e.dim(); ++i) out.push_back(e.act(SimplicialOperator::face(e.dim(), i)));
    if (e.kind() == SElem::Kind::path && e.as_path().length() > 0) {
      const SPath& p = e.as_path();
      out.push_back(SElem::path(head(p, p.length() - 1)));
      out.push_back(SElem::path(tail(p, 1)));
    }
    if (e.kind() == SElem::Kind::pair && X->kind == SObj::Kind::pullback) {
      for (auto& a : shrink_candidates(X->f.dom, e.first()))
        if (a.dim() == e.dim()) out.push_back(SElem::pair(a, e.second()));
      for (auto& b : shrink_candidates(X->g.dom, e.second()))
        if (b.dim() == e.dim()) out.push_back(SElem::pair(e.first(), b));
    }
    std::vector<SElem> valid;
    for (auto& c : out)
      if (member(X, c)) valid.push_back(c);
    return valid;
  }

  nlohmann::ordered_json to_json(const Object&, const SElem& e) const { return selem_to_json(e); }

  // The unique path in the terminal object with the given traversal.
  static SElem shape(const Traversal& t) {
    return SElem::path(SPath(t, std::vector<SElem>(t.length() + 1, SElem::point(t.dim())),
                             std::vector<SElem>(t.length(), SElem::point(t.dim() + 1))));
  }

  static SElem wrap(const MoorePath<SPath>& pp) {
    return SElem::path(pp.map([](const SPath& p) { return SElem::path(p); }));
  }

  static Traversal random_traversal(Rng& rng, int dim, int len) {
    std::vector<Step> s;
    for (int j = 0; j < len; ++j) s.push_back(random_step(rng, dim));
    return {dim, s};
  }

 private:
  ProbeConfig cfg_;
};

}  // namespace pathobj
