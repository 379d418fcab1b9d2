#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/simplex/operator.hpp"

namespace pathobj {

// A simplex in Eilenberg-Zilber normal form: generator `gen` pulled back along the epi `deg`.
struct Cell {
  int gen = 0;
  SimplicialOperator deg;

  int dim() const { return deg.domain_rank(); }
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Nondegenerate generators graded by dimension, with a face table whose entries are
// normal-form simplices one dimension down. Faces must satisfy the simplicial identities.
class SSetPresentation {
 public:
  struct Generator {
    std::string name;
    int dim;
    std::vector<Cell> faces;  // faces[i] = g . delta_i
  };

  int add_generator(const std::string& name, int dim, std::vector<Cell> faces) {
    if (index_.count(name)) throw InputError("presentation: duplicate generator '" + name + "'");
    if (dim < 0) throw InputError("presentation: negative dimension for '" + name + "'");
    if (dim == 0 && !faces.empty()) throw InputError("presentation: vertex '" + name + "' has faces");
    if (dim > 0 && static_cast<int>(faces.size()) != dim + 1)
      throw InputError("presentation: '" + name + "' needs " + std::to_string(dim + 1) + " faces");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Cell& f = faces[i];
      if (f.gen < 0 || f.gen >= static_cast<int>(gens_.size()))
        throw InputError("presentation: face of '" + name + "' references an unknown generator");
      if (f.dim() != dim - 1 || f.deg.codomain_rank() != gens_[f.gen].dim || !f.deg.is_surjective())
        throw InputError("presentation: face " + std::to_string(i) + " of '" + name + "' is not a normal-form (" +
                         std::to_string(dim - 1) + ")-simplex");
    }
    // delta_j then delta_i agrees with delta_i then delta_{j-1}, for i < j.
    for (int j = 1; dim >= 2 && j <= dim; ++j)
      for (int i = 0; i < j; ++i) {
        Cell lhs = act(faces[j], SimplicialOperator::face(dim - 1, i));
        Cell rhs = act(faces[i], SimplicialOperator::face(dim - 1, j - 1));
        if (!(lhs == rhs))
          throw InputError("presentation: faces of '" + name + "' violate the simplicial identity at (i=" +
                           std::to_string(i) + ", j=" + std::to_string(j) + ")");
      }
    int id = static_cast<int>(gens_.size());
    gens_.push_back({name, dim, std::move(faces)});
    index_[name] = id;
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(id);
    return id;
  }

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int id) const { return gens_.at(id); }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<int>& generators_of_dim(int d) const {
    static const std::vector<int> none;
    return d < static_cast<int>(by_dim_.size()) ? by_dim_[d] : none;
  }
  int find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InputError("presentation: unknown generator '" + name + "'");
    return it->second;
  }
  Cell generator_cell(int id) const { return {id, SimplicialOperator::identity(gens_.at(id).dim)}; }

  // The right action s . alpha.
  Cell act(const Cell& s, const SimplicialOperator& alpha) const {
    if (alpha.codomain_rank() != s.dim())
      throw InputError("act: operator " + alpha.to_string() + " applied to a " + std::to_string(s.dim()) +
                       "-simplex");
    auto [e, mu] = ez_factorize(compose(s.deg, alpha));
    int g = s.gen;
    while (!mu.is_identity()) {
      // mu misses some i; write mu = delta_i o mu' and pass to the face.
      const auto& im = mu.images();
      int i = 0;
      for (int v : im) {
        if (v != i) break;
        ++i;
      }
      std::vector<int> lowered(im.size());
      for (std::size_t x = 0; x < im.size(); ++x) lowered[x] = im[x] < i ? im[x] : im[x] - 1;
      SimplicialOperator mu_rest(mu.codomain_rank() - 1, std::move(lowered));
      const Cell& f = gens_[g].faces[i];
      auto fm = ez_factorize(compose(f.deg, mu_rest));
      g = f.gen;
      e = compose(fm.epi, e);
      mu = fm.mono;
    }
    return {g, e};
  }

  // Every simplex of dimension d, generators in insertion order, epis lexicographic.
  std::vector<Cell> simplices(int d) const {
    std::vector<Cell> out;
    for (int k = 0; k <= d && k < static_cast<int>(by_dim_.size()); ++k)
      for (int g : by_dim_[k])
        for (auto& e : all_epis(d, k)) out.push_back({g, e});
    return out;
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> by_dim_;
};

using PresentationPtr = std::shared_ptr<const SSetPresentation>;

class Simplex {
 public:
  Simplex(PresentationPtr space, Cell cell) : space_(std::move(space)), cell_(std::move(cell)) {}

  static Simplex generator(const PresentationPtr& space, const std::string& name) {
    return {space, space->generator_cell(space->find(name))};
  }

  int dim() const { return cell_.dim(); }
  const Cell& cell() const { return cell_; }
  const PresentationPtr& space() const { return space_; }
  const std::string& generator_name() const { return space_->generator(cell_.gen).name; }
  bool is_degenerate() const { return !cell_.deg.is_identity(); }

  Simplex act(const SimplicialOperator& alpha) const { return {space_, space_->act(cell_, alpha)}; }
  Simplex face(int i) const { return act(SimplicialOperator::face(dim(), i)); }
  Simplex degeneracy(int i) const { return act(SimplicialOperator::degeneracy(dim(), i)); }

  std::string to_string() const {
    std::string s = generator_name();
    if (is_degenerate()) s += cell_.deg.to_string();
    return s;
  }

  friend bool operator==(const Simplex& a, const Simplex& b) {
    return a.space_ == b.space_ && a.cell_ == b.cell_;
  }

 private:
  PresentationPtr space_;
  Cell cell_;
};

// A simplicial map between presented sets: one normal-form target per generator.
class SSetMap {
 public:
  SSetMap(PresentationPtr dom, PresentationPtr cod, std::vector<Cell> assignment)
      : dom_(std::move(dom)), cod_(std::move(cod)), assign_(std::move(assignment)) {
    if (static_cast<int>(assign_.size()) != dom_->size())
      throw InputError("map: assignment size differs from generator count");
    for (int g = 0; g < dom_->size(); ++g) {
      const auto& gen = dom_->generator(g);
      if (assign_[g].dim() != gen.dim)
        throw InputError("map: generator '" + gen.name + "' sent to a simplex of the wrong dimension");
      for (int i = 0; i < static_cast<int>(gen.faces.size()); ++i) {
        Cell lhs = cod_->act(assign_[g], SimplicialOperator::face(gen.dim, i));
        Cell rhs = apply(gen.faces[i]);
        if (!(lhs == rhs))
          throw InputError("map: not simplicial at face " + std::to_string(i) + " of '" + gen.name + "'");
      }
    }
  }

  const PresentationPtr& domain() const { return dom_; }
  const PresentationPtr& codomain() const { return cod_; }
  const std::vector<Cell>& assignment() const { return assign_; }

  Cell apply(const Cell& c) const { return cod_->act(assign_.at(c.gen), c.deg); }
  Simplex operator()(const Simplex& s) const {
    if (s.space() != dom_) throw ContractViolation("map", "simplex from a different presentation");
    return {cod_, apply(s.cell())};
  }

 private:
  PresentationPtr dom_, cod_;
  std::vector<Cell> assign_;
};

// Every simplicial map dom -> cod, found by backtracking over generators in dimension order.
inline std::vector<SSetMap> all_maps(const PresentationPtr& dom, const PresentationPtr& cod,
                                     std::size_t limit = 100000) {
  std::vector<int> order;
  for (int d = 0; d <= dom->max_dim(); ++d)
    for (int g : dom->generators_of_dim(d)) order.push_back(g);
  std::vector<Cell> assign(dom->size());
  std::vector<std::vector<Cell>> pools(dom->max_dim() + 1);
  for (int d = 0; d <= dom->max_dim(); ++d) pools[d] = cod->simplices(d);
  std::vector<SSetMap> out;
  auto image = [&](const Cell& c) { return cod->act(assign[c.gen], c.deg); };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (out.size() >= limit) return;
    if (k == order.size()) {
      out.emplace_back(dom, cod, assign);
      return;
    }
    const auto& gen = dom->generator(order[k]);
    for (const Cell& cand : pools[gen.dim]) {
      bool ok = true;
      for (int i = 0; ok && i < static_cast<int>(gen.faces.size()); ++i)
        ok = cod->act(cand, SimplicialOperator::face(gen.dim, i)) == image(gen.faces[i]);
      if (!ok) continue;
      assign[order[k]] = cand;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---- JSON ----------------------------------------------------------------

inline Cell cell_from_json(const SSetPresentation& p, const nlohmann::json& j) {
  if (j.is_string()) return p.generator_cell(p.find(j.get<std::string>()));
  if (!j.is_object() || !j.contains("gen")) throw InputError("simplex: expected a name or {\"gen\": ...}");
  int g = p.find(j.at("gen").get<std::string>());
  int gd = p.generator(g).dim;
  const char* key = j.contains("deg") ? "deg" : (j.contains("degeneracy") ? "degeneracy" : nullptr);
  if (!key) return p.generator_cell(g);
  SimplicialOperator deg(gd, j.at(key).get<std::vector<int>>());
  if (!deg.is_surjective()) throw InputError("simplex: degeneracy of '" + p.generator(g).name + "' is not onto");
  return {g, deg};
}

inline nlohmann::ordered_json cell_to_json(const SSetPresentation& p, const Cell& c) {
  nlohmann::ordered_json j;
  j["gen"] = p.generator(c.gen).name;
  j["deg"] = c.deg.images();
  return j;
}

// {"generators": {"0": [...], "1": [...]}, "faces": {"f": [face_0, face_1], ...}}
inline std::shared_ptr<SSetPresentation> presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators")) throw InputError("presentation: missing \"generators\"");
  std::map<int, std::vector<std::string>> by_dim;
  for (auto& [k, names] : j.at("generators").items()) {
    int d;
    try {
      d = std::stoi(k);
    } catch (...) {
      throw InputError("presentation: dimension key '" + k + "' is not an integer");
    }
    by_dim[d] = names.get<std::vector<std::string>>();
  }
  const nlohmann::json faces = j.value("faces", nlohmann::json::object());
  auto p = std::make_shared<SSetPresentation>();
  for (auto& [d, names] : by_dim)
    for (auto& name : names) {
      std::vector<Cell> fs;
      if (d > 0) {
        if (!faces.contains(name)) throw InputError("presentation: no faces for '" + name + "'");
        for (auto& f : faces.at(name)) fs.push_back(cell_from_json(*p, f));
      }
      p->add_generator(name, d, std::move(fs));
    }
  return p;
}

inline nlohmann::ordered_json presentation_to_json(const SSetPresentation& p) {
  nlohmann::ordered_json gens = nlohmann::ordered_json::object(), faces = nlohmann::ordered_json::object();
  for (int d = 0; d <= p.max_dim(); ++d) {
    auto arr = nlohmann::ordered_json::array();
    for (int g : p.generators_of_dim(d)) {
      arr.push_back(p.generator(g).name);
      if (d == 0) continue;
      auto fl = nlohmann::ordered_json::array();
      for (auto& f : p.generator(g).faces) {
        if (f.deg.is_identity())
          fl.push_back(p.generator(f.gen).name);
        else
          fl.push_back({{"gen", p.generator(f.gen).name}, {"degeneracy", f.deg.images()}});
      }
      faces[p.generator(g).name] = fl;
    }
    gens[std::to_string(d)] = arr;
  }
  return {{"generators", gens}, {"faces", faces}};
}

// {"generator name": simplex literal, ...}
inline SSetMap map_from_json(const PresentationPtr& dom, const PresentationPtr& cod, const nlohmann::json& j) {
  std::vector<Cell> assign(dom->size());
  std::vector<bool> seen(dom->size(), false);
  for (auto& [k, v] : j.items()) {
    int g = dom->find(k);
    assign[g] = cell_from_json(*cod, v);
    seen[g] = true;
  }
  for (int g = 0; g < dom->size(); ++g)
    if (!seen[g]) throw InputError("map: generator '" + dom->generator(g).name + "' unassigned");
  return {dom, cod, std::move(assign)};
}

}  // namespace pathobj
