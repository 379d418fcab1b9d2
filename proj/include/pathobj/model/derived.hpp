#pragma once

#include <utility>

namespace pathobj {

// Structure obtained from the primitive interface of any path object model.
template <class Model>
struct Derived {
  using Object = typename Model::Object;
  using Element = typename Model::Element;
  using Morphism = typename Model::Morphism;
  using Pullback = typename Model::Pullback;

  const Model& M;

  // The full strength alpha_{X,Y} : MX x Y -> M(X x Y), obtained by pairing p with the
  // constant path at y of the same shape.
  struct Strength {
    Pullback in;   // MX x Y
    Pullback out;  // X x Y
    Pullback lengths;  // M1 x Y
    Morphism shape;    // M!_X
    Morphism alpha;    // alpha_{1,Y}
  };
  Strength strength(const Object& X, const Object& Y) const {
    return {M.product(M.path_object(X), Y), M.product(X, Y), M.product(M.path_object(M.terminal()), Y),
            M.map_path(M.terminal_map(X)), M.strength(Y)};
  }
  Element strength_apply(const Strength& S, const Element& p, const Element& y) const {
    Element theta = M.apply(S.shape, p);
    Element c = M.apply(S.alpha, M.pair(S.lengths, theta, y));
    return M.pair_paths(S.out, p, c);
  }

  // (M!, t) : MX -> M1 x X.
  struct ShapeTarget {
    Pullback lengths;
    Morphism shape, t;
  };
  ShapeTarget shape_target(const Object& X) const {
    return {M.product(M.path_object(M.terminal()), X), M.map_path(M.terminal_map(X)), M.target(X)};
  }
  Element shape_target_apply(const ShapeTarget& S, const Element& p) const {
    return M.pair(S.lengths, M.apply(S.shape, p), M.apply(S.t, p));
  }
};

template <class Model>
Derived<Model> derived(const Model& M) {
  return {M};
}

}  // namespace pathobj
