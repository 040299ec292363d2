#pragma once

#include "dk/chain_complex.hpp"
#include "dk/eilenberg_zilber.hpp"
#include "dk/report.hpp"

#include <concepts>
#include <string>
#include <utility>
#include <vector>

namespace dk {

/// A functor F between symmetric monoidal categories together with a lax
/// structure (F X (x) F Y -> F(X (x) Y)) and a colax structure going back.
/// Maps in the target category are degreewise matrices.
template <class F>
concept BialgebraFunctor = requires(F& f, const typename F::Object& x, const typename F::Map& m,
                                    VerificationReport& r) {
  { f.tensor(x, x) } -> std::same_as<typename F::Object>;
  { f.lax(x, x) } -> std::same_as<typename F::Map>;
  { f.colax(x, x) } -> std::same_as<typename F::Map>;
  { f.image_of_middle_swap(x, x, x, x) } -> std::same_as<typename F::Map>;
  { f.target_tensor(m, m) } -> std::same_as<typename F::Map>;
  { f.target_middle_swap(x, x, x, x) } -> std::same_as<typename F::Map>;
  { f.compose(m, m) } -> std::same_as<typename F::Map>;
  f.compare(r, m, m, 0);
  { f.describe(x) } -> std::convertible_to<std::string>;
};

template <class F>
struct BialgebraComposites {
  typename F::Map lhs;
  typename F::Map rhs;
};

/// lhs: F(X(x)Y) (x) F(Z(x)W) -> F((X(x)Y)(x)(Z(x)W)) -> F((X(x)Z)(x)(Y(x)W)) -> F(X(x)Z) (x) F(Y(x)W)
/// rhs: (l (x) l) after the target middle swap after (c (x) c).
template <BialgebraFunctor F>
BialgebraComposites<F> bialgebra_composites(F& f, const typename F::Object& x, const typename F::Object& y,
                                            const typename F::Object& z, const typename F::Object& w) {
  auto xy = f.tensor(x, y);
  auto zw = f.tensor(z, w);
  auto xz = f.tensor(x, z);
  auto yw = f.tensor(y, w);
  auto lhs = f.compose(f.colax(xz, yw), f.compose(f.image_of_middle_swap(x, y, z, w), f.lax(xy, zw)));
  auto rhs = f.compose(f.target_tensor(f.lax(x, z), f.lax(y, w)),
                       f.compose(f.target_middle_swap(x, y, z, w), f.target_tensor(f.colax(x, y), f.colax(z, w))));
  return {std::move(lhs), std::move(rhs)};
}

template <BialgebraFunctor F>
VerificationReport check_bialgebra(F& f, const typename F::Object& x, const typename F::Object& y,
                                   const typename F::Object& z, const typename F::Object& w, int max_level,
                                   std::string name = "bialgebra") {
  auto report = make_report(std::move(name), {f.describe(x), f.describe(y), f.describe(z), f.describe(w)}, max_level);
  auto c = bialgebra_composites(f, x, y, z, w);
  f.compare(report, c.lhs, c.rhs, max_level);
  return report;
}

/// C or N with the shuffle map as lax and Alexander-Whitney as colax structure.
struct ChainsFunctor {
  using Object = ModulePtr;
  using Map = ChainMap;

  ChainWorkspace& ws;
  bool normalized = false;

  Object tensor(const Object& a, const Object& b) { return ws.tensor(a, b); }
  Map lax(const Object& a, const Object& b) { return ws.nabla(a, b, normalized); }
  Map colax(const Object& a, const Object& b) { return ws.aw(a, b, normalized); }
  Map image_of_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
    return ws.apply(ws.middle_swap(a, b, c, d), normalized);
  }
  Map target_tensor(const Map& f, const Map& g) { return tensor_maps(f, g); }
  Map target_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
    return dk::middle_swap(ws.chains(a, normalized), ws.chains(b, normalized), ws.chains(c, normalized),
                           ws.chains(d, normalized), ws.conventions());
  }
  Map compose(const Map& f, const Map& g) { return dk::compose(f, g); }
  void compare(VerificationReport& r, const Map& f, const Map& g, int top) { compare_maps(r, f, g, top); }
  std::string describe(const Object& a) { return a->name; }
};

/// The identity functor on chain complexes with identity (co)lax structures.
/// Every bialgebra instance holds for it by construction; it exercises the
/// harness itself.
struct IdentityChainFunctor {
  using Object = ComplexPtr;
  using Map = ChainMap;

  MonoidalConventions conv{};

  Object tensor(const Object& a, const Object& b) { return tensor_chain(a, b); }
  Map lax(const Object& a, const Object& b) { return identity_chain_map(tensor_chain(a, b)); }
  Map colax(const Object& a, const Object& b) { return identity_chain_map(tensor_chain(a, b)); }
  Map image_of_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
    return dk::middle_swap(a, b, c, d, conv);
  }
  Map target_tensor(const Map& f, const Map& g) { return tensor_maps(f, g); }
  Map target_middle_swap(const Object& a, const Object& b, const Object& c, const Object& d) {
    return dk::middle_swap(a, b, c, d, conv);
  }
  Map compose(const Map& f, const Map& g) { return dk::compose(f, g); }
  void compare(VerificationReport& r, const Map& f, const Map& g, int top) { compare_maps(r, f, g, top); }
  std::string describe(const Object& a) { return a->name; }
};

/// Four simplicial modules of equal truncation.
struct BialgebraInstance {
  ModulePtr x, y, z, w;
  bool normalized = false;
  int max_level = 0;
};

inline ChainMap bialgebra_lhs(ChainWorkspace& ws, const BialgebraInstance& inst) {
  ChainsFunctor f{ws, inst.normalized};
  return bialgebra_composites(f, inst.x, inst.y, inst.z, inst.w).lhs;
}

inline ChainMap bialgebra_rhs(ChainWorkspace& ws, const BialgebraInstance& inst) {
  ChainsFunctor f{ws, inst.normalized};
  return bialgebra_composites(f, inst.x, inst.y, inst.z, inst.w).rhs;
}

inline VerificationReport check_bialgebra(ChainWorkspace& ws, const BialgebraInstance& inst) {
  ChainsFunctor f{ws, inst.normalized};
  auto report = check_bialgebra(f, inst.x, inst.y, inst.z, inst.w, inst.max_level);
  report.notes.push_back(inst.normalized ? "normalized" : "unnormalized");
  return report;
}

static_assert(BialgebraFunctor<ChainsFunctor>);
static_assert(BialgebraFunctor<IdentityChainFunctor>);

}  // namespace dk
