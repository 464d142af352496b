#pragma once

// Fixed suite of small cocones over the four cross-validation shapes, in both
// base categories: colimits, plus the same diagrams with the apex collapsed or
// padded so that some members are not colimits at all.

#include <string>
#include <vector>

#include "spanvk/catkit.hpp"

namespace suite {

using namespace spanvk;

struct Case {
  std::string name;
  Cocone cocone;
};

inline Morphism set_fn(const FinSet& d, const FinSet& c, std::vector<std::uint32_t> img) {
  return BaseCat::finsets().morphism(FinFn(d, c, std::move(img)));
}

// the functor 0 -> 1 sending every a_i to b_{img[i]}
inline Object arrow_obj(std::size_t n, std::size_t m, std::vector<std::uint32_t> img,
                        const std::string& p) {
  std::vector<std::string> a, b;
  for (std::size_t i = 0; i < n; ++i) a.push_back(p + "o" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) b.push_back(p + "s" + std::to_string(i));
  FinSet A(a), B(b);
  return BaseCat::arrows().object({A, B}, {FinFn(A, B, std::move(img))});
}

inline Morphism arrow_mor(const Object& x, const Object& y, std::vector<std::uint32_t> m0,
                          std::vector<std::uint32_t> m1) {
  return BaseCat::arrows().morphism(x, y, {FinFn(x.at(0), y.at(0), std::move(m0)),
                                           FinFn(x.at(1), y.at(1), std::move(m1))});
}

inline Diagram span_of(const BaseCat& c, const Morphism& f, const Morphism& g) {
  const auto j = FinCat::span();
  return Diagram::from_generators(j, c, {f.src(), f.tgt(), g.tgt()},
                                  {{j.arrow_index("f"), f}, {j.arrow_index("g"), g}});
}

inline Diagram pair_of(const BaseCat& c, const Morphism& u, const Morphism& v) {
  const auto j = FinCat::parallel_pair();
  return Diagram::from_generators(j, c, {u.src(), u.tgt()},
                                  {{j.arrow_index("u"), u}, {j.arrow_index("v"), v}});
}

inline Diagram discrete_of(const BaseCat& c, const Object& a, const Object& b) {
  return Diagram(FinCat::discrete(2), c, {a, b}, {});
}

// colimit, and its postcomposite with the map to the terminal object when
// that is not an isomorphism
inline void add_with_collapse(std::vector<Case>& out, const std::string& name, const Diagram& d) {
  const auto& c = d.base();
  auto k = colimit(d);
  out.push_back({name, k});
  auto t = c.terminal();
  auto bang = c.morphisms(k.apex(), t).front();
  if (!c.is_iso(bang)) out.push_back({name + "/collapsed", postcompose(k, bang)});
}

// colimit apex padded by one fresh element in every component
inline void add_padded(std::vector<Case>& out, const std::string& name, const Diagram& d) {
  const auto& c = d.base();
  auto k = colimit(d);
  auto cp = c.coproduct({k.apex(), c.terminal()});
  out.push_back({name + "/padded", postcompose(k, cp.injections[0])});
}

inline std::vector<Case> cross_validation_suite() {
  const BaseCat S = BaseCat::finsets();
  const BaseCat A = BaseCat::arrows();
  std::vector<Case> out;
  FinSet e, one{"*"}, two{"0", "1"}, a{"a"}, ab{"a", "b"}, ac{"a", "c"}, xy{"x", "y"};

  // FinSet
  add_with_collapse(out, "set/empty", Diagram(FinCat::empty(), S, {}, {}));
  add_with_collapse(out, "set/coproduct(1,1)", discrete_of(S, S.object(a), S.object(FinSet{"b"})));
  add_with_collapse(out, "set/coproduct(2,0)", discrete_of(S, S.object(ab), S.object(e)));
  out.push_back({"set/coproduct(0,0)", colimit(discrete_of(S, S.object(e), S.object(e)))});
  add_padded(out, "set/coproduct(1,1)", discrete_of(S, S.object(a), S.object(FinSet{"b"})));
  add_with_collapse(out, "set/pushout-monos", span_of(S, set_fn(a, ab, {0}), set_fn(a, ac, {0})));
  add_with_collapse(out, "set/pushout-epis", span_of(S, set_fn(two, one, {0, 0}), set_fn(two, one, {0, 0})));
  add_with_collapse(out, "set/pushout-epi-iso", span_of(S, set_fn(two, one, {0, 0}), set_fn(two, xy, {1, 0})));
  add_with_collapse(out, "set/pushout-epi-const", span_of(S, set_fn(two, one, {0, 0}), set_fn(two, xy, {0, 0})));
  add_padded(out, "set/pushout-monos", span_of(S, set_fn(a, ab, {0}), set_fn(a, ac, {0})));
  add_with_collapse(out, "set/coeq-equal", pair_of(S, set_fn(a, ab, {0}), set_fn(a, ab, {0})));
  add_with_collapse(out, "set/coeq-points", pair_of(S, set_fn(a, ab, {0}), set_fn(a, ab, {1})));
  add_with_collapse(out, "set/coeq-swap", pair_of(S, set_fn(two, two, {0, 1}), set_fn(two, two, {1, 0})));
  add_with_collapse(out, "set/kernel-pair",
                    pair_of(S, set_fn(FinSet{"00", "01", "10", "11"}, two, {0, 0, 1, 1}),
                            set_fn(FinSet{"00", "01", "10", "11"}, two, {0, 1, 0, 1})));

  // arrow category
  auto A0 = arrow_obj(0, 1, {}, "A");
  auto B1 = arrow_obj(1, 1, {0}, "B");
  auto C1 = arrow_obj(1, 1, {0}, "C");
  add_with_collapse(out, "arrow/empty", Diagram(FinCat::empty(), A, {}, {}));
  add_with_collapse(out, "arrow/coproduct", discrete_of(A, B1, A0));
  add_with_collapse(out, "arrow/pushout-fig3",
                    span_of(A, arrow_mor(A0, B1, {}, {0}), arrow_mor(A0, C1, {}, {0})));
  auto I2 = arrow_obj(2, 2, {0, 1}, "I");
  auto I1 = arrow_obj(1, 1, {0}, "J");
  auto I1b = arrow_obj(1, 1, {0}, "K");
  add_with_collapse(out, "arrow/pushout-epis",
                    span_of(A, arrow_mor(I2, I1, {0, 0}, {0, 0}), arrow_mor(I2, I1b, {0, 0}, {0, 0})));
  auto P2 = arrow_obj(0, 2, {}, "P");
  auto Q1 = arrow_obj(0, 1, {}, "Q");
  auto R1 = arrow_obj(0, 1, {}, "R");
  add_with_collapse(out, "arrow/pushout-codomain-epis",
                    span_of(A, arrow_mor(P2, Q1, {}, {0, 0}), arrow_mor(P2, R1, {}, {0, 0})));
  auto U1 = arrow_obj(1, 2, {0}, "U");
  add_with_collapse(out, "arrow/coeq", pair_of(A, arrow_mor(A0, U1, {}, {0}), arrow_mor(A0, U1, {}, {1})));
  add_padded(out, "arrow/coproduct", discrete_of(A, B1, A0));
  return out;
}

}  // namespace suite
