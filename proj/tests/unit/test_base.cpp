#include "doctest.h"
#include "spanvk/base.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace spanvk;

namespace {

// pointwise oracle in [0 -> 1, FinSet]: every component square is a pullback
// (pullbacks of functors are computed pointwise)
bool arrow_pullback_oracle(const Morphism& a, const Morphism& b, const Morphism& c, const Morphism& d) {
  for (std::uint32_t k = 0; k < 2; ++k)
    if (!oracle::pullback(a.at(k), b.at(k), c.at(k), d.at(k))) return false;
  return true;
}

}  // namespace

TEST_CASE("FinSet as a base category") {
  auto C = BaseCat::finsets();
  CHECK(C.name() == "finset");
  auto x = C.object(FinSet{"a", "b"});
  auto f = C.morphism(FinFn::constant(x.at(0), FinSet{"*"}, 0));
  CHECK(C.is_epi(f));
  CHECK_FALSE(C.is_mono(f));
  CHECK(C.objects_up_to_iso(3).size() == 4);
  CHECK(C.objects_over(C.object(FinSet{"p", "q"}), 2).size() == 6);
  CHECK(C.morphisms(x, C.object(FinSet{"0", "1", "2"})).size() == 9);
}

TEST_CASE("arrow category objects and morphisms are validated") {
  auto C = BaseCat::arrows();
  CHECK(C.name() == "arrow");
  FinSet a{"x"}, b{"p", "q"};
  auto X = C.object({a, b}, {FinFn(a, b, {1})});
  auto Y = C.object({b, b}, {FinFn::identity(b)});
  CHECK_THROWS_AS(C.object({a, b}, {}), ValidationError);
  CHECK_THROWS_AS(C.morphism(X, Y, {FinFn(a, b, {0}), FinFn::identity(b)}), ValidationError);
  auto f = C.morphism(X, Y, {FinFn(a, b, {1}), FinFn::identity(b)});
  CHECK(C.is_mono(f));
  // up to iso: (0,0) (0,1) (0,2) (1,1) (1,2) (2,1) and two maps 2 -> 2
  CHECK(C.objects_up_to_iso(2).size() == 8);
  CHECK(C.objects_up_to_iso(1).size() == 3);
}

TEST_CASE("arrow category pullbacks agree with the pointwise oracle") {
  auto C = BaseCat::arrows();
  gen::Rng r(11);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto Z = gen::arrow_object(r, 2, "z");
    auto objs = C.objects_up_to_iso(2);
    auto X = objs[r.below(objs.size())];
    auto Y = objs[r.below(objs.size())];
    auto fs = C.morphisms(X, Z), gs = C.morphisms(Y, Z);
    if (fs.empty() || gs.empty()) continue;
    auto f = fs[r.below(fs.size())], g = gs[r.below(gs.size())];
    auto pb = C.chosen_pullback(f, g);
    C.validate(pb.p1);
    C.validate(pb.p2);
    CHECK(arrow_pullback_oracle(pb.p1, pb.p2, f, g));
    CHECK(C.is_pullback_square(pb.p1, pb.p2, f, g));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("arrow category colimits are pointwise colimits") {
  auto C = BaseCat::arrows();
  gen::Rng r(5);
  auto objs = C.objects_up_to_iso(2);
  for (int i = 0; i < 100; ++i) {
    auto A = objs[r.below(objs.size())], B = objs[r.below(objs.size())], D = objs[r.below(objs.size())];
    auto fs = C.morphisms(A, B), gs = C.morphisms(A, D);
    if (fs.empty() || gs.empty()) continue;
    auto f = fs[r.below(fs.size())], g = gs[r.below(gs.size())];
    auto po = C.pushout(f, g);
    C.validate(po.inB);
    C.validate(po.inC);
    for (std::uint32_t k = 0; k < 2; ++k)
      CHECK(oracle::colimit({A.at(k), B.at(k), D.at(k)}, {{0, 1, f.at(k)}, {0, 2, g.at(k)}},
                            {compose(po.inB.at(k), f.at(k)), po.inB.at(k), po.inC.at(k)}, po.obj.at(k)));
    auto ce = C.coequalizer(f, f);
    CHECK(C.is_identity(ce.q));
    auto cp = C.coproduct({A, B});
    C.validate(cp.injections[0]);
    CHECK(cp.obj.total_size() == A.total_size() + B.total_size());
  }
}

TEST_CASE("identity-preserving pullbacks at the base level") {
  auto C = BaseCat::arrows();
  gen::Rng r(3);
  for (int i = 0; i < 50; ++i) {
    auto X = gen::arrow_object(r, 2, "x");
    auto Z = gen::arrow_object(r, 2, "z");
    auto fs = C.morphisms(X, Z);
    if (fs.empty()) continue;
    auto f = fs[r.below(fs.size())];
    auto pb = C.chosen_pullback(C.identity(Z), f);
    CHECK(pb.apex == X);
    CHECK(pb.p1 == f);
    CHECK(C.is_identity(pb.p2));
    auto po = C.pushout(f, C.identity(X));
    CHECK(po.obj == Z);
    CHECK(po.inC == f);
  }
}

TEST_CASE("objects over a base object are iso-distinct") {
  auto C = BaseCat::arrows();
  FinSet one{"*"};
  auto T = C.terminal();
  // objects over the terminal object are just objects
  CHECK(C.objects_over(T, 2).size() == C.objects_up_to_iso(2).size());
  auto I = C.initial();
  CHECK(C.objects_over(I, 2).size() == 1);
}
