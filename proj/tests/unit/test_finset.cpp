#include "doctest.h"
#include "spanvk/finset.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace spanvk;

namespace {

FinFn fn(const FinSet& d, const FinSet& c, std::map<std::string, std::string> m) {
  return FinFn::from_labels(d, c, m);
}

void each_set(std::size_t max, const std::function<void(const FinSet&)>& f) {
  for (std::size_t n = 0; n <= max; ++n) f(FinSet::numbered(n));
}

}  // namespace

TEST_CASE("FinSet keeps labels canonical and rejects duplicates") {
  FinSet a{"b", "a", "c"};
  FinSet b{"c", "b", "a"};
  CHECK(a == b);
  CHECK(a[0] == "a");
  CHECK(a.index_of("c") == 2);
  CHECK_FALSE(a.find("z"));
  CHECK_THROWS_AS(FinSet({"x", "x"}), ValidationError);
  CHECK(FinSet().empty());
}

TEST_CASE("FinFn validates totality and codomain") {
  FinSet a{"0", "1"}, b{"x"};
  CHECK_THROWS_AS(FinFn(a, b, {0}), ValidationError);
  CHECK_THROWS_AS(FinFn(a, b, {0, 1}), ValidationError);
  CHECK_THROWS_AS(fn(a, b, {{"0", "x"}}), ValidationError);
  auto f = fn(a, b, {{"0", "x"}, {"1", "x"}});
  CHECK(f.apply("1") == "x");
}

TEST_CASE("compose") {
  FinSet two{"0", "1"}, one{"a"}, z{"z"};
  auto f = FinFn::constant(two, one, 0);
  auto g = FinFn::constant(one, z, 0);
  CHECK(compose(FinFn::identity(one), f) == f);
  CHECK(compose(f, FinFn::identity(two)) == f);
  auto gf = compose(g, f);
  CHECK(gf.dom() == two);
  CHECK(gf.apply("0") == "z");
  CHECK(gf.apply("1") == "z");
  CHECK_THROWS_AS(compose(f, g), BoundaryMismatch);
}

TEST_CASE("mono / epi / iso") {
  FinSet two{"0", "1"}, one{"*"};
  auto id = FinFn::identity(two);
  CHECK(is_mono(id));
  CHECK(is_epi(id));
  CHECK(is_iso(id));
  auto c = FinFn::constant(two, one, 0);
  CHECK(is_epi(c));
  CHECK_FALSE(is_mono(c));
  auto i = FinFn(one, two, {1});
  CHECK(is_mono(i));
  CHECK_FALSE(is_epi(i));
  CHECK(is_iso(FinFn::identity(FinSet())));
}

TEST_CASE("chosen_pullback examples") {
  FinSet z{"*"}, two{"0", "1"}, one{"0"};
  SUBCASE("identity on the left returns the other leg") {
    auto g = FinFn::constant(two, z, 0);
    auto pb = chosen_pullback(FinFn::identity(z), g);
    CHECK(pb.apex == two);
    CHECK(pb.p1 == g);
    CHECK(pb.p2.is_identity());
  }
  SUBCASE("identity on the right") {
    auto f = FinFn::constant(two, z, 0);
    auto pb = chosen_pullback(f, FinFn::identity(z));
    CHECK(pb.apex == two);
    CHECK(pb.p1.is_identity());
    CHECK(pb.p2 == f);
  }
  SUBCASE("over a point it is the product") {
    auto pb = chosen_pullback(FinFn::constant(two, z, 0), FinFn::constant(one, z, 0));
    CHECK(pb.apex.size() == 2);
    CHECK(pb.apex[0] == "(0,0)");
  }
  SUBCASE("2 -> 1 against itself") {
    auto c = FinFn::constant(two, z, 0);
    CHECK(chosen_pullback(c, c).apex.size() == 4);
  }
  CHECK_THROWS_AS(chosen_pullback(FinFn::identity(two), FinFn::identity(one)), BoundaryMismatch);
}

TEST_CASE("pushout examples") {
  FinSet a{"0", "1"}, one{"*"}, b{"a", "b"}, pt{"0"};
  SUBCASE("along identity") {
    auto f = FinFn::constant(a, one, 0);
    auto po = pushout(f, FinFn::identity(a));
    CHECK(po.obj == one);
    CHECK(po.inB.is_identity());
    CHECK(po.inC == f);
  }
  SUBCASE("two constants collapse to a point") {
    auto f = FinFn::constant(a, one, 0);
    CHECK(pushout(f, f).obj.size() == 1);
  }
  SUBCASE("two injections at different points") {
    auto po = pushout(FinFn(pt, b, {0}), FinFn(pt, b, {1}));
    CHECK(po.obj.size() == 3);
  }
}

TEST_CASE("coproduct examples") {
  CHECK(coproduct({}).obj.empty());
  auto c = coproduct({FinSet{"a"}, FinSet{"a"}});
  CHECK(c.obj.size() == 2);
  CHECK(c.injections[0].at(0) != c.injections[1].at(0));
  CHECK(coproduct({FinSet{"0", "1"}, FinSet{"x"}}).obj.size() == 3);
}

TEST_CASE("coequalizer examples") {
  FinSet ab{"a", "b"}, pt{"0"};
  auto f = FinFn(pt, ab, {0});
  auto same = coequalizer(f, f);
  CHECK(same.obj == ab);
  CHECK(same.q.is_identity());
  auto q = coequalizer(f, FinFn(pt, ab, {1}));
  CHECK(q.obj.size() == 1);
  CHECK(is_epi(q.q));
  CHECK_THROWS_AS(coequalizer(f, FinFn::identity(ab)), BoundaryMismatch);
}

TEST_CASE("verify_pullback_square") {
  FinSet z{"*"}, two{"0", "1"};
  auto c = FinFn::constant(two, z, 0);
  auto pb = chosen_pullback(c, c);
  CHECK(verify_pullback_square({pb.p1, pb.p2, c, c}));
  // enlarge the apex by one element: comparison no longer injective
  std::vector<std::string> bigger = pb.apex.labels();
  bigger.push_back("extra");
  FinSet apex2(bigger);
  std::vector<std::uint32_t> i1, i2;
  for (const auto& l : apex2) {
    auto k = pb.apex.find(l).value_or(0);
    i1.push_back(pb.p1.at(k));
    i2.push_back(pb.p2.at(k));
  }
  CHECK_FALSE(verify_pullback_square({FinFn(apex2, two, i1), FinFn(apex2, two, i2), c, c}));
  auto id = FinFn::identity(two);
  CHECK(verify_pullback_square({id, id, id, id}));
  CHECK_THROWS_AS(verify_pullback_square({id, id, id, FinFn(two, two, {1, 0})}), ValidationError);
}

TEST_CASE("chosen pullbacks pass the brute-force oracle (exhaustive, sizes <= 2)") {
  each_set(2, [](const FinSet& z) {
    each_set(2, [&](const FinSet& x) {
      each_set(2, [&](const FinSet& y) {
        oracle::each_fn(x, z, [&](const FinFn& f) {
          oracle::each_fn(y, z, [&](const FinFn& g) {
            auto pb = chosen_pullback(f, g);
            REQUIRE(oracle::pullback(pb.p1, pb.p2, f, g));
            REQUIRE(verify_pullback_square({pb.p1, pb.p2, f, g}));
            if (f.is_identity()) CHECK(pb.p1 == g);
            if (g.is_identity()) CHECK(pb.p2 == f);
          });
        });
      });
    });
  });
}

TEST_CASE("pushouts, coproducts and coequalizers pass the colimit oracle (sizes <= 2)") {
  each_set(2, [](const FinSet& a) {
    each_set(2, [&](const FinSet& b) {
      each_set(2, [&](const FinSet& c) {
        oracle::each_fn(a, b, [&](const FinFn& f) {
          oracle::each_fn(a, c, [&](const FinFn& g) {
            auto po = pushout(f, g);
            REQUIRE(oracle::colimit({a, b, c}, {{0, 1, f}, {0, 2, g}},
                                    {compose(po.inB, f), po.inB, po.inC}, po.obj));
            REQUIRE(verify_pushout_square({f, g, po.inB, po.inC, SquareKind::pushout}));
            // symmetric pushout is isomorphic by a unique compatible bijection
            auto op = pushout(g, f);
            auto m = colimit_mediator({po.obj, {po.inB, po.inC}}, {op.inC, op.inB});
            CHECK(is_iso(m));
          });
        });
        auto cp = coproduct({a, b, c});
        REQUIRE(oracle::colimit({a, b, c}, {}, cp.injections, cp.obj));
      });
      oracle::each_fn(a, b, [&](const FinFn& f) {
        oracle::each_fn(a, b, [&](const FinFn& g) {
          auto q = coequalizer(f, g);
          REQUIRE(oracle::colimit({a, b}, {{0, 1, f}, {0, 1, g}}, {compose(q.q, f), q.q}, q.obj));
        });
      });
    });
  });
}

TEST_CASE("kernel pair coequalizer recovers the codomain of a surjection") {
  gen::Rng r(7);
  for (int i = 0; i < 200; ++i) {
    FinSet b = gen::set(r, 3, "b");
    if (b.empty()) continue;
    FinSet e = gen::set(r, 4, "e");
    auto p = gen::fn(r, e, b);
    if (!is_epi(p)) continue;
    auto kp = kernel_pair(p);
    auto q = coequalizer(kp.p1, kp.p2);
    auto m = colimit_mediator({q.obj, {compose(q.q, kp.p1), q.q}}, {compose(p, kp.p1), p});
    CHECK(is_iso(m));
  }
}

TEST_CASE("empty sets are first-class") {
  FinSet e, one{"*"};
  auto f = FinFn::from_empty(one);
  CHECK(chosen_pullback(f, f).apex.empty());
  CHECK(pushout(FinFn::identity(e), FinFn::identity(e)).obj.empty());
  CHECK(coequalizer(f, f).obj == one);
  CHECK(verify_pullback_square({FinFn::identity(e), FinFn::identity(e), f, f}));
}
