#include "doctest.h"
#include "spanvk/bicolim.hpp"
#include "support/suite.hpp"

using namespace spanvk;

namespace {

const BaseCat Set = BaseCat::finsets();

Cocone epi_pushout() {
  FinSet two{"0", "1"}, one{"*"};
  auto f = suite::set_fn(two, one, {0, 0});
  auto po = Set.pushout(f, f);
  return square_cocone(Set, f, f, po.inB, po.inC);
}

Cocone mono_pushout() {
  FinSet a{"a"}, b{"a", "b"}, c{"a", "c"};
  auto f = suite::set_fn(a, b, {0});
  auto g = suite::set_fn(a, c, {0});
  auto po = Set.pushout(f, g);
  return square_cocone(Set, f, g, po.inB, po.inC);
}

Cocone collapsed(const Cocone& k) {
  return postcompose(k, Set.morphisms(k.apex(), Set.terminal()).front());
}

}  // namespace

TEST_CASE("universal spans") {
  auto k = coproduct_cocone(Set, Set.object(FinSet{"a"}), Set.object(FinSet{"b"}));
  CHECK(is_universal_span(k, identity_span(Set, k.apex())));
  for (const auto& h : spans_between(Set, k.apex(), Set.terminal(), 2)) CHECK(is_universal_span(k, h));

  auto bad = collapsed(k);
  CHECK_FALSE(is_universal_span(bad, identity_span(Set, bad.apex())));
}

TEST_CASE("pullback criterion agrees with the modification count") {
  for (const auto& k : {mono_pushout(), epi_pushout(), collapsed(mono_pushout()),
                        coproduct_cocone(Set, Set.object(FinSet{"a", "b"}), Set.initial())}) {
    auto spans = spans_between(Set, k.apex(), Set.terminal(), 2);
    for (const auto& h : spans) {
      CAPTURE(h.carrier().total_size());
      CHECK(is_universal_span(k, h) == universal_by_modifications(k, h, spans).ok());
    }
  }
}

TEST_CASE("modifications between equal composites") {
  auto k = mono_pushout();
  auto id = identity_span(Set, k.apex());
  auto ms = modifications(k, id, id);
  // universal, so one per 2-cell id => id
  CHECK(ms.size() == two_cells(Set, id, id).size());
  auto idm = identity_modification(postcompose(id, gamma_cocone(k)));
  bool found = false;
  for (const auto& m : ms) found = found || m == idm;
  CHECK(found);
}

TEST_CASE("mediating cells") {
  SUBCASE("Γκ is mediated by the identity") {
    auto k = mono_pushout();
    auto mc = find_mediating_cell(k, gamma_pseudo_cocone(k));
    CHECK(mc.invertible());
    CHECK(Set.is_iso(mc.span.left));
    CHECK(Set.is_iso(mc.span.right));
    CHECK(mc.theta.src() == gamma_cocone(k));
    CHECK(mc.theta.is_invertible());
  }
  SUBCASE("a twisted cartesian cocone has a non-invertible cell") {
    auto k = epi_pushout();
    auto v = converse_universality_check(k, 2);
    REQUIRE(v.witness);
    const auto& w = *v.witness->instance;
    auto mc = find_mediating_cell(k, PseudoCocone(w.tau, w.beta));
    CHECK_FALSE(mc.invertible());
    CHECK_FALSE(mc.theta.is_invertible());
  }
  SUBCASE("wrong diagram") {
    auto k = mono_pushout();
    auto other = epi_pushout();
    CHECK_THROWS_AS(find_mediating_cell(k, gamma_pseudo_cocone(other)), BoundaryMismatch);
  }
}

TEST_CASE("essential uniqueness") {
  auto k = mono_pushout();
  auto mc = find_mediating_cell(k, gamma_pseudo_cocone(k));
  CHECK(essential_uniqueness_check(k, mc, mc).ok());

  // a different pseudo-cocone over the same diagram
  auto e = colimit(k.diagram());
  auto mc2 = find_mediating_cell(k, PseudoCocone(identity_nat(k.diagram()), e));
  CHECK(essential_uniqueness_check(k, mc2, mc2).ok());
  CHECK(essential_uniqueness_check(k, mc, mc2).status == Status::fail);

  auto t = epi_pushout();
  auto w = *converse_universality_check(t, 2).witness->instance;
  auto twisted = find_mediating_cell(t, PseudoCocone(w.tau, w.beta));
  auto u = essential_uniqueness_check(t, twisted, twisted);
  CHECK(u.status == Status::fail);
  CHECK(u.witness->kind == "essential-uniqueness");
}

TEST_CASE("bounded bicolimit verification") {
  CHECK(verify_bicolimit_bounded(coproduct_cocone(Set, Set.object(FinSet{"a"}), Set.object(FinSet{"b"}))).ok());
  CHECK(verify_bicolimit_bounded(mono_pushout()).ok());
  CHECK(verify_bicolimit_bounded(Cocone(Diagram(), Set.initial(), {})).ok());

  auto r = verify_bicolimit_bounded(epi_pushout());
  CHECK_FALSE(r.ok());
  REQUIRE(r.ess_surj.witness);
  CHECK(r.ess_surj.witness->kind == "mediating-cell");
  CHECK(revalidates(*r.ess_surj.witness));
  CHECK_FALSE(r.ess_surj.witness->bad_squares.empty());

  auto c = verify_bicolimit_bounded(collapsed(mono_pushout()));
  CHECK_FALSE(c.ok());
  CHECK(c.universality.status == Status::fail);
  REQUIRE(c.universality.witness);
  CHECK(c.universality.witness->kind == "non-universal-span");
}

TEST_CASE("bicolimit verification agrees with the VK checker on FinSet cocones") {
  for (const auto& cs : suite::cross_validation_suite()) {
    if (cs.name.rfind("set/", 0) != 0) continue;
    CAPTURE(cs.name);
    CHECK(verify_bicolimit_bounded(cs.cocone).ok() == is_vk_bounded(cs.cocone, 2, 2).ok());
  }
}
