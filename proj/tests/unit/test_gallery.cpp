#include "doctest.h"
#include "spanvk/format.hpp"
#include "spanvk/gallery.hpp"
#include "support/gen.hpp"

using namespace spanvk;

namespace {

bool has_claim(const ExampleReport& r, const std::string& what, bool observed) {
  for (const auto& c : r.claims)
    if (c.what == what) return c.observed == observed;
  return false;
}

}  // namespace

TEST_CASE("counterexample: VK square, two mediators, bicolimit") {
  auto r = run_counterexample_sp();
  CHECK(r.as_expected());
  CHECK(has_claim(r, "the pushout square is VK (fiber bound 2)", true));
  CHECK(has_claim(r, "search finds exactly 2 mediating spans", true));
  CHECK(has_claim(r, "d has a non-identity automorphism", true));
  CHECK(has_claim(r, "the graph of the square is a pushout in Sp(C)", false));
  CHECK(has_claim(r, "the graph of the square is a bicolimit in Span", true));
  CHECK(r.summary == "VK square in C: pass; pushout in Sp(C): fail (2 mediating spans); bicolimit in Span: pass");
  auto text = format_report(r);
  CHECK(text.find("2 mediating spans") != std::string::npos);
  CHECK(text.find("labelling") != std::string::npos);
}

TEST_CASE("strict initial object") {
  auto r = run_strict_initial();
  CHECK(r.as_expected());
  CHECK(r.claims.size() == 3);
  CHECK(r.witnesses.empty());
}

TEST_CASE("extensive coproducts") {
  const BaseCat Set = BaseCat::finsets();
  CHECK(run_extensive_coproduct(Set.object(FinSet{"a"}), Set.object(FinSet{"b"})).as_expected());
  CHECK(run_extensive_coproduct(Set.initial(), Set.initial()).as_expected());
  gen::Rng rng(11);
  for (int i = 0; i < 4; ++i) {
    auto a = Set.object(gen::set(rng, 3)), b = Set.object(gen::set(rng, 3));
    CHECK(run_extensive_coproduct(a, b).as_expected());
  }
}

TEST_CASE("kernel pairs") {
  const BaseCat Set = BaseCat::finsets();
  CHECK(run_kernel_pair(Set.identity(Set.object(FinSet{"a", "b"}))).as_expected());
  CHECK(run_kernel_pair(Set.morphism(FinFn(FinSet{"0", "1"}, FinSet{"*"}, {0, 0}))).as_expected());
  CHECK(run_kernel_pair(Set.morphism(FinFn(FinSet::numbered(4), FinSet{"x", "y"}, {0, 1, 1, 0}))).as_expected());
  CHECK_THROWS_AS(run_kernel_pair(Set.morphism(FinFn(FinSet{"a"}, FinSet{"x", "y"}, {0}))), ValidationError);
}

TEST_CASE("non-VK pushout") {
  auto r = run_non_vk_pushout();
  CHECK(r.as_expected());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(revalidates(r.witnesses[0]));
  CHECK(has_claim(r, "universality alone holds (size bound 3)", true));
}

TEST_CASE("gallery by name") {
  for (const auto& n : gallery_names()) {
    CAPTURE(n);
    auto r = run_gallery(n);
    CHECK(r.name == n);
    CHECK(r.as_expected());
  }
  CHECK_THROWS_AS(run_gallery("nope"), Error);
}

TEST_CASE("formatting") {
  const BaseCat Set = BaseCat::finsets();
  const BaseCat Arr = BaseCat::arrows();
  CHECK(format_object(Set.object(FinSet{"a", "b"})) == "{a, b}");
  CHECK(format_object(Set.initial()) == "{}");
  FinSet o{"o"}, s{"s", "t"};
  auto x = Arr.object({o, s}, {FinFn(o, s, {1})});
  CHECK(format_object(x) == "<{o} ; {s, t} | o->t>");
  CHECK(format_morphism(Set.morphism(FinFn(FinSet{"a", "b"}, FinSet{"x"}, {0, 0}))) == "a->x, b->x");
  auto sp = identity_span(Set, Set.object(FinSet{"a"}));
  CHECK(format_span(sp) == "carrier {a}\n  left  -> {a}: a->a\n  right -> {a}: a->a\n");
  Verdict v;
  v.status = Status::pass_up_to_bound;
  v.size_bound = 3;
  v.checked = 7;
  CHECK(format_verdict("vk", v) == "vk: pass-up-to-bound (size bound 3), 7 checked\n");
}
