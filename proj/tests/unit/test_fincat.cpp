#include "doctest.h"
#include "spanvk/fincat.hpp"

using namespace spanvk;

TEST_CASE("standard shapes") {
  CHECK(FinCat::empty().num_objects() == 0);
  CHECK(FinCat::terminal().num_arrows() == 1);
  auto a = FinCat::arrow();
  CHECK(a.num_arrows() == 3);
  CHECK(a.generators() == std::vector<std::uint32_t>{2});
  auto s = FinCat::span();
  CHECK(s.generators().size() == 2);
  CHECK(s.compose(s.arrow_index("f"), s.arrow_index("g")) == -1);
  CHECK(s.compose(s.identity(1), s.arrow_index("f")) == static_cast<int>(s.arrow_index("f")));
  CHECK(FinCat::parallel_pair().num_arrows() == 4);
  CHECK(FinCat::discrete(3).num_arrows() == 3);
}

TEST_CASE("composition must be given exactly on composable pairs") {
  CHECK_THROWS_AS(FinCat::make({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}), ValidationError);
  auto c = FinCat::make({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}, {"h", "a", "c"}},
                        {{"g", "f", "h"}});
  CHECK(c.compose(c.arrow_index("g"), c.arrow_index("f")) == static_cast<int>(c.arrow_index("h")));
  CHECK(c.generators().size() == 2);
  CHECK_THROWS_AS(FinCat::make({"a", "b"}, {{"f", "a", "b"}}, {{"f", "f", "f"}}), ValidationError);
}

TEST_CASE("associativity is validated") {
  // idempotent e with e∘e = id is not a monoid unit violation but e∘e = e
  auto ok = FinCat::make({"a"}, {{"e", "a", "a"}}, {{"e", "e", "e"}});
  CHECK(ok.generating_set().size() == 1);
  // swap s with s∘s = id_a
  auto sw = FinCat::make({"a"}, {{"s", "a", "a"}}, {{"s", "s", "id_a"}});
  CHECK(sw.generators().size() == 1);
}

TEST_CASE("product of shapes") {
  auto p = FinCat::product(FinCat::arrow(), FinCat::arrow());
  CHECK(p.num_objects() == 4);
  CHECK(p.num_arrows() == 9);
  CHECK(p.generators().size() == 4);
  auto [f, g] = p.arrow_factors(p.num_arrows() - 1);
  CHECK(f == 2);
  CHECK(g == 2);
}
