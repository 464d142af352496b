#include <filesystem>
#include <fstream>
#include <map>

#include "doctest.h"
#include "spanvk_cli/cli.hpp"
#include "spanvk_cli/io.hpp"
#include "support/gen.hpp"

using namespace spanvk;
using namespace spanvk::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run spanvk_run(std::vector<std::string> args) {
  args.insert(args.begin(), "spanvk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SPANVK_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("spanvk_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check-vk exit codes") {
  CHECK(spanvk_run({"check-vk", fixture("coproduct.vk")}).code == 0);
  auto epi = spanvk_run({"check-vk", fixture("epi-pushout.vk")});
  CHECK(epi.code == 1);
  CHECK(epi.out.find("witness converse-universality") != std::string::npos);
  CHECK(spanvk_run({"check-vk", fixture("identity.vk")}).code == 0);
  CHECK(spanvk_run({"check-vk", fixture("arrow-pushout.vk"), "--bound", "2", "--fiber-bound", "2"}).code == 0);
}

TEST_CASE("parse errors carry line and column") {
  auto m = spanvk_run({"check-vk", fixture("malformed.vk")});
  CHECK(m.code == 2);
  CHECK(m.err.find("malformed.vk:8:") != std::string::npos);
  CHECK(m.err.find("/diagram/arrows/g/x") != std::string::npos);
  auto t = spanvk_run({"check-bicolimit", fixture("truncated.vk")});
  CHECK(t.code == 2);
  CHECK(t.err.find("truncated.vk:6:1: error: syntax error") != std::string::npos);
  CHECK(spanvk_run({"check-vk", fixture("does-not-exist.vk")}).code == 2);

  auto missing = temp_file("missing.vk", "{\n  \"shape\": \"span\"\n}\n");
  auto r = spanvk_run({"check-vk", missing});
  CHECK(r.code == 2);
  CHECK(r.err.find("missing field \"diagram\"") != std::string::npos);

  // not a cocone: legs do not commute
  auto bad = temp_file("bad-cocone.vk", R"({
  "shape": "parallel-pair",
  "diagram": { "objects": { "0": ["a"], "1": ["x", "y"] },
               "arrows": { "u": { "a": "x" }, "v": { "a": "y" } } },
  "cocone": { "apex": ["x", "y"], "legs": { "0": { "a": "x" }, "1": { "x": "x", "y": "y" } } }
})");
  auto b = spanvk_run({"check-vk", bad});
  CHECK(b.code == 2);
  CHECK(b.err.find(":5:") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(spanvk_run({}).code == 2);
  CHECK(spanvk_run({"check-vk"}).code == 2);
  CHECK(spanvk_run({"check-vk", fixture("coproduct.vk"), "--format", "xml"}).code == 2);
  CHECK(spanvk_run({"gallery"}).code == 2);
  CHECK(spanvk_run({"gallery", "nope"}).code == 2);
  CHECK(spanvk_run({"--help"}).code == 0);
}

TEST_CASE("check-bicolimit verdicts match check-vk") {
  for (const auto& f : {"coproduct.vk", "epi-pushout.vk", "identity.vk", "arrow-pushout.vk"}) {
    CAPTURE(f);
    auto a = spanvk_run({"check-vk", fixture(f), "--bound", "2", "--fiber-bound", "2"});
    auto b = spanvk_run({"check-bicolimit", fixture(f)});
    CHECK(a.code == b.code);
  }
  auto r = spanvk_run({"check-bicolimit", fixture("epi-pushout.vk")});
  CHECK(r.out.find("cell not invertible") != std::string::npos);
  auto j = json::parse(spanvk_run({"--format", "json", "check-bicolimit", fixture("coproduct.vk")}).out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["report"]["ok"] == true);
  CHECK(!j["report"]["mediating_cells"].empty());
}

TEST_CASE("json reports round-trip") {
  auto r = spanvk_run({"check-vk", fixture("epi-pushout.vk"), "--format", "json"});
  REQUIRE(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j.begin().key() == "schema");
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["verdict"]["status"] == "fail");

  auto k = cocone_from_json(j["cocone"]);
  auto again = is_vk_bounded(k, j["bounds"]["size"].get<std::size_t>(), j["bounds"]["fiber"].get<std::size_t>());
  CHECK(status_name(again.status) == j["verdict"]["status"].get<std::string>());

  auto w = witness_from_json(j["verdict"]["witness"]);
  CHECK(w.kind == "converse-universality");
  CHECK(revalidates(w));
  auto in = vk_instance_check(*w.instance);
  CHECK(in.i_holds == j["verdict"]["witness"]["instance"]["i_holds"].get<bool>());
  CHECK(in.ii_holds == j["verdict"]["witness"]["instance"]["ii_holds"].get<bool>());

  // an arrow-category cocone survives the trip unchanged
  auto a = spanvk_run({"check-vk", fixture("arrow-pushout.vk"), "--format", "json", "--bound", "1"});
  auto ja = json::parse(a.out);
  auto ka = cocone_from_json(ja["cocone"]);
  CHECK(to_json(ka) == ja["cocone"]);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-vk", fixture("epi-pushout.vk")},
           {"--format", "json", "check-bicolimit", fixture("arrow-pushout.vk")},
           {"compose-spans", fixture("triple.spans")}}) {
    auto a = spanvk_run(args), b = spanvk_run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("compose-spans") {
  SUBCASE("graph . graph is the graph of the composite") {
    auto r = spanvk_run({"--format", "json", "compose-spans", fixture("graphs.spans")});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    const BaseCat Set = BaseCat::finsets();
    auto src = object_from_json(Set, j["composite"]["src"]);
    auto tgt = object_from_json(Set, j["composite"]["tgt"]);
    auto car = object_from_json(Set, j["composite"]["carrier"]);
    Span s{morphism_from_json(Set, car, src, j["composite"]["left"]),
           morphism_from_json(Set, car, tgt, j["composite"]["right"])};
    CHECK(s == graph(Set, Set.morphism(FinFn(FinSet{"a", "b"}, FinSet{"u"}, {0, 0}))));
  }
  SUBCASE("identity composition leaves a span unchanged") {
    auto f = temp_file("id.spans", R"({"spans": [
      { "src": ["a"], "tgt": ["a"], "graph": { "a": "a" } },
      { "src": ["a"], "tgt": ["x", "y"], "carrier": ["p", "q"],
        "left": { "p": "a", "q": "a" }, "right": { "p": "x", "q": "y" } } ]})");
    auto j = json::parse(spanvk_run({"--format", "json", "compose-spans", f}).out);
    CHECK(j["composite"]["carrier"] == json::array({"p", "q"}));
    CHECK(j["composite"]["right"] == json({{"p", "x"}, {"q", "y"}}));
  }
  SUBCASE("associator for triples") {
    auto j = json::parse(spanvk_run({"--format", "json", "compose-spans", fixture("triple.spans")}).out);
    REQUIRE(j.contains("associator"));
    CHECK(j["associator"]["witness"].size() == 6);
  }
  SUBCASE("not composable") {
    auto f = temp_file("gap.spans", R"({"spans": [
      { "src": ["a"], "tgt": ["b"], "graph": { "a": "b" } },
      { "src": ["c"], "tgt": ["d"], "graph": { "c": "d" } } ]})");
    auto r = spanvk_run({"compose-spans", f});
    CHECK(r.code == 2);
    CHECK(r.err.find("/spans/1") != std::string::npos);
  }
  SUBCASE("random pairs against the pullback count") {
    const BaseCat Set = BaseCat::finsets();
    gen::Rng rng(5);
    for (int it = 0; it < 25; ++it) {
      auto nonempty = [&](const std::string& p) {
        auto s = gen::set(rng, 3, p);
        return s.empty() ? FinSet{p + "0"} : s;
      };
      auto A = nonempty("a"), B = nonempty("b"), C = nonempty("c");
      auto X = gen::set(rng, 3, "x"), Y = gen::set(rng, 3, "y");
      Span s1{Set.morphism(gen::fn(rng, X, A)), Set.morphism(gen::fn(rng, X, B))};
      Span s2{Set.morphism(gen::fn(rng, Y, B)), Set.morphism(gen::fn(rng, Y, C))};
      json in;
      in["spans"] = json::array({to_json(Set, s1), to_json(Set, s2)});
      auto f = temp_file("rand.spans", in.dump());
      auto j = json::parse(spanvk_run({"--format", "json", "compose-spans", f}).out);
      // pairs (x, y) over a common b, counted by their outer ends
      std::map<std::pair<std::string, std::string>, int> want, got;
      for (std::uint32_t x = 0; x < X.size(); ++x)
        for (std::uint32_t y = 0; y < Y.size(); ++y)
          if (s1.right.at(0).at(x) == s2.left.at(0).at(y))
            ++want[{A[s1.left.at(0).at(x)], C[s2.right.at(0).at(y)]}];
      for (const auto& p : j["composite"]["carrier"]) {
        auto l = p.get<std::string>();
        ++got[{j["composite"]["left"][l].get<std::string>(), j["composite"]["right"][l].get<std::string>()}];
      }
      CHECK(want == got);
    }
  }
}

TEST_CASE("gallery") {
  auto c = spanvk_run({"gallery", "counterexample"});
  CHECK(c.code == 0);
  CHECK(c.out.find("2 mediating spans") != std::string::npos);
  CHECK(spanvk_run({"gallery", "strict-initial"}).code == 0);
  auto all = spanvk_run({"--format", "json", "gallery", "--all"});
  CHECK(all.code == 0);
  auto j = json::parse(all.out);
  CHECK(j["reports"].size() == gallery_names().size());
  CHECK(j["as_expected"] == true);
}
