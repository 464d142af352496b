#include "spanvk_cli/io.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace spanvk::cli {

namespace {

// ---- source positions ------------------------------------------------------

// input iterator over the text that remembers how far the parser has read
struct CountingIt {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* pos = nullptr;

  reference operator*() const { return *p; }
  CountingIt& operator++() {
    ++p;
    ++*pos;
    return *this;
  }
  CountingIt operator++(int) {
    auto t = *this;
    ++*this;
    return t;
  }
  bool operator==(const CountingIt& o) const { return p == o.p; }
  bool operator!=(const CountingIt& o) const { return p != o.p; }
};

std::string escape_token(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

// records, for every JSON pointer, how far the parser had read when the value
// started
struct PositionSax : nlohmann::json_sax<json> {
  const std::size_t* pos;
  std::map<std::string, std::size_t> at;
  struct Frame {
    std::string path;
    bool array;
    std::size_t index = 0;
    std::string key;
  };
  std::vector<Frame> stack;

  explicit PositionSax(const std::size_t* p) : pos(p) {}

  std::string here() const {
    if (stack.empty()) return "";
    const auto& f = stack.back();
    return f.path + "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
  }
  bool value() {
    at.emplace(here(), *pos);
    if (!stack.empty() && stack.back().array) ++stack.back().index;
    return true;
  }
  bool open(bool array) {
    auto p = here();
    at.emplace(p, *pos);
    if (!stack.empty() && stack.back().array) ++stack.back().index;
    stack.push_back({p, array, 0, {}});
    return true;
  }
  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool key(string_t& k) override {
    stack.back().key = k;
    return true;
  }
  bool end_object() override {
    stack.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return open(true); }
  bool end_array() override {
    stack.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }
};

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// attach a source position to an error raised while decoding
[[noreturn]] void relocate(const std::string& text, const InputError& e) {
  std::size_t pos = 0;
  CountingIt first{text.data(), &pos}, last{text.data() + text.size(), &pos};
  PositionSax sax(&pos);
  json::sax_parse(first, last, &sax);
  // longest recorded prefix of the failing path
  std::string p = e.path;
  while (true) {
    auto it = sax.at.find(p);
    if (it != sax.at.end()) {
      auto [l, c] = line_col(text, it->second > 0 ? it->second - 1 : 0);
      throw InputError(e.path, e.what(), l, c);
    }
    if (p.empty()) break;
    p = p.substr(0, p.rfind('/'));
  }
  throw e;
}

// ---- decoding helpers ------------------------------------------------------

const json& member(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path, "missing field \"" + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) { return path + "/" + escape_token(key); }

template <class F>
auto guarded(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(path, e.what());
  }
}

FinSet set_at(const json& j, const std::string& path) {
  return guarded(path, [&] {
    if (!j.is_array()) throw InputError(path, "expected an array of labels");
    std::vector<std::string> labels;
    for (const auto& x : j) {
      if (!x.is_string()) throw InputError(path, "labels must be strings");
      labels.push_back(x.get<std::string>());
    }
    FinSet s(labels);
    if (s.size() != labels.size()) throw InputError(path, "duplicate label");
    return s;
  });
}

FinFn fn_at(const FinSet& dom, const FinSet& cod, const json& j, const std::string& path) {
  return guarded(path, [&] {
    if (!j.is_object()) throw InputError(path, "expected a map from labels to labels");
    std::map<std::string, std::string> m;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!dom.find(it.key())) throw InputError(sub(path, it.key()), "unknown source label \"" + it.key() + "\"");
      if (!it->is_string()) throw InputError(sub(path, it.key()), "expected a label");
      auto v = it->get<std::string>();
      if (!cod.find(v)) throw InputError(sub(path, it.key()), "unknown target label \"" + v + "\"");
      m[it.key()] = v;
    }
    for (const auto& l : dom)
      if (!m.count(l)) throw InputError(path, "no image for label \"" + l + "\"");
    return FinFn::from_labels(dom, cod, m);
  });
}

BaseCat base_at(const json& j, const std::string& path);
FinCat shape_at(const json& j, const std::string& path);

Object object_at(const BaseCat& c, const json& j, const std::string& path) {
  const auto& k = c.shape();
  if (k.num_objects() == 1 && k.num_arrows() == 1) return c.object(set_at(j, path));
  std::vector<FinSet> sets;
  const auto& js = member(j, path, "sets");
  for (std::uint32_t i = 0; i < k.num_objects(); ++i)
    sets.push_back(set_at(member(js, sub(path, "sets"), k.object_name(i)), sub(sub(path, "sets"), k.object_name(i))));
  std::vector<FinFn> maps;
  for (auto m : k.non_identity_arrows()) {
    const auto& name = k.arrow(m).name;
    auto p = sub(sub(path, "maps"), name);
    maps.push_back(fn_at(sets[k.src(m)], sets[k.tgt(m)], member(member(j, path, "maps"), sub(path, "maps"), name), p));
  }
  return guarded(path, [&] { return c.object(sets, maps); });
}

Morphism morphism_at(const BaseCat& c, const Object& src, const Object& tgt, const json& j,
                     const std::string& path) {
  const auto& k = c.shape();
  std::vector<FinFn> comps;
  if (k.num_objects() == 1) {
    comps.push_back(fn_at(src.at(0), tgt.at(0), j, path));
  } else {
    for (std::uint32_t i = 0; i < k.num_objects(); ++i)
      comps.push_back(fn_at(src.at(i), tgt.at(i), member(j, path, k.object_name(i)), sub(path, k.object_name(i))));
  }
  return guarded(path, [&] { return c.morphism(src, tgt, comps); });
}

Diagram diagram_at(const BaseCat& c, const FinCat& shape, const json& j, const std::string& path) {
  std::vector<Object> objs;
  const auto& jo = member(j, path, "objects");
  for (std::uint32_t i = 0; i < shape.num_objects(); ++i) {
    const auto& name = shape.object_name(i);
    objs.push_back(object_at(c, member(jo, sub(path, "objects"), name), sub(sub(path, "objects"), name)));
  }
  std::vector<std::pair<std::uint32_t, Morphism>> gens;
  if (j.contains("arrows")) {
    const auto& ja = j["arrows"];
    auto pa = sub(path, "arrows");
    if (!ja.is_object()) throw InputError(pa, "expected an object");
    for (auto it = ja.begin(); it != ja.end(); ++it) {
      auto p = sub(pa, it.key());
      auto u = guarded(p, [&] { return shape.arrow_index(it.key()); });
      if (shape.is_identity(u)) throw InputError(p, "identity arrows take no value");
      gens.emplace_back(u, morphism_at(c, objs[shape.src(u)], objs[shape.tgt(u)], *it, p));
    }
  }
  return guarded(path, [&] { return Diagram::from_generators(shape, c, objs, gens); });
}

Cocone cocone_at(const Diagram& d, const json& j, const std::string& path) {
  const auto& c = d.base();
  const auto& shape = d.shape();
  auto apex = object_at(c, member(j, path, "apex"), sub(path, "apex"));
  std::vector<Morphism> legs;
  const auto& jl = member(j, path, "legs");
  for (std::uint32_t i = 0; i < shape.num_objects(); ++i) {
    const auto& name = shape.object_name(i);
    auto p = sub(sub(path, "legs"), name);
    legs.push_back(morphism_at(c, d.at(i), apex, member(jl, sub(path, "legs"), name), p));
  }
  return guarded(path, [&] { return Cocone(d, apex, legs); });
}

FinCat shape_at(const json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "empty") return FinCat::empty();
    if (s == "terminal") return FinCat::terminal();
    if (s == "arrow") return FinCat::arrow();
    if (s == "span") return FinCat::span();
    if (s == "cospan") return FinCat::cospan();
    if (s == "parallel-pair") return FinCat::parallel_pair();
    if (s.rfind("discrete-", 0) == 0) {
      try {
        return FinCat::discrete(std::stoul(s.substr(9)));
      } catch (const std::logic_error&) {
      }
    }
    throw InputError(path, "unknown shape \"" + s + "\"");
  }
  std::vector<std::string> objs;
  for (const auto& o : member(j, path, "objects")) {
    if (!o.is_string()) throw InputError(sub(path, "objects"), "object names must be strings");
    objs.push_back(o.get<std::string>());
  }
  std::vector<FinCat::ArrowSpec> arrows;
  if (j.contains("arrows"))
    for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
      auto p = sub(sub(path, "arrows"), std::to_string(i));
      const auto& a = j["arrows"][i];
      arrows.push_back(guarded(p, [&] {
        return FinCat::ArrowSpec{a.at("name").get<std::string>(), a.at("src").get<std::string>(),
                                 a.at("tgt").get<std::string>()};
      }));
    }
  std::vector<FinCat::Composite> comps;
  if (j.contains("composites"))
    for (std::size_t i = 0; i < j["composites"].size(); ++i) {
      auto p = sub(sub(path, "composites"), std::to_string(i));
      const auto& t = j["composites"][i];
      comps.push_back(guarded(p, [&] {
        if (!t.is_array() || t.size() != 3) throw InputError(p, "expected [g, f, g.f]");
        return FinCat::Composite{t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()};
      }));
    }
  return guarded(path, [&] { return FinCat::make(objs, arrows, comps); });
}

BaseCat base_at(const json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "finset") return BaseCat::finsets();
    if (s == "arrow") return BaseCat::arrows();
    throw InputError(path, "unknown base category \"" + s + "\"");
  }
  const auto& sh = member(j, path, "functor-cat");
  return BaseCat(shape_at(sh, sub(path, "functor-cat")));
}

std::size_t bound_at(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw InputError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Span span_at(const BaseCat& c, const json& j, const std::string& path) {
  auto src = object_at(c, member(j, path, "src"), sub(path, "src"));
  auto tgt = object_at(c, member(j, path, "tgt"), sub(path, "tgt"));
  if (j.contains("graph")) return graph(c, morphism_at(c, src, tgt, j["graph"], sub(path, "graph")));
  auto carrier = object_at(c, member(j, path, "carrier"), sub(path, "carrier"));
  auto l = morphism_at(c, carrier, src, member(j, path, "left"), sub(path, "left"));
  auto r = morphism_at(c, carrier, tgt, member(j, path, "right"), sub(path, "right"));
  return Span{l, r};
}

json set_json(const FinSet& s) { return json(s.labels()); }

json fn_json(const FinFn& f) {
  json j = json::object();
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) j[f.dom()[i]] = f.cod()[f.at(i)];
  return j;
}

template <class F>
auto with_position(const std::string& text, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    if (e.line) throw;
    relocate(text, e);
  }
}

}  // namespace

// ---- public ----------------------------------------------------------------

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("", "cannot read " + file);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto cut = msg.find("syntax error");
    throw InputError("", cut == std::string::npos ? msg : msg.substr(cut), l, c);
  }
}

Cocone DiagramFile::cocone_or_colimit() const { return cocone ? *cocone : colimit(diagram); }

DiagramFile read_diagram_file(const std::string& text) {
  auto j = parse_json(text);
  return with_position(text, [&] {
    DiagramFile f;
    if (!j.is_object()) throw InputError("", "expected an object at top level");
    f.base = j.contains("base") ? base_at(j["base"], "/base") : BaseCat::finsets();
    auto shape = shape_at(member(j, "", "shape"), "/shape");
    f.diagram = diagram_at(f.base, shape, member(j, "", "diagram"), "/diagram");
    if (j.contains("cocone")) f.cocone = cocone_at(f.diagram, j["cocone"], "/cocone");
    if (j.contains("bounds")) {
      const auto& b = j["bounds"];
      if (b.contains("size")) f.size_bound = bound_at(b["size"], "/bounds/size");
      if (b.contains("fiber")) f.fiber_bound = bound_at(b["fiber"], "/bounds/fiber");
    }
    return f;
  });
}

SpanFile read_span_file(const std::string& text) {
  auto j = parse_json(text);
  return with_position(text, [&] {
    SpanFile f;
    if (!j.is_object()) throw InputError("", "expected an object at top level");
    f.base = j.contains("base") ? base_at(j["base"], "/base") : BaseCat::finsets();
    const auto& js = member(j, "", "spans");
    if (!js.is_array() || js.empty()) throw InputError("/spans", "expected a non-empty array of spans");
    for (std::size_t i = 0; i < js.size(); ++i) {
      auto p = "/spans/" + std::to_string(i);
      f.spans.push_back(span_at(f.base, js[i], p));
      if (i && !(f.spans[i].src() == f.spans[i - 1].tgt()))
        throw InputError(p, "span does not start where the previous one ends");
    }
    return f;
  });
}

json to_json(const FinCat& j) {
  for (const auto& [name, named] : std::vector<std::pair<std::string, FinCat>>{
           {"empty", FinCat::empty()},
           {"terminal", FinCat::terminal()},
           {"arrow", FinCat::arrow()},
           {"span", FinCat::span()},
           {"cospan", FinCat::cospan()},
           {"parallel-pair", FinCat::parallel_pair()}})
    if (j == named) return name;
  if (j.non_identity_arrows().empty() && j == FinCat::discrete(j.num_objects()))
    return "discrete-" + std::to_string(j.num_objects());
  json out;
  out["objects"] = json::array();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) out["objects"].push_back(j.object_name(i));
  out["arrows"] = json::array();
  for (auto u : j.non_identity_arrows())
    out["arrows"].push_back(
        {{"name", j.arrow(u).name}, {"src", j.object_name(j.src(u))}, {"tgt", j.object_name(j.tgt(u))}});
  out["composites"] = json::array();
  for (auto g : j.non_identity_arrows())
    for (auto f : j.non_identity_arrows()) {
      auto gf = j.compose(g, f);
      if (gf >= 0) out["composites"].push_back({j.arrow(g).name, j.arrow(f).name, j.arrow(gf).name});
    }
  return out;
}

json to_json(const BaseCat& c) {
  if (c == BaseCat::finsets()) return "finset";
  if (c == BaseCat::arrows()) return "arrow";
  return {{"functor-cat", to_json(c.shape())}};
}

json to_json(const BaseCat& c, const Object& x) {
  const auto& k = c.shape();
  if (k.num_objects() == 1 && k.num_arrows() == 1) return set_json(x.at(0));
  json out;
  out["sets"] = json::object();
  for (std::uint32_t i = 0; i < k.num_objects(); ++i) out["sets"][k.object_name(i)] = set_json(x.at(i));
  out["maps"] = json::object();
  for (auto m : k.non_identity_arrows()) out["maps"][k.arrow(m).name] = fn_json(x.map(m));
  return out;
}

json to_json(const BaseCat& c, const Morphism& f) {
  const auto& k = c.shape();
  if (k.num_objects() == 1) return fn_json(f.at(0));
  json out = json::object();
  for (std::uint32_t i = 0; i < k.num_objects(); ++i) out[k.object_name(i)] = fn_json(f.at(i));
  return out;
}

json to_json(const Diagram& d) {
  const auto& c = d.base();
  const auto& j = d.shape();
  json out;
  out["objects"] = json::object();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) out["objects"][j.object_name(i)] = to_json(c, d.at(i));
  out["arrows"] = json::object();
  for (auto u : j.generators()) out["arrows"][j.arrow(u).name] = to_json(c, d.arrow(u));
  return out;
}

json to_json(const Cocone& k) {
  const auto& c = k.base();
  const auto& j = k.diagram().shape();
  json out;
  out["base"] = to_json(c);
  out["shape"] = to_json(j);
  out["diagram"] = to_json(k.diagram());
  out["cocone"]["apex"] = to_json(c, k.apex());
  out["cocone"]["legs"] = json::object();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) out["cocone"]["legs"][j.object_name(i)] = to_json(c, k.leg(i));
  return out;
}

json to_json(const BaseCat& c, const Span& s) {
  return {{"src", to_json(c, s.src())},
          {"tgt", to_json(c, s.tgt())},
          {"carrier", to_json(c, s.carrier())},
          {"left", to_json(c, s.left)},
          {"right", to_json(c, s.right)}};
}

json to_json(const BaseCat& c, const Witness& w) {
  json out;
  out["kind"] = w.kind;
  out["detail"] = w.detail;
  out["bad_squares"] = w.bad_squares;
  out["spans"] = json::array();
  for (const auto& s : w.spans) out["spans"].push_back(to_json(c, s));
  if (w.instance) {
    const auto& in = *w.instance;
    const auto& j = in.kappa.diagram().shape();
    json inst;
    inst["kappa"] = to_json(in.kappa);
    inst["beta"] = to_json(in.beta);
    inst["tau"] = json::object();
    for (std::uint32_t i = 0; i < j.num_objects(); ++i) inst["tau"][j.object_name(i)] = to_json(c, in.tau.at(i));
    inst["x"] = to_json(c, in.x);
    auto r = vk_instance_check(in);
    inst["i_holds"] = r.i_holds;
    inst["ii_holds"] = r.ii_holds;
    out["instance"] = inst;
  }
  return out;
}

json to_json(const BaseCat& c, const Verdict& v) {
  json out;
  out["status"] = status_name(v.status);
  out["ok"] = v.ok();
  out["size_bound"] = v.size_bound;
  out["fiber_bound"] = v.fiber_bound;
  out["checked"] = v.checked;
  out["witness"] = v.witness ? to_json(c, *v.witness) : json(nullptr);
  return out;
}

json to_json(const BaseCat& c, const BicolimReport& r) {
  json out;
  out["ok"] = r.ok();
  out["mediating_cells_verdict"] = to_json(c, r.ess_surj);
  out["universality_verdict"] = to_json(c, r.universality);
  out["mediating_cells"] = json::array();
  for (const auto& m : r.mediating_cells)
    out["mediating_cells"].push_back(
        {{"span", to_json(c, m.span)}, {"invertible", m.invertible()}, {"bad_faces", m.bad_faces}});
  std::size_t uni = 0;
  for (const auto& s : r.spans) uni += s.second;
  out["spans_checked"] = r.spans.size();
  out["spans_universal"] = uni;
  return out;
}

json to_json(const ExampleReport& r) {
  json out;
  out["name"] = r.name;
  out["title"] = r.title;
  out["base"] = to_json(r.base);
  out["as_expected"] = r.as_expected();
  out["objects"] = r.objects;
  out["claims"] = json::array();
  for (const auto& c : r.claims)
    out["claims"].push_back({{"what", c.what}, {"expected", c.expected}, {"observed", c.observed}});
  out["witnesses"] = json::array();
  for (const auto& w : r.witnesses)
    out["witnesses"].push_back(to_json(w.instance ? w.instance->kappa.base() : r.base, w));
  out["notes"] = r.notes;
  out["summary"] = r.summary;
  return out;
}

BaseCat base_from_json(const json& j) { return base_at(j, ""); }
FinCat shape_from_json(const json& j) { return shape_at(j, ""); }
Object object_from_json(const BaseCat& c, const json& j) { return object_at(c, j, ""); }
Morphism morphism_from_json(const BaseCat& c, const Object& src, const Object& tgt, const json& j) {
  return morphism_at(c, src, tgt, j, "");
}
Diagram diagram_from_json(const BaseCat& c, const FinCat& shape, const json& j) {
  return diagram_at(c, shape, j, "");
}

Cocone cocone_from_json(const json& j) {
  auto base = j.contains("base") ? base_at(j["base"], "/base") : BaseCat::finsets();
  auto shape = shape_at(member(j, "", "shape"), "/shape");
  auto d = diagram_at(base, shape, member(j, "", "diagram"), "/diagram");
  return cocone_at(d, member(j, "", "cocone"), "/cocone");
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.kind = member(j, "", "kind").get<std::string>();
  w.detail = member(j, "", "detail").get<std::string>();
  w.bad_squares = member(j, "", "bad_squares").get<std::vector<std::uint32_t>>();
  if (j.contains("instance") && !j["instance"].is_null()) {
    const auto& ji = j["instance"];
    auto kappa = cocone_from_json(member(ji, "/instance", "kappa"));
    auto beta = cocone_from_json(member(ji, "/instance", "beta"));
    const auto& c = kappa.base();
    const auto& shape = kappa.diagram().shape();
    std::vector<Morphism> tau;
    const auto& jt = member(ji, "/instance", "tau");
    for (std::uint32_t i = 0; i < shape.num_objects(); ++i)
      tau.push_back(morphism_at(c, beta.diagram().at(i), kappa.diagram().at(i),
                                member(jt, "/instance/tau", shape.object_name(i)),
                                "/instance/tau/" + escape_token(shape.object_name(i))));
    auto x = morphism_at(c, beta.apex(), kappa.apex(), member(ji, "/instance", "x"), "/instance/x");
    w.instance = guarded("/instance", [&] {
      return make_vk_instance(kappa, NatTrans(beta.diagram(), kappa.diagram(), tau), x, beta);
    });
  }
  return w;
}

}  // namespace spanvk::cli
