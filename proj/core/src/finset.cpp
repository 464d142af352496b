#include "spanvk/finset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace spanvk {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_labels() {
  static const auto e = std::make_shared<const std::vector<std::string>>();
  return e;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

// union-find with path halving
struct Dsu {
  std::vector<std::uint32_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

FinSet::FinSet() : labels_(empty_labels()) {}

FinSet::FinSet(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw ValidationError("FinSet: duplicate label '" +
                          *std::adjacent_find(labels.begin(), labels.end()) + "'");
  labels_ = labels.empty() ? empty_labels()
                           : std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FinSet::FinSet(std::initializer_list<std::string> labels)
    : FinSet(std::vector<std::string>(labels)) {}

FinSet FinSet::numbered(std::size_t n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
  return FinSet(std::move(v));
}

std::optional<std::uint32_t> FinSet::find(std::string_view label) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels_->end() || *it != label) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_->begin());
}

std::uint32_t FinSet::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw ValidationError("unknown label '" + std::string(label) + "'");
  return *i;
}

bool FinSet::operator==(const FinSet& o) const {
  return labels_ == o.labels_ || *labels_ == *o.labels_;
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<std::uint32_t> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_.size())
    throw ValidationError("FinFn: image table is not total on the domain");
  for (auto y : images_)
    if (y >= cod_.size()) throw ValidationError("FinFn: image outside codomain");
}

FinFn FinFn::from_labels(const FinSet& dom, const FinSet& cod,
                         const std::map<std::string, std::string>& map) {
  std::vector<std::uint32_t> img(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto it = map.find(dom[i]);
    if (it == map.end()) throw ValidationError("FinFn: no image for '" + dom[i] + "'");
    img[i] = cod.index_of(it->second);
  }
  if (map.size() != dom.size()) throw ValidationError("FinFn: map mentions labels outside the domain");
  return FinFn(dom, cod, std::move(img));
}

FinFn FinFn::identity(const FinSet& s) {
  std::vector<std::uint32_t> img(s.size());
  std::iota(img.begin(), img.end(), 0u);
  return FinFn(s, s, std::move(img));
}

FinFn FinFn::from_empty(const FinSet& cod) { return FinFn(FinSet(), cod, {}); }

FinFn FinFn::constant(const FinSet& dom, const FinSet& cod, std::uint32_t value) {
  return FinFn(dom, cod, std::vector<std::uint32_t>(dom.size(), value));
}

const std::string& FinFn::apply(std::string_view label) const {
  return cod_[images_[dom_.index_of(label)]];
}

bool FinFn::is_identity() const {
  if (!(dom_ == cod_)) return false;
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(f.cod() == g.dom())) throw BoundaryMismatch("compose: cod(f) != dom(g)");
  std::vector<std::uint32_t> img(f.dom().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.at(f.at(i));
  return FinFn(f.dom(), g.cod(), std::move(img));
}

bool is_mono(const FinFn& f) {
  std::vector<char> seen(f.cod().size(), 0);
  for (auto y : f.images()) {
    if (seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool is_epi(const FinFn& f) {
  std::vector<char> seen(f.cod().size(), 0);
  std::size_t hit = 0;
  for (auto y : f.images())
    if (!seen[y]) {
      seen[y] = 1;
      ++hit;
    }
  return hit == f.cod().size();
}

bool is_iso(const FinFn& f) { return f.dom().size() == f.cod().size() && is_mono(f); }

FinFn inverse(const FinFn& f) {
  if (!is_iso(f)) throw ValidationError("inverse: not a bijection");
  std::vector<std::uint32_t> img(f.cod().size());
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) img[f.at(i)] = i;
  return FinFn(f.cod(), f.dom(), std::move(img));
}

void for_each_function(const FinSet& dom, const FinSet& cod,
                       const std::function<bool(const FinFn&)>& visit) {
  const std::size_t n = dom.size(), m = cod.size();
  if (n > 0 && m == 0) return;
  std::vector<std::uint32_t> img(n, 0);
  while (true) {
    if (!visit(FinFn(dom, cod, img))) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++img[i] < m) break;
      img[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

Pullback chosen_pullback(const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod())) throw BoundaryMismatch("chosen_pullback: codomains differ");
  if (f.is_identity()) return {g.dom(), g, FinFn::identity(g.dom())};
  if (g.is_identity()) return {f.dom(), FinFn::identity(f.dom()), f};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < f.dom().size(); ++x)
    for (std::uint32_t y = 0; y < g.dom().size(); ++y)
      if (f.at(x) == g.at(y)) {
        pairs.emplace_back(x, y);
        labels.push_back("(" + f.dom()[x] + "," + g.dom()[y] + ")");
      }
  // labels need not sort in pair order; index through the sorted apex
  FinSet apex(labels);
  std::vector<std::uint32_t> i1(apex.size()), i2(apex.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto idx = apex.index_of(labels[k]);
    i1[idx] = pairs[k].first;
    i2[idx] = pairs[k].second;
  }
  return {apex, FinFn(apex, f.dom(), std::move(i1)), FinFn(apex, g.dom(), std::move(i2))};
}

FinFn factor_through(const std::vector<FinFn>& via, const std::vector<FinFn>& from) {
  if (via.size() != from.size() || via.empty())
    throw BoundaryMismatch("factor_through: leg count mismatch");
  const FinSet& q = via[0].dom();
  const FinSet& p = from[0].dom();
  for (std::size_t i = 0; i < via.size(); ++i) {
    if (!(via[i].dom() == q) || !(from[i].dom() == p) || !(via[i].cod() == from[i].cod()))
      throw BoundaryMismatch("factor_through: legs do not share boundaries");
  }
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> index;
  std::vector<std::uint32_t> key(via.size());
  for (std::uint32_t e = 0; e < q.size(); ++e) {
    for (std::size_t i = 0; i < via.size(); ++i) key[i] = via[i].at(e);
    index.emplace(key, e);
  }
  std::vector<std::uint32_t> img(p.size());
  for (std::uint32_t e = 0; e < p.size(); ++e) {
    for (std::size_t i = 0; i < from.size(); ++i) key[i] = from[i].at(e);
    auto it = index.find(key);
    if (it == index.end()) throw BoundaryMismatch("factor_through: no factorisation");
    img[e] = it->second;
  }
  return FinFn(p, q, std::move(img));
}

FinFn pullback_mediator(const Pullback& pb, const FinFn& a, const FinFn& b) {
  return factor_through({pb.p1, pb.p2}, {a, b});
}

Colim glue(const std::vector<FinSet>& parts, const std::vector<std::string>& tags,
           const std::vector<GlueEdge>& edges) {
  if (tags.size() != parts.size()) throw BoundaryMismatch("glue: one tag per part");
  std::vector<std::uint32_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].size();
  Dsu dsu(offset.back());
  bool merged = false;
  for (const auto& e : edges) {
    if (e.src >= parts.size() || e.tgt >= parts.size() || !(e.map.dom() == parts[e.src]) ||
        !(e.map.cod() == parts[e.tgt]))
      throw BoundaryMismatch("glue: edge does not match its parts");
    for (std::uint32_t x = 0; x < e.map.dom().size(); ++x)
      merged |= dsu.unite(offset[e.src] + x, offset[e.tgt] + e.map.at(x));
  }
  if (parts.size() == 1 && !merged) return {parts[0], {FinFn::identity(parts[0])}};

  const std::uint32_t total = offset.back();
  std::vector<std::string> tagged(total);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::uint32_t x = 0; x < parts[i].size(); ++x)
      tagged[offset[i] + x] = tags[i] + ":" + parts[i][x];
  // smallest label per class
  std::vector<std::int64_t> best(total, -1);
  for (std::uint32_t v = 0; v < total; ++v) {
    auto r = dsu.find(v);
    if (best[r] < 0 || tagged[v] < tagged[best[r]]) best[r] = v;
  }
  std::vector<std::string> reps;
  for (std::uint32_t v = 0; v < total; ++v)
    if (dsu.find(v) == v) reps.push_back(tagged[best[v]]);
  FinSet obj(reps);
  Colim out{obj, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<std::uint32_t> img(parts[i].size());
    for (std::uint32_t x = 0; x < parts[i].size(); ++x)
      img[x] = obj.index_of(tagged[best[dsu.find(offset[i] + x)]]);
    out.inj.emplace_back(parts[i], obj, std::move(img));
  }
  return out;
}

FinFn colimit_mediator(const Colim& c, const std::vector<FinFn>& legs) {
  if (legs.size() != c.inj.size()) throw BoundaryMismatch("colimit_mediator: leg count mismatch");
  if (legs.empty()) {
    if (!c.obj.empty()) throw BoundaryMismatch("colimit_mediator: no legs");
    return FinFn();
  }
  const FinSet& apex = legs[0].cod();
  std::vector<std::int64_t> img(c.obj.size(), -1);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!(legs[i].dom() == c.inj[i].dom()) || !(legs[i].cod() == apex))
      throw BoundaryMismatch("colimit_mediator: leg boundaries");
    for (std::uint32_t x = 0; x < legs[i].dom().size(); ++x) {
      auto cls = c.inj[i].at(x);
      auto y = static_cast<std::int64_t>(legs[i].at(x));
      if (img[cls] >= 0 && img[cls] != y)
        throw BoundaryMismatch("colimit_mediator: legs do not form a cocone");
      img[cls] = y;
    }
  }
  std::vector<std::uint32_t> out(c.obj.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (img[k] < 0) throw BoundaryMismatch("colimit_mediator: class with no preimage");
    out[k] = static_cast<std::uint32_t>(img[k]);
  }
  return FinFn(c.obj, apex, std::move(out));
}

Pushout pushout(const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom())) throw BoundaryMismatch("pushout: domains differ");
  if (g.is_identity()) return {f.cod(), FinFn::identity(f.cod()), f};
  if (f.is_identity()) return {g.cod(), g, FinFn::identity(g.cod())};
  Colim c = glue({f.dom(), f.cod(), g.cod()}, {"a", "0", "1"},
                 {{0, 1, f}, {0, 2, g}});
  return {c.obj, c.inj[1], c.inj[2]};
}

Coproduct coproduct(const std::vector<FinSet>& objs) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (const auto& x : objs[i]) labels.push_back(std::to_string(i) + ":" + x);
  FinSet obj(labels);
  Coproduct out{obj, {}};
  for (std::size_t i = 0; i < objs.size(); ++i) {
    std::vector<std::uint32_t> img;
    for (const auto& x : objs[i]) img.push_back(obj.index_of(std::to_string(i) + ":" + x));
    out.injections.emplace_back(objs[i], obj, std::move(img));
  }
  return out;
}

Coequalizer coequalizer(const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    throw BoundaryMismatch("coequalizer: maps are not parallel");
  const FinSet& c = f.cod();
  Dsu dsu(c.size());
  bool merged = false;
  for (std::uint32_t x = 0; x < f.dom().size(); ++x) merged |= dsu.unite(f.at(x), g.at(x));
  if (!merged) return {c, FinFn::identity(c)};
  // labels are sorted, so the root (smallest index) is the smallest label
  std::vector<std::string> reps;
  for (std::uint32_t y = 0; y < c.size(); ++y)
    if (dsu.find(y) == y) reps.push_back(c[y]);
  FinSet obj(reps);
  std::vector<std::uint32_t> img(c.size());
  for (std::uint32_t y = 0; y < c.size(); ++y) img[y] = obj.index_of(c[dsu.find(y)]);
  return {obj, FinFn(c, obj, std::move(img))};
}

Pullback kernel_pair(const FinFn& p) {
  return chosen_pullback(p, p);
}

bool commutes(const SquareWitness& w) {
  if (!(w.a.dom() == w.b.dom()) || !(w.a.cod() == w.c.dom()) || !(w.b.cod() == w.d.dom()) ||
      !(w.c.cod() == w.d.cod()))
    return false;
  return compose(w.c, w.a) == compose(w.d, w.b);
}

bool verify_pullback_square(const SquareWitness& w) {
  if (!commutes(w)) throw ValidationError("verify_pullback_square: square does not commute");
  Pullback pb = chosen_pullback(w.c, w.d);
  return is_iso(pullback_mediator(pb, w.a, w.b));
}

bool verify_pushout_square(const SquareWitness& w) {
  if (!commutes(w)) throw ValidationError("verify_pushout_square: square does not commute");
  Pushout po = pushout(w.a, w.b);
  Colim c{po.obj, {po.inB, po.inC}};
  return is_iso(colimit_mediator(c, {w.c, w.d}));
}

bool is_colimit_cocone(const std::vector<FinSet>& parts, const std::vector<GlueEdge>& edges,
                       const std::vector<FinFn>& legs, const FinSet& apex) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < parts.size(); ++i) tags.push_back(std::to_string(i));
  Colim c = glue(parts, tags, edges);
  if (legs.empty()) return apex.empty();
  return is_iso(colimit_mediator(c, legs));
}

}  // namespace spanvk
