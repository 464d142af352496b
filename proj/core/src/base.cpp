#include "spanvk/base.hpp"

#include <algorithm>
#include <numeric>

namespace spanvk {

Object::Object() : d_(std::make_shared<const Data>()) {}

Object::Object(std::vector<FinSet> sets, std::vector<FinFn> maps)
    : d_(std::make_shared<const Data>(Data{std::move(sets), std::move(maps)})) {}

std::size_t Object::total_size() const {
  std::size_t n = 0;
  for (const auto& s : d_->sets) n += s.size();
  return n;
}

std::size_t Object::max_size() const {
  std::size_t n = 0;
  for (const auto& s : d_->sets) n = std::max(n, s.size());
  return n;
}

bool Object::operator==(const Object& o) const {
  return d_ == o.d_ || (d_->sets == o.d_->sets && d_->maps == o.d_->maps);
}

BaseCat::BaseCat(FinCat k) : k_(std::move(k)) {}

BaseCat BaseCat::finsets() {
  static const BaseCat c(FinCat::terminal());
  return c;
}

BaseCat BaseCat::arrows() {
  static const BaseCat c(FinCat::arrow());
  return c;
}

std::string BaseCat::name() const {
  if (k_ == FinCat::terminal()) return "finset";
  if (k_ == FinCat::arrow()) return "arrow";
  return "functor";
}

namespace {

// apex maps for a pointwise colimit: parts[i] -> apex via per-k injections
Object induced_colimit(const FinCat& k, const std::vector<Object>& parts,
                       const std::vector<Colim>& per_k) {
  std::vector<FinSet> sets;
  for (const auto& c : per_k) sets.push_back(c.obj);
  std::vector<FinFn> maps;
  for (std::uint32_t m = 0; m < k.num_arrows(); ++m) {
    auto s = k.src(m), t = k.tgt(m);
    if (k.is_identity(m)) {
      maps.push_back(FinFn::identity(sets[s]));
      continue;
    }
    if (parts.empty()) {
      maps.emplace_back(sets[s], sets[t], std::vector<std::uint32_t>{});
      continue;
    }
    std::vector<FinFn> legs;
    for (std::size_t i = 0; i < parts.size(); ++i)
      legs.push_back(spanvk::compose(per_k[t].inj[i], parts[i].map(m)));
    maps.push_back(colimit_mediator(per_k[s], legs));
  }
  return Object(std::move(sets), std::move(maps));
}

}  // namespace

Object BaseCat::object(std::vector<FinSet> sets, const std::vector<FinFn>& nonid) const {
  const auto n = k_.num_objects();
  if (sets.size() != n) throw ValidationError("object: expected one set per shape object");
  if (nonid.size() != k_.num_arrows() - n)
    throw ValidationError("object: expected one map per non-identity shape arrow");
  std::vector<FinFn> maps;
  for (std::uint32_t i = 0; i < n; ++i) maps.push_back(FinFn::identity(sets[i]));
  maps.insert(maps.end(), nonid.begin(), nonid.end());
  Object x(std::move(sets), std::move(maps));
  validate(x);
  return x;
}

Object BaseCat::object(const FinSet& s) const {
  if (k_.num_objects() != 1 || k_.num_arrows() != 1)
    throw ValidationError("object(FinSet): base is not FinSet");
  return Object({s}, {FinFn::identity(s)});
}

Object BaseCat::constant(const FinSet& s) const {
  std::vector<FinSet> sets(k_.num_objects(), s);
  std::vector<FinFn> maps(k_.num_arrows(), FinFn::identity(s));
  return Object(std::move(sets), std::move(maps));
}

Morphism BaseCat::morphism(const Object& src, const Object& tgt, std::vector<FinFn> comps) const {
  Morphism f(src, tgt, std::move(comps));
  validate(f);
  return f;
}

Morphism BaseCat::morphism(const FinFn& f) const {
  return morphism(object(f.dom()), object(f.cod()), {f});
}

void BaseCat::validate(const Object& x) const {
  const auto n = k_.num_objects(), m = k_.num_arrows();
  if (x.sets().size() != n || x.maps().size() != m)
    throw ValidationError("object does not match the base shape");
  for (std::uint32_t a = 0; a < m; ++a) {
    const auto& f = x.map(a);
    if (!(f.dom() == x.at(k_.src(a))) || !(f.cod() == x.at(k_.tgt(a))))
      throw ValidationError("object: map for " + k_.arrow(a).name + " has wrong boundary");
    if (k_.is_identity(a) && !f.is_identity())
      throw ValidationError("object: identity arrow not sent to identity");
  }
  for (std::uint32_t f = 0; f < m; ++f)
    for (std::uint32_t g = 0; g < m; ++g) {
      auto gf = k_.compose(g, f);
      if (gf >= 0 && !(spanvk::compose(x.map(g), x.map(f)) == x.map(gf)))
        throw ValidationError("object: not functorial at " + k_.arrow(g).name + "∘" +
                              k_.arrow(f).name);
    }
}

void BaseCat::validate(const Morphism& f) const {
  validate(f.src());
  validate(f.tgt());
  const auto n = k_.num_objects();
  if (f.comps().size() != n) throw ValidationError("morphism: expected one component per object");
  for (std::uint32_t k = 0; k < n; ++k)
    if (!(f.at(k).dom() == f.src().at(k)) || !(f.at(k).cod() == f.tgt().at(k)))
      throw ValidationError("morphism: component has wrong boundary");
  for (auto a : k_.non_identity_arrows()) {
    auto s = k_.src(a), t = k_.tgt(a);
    if (!(spanvk::compose(f.tgt().map(a), f.at(s)) == spanvk::compose(f.at(t), f.src().map(a))))
      throw ValidationError("morphism: not natural at " + k_.arrow(a).name);
  }
}

Morphism BaseCat::identity(const Object& x) const {
  std::vector<FinFn> c;
  for (const auto& s : x.sets()) c.push_back(FinFn::identity(s));
  return Morphism(x, x, std::move(c));
}

Morphism BaseCat::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.tgt() == g.src())) throw BoundaryMismatch("compose: target of f is not source of g");
  std::vector<FinFn> c;
  for (std::uint32_t k = 0; k < f.comps().size(); ++k) c.push_back(spanvk::compose(g.at(k), f.at(k)));
  return Morphism(f.src(), g.tgt(), std::move(c));
}

bool BaseCat::is_identity(const Morphism& f) const {
  if (!(f.src() == f.tgt())) return false;
  return std::all_of(f.comps().begin(), f.comps().end(), [](const FinFn& c) { return c.is_identity(); });
}

bool BaseCat::is_mono(const Morphism& f) const {
  return std::all_of(f.comps().begin(), f.comps().end(), [](const FinFn& c) { return spanvk::is_mono(c); });
}

bool BaseCat::is_epi(const Morphism& f) const {
  return std::all_of(f.comps().begin(), f.comps().end(), [](const FinFn& c) { return spanvk::is_epi(c); });
}

bool BaseCat::is_iso(const Morphism& f) const {
  return std::all_of(f.comps().begin(), f.comps().end(), [](const FinFn& c) { return spanvk::is_iso(c); });
}

Morphism BaseCat::inverse(const Morphism& f) const {
  std::vector<FinFn> c;
  for (const auto& x : f.comps()) c.push_back(spanvk::inverse(x));
  return Morphism(f.tgt(), f.src(), std::move(c));
}

BasePullback BaseCat::chosen_pullback(const Morphism& f, const Morphism& g) const {
  if (!(f.tgt() == g.tgt())) throw BoundaryMismatch("chosen_pullback: targets differ");
  if (is_identity(f)) return {g.src(), g, identity(g.src())};
  if (is_identity(g)) return {f.src(), identity(f.src()), f};
  const auto n = k_.num_objects();
  std::vector<Pullback> pb;
  for (std::uint32_t k = 0; k < n; ++k) pb.push_back(spanvk::chosen_pullback(f.at(k), g.at(k)));
  std::vector<FinSet> sets;
  for (const auto& p : pb) sets.push_back(p.apex);
  std::vector<FinFn> maps;
  for (std::uint32_t a = 0; a < k_.num_arrows(); ++a) {
    auto s = k_.src(a), t = k_.tgt(a);
    if (k_.is_identity(a)) {
      maps.push_back(FinFn::identity(sets[s]));
      continue;
    }
    maps.push_back(spanvk::factor_through(
        {pb[t].p1, pb[t].p2},
        {spanvk::compose(f.src().map(a), pb[s].p1), spanvk::compose(g.src().map(a), pb[s].p2)}));
  }
  Object apex(std::move(sets), std::move(maps));
  std::vector<FinFn> c1, c2;
  for (const auto& p : pb) {
    c1.push_back(p.p1);
    c2.push_back(p.p2);
  }
  return {apex, Morphism(apex, f.src(), std::move(c1)), Morphism(apex, g.src(), std::move(c2))};
}

Morphism BaseCat::factor_through(const std::vector<Morphism>& via,
                                 const std::vector<Morphism>& from) const {
  if (via.empty() || via.size() != from.size()) throw BoundaryMismatch("factor_through: legs");
  std::vector<FinFn> c;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    std::vector<FinFn> v, w;
    for (const auto& x : via) v.push_back(x.at(k));
    for (const auto& x : from) w.push_back(x.at(k));
    c.push_back(spanvk::factor_through(v, w));
  }
  return Morphism(from[0].src(), via[0].src(), std::move(c));
}

Morphism BaseCat::pullback_mediator(const BasePullback& pb, const Morphism& a,
                                    const Morphism& b) const {
  return factor_through({pb.p1, pb.p2}, {a, b});
}

bool BaseCat::commutes(const Morphism& a, const Morphism& b, const Morphism& c,
                       const Morphism& d) const {
  if (!(a.src() == b.src()) || !(a.tgt() == c.src()) || !(b.tgt() == d.src()) ||
      !(c.tgt() == d.tgt()))
    return false;
  return compose(c, a) == compose(d, b);
}

bool BaseCat::is_pullback_square(const Morphism& a, const Morphism& b, const Morphism& c,
                                 const Morphism& d) const {
  if (!commutes(a, b, c, d)) throw ValidationError("is_pullback_square: square does not commute");
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k)
    if (!verify_pullback_square({a.at(k), b.at(k), c.at(k), d.at(k), SquareKind::pullback}))
      return false;
  return true;
}

bool BaseCat::is_pushout_square(const Morphism& a, const Morphism& b, const Morphism& c,
                                const Morphism& d) const {
  if (!commutes(a, b, c, d)) throw ValidationError("is_pushout_square: square does not commute");
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k)
    if (!verify_pushout_square({a.at(k), b.at(k), c.at(k), d.at(k), SquareKind::pushout}))
      return false;
  return true;
}

BaseColim BaseCat::glue(const std::vector<Object>& parts, const std::vector<std::string>& tags,
                        const std::vector<BaseEdge>& edges) const {
  std::vector<Colim> per_k;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    std::vector<FinSet> ps;
    for (const auto& p : parts) ps.push_back(p.at(k));
    std::vector<GlueEdge> es;
    for (const auto& e : edges) es.push_back({e.src, e.tgt, e.map.at(k)});
    per_k.push_back(spanvk::glue(ps, tags, es));
  }
  BaseColim out{induced_colimit(k_, parts, per_k), {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<FinFn> c;
    for (const auto& pk : per_k) c.push_back(pk.inj[i]);
    out.inj.emplace_back(parts[i], out.obj, std::move(c));
  }
  return out;
}

Morphism BaseCat::colimit_mediator(const BaseColim& c, const std::vector<Morphism>& legs,
                                   const Object& apex) const {
  if (legs.size() != c.inj.size()) throw BoundaryMismatch("colimit_mediator: leg count");
  for (const auto& l : legs)
    if (!(l.tgt() == apex)) throw BoundaryMismatch("colimit_mediator: leg target is not the apex");
  std::vector<FinFn> comps;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    if (legs.empty()) {
      if (!c.obj.at(k).empty()) throw BoundaryMismatch("colimit_mediator: no legs");
      comps.push_back(FinFn::from_empty(apex.at(k)));
      continue;
    }
    Colim ck{c.obj.at(k), {}};
    std::vector<FinFn> lk;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      ck.inj.push_back(c.inj[i].at(k));
      lk.push_back(legs[i].at(k));
    }
    comps.push_back(spanvk::colimit_mediator(ck, lk));
  }
  return Morphism(c.obj, apex, std::move(comps));
}

BasePushout BaseCat::pushout(const Morphism& f, const Morphism& g) const {
  if (!(f.src() == g.src())) throw BoundaryMismatch("pushout: sources differ");
  if (is_identity(g)) return {f.tgt(), identity(f.tgt()), f};
  if (is_identity(f)) return {g.tgt(), g, identity(g.tgt())};
  std::vector<Colim> per_k;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    auto po = spanvk::pushout(f.at(k), g.at(k));
    per_k.push_back({po.obj, {spanvk::compose(po.inB, f.at(k)), po.inB, po.inC}});
  }
  Object obj = induced_colimit(k_, {f.src(), f.tgt(), g.tgt()}, per_k);
  std::vector<FinFn> b, c;
  for (const auto& pk : per_k) {
    b.push_back(pk.inj[1]);
    c.push_back(pk.inj[2]);
  }
  return {obj, Morphism(f.tgt(), obj, std::move(b)), Morphism(g.tgt(), obj, std::move(c))};
}

BaseCoproduct BaseCat::coproduct(const std::vector<Object>& objs) const {
  std::vector<Colim> per_k;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    std::vector<FinSet> ps;
    for (const auto& o : objs) ps.push_back(o.at(k));
    auto cp = spanvk::coproduct(ps);
    per_k.push_back({cp.obj, cp.injections});
  }
  BaseCoproduct out{induced_colimit(k_, objs, per_k), {}};
  for (std::size_t i = 0; i < objs.size(); ++i) {
    std::vector<FinFn> c;
    for (const auto& pk : per_k) c.push_back(pk.inj[i]);
    out.injections.emplace_back(objs[i], out.obj, std::move(c));
  }
  return out;
}

BaseCoequalizer BaseCat::coequalizer(const Morphism& f, const Morphism& g) const {
  if (!(f.src() == g.src()) || !(f.tgt() == g.tgt()))
    throw BoundaryMismatch("coequalizer: maps are not parallel");
  std::vector<Colim> per_k;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    auto ce = spanvk::coequalizer(f.at(k), g.at(k));
    per_k.push_back({ce.obj, {spanvk::compose(ce.q, f.at(k)), ce.q}});
  }
  Object obj = induced_colimit(k_, {f.src(), f.tgt()}, per_k);
  std::vector<FinFn> q;
  for (const auto& pk : per_k) q.push_back(pk.inj[1]);
  return {obj, Morphism(f.tgt(), obj, std::move(q))};
}

BaseProduct BaseCat::product(const Object& a, const Object& b) const {
  Object one = terminal();
  std::vector<FinFn> ca, cb;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) {
    ca.push_back(FinFn::constant(a.at(k), one.at(k), 0));
    cb.push_back(FinFn::constant(b.at(k), one.at(k), 0));
  }
  auto pb = chosen_pullback(Morphism(a, one, std::move(ca)), Morphism(b, one, std::move(cb)));
  return {pb.apex, pb.p1, pb.p2};
}

Object BaseCat::initial() const { return constant(FinSet()); }

Object BaseCat::terminal() const { return constant(FinSet{"*"}); }

Morphism BaseCat::from_initial(const Object& x) const {
  Object z = initial();
  std::vector<FinFn> c;
  for (const auto& s : x.sets()) c.push_back(FinFn::from_empty(s));
  return Morphism(z, x, std::move(c));
}

Structure BaseCat::structure(const Object& x) const {
  Structure s;
  for (const auto& set : x.sets()) s.sort_sizes.push_back(static_cast<std::uint32_t>(set.size()));
  for (auto a : k_.non_identity_arrows())
    s.ops.push_back({k_.src(a), k_.tgt(a), x.map(a).images()});
  return s;
}

Morphism BaseCat::from_sort_maps(const Object& src, const Object& tgt, const SortMaps& h) const {
  std::vector<FinFn> c;
  for (std::uint32_t k = 0; k < k_.num_objects(); ++k) c.emplace_back(src.at(k), tgt.at(k), h[k]);
  return Morphism(src, tgt, std::move(c));
}

void BaseCat::for_each_morphism(const Object& x, const Object& y,
                                const std::function<bool(const Morphism&)>& visit) const {
  for_each_hom(structure(x), structure(y), {},
               [&](const SortMaps& h) { return visit(from_sort_maps(x, y, h)); });
}

std::vector<Morphism> BaseCat::morphisms(const Object& x, const Object& y) const {
  std::vector<Morphism> out;
  for_each_morphism(x, y, [&](const Morphism& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<Morphism> BaseCat::find_iso(const Object& x, const Object& y) const {
  HomOptions o;
  o.bijective = true;
  auto h = find_hom(structure(x), structure(y), o);
  if (!h) return std::nullopt;
  return from_sort_maps(x, y, *h);
}

std::vector<Object> BaseCat::objects_up_to_iso(std::size_t bound) const {
  const auto n = k_.num_objects(), m = k_.num_arrows();
  std::vector<FinSet> numbered;
  for (std::size_t i = 0; i <= bound; ++i) numbered.push_back(FinSet::numbered(i));
  std::vector<Object> out;
  const auto chosen = k_.generating_set();
  IsoDeduper dedupe;
  std::vector<std::size_t> sizes(n, 0);
  while (true) {
    std::vector<FinSet> sets;
    for (auto s : sizes) sets.push_back(numbered[s]);
    std::vector<std::optional<FinFn>> maps(m);
    for (std::uint32_t i = 0; i < n; ++i) maps[i] = FinFn::identity(sets[i]);
    std::function<void(std::size_t)> rec = [&](std::size_t ci) {
      if (ci == chosen.size()) {
        auto full = maps;
        bool grew = true;
        while (grew) {
          grew = false;
          for (std::uint32_t f = 0; f < m; ++f)
            for (std::uint32_t g = 0; g < m; ++g) {
              auto gf = k_.compose(g, f);
              if (gf >= 0 && full[f] && full[g] && !full[gf]) {
                full[gf] = spanvk::compose(*full[g], *full[f]);
                grew = true;
              }
            }
        }
        std::vector<FinFn> ms;
        for (auto& f : full) ms.push_back(*f);
        Object x(sets, std::move(ms));
        try {
          validate(x);
        } catch (const ValidationError&) {
          return;
        }
        if (dedupe.add(structure(x))) out.push_back(x);
        return;
      }
      auto a = chosen[ci];
      for_each_function(sets[k_.src(a)], sets[k_.tgt(a)], [&](const FinFn& f) {
        maps[a] = f;
        rec(ci + 1);
        return true;
      });
      maps[a].reset();
    };
    rec(0);
    std::size_t i = 0;
    while (i < n && ++sizes[i] > bound) sizes[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<Morphism> BaseCat::objects_over(const Object& z, std::size_t bound) const {
  std::vector<Morphism> out;
  const auto n = k_.num_objects();
  if (n == 1 && k_.num_arrows() == 1) {
    const std::size_t zn = z.at(0).size();
    std::vector<std::size_t> counts(zn, 0);
    while (true) {
      std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
      if (total <= bound) {
        FinSet xs = FinSet::numbered(total);
        std::vector<std::uint32_t> img;
        for (std::uint32_t e = 0; e < zn; ++e) img.insert(img.end(), counts[e], e);
        // numbered labels sort lexicographically; map element by sorted index
        std::vector<std::uint32_t> by_index(total);
        for (std::size_t j = 0; j < total; ++j) by_index[xs.index_of(std::to_string(j))] = img[j];
        Object x = object(xs);
        out.emplace_back(x, z, std::vector<FinFn>{FinFn(xs, z.at(0), std::move(by_index))});
      }
      std::size_t i = 0;
      while (i < zn && (++counts[i], std::accumulate(counts.begin(), counts.end(), std::size_t{0}) > bound))
        counts[i++] = 0;
      if (i == zn) break;
    }
    return out;
  }
  std::vector<bool> fixed(2 * n, false);
  for (std::size_t i = n; i < 2 * n; ++i) fixed[i] = true;
  IsoDeduper dedupe(fixed);
  Structure zs = structure(z);
  for (const auto& x : objects_up_to_iso(bound)) {
    Structure xs = structure(x);
    for_each_morphism(x, z, [&](const Morphism& f) {
      Structure s;
      s.sort_sizes = xs.sort_sizes;
      s.sort_sizes.insert(s.sort_sizes.end(), zs.sort_sizes.begin(), zs.sort_sizes.end());
      s.ops = xs.ops;
      for (auto op : zs.ops) {
        op.src += static_cast<std::uint32_t>(n);
        op.tgt += static_cast<std::uint32_t>(n);
        s.ops.push_back(std::move(op));
      }
      for (std::uint32_t k = 0; k < n; ++k)
        s.ops.push_back({k, static_cast<std::uint32_t>(k + n), f.at(k).images()});
      if (dedupe.add(s)) out.push_back(f);
      return true;
    });
  }
  return out;
}

}  // namespace spanvk
