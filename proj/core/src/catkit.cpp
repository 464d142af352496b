#include "spanvk/catkit.hpp"

namespace spanvk {

namespace {

void validate_diagram(const FinCat& j, const BaseCat& base, const std::vector<Object>& objs,
                      const std::vector<Morphism>& arrows) {
  if (objs.size() != j.num_objects() || arrows.size() != j.num_arrows())
    throw ValidationError("diagram does not match its shape");
  for (const auto& o : objs) base.validate(o);
  for (std::uint32_t u = 0; u < j.num_arrows(); ++u) {
    const auto& f = arrows[u];
    if (!(f.src() == objs[j.src(u)]) || !(f.tgt() == objs[j.tgt(u)]))
      throw ValidationError("diagram: arrow " + j.arrow(u).name + " has wrong boundary");
    if (!j.is_identity(u)) base.validate(f);
  }
  for (std::uint32_t f = 0; f < j.num_arrows(); ++f)
    for (std::uint32_t g = 0; g < j.num_arrows(); ++g) {
      auto gf = j.compose(g, f);
      if (gf >= 0 && !(base.compose(arrows[g], arrows[f]) == arrows[gf]))
        throw ValidationError("diagram: not functorial at " + j.arrow(g).name + "∘" +
                              j.arrow(f).name);
    }
}

}  // namespace

Diagram::Diagram()
    : d_(std::make_shared<const Data>(Data{FinCat::empty(), BaseCat::finsets(), {}, {}})) {}

Diagram::Diagram(FinCat shape, BaseCat base, std::vector<Object> objects,
                 const std::vector<Morphism>& nonid) {
  const auto n = shape.num_objects();
  if (objects.size() != n) throw ValidationError("diagram: one object per shape object");
  if (nonid.size() != shape.num_arrows() - n)
    throw ValidationError("diagram: one morphism per non-identity shape arrow");
  std::vector<Morphism> arrows;
  for (const auto& o : objects) arrows.push_back(base.identity(o));
  arrows.insert(arrows.end(), nonid.begin(), nonid.end());
  validate_diagram(shape, base, objects, arrows);
  d_ = std::make_shared<const Data>(
      Data{std::move(shape), std::move(base), std::move(objects), std::move(arrows)});
}

Diagram Diagram::constant(const FinCat& shape, const BaseCat& base, const Object& x) {
  std::vector<Object> objs(shape.num_objects(), x);
  std::vector<Morphism> arrows(shape.num_arrows() - shape.num_objects(), base.identity(x));
  return Diagram(shape, base, std::move(objs), arrows);
}

Diagram Diagram::from_generators(const FinCat& shape, const BaseCat& base, std::vector<Object> objects,
                                 const std::vector<std::pair<std::uint32_t, Morphism>>& gens) {
  const auto m = shape.num_arrows();
  std::vector<std::optional<Morphism>> full(m);
  for (std::uint32_t i = 0; i < shape.num_objects(); ++i) full[i] = base.identity(objects.at(i));
  for (const auto& [u, f] : gens) full.at(u) = f;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t f = 0; f < m; ++f)
      for (std::uint32_t g = 0; g < m; ++g) {
        auto gf = shape.compose(g, f);
        if (gf >= 0 && full[f] && full[g] && !full[gf]) {
          full[gf] = base.compose(*full[g], *full[f]);
          grew = true;
        }
      }
  }
  std::vector<Morphism> nonid;
  for (auto u = static_cast<std::uint32_t>(shape.num_objects()); u < m; ++u) {
    if (!full[u]) throw ValidationError("diagram: no value for arrow " + shape.arrow(u).name);
    nonid.push_back(*full[u]);
  }
  return Diagram(shape, base, std::move(objects), nonid);
}

bool Diagram::operator==(const Diagram& o) const {
  return d_ == o.d_ || (d_->shape == o.d_->shape && d_->base == o.d_->base &&
                        d_->objects == o.d_->objects && d_->arrows == o.d_->arrows);
}

NatTrans::NatTrans(Diagram src, Diagram tgt, std::vector<Morphism> comps)
    : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
  const auto& j = src_.shape();
  if (!(j == tgt_.shape())) throw BoundaryMismatch("NatTrans: shapes differ");
  if (comps_.size() != j.num_objects()) throw ValidationError("NatTrans: one component per object");
  const auto& base = src_.base();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) {
    if (!(comps_[i].src() == src_.at(i)) || !(comps_[i].tgt() == tgt_.at(i)))
      throw BoundaryMismatch("NatTrans: component has wrong boundary");
    base.validate(comps_[i]);
  }
  for (auto u : j.non_identity_arrows()) {
    auto a = j.src(u), b = j.tgt(u);
    if (!(base.compose(tgt_.arrow(u), comps_[a]) == base.compose(comps_[b], src_.arrow(u))))
      throw ValidationError("NatTrans: not natural at " + j.arrow(u).name);
  }
}

Cocone::Cocone(Diagram diagram, Object apex, std::vector<Morphism> legs)
    : diagram_(std::move(diagram)), apex_(std::move(apex)), legs_(std::move(legs)) {
  const auto& j = diagram_.shape();
  const auto& base = diagram_.base();
  base.validate(apex_);
  if (legs_.size() != j.num_objects()) throw ValidationError("Cocone: one leg per object");
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) {
    if (!(legs_[i].src() == diagram_.at(i)) || !(legs_[i].tgt() == apex_))
      throw BoundaryMismatch("Cocone: leg has wrong boundary");
    base.validate(legs_[i]);
  }
  for (auto u : j.non_identity_arrows())
    if (!(base.compose(legs_[j.tgt(u)], diagram_.arrow(u)) == legs_[j.src(u)]))
      throw ValidationError("Cocone: legs do not commute at " + j.arrow(u).name);
}

NatTrans Cocone::as_nat() const {
  return NatTrans(diagram_, Diagram::constant(diagram_.shape(), base(), apex_), legs_);
}

NatTrans identity_nat(const Diagram& d) {
  std::vector<Morphism> c;
  for (const auto& o : d.objects()) c.push_back(d.base().identity(o));
  return NatTrans(d, d, std::move(c));
}

NatTrans compose(const NatTrans& g, const NatTrans& f) {
  if (!(f.tgt() == g.src())) throw BoundaryMismatch("compose: nat boundaries");
  std::vector<Morphism> c;
  for (std::uint32_t i = 0; i < f.comps().size(); ++i)
    c.push_back(f.src().base().compose(g.at(i), f.at(i)));
  return NatTrans(f.src(), g.tgt(), std::move(c));
}

NatTrans constant_nat(const FinCat& shape, const BaseCat& base, const Morphism& x) {
  return NatTrans(Diagram::constant(shape, base, x.src()), Diagram::constant(shape, base, x.tgt()),
                  std::vector<Morphism>(shape.num_objects(), x));
}

bool is_iso(const NatTrans& t) {
  for (const auto& c : t.comps())
    if (!t.src().base().is_iso(c)) return false;
  return true;
}

NatTrans inverse(const NatTrans& t) {
  std::vector<Morphism> c;
  for (const auto& x : t.comps()) c.push_back(t.src().base().inverse(x));
  return NatTrans(t.tgt(), t.src(), std::move(c));
}

Cocone postcompose(const Cocone& k, const Morphism& x) {
  std::vector<Morphism> legs;
  for (const auto& l : k.legs()) legs.push_back(k.base().compose(x, l));
  return Cocone(k.diagram(), x.tgt(), std::move(legs));
}

Cocone precompose(const Cocone& k, const NatTrans& t) {
  std::vector<Morphism> legs;
  for (std::uint32_t i = 0; i < t.comps().size(); ++i)
    legs.push_back(k.base().compose(k.leg(i), t.at(i)));
  return Cocone(t.src(), k.apex(), std::move(legs));
}

Cocone colimit(const Diagram& d) {
  const auto& j = d.shape();
  std::vector<std::string> tags;
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) tags.push_back(j.object_name(i));
  std::vector<BaseEdge> edges;
  for (auto u : j.non_identity_arrows()) edges.push_back({j.src(u), j.tgt(u), d.arrow(u)});
  auto c = d.base().glue(d.objects(), tags, edges);
  return Cocone(d, c.obj, c.inj);
}

Morphism colimit_mediator(const Cocone& colim, const Cocone& other) {
  if (!(colim.diagram() == other.diagram())) throw BoundaryMismatch("colimit_mediator: diagrams differ");
  return colim.base().colimit_mediator(BaseColim{colim.apex(), colim.legs()}, other.legs(),
                                       other.apex());
}

bool is_colimit(const Cocone& k) {
  Cocone c = colimit(k.diagram());
  return k.base().is_iso(colimit_mediator(c, k));
}

std::vector<std::uint32_t> non_pullback_squares(const NatTrans& t) {
  const auto& j = t.src().shape();
  const auto& base = t.src().base();
  std::vector<std::uint32_t> bad;
  for (auto u : j.non_identity_arrows()) {
    auto a = j.src(u), b = j.tgt(u);
    if (!base.is_pullback_square(t.src().arrow(u), t.at(a), t.at(b), t.tgt().arrow(u)))
      bad.push_back(u);
  }
  return bad;
}

bool is_cartesian(const NatTrans& t) { return non_pullback_squares(t).empty(); }

PulledBackCocone pullback_cocone(const Cocone& k, const Morphism& x) {
  const auto& base = k.base();
  const auto& d = k.diagram();
  const auto& j = d.shape();
  if (!(x.tgt() == k.apex())) throw BoundaryMismatch("pullback_cocone: x does not land in the apex");
  std::vector<BasePullback> pb;
  std::vector<Object> eobj;
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) {
    pb.push_back(base.chosen_pullback(x, k.leg(i)));
    eobj.push_back(pb.back().apex);
  }
  std::vector<Morphism> earr;
  for (auto u : j.non_identity_arrows()) {
    auto a = j.src(u), b = j.tgt(u);
    earr.push_back(base.pullback_mediator(pb[b], pb[a].p1, base.compose(d.arrow(u), pb[a].p2)));
  }
  Diagram e(j, base, eobj, earr);
  std::vector<Morphism> tau, beta;
  for (const auto& p : pb) {
    tau.push_back(p.p2);
    beta.push_back(p.p1);
  }
  return {e, NatTrans(e, d, std::move(tau)), Cocone(e, x.src(), std::move(beta))};
}

PulledBackNat pullback_nat(const NatTrans& t, const NatTrans& s) {
  if (!(t.tgt() == s.tgt())) throw BoundaryMismatch("pullback_nat: targets differ");
  const auto& base = t.src().base();
  const auto& j = t.src().shape();
  std::vector<BasePullback> pb;
  std::vector<Object> objs;
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) {
    pb.push_back(base.chosen_pullback(t.at(i), s.at(i)));
    objs.push_back(pb.back().apex);
  }
  std::vector<Morphism> arr;
  for (auto u : j.non_identity_arrows()) {
    auto a = j.src(u), b = j.tgt(u);
    arr.push_back(base.pullback_mediator(pb[b], base.compose(t.src().arrow(u), pb[a].p1),
                                         base.compose(s.src().arrow(u), pb[a].p2)));
  }
  Diagram p(j, base, objs, arr);
  std::vector<Morphism> c1, c2;
  for (const auto& x : pb) {
    c1.push_back(x.p1);
    c2.push_back(x.p2);
  }
  return {p, NatTrans(p, t.src(), std::move(c1)), NatTrans(p, s.src(), std::move(c2))};
}

CartesianOver kappa_star(const Cocone& k, const Morphism& x) {
  auto r = pullback_cocone(k, x);
  return {r.E, r.tau};
}

BaseCat functor_category(const FinCat& shape) { return BaseCat(shape); }

BaseCat functor_category_over(const FinCat& shape, const BaseCat& base) {
  if (base == BaseCat::finsets()) return BaseCat(shape);
  return BaseCat(FinCat::product(shape, base.shape()));
}

Object diagram_as_object(const Diagram& d) {
  const auto& j = d.shape();
  const auto& k = d.base().shape();
  FinCat jk = FinCat::product(j, k);
  std::vector<FinSet> sets;
  for (std::uint32_t o = 0; o < jk.num_objects(); ++o) {
    auto [a, b] = jk.object_factors(o);
    sets.push_back(d.at(a).at(b));
  }
  std::vector<FinFn> maps;
  for (std::uint32_t m = 0; m < jk.num_arrows(); ++m) {
    auto [u, v] = jk.arrow_factors(m);
    // (u, v) = (u, id) then (id, v)
    const auto& du = d.arrow(u);
    maps.push_back(compose(d.at(j.tgt(u)).map(v), du.at(k.src(v))));
  }
  return Object(std::move(sets), std::move(maps));
}

Morphism nat_as_morphism(const NatTrans& t) {
  const auto& k = t.src().base().shape();
  FinCat jk = FinCat::product(t.src().shape(), k);
  std::vector<FinFn> c;
  for (std::uint32_t o = 0; o < jk.num_objects(); ++o) {
    auto [a, b] = jk.object_factors(o);
    c.push_back(t.at(a).at(b));
  }
  return Morphism(diagram_as_object(t.src()), diagram_as_object(t.tgt()), std::move(c));
}

Structure diagram_structure(const Diagram& d) {
  const auto& j = d.shape();
  const auto& k = d.base().shape();
  const auto nk = static_cast<std::uint32_t>(k.num_objects());
  Structure s;
  for (std::uint32_t a = 0; a < j.num_objects(); ++a)
    for (std::uint32_t b = 0; b < nk; ++b)
      s.sort_sizes.push_back(static_cast<std::uint32_t>(d.at(a).at(b).size()));
  for (auto u : j.non_identity_arrows())
    for (std::uint32_t b = 0; b < nk; ++b)
      s.ops.push_back({j.src(u) * nk + b, j.tgt(u) * nk + b, d.arrow(u).at(b).images()});
  for (std::uint32_t a = 0; a < j.num_objects(); ++a)
    for (auto m : k.non_identity_arrows())
      s.ops.push_back({a * nk + k.src(m), a * nk + k.tgt(m), d.at(a).map(m).images()});
  return s;
}

NatTrans nat_from_sort_maps(const Diagram& a, const Diagram& b, const SortMaps& h) {
  const auto nk = static_cast<std::uint32_t>(a.base().shape().num_objects());
  std::vector<Morphism> comps;
  for (std::uint32_t j = 0; j < a.shape().num_objects(); ++j) {
    std::vector<FinFn> c;
    for (std::uint32_t k = 0; k < nk; ++k) c.emplace_back(a.at(j).at(k), b.at(j).at(k), h[j * nk + k]);
    comps.emplace_back(a.at(j), b.at(j), std::move(c));
  }
  return NatTrans(a, b, std::move(comps));
}

std::optional<NatTrans> diagram_iso_search(const Diagram& a, const Diagram& b) {
  if (!(a.shape() == b.shape()) || !(a.base() == b.base()))
    throw BoundaryMismatch("diagram_iso_search: shapes differ");
  HomOptions o;
  o.bijective = true;
  auto h = find_hom(diagram_structure(a), diagram_structure(b), o);
  if (!h) return std::nullopt;
  return nat_from_sort_maps(a, b, *h);
}

void for_each_nat(const Diagram& a, const Diagram& b,
                  const std::function<bool(const NatTrans&)>& visit) {
  for_each_hom(diagram_structure(a), diagram_structure(b), {},
               [&](const SortMaps& h) { return visit(nat_from_sort_maps(a, b, h)); });
}

void for_each_cocone(const Diagram& d, const Object& apex,
                     const std::function<bool(const Cocone&)>& visit) {
  Cocone c = colimit(d);
  d.base().for_each_morphism(c.apex(), apex, [&](const Morphism& m) { return visit(postcompose(c, m)); });
}

}  // namespace spanvk
