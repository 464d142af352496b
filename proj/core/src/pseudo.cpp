#include "spanvk/pseudo.hpp"

namespace spanvk {

Span gamma_arrow(const Diagram& f, std::uint32_t u) { return graph(f.base(), f.arrow(u)); }

namespace {

Span expected_cell_src(const Diagram& g, const Span& ki, std::uint32_t u) {
  return compose_spans(g.base(), gamma_arrow(g, u), ki);
}

SpanComposite expected_cell_tgt(const Diagram& f, const Span& kj, std::uint32_t u) {
  return compose_spans_detail(f.base(), kj, gamma_arrow(f, u));
}

bool is_constant_at(const Diagram& d, const Object& x) {
  for (const auto& o : d.objects())
    if (!(o == x)) return false;
  for (const auto& a : d.arrows())
    if (!d.base().is_identity(a)) return false;
  return true;
}

}  // namespace

LaxTransformation::LaxTransformation(Diagram src, Diagram tgt, std::vector<Span> components,
                                     std::vector<TwoCell> cells)
    : src_(std::move(src)), tgt_(std::move(tgt)), components_(std::move(components)),
      cells_(std::move(cells)) {
  const auto& j = src_.shape();
  const auto& c = src_.base();
  if (!(j == tgt_.shape()) || !(c == tgt_.base()))
    throw BoundaryMismatch("LaxTransformation: source and target live over different shapes");
  if (components_.size() != j.num_objects() || cells_.size() != j.num_arrows())
    throw ValidationError("LaxTransformation: wrong number of components or cells");
  for (std::uint32_t i = 0; i < j.num_objects(); ++i)
    if (!(components_[i].src() == src_.at(i)) || !(components_[i].tgt() == tgt_.at(i)))
      throw BoundaryMismatch("LaxTransformation: component " + j.object_name(i) +
                             " has wrong boundary");
  for (std::uint32_t u = 0; u < j.num_arrows(); ++u) {
    const auto& ki = components_[j.src(u)];
    const auto& kj = components_[j.tgt(u)];
    if (!(cells_[u].src() == expected_cell_src(tgt_, ki, u)) ||
        !(cells_[u].tgt() == expected_cell_tgt(src_, kj, u).span))
      throw BoundaryMismatch("LaxTransformation: cell at " + j.arrow(u).name +
                             " has wrong boundary");
    if (j.is_identity(u) && !c.is_identity(cells_[u].witness()))
      throw ValidationError("LaxTransformation: cell at an identity is not the identity");
  }
  for (auto u : j.non_identity_arrows())
    for (auto v : j.non_identity_arrows()) {
      const auto vu = j.compose(v, u);
      if (vu < 0) continue;
      const auto i = j.src(u), jj = j.tgt(u);
      const auto fu = gamma_arrow(src_, u), fv = gamma_arrow(src_, v);
      const auto gu = gamma_arrow(tgt_, u), gv = gamma_arrow(tgt_, v);
      const auto& kk = components_[j.tgt(v)];
      auto lhs = horizontal_compose(c, identity_cell(c, gv), cells_[u]);
      lhs = vertical_compose(c, associator(c, fu, components_[jj], gv), lhs);
      lhs = vertical_compose(c, horizontal_compose(c, cells_[v], identity_cell(c, fu)), lhs);
      lhs = vertical_compose(c, associator_inverse(c, fu, fv, kk), lhs);
      auto rhs = vertical_compose(c, cells_[static_cast<std::uint32_t>(vu)],
                                  associator(c, components_[i], gu, gv));
      if (!(lhs == rhs))
        throw ValidationError("LaxTransformation: coherence fails for " + j.arrow(v).name + "∘" +
                              j.arrow(u).name);
    }
}

bool LaxTransformation::is_strong() const {
  for (const auto& k : cells_)
    if (!is_invertible(base(), k)) return false;
  return true;
}

bool modification_holds_at(const LaxTransformation& src, const LaxTransformation& tgt,
                           const TwoCell& xi_i, const TwoCell& xi_j, std::uint32_t u) {
  const auto& c = src.base();
  auto lhs = vertical_compose(
      c, tgt.cell(u), horizontal_compose(c, identity_cell(c, gamma_arrow(src.tgt(), u)), xi_i));
  auto rhs = vertical_compose(
      c, horizontal_compose(c, xi_j, identity_cell(c, gamma_arrow(src.src(), u))), src.cell(u));
  return lhs.witness() == rhs.witness();
}

bool modification_holds(const LaxTransformation& src, const LaxTransformation& tgt,
                        const std::vector<TwoCell>& comps) {
  const auto& j = src.shape();
  if (!(src.src() == tgt.src()) || !(src.tgt() == tgt.tgt())) return false;
  if (comps.size() != j.num_objects()) return false;
  for (std::uint32_t i = 0; i < j.num_objects(); ++i)
    if (!(comps[i].src() == src.component(i)) || !(comps[i].tgt() == tgt.component(i)))
      return false;
  for (auto u : j.non_identity_arrows())
    if (!modification_holds_at(src, tgt, comps[j.src(u)], comps[j.tgt(u)], u)) return false;
  return true;
}

Modification::Modification(LaxTransformation src, LaxTransformation tgt, std::vector<TwoCell> comps)
    : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {
  if (!(src_.src() == tgt_.src()) || !(src_.tgt() == tgt_.tgt()))
    throw BoundaryMismatch("Modification: transformations have different boundaries");
  if (comps_.size() != src_.shape().num_objects())
    throw ValidationError("Modification: one component per object");
  for (std::uint32_t i = 0; i < comps_.size(); ++i)
    if (!(comps_[i].src() == src_.component(i)) || !(comps_[i].tgt() == tgt_.component(i)))
      throw BoundaryMismatch("Modification: component has wrong boundary");
  if (!modification_holds(src_, tgt_, comps_))
    throw ValidationError("Modification: modification equation fails");
}

bool Modification::is_invertible() const {
  for (const auto& x : comps_)
    if (!spanvk::is_invertible(src_.base(), x)) return false;
  return true;
}

Modification identity_modification(const LaxTransformation& k) {
  std::vector<TwoCell> comps;
  for (const auto& s : k.components()) comps.push_back(identity_cell(k.base(), s));
  return Modification(k, k, std::move(comps));
}

Modification vertical_compose(const Modification& b, const Modification& a) {
  if (!(a.tgt() == b.src())) throw BoundaryMismatch("vertical_compose: modifications do not meet");
  std::vector<TwoCell> comps;
  for (std::uint32_t i = 0; i < a.comps().size(); ++i)
    comps.push_back(vertical_compose(a.src().base(), b.at(i), a.at(i)));
  return Modification(a.src(), b.tgt(), std::move(comps));
}

Modification inverse(const Modification& m) {
  std::vector<TwoCell> comps;
  for (const auto& x : m.comps()) comps.push_back(inverse(m.src().base(), x));
  return Modification(m.tgt(), m.src(), std::move(comps));
}

LaxTransformation span_of_nats_to_lax(const NatTrans& phi, const NatTrans& psi) {
  if (!(phi.src() == psi.src()))
    throw BoundaryMismatch("span_of_nats_to_lax: legs have different carriers");
  const auto& h = phi.src();
  const auto& f = phi.tgt();
  const auto& g = psi.tgt();
  const auto& j = h.shape();
  const auto& c = h.base();
  std::vector<Span> comps;
  for (std::uint32_t i = 0; i < j.num_objects(); ++i) comps.push_back({phi.at(i), psi.at(i)});
  std::vector<TwoCell> cells;
  for (std::uint32_t u = 0; u < j.num_arrows(); ++u) {
    const auto i = j.src(u), jj = j.tgt(u);
    auto to = expected_cell_tgt(f, comps[jj], u);
    auto w = c.pullback_mediator(to.pb, phi.at(i), h.arrow(u));
    cells.emplace_back(c, expected_cell_src(g, comps[i], u), to.span, w);
  }
  return LaxTransformation(f, g, std::move(comps), std::move(cells));
}

LaxTransformation span_of_nats_to_lax(const SpanOfNats& s) {
  return span_of_nats_to_lax(s.phi, s.psi);
}

SpanOfNats lax_to_span_of_nats(const LaxTransformation& k) {
  const auto& j = k.shape();
  const auto& c = k.base();
  std::vector<Object> objs;
  std::vector<Morphism> lefts, rights, arrows;
  for (const auto& s : k.components()) {
    objs.push_back(s.carrier());
    lefts.push_back(s.left);
    rights.push_back(s.right);
  }
  for (auto u : j.non_identity_arrows()) {
    auto to = expected_cell_tgt(k.src(), k.component(j.tgt(u)), u);
    arrows.push_back(c.compose(to.pb.p2, k.cell(u).witness()));
  }
  try {
    Diagram h(j, c, std::move(objs), arrows);
    NatTrans phi(h, k.src(), std::move(lefts));
    NatTrans psi(h, k.tgt(), std::move(rights));
    return {h, phi, psi};
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("lax_to_span_of_nats: malformed coherence data: ") + e.what());
  }
}

PseudoCocone::PseudoCocone(NatTrans phi, Cocone psi) : phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!(phi_.src() == psi_.diagram()))
    throw BoundaryMismatch("PseudoCocone: phi and psi have different carriers");
  if (!is_cartesian(phi_)) throw ValidationError("PseudoCocone: phi is not cartesian");
}

LaxTransformation PseudoCocone::as_lax() const { return span_of_nats_to_lax(phi_, psi_.as_nat()); }

bool pseudo_cocone_check(const NatTrans& phi, const Cocone& psi) {
  const bool cart = is_cartesian(phi);
  const bool strong = span_of_nats_to_lax(phi, psi.as_nat()).is_strong();
  if (cart != strong) throw Error("pseudo_cocone_check: cartesian and strong disagree");
  return cart;
}

bool pseudo_cocone_check(const PseudoCocone& pc) { return pseudo_cocone_check(pc.phi(), pc.psi()); }

LaxTransformation gamma_cocone(const Cocone& k) {
  return span_of_nats_to_lax(identity_nat(k.diagram()), k.as_nat());
}

PseudoCocone gamma_pseudo_cocone(const Cocone& k) {
  return PseudoCocone(identity_nat(k.diagram()), k);
}

LaxTransformation postcompose(const Span& h, const LaxTransformation& lam) {
  const auto& c = lam.base();
  const auto& j = lam.shape();
  if (!is_constant_at(lam.tgt(), h.src()))
    throw BoundaryMismatch("postcompose: transformation does not land in the source of the span");
  std::vector<Span> comps;
  for (const auto& s : lam.components()) comps.push_back(compose_spans(c, h, s));
  std::vector<TwoCell> cells;
  for (std::uint32_t u = 0; u < j.num_arrows(); ++u) {
    auto inner = horizontal_compose(c, identity_cell(c, h), lam.cell(u));
    cells.push_back(vertical_compose(
        c, associator(c, gamma_arrow(lam.src(), u), lam.component(j.tgt(u)), h), inner));
  }
  return LaxTransformation(lam.src(), Diagram::constant(j, c, h.tgt()), std::move(comps),
                           std::move(cells));
}

Modification whisker(const TwoCell& xi, const Cocone& k) {
  if (!(xi.src().src() == k.apex())) throw BoundaryMismatch("whisker: span does not start at the apex");
  const auto& c = k.base();
  auto gk = gamma_cocone(k);
  std::vector<TwoCell> comps;
  for (const auto& s : gk.components())
    comps.push_back(horizontal_compose(c, xi, identity_cell(c, s)));
  return Modification(postcompose(xi.src(), gk), postcompose(xi.tgt(), gk), std::move(comps));
}

PulledBackNat pullback_along_span(const Cocone& k, const Span& h) {
  if (!(h.src() == k.apex())) throw BoundaryMismatch("pullback_along_span: span does not start at the apex");
  return pullback_nat(k.as_nat(), constant_nat(k.diagram().shape(), k.base(), h.left));
}

NatTrans modification_to_cartesian_data(const Cocone& k, const Span& h, const Span& h2,
                                        const Modification& m) {
  const auto& c = k.base();
  auto gk = gamma_cocone(k);
  if (!(m.src() == postcompose(h, gk)) || !(m.tgt() == postcompose(h2, gk)))
    throw BoundaryMismatch("modification_to_cartesian_data: modification has wrong boundary");
  auto p = pullback_along_span(k, h);
  auto q = pullback_along_span(k, h2);
  std::vector<Morphism> comps;
  for (const auto& x : m.comps()) comps.push_back(x.witness());
  NatTrans xi(p.P, q.P, std::move(comps));
  for (std::uint32_t i = 0; i < xi.comps().size(); ++i) {
    if (!(c.compose(q.p1.at(i), xi.at(i)) == p.p1.at(i)) ||
        !(c.compose(h2.right, c.compose(q.p2.at(i), xi.at(i))) == c.compose(h.right, p.p2.at(i))))
      throw ValidationError("modification_to_cartesian_data: projection equations fail");
  }
  return xi;
}

}  // namespace spanvk
