#include "spanvk/bicolim.hpp"

namespace spanvk {

bool is_universal_span(const Cocone& k, const Span& h) {
  auto p = pullback_along_span(k, h);
  return is_colimit(Cocone(p.P, h.carrier(), p.p2.comps()));
}

std::vector<Modification> modifications(const Cocone& k, const Span& h, const Span& h2) {
  const auto& c = k.base();
  const auto& j = k.diagram().shape();
  const auto n = static_cast<std::uint32_t>(j.num_objects());
  auto gk = gamma_cocone(k);
  auto src = postcompose(h, gk);
  auto tgt = postcompose(h2, gk);
  std::vector<std::vector<TwoCell>> cand(n);
  for (std::uint32_t i = 0; i < n; ++i) cand[i] = two_cells(c, src.component(i), tgt.component(i));
  // arrows whose equation can be checked once object i is assigned
  std::vector<std::vector<std::uint32_t>> ready(n);
  for (auto u : j.non_identity_arrows()) ready[std::max(j.src(u), j.tgt(u))].push_back(u);

  std::vector<Modification> out;
  std::vector<TwoCell> cur(n);
  auto rec = [&](auto&& self, std::uint32_t i) -> void {
    if (i == n) {
      out.emplace_back(src, tgt, cur);
      return;
    }
    for (const auto& x : cand[i]) {
      cur[i] = x;
      bool ok = true;
      for (auto u : ready[i])
        if (!modification_holds_at(src, tgt, cur[j.src(u)], cur[j.tgt(u)], u)) {
          ok = false;
          break;
        }
      if (ok) self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

bool same_components(const Modification& a, const Modification& b) {
  for (std::size_t i = 0; i < a.comps().size(); ++i)
    if (!(a.comps()[i].witness() == b.comps()[i].witness())) return false;
  return true;
}

Verdict span_failure(const Span& h, const Span& h2, std::size_t hits) {
  Verdict v;
  v.status = Status::fail;
  v.witness = Witness{"non-universal-span",
                      "a modification is the whiskering of " + std::to_string(hits) +
                          " 2-cells instead of exactly one",
                      std::nullopt,
                      {},
                      {h, h2}};
  return v;
}

Morphism to_terminal(const BaseCat& c, const Object& x) {
  auto ms = c.morphisms(x, c.terminal());
  return ms.front();
}

}  // namespace

Verdict universal_by_modifications(const Cocone& k, const Span& h, const std::vector<Span>& others) {
  const auto& c = k.base();
  Verdict v;
  v.status = Status::pass_up_to_bound;
  for (const auto& h2 : others) {
    std::vector<Modification> whiskered;
    for (const auto& xi : two_cells(c, h, h2)) whiskered.push_back(whisker(xi, k));
    for (const auto& m : modifications(k, h, h2)) {
      ++v.checked;
      std::size_t hits = 0;
      for (const auto& w : whiskered) hits += same_components(w, m);
      if (hits != 1) {
        auto f = span_failure(h, h2, hits);
        f.checked = v.checked;
        return f;
      }
    }
  }
  return v;
}

MediatingCell find_mediating_cell(const Cocone& k, const PseudoCocone& lam) {
  if (!(lam.diagram() == k.diagram()))
    throw BoundaryMismatch("find_mediating_cell: pseudo-cocone over a different diagram");
  const auto& c = k.base();
  const auto& phi = lam.phi();
  auto theta = colimit(lam.carrier_diagram());
  Span h{colimit_mediator(theta, precompose(k, phi)), colimit_mediator(theta, lam.psi())};
  auto src = lam.as_lax();
  auto tgt = postcompose(h, gamma_cocone(k));
  std::vector<TwoCell> comps;
  std::vector<std::uint32_t> bad;
  for (std::uint32_t i = 0; i < k.legs().size(); ++i) {
    auto to = compose_spans_detail(c, h, graph(c, k.leg(i)));
    auto w = c.pullback_mediator(to.pb, phi.at(i), theta.leg(i));
    if (!c.is_iso(w)) bad.push_back(i);
    comps.emplace_back(c, src.component(i), to.span, w);
  }
  return {h, Modification(src, tgt, std::move(comps)), std::move(bad)};
}

Verdict essential_uniqueness_check(const Cocone& k, const MediatingCell& c1, const MediatingCell& c2) {
  const auto& c = k.base();
  Verdict v;
  auto fail = [&](const std::string& detail) {
    v.status = Status::fail;
    v.witness = Witness{"essential-uniqueness", detail, std::nullopt, {}, {c1.span, c2.span}};
    return v;
  };
  if (!(c1.theta.src() == c2.theta.src()))
    return fail("the mediating cells are for different pseudo-cocones");
  if (!c1.theta.is_invertible() || !c2.theta.is_invertible())
    return fail("a mediating cell is not invertible");
  auto xi = vertical_compose(c2.theta, inverse(c1.theta));
  std::size_t hits = 0;
  for (const auto& z : two_cells(c, c1.span, c2.span)) {
    ++v.checked;
    if (is_invertible(c, z) && same_components(whisker(z, k), xi)) ++hits;
  }
  if (hits != 1)
    return fail(std::to_string(hits) + " invertible 2-cells compare the two mediating cells");
  return v;
}

BicolimReport verify_bicolimit_bounded(const Cocone& k, const BicolimBounds& b) {
  const auto& c = k.base();
  BicolimReport r;
  r.ess_surj.status = Status::pass_up_to_bound;
  r.ess_surj.fiber_bound = b.fiber_bound;
  for (const auto& co : enumerate_cartesian_into(k.diagram(), b.fiber_bound)) {
    auto colim = colimit(co.E);
    std::vector<Morphism> bangs;
    for (const auto& o : co.E.objects()) bangs.push_back(to_terminal(c, o));
    for (const auto& psi : {colim, Cocone(co.E, c.terminal(), bangs)}) {
      ++r.ess_surj.checked;
      auto mc = find_mediating_cell(k, PseudoCocone(co.tau, psi));
      r.mediating_cells.push_back(mc);
      if (!mc.invertible()) {
        r.ess_surj.status = Status::fail;
        r.ess_surj.witness = Witness{"mediating-cell", "a lateral face of the mediating cell is not a pullback",
                                     VkInstance{k, co.tau, mc.span.left, colim}, mc.bad_faces, {mc.span}};
        break;
      }
      if (!is_universal_span(k, mc.span)) {
        auto p = pullback_along_span(k, mc.span);
        r.ess_surj.status = Status::fail;
        r.ess_surj.witness =
            Witness{"non-universal-mediator", "the mediating span is not universal",
                    VkInstance{k, p.p1, mc.span.left, Cocone(p.P, mc.span.carrier(), p.p2.comps())},
                    {}, {mc.span}};
        break;
      }
    }
    if (!r.ess_surj.ok()) break;
  }

  r.universality.status = Status::pass_up_to_bound;
  r.universality.size_bound = b.span_bound;
  std::vector<Object> targets{c.terminal()};
  if (!(k.apex() == c.terminal())) targets.push_back(k.apex());
  for (const auto& d : targets) {
    auto spans = spans_between(c, k.apex(), d, b.span_bound);
    for (const auto& h : spans) {
      auto v = universal_by_modifications(k, h, spans);
      r.universality.checked += v.checked;
      r.spans.emplace_back(h, v.ok());
      if (!v.ok()) {
        r.universality.status = Status::fail;
        r.universality.witness = v.witness;
        return r;
      }
    }
  }
  return r;
}

}  // namespace spanvk
