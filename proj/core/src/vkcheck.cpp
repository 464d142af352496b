#include "spanvk/vkcheck.hpp"

#include <map>

namespace spanvk {

VkInstance make_vk_instance(Cocone kappa, NatTrans tau, Morphism x, Cocone beta) {
  const auto& c = kappa.base();
  if (!(tau.tgt() == kappa.diagram()) || !(beta.diagram() == tau.src()))
    throw ValidationError("VkInstance: tau does not connect the two diagrams");
  if (!(x.src() == beta.apex()) || !(x.tgt() == kappa.apex()))
    throw ValidationError("VkInstance: x does not connect the apexes");
  if (!is_cartesian(tau)) throw ValidationError("VkInstance: tau is not cartesian");
  for (std::uint32_t i = 0; i < kappa.legs().size(); ++i)
    if (!(c.compose(kappa.leg(i), tau.at(i)) == c.compose(x, beta.leg(i))))
      throw ValidationError("VkInstance: κτ and Δx β differ");
  return {std::move(kappa), std::move(tau), std::move(x), std::move(beta)};
}

namespace {

std::vector<std::uint32_t> bad_squares(const VkInstance& inst) {
  const auto& c = inst.kappa.base();
  std::vector<std::uint32_t> bad;
  for (std::uint32_t i = 0; i < inst.kappa.legs().size(); ++i)
    if (!c.is_pullback_square(inst.beta.leg(i), inst.tau.at(i), inst.x, inst.kappa.leg(i)))
      bad.push_back(i);
  return bad;
}

Verdict failed(const std::string& kind, const std::string& detail, VkInstance inst,
               std::vector<std::uint32_t> bad = {}) {
  Verdict v;
  v.status = Status::fail;
  v.witness = Witness{kind, detail, std::move(inst), std::move(bad), {}};
  return v;
}

}  // namespace

VkInstanceResult vk_instance_check(const VkInstance& inst) {
  VkInstanceResult r;
  r.i_holds = is_colimit(inst.beta);
  r.bad_squares = bad_squares(inst);
  r.ii_holds = r.bad_squares.empty();
  return r;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::pass_up_to_bound: return "pass-up-to-bound";
  }
  return "?";
}

bool revalidates(const Witness& w) {
  if (!w.instance) return false;
  try {
    const auto& i = *w.instance;
    auto fresh = make_vk_instance(i.kappa, i.tau, i.x, i.beta);
    auto r = vk_instance_check(fresh);
    return r.i_holds != r.ii_holds;
  } catch (const Error&) {
    return false;
  }
}

Verdict colimit_check(const Cocone& k) {
  if (is_colimit(k)) {
    Verdict v;
    v.checked = 1;
    return v;
  }
  const auto& c = k.base();
  auto v = failed("not-a-colimit", "the cocone itself is not a colimit",
                  {k, identity_nat(k.diagram()), c.identity(k.apex()), k});
  v.checked = 1;
  return v;
}

Verdict universality_check(const Cocone& k, std::size_t size_bound) {
  Verdict v;
  v.status = Status::pass_up_to_bound;
  v.size_bound = size_bound;
  for (const auto& x : k.base().objects_over(k.apex(), size_bound)) {
    ++v.checked;
    auto pb = pullback_cocone(k, x);
    if (!is_colimit(pb.beta)) {
      auto f = failed("universality", "pulling back along x does not give a colimit",
                      {k, pb.tau, x, pb.beta});
      f.size_bound = size_bound;
      f.checked = v.checked;
      return f;
    }
  }
  return v;
}

Verdict converse_universality_check(const Cocone& k, std::size_t fiber_bound,
                                    const CartesianFilter& filter) {
  Verdict v;
  v.status = Status::pass_up_to_bound;
  v.fiber_bound = fiber_bound;
  for (const auto& co : enumerate_cartesian_into(k.diagram(), fiber_bound, filter)) {
    ++v.checked;
    auto beta = colimit(co.E);
    auto x = colimit_mediator(beta, precompose(k, co.tau));
    VkInstance inst{k, co.tau, x, beta};
    auto bad = bad_squares(inst);
    if (!bad.empty()) {
      auto f = failed("converse-universality",
                      "the colimit of a cartesian transformation has non-pullback squares",
                      std::move(inst), std::move(bad));
      f.fiber_bound = fiber_bound;
      f.checked = v.checked;
      return f;
    }
  }
  return v;
}

Verdict is_vk_bounded(const Cocone& k, std::size_t size_bound, std::size_t fiber_bound,
                      const CartesianFilter& filter) {
  std::size_t checked = 0;
  auto finish = [&](Verdict v) {
    checked += v.checked;
    v.checked = checked;
    v.size_bound = size_bound;
    v.fiber_bound = fiber_bound;
    return v;
  };
  auto col = colimit_check(k);
  if (!col.ok()) return finish(col);
  checked += col.checked;
  auto uni = universality_check(k, size_bound);
  if (!uni.ok()) return finish(uni);
  checked += uni.checked;
  auto conv = converse_universality_check(k, fiber_bound, filter);
  if (!conv.ok()) return finish(conv);
  Verdict v;
  v.status = Status::pass_up_to_bound;
  return finish(v);
}

Cocone square_cocone(const BaseCat& c, const Morphism& f, const Morphism& g, const Morphism& inB,
                     const Morphism& inC) {
  const auto j = FinCat::span();
  auto d = Diagram::from_generators(j, c, {f.src(), f.tgt(), g.tgt()},
                                    {{j.arrow_index("f"), f}, {j.arrow_index("g"), g}});
  return Cocone(d, inB.tgt(), {c.compose(inB, f), inB, inC});
}

Verdict vk_square_check(const BaseCat& c, const Morphism& f, const Morphism& g, const Morphism& inB,
                        const Morphism& inC, std::size_t fiber_bound, std::size_t size_bound) {
  if (!c.is_pushout_square(f, g, inB, inC))
    throw ValidationError("vk_square_check: the square is not a pushout");
  return is_vk_bounded(square_cocone(c, f, g, inB, inC), size_bound, fiber_bound);
}

Cocone coproduct_cocone(const BaseCat& c, const Object& a, const Object& b) {
  auto cp = c.coproduct({a, b});
  return Cocone(Diagram(FinCat::discrete(2), c, {a, b}, {}), cp.obj, cp.injections);
}

Verdict extensivity_check(const BaseCat& c, const Object& a, const Object& b, std::size_t bound) {
  auto k = coproduct_cocone(c, a, b);
  const auto& i1 = k.leg(0);
  const auto& i2 = k.leg(1);
  const auto j = FinCat::discrete(2);
  Verdict v;
  v.status = Status::pass_up_to_bound;
  v.size_bound = bound;
  for (const auto& z : c.objects_over(k.apex(), bound)) {
    auto pa = c.chosen_pullback(z, i1);
    auto pb = c.chosen_pullback(z, i2);
    auto over_a = c.objects_over(pa.apex, bound);
    auto over_b = c.objects_over(pb.apex, bound);
    for (const auto& ma : over_a)
      for (const auto& mb : over_b) {
        ++v.checked;
        auto m = c.compose(pa.p1, ma), x = c.compose(pa.p2, ma);
        auto n = c.compose(pb.p1, mb), y = c.compose(pb.p2, mb);
        Diagram top(j, c, {m.src(), n.src()}, {});
        Cocone row(top, z.src(), {m, n});
        const bool coprod = is_colimit(row);
        const bool pbs = c.is_pullback_square(m, x, z, i1) && c.is_pullback_square(n, y, z, i2);
        if (coprod != pbs) {
          auto f = failed("extensivity",
                          coprod ? "top row is a coproduct but a square is not a pullback"
                                 : "both squares are pullbacks but the top row is not a coproduct",
                          {k, NatTrans(top, k.diagram(), {x, y}), z, row});
          f.size_bound = bound;
          f.checked = v.checked;
          return f;
        }
      }
  }
  return v;
}

Span coproduct_mediator(const BaseCat& c, const Span& s, const Span& t) {
  if (!(s.tgt() == t.tgt())) throw BoundaryMismatch("coproduct_mediator: spans have different targets");
  auto ab = c.coproduct({s.src(), t.src()});
  auto q = c.coproduct({s.carrier(), t.carrier()});
  BaseColim qc{q.obj, q.injections};
  auto left = c.colimit_mediator(qc, {c.compose(ab.injections[0], s.left),
                                      c.compose(ab.injections[1], t.left)}, ab.obj);
  auto right = c.colimit_mediator(qc, {s.right, t.right}, s.tgt());
  return {left, right};
}

Verdict gamma_preserves_coproduct_check(const BaseCat& c, const Object& a, const Object& b,
                                        std::size_t bound, std::size_t target_bound) {
  auto k = coproduct_cocone(c, a, b);
  auto g1 = graph(c, k.leg(0));
  auto g2 = graph(c, k.leg(1));
  Verdict v;
  v.status = Status::pass_up_to_bound;
  v.size_bound = bound;
  auto fail = [&](const std::string& kind, const std::string& detail, std::vector<Span> spans) {
    Verdict f;
    f.status = Status::fail;
    f.size_bound = bound;
    f.checked = v.checked;
    f.witness = Witness{kind, detail, std::nullopt, {}, std::move(spans)};
    return f;
  };
  for (const auto& t : c.objects_up_to_iso(target_bound)) {
    auto left = spans_between(c, a, t, bound);
    auto right = spans_between(c, b, t, bound);
    for (const auto& s1 : left)
      for (const auto& s2 : right) {
        ++v.checked;
        auto m = coproduct_mediator(c, s1, s2);
        if (!abstract_equal(c, compose_spans(c, m, g1), s1) ||
            !abstract_equal(c, compose_spans(c, m, g2), s2))
          return fail("coproduct-mediator", "the constructed mediator does not restrict to the pair",
                      {s1, s2, m});
      }
    IsoDeduper d1(span_fixed_sorts(c)), d2(span_fixed_sorts(c));
    std::map<std::pair<std::size_t, std::size_t>, Span> seen;
    for (const auto& m : spans_between(c, k.apex(), t, bound)) {
      ++v.checked;
      std::size_t i = 0, j = 0;
      d1.add(span_structure(c, compose_spans(c, m, g1)), &i);
      d2.add(span_structure(c, compose_spans(c, m, g2)), &j);
      auto [it, fresh] = seen.try_emplace({i, j}, m);
      if (!fresh)
        return fail("non-unique-mediator", "two abstractly different spans restrict to the same pair",
                    {it->second, m});
    }
  }
  return v;
}

Cocone kernel_pair_cocone(const BaseCat& c, const Morphism& p) {
  auto kp = c.chosen_pullback(p, p);
  const auto j = FinCat::parallel_pair();
  auto d = Diagram::from_generators(j, c, {kp.apex, p.src()},
                                    {{j.arrow_index("u"), kp.p1}, {j.arrow_index("v"), kp.p2}});
  return Cocone(d, p.tgt(), {c.compose(p, kp.p1), p});
}

Verdict barr_kock_check(const BaseCat& c, const Morphism& p, std::size_t fiber_bound,
                        std::size_t size_bound) {
  if (!c.is_epi(p)) throw ValidationError("barr_kock_check: p is not epi");
  const auto j = FinCat::parallel_pair();
  const auto u = j.arrow_index("u"), v = j.arrow_index("v");
  CartesianFilter kernel_pairs = [&](const Diagram& e, const NatTrans&) {
    auto q = c.coequalizer(e.arrow(u), e.arrow(v)).q;
    return c.is_pullback_square(e.arrow(u), e.arrow(v), q, q);
  };
  return is_vk_bounded(kernel_pair_cocone(c, p), size_bound, fiber_bound, kernel_pairs);
}

}  // namespace spanvk
