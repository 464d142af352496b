#include "spanvk/gallery.hpp"

#include "spanvk/format.hpp"

namespace spanvk {

bool ExampleReport::as_expected() const {
  for (const auto& c : claims)
    if (!c.as_expected()) return false;
  return true;
}

namespace {

Object arrow_object(const BaseCat& c, const FinSet& circles, const FinSet& stars,
                    std::vector<std::uint32_t> img) {
  return c.object({circles, stars}, {FinFn(circles, stars, std::move(img))});
}

std::size_t automorphisms(const BaseCat& c, const Span& s) {
  std::size_t n = 0;
  for (const auto& z : two_cells(c, s, s)) n += is_invertible(c, z);
  return n;
}

// the cocone of spans (s, t) under Γm, Γn with the chosen witness
// w : s ∘ Γm => t ∘ Γn, rewritten as a cartesian pair (φ, ψ)
PseudoCocone witness_cocone(const BaseCat& c, const Cocone& k, const Span& s, const Span& t,
                            const SpanComposite& sc, const SpanComposite& tc, const TwoCell& w) {
  const auto& f = k.diagram();
  const auto j = f.shape();
  auto h = Diagram::from_generators(
      j, c, {sc.span.carrier(), s.carrier(), t.carrier()},
      {{j.arrow_index("f"), sc.pb.p2}, {j.arrow_index("g"), c.compose(tc.pb.p2, w.witness())}});
  NatTrans phi(h, f, {sc.span.left, s.left, t.left});
  Cocone psi(h, s.tgt(), {sc.span.right, s.right, t.right});
  return PseudoCocone(phi, psi);
}

}  // namespace

ExampleReport run_counterexample_sp() {
  const BaseCat c = BaseCat::arrows();
  ExampleReport r;
  r.name = "counterexample";
  r.base = c;
  r.title = "two different mediating spans to the same cocone of spans";

  FinSet none, star{"*"}, stars{"*1", "*2"}, b{"b"}, cc{"c"}, o{"o"};
  auto A = arrow_object(c, none, star, {});
  auto B = arrow_object(c, b, star, {0});
  auto C = arrow_object(c, cc, star, {0});
  auto m = c.morphism(A, B, {FinFn(none, b, {}), FinFn::identity(star)});
  auto n = c.morphism(A, C, {FinFn(none, cc, {}), FinFn::identity(star)});
  auto po = c.pushout(m, n);
  auto k = square_cocone(c, m, n, po.inB, po.inC);
  const auto& D = po.obj;

  auto T = arrow_object(c, o, star, {0});
  auto Bp = arrow_object(c, b, stars, {0});
  auto Cp = arrow_object(c, cc, stars, {0});
  Span s{c.morphism(Bp, B, {FinFn::identity(b), FinFn(stars, star, {0, 0})}),
         c.morphism(Bp, T, {FinFn(b, o, {0}), FinFn(stars, star, {0, 0})})};
  Span t{c.morphism(Cp, C, {FinFn::identity(cc), FinFn(stars, star, {0, 0})}),
         c.morphism(Cp, T, {FinFn(cc, o, {0}), FinFn(stars, star, {0, 0})})};
  auto sc = compose_spans_detail(c, s, graph(c, m));
  auto tc = compose_spans_detail(c, t, graph(c, n));

  r.objects.push_back("base category: " + c.name());
  r.objects.push_back("A = " + format_object(A));
  r.objects.push_back("B = " + format_object(B));
  r.objects.push_back("C = " + format_object(C));
  r.objects.push_back("D = " + format_object(D) + "  (pushout of B <- A -> C)");
  r.objects.push_back("T = " + format_object(T));
  r.objects.push_back("s : B -> T\n" + format_span(s, "  "));
  r.objects.push_back("t : C -> T\n" + format_span(t, "  "));
  r.objects.push_back("d = s . Gm, equal to t . Gn up to a carrier bijection\n" + format_span(sc.span, "  "));

  auto square = vk_square_check(c, m, n, po.inB, po.inC, 2);
  r.claims.push_back({"the pushout square is VK (fiber bound 2)", true, square.ok()});

  auto d_auts = automorphisms(c, sc.span);
  r.claims.push_back({"d has a non-identity automorphism", true, d_auts > 1});

  // the witnesses s . Gm => t . Gn: identity and swap on the stars
  std::vector<TwoCell> witnesses;
  for (const auto& w : two_cells(c, sc.span, tc.span))
    if (is_invertible(c, w)) witnesses.push_back(w);
  r.claims.push_back({"s . Gm and t . Gn are equal in Sp(C) via exactly two bijections", true,
                      witnesses.size() == 2});

  std::vector<MediatingCell> cells;
  for (const auto& w : witnesses) cells.push_back(find_mediating_cell(k, witness_cocone(c, k, s, t, sc, tc, w)));
  bool all_mediate = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& h = cells[i].span;
    bool ok = cells[i].invertible() && abstract_equal(c, compose_spans(c, h, graph(c, po.inB)), s) &&
              abstract_equal(c, compose_spans(c, h, graph(c, po.inC)), t);
    all_mediate = all_mediate && ok;
    r.objects.push_back("mediating span " + std::to_string(i + 1) + " : D -> T\n" + format_span(h, "  "));
  }
  r.claims.push_back({"both mediating spans compose to s and t up to carrier bijection", true, all_mediate});
  bool distinct = cells.size() == 2 && !abstract_equal(c, cells[0].span, cells[1].span);
  r.claims.push_back({"the two mediating spans are distinct in Sp(C)", true, distinct});
  bool no_cell = true;
  if (cells.size() == 2)
    for (const auto& z : two_cells(c, cells[0].span, cells[1].span)) no_cell = no_cell && !is_invertible(c, z);
  r.claims.push_back({"no invertible 2-cell relates the two mediating spans", true, no_cell});

  // brute force over spans D -> T with carriers of size <= 2 per component
  std::size_t found = 0;
  for (const auto& h : spans_between(c, D, T, 2))
    if (abstract_equal(c, compose_spans(c, h, graph(c, po.inB)), s) &&
        abstract_equal(c, compose_spans(c, h, graph(c, po.inC)), t))
      ++found;
  r.claims.push_back({"search finds exactly 2 mediating spans", true, found == 2});
  bool sp_pushout = found == 1;
  r.claims.push_back({"the graph of the square is a pushout in Sp(C)", false, sp_pushout});

  auto bi = verify_bicolimit_bounded(k);
  r.claims.push_back({"the graph of the square is a bicolimit in Span", true, bi.ok()});
  for (const auto* v : {&bi.ess_surj, &bi.universality})
    if (v->witness) r.witnesses.push_back(*v->witness);

  r.notes.push_back("element labels are chosen for this reconstruction; any labelling with the same shapes behaves the same");
  r.summary = std::string("VK square in C: ") + (square.ok() ? "pass" : "fail") +
              "; pushout in Sp(C): " + (sp_pushout ? "pass" : "fail") + " (" + std::to_string(found) +
              " mediating spans); bicolimit in Span: " + (bi.ok() ? "pass" : "fail");
  return r;
}

ExampleReport run_strict_initial() {
  const BaseCat c = BaseCat::finsets();
  ExampleReport r;
  r.name = "strict-initial";
  r.title = "a strict initial object is a VK cocone over the empty diagram";
  Cocone k(Diagram(FinCat::empty(), c, {}, {}), c.initial(), {});
  r.objects.push_back("apex = " + format_object(k.apex()));

  auto v = is_vk_bounded(k, 3, 3);
  r.claims.push_back({"VK (size bound 3, fiber bound 3)", true, v.ok()});
  if (v.witness) r.witnesses.push_back(*v.witness);

  bool empty_pullbacks = true;
  for (const auto& x : c.objects_up_to_iso(3))
    for (const auto& g : c.objects_over(x, 2))
      empty_pullbacks = empty_pullbacks && c.chosen_pullback(c.from_initial(x), g).apex.is_empty();
  r.claims.push_back({"every pullback of 0 -> X is empty (|X| <= 3)", true, empty_pullbacks});

  auto ins = enumerate_cartesian_into(k.diagram(), 3);
  bool only_empty = true;
  for (const auto& e : ins) only_empty = only_empty && e.E.objects().empty();
  r.claims.push_back({"the converse sweep sees only the empty cartesian input", true, only_empty});
  return r;
}

ExampleReport run_extensive_coproduct(const Object& a, const Object& b) {
  const BaseCat c = BaseCat::finsets();
  ExampleReport r;
  r.name = "extensive-coproduct";
  r.title = "a coproduct in an extensive category is VK";
  r.objects.push_back("A = " + format_object(a));
  r.objects.push_back("B = " + format_object(b));
  auto e = extensivity_check(c, a, b, 3);
  auto g = gamma_preserves_coproduct_check(c, a, b, 3);
  auto v = is_vk_bounded(coproduct_cocone(c, a, b), 3, 3);
  r.claims.push_back({"extensive at A + B (bound 3)", true, e.ok()});
  r.claims.push_back({"graphs of the injections form a coproduct of spans (bound 3)", true, g.ok()});
  r.claims.push_back({"the coproduct cocone is VK (bound 3)", true, v.ok()});
  r.claims.push_back({"the three checks agree", true, e.ok() == g.ok() && g.ok() == v.ok()});
  for (const auto* x : {&e, &g, &v})
    if (x->witness) r.witnesses.push_back(*x->witness);
  return r;
}

ExampleReport run_kernel_pair(const Morphism& p) {
  const BaseCat c = BaseCat::finsets();
  if (!c.is_epi(p)) throw ValidationError("run_kernel_pair: p is not epi");
  ExampleReport r;
  r.name = "kernel-pair";
  r.title = "an epi is the VK coequalizer of its kernel pair";
  r.objects.push_back("p = " + format_morphism(p));
  r.objects.push_back("kernel pair cocone\n" + format_cocone(kernel_pair_cocone(c, p), "  "));
  auto v = barr_kock_check(c, p, 2, 2);
  r.claims.push_back({"VK for kernel-pair inputs (fiber bound 2)", true, v.ok()});
  if (v.witness) r.witnesses.push_back(*v.witness);
  return r;
}

ExampleReport run_non_vk_pushout() {
  const BaseCat c = BaseCat::finsets();
  ExampleReport r;
  r.name = "non-vk-pushout";
  r.title = "the pushout of {*} <- {0,1} -> {*} in FinSet is not VK";
  FinSet two{"0", "1"}, one{"*"};
  auto f = c.morphism(FinFn(two, one, {0, 0}));
  auto po = c.pushout(f, f);
  auto k = square_cocone(c, f, f, po.inB, po.inC);
  r.objects.push_back(format_cocone(k));

  auto v = is_vk_bounded(k, 3, 2);
  r.claims.push_back({"VK (size bound 3, fiber bound 2)", false, v.ok()});
  bool twisted = v.witness && v.witness->instance && revalidates(*v.witness);
  if (twisted) {
    auto in = vk_instance_check(*v.witness->instance);
    twisted = in.i_holds && !in.ii_holds;
  }
  r.claims.push_back({"the witness is a twisted cube: colimit on top, a face not a pullback", true, twisted});
  r.claims.push_back({"universality alone holds (size bound 3)", true, universality_check(k, 3).ok()});
  auto bi = verify_bicolimit_bounded(k);
  r.claims.push_back({"the graph is a bicolimit in Span", false, bi.ok()});
  if (v.witness) r.witnesses.push_back(*v.witness);
  return r;
}

std::vector<std::string> gallery_names() {
  return {"counterexample", "strict-initial", "extensive-coproduct", "kernel-pair", "non-vk-pushout"};
}

ExampleReport run_gallery(const std::string& name) {
  const BaseCat c = BaseCat::finsets();
  if (name == "counterexample") return run_counterexample_sp();
  if (name == "strict-initial") return run_strict_initial();
  if (name == "extensive-coproduct") return run_extensive_coproduct(c.object(FinSet{"a"}), c.object(FinSet{"b"}));
  if (name == "kernel-pair")
    return run_kernel_pair(c.morphism(FinFn(FinSet::numbered(4), FinSet{"x", "y"}, {0, 0, 1, 1})));
  if (name == "non-vk-pushout") return run_non_vk_pushout();
  throw Error("unknown gallery example: " + name);
}

}  // namespace spanvk
