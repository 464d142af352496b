#include "spanvk/span.hpp"

#include <numeric>

namespace spanvk {

Span make_span(const BaseCat& c, const Morphism& left, const Morphism& right) {
  if (!(left.src() == right.src())) throw BoundaryMismatch("span legs do not share a carrier");
  c.validate(left);
  c.validate(right);
  return {left, right};
}

Span identity_span(const BaseCat& c, const Object& x) { return {c.identity(x), c.identity(x)}; }

Span graph(const BaseCat& c, const Morphism& f) { return {c.identity(f.src()), f}; }

SpanComposite compose_spans_detail(const BaseCat& c, const Span& s2, const Span& s1) {
  if (!(s1.tgt() == s2.src())) throw BoundaryMismatch("compose_spans: spans are not composable");
  auto pb = c.chosen_pullback(s1.right, s2.left);
  return {{c.compose(s1.left, pb.p1), c.compose(s2.right, pb.p2)}, pb};
}

Span compose_spans(const BaseCat& c, const Span& s2, const Span& s1) {
  return compose_spans_detail(c, s2, s1).span;
}

TwoCell::TwoCell(const BaseCat& c, Span src, Span tgt, Morphism witness)
    : src_(std::move(src)), tgt_(std::move(tgt)), witness_(std::move(witness)) {
  if (!(src_.src() == tgt_.src()) || !(src_.tgt() == tgt_.tgt()))
    throw BoundaryMismatch("TwoCell: spans have different boundaries");
  if (!(witness_.src() == src_.carrier()) || !(witness_.tgt() == tgt_.carrier()))
    throw BoundaryMismatch("TwoCell: witness does not connect the carriers");
  c.validate(witness_);
  if (!(c.compose(tgt_.left, witness_) == src_.left) || !(c.compose(tgt_.right, witness_) == src_.right))
    throw ValidationError("TwoCell: witness does not commute with the legs");
}

TwoCell identity_cell(const BaseCat& c, const Span& s) {
  return TwoCell(c, s, s, c.identity(s.carrier()));
}

TwoCell vertical_compose(const BaseCat& c, const TwoCell& b, const TwoCell& a) {
  if (!(a.tgt() == b.src())) throw BoundaryMismatch("vertical_compose: cells do not meet");
  return TwoCell(c, a.src(), b.tgt(), c.compose(b.witness(), a.witness()));
}

TwoCell horizontal_compose(const BaseCat& c, const TwoCell& d, const TwoCell& cc) {
  auto from = compose_spans_detail(c, d.src(), cc.src());
  auto to = compose_spans_detail(c, d.tgt(), cc.tgt());
  auto w = c.pullback_mediator(to.pb, c.compose(cc.witness(), from.pb.p1),
                               c.compose(d.witness(), from.pb.p2));
  return TwoCell(c, from.span, to.span, w);
}

bool is_invertible(const BaseCat& c, const TwoCell& a) { return c.is_iso(a.witness()); }

TwoCell inverse(const BaseCat& c, const TwoCell& a) {
  return TwoCell(c, a.tgt(), a.src(), c.inverse(a.witness()));
}

namespace {

struct Bracketed {
  Span span;
  std::vector<Morphism> proj;  // carrier -> carriers of f, g, h
};

Bracketed left_nested(const BaseCat& c, const Span& f, const Span& g, const Span& h) {
  auto gf = compose_spans_detail(c, g, f);
  auto hgf = compose_spans_detail(c, h, gf.span);
  const auto& r1 = hgf.pb.p1;
  return {hgf.span, {c.compose(gf.pb.p1, r1), c.compose(gf.pb.p2, r1), hgf.pb.p2}};
}

Bracketed right_nested(const BaseCat& c, const Span& f, const Span& g, const Span& h) {
  auto hg = compose_spans_detail(c, h, g);
  auto hgf = compose_spans_detail(c, hg.span, f);
  const auto& t2 = hgf.pb.p2;
  return {hgf.span, {hgf.pb.p1, c.compose(hg.pb.p1, t2), c.compose(hg.pb.p2, t2)}};
}

}  // namespace

TwoCell associator(const BaseCat& c, const Span& f, const Span& g, const Span& h) {
  auto l = left_nested(c, f, g, h);
  auto r = right_nested(c, f, g, h);
  return TwoCell(c, l.span, r.span, c.factor_through(r.proj, l.proj));
}

TwoCell associator_inverse(const BaseCat& c, const Span& f, const Span& g, const Span& h) {
  auto l = left_nested(c, f, g, h);
  auto r = right_nested(c, f, g, h);
  return TwoCell(c, r.span, l.span, c.factor_through(l.proj, r.proj));
}

Structure span_structure(const BaseCat& c, const Span& s) {
  const auto n = static_cast<std::uint32_t>(c.shape().num_objects());
  Structure st = c.structure(s.carrier());
  auto add = [&](const Structure& o, std::uint32_t shift) {
    st.sort_sizes.insert(st.sort_sizes.end(), o.sort_sizes.begin(), o.sort_sizes.end());
    for (auto op : o.ops) {
      op.src += shift;
      op.tgt += shift;
      st.ops.push_back(std::move(op));
    }
  };
  add(c.structure(s.src()), n);
  add(c.structure(s.tgt()), 2 * n);
  for (std::uint32_t k = 0; k < n; ++k) {
    st.ops.push_back({k, n + k, s.left.at(k).images()});
    st.ops.push_back({k, 2 * n + k, s.right.at(k).images()});
  }
  return st;
}

std::vector<bool> span_fixed_sorts(const BaseCat& c) {
  const auto n = c.shape().num_objects();
  std::vector<bool> f(3 * n, true);
  for (std::size_t k = 0; k < n; ++k) f[k] = false;
  return f;
}

namespace {

HomOptions fixed_ends(const BaseCat& c, const Span& s, bool bijective) {
  const auto n = c.shape().num_objects();
  HomOptions o;
  o.bijective = bijective;
  o.fixed.resize(3 * n);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::vector<std::uint32_t> a(s.src().at(k).size()), b(s.tgt().at(k).size());
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    o.fixed[n + k] = std::move(a);
    o.fixed[2 * n + k] = std::move(b);
  }
  return o;
}

Morphism carrier_map(const BaseCat& c, const Span& s, const Span& t, const SortMaps& h) {
  std::vector<FinFn> comps;
  for (std::uint32_t k = 0; k < c.shape().num_objects(); ++k)
    comps.emplace_back(s.carrier().at(k), t.carrier().at(k), h[k]);
  return Morphism(s.carrier(), t.carrier(), std::move(comps));
}

}  // namespace

std::optional<Morphism> abstract_equal(const BaseCat& c, const Span& s, const Span& t) {
  if (!(s.src() == t.src()) || !(s.tgt() == t.tgt()))
    throw BoundaryMismatch("abstract_equal: spans have different boundaries");
  auto h = find_hom(span_structure(c, s), span_structure(c, t), fixed_ends(c, s, true));
  if (!h) return std::nullopt;
  return carrier_map(c, s, t, *h);
}

void for_each_two_cell(const BaseCat& c, const Span& s, const Span& t,
                       const std::function<bool(const TwoCell&)>& visit) {
  if (!(s.src() == t.src()) || !(s.tgt() == t.tgt()))
    throw BoundaryMismatch("two_cells: spans have different boundaries");
  for_each_hom(span_structure(c, s), span_structure(c, t), fixed_ends(c, s, false),
               [&](const SortMaps& h) { return visit(TwoCell(c, s, t, carrier_map(c, s, t, h))); });
}

std::vector<TwoCell> two_cells(const BaseCat& c, const Span& s, const Span& t) {
  std::vector<TwoCell> out;
  for_each_two_cell(c, s, t, [&](const TwoCell& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::vector<Span> spans_between(const BaseCat& c, const Object& src, const Object& tgt,
                                std::size_t bound) {
  auto p = c.product(src, tgt);
  std::vector<Span> out;
  for (const auto& x : c.objects_over(p.obj, bound))
    out.push_back({c.compose(p.pr1, x), c.compose(p.pr2, x)});
  return out;
}

}  // namespace spanvk
