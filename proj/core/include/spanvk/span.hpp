#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spanvk/base.hpp"

namespace spanvk {

// src <-left- carrier -right-> tgt
struct Span {
  Morphism left;
  Morphism right;

  const Object& carrier() const { return left.src(); }
  const Object& src() const { return left.tgt(); }
  const Object& tgt() const { return right.tgt(); }
  bool operator==(const Span& o) const { return left == o.left && right == o.right; }
  bool operator!=(const Span& o) const { return !(*this == o); }
};

Span make_span(const BaseCat& c, const Morphism& left, const Morphism& right);
Span identity_span(const BaseCat& c, const Object& x);
// ⟨id, f⟩
Span graph(const BaseCat& c, const Morphism& f);

struct SpanComposite {
  Span span;
  BasePullback pb;  // of s1.right against s2.left
};
SpanComposite compose_spans_detail(const BaseCat& c, const Span& s2, const Span& s1);
// s2 ∘ s1 by chosen pullback
Span compose_spans(const BaseCat& c, const Span& s2, const Span& s1);

// carrier map with left' w = left and right' w = right
class TwoCell {
 public:
  TwoCell() = default;
  TwoCell(const BaseCat& c, Span src, Span tgt, Morphism witness);  // validated

  const Span& src() const { return src_; }
  const Span& tgt() const { return tgt_; }
  const Morphism& witness() const { return witness_; }
  bool operator==(const TwoCell& o) const {
    return witness_ == o.witness_ && src_ == o.src_ && tgt_ == o.tgt_;
  }
  bool operator!=(const TwoCell& o) const { return !(*this == o); }

 private:
  Span src_, tgt_;
  Morphism witness_;
};

TwoCell identity_cell(const BaseCat& c, const Span& s);
// b ⊚ a
TwoCell vertical_compose(const BaseCat& c, const TwoCell& b, const TwoCell& a);
// d ∗ c : s2 ∘ s1 => s2' ∘ s1' for c : s1 => s1', d : s2 => s2'
TwoCell horizontal_compose(const BaseCat& c, const TwoCell& d, const TwoCell& cc);
bool is_invertible(const BaseCat& c, const TwoCell& a);
TwoCell inverse(const BaseCat& c, const TwoCell& a);
// α_{f,g,h} : h ∘ (g ∘ f) => (h ∘ g) ∘ f
TwoCell associator(const BaseCat& c, const Span& f, const Span& g, const Span& h);
TwoCell associator_inverse(const BaseCat& c, const Span& f, const Span& g, const Span& h);

// equality in Sp(C): a carrier isomorphism commuting with both legs
std::optional<Morphism> abstract_equal(const BaseCat& c, const Span& s, const Span& t);

// flattening: carrier sorts, then src and tgt sorts; the latter two are the
// fixed ones for iso-over-the-ends searches
Structure span_structure(const BaseCat& c, const Span& s);
std::vector<bool> span_fixed_sorts(const BaseCat& c);

void for_each_two_cell(const BaseCat& c, const Span& s, const Span& t,
                       const std::function<bool(const TwoCell&)>& visit);
std::vector<TwoCell> two_cells(const BaseCat& c, const Span& s, const Span& t);

// spans src ⇀ tgt with every carrier component of size <= bound, one per
// class of abstract equality
std::vector<Span> spans_between(const BaseCat& c, const Object& src, const Object& tgt,
                                std::size_t bound);

}  // namespace spanvk
