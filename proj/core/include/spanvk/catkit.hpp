#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spanvk/base.hpp"

namespace spanvk {

// Functor J -> C. Holds a value for every J-arrow, identities included.
class Diagram {
 public:
  Diagram();
  // arrows: one morphism per non-identity J-arrow, in index order
  Diagram(FinCat shape, BaseCat base, std::vector<Object> objects,
          const std::vector<Morphism>& non_identity_arrows);
  // the constant diagram at x
  static Diagram constant(const FinCat& shape, const BaseCat& base, const Object& x);
  // fills in composites from values on shape.generating_set()
  static Diagram from_generators(const FinCat& shape, const BaseCat& base, std::vector<Object> objects,
                                 const std::vector<std::pair<std::uint32_t, Morphism>>& gens);

  const FinCat& shape() const { return d_->shape; }
  const BaseCat& base() const { return d_->base; }
  const Object& at(std::uint32_t j) const { return d_->objects[j]; }
  const Morphism& arrow(std::uint32_t u) const { return d_->arrows[u]; }
  const std::vector<Object>& objects() const { return d_->objects; }
  const std::vector<Morphism>& arrows() const { return d_->arrows; }

  bool operator==(const Diagram& o) const;
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  struct Data {
    FinCat shape;
    BaseCat base;
    std::vector<Object> objects;
    std::vector<Morphism> arrows;
  };
  std::shared_ptr<const Data> d_;
};

class NatTrans {
 public:
  NatTrans() = default;
  NatTrans(Diagram src, Diagram tgt, std::vector<Morphism> comps);  // validated

  const Diagram& src() const { return src_; }
  const Diagram& tgt() const { return tgt_; }
  const Morphism& at(std::uint32_t j) const { return comps_[j]; }
  const std::vector<Morphism>& comps() const { return comps_; }

  bool operator==(const NatTrans& o) const {
    return comps_ == o.comps_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

 private:
  Diagram src_, tgt_;
  std::vector<Morphism> comps_;
};

// A natural transformation from a diagram to the constant diagram at apex.
class Cocone {
 public:
  Cocone() = default;
  Cocone(Diagram diagram, Object apex, std::vector<Morphism> legs);  // validated

  const Diagram& diagram() const { return diagram_; }
  const Object& apex() const { return apex_; }
  const Morphism& leg(std::uint32_t j) const { return legs_[j]; }
  const std::vector<Morphism>& legs() const { return legs_; }
  const BaseCat& base() const { return diagram_.base(); }
  NatTrans as_nat() const;

  bool operator==(const Cocone& o) const {
    return legs_ == o.legs_ && apex_ == o.apex_ && diagram_ == o.diagram_;
  }

 private:
  Diagram diagram_;
  Object apex_;
  std::vector<Morphism> legs_;
};

NatTrans identity_nat(const Diagram& d);
NatTrans compose(const NatTrans& g, const NatTrans& f);
NatTrans constant_nat(const FinCat& shape, const BaseCat& base, const Morphism& x);
bool is_iso(const NatTrans& t);
NatTrans inverse(const NatTrans& t);
// cocone whose legs are x ∘ legs
Cocone postcompose(const Cocone& k, const Morphism& x);
// cocone β with β_j = legs_j ∘ t_j
Cocone precompose(const Cocone& k, const NatTrans& t);

Cocone colimit(const Diagram& d);
bool is_colimit(const Cocone& k);
// apex(colim) -> apex(other), for colim a colimit cocone of the same diagram
Morphism colimit_mediator(const Cocone& colim, const Cocone& other);

bool is_cartesian(const NatTrans& t);
// J-arrows whose naturality square is not a pullback
std::vector<std::uint32_t> non_pullback_squares(const NatTrans& t);

struct PulledBackCocone {
  Diagram E;
  NatTrans tau;   // E -> D, cartesian
  Cocone beta;    // E over X
};
PulledBackCocone pullback_cocone(const Cocone& k, const Morphism& x);

struct PulledBackNat {
  Diagram P;
  NatTrans p1;  // P -> src(t)
  NatTrans p2;  // P -> src(s)
};
// pointwise chosen pullback of t: E -> D along s: D' -> D
PulledBackNat pullback_nat(const NatTrans& t, const NatTrans& s);

struct CartesianOver {
  Diagram E;
  NatTrans tau;
};
CartesianOver kappa_star(const Cocone& k, const Morphism& x);

// [J, FinSet] as a base category; for other bases use functor_category_over
BaseCat functor_category(const FinCat& shape);
// [J, [K, FinSet]] = [J×K, FinSet]
BaseCat functor_category_over(const FinCat& shape, const BaseCat& base);
Object diagram_as_object(const Diagram& d);
Morphism nat_as_morphism(const NatTrans& t);

// flattening for the hom-search engine: sorts (j, k) at index j * |K| + k
Structure diagram_structure(const Diagram& d);
NatTrans nat_from_sort_maps(const Diagram& a, const Diagram& b, const SortMaps& h);
std::optional<NatTrans> diagram_iso_search(const Diagram& a, const Diagram& b);
void for_each_nat(const Diagram& a, const Diagram& b,
                  const std::function<bool(const NatTrans&)>& visit);
// cocones of d with the given apex
void for_each_cocone(const Diagram& d, const Object& apex,
                     const std::function<bool(const Cocone&)>& visit);

using CartesianFilter = std::function<bool(const Diagram&, const NatTrans&)>;
// cartesian transformations into d, one per isomorphism class over d, with
// every fiber of size <= fiber_bound; the filter runs before deduplication
std::vector<CartesianOver> enumerate_cartesian_into(const Diagram& d, std::size_t fiber_bound,
                                                    const CartesianFilter& filter = {});

// (E, tau) ≅ (E', tau') over the common target
bool iso_over(const NatTrans& a, const NatTrans& b);

}  // namespace spanvk
