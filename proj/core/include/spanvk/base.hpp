#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spanvk/fincat.hpp"
#include "spanvk/finset.hpp"
#include "spanvk/hom_search.hpp"

namespace spanvk {

// A functor K -> FinSet: one set per K-object, one map per K-arrow
// (identities included).
class Object {
 public:
  Object();
  Object(std::vector<FinSet> sets, std::vector<FinFn> maps);

  const std::vector<FinSet>& sets() const { return d_->sets; }
  const std::vector<FinFn>& maps() const { return d_->maps; }
  const FinSet& at(std::uint32_t k) const { return d_->sets[k]; }
  const FinFn& map(std::uint32_t m) const { return d_->maps[m]; }
  std::size_t total_size() const;
  std::size_t max_size() const;
  bool is_empty() const { return total_size() == 0; }

  bool operator==(const Object& o) const;
  bool operator!=(const Object& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<FinSet> sets;
    std::vector<FinFn> maps;
  };
  std::shared_ptr<const Data> d_;
};

// Natural transformation between two such functors.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Object src, Object tgt, std::vector<FinFn> comps)
      : src_(std::move(src)), tgt_(std::move(tgt)), comps_(std::move(comps)) {}

  const Object& src() const { return src_; }
  const Object& tgt() const { return tgt_; }
  const FinFn& at(std::uint32_t k) const { return comps_[k]; }
  const std::vector<FinFn>& comps() const { return comps_; }

  bool operator==(const Morphism& o) const {
    return comps_ == o.comps_ && src_ == o.src_ && tgt_ == o.tgt_;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

 private:
  Object src_, tgt_;
  std::vector<FinFn> comps_;
};

struct BasePullback {
  Object apex;
  Morphism p1, p2;
};
struct BaseColim {
  Object obj;
  std::vector<Morphism> inj;
};
struct BaseEdge {
  std::size_t src;
  std::size_t tgt;
  Morphism map;
};
struct BasePushout {
  Object obj;
  Morphism inB, inC;
};
struct BaseCoproduct {
  Object obj;
  std::vector<Morphism> injections;
};
struct BaseCoequalizer {
  Object obj;
  Morphism q;
};
struct BaseProduct {
  Object obj;
  Morphism pr1, pr2;
};

// The ambient category C, realised as the functor category [K, FinSet]. FinSet
// itself is K = 1 and the category of functions is K = (0 -> 1). All limits and
// colimits are computed pointwise.
class BaseCat {
 public:
  explicit BaseCat(FinCat k);
  static BaseCat finsets();
  static BaseCat arrows();

  const FinCat& shape() const { return k_; }
  std::string name() const;
  bool operator==(const BaseCat& o) const { return k_ == o.k_; }

  // construction with validation; maps are given for the non-identity arrows
  Object object(std::vector<FinSet> sets, const std::vector<FinFn>& non_identity_maps) const;
  Object object(const FinSet& s) const;  // K = 1 only
  Object constant(const FinSet& s) const;
  Morphism morphism(const Object& src, const Object& tgt, std::vector<FinFn> comps) const;
  Morphism morphism(const FinFn& f) const;  // K = 1 only
  void validate(const Object& x) const;
  void validate(const Morphism& f) const;

  Morphism identity(const Object& x) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool is_identity(const Morphism& f) const;
  bool is_mono(const Morphism& f) const;
  bool is_epi(const Morphism& f) const;
  bool is_iso(const Morphism& f) const;
  Morphism inverse(const Morphism& f) const;

  BasePullback chosen_pullback(const Morphism& f, const Morphism& g) const;
  Morphism pullback_mediator(const BasePullback& pb, const Morphism& a, const Morphism& b) const;
  Morphism factor_through(const std::vector<Morphism>& via, const std::vector<Morphism>& from) const;
  // a: P -> X, b: P -> Y, c: X -> Z, d: Y -> Z
  bool commutes(const Morphism& a, const Morphism& b, const Morphism& c, const Morphism& d) const;
  bool is_pullback_square(const Morphism& a, const Morphism& b, const Morphism& c,
                          const Morphism& d) const;
  bool is_pushout_square(const Morphism& a, const Morphism& b, const Morphism& c,
                         const Morphism& d) const;

  BaseColim glue(const std::vector<Object>& parts, const std::vector<std::string>& tags,
                 const std::vector<BaseEdge>& edges) const;
  Morphism colimit_mediator(const BaseColim& c, const std::vector<Morphism>& legs,
                            const Object& apex) const;
  BasePushout pushout(const Morphism& f, const Morphism& g) const;
  BaseCoproduct coproduct(const std::vector<Object>& objs) const;
  BaseCoequalizer coequalizer(const Morphism& f, const Morphism& g) const;
  BaseProduct product(const Object& a, const Object& b) const;
  Object initial() const;
  Object terminal() const;
  Morphism from_initial(const Object& x) const;

  // flattening for the hom-search engine: one sort per K-object
  Structure structure(const Object& x) const;
  Morphism from_sort_maps(const Object& src, const Object& tgt, const SortMaps& h) const;

  void for_each_morphism(const Object& x, const Object& y,
                         const std::function<bool(const Morphism&)>& visit) const;
  std::vector<Morphism> morphisms(const Object& x, const Object& y) const;
  std::optional<Morphism> find_iso(const Object& x, const Object& y) const;

  // every object with all components of size <= bound, one per iso class
  std::vector<Object> objects_up_to_iso(std::size_t bound) const;
  // morphisms into z from objects with components of size <= bound, one per
  // iso class over z
  std::vector<Morphism> objects_over(const Object& z, std::size_t bound) const;

 private:
  FinCat k_;
};

}  // namespace spanvk
