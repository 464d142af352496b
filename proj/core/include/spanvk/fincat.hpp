#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "spanvk/errors.hpp"

namespace spanvk {

// Finite category with an explicit composition table. Morphisms 0..n-1 are
// the identities of objects 0..n-1.
class FinCat {
 public:
  struct Arrow {
    std::string name;
    std::uint32_t src;
    std::uint32_t tgt;
  };
  struct ArrowSpec {
    std::string name, src, tgt;
  };
  // g, f, g∘f by name
  using Composite = std::tuple<std::string, std::string, std::string>;

  FinCat();  // empty category

  static FinCat make(const std::vector<std::string>& objects, const std::vector<ArrowSpec>& arrows,
                     const std::vector<Composite>& composites = {});
  static FinCat terminal();
  static FinCat empty() { return FinCat(); }
  static FinCat discrete(std::size_t n);
  static FinCat arrow();          // 0 -> 1
  static FinCat span();           // 1 <-f- 0 -g-> 2
  static FinCat cospan();         // 0 -f-> 2 <-g- 1
  static FinCat parallel_pair();  // u, v : 0 => 1
  static FinCat product(const FinCat& a, const FinCat& b);

  std::size_t num_objects() const { return d_->objects.size(); }
  std::size_t num_arrows() const { return d_->arrows.size(); }
  const std::string& object_name(std::uint32_t i) const { return d_->objects[i]; }
  const Arrow& arrow(std::uint32_t m) const { return d_->arrows[m]; }
  std::uint32_t src(std::uint32_t m) const { return d_->arrows[m].src; }
  std::uint32_t tgt(std::uint32_t m) const { return d_->arrows[m].tgt; }
  std::uint32_t identity(std::uint32_t obj) const { return obj; }
  bool is_identity(std::uint32_t m) const { return m < num_objects(); }
  // g∘f, or -1 when not composable
  std::int32_t compose(std::uint32_t g, std::uint32_t f) const {
    return d_->comp[g * num_arrows() + f];
  }
  std::uint32_t object_index(const std::string& name) const;
  std::uint32_t arrow_index(const std::string& name) const;

  // non-identity arrows that are not composites of two non-identity arrows
  const std::vector<std::uint32_t>& generators() const { return d_->generators; }
  std::vector<std::uint32_t> non_identity_arrows() const;
  // generators, plus any arrow not reachable from them by composition; a
  // functor is determined by its values here
  std::vector<std::uint32_t> generating_set() const;

  // for product categories: projections of objects and arrows
  bool is_product() const { return !d_->factor_obj.empty(); }
  std::pair<std::uint32_t, std::uint32_t> object_factors(std::uint32_t o) const {
    return d_->factor_obj[o];
  }
  std::pair<std::uint32_t, std::uint32_t> arrow_factors(std::uint32_t m) const {
    return d_->factor_arr[m];
  }

  bool operator==(const FinCat& o) const;

 private:
  struct Data {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::int32_t> comp;
    std::vector<std::uint32_t> generators;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factor_obj, factor_arr;
  };
  explicit FinCat(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> finish(Data d);
  std::shared_ptr<const Data> d_;
};

}  // namespace spanvk
