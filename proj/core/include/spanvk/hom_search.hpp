#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace spanvk {

// Many-sorted unary algebra: finite sorts plus unary operations between them.
// Objects, diagrams, natural transformations and spans all flatten to this.
struct Structure {
  struct Op {
    std::uint32_t src;
    std::uint32_t tgt;
    std::vector<std::uint32_t> table;
  };
  std::vector<std::uint32_t> sort_sizes;
  std::vector<Op> ops;
};

using SortMaps = std::vector<std::vector<std::uint32_t>>;

struct HomOptions {
  bool bijective = false;
  // per sort: a prescribed map (e.g. identity on a fixed base)
  std::vector<std::optional<std::vector<std::uint32_t>>> fixed;
};

// Enumerates sort-indexed maps h with h_tgt(op_a(x)) = op_b(h_src(x)) for every
// op (ops of a and b are paired by position). visit returns false to stop.
// Returns the number of homomorphisms visited.
std::size_t for_each_hom(const Structure& a, const Structure& b, const HomOptions& opts,
                         const std::function<bool(const SortMaps&)>& visit);

std::optional<SortMaps> find_hom(const Structure& a, const Structure& b,
                                 const HomOptions& opts = {});

// Cheap isomorphism invariant; equal structures up to iso get equal keys.
std::vector<std::uint64_t> structure_invariant(const Structure& s,
                                               const std::vector<bool>& fixed_sorts = {});

}  // namespace spanvk

namespace spanvk {

// Keeps one representative per isomorphism class; sorts flagged fixed must be
// matched by the identity.
class IsoDeduper {
 public:
  explicit IsoDeduper(std::vector<bool> fixed_sorts = {}) : fixed_(std::move(fixed_sorts)) {}
  // true when s is not isomorphic to anything added before; returns the index
  // of the matching representative through `match` otherwise
  bool add(const Structure& s, std::size_t* match = nullptr);
  std::size_t size() const { return count_; }

 private:
  std::vector<bool> fixed_;
  std::map<std::vector<std::uint64_t>, std::vector<std::pair<Structure, std::size_t>>> buckets_;
  std::size_t count_ = 0;
};

}  // namespace spanvk
