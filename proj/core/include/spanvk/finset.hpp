#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanvk/errors.hpp"

namespace spanvk {

// A finite set of string labels, kept in lexicographic order.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<std::string> labels);
  FinSet(std::initializer_list<std::string> labels);

  // {"0", "1", ..., "n-1"}
  static FinSet numbered(std::size_t n);

  std::size_t size() const { return labels_->size(); }
  bool empty() const { return labels_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  auto begin() const { return labels_->begin(); }
  auto end() const { return labels_->end(); }

  std::optional<std::uint32_t> find(std::string_view label) const;
  std::uint32_t index_of(std::string_view label) const;

  bool operator==(const FinSet& o) const;
  bool operator!=(const FinSet& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Total function between finite sets, stored as an index table.
class FinFn {
 public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<std::uint32_t> images);

  static FinFn from_labels(const FinSet& dom, const FinSet& cod,
                           const std::map<std::string, std::string>& map);
  static FinFn identity(const FinSet& s);
  // the unique map out of the empty set
  static FinFn from_empty(const FinSet& cod);
  static FinFn constant(const FinSet& dom, const FinSet& cod, std::uint32_t value);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::uint32_t at(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  const std::string& apply(std::string_view label) const;

  bool is_identity() const;

  bool operator==(const FinFn& o) const {
    return images_ == o.images_ && dom_ == o.dom_ && cod_ == o.cod_;
  }
  bool operator!=(const FinFn& o) const { return !(*this == o); }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::uint32_t> images_;
};

FinFn compose(const FinFn& g, const FinFn& f);
bool is_mono(const FinFn& f);
bool is_epi(const FinFn& f);
bool is_iso(const FinFn& f);
FinFn inverse(const FinFn& f);

// Calls visit on every function dom -> cod in lexicographic order of image
// tables; stop early by returning false.
void for_each_function(const FinSet& dom, const FinSet& cod,
                       const std::function<bool(const FinFn&)>& visit);

struct Pullback {
  FinSet apex;
  FinFn p1;  // apex -> dom(f)
  FinFn p2;  // apex -> dom(g)
};

// Identity-preserving: if f = id then (dom g, g, id); if g = id then
// (dom f, id, f). Otherwise pairs "(x,y)".
Pullback chosen_pullback(const FinFn& f, const FinFn& g);

// Unique u: dom(a) -> apex with p1 u = a, p2 u = b. Throws BoundaryMismatch
// if (a, b) is not a cone.
FinFn pullback_mediator(const Pullback& pb, const FinFn& a, const FinFn& b);

// u: P -> Q with via[i] u = from[i], where via: Q -> X_i is jointly injective
// and from: P -> X_i. Throws BoundaryMismatch when no such u exists.
FinFn factor_through(const std::vector<FinFn>& via, const std::vector<FinFn>& from);

struct Colim {
  FinSet obj;
  std::vector<FinFn> inj;
};

struct GlueEdge {
  std::size_t src;
  std::size_t tgt;
  FinFn map;
};

// Colimit of a finite "graph of sets": disjoint union of the parts tagged
// "tag:label", quotiented by x ~ map(x) for every edge. Class labels are the
// smallest member label. A single part with no identifications comes back
// untagged with identity injection.
Colim glue(const std::vector<FinSet>& parts, const std::vector<std::string>& tags,
           const std::vector<GlueEdge>& edges);

// obj -> apex induced by a cocone; throws BoundaryMismatch if the legs do not
// respect the identifications.
FinFn colimit_mediator(const Colim& c, const std::vector<FinFn>& legs);

struct Pushout {
  FinSet obj;
  FinFn inB;
  FinFn inC;
};
Pushout pushout(const FinFn& f, const FinFn& g);

struct Coproduct {
  FinSet obj;
  std::vector<FinFn> injections;
};
Coproduct coproduct(const std::vector<FinSet>& objs);

struct Coequalizer {
  FinSet obj;
  FinFn q;
};
Coequalizer coequalizer(const FinFn& f, const FinFn& g);

Pullback kernel_pair(const FinFn& p);

enum class SquareKind { pullback, pushout };

// a: P -> X, b: P -> Y, c: X -> Z, d: Y -> Z with c a = d b.
struct SquareWitness {
  FinFn a, b, c, d;
  SquareKind kind = SquareKind::pullback;
};

bool commutes(const SquareWitness& w);
bool verify_pullback_square(const SquareWitness& w);
bool verify_pushout_square(const SquareWitness& w);

// Is the cocone (legs: parts[i] -> apex) a colimit of the graph of sets?
bool is_colimit_cocone(const std::vector<FinSet>& parts,
                       const std::vector<GlueEdge>& edges,
                       const std::vector<FinFn>& legs, const FinSet& apex);

}  // namespace spanvk
