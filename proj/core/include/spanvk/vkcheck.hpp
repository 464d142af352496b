#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanvk/catkit.hpp"
#include "spanvk/span.hpp"

namespace spanvk {

// κ : D -> ΔA, τ : E -> D cartesian, x : X -> A, β : E -> ΔX with κτ = Δx β
struct VkInstance {
  Cocone kappa;
  NatTrans tau;
  Morphism x;
  Cocone beta;
};
// throws ValidationError unless all four constraints hold
VkInstance make_vk_instance(Cocone kappa, NatTrans tau, Morphism x, Cocone beta);

struct VkInstanceResult {
  bool i_holds = false;   // β is a colimit
  bool ii_holds = false;  // every (τ_i, β_i) square over (κ_i, x) is a pullback
  std::vector<std::uint32_t> bad_squares;
};
VkInstanceResult vk_instance_check(const VkInstance& inst);

enum class Status { pass, fail, pass_up_to_bound };
const char* status_name(Status s);

struct Witness {
  std::string kind;
  std::string detail;
  std::optional<VkInstance> instance;
  std::vector<std::uint32_t> bad_squares;
  std::vector<Span> spans;
};

struct Verdict {
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::size_t size_bound = 0;
  std::size_t fiber_bound = 0;
  std::size_t checked = 0;  // instances examined

  bool ok() const { return status != Status::fail; }
};

// true when a fail verdict's instance reproduces i != ii on a fresh check
bool revalidates(const Witness& w);

// κ is a colimit of its diagram
Verdict colimit_check(const Cocone& k);
// pulled back cocones along every x : X -> A with |X_k| <= size_bound are colimits
Verdict universality_check(const Cocone& k, std::size_t size_bound);
// for every cartesian (E, τ) with fibers <= fiber_bound, the colimit of E
// induces pullback squares
Verdict converse_universality_check(const Cocone& k, std::size_t fiber_bound,
                                    const CartesianFilter& filter = {});
Verdict is_vk_bounded(const Cocone& k, std::size_t size_bound = 3, std::size_t fiber_bound = 3,
                      const CartesianFilter& filter = {});

// the cocone of the pushout square inB f = inC g, over the span shape
Cocone square_cocone(const BaseCat& c, const Morphism& f, const Morphism& g, const Morphism& inB,
                     const Morphism& inC);
// throws ValidationError when the square is not a pushout
Verdict vk_square_check(const BaseCat& c, const Morphism& f, const Morphism& g, const Morphism& inB,
                        const Morphism& inC, std::size_t fiber_bound, std::size_t size_bound = 2);

// the coproduct cocone of (A, B) over the discrete shape
Cocone coproduct_cocone(const BaseCat& c, const Object& a, const Object& b);
// X -> Z <- Y over A -> A+B <- B: top row a coproduct iff both squares are
// pullbacks, for every such diagram with components <= bound
Verdict extensivity_check(const BaseCat& c, const Object& a, const Object& b, std::size_t bound);
// ⟨Γi1, Γi2⟩ is a coproduct in Sp(C): targets T with components <= target_bound,
// spans with carriers <= bound
Verdict gamma_preserves_coproduct_check(const BaseCat& c, const Object& a, const Object& b,
                                        std::size_t bound, std::size_t target_bound = 2);
// the mediating span ⟨s.left + t.left, [s.right, t.right]⟩ : A+B ⇀ T
Span coproduct_mediator(const BaseCat& c, const Span& s, const Span& t);

// the coequalizer cocone of the kernel pair of p, over the parallel-pair shape
Cocone kernel_pair_cocone(const BaseCat& c, const Morphism& p);
// is_vk_bounded restricted to cartesian inputs whose arrows form a kernel pair;
// throws ValidationError when p is not epi
Verdict barr_kock_check(const BaseCat& c, const Morphism& p, std::size_t fiber_bound = 2,
                        std::size_t size_bound = 2);

}  // namespace spanvk
