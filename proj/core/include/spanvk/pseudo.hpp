#pragma once

#include <cstdint>
#include <vector>

#include "spanvk/catkit.hpp"
#include "spanvk/span.hpp"

namespace spanvk {

// ΓF_u = graph(F_u); the strict homomorphism J -> Span(C) induced by F
Span gamma_arrow(const Diagram& f, std::uint32_t u);

// Lax transformation ΓF => ΓG. component(i): F_i ⇀ G_i, and for every J-arrow
// u: i -> j a cell κ_u : ΓG_u ∘ κ_i => κ_j ∘ ΓF_u.
class LaxTransformation {
 public:
  LaxTransformation() = default;
  // cells: one per J-arrow, identities included; validated
  LaxTransformation(Diagram src, Diagram tgt, std::vector<Span> components,
                    std::vector<TwoCell> cells);

  const Diagram& src() const { return src_; }
  const Diagram& tgt() const { return tgt_; }
  const BaseCat& base() const { return src_.base(); }
  const FinCat& shape() const { return src_.shape(); }
  const Span& component(std::uint32_t i) const { return components_[i]; }
  const TwoCell& cell(std::uint32_t u) const { return cells_[u]; }
  const std::vector<Span>& components() const { return components_; }
  const std::vector<TwoCell>& cells() const { return cells_; }
  bool is_strong() const;

  bool operator==(const LaxTransformation& o) const {
    return components_ == o.components_ && cells_ == o.cells_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

 private:
  Diagram src_, tgt_;
  std::vector<Span> components_;
  std::vector<TwoCell> cells_;
};

// Ξ : κ => λ, one 2-cell Ξ_i : κ_i => λ_i per object
class Modification {
 public:
  Modification() = default;
  Modification(LaxTransformation src, LaxTransformation tgt, std::vector<TwoCell> comps);  // validated

  const LaxTransformation& src() const { return src_; }
  const LaxTransformation& tgt() const { return tgt_; }
  const TwoCell& at(std::uint32_t i) const { return comps_[i]; }
  const std::vector<TwoCell>& comps() const { return comps_; }
  bool is_invertible() const;

  bool operator==(const Modification& o) const {
    return comps_ == o.comps_ && src_ == o.src_ && tgt_ == o.tgt_;
  }

 private:
  LaxTransformation src_, tgt_;
  std::vector<TwoCell> comps_;
};

// equation λ_u ⊚ (ι ∗ Ξ_i) = (Ξ_j ∗ ι) ⊚ κ_u for every arrow; no throw
bool modification_holds(const LaxTransformation& src, const LaxTransformation& tgt,
                        const std::vector<TwoCell>& comps);
// the equation at the single arrow u : i -> j
bool modification_holds_at(const LaxTransformation& src, const LaxTransformation& tgt,
                           const TwoCell& xi_i, const TwoCell& xi_j, std::uint32_t u);
Modification identity_modification(const LaxTransformation& k);
Modification vertical_compose(const Modification& b, const Modification& a);
Modification inverse(const Modification& m);

struct SpanOfNats {
  Diagram H;
  NatTrans phi;  // H -> F
  NatTrans psi;  // H -> G
};

// components ⟨φ_i, ψ_i⟩, cells the pullback-induced maps H_i -> F_i ×_{F_j} H_j
LaxTransformation span_of_nats_to_lax(const NatTrans& phi, const NatTrans& psi);
LaxTransformation span_of_nats_to_lax(const SpanOfNats& s);
// H_i = carrier of κ_i, H_u = π2 ∘ κ_u
SpanOfNats lax_to_span_of_nats(const LaxTransformation& k);

// pseudo-cocone ΓF => ΔX in cartesian-pair form
class PseudoCocone {
 public:
  PseudoCocone() = default;
  PseudoCocone(NatTrans phi, Cocone psi);  // phi: H -> F cartesian, psi over H; validated

  const Diagram& diagram() const { return phi_.tgt(); }
  const Diagram& carrier_diagram() const { return phi_.src(); }
  const Object& apex() const { return psi_.apex(); }
  const NatTrans& phi() const { return phi_; }
  const Cocone& psi() const { return psi_; }
  LaxTransformation as_lax() const;

 private:
  NatTrans phi_;
  Cocone psi_;
};

// φ cartesian, and the induced coherence cells invertible; the two agree
bool pseudo_cocone_check(const NatTrans& phi, const Cocone& psi);
bool pseudo_cocone_check(const PseudoCocone& pc);

// Γκ : ΓF => ΔC
LaxTransformation gamma_cocone(const Cocone& k);
PseudoCocone gamma_pseudo_cocone(const Cocone& k);
// Δh ⊚ λ for λ : ΓF => ΔC and h : C ⇀ D
LaxTransformation postcompose(const Span& h, const LaxTransformation& lam);

// Δξ ∗ ι_{Γκ} : Δh ⊚ Γκ => Δh' ⊚ Γκ
Modification whisker(const TwoCell& xi, const Cocone& k);

// F ×_{ΔC} ΔH with its projections, for h : C ⇀ D
PulledBackNat pullback_along_span(const Cocone& k, const Span& h);

// the cartesian transformation F ×_{ΔC} ΔH -> F ×_{ΔC} ΔH' carried by a
// modification Δh ⊚ Γκ => Δh' ⊚ Γκ
NatTrans modification_to_cartesian_data(const Cocone& k, const Span& h, const Span& h2,
                                        const Modification& m);

// ⟨h, Θ : λ => Δh ⊚ Γκ⟩
struct MediatingCell {
  Span span;
  Modification theta;
  // J-objects whose lateral face is not a pullback
  std::vector<std::uint32_t> bad_faces;
  bool invertible() const { return bad_faces.empty(); }
};

}  // namespace spanvk
