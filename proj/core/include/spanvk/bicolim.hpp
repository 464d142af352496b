#pragma once

#include <cstdint>
#include <vector>

#include "spanvk/pseudo.hpp"
#include "spanvk/vkcheck.hpp"

namespace spanvk {

// π2 : F ×_{ΔC} ΔH -> ΔH is a colimit
bool is_universal_span(const Cocone& k, const Span& h);

// every modification Δh ⊚ Γκ => Δh' ⊚ Γκ
std::vector<Modification> modifications(const Cocone& k, const Span& h, const Span& h2);

// for each h' in others, every modification Δh ⊚ Γκ => Δh' ⊚ Γκ is Δξ ∗ ι for
// exactly one ξ : h => h'
Verdict universal_by_modifications(const Cocone& k, const Span& h, const std::vector<Span>& others);

// h = ⟨h1, h2⟩ induced from the colimit of the carrier diagram, and Θ from the
// comparison maps into F_i ×_C H
MediatingCell find_mediating_cell(const Cocone& k, const PseudoCocone& lam);

// exactly one invertible ζ with Θ' ⊚ Θ⁻¹ = Δζ ∗ ι
Verdict essential_uniqueness_check(const Cocone& k, const MediatingCell& c1, const MediatingCell& c2);

struct BicolimBounds {
  std::size_t fiber_bound = 2;  // carrier diagrams of pseudo-cocones
  std::size_t span_bound = 2;   // carriers of spans out of the apex
};

struct BicolimReport {
  Verdict ess_surj;
  Verdict universality;
  std::vector<MediatingCell> mediating_cells;
  std::vector<std::pair<Span, bool>> spans;  // span, universal
  bool ok() const { return ess_surj.ok() && universality.ok(); }
};

// (i) every enumerated pseudo-cocone has an invertible, universal mediating
// cell; (ii) every span out of the apex (targets: terminal object and the apex)
// is universal, checked through modifications
BicolimReport verify_bicolimit_bounded(const Cocone& k, const BicolimBounds& b = {});

}  // namespace spanvk
