#include "spanvk/format.hpp"

#include <sstream>

namespace spanvk {

namespace {

std::string set_str(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i];
  }
  return out + "}";
}

std::string fn_str(const FinFn& f) {
  if (f.dom().empty()) return "(empty)";
  std::string out;
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) {
    if (i) out += ", ";
    out += f.dom()[i] + "->" + f.cod()[f.at(i)];
  }
  return out;
}

}  // namespace

std::string format_object(const Object& x) {
  if (x.sets().size() == 1) return set_str(x.at(0));
  std::string out = "<";
  for (std::size_t k = 0; k < x.sets().size(); ++k) {
    if (k) out += " ; ";
    out += set_str(x.sets()[k]);
  }
  for (std::size_t m = x.sets().size(); m < x.maps().size(); ++m) out += " | " + fn_str(x.maps()[m]);
  return out + ">";
}

std::string format_morphism(const Morphism& f) {
  std::string out;
  for (std::size_t k = 0; k < f.comps().size(); ++k) {
    if (k) out += " ; ";
    out += fn_str(f.comps()[k]);
  }
  return out;
}

std::string format_span(const Span& s, const std::string& indent) {
  std::ostringstream o;
  o << indent << "carrier " << format_object(s.carrier()) << "\n"
    << indent << "  left  -> " << format_object(s.src()) << ": " << format_morphism(s.left) << "\n"
    << indent << "  right -> " << format_object(s.tgt()) << ": " << format_morphism(s.right) << "\n";
  return o.str();
}

std::string format_diagram(const Diagram& d, const std::string& indent) {
  std::ostringstream o;
  const auto& j = d.shape();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i)
    o << indent << j.object_name(i) << " = " << format_object(d.at(i)) << "\n";
  for (auto u : j.generators())
    o << indent << j.arrow(u).name << ": " << j.object_name(j.src(u)) << " -> " << j.object_name(j.tgt(u))
      << " = " << format_morphism(d.arrow(u)) << "\n";
  return o.str();
}

std::string format_cocone(const Cocone& k, const std::string& indent) {
  std::ostringstream o;
  o << format_diagram(k.diagram(), indent);
  o << indent << "apex = " << format_object(k.apex()) << "\n";
  const auto& j = k.diagram().shape();
  for (std::uint32_t i = 0; i < j.num_objects(); ++i)
    o << indent << "leg " << j.object_name(i) << " = " << format_morphism(k.leg(i)) << "\n";
  return o.str();
}

std::string format_witness(const Witness& w, const std::string& indent) {
  std::ostringstream o;
  o << indent << "witness " << w.kind << ": " << w.detail << "\n";
  if (!w.bad_squares.empty()) {
    o << indent << "  failing squares at objects:";
    for (auto i : w.bad_squares) o << " " << i;
    o << "\n";
  }
  if (w.instance) {
    const auto& in = *w.instance;
    o << indent << "  cartesian cocone over the diagram:\n" << format_cocone(in.beta, indent + "    ");
    o << indent << "  x = " << format_morphism(in.x) << "\n";
    auto r = vk_instance_check(in);
    o << indent << "  (i) colimit: " << (r.i_holds ? "yes" : "no")
      << ", (ii) all squares pullbacks: " << (r.ii_holds ? "yes" : "no") << "\n";
  }
  for (const auto& s : w.spans) o << indent << "  span\n" << format_span(s, indent + "    ");
  return o.str();
}

std::string format_verdict(const std::string& title, const Verdict& v) {
  std::ostringstream o;
  o << title << ": " << status_name(v.status);
  if (v.size_bound || v.fiber_bound) {
    o << " (";
    if (v.size_bound) o << "size bound " << v.size_bound;
    if (v.size_bound && v.fiber_bound) o << ", ";
    if (v.fiber_bound) o << "fiber bound " << v.fiber_bound;
    o << ")";
  }
  o << ", " << v.checked << " checked\n";
  if (v.witness) o << format_witness(*v.witness, "  ");
  return o.str();
}

std::string format_bicolimit(const BicolimReport& r) {
  std::ostringstream o;
  o << format_verdict("mediating cells", r.ess_surj);
  std::size_t inv = 0;
  for (const auto& m : r.mediating_cells) inv += m.invertible();
  o << "  " << inv << " of " << r.mediating_cells.size() << " mediating cells invertible\n";
  o << format_verdict("universal spans", r.universality);
  std::size_t uni = 0;
  for (const auto& s : r.spans) uni += s.second;
  o << "  " << uni << " of " << r.spans.size() << " spans universal\n";
  o << "bicolimit: " << (r.ok() ? "pass" : "fail") << "\n";
  return o.str();
}

std::string format_report(const ExampleReport& r) {
  std::ostringstream o;
  o << "== " << r.name << ": " << r.title << "\n";
  for (const auto& s : r.objects) o << s << (s.empty() || s.back() != '\n' ? "\n" : "");
  for (const auto& c : r.claims)
    o << "[" << (c.as_expected() ? " ok " : "FAIL") << "] " << c.what << ": "
      << (c.observed ? "yes" : "no") << (c.as_expected() ? "" : " (expected the opposite)") << "\n";
  for (const auto& w : r.witnesses) o << format_witness(w);
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  if (!r.summary.empty()) o << r.summary << "\n";
  return o.str();
}

}  // namespace spanvk
