#pragma once

#include <string>

#include "spanvk/bicolim.hpp"
#include "spanvk/gallery.hpp"

namespace spanvk {

// ASCII renderings. A one-component object prints as {a, b}; otherwise as
// <{a} ; {x, y} | a->x>, components first, then the non-identity maps.
std::string format_object(const Object& x);
// a->x, b->y per component, components separated by " ; "
std::string format_morphism(const Morphism& f);
// multi-line, every line prefixed by indent
std::string format_span(const Span& s, const std::string& indent = "");
std::string format_diagram(const Diagram& d, const std::string& indent = "");
std::string format_cocone(const Cocone& k, const std::string& indent = "");

std::string format_witness(const Witness& w, const std::string& indent = "");
std::string format_verdict(const std::string& title, const Verdict& v);
std::string format_bicolimit(const BicolimReport& r);
std::string format_report(const ExampleReport& r);

}  // namespace spanvk
