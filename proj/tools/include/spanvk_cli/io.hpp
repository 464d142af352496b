#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spanvk/bicolim.hpp"
#include "spanvk/gallery.hpp"

namespace spanvk::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "spanvk-report/1";

// bad input file; line and column are 1-based, 0 when unknown
struct InputError : Error {
  InputError(std::string path, const std::string& msg, std::size_t line = 0, std::size_t col = 0)
      : Error(msg), path(std::move(path)), line(line), col(col) {}
  std::string path;  // JSON pointer of the offending value
  std::size_t line, col;
};

struct DiagramFile {
  BaseCat base = BaseCat::finsets();
  Diagram diagram;
  std::optional<Cocone> cocone;
  std::optional<std::size_t> size_bound, fiber_bound;

  // the given cocone, or the colimit of the diagram
  Cocone cocone_or_colimit() const;
};

struct SpanFile {
  BaseCat base = BaseCat::finsets();
  std::vector<Span> spans;  // s1, s2, ... with s_{i+1}.src == s_i.tgt
};

// parse text; errors carry line and column
json parse_json(const std::string& text);
DiagramFile read_diagram_file(const std::string& text);
SpanFile read_span_file(const std::string& text);
std::string slurp(const std::string& file);

json to_json(const BaseCat& c);
json to_json(const FinCat& j);
json to_json(const BaseCat& c, const Object& x);
json to_json(const BaseCat& c, const Morphism& f);
json to_json(const Diagram& d);
json to_json(const Cocone& k);  // in diagram-file form
json to_json(const BaseCat& c, const Span& s);
json to_json(const BaseCat& c, const Witness& w);
json to_json(const BaseCat& c, const Verdict& v);
json to_json(const BaseCat& c, const BicolimReport& r);
json to_json(const ExampleReport& r);

BaseCat base_from_json(const json& j);
FinCat shape_from_json(const json& j);
Object object_from_json(const BaseCat& c, const json& j);
Morphism morphism_from_json(const BaseCat& c, const Object& src, const Object& tgt, const json& j);
Diagram diagram_from_json(const BaseCat& c, const FinCat& shape, const json& j);
// a diagram file with a cocone, as written by to_json(Cocone)
Cocone cocone_from_json(const json& j);
Witness witness_from_json(const json& j);

}  // namespace spanvk::cli
