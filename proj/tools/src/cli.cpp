#include "spanvk_cli/cli.hpp"

#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spanvk/format.hpp"
#include "spanvk_cli/io.hpp"

namespace spanvk::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string file;
  std::optional<std::size_t> bound, fiber_bound;
  std::string example;
  bool all = false;
};

json header(const std::string& command) { return {{"schema", kReportSchema}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int check_vk(const Options& o, std::ostream& out) {
  auto f = read_diagram_file(slurp(o.file));
  std::size_t size = o.bound.value_or(f.size_bound.value_or(3));
  std::size_t fiber = o.fiber_bound.value_or(f.fiber_bound.value_or(3));
  auto k = f.cocone_or_colimit();
  auto v = is_vk_bounded(k, size, fiber);
  if (o.format == "json") {
    auto j = header("check-vk");
    j["file"] = o.file;
    j["bounds"] = {{"size", size}, {"fiber", fiber}};
    j["cocone_given"] = f.cocone.has_value();
    j["cocone"] = to_json(k);
    j["verdict"] = to_json(k.base(), v);
    emit(out, j);
  } else {
    out << "check-vk " << o.file << "\n"
        << "base: " << k.base().name() << "\n"
        << (f.cocone ? "cocone:\n" : "cocone (colimit of the diagram):\n") << format_cocone(k, "  ")
        << format_verdict("VK", v);
  }
  return v.ok() ? 0 : 1;
}

int check_bicolimit(const Options& o, std::ostream& out) {
  auto f = read_diagram_file(slurp(o.file));
  BicolimBounds b;
  b.span_bound = o.bound.value_or(f.size_bound.value_or(b.span_bound));
  b.fiber_bound = o.fiber_bound.value_or(f.fiber_bound.value_or(b.fiber_bound));
  auto k = f.cocone_or_colimit();
  auto r = verify_bicolimit_bounded(k, b);
  if (o.format == "json") {
    auto j = header("check-bicolimit");
    j["file"] = o.file;
    j["bounds"] = {{"span", b.span_bound}, {"fiber", b.fiber_bound}};
    j["cocone_given"] = f.cocone.has_value();
    j["cocone"] = to_json(k);
    j["report"] = to_json(k.base(), r);
    emit(out, j);
  } else {
    out << "check-bicolimit " << o.file << "\n"
        << "base: " << k.base().name() << "\n"
        << (f.cocone ? "cocone:\n" : "cocone (colimit of the diagram):\n") << format_cocone(k, "  ");
    for (std::size_t i = 0; i < r.mediating_cells.size(); ++i) {
      const auto& m = r.mediating_cells[i];
      out << "pseudo-cocone " << i + 1 << ": mediating span with carrier " << format_object(m.span.carrier())
          << (m.invertible() ? ", cell invertible" : ", cell not invertible") << "\n";
    }
    out << format_bicolimit(r);
  }
  return r.ok() ? 0 : 1;
}

int compose(const Options& o, std::ostream& out) {
  auto f = read_span_file(slurp(o.file));
  const auto& c = f.base;
  Span acc = f.spans.front();
  for (std::size_t i = 1; i < f.spans.size(); ++i) acc = compose_spans(c, f.spans[i], acc);
  std::optional<TwoCell> assoc;
  if (f.spans.size() == 3) assoc = associator(c, f.spans[0], f.spans[1], f.spans[2]);
  if (o.format == "json") {
    auto j = header("compose-spans");
    j["file"] = o.file;
    j["base"] = to_json(c);
    j["composite"] = to_json(c, acc);
    if (assoc)
      j["associator"] = {{"from", to_json(c, assoc->src())},
                         {"to", to_json(c, assoc->tgt())},
                         {"witness", to_json(c, assoc->witness())}};
    emit(out, j);
  } else {
    out << "compose-spans " << o.file << "\n"
        << "base: " << c.name() << "\n";
    for (std::size_t i = 0; i < f.spans.size(); ++i)
      out << "span " << i + 1 << "\n" << format_span(f.spans[i], "  ");
    out << "composite\n" << format_span(acc, "  ");
    if (assoc) {
      out << "associator s3.(s2.s1) => (s3.s2).s1\n"
          << "  from carrier " << format_object(assoc->src().carrier()) << "\n"
          << "  to carrier   " << format_object(assoc->tgt().carrier()) << "\n"
          << "  bijection    " << format_morphism(assoc->witness()) << "\n";
    }
  }
  return 0;
}

int gallery(const Options& o, std::ostream& out) {
  std::vector<std::string> names = o.all ? gallery_names() : std::vector<std::string>{o.example};
  bool good = true;
  json reports = json::array();
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto r = run_gallery(names[i]);
    good = good && r.as_expected();
    if (o.format == "json")
      reports.push_back(to_json(r));
    else
      out << (i ? "\n" : "") << format_report(r) << "result: " << (r.as_expected() ? "as expected" : "UNEXPECTED")
          << "\n";
  }
  if (o.format == "json") {
    auto j = header("gallery");
    j["reports"] = reports;
    j["as_expected"] = good;
    emit(out, j);
  }
  return good ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Van Kampen cocones and bicolimits of spans over finite base categories", "spanvk"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  auto* vk = app.add_subcommand("check-vk", "bounded Van Kampen check of a cocone (default bounds 3/3)");
  vk->add_option("file", o.file, "diagram file")->required();
  vk->add_option("--bound", o.bound, "object size bound");
  vk->add_option("--fiber-bound", o.fiber_bound, "fiber bound of cartesian inputs");

  auto* bi = app.add_subcommand("check-bicolimit",
                                "bounded bicolimit check of the graph in Span (default bounds 2/2)");
  bi->add_option("file", o.file, "diagram file")->required();
  bi->add_option("--bound", o.bound, "carrier size bound for spans out of the apex");
  bi->add_option("--fiber-bound", o.fiber_bound, "fiber bound of pseudo-cocone carriers");

  auto* cs = app.add_subcommand("compose-spans", "compose a chain of spans");
  cs->add_option("file", o.file, "span file")->required();

  auto* ga = app.add_subcommand("gallery", "run a worked example");
  auto* name = ga->add_option("name", o.example, "example name")->check(CLI::IsMember(gallery_names()));
  auto* all = ga->add_flag("--all", o.all, "run every example");
  name->excludes(all);
  all->excludes(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (ga->parsed() && !o.all && o.example.empty()) {
    err << "gallery: give an example name or --all\n";
    return 2;
  }

  try {
    if (vk->parsed()) return check_vk(o, out);
    if (bi->parsed()) return check_bicolimit(o, out);
    if (cs->parsed()) return compose(o, out);
    return gallery(o, out);
  } catch (const InputError& e) {
    err << (o.file.empty() ? "spanvk" : o.file);
    if (e.line) err << ":" << e.line << ":" << e.col;
    err << ": error: " << e.what();
    if (!e.path.empty()) err << " (at " << e.path << ")";
    err << "\n";
    return 2;
  } catch (const Error& e) {
    err << (o.file.empty() ? "spanvk" : o.file) << ": error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spanvk::cli
