#pragma once

// Hand-rolled generators for property tests; fixed seeds keep runs
// reproducible.

#include <random>
#include <string>
#include <vector>

#include "spanvk/base.hpp"

namespace gen {

using spanvk::FinFn;
using spanvk::FinSet;

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(eng); }
  bool coin() { return below(2) == 1; }
};

inline FinSet set(Rng& r, std::size_t max_size, const std::string& prefix = "e") {
  std::size_t n = r.below(max_size + 1);
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return FinSet(v);
}

inline FinFn fn(Rng& r, const FinSet& dom, const FinSet& cod) {
  std::vector<std::uint32_t> img(dom.size());
  for (auto& y : img) y = static_cast<std::uint32_t>(r.below(cod.size()));
  return FinFn(dom, cod, img);
}

// a function into cod from a fresh random domain; cod must be non-empty or
// the domain comes out empty
inline FinFn fn_into(Rng& r, const FinSet& cod, std::size_t max_dom, const std::string& prefix) {
  FinSet d = cod.empty() ? FinSet() : set(r, max_dom, prefix);
  return fn(r, d, cod);
}

// object of [0 -> 1, FinSet]
inline spanvk::Object arrow_object(Rng& r, std::size_t max_size, const std::string& prefix) {
  FinSet b = set(r, max_size, prefix + "b");
  FinSet a = b.empty() ? FinSet() : set(r, max_size, prefix + "a");
  return spanvk::BaseCat::arrows().object({a, b}, {fn(r, a, b)});
}

}  // namespace gen
