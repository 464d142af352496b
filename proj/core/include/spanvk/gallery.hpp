#pragma once

#include <string>
#include <vector>

#include "spanvk/bicolim.hpp"
#include "spanvk/vkcheck.hpp"

namespace spanvk {

// one claimed fact, with the value the example is supposed to produce
struct Claim {
  std::string what;
  bool expected;
  bool observed;
  bool as_expected() const { return expected == observed; }
};

struct ExampleReport {
  std::string name;
  std::string title;
  BaseCat base = BaseCat::finsets();
  std::vector<std::string> objects;  // pretty-printed constructions
  std::vector<Claim> claims;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::string summary;

  bool as_expected() const;
};

// pushout of (0 -> *) into two copies of (o -> *) in the arrow category: a VK
// square whose graph is not a pushout of abstract spans, with two mediating
// spans built from the two witnesses identity and swap
ExampleReport run_counterexample_sp();
ExampleReport run_strict_initial();
// FinSet objects
ExampleReport run_extensive_coproduct(const Object& a, const Object& b);
// throws ValidationError unless p is epi
ExampleReport run_kernel_pair(const Morphism& p);
// {*} <- {0,1} -> {*} in FinSet
ExampleReport run_non_vk_pushout();

std::vector<std::string> gallery_names();
// default arguments: coproduct of {a} and {b}, kernel pair of 4 -> 2;
// throws Error on an unknown name
ExampleReport run_gallery(const std::string& name);

}  // namespace spanvk
