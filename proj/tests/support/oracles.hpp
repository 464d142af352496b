#pragma once

// Brute-force universal-property oracles. These deliberately avoid the
// library's mediator/factorisation code: they enumerate every test object T up
// to a size bound and every candidate cone/cocone, then count mediating maps.

#include <cstdint>
#include <functional>
#include <vector>

#include "spanvk/finset.hpp"

namespace oracle {

using spanvk::FinFn;
using spanvk::FinSet;

inline bool same_map(const FinFn& a, const FinFn& b) { return a.images() == b.images(); }

inline void each_fn(const FinSet& d, const FinSet& c, const std::function<void(const FinFn&)>& f) {
  spanvk::for_each_function(d, c, [&](const FinFn& x) {
    f(x);
    return true;
  });
}

inline FinFn comp(const FinFn& g, const FinFn& f) {
  std::vector<std::uint32_t> img(f.dom().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g.at(f.at(i));
  return FinFn(f.dom(), g.cod(), img);
}

// square a: P->X, b: P->Y over c: X->Z, d: Y->Z; true iff every cone from T
// (|T| <= tbound) factors uniquely through P
inline bool pullback(const FinFn& a, const FinFn& b, const FinFn& c, const FinFn& d,
                     std::size_t tbound = 2) {
  for (std::size_t t = 0; t <= tbound; ++t) {
    FinSet T = FinSet::numbered(t);
    bool ok = true;
    each_fn(T, a.cod(), [&](const FinFn& u) {
      each_fn(T, b.cod(), [&](const FinFn& v) {
        if (!ok || !same_map(comp(c, u), comp(d, v))) return;
        int n = 0;
        each_fn(T, a.dom(), [&](const FinFn& m) {
          if (same_map(comp(a, m), u) && same_map(comp(b, m), v)) ++n;
        });
        if (n != 1) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

struct Edge {
  std::size_t src, tgt;
  FinFn map;
};

// cocone legs[i]: parts[i] -> apex over a graph of sets; true iff every
// cocone into T (|T| <= tbound) has exactly one mediator apex -> T
inline bool colimit(const std::vector<FinSet>& parts, const std::vector<Edge>& edges,
                    const std::vector<FinFn>& legs, const FinSet& apex, std::size_t tbound = 2) {
  for (std::size_t t = 0; t <= tbound; ++t) {
    FinSet T = FinSet::numbered(t);
    std::vector<FinFn> cur;
    bool ok = true;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (!ok) return;
      if (i == parts.size()) {
        for (const auto& e : edges)
          if (!same_map(comp(cur[e.tgt], e.map), cur[e.src])) return;
        int n = 0;
        each_fn(apex, T, [&](const FinFn& m) {
          for (std::size_t j = 0; j < parts.size(); ++j)
            if (!same_map(comp(m, legs[j]), cur[j])) return;
          ++n;
        });
        if (n != 1) ok = false;
        return;
      }
      each_fn(parts[i], T, [&](const FinFn& f) {
        cur.push_back(f);
        rec(i + 1);
        cur.pop_back();
      });
    };
    rec(0);
    if (!ok) return false;
  }
  return true;
}

}  // namespace oracle
