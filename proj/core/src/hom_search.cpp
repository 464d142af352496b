#include "spanvk/hom_search.hpp"

#include <algorithm>

#include "spanvk/errors.hpp"

namespace spanvk {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

class Search {
 public:
  Search(const Structure& a, const Structure& b, const HomOptions& o,
         const std::function<bool(const SortMaps&)>& visit)
      : a_(a), b_(b), opts_(o), visit_(visit) {}

  std::size_t run() {
    const std::size_t ns = a_.sort_sizes.size();
    if (b_.sort_sizes.size() != ns || a_.ops.size() != b_.ops.size())
      throw BoundaryMismatch("hom search: signatures differ");
    for (std::size_t i = 0; i < a_.ops.size(); ++i)
      if (a_.ops[i].src != b_.ops[i].src || a_.ops[i].tgt != b_.ops[i].tgt)
        throw BoundaryMismatch("hom search: op boundaries differ");
    h_.assign(ns, {});
    used_.assign(ns, {});
    out_by_sort_.assign(ns, {});
    for (std::size_t s = 0; s < ns; ++s) {
      if (opts_.bijective && a_.sort_sizes[s] != b_.sort_sizes[s]) return 0;
      if (a_.sort_sizes[s] > 0 && b_.sort_sizes[s] == 0) return 0;
      h_[s].assign(a_.sort_sizes[s], kUnset);
      used_[s].assign(b_.sort_sizes[s], 0);
    }
    for (std::size_t i = 0; i < a_.ops.size(); ++i) out_by_sort_[a_.ops[i].src].push_back(i);

    for (std::size_t s = 0; s < opts_.fixed.size() && s < ns; ++s) {
      if (!opts_.fixed[s]) continue;
      const auto& f = *opts_.fixed[s];
      if (f.size() != a_.sort_sizes[s]) throw BoundaryMismatch("hom search: fixed map size");
      for (std::uint32_t x = 0; x < f.size(); ++x)
        if (!assign(s, x, f[x])) return 0;
    }
    order_variables();
    descend(0);
    return count_;
  }

 private:
  // sources of ops first so that propagation fills their targets
  void order_variables() {
    const std::size_t ns = a_.sort_sizes.size();
    std::vector<int> indeg(ns, 0);
    for (const auto& op : a_.ops)
      if (op.src != op.tgt) ++indeg[op.tgt];
    std::vector<std::uint32_t> sorts(ns);
    for (std::uint32_t s = 0; s < ns; ++s) sorts[s] = s;
    std::stable_sort(sorts.begin(), sorts.end(),
                     [&](auto x, auto y) { return indeg[x] < indeg[y]; });
    for (auto s : sorts)
      for (std::uint32_t x = 0; x < a_.sort_sizes[s]; ++x) vars_.emplace_back(s, x);
  }

  bool assign(std::uint32_t s, std::uint32_t x, std::uint32_t y) {
    if (h_[s][x] != kUnset) return h_[s][x] == y;
    if (opts_.bijective && used_[s][y]) return false;
    h_[s][x] = y;
    used_[s][y] = 1;
    trail_.emplace_back(s, x);
    for (auto oi : out_by_sort_[s]) {
      const auto& oa = a_.ops[oi];
      const auto& ob = b_.ops[oi];
      if (!assign(oa.tgt, oa.table[x], ob.table[y])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [s, x] = trail_.back();
      trail_.pop_back();
      used_[s][h_[s][x]] = 0;
      h_[s][x] = kUnset;
    }
  }

  bool descend(std::size_t v) {
    while (v < vars_.size() && h_[vars_[v].first][vars_[v].second] != kUnset) ++v;
    if (v == vars_.size()) {
      ++count_;
      return visit_(h_);
    }
    auto [s, x] = vars_[v];
    for (std::uint32_t y = 0; y < b_.sort_sizes[s]; ++y) {
      if (opts_.bijective && used_[s][y]) continue;
      std::size_t mark = trail_.size();
      bool ok = assign(s, x, y);
      if (ok && !descend(v + 1)) {
        undo(mark);
        return false;
      }
      undo(mark);
    }
    return true;
  }

  const Structure& a_;
  const Structure& b_;
  const HomOptions& opts_;
  const std::function<bool(const SortMaps&)>& visit_;
  SortMaps h_;
  std::vector<std::vector<char>> used_;
  std::vector<std::vector<std::size_t>> out_by_sort_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> vars_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> trail_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_hom(const Structure& a, const Structure& b, const HomOptions& opts,
                         const std::function<bool(const SortMaps&)>& visit) {
  Search s(a, b, opts, visit);
  return s.run();
}

std::optional<SortMaps> find_hom(const Structure& a, const Structure& b, const HomOptions& opts) {
  std::optional<SortMaps> found;
  for_each_hom(a, b, opts, [&](const SortMaps& h) {
    found = h;
    return false;
  });
  return found;
}

std::vector<std::uint64_t> structure_invariant(const Structure& s,
                                               const std::vector<bool>& fixed_sorts) {
  // sort sizes, per-op image-size profile, and for ops into fixed sorts the
  // exact fiber counts (fixed sorts are not permuted)
  std::vector<std::uint64_t> inv(s.sort_sizes.begin(), s.sort_sizes.end());
  for (const auto& op : s.ops) {
    std::vector<std::uint64_t> fib(s.sort_sizes[op.tgt], 0);
    for (auto y : op.table) ++fib[y];
    bool fixed = op.tgt < fixed_sorts.size() && fixed_sorts[op.tgt];
    bool src_fixed = op.src < fixed_sorts.size() && fixed_sorts[op.src];
    if (src_fixed) continue;
    if (!fixed) std::sort(fib.begin(), fib.end());
    inv.push_back(0xfeedu);
    inv.insert(inv.end(), fib.begin(), fib.end());
  }
  return inv;
}

}  // namespace spanvk

namespace spanvk {

bool IsoDeduper::add(const Structure& s, std::size_t* match) {
  auto inv = structure_invariant(s, fixed_);
  auto it = buckets_.try_emplace(std::move(inv)).first;
  HomOptions opts;
  opts.bijective = true;
  opts.fixed.resize(s.sort_sizes.size());
  for (std::size_t i = 0; i < fixed_.size() && i < s.sort_sizes.size(); ++i)
    if (fixed_[i]) {
      std::vector<std::uint32_t> id(s.sort_sizes[i]);
      for (std::uint32_t x = 0; x < id.size(); ++x) id[x] = x;
      opts.fixed[i] = std::move(id);
    }
  for (const auto& [rep, idx] : it->second)
    if (find_hom(s, rep, opts)) {
      if (match) *match = idx;
      return false;
    }
  it->second.emplace_back(s, count_);
  if (match) *match = count_;
  ++count_;
  return true;
}

}  // namespace spanvk
