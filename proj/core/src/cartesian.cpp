#include <algorithm>
#include <numeric>

#include "spanvk/catkit.hpp"

namespace spanvk {

namespace {

// (E, tau) flattened with the sorts of the target appended and marked fixed
Structure over_structure(const NatTrans& t, std::vector<bool>* fixed) {
  Structure e = diagram_structure(t.src());
  Structure d = diagram_structure(t.tgt());
  const auto n = static_cast<std::uint32_t>(e.sort_sizes.size());
  Structure s = e;
  s.sort_sizes.insert(s.sort_sizes.end(), d.sort_sizes.begin(), d.sort_sizes.end());
  for (auto op : d.ops) {
    op.src += n;
    op.tgt += n;
    s.ops.push_back(std::move(op));
  }
  const auto nk = static_cast<std::uint32_t>(t.src().base().shape().num_objects());
  for (std::uint32_t j = 0; j < t.src().shape().num_objects(); ++j)
    for (std::uint32_t k = 0; k < nk; ++k)
      s.ops.push_back({j * nk + k, n + j * nk + k, t.at(j).at(k).images()});
  if (fixed) {
    fixed->assign(2 * n, false);
    for (std::uint32_t i = n; i < 2 * n; ++i) (*fixed)[i] = true;
  }
  return s;
}

struct Dsu {
  std::vector<std::uint32_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

class CartesianEnumerator {
 public:
  CartesianEnumerator(const Diagram& d, std::size_t bound, const CartesianFilter& filter)
      : d_(d), base_(d.base()), j_(d.shape()), k_(d.base().shape()), bound_(bound), filter_(filter) {}

  std::vector<CartesianOver> run() {
    nj_ = static_cast<std::uint32_t>(j_.num_objects());
    nk_ = static_cast<std::uint32_t>(k_.num_objects());
    jgens_ = j_.generating_set();
    kgens_ = k_.generating_set();
    offset_.assign(nj_ * nk_ + 1, 0);
    for (std::uint32_t s = 0; s < nj_ * nk_; ++s)
      offset_[s + 1] = offset_[s] + static_cast<std::uint32_t>(dset(s).size());
    Dsu dsu(offset_.back());
    for (auto u : jgens_)
      for (std::uint32_t k = 0; k < nk_; ++k) {
        const auto& f = d_.arrow(u).at(k);
        for (std::uint32_t x = 0; x < f.dom().size(); ++x) {
          Edge e{u, k, x, node(j_.src(u), k, x), node(j_.tgt(u), k, f.at(x))};
          if (!dsu.unite(e.from, e.to)) free_edges_.push_back(e);
        }
      }
    comp_of_.resize(offset_.back());
    std::vector<std::int64_t> comp_index(offset_.back(), -1);
    for (std::uint32_t v = 0; v < offset_.back(); ++v) {
      auto r = dsu.find(v);
      if (comp_index[r] < 0) comp_index[r] = static_cast<std::int64_t>(ncomp_++);
      comp_of_[v] = static_cast<std::uint32_t>(comp_index[r]);
    }
    std::vector<std::size_t> sizes(ncomp_, 0);
    while (true) {
      with_sizes(sizes);
      std::size_t i = 0;
      while (i < ncomp_ && ++sizes[i] > bound_) sizes[i++] = 0;
      if (i == ncomp_) break;
    }
    return std::move(out_);
  }

 private:
  struct Edge {
    std::uint32_t u, k, x, from, to;
  };

  const FinSet& dset(std::uint32_t sort) const { return d_.at(sort / nk_).at(sort % nk_); }
  std::uint32_t node(std::uint32_t j, std::uint32_t k, std::uint32_t x) const {
    return offset_[j * nk_ + k] + x;
  }

  void with_sizes(const std::vector<std::size_t>& sizes) {
    // fiber sets: E(j)_k = { x#t }, index tables (x, t) -> position
    esets_.clear();
    epos_.clear();
    etau_.clear();
    for (std::uint32_t s = 0; s < nj_ * nk_; ++s) {
      const auto& ds = dset(s);
      std::vector<std::string> labels;
      for (std::uint32_t x = 0; x < ds.size(); ++x)
        for (std::size_t t = 0; t < sizes[comp_of_[offset_[s] + x]]; ++t)
          labels.push_back(ds[x] + "#" + std::to_string(t));
      FinSet es(labels);
      std::vector<std::vector<std::uint32_t>> pos(ds.size());
      std::vector<std::uint32_t> tau(es.size());
      for (std::uint32_t x = 0; x < ds.size(); ++x)
        for (std::size_t t = 0; t < sizes[comp_of_[offset_[s] + x]]; ++t) {
          auto i = es.index_of(ds[x] + "#" + std::to_string(t));
          pos[x].push_back(i);
          tau[i] = x;
        }
      esets_.push_back(es);
      epos_.push_back(std::move(pos));
      etau_.push_back(std::move(tau));
    }
    sizes_ = &sizes;
    perms_.assign(free_edges_.size(), {});
    choose_perm(0);
  }

  std::size_t fiber(std::uint32_t nodeidx) const { return (*sizes_)[comp_of_[nodeidx]]; }

  void choose_perm(std::size_t i) {
    if (i == free_edges_.size()) {
      build();
      return;
    }
    std::vector<std::uint32_t> p(fiber(free_edges_[i].from));
    std::iota(p.begin(), p.end(), 0u);
    do {
      perms_[i] = p;
      choose_perm(i + 1);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  void build() {
    // J-maps on generators, per k
    std::vector<std::vector<std::vector<std::uint32_t>>> jmap(jgens_.size(),
                                                              std::vector<std::vector<std::uint32_t>>(nk_));
    for (std::size_t g = 0; g < jgens_.size(); ++g) {
      auto u = jgens_[g];
      for (std::uint32_t k = 0; k < nk_; ++k) {
        auto s = j_.src(u) * nk_ + k, t = j_.tgt(u) * nk_ + k;
        std::vector<std::uint32_t> img(esets_[s].size());
        const auto& f = d_.arrow(u).at(k);
        for (std::uint32_t x = 0; x < f.dom().size(); ++x)
          for (std::size_t q = 0; q < epos_[s][x].size(); ++q)
            img[epos_[s][x][q]] = epos_[t][f.at(x)][q];
        jmap[g][k] = std::move(img);
      }
    }
    for (std::size_t i = 0; i < free_edges_.size(); ++i) {
      const auto& e = free_edges_[i];
      std::size_t g = std::find(jgens_.begin(), jgens_.end(), e.u) - jgens_.begin();
      auto s = j_.src(e.u) * nk_ + e.k, t = j_.tgt(e.u) * nk_ + e.k;
      auto y = d_.arrow(e.u).at(e.k).at(e.x);
      for (std::size_t q = 0; q < perms_[i].size(); ++q)
        jmap[g][e.k][epos_[s][e.x][q]] = epos_[t][y][perms_[i][q]];
    }
    // K-maps: for each K-generator, every family over D's map that commutes
    // with the J-maps
    std::vector<std::vector<SortMaps>> kfamilies;
    for (auto m : kgens_) {
      auto ka = k_.src(m), kb = k_.tgt(m);
      Structure A = slice_structure(ka, jmap), B = slice_structure(kb, jmap);
      HomOptions o;
      o.fixed.resize(2 * nj_);
      for (std::uint32_t j = 0; j < nj_; ++j) o.fixed[nj_ + j] = d_.at(j).map(m).images();
      std::vector<SortMaps> fam;
      for_each_hom(A, B, o, [&](const SortMaps& h) {
        fam.push_back(h);
        return true;
      });
      if (fam.empty()) return;
      kfamilies.push_back(std::move(fam));
    }
    std::vector<std::size_t> pick(kgens_.size(), 0);
    while (true) {
      emit(jmap, kfamilies, pick);
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] >= kfamilies[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }

  // sorts: E(j)_k for all j, then D(j)_k; ops: J-generators on E and D, tau
  Structure slice_structure(std::uint32_t k,
                            const std::vector<std::vector<std::vector<std::uint32_t>>>& jmap) const {
    Structure s;
    for (std::uint32_t j = 0; j < nj_; ++j)
      s.sort_sizes.push_back(static_cast<std::uint32_t>(esets_[j * nk_ + k].size()));
    for (std::uint32_t j = 0; j < nj_; ++j)
      s.sort_sizes.push_back(static_cast<std::uint32_t>(d_.at(j).at(k).size()));
    for (std::size_t g = 0; g < jgens_.size(); ++g) {
      auto u = jgens_[g];
      s.ops.push_back({j_.src(u), j_.tgt(u), jmap[g][k]});
      s.ops.push_back({nj_ + j_.src(u), nj_ + j_.tgt(u), d_.arrow(u).at(k).images()});
    }
    for (std::uint32_t j = 0; j < nj_; ++j) s.ops.push_back({j, nj_ + j, etau_[j * nk_ + k]});
    return s;
  }

  void emit(const std::vector<std::vector<std::vector<std::uint32_t>>>& jmap,
            const std::vector<std::vector<SortMaps>>& kfamilies, const std::vector<std::size_t>& pick) {
    std::vector<Object> eobj;
    try {
      for (std::uint32_t j = 0; j < nj_; ++j) {
        std::vector<FinSet> sets;
        for (std::uint32_t k = 0; k < nk_; ++k) sets.push_back(esets_[j * nk_ + k]);
        std::vector<std::optional<FinFn>> maps(k_.num_arrows());
        for (std::uint32_t k = 0; k < nk_; ++k) maps[k] = FinFn::identity(sets[k]);
        for (std::size_t g = 0; g < kgens_.size(); ++g) {
          auto m = kgens_[g];
          maps[m] = FinFn(sets[k_.src(m)], sets[k_.tgt(m)], kfamilies[g][pick[g]][j]);
        }
        complete(k_, maps);
        std::vector<FinFn> ms;
        for (auto& f : maps) ms.push_back(*f);
        eobj.emplace_back(std::move(sets), std::move(ms));
        base_.validate(eobj.back());
      }
      std::vector<std::pair<std::uint32_t, Morphism>> gens;
      for (std::size_t g = 0; g < jgens_.size(); ++g) {
        auto u = jgens_[g];
        std::vector<FinFn> c;
        for (std::uint32_t k = 0; k < nk_; ++k)
          c.emplace_back(esets_[j_.src(u) * nk_ + k], esets_[j_.tgt(u) * nk_ + k], jmap[g][k]);
        gens.emplace_back(u, Morphism(eobj[j_.src(u)], eobj[j_.tgt(u)], std::move(c)));
      }
      Diagram e = Diagram::from_generators(j_, base_, eobj, gens);
      std::vector<Morphism> tau;
      for (std::uint32_t j = 0; j < nj_; ++j) {
        std::vector<FinFn> c;
        for (std::uint32_t k = 0; k < nk_; ++k)
          c.emplace_back(esets_[j * nk_ + k], d_.at(j).at(k), etau_[j * nk_ + k]);
        tau.emplace_back(eobj[j], d_.at(j), std::move(c));
      }
      NatTrans t(e, d_, std::move(tau));
      if (!is_cartesian(t)) throw Error("enumerate_cartesian_into: produced a non-cartesian candidate");
      if (filter_ && !filter_(e, t)) return;
      std::vector<bool> fixed;
      Structure s = over_structure(t, &fixed);
      if (!dedupe_) dedupe_.emplace(fixed);
      if (dedupe_->add(s)) out_.push_back({e, t});
    } catch (const ValidationError&) {
      // relations of J or K not respected by this choice
    }
  }

  static void complete(const FinCat& c, std::vector<std::optional<FinFn>>& maps) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t f = 0; f < c.num_arrows(); ++f)
        for (std::uint32_t g = 0; g < c.num_arrows(); ++g) {
          auto gf = c.compose(g, f);
          if (gf >= 0 && maps[f] && maps[g] && !maps[gf]) {
            maps[gf] = compose(*maps[g], *maps[f]);
            grew = true;
          }
        }
    }
  }

  const Diagram& d_;
  const BaseCat& base_;
  const FinCat& j_;
  const FinCat& k_;
  std::size_t bound_;
  const CartesianFilter& filter_;
  std::uint32_t nj_ = 0, nk_ = 0;
  std::vector<std::uint32_t> jgens_, kgens_;
  std::vector<std::uint32_t> offset_;
  std::vector<Edge> free_edges_;
  std::vector<std::uint32_t> comp_of_;
  std::size_t ncomp_ = 0;
  const std::vector<std::size_t>* sizes_ = nullptr;
  std::vector<FinSet> esets_;
  std::vector<std::vector<std::vector<std::uint32_t>>> epos_;
  std::vector<std::vector<std::uint32_t>> etau_;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::optional<IsoDeduper> dedupe_;
  std::vector<CartesianOver> out_;
};

}  // namespace

std::vector<CartesianOver> enumerate_cartesian_into(const Diagram& d, std::size_t fiber_bound,
                                                    const CartesianFilter& filter) {
  CartesianEnumerator e(d, fiber_bound, filter);
  return e.run();
}

bool iso_over(const NatTrans& a, const NatTrans& b) {
  if (!(a.tgt() == b.tgt())) throw BoundaryMismatch("iso_over: targets differ");
  std::vector<bool> fixed;
  Structure sa = over_structure(a, &fixed), sb = over_structure(b, nullptr);
  HomOptions o;
  o.bijective = true;
  o.fixed.resize(fixed.size());
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i]) {
      std::vector<std::uint32_t> id(sa.sort_sizes[i]);
      std::iota(id.begin(), id.end(), 0u);
      o.fixed[i] = std::move(id);
    }
  return find_hom(sa, sb, o).has_value();
}

}  // namespace spanvk
