#include "spanvk/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spanvk {

FinCat::FinCat() : d_(finish(Data{})) {}

std::shared_ptr<const FinCat::Data> FinCat::finish(Data d) {
  const std::size_t n = d.objects.size(), m = d.arrows.size();
  std::set<std::string> names(d.objects.begin(), d.objects.end());
  if (names.size() != n) throw ValidationError("FinCat: duplicate object name");
  std::set<std::string> anames;
  for (const auto& a : d.arrows)
    if (!anames.insert(a.name).second) throw ValidationError("FinCat: duplicate arrow " + a.name);
  for (std::uint32_t f = 0; f < m; ++f)
    for (std::uint32_t g = 0; g < m; ++g) {
      auto c = d.comp[g * m + f];
      bool composable = d.arrows[f].tgt == d.arrows[g].src;
      if (composable != (c >= 0))
        throw ValidationError("FinCat: composite of " + d.arrows[g].name + " and " +
                              d.arrows[f].name + (composable ? " missing" : " on non-composable pair"));
      if (c >= 0 && (d.arrows[c].src != d.arrows[f].src || d.arrows[c].tgt != d.arrows[g].tgt))
        throw ValidationError("FinCat: composite has wrong boundary");
    }
  for (std::uint32_t f = 0; f < m; ++f) {
    if (d.comp[d.arrows[f].tgt * m + f] != static_cast<std::int32_t>(f) ||
        d.comp[f * m + d.arrows[f].src] != static_cast<std::int32_t>(f))
      throw ValidationError("FinCat: unit law fails at " + d.arrows[f].name);
  }
  for (std::uint32_t f = 0; f < m; ++f)
    for (std::uint32_t g = 0; g < m; ++g) {
      auto gf = d.comp[g * m + f];
      if (gf < 0) continue;
      for (std::uint32_t h = 0; h < m; ++h) {
        auto hg = d.comp[h * m + g];
        if (hg < 0) continue;
        if (d.comp[h * m + gf] != d.comp[hg * m + f])
          throw ValidationError("FinCat: associativity fails");
      }
    }
  for (std::uint32_t a = static_cast<std::uint32_t>(n); a < m; ++a) {
    bool composite = false;
    for (std::uint32_t f = static_cast<std::uint32_t>(n); f < m && !composite; ++f)
      for (std::uint32_t g = static_cast<std::uint32_t>(n); g < m; ++g)
        if (d.comp[g * m + f] == static_cast<std::int32_t>(a)) {
          composite = true;
          break;
        }
    if (!composite) d.generators.push_back(a);
  }
  return std::make_shared<const Data>(std::move(d));
}

FinCat FinCat::make(const std::vector<std::string>& objects, const std::vector<ArrowSpec>& arrows,
                    const std::vector<Composite>& composites) {
  Data d;
  d.objects = objects;
  std::map<std::string, std::uint32_t> oidx, aidx;
  for (std::uint32_t i = 0; i < objects.size(); ++i) {
    oidx[objects[i]] = i;
    d.arrows.push_back({"id_" + objects[i], i, i});
  }
  for (const auto& a : arrows) {
    auto s = oidx.find(a.src), t = oidx.find(a.tgt);
    if (s == oidx.end() || t == oidx.end())
      throw ValidationError("FinCat: arrow " + a.name + " has unknown endpoint");
    d.arrows.push_back({a.name, s->second, t->second});
  }
  for (std::uint32_t i = 0; i < d.arrows.size(); ++i) aidx[d.arrows[i].name] = i;
  const std::size_t m = d.arrows.size();
  d.comp.assign(m * m, -1);
  for (std::uint32_t f = 0; f < m; ++f) {
    d.comp[d.arrows[f].tgt * m + f] = static_cast<std::int32_t>(f);
    d.comp[f * m + d.arrows[f].src] = static_cast<std::int32_t>(f);
  }
  for (const auto& [g, f, gf] : composites) {
    auto ig = aidx.find(g), jf = aidx.find(f), k = aidx.find(gf);
    if (ig == aidx.end() || jf == aidx.end() || k == aidx.end())
      throw ValidationError("FinCat: composite mentions unknown arrow");
    if (d.arrows[jf->second].tgt != d.arrows[ig->second].src)
      throw ValidationError("FinCat: composite " + g + "∘" + f + " is not composable");
    auto& slot = d.comp[ig->second * m + jf->second];
    if (slot >= 0 && slot != static_cast<std::int32_t>(k->second))
      throw ValidationError("FinCat: conflicting composite for " + g + "∘" + f);
    slot = static_cast<std::int32_t>(k->second);
  }
  return FinCat(finish(std::move(d)));
}

FinCat FinCat::terminal() { return make({"0"}, {}); }

FinCat FinCat::discrete(std::size_t n) {
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  return make(objs, {});
}

FinCat FinCat::arrow() { return make({"0", "1"}, {{"a", "0", "1"}}); }

FinCat FinCat::span() { return make({"0", "1", "2"}, {{"f", "0", "1"}, {"g", "0", "2"}}); }

FinCat FinCat::cospan() { return make({"0", "1", "2"}, {{"f", "0", "2"}, {"g", "1", "2"}}); }

FinCat FinCat::parallel_pair() { return make({"0", "1"}, {{"u", "0", "1"}, {"v", "0", "1"}}); }

FinCat FinCat::product(const FinCat& a, const FinCat& b) {
  Data d;
  const std::size_t na = a.num_objects(), nb = b.num_objects();
  const std::size_t ma = a.num_arrows(), mb = b.num_arrows();
  for (std::uint32_t i = 0; i < na; ++i)
    for (std::uint32_t j = 0; j < nb; ++j) {
      d.objects.push_back(a.object_name(i) + "." + b.object_name(j));
      d.factor_obj.emplace_back(i, j);
    }
  // identities first, in object order, then remaining pairs
  std::vector<std::int64_t> index(ma * mb, -1);
  for (std::uint32_t i = 0; i < na; ++i)
    for (std::uint32_t j = 0; j < nb; ++j) {
      index[i * mb + j] = static_cast<std::int64_t>(d.arrows.size());
      d.arrows.push_back({"id_" + d.objects[i * nb + j], static_cast<std::uint32_t>(i * nb + j),
                          static_cast<std::uint32_t>(i * nb + j)});
      d.factor_arr.emplace_back(i, j);
    }
  for (std::uint32_t f = 0; f < ma; ++f)
    for (std::uint32_t g = 0; g < mb; ++g) {
      if (index[f * mb + g] >= 0) continue;
      index[f * mb + g] = static_cast<std::int64_t>(d.arrows.size());
      auto s = a.src(f) * nb + b.src(g), t = a.tgt(f) * nb + b.tgt(g);
      d.arrows.push_back({"(" + a.arrow(f).name + "," + b.arrow(g).name + ")",
                          static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t)});
      d.factor_arr.emplace_back(f, g);
    }
  const std::size_t m = d.arrows.size();
  d.comp.assign(m * m, -1);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      auto [f1, g1] = d.factor_arr[x];
      auto [f2, g2] = d.factor_arr[y];
      auto cf = a.compose(f2, f1), cg = b.compose(g2, g1);
      if (cf >= 0 && cg >= 0) d.comp[y * m + x] = static_cast<std::int32_t>(index[cf * mb + cg]);
    }
  return FinCat(finish(std::move(d)));
}

std::uint32_t FinCat::object_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < num_objects(); ++i)
    if (d_->objects[i] == name) return i;
  throw ValidationError("FinCat: unknown object " + name);
}

std::uint32_t FinCat::arrow_index(const std::string& name) const {
  for (std::uint32_t i = 0; i < num_arrows(); ++i)
    if (d_->arrows[i].name == name) return i;
  throw ValidationError("FinCat: unknown arrow " + name);
}

std::vector<std::uint32_t> FinCat::non_identity_arrows() const {
  std::vector<std::uint32_t> v;
  for (auto m = static_cast<std::uint32_t>(num_objects()); m < num_arrows(); ++m) v.push_back(m);
  return v;
}

std::vector<std::uint32_t> FinCat::generating_set() const {
  std::vector<std::uint32_t> chosen = generators();
  const auto m = num_arrows();
  while (true) {
    std::vector<char> known(m, 0);
    for (std::uint32_t i = 0; i < num_objects(); ++i) known[i] = 1;
    for (auto c : chosen) known[c] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t f = 0; f < m; ++f)
        for (std::uint32_t g = 0; g < m; ++g) {
          auto gf = compose(g, f);
          if (gf >= 0 && known[f] && known[g] && !known[gf]) {
            known[gf] = 1;
            grew = true;
          }
        }
    }
    auto it = std::find(known.begin(), known.end(), 0);
    if (it == known.end()) return chosen;
    chosen.push_back(static_cast<std::uint32_t>(it - known.begin()));
  }
}

bool FinCat::operator==(const FinCat& o) const {
  if (d_ == o.d_) return true;
  if (d_->objects != o.d_->objects || d_->comp != o.d_->comp) return false;
  for (std::size_t i = 0; i < d_->arrows.size(); ++i) {
    const auto &x = d_->arrows[i], &y = o.d_->arrows[i];
    if (x.name != y.name || x.src != y.src || x.tgt != y.tgt) return false;
  }
  return true;
}

}  // namespace spanvk
