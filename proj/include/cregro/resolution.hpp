#ifndef CREGRO_RESOLUTION_HPP
#define CREGRO_RESOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cregro/submodule.hpp"
#include "cregro/syzygy.hpp"
#include "cregro/weights.hpp"

namespace cregro {

/// The cokernel F/M of a submodule, as a module in its own right.
template <class Field>
struct Quotient {
  Submodule<Field> relations;
};

/// Graded Betti numbers beta_{i,j}, finitely supported.
class BettiTable {
 public:
  void add(int i, std::int64_t j, std::int64_t v = 1) {
    if (v == 0) return;
    auto& e = entries_[{i, j}];
    e += v;
    if (e == 0) entries_.erase({i, j});
  }

  std::int64_t at(int i, std::int64_t j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  std::int64_t total(int i) const {
    std::int64_t s = 0;
    for (const auto& [k, v] : entries_)
      if (k.first == i) s += v;
    return s;
  }

  const std::map<std::pair<int, std::int64_t>, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int max_index() const {
    int m = -1;
    for (const auto& [k, v] : entries_) m = std::max(m, k.first);
    return m;
  }

  /// max{ j - i : beta_{i,j} != 0 }; the table must be non-empty.
  std::int64_t regularity() const {
    if (entries_.empty()) throw std::domain_error("regularity of the zero module is undefined");
    std::int64_t r = std::numeric_limits<std::int64_t>::min();
    for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  /// Degrees j with beta_{i,j} != 0, increasing.
  std::vector<std::int64_t> degrees(int i) const {
    std::vector<std::int64_t> d;
    for (const auto& [k, v] : entries_)
      if (k.first == i) d.push_back(k.second);
    return d;
  }

  /// Entrywise a <= b.
  friend bool dominated_by(const BettiTable& a, const BettiTable& b) {
    for (const auto& [k, v] : a.entries_)
      if (v > b.at(k.first, k.second)) return false;
    return true;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, std::int64_t>, std::int64_t> entries_;
};

/// A graded free resolution F_l -> ... -> F_0. `maps[i]` holds the columns
/// of d_{i+1} : F_{i+1} -> F_i as elements of F_i. When the resolution
/// resolves a submodule M of `target`, `augmentation` holds the images of the
/// basis of F_0 in the ambient module (the map F_0 -> M).
template <class Field>
struct FreeResolution {
  std::vector<ModuleSpace<Field>> modules;
  std::vector<std::vector<ModuleElement<Field>>> maps;
  std::optional<ModuleSpace<Field>> target;
  std::vector<ModuleElement<Field>> augmentation;
  bool minimal = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }

  BettiTable betti() const {
    BettiTable t;
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (auto s : modules[i].descriptor().shifts) t.add(static_cast<int>(i), s);
    return t;
  }

  /// beta_{i,(a,e)} for resolutions over A[t]: (i, first degree, second degree) -> count.
  std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> bigraded_betti() const {
    std::map<std::tuple<int, std::int64_t, std::int64_t>, std::int64_t> out;
    for (std::size_t i = 0; i < modules.size(); ++i) {
      const auto& d = modules[i].descriptor();
      for (std::size_t j = 0; j < d.shifts.size(); ++j) ++out[{static_cast<int>(i), d.shifts[j], d.weights[j]}];
    }
    return out;
  }
};

namespace detail {

// res ends in F_{k-1} <- F_k with maps.back() = columns of d_k in F_{k-1};
// keeps appending kernels until they vanish.
template <class Field>
void extend_by_syzygies(FreeResolution<Field>& res, std::size_t max_length) {
  for (;;) {
    const std::size_t k = res.modules.size() - 1;
    const auto& cols = res.maps.back();
    if (cols.empty()) return;
    auto syz = syzygies(res.modules[k - 1], cols, res.modules[k].descriptor());
    if (syz.columns.empty()) return;
    if (k + 1 > max_length) throw std::logic_error("resolution longer than the Hilbert syzygy bound");
    res.modules.push_back(res.modules[k].with_module(source_descriptor(syz.source, syz.columns)));
    std::vector<ModuleElement<Field>> next;
    for (const auto& c : syz.columns) next.push_back(res.modules[k].import(c));
    res.maps.push_back(std::move(next));
  }
}

template <class Field>
ModuleSpace<Field> drop_basis(const ModuleSpace<Field>& sp, std::uint32_t idx) {
  FreeModuleDescriptor d = sp.descriptor();
  d.shifts.erase(d.shifts.begin() + idx);
  d.weights.erase(d.weights.begin() + idx);
  return sp.with_module(std::move(d));
}

/// Removes component `idx` (discarding its terms) and renumbers the rest.
template <class Field>
ModuleElement<Field> drop_component(const ModuleSpace<Field>& to, const ModuleElement<Field>& v, std::uint32_t idx) {
  std::vector<Term<Field>> t;
  for (const auto& x : v.terms()) {
    if (x.mono.comp == idx) continue;
    Term<Field> y = x;
    if (y.mono.comp > idx) --y.mono.comp;
    t.push_back(std::move(y));
  }
  return to.from_terms(std::move(t));
}

}  // namespace detail

/// Minimal graded free resolution of the submodule M (F_0 maps onto the
/// minimal generators of M).
template <class Field>
FreeResolution<Field> free_resolution(const Submodule<Field>& m) {
  FreeResolution<Field> res;
  res.target = m.ambient();
  res.minimal = true;
  if (m.is_zero()) return res;
  auto gens = minimal_generators(m.ambient(), m.generators());
  res.modules.push_back(m.ambient().with_module(source_descriptor(m.ambient(), gens)));
  res.augmentation = gens;
  auto syz = syzygies(m.ambient(), gens, res.modules[0].descriptor());
  if (syz.columns.empty()) return res;
  res.modules.push_back(res.modules[0].with_module(source_descriptor(syz.source, syz.columns)));
  std::vector<ModuleElement<Field>> first;
  for (const auto& c : syz.columns) first.push_back(res.modules[0].import(c));
  res.maps.push_back(std::move(first));
  detail::extend_by_syzygies(res, m.ambient().nvars());
  return res;
}

template <class Field>
FreeResolution<Field> minimalize(FreeResolution<Field> res);

/// Minimal graded free resolution of F/M (F_0 = F up to cancellation of
/// generators of M that are basis vectors).
template <class Field>
FreeResolution<Field> free_resolution(const Quotient<Field>& q) {
  const auto& m = q.relations;
  FreeResolution<Field> res;
  res.modules.push_back(m.ambient());
  if (!m.is_zero()) {
    auto gens = minimal_generators(m.ambient(), m.generators());
    auto desc = source_descriptor(m.ambient(), gens);
    res.modules.push_back(m.ambient().with_module(desc));
    res.maps.push_back(gens);
    detail::extend_by_syzygies(res, m.ambient().nvars());
  }
  return minimalize(std::move(res));
}

/// Checks d_i o d_{i+1} = 0 (and augmentation o d_1 = 0).
template <class Field>
bool is_complex(const FreeResolution<Field>& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i)
    for (const auto& col : res.maps[i + 1])
      if (!apply_column(res.modules[i], res.modules[i + 1], col, res.maps[i]).is_zero()) return false;
  if (res.target && !res.maps.empty())
    for (const auto& col : res.maps[0])
      if (!apply_column(*res.target, res.modules[0], col, res.augmentation).is_zero()) return false;
  return true;
}

/// Cancels unit entries of the differentials until none remain. Each pivot
/// u = d(e_c)[r] splits off the trivial complex A(-a) --u--> A(-a): the other
/// columns of the same map are cleared along row r, row c of the next map and
/// column r of the previous map are deleted.
template <class Field>
FreeResolution<Field> minimalize(FreeResolution<Field> res) {
  if (!is_complex(res)) throw std::invalid_argument("minimalize: input is not a complex");
  for (;;) {
    bool found = false;
    std::size_t pi = 0;
    std::uint32_t pr = 0, pc = 0;
    for (std::size_t i = 0; i < res.maps.size() && !found; ++i)
      for (std::uint32_t c = 0; c < res.maps[i].size() && !found; ++c)
        for (const auto& t : res.maps[i][c].terms())
          if (t.mono.is_one()) {
            found = true;
            pi = i;
            pr = t.mono.comp;
            pc = c;
            break;
          }
    if (!found) break;

    const auto& Fi = res.modules[pi];
    const auto& K = Fi.field();
    auto& cols = res.maps[pi];
    const ModuleElement<Field> pivot_col = cols[pc];
    typename Field::Element u{};
    for (const auto& t : pivot_col.terms())
      if (t.mono.comp == pr && t.mono.is_one()) u = t.coeff;
    auto minus_inv_u = K.neg(K.inv(u));
    ModuleSpace<Field> Fi_new = detail::drop_basis(Fi, pr);
    std::vector<ModuleElement<Field>> new_cols;
    for (std::uint32_t b = 0; b < cols.size(); ++b) {
      if (b == pc) continue;
      auto entry = Fi.component(cols[b], pr);
      ModuleElement<Field> v = cols[b];
      if (!entry.empty()) {
        for (auto& x : entry) x.coeff = K.mul(x.coeff, minus_inv_u);
        v = Fi.add(v, Fi.mul_poly(entry, pivot_col));
      }
      new_cols.push_back(detail::drop_component(Fi_new, v, pr));
    }
    ModuleSpace<Field> Fnext_new = detail::drop_basis(res.modules[pi + 1], pc);
    res.modules[pi] = Fi_new;
    res.modules[pi + 1] = Fnext_new;
    cols = std::move(new_cols);
    if (pi + 1 < res.maps.size())
      for (auto& v : res.maps[pi + 1]) v = detail::drop_component(Fnext_new, v, pc);
    if (pi >= 1) {
      res.maps[pi - 1].erase(res.maps[pi - 1].begin() + pr);
    } else if (res.target) {
      res.augmentation.erase(res.augmentation.begin() + pr);
    }
  }
  while (res.modules.size() > 1 && res.modules.back().rank() == 0) {
    res.modules.pop_back();
    if (!res.maps.empty()) res.maps.pop_back();
  }
  if (res.target && res.modules.size() == 1 && res.modules[0].rank() == 0) res.modules.clear();
  res.minimal = true;
  return res;
}

/// Reads a resolution over A[t] at t = alpha: every free module loses its
/// second grading and every entry is evaluated.
template <class Field>
FreeResolution<Field> specialize_t(const FreeResolution<Field>& res, const ModuleSpace<Field>& base_template,
                                   const typename Field::Element& alpha) {
  FreeResolution<Field> out;
  for (const auto& sp : res.modules)
    out.modules.push_back(base_template.with_module(FreeModuleDescriptor::with_shifts(sp.descriptor().shifts)));
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (const auto& col : res.maps[i])
      out.maps.resize(res.maps.size()), out.maps[i].push_back(evaluate_t_into(res.modules[i], out.modules[i], col, alpha));
  out.minimal = false;
  return out;
}

}  // namespace cregro

#endif  // CREGRO_RESOLUTION_HPP
