#ifndef CREGRO_INVARIANTS_HPP
#define CREGRO_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cregro/hilbert.hpp"
#include "cregro/resolution.hpp"
#include "cregro/submodule.hpp"
#include "cregro/syzygy.hpp"

namespace cregro {

/// Castelnuovo-Mumford regularity of the submodule M, max{j - i}.
template <class Field>
std::int64_t regularity(const Submodule<Field>& m) {
  if (m.is_zero()) throw std::domain_error("regularity of the zero module is undefined");
  return free_resolution(m).betti().regularity();
}

namespace detail {

/// All monomials of degree d in the first n variables, in component `comp`.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t var, std::int64_t left) -> void {
    if (var + 1 == n) {
      m.exp[var] = static_cast<Exponent>(left);
      out.push_back(m);
      return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
      m.exp[var] = static_cast<Exponent>(e);
      self(self, var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Gaussian elimination on leading terms: returns monic vectors with
/// pairwise distinct leading monomials spanning the same K-space.
template <class Field>
std::vector<ModuleElement<Field>> echelon(const ModuleSpace<Field>& sp, const std::vector<ModuleElement<Field>>& vecs) {
  std::vector<ModuleElement<Field>> rows;
  const auto& K = sp.field();
  for (auto v : vecs) {
    for (;;) {
      if (v.is_zero()) break;
      auto it = std::find_if(rows.begin(), rows.end(),
                             [&](const ModuleElement<Field>& r) { return r.lead_monomial() == v.lead_monomial(); });
      if (it == rows.end()) break;
      v = sp.axpy(v, K.neg(v.lead().coeff), Monomial{}, *it);
    }
    if (!v.is_zero()) rows.push_back(sp.make_monic(v));
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return sp.order().greater(a.lead_monomial(), b.lead_monomial());
  });
  // back substitution, bottom row first, so the basis is the reduced one
  for (std::size_t j = rows.size(); j-- > 0;) {
    const Monomial& lm = rows[j].lead_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      for (const auto& t : rows[i].terms()) {
        if (t.mono == lm) {
          rows[i] = sp.axpy(rows[i], K.neg(t.coeff), Monomial{}, rows[j]);
          break;
        }
      }
    }
  }
  return rows;
}

}  // namespace detail

/// Degree-a component of M as a K-basis (echelon form).
template <class Field>
std::vector<ModuleElement<Field>> graded_piece(const Submodule<Field>& m, std::int64_t a) {
  const auto& sp = m.ambient();
  std::vector<ModuleElement<Field>> vecs;
  if (m.is_zero()) return vecs;
  for (const auto& g : m.groebner_basis()) {
    std::int64_t d = sp.std_degree(g);
    if (d > a) continue;
    for (const auto& u : detail::monomials_of_degree(sp.nvars(), a - d))
      vecs.push_back(sp.mul_term(g, sp.field().one(), u));
  }
  return detail::echelon(sp, vecs);
}

/// M<a>: the submodule generated by M_a.
template <class Field>
Submodule<Field> truncation(const Submodule<Field>& m, std::int64_t a) {
  return Submodule<Field>::spanned_by(m.ambient(), graded_piece(m, a));
}

/// Degrees j with beta_{0,j}(M) != 0, increasing.
template <class Field>
std::vector<std::int64_t> generator_degrees(const Submodule<Field>& m) {
  std::vector<std::int64_t> d;
  for (const auto& g : minimal_generators(m.ambient(), m.generators())) d.push_back(m.ambient().std_degree(g));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

struct CregResult {
  std::int64_t value = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> profile;  // d -> reg(M<d>) - d
};

/// creg(M) = max{ reg(M<d>) - d : beta_{0d}(M) != 0 }.
template <class Field>
CregResult creg_profile(const Submodule<Field>& m) {
  if (m.is_zero()) throw std::domain_error("componentwise regularity of the zero module is undefined");
  CregResult r;
  bool first = true;
  for (auto d : generator_degrees(m)) {
    std::int64_t v = regularity(truncation(m, d)) - d;
    r.profile.emplace_back(d, v);
    if (first || v > r.value) r.value = v;
    first = false;
  }
  return r;
}

template <class Field>
std::int64_t creg(const Submodule<Field>& m) {
  return creg_profile(m).value;
}

template <class Field>
bool is_componentwise_linear(const Submodule<Field>& m) {
  return creg(m) == 0;
}

/// Omega_i = im d_{i+1} inside F_i of the given resolution; zero beyond
/// its length. Indices below zero are the caller's business.
template <class Field>
Submodule<Field> syzygy_module(const FreeResolution<Field>& res, int i) {
  if (i < 0) throw std::invalid_argument("negative syzygy index");
  if (static_cast<std::size_t>(i) >= res.modules.size()) {
    const auto& last = res.modules.empty() ? *res.target : res.modules.back();
    return Submodule<Field>::zero(last.with_module(FreeModuleDescriptor{}));
  }
  if (static_cast<std::size_t>(i) >= res.maps.size()) return Submodule<Field>::zero(res.modules[i]);
  return Submodule<Field>::spanned_by(res.modules[i], res.maps[i]);
}

/// Omega_i(M), with Omega_i(M) = M for i < 0.
template <class Field>
Submodule<Field> syzygy_module(const Submodule<Field>& m, int i) {
  if (i < 0) return m;
  return syzygy_module(free_resolution(m), i);
}

template <class Field>
Submodule<Field> syzygy_module(const Quotient<Field>& q, int i) {
  if (i < 0) throw std::invalid_argument("negative syzygy index");
  return syzygy_module(free_resolution(q), i);
}

namespace detail {

/// Keeps only the terms of total degree one in the variables.
template <class Field>
ModuleElement<Field> linear_part(const ModuleSpace<Field>& sp, const ModuleElement<Field>& v) {
  std::vector<Term<Field>> t;
  for (const auto& x : v.terms())
    if (x.mono.total_degree() == 1) t.push_back(x);
  return sp.from_terms(std::move(t));
}

}  // namespace detail

/// Homological degrees i >= 1 where lin(F.) has homology, for the minimal
/// resolution F. of M.
template <class Field>
std::vector<int> linear_homology_support(const FreeResolution<Field>& res) {
  std::vector<int> out;
  const int l = res.length();
  std::vector<std::vector<ModuleElement<Field>>> lin(res.maps.size());
  for (std::size_t k = 0; k < res.maps.size(); ++k)
    for (const auto& c : res.maps[k]) lin[k].push_back(detail::linear_part(res.modules[k], c));
  for (int i = 1; i <= l; ++i) {
    const auto& src = res.modules[i];
    const auto& tgt = res.modules[i - 1];
    auto ker = syzygies(tgt, lin[i - 1], src.descriptor(), SyzygyStrategy::GroebnerBlock);
    std::vector<ModuleElement<Field>> image;
    if (static_cast<std::size_t>(i) < lin.size())
      for (const auto& c : lin[i])
        if (!c.is_zero()) image.push_back(c);
    auto basis = image.empty() ? std::vector<ModuleElement<Field>>{} : buchberger(src, image);
    for (const auto& z : ker.columns) {
      if (!normal_form(src, src.import(z), basis).is_zero()) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

/// ld(M) = sup{ i : H_i(lin F.) != 0 }; 0 when lin(F.) is exact in positive
/// degrees (H_0 never vanishes for M != 0).
template <class Field>
int linear_defect(const Submodule<Field>& m) {
  if (m.is_zero()) return 0;
  auto supp = linear_homology_support(free_resolution(m));
  return supp.empty() ? 0 : supp.back();
}

/// Upper end of the tabulation window used for Hilbert comparisons:
/// top degree of the reduced basis plus n plus slack.
template <class Field>
std::int64_t hilbert_bound(const Submodule<Field>& m) {
  std::int64_t top = 0;
  for (auto s : m.ambient().descriptor().shifts) top = std::max(top, s);
  for (const auto& g : m.groebner_basis()) top = std::max(top, m.ambient().std_degree(g));
  return top + static_cast<std::int64_t>(m.ambient().nvars()) + 2;
}

template <class Field>
std::int64_t hilbert_floor(const Submodule<Field>& m) {
  std::int64_t lo = 0;
  for (auto s : m.ambient().descriptor().shifts) lo = std::min(lo, s);
  return lo;
}

}  // namespace cregro

#endif  // CREGRO_INVARIANTS_HPP
