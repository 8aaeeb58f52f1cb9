#ifndef CREGRO_HILBERT_HPP
#define CREGRO_HILBERT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cregro/submodule.hpp"

namespace cregro {

namespace detail {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of monomials of degree `deg` in `nvars` variables.
inline std::int64_t monomial_count(std::size_t nvars, std::int64_t deg) {
  if (deg < 0) return 0;
  return binomial(deg + static_cast<std::int64_t>(nvars) - 1, static_cast<std::int64_t>(nvars) - 1);
}

/// Counts monomials of degree `deg` in component `comp` not divisible by any
/// of `lms` (which all lie in that component).
inline std::int64_t count_standard(std::size_t nvars, std::int64_t deg, const std::vector<Monomial>& lms,
                                   std::uint32_t comp) {
  if (deg < 0) return 0;
  if (lms.empty()) return monomial_count(nvars, deg);
  std::int64_t count = 0;
  Monomial m;
  m.comp = comp;
  // depth-first over exponent vectors with the remaining degree on the last variable
  auto rec = [&](auto&& self, std::size_t var, std::int64_t left) -> void {
    if (var + 1 == nvars) {
      m.exp[var] = static_cast<Exponent>(left);
      for (const auto& l : lms)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
      m.exp[var] = static_cast<Exponent>(e);
      self(self, var + 1, left - e);
    }
    m.exp[var] = 0;
  };
  rec(rec, 0, deg);
  return count;
}

}  // namespace detail

/// dim_K (F/M)_d, by counting standard monomials of the leading module.
template <class Field>
std::int64_t quotient_hilbert_value(const Submodule<Field>& m, std::int64_t degree) {
  const auto& sp = m.ambient();
  std::vector<std::vector<Monomial>> lms(sp.rank());
  for (const auto& g : m.groebner_basis()) lms[g.lead_monomial().comp].push_back(g.lead_monomial());
  std::int64_t total = 0;
  for (std::uint32_t j = 0; j < sp.rank(); ++j)
    total += detail::count_standard(sp.nvars(), degree - sp.descriptor().shifts[j], lms[j], j);
  return total;
}

template <class Field>
std::int64_t free_hilbert_value(const ModuleSpace<Field>& sp, std::int64_t degree) {
  std::int64_t total = 0;
  for (auto s : sp.descriptor().shifts) total += detail::monomial_count(sp.nvars(), degree - s);
  return total;
}

/// dim_K M_d for the submodule itself.
template <class Field>
std::int64_t hilbert_value(const Submodule<Field>& m, std::int64_t degree) {
  return free_hilbert_value(m.ambient(), degree) - quotient_hilbert_value(m, degree);
}

/// Hilbert function of F/M tabulated on [lo, hi], plus, when every component
/// has at most 12 leading monomials, the numerator N(z) of the Hilbert series
/// N(z) / (1 - z)^n obtained by inclusion-exclusion over the lcm lattice.
struct HilbertFunction {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<std::int64_t> values;
  std::optional<std::map<std::int64_t, std::int64_t>> numerator;
  std::size_t nvars = 0;

  std::int64_t at(std::int64_t d) const { return values.at(static_cast<std::size_t>(d - lo)); }

  /// Value predicted by the rational certificate.
  std::optional<std::int64_t> from_numerator(std::int64_t d) const {
    if (!numerator) return std::nullopt;
    std::int64_t v = 0;
    for (const auto& [k, c] : *numerator) v += c * detail::monomial_count(nvars, d - k);
    return v;
  }
};

template <class Field>
HilbertFunction quotient_hilbert_function(const Submodule<Field>& m, std::int64_t lo, std::int64_t hi) {
  HilbertFunction h;
  h.lo = lo;
  h.hi = hi;
  h.nvars = m.ambient().nvars();
  for (std::int64_t d = lo; d <= hi; ++d) h.values.push_back(quotient_hilbert_value(m, d));
  const auto& sp = m.ambient();
  std::vector<std::vector<Monomial>> lms(sp.rank());
  for (const auto& g : m.groebner_basis()) lms[g.lead_monomial().comp].push_back(g.lead_monomial());
  std::map<std::int64_t, std::int64_t> num;
  for (std::uint32_t j = 0; j < sp.rank(); ++j) {
    const auto& L = lms[j];
    if (L.size() > 12) return h;
    for (std::uint32_t mask = 0; mask < (1u << L.size()); ++mask) {
      Monomial l;
      l.comp = j;
      int bits = 0;
      for (std::size_t k = 0; k < L.size(); ++k)
        if (mask & (1u << k)) {
          l = lcm(l, L[k]);
          ++bits;
        }
      num[sp.std_degree(l)] += (bits % 2 == 0) ? 1 : -1;
    }
  }
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  h.numerator = std::move(num);
  return h;
}

}  // namespace cregro

#endif  // CREGRO_HILBERT_HPP
