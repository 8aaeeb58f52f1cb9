#ifndef CREGRO_MONOMIAL_HPP
#define CREGRO_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cregro {

inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::uint16_t;

/// X^u e_j. Unused exponent slots are zero, so whole-array loops are safe for
/// any ring size up to kMaxVars.
struct Monomial {
  std::array<Exponent, kMaxVars> exp{};
  std::uint32_t comp = 0;  // 0-based basis index

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](Exponent e) { return e == 0; });
  }

  /// Same component and componentwise exponent comparison.
  bool divides(const Monomial& other) const {
    if (comp != other.comp) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
};

/// Product of a ring monomial (component ignored) and a module monomial.
inline Monomial multiply(const Monomial& ring_part, const Monomial& m) {
  Monomial r;
  r.comp = m.comp;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{ring_part.exp[i]} + m.exp[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    r.exp[i] = static_cast<Exponent>(s);
  }
  return r;
}

/// m / d as a ring monomial; requires d.divides(m).
inline Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<Exponent>(m.exp[i] - d.exp[i]);
  return r;
}

/// lcm of two monomials in the same component.
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.comp = a.comp;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = m.comp * 0x9E3779B97F4A7C15ull;
    for (auto e : m.exp) h = (h ^ e) * 0x100000001B3ull;
    return h;
  }
};

enum class RingOrder { Lex, DegRevLex };
enum class ModuleOrder { PositionOverTerm, TermOverPosition };

/// A monomial order on a free module.
///
/// Comparison proceeds through up to four stages:
///   1. tag block: components at or above `tag_start` are smaller than all
///      others (elimination order used for syzygy extraction);
///   2. an optional leading weight (var weights and per-component weights);
///   3. position-over-term or term-over-position;
///   4. the ring order (lex, or graded reverse lex with positive grading and
///      component shifts entering the degree).
///
/// Component 0 is the largest position.
class MonomialOrder {
 public:
  MonomialOrder() { grading_.fill(1); }

  MonomialOrder(RingOrder ring, ModuleOrder module, std::vector<std::int64_t> grading = {},
                std::vector<std::int64_t> shifts = {})
      : ring_(ring), module_(module), shifts_(std::move(shifts)) {
    grading_.fill(1);
    if (grading.size() > kMaxVars) throw std::invalid_argument("too many variables");
    for (std::size_t i = 0; i < grading.size(); ++i) {
      if (grading[i] <= 0) throw std::invalid_argument("grading must be positive");
      grading_[i] = grading[i];
    }
  }

  MonomialOrder with_leading_weight(std::vector<std::int64_t> var_weights,
                                    std::vector<std::int64_t> comp_weights) const {
    MonomialOrder o = *this;
    o.lead_vars_.fill(0);
    for (std::size_t i = 0; i < var_weights.size() && i < kMaxVars; ++i) o.lead_vars_[i] = var_weights[i];
    o.lead_comps_ = std::move(comp_weights);
    o.has_lead_ = true;
    return o;
  }

  MonomialOrder with_tag_block(std::uint32_t first_tag, std::vector<std::int64_t> shifts) const {
    MonomialOrder o = *this;
    o.tag_start_ = first_tag;
    o.shifts_ = std::move(shifts);
    return o;
  }

  MonomialOrder with_shifts(std::vector<std::int64_t> shifts) const {
    MonomialOrder o = *this;
    o.shifts_ = std::move(shifts);
    return o;
  }

  MonomialOrder without_tag_block() const {
    MonomialOrder o = *this;
    o.tag_start_.reset();
    return o;
  }

  RingOrder ring_order() const { return ring_; }
  ModuleOrder module_order() const { return module_; }
  bool has_leading_weight() const { return has_lead_; }
  const std::array<std::int64_t, kMaxVars>& grading() const { return grading_; }
  const std::vector<std::int64_t>& shifts() const { return shifts_; }
  std::optional<std::uint32_t> tag_start() const { return tag_start_; }

  std::int64_t shift(std::uint32_t comp) const { return comp < shifts_.size() ? shifts_[comp] : 0; }

  /// Degree under the order's grading, including the component shift.
  std::int64_t degree(const Monomial& m) const {
    std::int64_t d = shift(m.comp);
    for (std::size_t i = 0; i < kMaxVars; ++i) d += grading_[i] * m.exp[i];
    return d;
  }

  /// Three-way comparison: positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (tag_start_) {
      bool ta = a.comp >= *tag_start_, tb = b.comp >= *tag_start_;
      if (ta != tb) return ta ? -1 : 1;
    }
    if (has_lead_) {
      std::int64_t wa = lead_weight(a), wb = lead_weight(b);
      if (wa != wb) return wa > wb ? 1 : -1;
    }
    if (module_ == ModuleOrder::PositionOverTerm && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    int c = compare_ring(a, b);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::int64_t lead_weight(const Monomial& m) const {
    std::int64_t w = m.comp < lead_comps_.size() ? lead_comps_[m.comp] : 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) w += lead_vars_[i] * m.exp[i];
    return w;
  }

  int compare_ring(const Monomial& a, const Monomial& b) const {
    if (ring_ == RingOrder::Lex) {
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    }
    std::int64_t da = degree(a), db = degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  RingOrder ring_ = RingOrder::DegRevLex;
  ModuleOrder module_ = ModuleOrder::PositionOverTerm;
  std::array<std::int64_t, kMaxVars> grading_{};
  std::vector<std::int64_t> shifts_;
  bool has_lead_ = false;
  std::array<std::int64_t, kMaxVars> lead_vars_{};
  std::vector<std::int64_t> lead_comps_;
  std::optional<std::uint32_t> tag_start_;
};

}  // namespace cregro

#endif  // CREGRO_MONOMIAL_HPP
