#ifndef CREGRO_WEIGHTS_HPP
#define CREGRO_WEIGHTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cregro/element.hpp"

namespace cregro {

/// (omega, epsilon): non-negative weights on the variables and on the basis
/// vectors of F.
struct WeightData {
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> epsilon;

  WeightData() = default;
  WeightData(std::vector<std::int64_t> o, std::vector<std::int64_t> e) : omega(std::move(o)), epsilon(std::move(e)) {
    for (auto v : omega)
      if (v < 0) throw std::invalid_argument("weights must be non-negative");
    for (auto v : epsilon)
      if (v < 0) throw std::invalid_argument("weights must be non-negative");
  }

  static WeightData zero(std::size_t n, std::size_t m) {
    return WeightData(std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(m, 0));
  }

  bool is_zero() const {
    for (auto v : omega)
      if (v != 0) return false;
    for (auto v : epsilon)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const WeightData&, const WeightData&) = default;
};

inline std::int64_t weight_of(const Monomial& m, const WeightData& w) {
  if (m.comp >= w.epsilon.size()) throw std::out_of_range("component index out of range");
  std::int64_t s = w.epsilon[m.comp];
  for (std::size_t i = 0; i < w.omega.size() && i < kMaxVars; ++i) s += w.omega[i] * m.exp[i];
  return s;
}

template <class Field>
std::int64_t max_weight(const ModuleElement<Field>& f, const WeightData& w) {
  if (f.is_zero()) throw std::domain_error("initial form of zero undefined");
  std::int64_t best = weight_of(f.terms().front().mono, w);
  for (const auto& t : f.terms()) best = std::max(best, weight_of(t.mono, w));
  return best;
}

/// The sub-sum of the terms of maximal (omega, epsilon)-weight.
template <class Field>
ModuleElement<Field> initial_form(const ModuleElement<Field>& f, const WeightData& w) {
  std::int64_t top = max_weight(f, w);
  std::vector<Term<Field>> kept;
  for (const auto& t : f.terms())
    if (weight_of(t.mono, w) == top) kept.push_back(t);
  return ModuleElement<Field>(f.rank(), std::move(kept));
}

/// Free module over the bigraded ring A[t], deg X_i = (1, w_i), deg t = (0, 1),
/// deg e_j = (d_j, epsilon_j). t is the last variable (index n). The order is
/// graded reverse lex, term-over-position, for the total grading
/// deg X_i = 1 + w_i, deg t = 1; with t last, t^k divides the leading term of a
/// homogeneous element iff it divides the element.
template <class Field>
ModuleSpace<Field> tilde_space(Field field, std::size_t n, const std::vector<std::int64_t>& omega,
                               FreeModuleDescriptor desc) {
  if (n + 1 > kMaxVars) throw std::invalid_argument("too many variables for the extended ring");
  if (omega.size() != n) throw std::invalid_argument("omega has the wrong length");
  if (desc.weights.size() != desc.shifts.size()) desc.weights.resize(desc.shifts.size(), 0);
  std::array<std::int64_t, kMaxVars> sg{}, wg{};
  std::vector<std::int64_t> grading(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    sg[i] = 1;
    wg[i] = omega[i];
    grading[i] = 1 + omega[i];
  }
  wg[n] = 1;
  grading[n] = 1;
  std::vector<std::int64_t> shifts(desc.shifts.size());
  for (std::size_t j = 0; j < shifts.size(); ++j) shifts[j] = desc.shifts[j] + desc.weights[j];
  MonomialOrder order(RingOrder::DegRevLex, ModuleOrder::TermOverPosition, grading, shifts);
  return ModuleSpace<Field>(std::move(field), n + 1, std::move(desc), std::move(order), sg, wg);
}

/// The free module over A and the free module over A[t] attached to one
/// (F, omega, epsilon).
template <class Field>
class BigradedContext {
 public:
  using Element = ModuleElement<Field>;

  BigradedContext(ModuleSpace<Field> base, WeightData w)
      : base_(std::move(base)),
        weights_(std::move(w)),
        tilde_(tilde_space(base_.field(), base_.nvars(), weights_.omega, tilde_descriptor(base_, weights_))) {
    if (weights_.omega.size() != base_.nvars()) throw std::invalid_argument("omega has the wrong length");
    if (weights_.epsilon.size() != base_.rank()) throw std::invalid_argument("epsilon has the wrong length");
  }

  const ModuleSpace<Field>& base() const { return base_; }
  const ModuleSpace<Field>& tilde() const { return tilde_; }
  const WeightData& weights() const { return weights_; }
  std::size_t t_index() const { return base_.nvars(); }

  /// f~ = t^d sum c (t^{-w.u} X^u)(t^{-eps_j} e_j), d the top weight of f.
  Element homogenize(const Element& f) const {
    if (f.is_zero()) throw std::domain_error("homogenization of zero undefined");
    if (!base_.is_std_homogeneous(f)) throw std::domain_error("element is not homogeneous");
    std::int64_t d = max_weight(f, weights_);
    std::vector<Term<Field>> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Term<Field> x = t;
      x.mono.exp[t_index()] = checked_exponent(d - weight_of(t.mono, weights_));
      out.push_back(std::move(x));
    }
    return tilde_.from_terms(std::move(out));
  }

  Element evaluate_t(const Element& g, const typename Field::Element& alpha) const {
    return evaluate_t_into(tilde_, base_, g, alpha);
  }

  /// Embeds an element of F into F~ (no t).
  Element lift(const Element& f) const { return tilde_.import(f); }

 private:
  static FreeModuleDescriptor tilde_descriptor(const ModuleSpace<Field>& base, const WeightData& w) {
    FreeModuleDescriptor d;
    d.shifts = base.descriptor().shifts;
    d.weights = w.epsilon;
    return d;
  }

  static Exponent checked_exponent(std::int64_t e) {
    if (e < 0 || e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    return static_cast<Exponent>(e);
  }

  ModuleSpace<Field> base_;
  WeightData weights_;
  ModuleSpace<Field> tilde_;
};

/// Substitutes t := alpha (t is variable `base.nvars()` of the source space).
template <class Field>
ModuleElement<Field> evaluate_t_into(const ModuleSpace<Field>& tilde, const ModuleSpace<Field>& base,
                                     const ModuleElement<Field>& g, const typename Field::Element& alpha) {
  const auto& K = tilde.field();
  std::size_t ti = base.nvars();
  std::vector<Term<Field>> out;
  out.reserve(g.size());
  for (const auto& t : g.terms()) {
    auto c = t.coeff;
    for (unsigned k = 0; k < t.mono.exp[ti]; ++k) c = K.mul(c, alpha);
    if (K.is_zero(c)) continue;
    Term<Field> x{std::move(c), t.mono};
    x.mono.exp[ti] = 0;
    out.push_back(std::move(x));
  }
  return base.from_terms(std::move(out));
}

/// Largest k with t^k dividing g (t = variable t_index).
template <class Field>
unsigned t_valuation(const ModuleElement<Field>& g, std::size_t t_index) {
  if (g.is_zero()) return 0;
  unsigned k = std::numeric_limits<unsigned>::max();
  for (const auto& t : g.terms()) k = std::min<unsigned>(k, t.mono.exp[t_index]);
  return k;
}

template <class Field>
ModuleElement<Field> divide_t(const ModuleElement<Field>& g, std::size_t t_index, unsigned k) {
  std::vector<Term<Field>> out = g.terms();
  for (auto& t : out) {
    if (t.mono.exp[t_index] < k) throw std::domain_error("element not divisible by t");
    t.mono.exp[t_index] = static_cast<Exponent>(t.mono.exp[t_index] - k);
  }
  // dividing every term by the same power of t preserves the order
  return ModuleElement<Field>(g.rank(), std::move(out));
}

}  // namespace cregro

#endif  // CREGRO_WEIGHTS_HPP
