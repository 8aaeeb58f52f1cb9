#ifndef CREGRO_ELEMENT_HPP
#define CREGRO_ELEMENT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cregro/monomial.hpp"

namespace cregro {

template <class Field>
struct Term {
  typename Field::Element coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A sparse element of a free module: terms sorted strictly descending in the
/// order of the ModuleSpace that produced it, no zero coefficients. Equality
/// is structural, which is mathematical equality within one space.
template <class Field>
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(std::uint32_t rank) : rank_(rank) {}
  ModuleElement(std::uint32_t rank, std::vector<Term<Field>> sorted_terms)
      : rank_(rank), terms_(std::move(sorted_terms)) {}

  std::uint32_t rank() const { return rank_; }
  const std::vector<Term<Field>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term<Field>& lead() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::uint32_t rank_ = 1;
  std::vector<Term<Field>> terms_;
};

/// Degree data of a graded free module F = sum A(-d_j) e_j. `weights` holds the
/// second degree of each e_j when the module lives over the bigraded ring
/// A[t]; it is all zeros for modules over A.
struct FreeModuleDescriptor {
  std::vector<std::int64_t> shifts;
  std::vector<std::int64_t> weights;

  std::uint32_t rank() const { return static_cast<std::uint32_t>(shifts.size()); }

  static FreeModuleDescriptor with_shifts(std::vector<std::int64_t> s) {
    FreeModuleDescriptor d;
    d.weights.assign(s.size(), 0);
    d.shifts = std::move(s);
    return d;
  }

  friend bool operator==(const FreeModuleDescriptor&, const FreeModuleDescriptor&) = default;
};

/// Arithmetic context for elements of one free module: coefficient field,
/// number of variables, degree data and the monomial order that fixes the
/// canonical term ordering.
///
/// Two gradings are tracked per variable: the standard degree (1 for X_i,
/// 0 for t) and the weight degree (w_i for X_i, 1 for t). The monomial order
/// grades by their sum, which is positive on every variable.
template <class Field>
class ModuleSpace {
 public:
  using Scalar = typename Field::Element;
  using Element = ModuleElement<Field>;
  using TermT = Term<Field>;

  ModuleSpace(Field field, std::size_t nvars, FreeModuleDescriptor desc, MonomialOrder order,
              std::array<std::int64_t, kMaxVars> std_grading, std::array<std::int64_t, kMaxVars> wt_grading)
      : field_(std::move(field)),
        nvars_(nvars),
        desc_(std::move(desc)),
        order_(std::move(order)),
        std_grading_(std_grading),
        wt_grading_(wt_grading) {
    if (nvars_ == 0 || nvars_ > kMaxVars) throw std::invalid_argument("variable count out of range");
    if (desc_.weights.size() != desc_.shifts.size()) desc_.weights.resize(desc_.shifts.size(), 0);
  }

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  std::uint32_t rank() const { return desc_.rank(); }
  const FreeModuleDescriptor& descriptor() const { return desc_; }
  const MonomialOrder& order() const { return order_; }
  const std::array<std::int64_t, kMaxVars>& std_grading() const { return std_grading_; }
  const std::array<std::int64_t, kMaxVars>& wt_grading() const { return wt_grading_; }

  /// Same field, variables and gradings; different free module and order.
  ModuleSpace rebased(FreeModuleDescriptor desc, MonomialOrder order) const {
    return ModuleSpace(field_, nvars_, std::move(desc), std::move(order), std_grading_, wt_grading_);
  }

  /// Same everything but the free module; the order keeps its kind and takes
  /// the new shifts.
  ModuleSpace with_module(FreeModuleDescriptor desc) const {
    std::vector<std::int64_t> s(desc.shifts.size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = desc.shifts[j] + desc.weights[j];
    MonomialOrder o = order_.without_tag_block().with_shifts(std::move(s));
    return rebased(std::move(desc), std::move(o));
  }

  std::int64_t std_degree(const Monomial& m) const {
    std::int64_t d = m.comp < desc_.shifts.size() ? desc_.shifts[m.comp] : 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) d += std_grading_[i] * m.exp[i];
    return d;
  }
  std::int64_t wt_degree(const Monomial& m) const {
    std::int64_t d = m.comp < desc_.weights.size() ? desc_.weights[m.comp] : 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) d += wt_grading_[i] * m.exp[i];
    return d;
  }
  std::int64_t order_degree(const Monomial& m) const { return order_.degree(m); }

  std::int64_t std_degree(const Element& f) const { return std_degree(f.lead_monomial()); }
  std::int64_t wt_degree(const Element& f) const { return wt_degree(f.lead_monomial()); }
  std::int64_t order_degree(const Element& f) const { return order_degree(f.lead_monomial()); }

  bool is_homogeneous(const Element& f) const {
    if (f.is_zero()) return true;
    auto d = order_degree(f.lead_monomial());
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const TermT& t) { return order_degree(t.mono) == d; });
  }
  bool is_std_homogeneous(const Element& f) const {
    if (f.is_zero()) return true;
    auto d = std_degree(f.lead_monomial());
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const TermT& t) { return std_degree(t.mono) == d; });
  }

  Element zero() const { return Element(rank()); }

  Element basis_vector(std::uint32_t j) const {
    if (j >= rank()) throw std::out_of_range("basis index out of range");
    Monomial m;
    m.comp = j;
    return Element(rank(), {TermT{field_.one(), m}});
  }

  Element term(Scalar c, const Monomial& m) const {
    check_monomial(m);
    if (field_.is_zero(c)) return zero();
    return Element(rank(), {TermT{std::move(c), m}});
  }

  /// Sorts, merges equal monomials and drops zero coefficients.
  Element from_terms(std::vector<TermT> terms) const {
    for (const auto& t : terms) check_monomial(t.mono);
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return order_.greater(a.mono, b.mono); });
    std::vector<TermT> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    return Element(rank(), std::move(out));
  }

  /// Re-expresses an element built in another space with the same rank.
  Element import(const Element& f) const {
    if (f.rank() != rank()) throw std::invalid_argument("operands belong to different free modules");
    return from_terms(f.terms());
  }

  Element add(const Element& a, const Element& b) const { return axpy(a, field_.one(), Monomial{}, b); }
  Element sub(const Element& a, const Element& b) const {
    return axpy(a, field_.neg(field_.one()), Monomial{}, b);
  }

  Element neg(const Element& a) const {
    std::vector<TermT> t = a.terms();
    for (auto& x : t) x.coeff = field_.neg(x.coeff);
    return Element(a.rank(), std::move(t));
  }

  Element scale(const Element& a, const Scalar& c) const {
    if (field_.is_zero(c)) return Element(a.rank());
    std::vector<TermT> t = a.terms();
    for (auto& x : t) x.coeff = field_.mul(x.coeff, c);
    return Element(a.rank(), std::move(t));
  }

  /// c * m * a for a ring monomial m; the order is multiplicative so the term
  /// list stays sorted.
  Element mul_term(const Element& a, const Scalar& c, const Monomial& m) const {
    if (field_.is_zero(c)) return Element(a.rank());
    std::vector<TermT> t;
    t.reserve(a.size());
    for (const auto& x : a.terms()) t.push_back(TermT{field_.mul(x.coeff, c), multiply(m, x.mono)});
    return Element(a.rank(), std::move(t));
  }

  /// p * a where p is a ring element given by its terms (components ignored).
  Element mul_poly(const std::vector<TermT>& p, const Element& a) const {
    Element acc(a.rank());
    for (const auto& pt : p) acc = axpy(acc, pt.coeff, pt.mono, a);
    return acc;
  }

  /// a + c * m * b, merged in one pass.
  Element axpy(const Element& a, const Scalar& c, const Monomial& m, const Element& b) const {
    if (a.rank() != b.rank()) throw std::invalid_argument("operands belong to different free modules");
    if (field_.is_zero(c) || b.is_zero()) return a;
    const auto& at = a.terms();
    const auto& bt = b.terms();
    std::vector<TermT> out;
    out.reserve(at.size() + bt.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    bool have_b = false;
    auto load_b = [&] {
      if (j < bt.size()) {
        bm = multiply(m, bt[j].mono);
        have_b = true;
      } else {
        have_b = false;
      }
    };
    load_b();
    while (i < at.size() || have_b) {
      int cmp;
      if (i >= at.size()) cmp = -1;
      else if (!have_b) cmp = 1;
      else cmp = order_.compare(at[i].mono, bm);
      if (cmp > 0) {
        out.push_back(at[i++]);
      } else if (cmp < 0) {
        out.push_back(TermT{field_.mul(c, bt[j].coeff), bm});
        ++j;
        load_b();
      } else {
        auto s = field_.add(at[i].coeff, field_.mul(c, bt[j].coeff));
        if (!field_.is_zero(s)) out.push_back(TermT{std::move(s), bm});
        ++i;
        ++j;
        load_b();
      }
    }
    return Element(a.rank(), std::move(out));
  }

  Element make_monic(const Element& a) const {
    if (a.is_zero() || field_.is_one(a.lead().coeff)) return a;
    return scale(a, field_.inv(a.lead().coeff));
  }

  /// The j-th coordinate of a as a ring element (all terms moved to comp 0).
  std::vector<TermT> component(const Element& a, std::uint32_t j) const {
    std::vector<TermT> out;
    for (const auto& t : a.terms())
      if (t.mono.comp == j) {
        TermT x = t;
        x.mono.comp = 0;
        out.push_back(std::move(x));
      }
    return out;
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.comp >= rank()) throw std::out_of_range("component index out of range");
    for (std::size_t i = nvars_; i < kMaxVars; ++i)
      if (m.exp[i] != 0) throw std::out_of_range("variable index out of range");
  }

  Field field_;
  std::size_t nvars_;
  FreeModuleDescriptor desc_;
  MonomialOrder order_;
  std::array<std::int64_t, kMaxVars> std_grading_;
  std::array<std::int64_t, kMaxVars> wt_grading_;
};

inline std::array<std::int64_t, kMaxVars> unit_grading(std::size_t nvars) {
  std::array<std::int64_t, kMaxVars> g{};
  for (std::size_t i = 0; i < nvars; ++i) g[i] = 1;
  return g;
}

/// Canonical space for a free module over A = K[X_1..X_n]: degrevlex refined
/// position-over-term, standard grading.
template <class Field>
ModuleSpace<Field> standard_space(Field field, std::size_t nvars, FreeModuleDescriptor desc,
                                  ModuleOrder mo = ModuleOrder::PositionOverTerm,
                                  RingOrder ro = RingOrder::DegRevLex) {
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  desc.weights.assign(desc.shifts.size(), 0);
  std::vector<std::int64_t> grading(nvars, 1);
  MonomialOrder order(ro, mo, grading, desc.shifts);
  return ModuleSpace<Field>(std::move(field), nvars, std::move(desc), std::move(order), unit_grading(nvars),
                            std::array<std::int64_t, kMaxVars>{});
}

}  // namespace cregro

#endif  // CREGRO_ELEMENT_HPP
