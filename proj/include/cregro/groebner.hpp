#ifndef CREGRO_GROEBNER_HPP
#define CREGRO_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cregro/element.hpp"

namespace cregro {

/// Normal form of f with respect to `basis` (full reduction: no term of the
/// result is divisible by a leading monomial of the basis). The first basis
/// element whose leading monomial divides the current term is used, so the
/// result is deterministic for a fixed basis order.
template <class Field>
ModuleElement<Field> normal_form(const ModuleSpace<Field>& space, ModuleElement<Field> f,
                                 const std::vector<ModuleElement<Field>>& basis) {
  const auto& K = space.field();
  std::vector<Term<Field>> rest;
  while (!f.is_zero()) {
    const auto& lt = f.lead();
    const ModuleElement<Field>* div = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && g.lead_monomial().divides(lt.mono)) {
        div = &g;
        break;
      }
    if (div == nullptr) {
      rest.push_back(lt);
      f = ModuleElement<Field>(f.rank(), std::vector<Term<Field>>(f.terms().begin() + 1, f.terms().end()));
      continue;
    }
    auto c = K.neg(K.div(lt.coeff, div->lead().coeff));
    f = space.axpy(f, c, quotient(lt.mono, div->lead_monomial()), *div);
  }
  return ModuleElement<Field>(space.rank(), std::move(rest));
}

/// Buchberger's algorithm for submodules generated by elements that are
/// homogeneous for the order's grading. Work proceeds degree by degree
/// (normal selection strategy), so the basis can be completed only up to a
/// degree bound; membership of elements of degree <= that bound is then
/// already decided exactly. Pairs are pruned with the Gebauer-Moeller
/// criteria (the coprime criterion only in rank one).
template <class Field>
class GroebnerEngine {
 public:
  using Element = ModuleElement<Field>;

  explicit GroebnerEngine(ModuleSpace<Field> space) : space_(std::move(space)) {}

  const ModuleSpace<Field>& space() const { return space_; }

  void add(const Element& f) {
    if (f.is_zero()) return;
    if (!space_.is_homogeneous(f)) throw std::invalid_argument("Groebner engine requires homogeneous input");
    pending_.push_back(f);
  }

  template <class Range>
  void add_all(const Range& r) {
    for (const auto& f : r) add(f);
  }

  /// Processes all generators and pairs of degree <= bound.
  void complete_through(std::int64_t bound) {
    for (;;) {
      std::int64_t next = std::numeric_limits<std::int64_t>::max();
      for (const auto& f : pending_) next = std::min(next, space_.order_degree(f));
      for (const auto& p : pairs_) next = std::min(next, p.degree);
      if (next == std::numeric_limits<std::int64_t>::max() || next > bound) return;
      process_degree(next);
    }
  }

  void complete() { complete_through(std::numeric_limits<std::int64_t>::max()); }

  bool is_complete() const { return pending_.empty() && pairs_.empty(); }

  const std::vector<Element>& basis() const { return basis_; }

  Element reduce(const Element& f) const { return normal_form(space_, f, basis_); }

  /// The unique reduced Groebner basis (monic, sorted descending by leading
  /// monomial). Completes the computation first.
  std::vector<Element> reduced_basis() {
    complete();
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& lm = basis_[i].lead_monomial();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const auto& other = basis_[j].lead_monomial();
        if (other.divides(lm) && (!(other == lm) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Element& a, const Element& b) {
      return space_.order().greater(a.lead_monomial(), b.lead_monomial());
    });
    std::vector<Element> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      const auto& g = minimal[i];
      Element lead_only(g.rank(), {g.lead()});
      Element tail(g.rank(), std::vector<Term<Field>>(g.terms().begin() + 1, g.terms().end()));
      Element reduced_tail = normal_form(space_, tail, minimal);
      out.push_back(space_.make_monic(space_.add(lead_only, reduced_tail)));
    }
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t degree;
  };

  void process_degree(std::int64_t deg) {
    std::vector<Element> gens;
    std::vector<Element> later;
    for (auto& f : pending_) (space_.order_degree(f) == deg ? gens : later).push_back(std::move(f));
    pending_ = std::move(later);
    for (const auto& f : gens) {
      Element r = reduce(f);
      if (!r.is_zero()) insert(space_.make_monic(r));
    }
    for (;;) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        int c = space_.order().compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.j, a.i) < std::pair(b.j, b.i);
      });
      if (it == pairs_.end() || it->degree != deg) break;
      Pair p = *it;
      pairs_.erase(it);
      Element r = reduce(spoly(p));
      if (!r.is_zero()) insert(space_.make_monic(r));
    }
  }

  Element spoly(const Pair& p) const {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    const auto& K = space_.field();
    Element a = space_.mul_term(f, K.inv(f.lead().coeff), quotient(p.lcm, f.lead_monomial()));
    return space_.axpy(a, K.neg(K.inv(g.lead().coeff)), quotient(p.lcm, g.lead_monomial()), g);
  }

  void insert(Element h) {
    const Monomial hm = h.lead_monomial();
    const std::size_t hi = basis_.size();
    const bool ideal_case = space_.rank() == 1;

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Candidate> cand;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& gm = basis_[i].lead_monomial();
      if (gm.comp != hm.comp) continue;
      cand.push_back({i, lcm(gm, hm), ideal_case && coprime(gm, hm)});
    }
    // chain criterion among the new pairs: drop (i,h) if another new pair's
    // lcm properly divides it; among equal lcms keep one, preferring a
    // coprime pair (which is then discarded by the product criterion).
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && cand[a].keep; ++b) {
        if (a == b || !cand[b].keep) continue;
        if (!cand[b].lcm.divides(cand[a].lcm)) continue;
        if (!(cand[b].lcm == cand[a].lcm)) {
          cand[a].keep = false;
        } else if (cand[b].coprime && !cand[a].coprime) {
          cand[a].keep = false;
        } else if (cand[b].coprime == cand[a].coprime && b < a) {
          cand[a].keep = false;
        }
      }
    }
    // old pairs made redundant by h
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (hm.divides(p.lcm)) {
        Monomial l1 = lcm(basis_[p.i].lead_monomial(), hm);
        Monomial l2 = lcm(basis_[p.j].lead_monomial(), hm);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& c : cand)
      if (c.keep && !c.coprime) pairs_.push_back(Pair{c.i, hi, c.lcm, space_.order_degree(c.lcm)});
    basis_.push_back(std::move(h));
  }

  ModuleSpace<Field> space_;
  std::vector<Element> basis_;
  std::vector<Element> pending_;
  std::vector<Pair> pairs_;
};

template <class Field>
std::vector<ModuleElement<Field>> buchberger(const ModuleSpace<Field>& space,
                                             const std::vector<ModuleElement<Field>>& gens) {
  GroebnerEngine<Field> engine(space);
  engine.add_all(gens);
  return engine.reduced_basis();
}

template <class Field>
bool is_member(const ModuleSpace<Field>& space, const ModuleElement<Field>& f,
               const std::vector<ModuleElement<Field>>& groebner_basis) {
  return normal_form(space, f, groebner_basis).is_zero();
}

/// s-polynomial of two basis elements (zero if leading monomials lie in
/// different components).
template <class Field>
ModuleElement<Field> s_polynomial(const ModuleSpace<Field>& space, const ModuleElement<Field>& f,
                                  const ModuleElement<Field>& g) {
  if (f.lead_monomial().comp != g.lead_monomial().comp) return space.zero();
  const auto& K = space.field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  auto a = space.mul_term(f, K.inv(f.lead().coeff), quotient(l, f.lead_monomial()));
  return space.axpy(a, K.neg(K.inv(g.lead().coeff)), quotient(l, g.lead_monomial()), g);
}

/// Buchberger's criterion checked directly: every s-pair reduces to zero.
template <class Field>
bool all_spairs_reduce_to_zero(const ModuleSpace<Field>& space, const std::vector<ModuleElement<Field>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(space, s_polynomial(space, basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

}  // namespace cregro

#endif  // CREGRO_GROEBNER_HPP
