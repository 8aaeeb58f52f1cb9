#ifndef CREGRO_SYZYGY_HPP
#define CREGRO_SYZYGY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cregro/groebner.hpp"
#include "cregro/weights.hpp"

namespace cregro {

/// Degrees of the source basis of a map A^r -> F sending e_k to gens[k].
/// Zero generators have no degree of their own, so callers supply them.
template <class Field>
FreeModuleDescriptor source_descriptor(const ModuleSpace<Field>& space, const std::vector<ModuleElement<Field>>& gens) {
  FreeModuleDescriptor d;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("cannot infer the degree of a zero generator");
    d.shifts.push_back(space.std_degree(g));
    d.weights.push_back(space.wt_degree(g));
  }
  return d;
}

/// Minimal homogeneous generating set chosen among `gens` (scanned by
/// increasing degree, input order within a degree). Zero entries are dropped.
template <class Field>
std::vector<ModuleElement<Field>> minimal_generators(const ModuleSpace<Field>& space,
                                                    const std::vector<ModuleElement<Field>>& gens) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!gens[i].is_zero()) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return space.order_degree(gens[a]) < space.order_degree(gens[b]);
  });
  GroebnerEngine<Field> engine(space);
  std::vector<ModuleElement<Field>> kept;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const auto& g = gens[idx[k]];
    std::int64_t d = space.order_degree(g);
    engine.complete_through(d);
    if (!engine.reduce(g).is_zero()) {
      kept.push_back(g);
      engine.add(g);
      engine.complete_through(d);
    }
  }
  return kept;
}

/// Generators of the syzygy module of (g_1..g_r), r = gens.size().
///
/// `columns` live in `source`, the free module A^r whose k-th basis vector
/// has the degree of g_k.
template <class Field>
struct SyzygyPresentation {
  ModuleSpace<Field> source;
  std::vector<ModuleElement<Field>> columns;
};

enum class SyzygyStrategy { Minimal, GroebnerBlock };

/// Syzygies of an arbitrary tuple via the tag module: g_k + e_{m+k} in
/// F (+) A^r under an order eliminating the first block. Elements of the
/// reduced basis whose leading term lies in the tag block have zero F-part
/// and generate the syzygy module.
template <class Field>
SyzygyPresentation<Field> syzygies(const ModuleSpace<Field>& space, const std::vector<ModuleElement<Field>>& gens,
                                   const FreeModuleDescriptor& source_desc,
                                   SyzygyStrategy strategy = SyzygyStrategy::Minimal) {
  const std::uint32_t m = space.rank();
  const std::uint32_t r = static_cast<std::uint32_t>(gens.size());
  if (source_desc.rank() != r) throw std::invalid_argument("source degrees do not match the tuple");
  ModuleSpace<Field> source = space.with_module(source_desc);

  FreeModuleDescriptor tag_desc = space.descriptor();
  tag_desc.shifts.insert(tag_desc.shifts.end(), source_desc.shifts.begin(), source_desc.shifts.end());
  tag_desc.weights.insert(tag_desc.weights.end(), source_desc.weights.begin(), source_desc.weights.end());
  ModuleSpace<Field> tagged_plain = space.with_module(tag_desc);
  MonomialOrder tag_order = tagged_plain.order().with_tag_block(m, tagged_plain.order().shifts());
  ModuleSpace<Field> tagged = tagged_plain.rebased(tag_desc, tag_order);

  GroebnerEngine<Field> engine(tagged);
  for (std::uint32_t k = 0; k < r; ++k) {
    if (!gens[k].is_zero() && gens[k].rank() != m)
      throw std::invalid_argument("operands belong to different free modules");
    std::vector<Term<Field>> terms = gens[k].terms();
    Monomial e;
    e.comp = m + k;
    terms.push_back(Term<Field>{space.field().one(), e});
    ModuleElement<Field> v = tagged.from_terms(std::move(terms));
    if (!tagged.is_homogeneous(v))
      throw std::invalid_argument("generator degree does not match the declared source degree");
    engine.add(v);
  }
  std::vector<ModuleElement<Field>> cols;
  for (const auto& g : engine.reduced_basis()) {
    if (g.lead_monomial().comp < m) continue;
    std::vector<Term<Field>> terms;
    for (const auto& t : g.terms()) {
      Term<Field> x = t;
      x.mono.comp -= m;
      terms.push_back(std::move(x));
    }
    cols.push_back(source.from_terms(std::move(terms)));
  }
  if (strategy == SyzygyStrategy::Minimal) cols = minimal_generators(source, cols);
  return SyzygyPresentation<Field>{std::move(source), std::move(cols)};
}

template <class Field>
SyzygyPresentation<Field> syzygies(const ModuleSpace<Field>& space, const std::vector<ModuleElement<Field>>& gens,
                                   SyzygyStrategy strategy = SyzygyStrategy::Minimal) {
  return syzygies(space, gens, source_descriptor(space, gens), strategy);
}

/// sum_k column_k * targets[k]: the image of one column under A^r -> F.
template <class Field>
ModuleElement<Field> apply_column(const ModuleSpace<Field>& target, const ModuleSpace<Field>& source,
                                  const ModuleElement<Field>& column, const std::vector<ModuleElement<Field>>& images) {
  ModuleElement<Field> acc = target.zero();
  for (std::uint32_t k = 0; k < source.rank(); ++k) {
    auto coord = source.component(column, k);
    if (coord.empty()) continue;
    acc = target.add(acc, target.mul_poly(coord, images[k]));
  }
  return acc;
}

/// N : t^infinity for N generated by homogeneous elements of a space built by
/// tilde_space (t is variable base_nvars). Returns the reduced basis of the
/// saturation; no element of it is divisible by t.
template <class Field>
std::vector<ModuleElement<Field>> saturate_t(const ModuleSpace<Field>& tilde, std::size_t t_index,
                                             std::vector<ModuleElement<Field>> gens) {
  if (tilde.order().module_order() != ModuleOrder::TermOverPosition ||
      tilde.order().ring_order() != RingOrder::DegRevLex || tilde.order().has_leading_weight())
    throw std::invalid_argument("saturation needs a graded reverse lex, term-over-position order");
  for (;;) {
    std::vector<ModuleElement<Field>> basis = buchberger(tilde, gens);
    bool changed = false;
    for (auto& g : basis) {
      unsigned k = t_valuation(g, t_index);
      if (k > 0) {
        g = divide_t(g, t_index, k);
        changed = true;
      }
    }
    if (!changed) return basis;
    gens = std::move(basis);
  }
}

}  // namespace cregro

#endif  // CREGRO_SYZYGY_HPP
