#ifndef CREGRO_WEIGHT_INITIAL_HPP
#define CREGRO_WEIGHT_INITIAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cregro/hilbert.hpp"
#include "cregro/submodule.hpp"
#include "cregro/syzygy.hpp"
#include "cregro/weights.hpp"

namespace cregro {

/// A submodule presented by its own reduced Groebner basis.
template <class Field>
Submodule<Field> canonical(const Submodule<Field>& m) {
  return Submodule<Field>(m.ambient(), m.groebner_basis());
}

template <class Field>
void require_graded(const Submodule<Field>& m) {
  for (const auto& g : m.generators())
    if (!m.ambient().is_std_homogeneous(g)) throw std::domain_error("generator not homogeneous");
}

/// The homogenization M~ of M inside F~, with the context it lives in.
/// `basis` is the reduced basis of M~ (no element divisible by t).
template <class Field>
struct FlatFamily {
  BigradedContext<Field> context;
  std::vector<ModuleElement<Field>> basis;
  Submodule<Field> source;

  Submodule<Field> tilde_module() const { return Submodule<Field>(context.tilde(), basis); }

  Submodule<Field> at(const typename Field::Element& alpha) const {
    std::vector<ModuleElement<Field>> v;
    for (const auto& g : basis) v.push_back(context.evaluate_t(g, alpha));
    return Submodule<Field>::spanned_by(context.base(), v);
  }
};

/// M~ = <f~_1..f~_r> : t^infinity.
template <class Field>
FlatFamily<Field> homogenize_module(const Submodule<Field>& m, const WeightData& w) {
  require_graded(m);
  BigradedContext<Field> ctx(m.ambient(), w);
  std::vector<ModuleElement<Field>> gens;
  for (const auto& f : m.generators()) gens.push_back(ctx.homogenize(f));
  auto basis = saturate_t(ctx.tilde(), ctx.t_index(), std::move(gens));
  return FlatFamily<Field>{std::move(ctx), std::move(basis), m};
}

/// in_(omega,eps)(M) as the t = 0 fibre of the saturated homogenization.
template <class Field>
Submodule<Field> initial_module_sat(const Submodule<Field>& m, const WeightData& w) {
  if (m.is_zero()) return m;
  auto family = homogenize_module(m, w);
  return canonical(family.at(m.ambient().field().zero()));
}

/// The three-column diagram of the lifting lemma with S = A[t], l = t:
/// g1 : G_1 -> G_0 and g2 : G_2 -> G_1 over A[t], and their reductions
/// f1, f2 modulo t (over A).
template <class Field>
struct LiftingInstance {
  ModuleSpace<Field> g0_space;
  ModuleSpace<Field> g1_space;
  std::vector<ModuleElement<Field>> g1;  // columns, elements of g0_space
  std::vector<ModuleElement<Field>> g2;  // columns, elements of g1_space
  ModuleSpace<Field> f0_space;
  ModuleSpace<Field> f1_space;
  std::vector<ModuleElement<Field>> f1;
  std::vector<ModuleElement<Field>> f2;
  std::size_t t_index;
};

/// Builds the diagram for generators `gens` of a bihomogeneous submodule of
/// F~: g1 = (gens), f1 = their reductions at t = 0, f2 = generators of the
/// syzygies of f1 over A, and g2 = f2 read over A[t].
template <class Field>
LiftingInstance<Field> make_lifting_instance(const BigradedContext<Field>& ctx,
                                             const std::vector<ModuleElement<Field>>& gens,
                                             SyzygyStrategy strategy = SyzygyStrategy::Minimal) {
  const auto& tilde = ctx.tilde();
  const auto& base = ctx.base();
  FreeModuleDescriptor g1_desc;
  FreeModuleDescriptor f1_desc;
  std::vector<ModuleElement<Field>> f1;
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    g1_desc.shifts.push_back(tilde.std_degree(g));
    g1_desc.weights.push_back(tilde.wt_degree(g));
    f1.push_back(ctx.evaluate_t(g, base.field().zero()));
  }
  f1_desc = FreeModuleDescriptor::with_shifts(g1_desc.shifts);
  auto syz = syzygies(base, f1, f1_desc, strategy);
  ModuleSpace<Field> g1_space = tilde.with_module(g1_desc);
  std::vector<ModuleElement<Field>> g2;
  for (const auto& c : syz.columns) g2.push_back(g1_space.import(c));
  return LiftingInstance<Field>{tilde, g1_space, gens, std::move(g2), base, syz.source, std::move(f1),
                                std::move(syz.columns), ctx.t_index()};
}

/// Columns of g1 o g2 divided by t. Every column of g1 o g2 vanishes at t = 0
/// by construction; with `divide_max_t` the largest power of t is removed.
template <class Field>
std::vector<ModuleElement<Field>> divided_images(const LiftingInstance<Field>& inst, bool divide_max_t = false) {
  if (inst.g1_space.rank() != inst.g1.size()) throw std::invalid_argument("dimension mismatch in lifting diagram");
  std::vector<ModuleElement<Field>> out;
  for (const auto& c : inst.g2) {
    if (c.rank() != inst.g1.size()) throw std::invalid_argument("dimension mismatch in lifting diagram");
    auto img = apply_column(inst.g0_space, inst.g1_space, c, inst.g1);
    if (img.is_zero()) continue;
    unsigned v = t_valuation(img, inst.t_index);
    if (v == 0) throw std::domain_error("image not divisible by t; diagram columns are not exact");
    out.push_back(divide_t(img, inst.t_index, divide_max_t ? v : 1u));
  }
  return out;
}

/// g1 o g2 (G_2) is contained in t * g1(G_1): decided column by column as
/// "t divides the column and the quotient lies in im g1".
template <class Field>
bool lifting_criterion(const LiftingInstance<Field>& inst) {
  if (inst.g1_space.rank() != inst.g1.size()) throw std::invalid_argument("dimension mismatch in lifting diagram");
  auto basis = buchberger(inst.g0_space, inst.g1);
  for (const auto& c : inst.g2) {
    if (c.rank() != inst.g1.size()) throw std::invalid_argument("dimension mismatch in lifting diagram");
    auto img = apply_column(inst.g0_space, inst.g1_space, c, inst.g1);
    if (img.is_zero()) continue;
    if (t_valuation(img, inst.t_index) == 0) return false;
    if (!is_member(inst.g0_space, divide_t(img, inst.t_index, 1), basis)) return false;
  }
  return true;
}

/// Whether t is a non-zerodivisor on G_0 / im(g1), decided without the
/// lifting criterion: N : t is computed from the syzygies of
/// (g1_1..g1_q, t e_1..t e_m) and compared with N = im(g1).
template <class Field>
bool t_regular_on_cokernel(const ModuleSpace<Field>& g0, std::size_t t_index,
                           const std::vector<ModuleElement<Field>>& g1) {
  std::vector<ModuleElement<Field>> tuple;
  FreeModuleDescriptor desc;
  for (const auto& g : g1) {
    if (g.is_zero()) continue;
    tuple.push_back(g);
    desc.shifts.push_back(g0.std_degree(g));
    desc.weights.push_back(g0.wt_degree(g));
  }
  const std::uint32_t q = static_cast<std::uint32_t>(tuple.size());
  Monomial tm;
  tm.exp[t_index] = 1;
  for (std::uint32_t j = 0; j < g0.rank(); ++j) {
    tuple.push_back(g0.mul_term(g0.basis_vector(j), g0.field().one(), tm));
    desc.shifts.push_back(g0.descriptor().shifts[j]);
    desc.weights.push_back(g0.descriptor().weights[j] + 1);
  }
  auto syz = syzygies(g0, tuple, desc, SyzygyStrategy::GroebnerBlock);
  auto basis = buchberger(g0, std::vector<ModuleElement<Field>>(tuple.begin(), tuple.begin() + q));
  for (const auto& col : syz.columns) {
    std::vector<Term<Field>> y;
    for (const auto& t : col.terms())
      if (t.mono.comp >= q) {
        Term<Field> x = t;
        x.mono.comp -= q;
        y.push_back(std::move(x));
      }
    auto colon_elem = g0.from_terms(std::move(y));
    if (!is_member(g0, colon_elem, basis)) return false;
  }
  return true;
}

template <class Field>
bool t_regular_on_cokernel(const LiftingInstance<Field>& inst) {
  return t_regular_on_cokernel(inst.g0_space, inst.t_index, inst.g1);
}

/// One pass of the weight-order Buchberger loop.
template <class Field>
struct TraceStep {
  std::vector<ModuleElement<Field>> generators;  // generators of M_k in F~
  std::vector<ModuleElement<Field>> q;           // generators of Q
  std::vector<bool> q_contained;                 // q[i] in M_k
  bool terminal = false;
};

template <class Field>
struct AlgorithmTrace {
  std::vector<TraceStep<Field>> steps;
  std::size_t terminal_index() const { return steps.empty() ? 0 : steps.size() - 1; }
};

struct WeightBuchbergerOptions {
  bool divide_max_t = false;
  SyzygyStrategy strategy = SyzygyStrategy::Minimal;
  std::size_t max_steps = 10000;
};

template <class Field>
struct WeightBuchbergerResult {
  Submodule<Field> initial;
  AlgorithmTrace<Field> trace;
};

/// Initial module through the chain M_0 = <f~_i> subset M_1 subset ... :
/// at each step the syzygies of the t = 0 reductions of the current
/// generators are applied to the generators themselves, divided by t, and
/// added unless already contained.
template <class Field>
WeightBuchbergerResult<Field> weight_buchberger(const Submodule<Field>& m, const WeightData& w,
                                               WeightBuchbergerOptions opts = {}) {
  require_graded(m);
  BigradedContext<Field> ctx(m.ambient(), w);
  AlgorithmTrace<Field> trace;
  if (m.is_zero()) {
    trace.steps.push_back(TraceStep<Field>{{}, {}, {}, true});
    return {m, std::move(trace)};
  }
  std::vector<ModuleElement<Field>> gens;
  for (const auto& f : m.generators()) gens.push_back(ctx.homogenize(f));
  for (std::size_t step = 0;; ++step) {
    if (step >= opts.max_steps) throw std::runtime_error("weight Buchberger did not terminate within the step limit");
    auto inst = make_lifting_instance(ctx, gens, opts.strategy);
    auto qs = divided_images(inst, opts.divide_max_t);
    auto basis = buchberger(ctx.tilde(), gens);
    TraceStep<Field> ts;
    ts.generators = gens;
    bool all_in = true;
    std::vector<ModuleElement<Field>> added;
    for (auto& q : qs) {
      q = ctx.tilde().make_monic(q);
      bool in = is_member(ctx.tilde(), q, basis);
      ts.q_contained.push_back(in);
      if (!in) {
        all_in = false;
        added.push_back(q);
      }
    }
    ts.q = std::move(qs);
    ts.terminal = all_in;
    trace.steps.push_back(std::move(ts));
    if (all_in) break;
    gens.insert(gens.end(), added.begin(), added.end());
  }
  std::vector<ModuleElement<Field>> at0;
  for (const auto& g : gens) at0.push_back(ctx.evaluate_t(g, ctx.base().field().zero()));
  auto initial = canonical(Submodule<Field>::spanned_by(ctx.base(), at0));
  return {std::move(initial), std::move(trace)};
}

/// Submodule generated by the initial forms of the given generators.
template <class Field>
Submodule<Field> initial_forms_module(const Submodule<Field>& m, const WeightData& w) {
  std::vector<ModuleElement<Field>> v;
  for (const auto& f : m.generators()) v.push_back(initial_form(f, w));
  return Submodule<Field>(m.ambient(), std::move(v));
}

/// Buchberger criterion for weight orders: (1/t)(f~) o Phi lies in <f~>.
template <class Field>
bool buchberger_criterion(const Submodule<Field>& m, const WeightData& w,
                          SyzygyStrategy strategy = SyzygyStrategy::Minimal) {
  require_graded(m);
  if (m.is_zero()) return true;
  BigradedContext<Field> ctx(m.ambient(), w);
  std::vector<ModuleElement<Field>> gens;
  for (const auto& f : m.generators()) gens.push_back(ctx.homogenize(f));
  return lifting_criterion(make_lifting_instance(ctx, gens, strategy));
}

/// Largest standard degree of a generator of Phi(A^s), the syzygies of the
/// initial forms; nullopt when there are none.
template <class Field>
std::optional<std::int64_t> syzygy_generating_degree(const Submodule<Field>& m, const WeightData& w) {
  auto inf = initial_forms_module(m, w);
  auto syz = syzygies(m.ambient(), inf.generators());
  std::optional<std::int64_t> d;
  for (const auto& c : syz.columns) {
    std::int64_t e = syz.source.std_degree(c);
    if (!d || e > *d) d = e;
  }
  return d;
}

/// Degree-truncated criterion: with d at least the generating degree of the
/// syzygies of the initial forms, <in f_i> = in(M) iff the two agree (have
/// equal Hilbert functions) in every degree <= d.
template <class Field>
bool truncated_criterion(const Submodule<Field>& m, const WeightData& w, std::int64_t d) {
  require_graded(m);
  auto sd = syzygy_generating_degree(m, w);
  if (sd && d < *sd) throw std::invalid_argument("bound below syzygy degree");
  auto inf = initial_forms_module(m, w);
  std::int64_t lo = 0;
  for (auto s : m.ambient().descriptor().shifts) lo = std::min(lo, s);
  for (std::int64_t e = lo; e <= d; ++e)
    if (quotient_hilbert_value(inf, e) != quotient_hilbert_value(m, e)) return false;
  return true;
}

}  // namespace cregro

#endif  // CREGRO_WEIGHT_INITIAL_HPP
