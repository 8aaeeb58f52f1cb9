#ifndef CREGRO_CHECKS_HPP
#define CREGRO_CHECKS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cregro/field.hpp"
#include "cregro/hilbert.hpp"
#include "cregro/invariants.hpp"
#include "cregro/io/parse.hpp"
#include "cregro/resolution.hpp"
#include "cregro/submodule.hpp"
#include "cregro/weight_initial.hpp"

namespace cregro::checks {

enum class Verdict { Pass, Fail, NotApplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    default:
      return "n/a";
  }
}

/// Outcome of one check on one instance. `details` are human-readable lines
/// (the witness on failure); `counters` feed the sweep-level distribution
/// guards (how often a hypothesis actually fired, and so on).
struct Report {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::string reason;
  std::vector<std::string> details;
  std::map<std::string, std::int64_t> counters;
};

/// A field-agnostic, replayable instance: everything needed to rebuild M
/// and (omega, epsilon).
struct Instance {
  std::uint64_t seed = 0;
  bool rational = true;
  std::uint32_t p = 0;
  std::size_t n = 2;
  std::vector<std::int64_t> shifts{0};
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> epsilon;
  std::vector<std::string> gens;

  io::Naming names() const {
    static const char* v[] = {"x", "y", "z", "w", "u", "v", "s", "r"};
    io::Naming nm;
    for (std::size_t i = 0; i < n; ++i) nm.vars.push_back(v[i]);
    return nm;
  }

  WeightData weights() const { return WeightData(omega, epsilon); }

  /// One-line script that rebuilds the instance under the name M.
  std::string script() const {
    std::ostringstream s;
    s << "ring " << (rational ? std::string("QQ") : "GF(" + std::to_string(p) + ")") << "[";
    auto nm = names();
    for (std::size_t i = 0; i < n; ++i) s << (i ? "," : "") << nm.vars[i];
    s << "] free F=(" << io::join_ints(shifts) << ") weight omega=" << io::join_ints(omega)
      << " epsilon=" << io::join_ints(epsilon) << " let M=[";
    for (std::size_t i = 0; i < gens.size(); ++i) s << (i ? ", " : "") << gens[i];
    s << "]";
    return s.str();
  }
};

template <class Field>
Submodule<Field> build_module(const Instance& inst, Field K) {
  auto sp = standard_space(K, inst.n, FreeModuleDescriptor::with_shifts(inst.shifts));
  std::vector<ModuleElement<Field>> g;
  for (const auto& s : inst.gens) g.push_back(io::read_element(sp, inst.names(), s));
  return Submodule<Field>(sp, g);
}

struct GeneratorParams {
  std::size_t max_vars = 3;
  std::size_t max_rank = 3;
  std::size_t max_gens = 4;
  std::int64_t max_degree = 4;
  std::int64_t max_weight = 4;
  std::int64_t max_eps = 2;
  bool mixed_fields = true;
};

/// Deterministic in the seed. Mostly ideals in two or three variables;
/// a third of the generators are monomials or binomials so that the
/// theorem hypotheses (componentwise linear initial modules, matching Betti
/// numbers) fire often enough to matter.
inline Instance generate_instance(std::uint64_t seed, const GeneratorParams& gp = {}) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t k) { return k == 0 ? std::uint64_t{0} : rng() % k; };
  Instance inst;
  inst.seed = seed;
  inst.rational = !gp.mixed_fields || pick(2) == 0;
  inst.p = inst.rational ? 0 : 101;
  std::uint64_t r = pick(10);
  inst.n = r == 0 ? 1 : r < 5 ? 2 : 3;
  if (gp.max_vars >= 4 && r >= 8) inst.n = 4;
  inst.n = std::min(inst.n, std::max<std::size_t>(gp.max_vars, 1));
  r = pick(10);
  std::size_t rank = r < 7 ? 1 : r < 9 ? 2 : 3;
  rank = std::min(rank, std::max<std::size_t>(gp.max_rank, 1));
  inst.shifts.assign(rank, 0);
  inst.epsilon.assign(rank, 0);
  if (rank > 1)
    for (std::size_t j = 0; j < rank; ++j) {
      inst.shifts[j] = static_cast<std::int64_t>(pick(2));
      inst.epsilon[j] = static_cast<std::int64_t>(pick(static_cast<std::uint64_t>(gp.max_eps) + 1));
    }
  inst.omega.resize(inst.n);
  for (auto& o : inst.omega) o = static_cast<std::int64_t>(pick(static_cast<std::uint64_t>(gp.max_weight) + 1));

  auto sp = standard_space(Rationals{}, inst.n, FreeModuleDescriptor::with_shifts(inst.shifts));
  auto nm = inst.names();
  std::size_t count = 1 + pick(gp.max_gens);
  std::int64_t top = std::max<std::int64_t>(gp.max_degree, 1);
  while (inst.gens.size() < count) {
    std::int64_t d = 1 + static_cast<std::int64_t>(pick(static_cast<std::uint64_t>(top)));
    std::uint64_t style = pick(6);
    std::size_t nterms = style == 0 ? 1 : style == 1 ? 2 : 2 + pick(3);
    std::vector<Term<Rationals>> terms;
    for (std::size_t k = 0; k < nterms; ++k) {
      auto j = static_cast<std::uint32_t>(pick(rank));
      std::int64_t e = d - inst.shifts[j];
      if (e < 0) continue;
      Monomial m;
      m.comp = j;
      for (std::int64_t s = 0; s < e; ++s) ++m.exp[pick(inst.n)];
      long c = 1 + static_cast<long>(pick(3));
      if (pick(2)) c = -c;
      terms.push_back({Rationals{}.from_int(c), m});
    }
    auto f = sp.from_terms(std::move(terms));
    if (f.is_zero()) continue;
    inst.gens.push_back(io::format_element(sp, nm, f));
  }
  return inst;
}

namespace detail {

inline std::string betti_line(const BettiTable& t) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : t.entries()) {
    s << (first ? "" : " ") << "b" << k.first << "," << k.second << "=" << v;
    first = false;
  }
  return first ? "(empty)" : s.str();
}

template <class Field>
std::string module_line(const Submodule<Field>& m, const io::Naming& nm) {
  if (m.is_zero()) return "0";
  std::string s;
  const auto& gb = m.groebner_basis();
  for (std::size_t i = 0; i < gb.size(); ++i) s += (i ? ", " : "") + io::format_element(m.ambient(), nm, gb[i]);
  return s;
}

inline io::Naming default_names(std::size_t n) {
  static const char* v[] = {"x", "y", "z", "w", "u", "v", "s", "r"};
  io::Naming nm;
  for (std::size_t i = 0; i < n && i < 8; ++i) nm.vars.push_back(v[i]);
  for (std::size_t i = 8; i < n; ++i) nm.vars.push_back("x" + std::to_string(i));
  return nm;
}

template <class Field>
bool clin_or_zero(const Submodule<Field>& m) {
  return m.is_zero() || is_componentwise_linear(m);
}

inline std::string join_degrees(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s.empty() ? "-" : s;
}

}  // namespace detail

/// Per-degree cancellation chain turning `from` into `to`: in each internal
/// degree j the differences D_i = from_{i,j} - to_{i,j} must split as
/// c_{i-1} + c_i with c_i >= 0 cancellations between (i,j) and (i+1,j).
/// Returns the list (i, j, c_i) or nullopt when no such chain exists.
inline std::optional<std::vector<std::tuple<int, std::int64_t, std::int64_t>>> cancellation_plan(const BettiTable& from,
                                                                                                  const BettiTable& to) {
  std::map<std::int64_t, std::map<int, std::int64_t>> diff;
  for (const auto& [k, v] : from.entries()) diff[k.second][k.first] += v;
  for (const auto& [k, v] : to.entries()) diff[k.second][k.first] -= v;
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> plan;
  for (const auto& [j, row] : diff) {
    int top = row.empty() ? 0 : row.rbegin()->first;
    std::int64_t carry = 0;
    for (int i = 0; i <= top + 1; ++i) {
      auto it = row.find(i);
      std::int64_t d = it == row.end() ? 0 : it->second;
      std::int64_t c = d - carry;
      if (c < 0) return std::nullopt;
      if (c > 0) plan.emplace_back(i, j, c);
      carry = c;
    }
    if (carry != 0) return std::nullopt;
  }
  return plan;
}

struct CheckInfo {
  std::string name;
  std::string summary;
  bool conditional = false;  // has a theorem hypothesis that may not fire
};

inline const std::vector<CheckInfo>& catalogue() {
  static const std::vector<CheckInfo> c{
      {"routes", "lifting-lemma algorithm and saturation give the same reduced basis"},
      {"hilbert", "M and in(M) have the same Hilbert function"},
      {"dominance", "beta(F/M) <= beta(F/in(M)) entrywise"},
      {"cancellation", "beta(F/M) arises from beta(F/in(M)) by consecutive cancellations"},
      {"crystallization", "a generator gap of length creg(in)+1 above a forces in(M) into degrees <= a", true},
      {"crystallization-weak", "as crystallization, with the window read off beta_1(in(M)<a>)", true},
      {"same-beta0", "in(M) componentwise linear and beta_0(M) = beta_0(in) imply M componentwise linear", true},
      {"same-beta1", "in(M) componentwise linear and beta_1(M) = beta_1(in) imply M componentwise linear", true},
      {"syzygy-linear", "in(M) componentwise linear and beta_i(M) = beta_i(in) imply Omega_j(M) componentwise linear, j >= i-2", true},
      {"remark-initial", "in_(omega,eps(i)) of the t=1 syzygy image equals the t=0 image"},
      {"lifting", "lifting criterion agrees with the direct t-torsion test on every algorithm step"},
      {"criterion", "Buchberger and truncated criteria hold exactly when <in f_i> = in(M)"},
      {"ld-creg", "ld = 0 exactly when creg = 0, for M and in(M)"},
      {"gb", "reduced bases have all s-pairs reducing to zero and ignore generator order"},
  };
  return c;
}

inline const CheckInfo* find_check(const std::string& s) {
  for (const auto& c : catalogue())
    if (c.name == s) return &c;
  return nullptr;
}

inline bool is_check_name(const std::string& s) { return find_check(s) != nullptr; }

/// Extra integer arguments: for syzygy-linear and remark-initial the
/// homological index; otherwise unused.
using Params = std::vector<std::int64_t>;

namespace impl {

template <class Field>
Report routes(const Submodule<Field>& m, const WeightData& w, const io::Naming& nm) {
  Report r;
  auto sat = initial_module_sat(m, w);
  auto wb = weight_buchberger(m, w);
  WeightBuchbergerOptions fast;
  fast.divide_max_t = true;
  auto wf = weight_buchberger(m, w, fast);
  bool ok = wb.initial.groebner_basis() == sat.groebner_basis() && wf.initial.groebner_basis() == sat.groebner_basis();
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  r.details.push_back("saturation: " + detail::module_line(sat, nm));
  r.details.push_back("algorithm:  " + detail::module_line(wb.initial, nm) + " (" + std::to_string(wb.trace.steps.size()) +
                      " steps)");
  r.details.push_back("algorithm, max t-division: " + detail::module_line(wf.initial, nm) + " (" +
                      std::to_string(wf.trace.steps.size()) + " steps)");
  r.counters["steps"] = static_cast<std::int64_t>(wb.trace.steps.size());
  if (wb.trace.steps.size() > 1) r.counters["multi_step"] = 1;
  return r;
}

template <class Field>
Report hilbert(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto in = initial_module_sat(m, w);
  std::int64_t lo = hilbert_floor(m);
  std::int64_t hi = std::max(hilbert_bound(m), hilbert_bound(in));
  auto hm = quotient_hilbert_function(m, lo, hi);
  auto hn = quotient_hilbert_function(in, lo, hi);
  bool ok = hm.values == hn.values;
  std::ostringstream s;
  s << "HF(F/M), degrees " << lo << ".." << hi << ":";
  for (auto v : hm.values) s << " " << v;
  r.details.push_back(s.str());
  if (!ok) {
    for (std::int64_t d = lo; d <= hi; ++d)
      if (hm.at(d) != hn.at(d))
        r.details.push_back("degree " + std::to_string(d) + ": " + std::to_string(hm.at(d)) + " vs " +
                            std::to_string(hn.at(d)));
  }
  // the numerators pin the whole function, not just the window
  if (hm.numerator && hn.numerator) {
    if (*hm.numerator != *hn.numerator) {
      ok = false;
      r.details.push_back("Hilbert series numerators differ");
    } else {
      r.counters["certified"] = 1;
    }
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report dominance(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto in = initial_module_sat(m, w);
  auto bm = free_resolution(Quotient<Field>{m}).betti();
  auto bi = free_resolution(Quotient<Field>{in}).betti();
  bool ok = dominated_by(bm, bi);
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  r.reason = bm == bi ? "equal" : "strict";
  if (!(bm == bi)) r.counters["strict"] = 1;
  r.details.push_back("beta(F/M):     " + detail::betti_line(bm));
  r.details.push_back("beta(F/in(M)): " + detail::betti_line(bi));
  return r;
}

template <class Field>
Report cancellation(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto in = initial_module_sat(m, w);
  auto bm = free_resolution(Quotient<Field>{m}).betti();
  auto bi = free_resolution(Quotient<Field>{in}).betti();
  auto plan = cancellation_plan(bi, bm);
  r.details.push_back("beta(F/M):     " + detail::betti_line(bm));
  r.details.push_back("beta(F/in(M)): " + detail::betti_line(bi));
  if (!plan) {
    r.verdict = Verdict::Fail;
    r.details.push_back("no cancellation chain exists");
    return r;
  }
  std::int64_t total = 0;
  for (const auto& [i, j, c] : *plan) {
    r.details.push_back("cancel (" + std::to_string(i) + "," + std::to_string(j) + ")-(" + std::to_string(i + 1) + "," +
                        std::to_string(j) + ") x" + std::to_string(c));
    total += c;
  }
  r.reason = total == 0 ? "no cancellations" : std::to_string(total) + " cancellations";
  if (total) r.counters["cancellations"] = total;
  return r;
}

template <class Field>
Report crystallization(const Submodule<Field>& m, const WeightData& w, bool weak) {
  Report r;
  auto in = initial_module_sat(m, w);
  auto gm = generator_degrees(m);
  auto gi = generator_degrees(in);
  std::int64_t a = gm.back();
  std::int64_t window = 0;
  if (weak) {
    auto b1 = free_resolution(truncation(in, a)).betti();
    std::int64_t top = a + 1;  // no syzygies at all: r = 0
    for (auto j : b1.degrees(1)) top = std::max(top, j);
    window = std::max<std::int64_t>(0, top - 1 - a);
  } else {
    window = creg(in);
  }
  bool hyp = true;
  for (auto d : gi)
    if (d >= a + 1 && d <= a + 1 + window) hyp = false;
  bool concl = gi.back() <= a;
  r.details.push_back("a = " + std::to_string(a) + ", r = " + std::to_string(window) + ", generator degrees of in(M): " +
                      detail::join_degrees(gi));
  if (!hyp) {
    r.reason = "vacuous: in(M) has a generator in degrees " + std::to_string(a + 1) + ".." +
               std::to_string(a + 1 + window);
    r.counters["vacuous"] = 1;
    return r;
  }
  r.counters["fired"] = 1;
  if (!initial_forms_module(m, w).same_module(in)) r.counters["fired_nontrivial"] = 1;
  r.reason = "hypothesis holds";
  r.verdict = concl ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report same_beta(const Submodule<Field>& m, const WeightData& w, int level) {
  Report r;
  auto in = initial_module_sat(m, w);
  if (!is_componentwise_linear(in)) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "in(M) not componentwise linear";
    return r;
  }
  auto bm = free_resolution(m).betti();
  auto bi = free_resolution(in).betti();
  r.details.push_back("beta_" + std::to_string(level) + "(M) = " + std::to_string(bm.total(level)) + ", beta_" +
                      std::to_string(level) + "(in) = " + std::to_string(bi.total(level)));
  if (bm.total(level) != bi.total(level)) {
    r.reason = "vacuous: Betti numbers differ";
    r.counters["vacuous"] = 1;
    return r;
  }
  r.counters["fired"] = 1;
  auto c = creg(m);
  r.details.push_back("creg(M) = " + std::to_string(c));
  r.reason = "hypothesis holds";
  r.verdict = c == 0 ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report syzygy_linear(const Submodule<Field>& m, const WeightData& w, const Params& p) {
  Report r;
  auto in = initial_module_sat(m, w);
  if (!is_componentwise_linear(in)) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "in(M) not componentwise linear";
    return r;
  }
  auto res = free_resolution(m);
  auto bm = res.betti();
  auto bi = free_resolution(in).betti();
  std::vector<int> indices;
  if (!p.empty()) {
    indices.push_back(static_cast<int>(p[0]));
  } else {
    for (int i = 0; i <= bi.max_index(); ++i) indices.push_back(i);
  }
  std::map<int, bool> clin;  // j -> Omega_j(M) componentwise linear
  auto omega_clin = [&](int j) {
    auto it = clin.find(j);
    if (it != clin.end()) return it->second;
    bool v = j < 0 ? is_componentwise_linear(m) : detail::clin_or_zero(syzygy_module(res, j));
    clin[j] = v;
    return v;
  };
  bool any = false, ok = true;
  for (int i : indices) {
    if (bi.total(i) == 0 || bm.total(i) != bi.total(i)) continue;
    any = true;
    r.counters[i >= 2 ? "fired" : "fired_low"] = 1;
    for (int j = i - 2; j <= res.length(); ++j) {
      if (!omega_clin(j)) {
        ok = false;
        r.details.push_back("beta_" + std::to_string(i) + " equal but Omega_" + std::to_string(j) +
                            "(M) not componentwise linear");
      }
      if (j < 0) j = -1;  // Omega_{<0} are all M
    }
  }
  std::ostringstream s;
  s << "beta(M) totals:";
  for (int i = 0; i <= std::max(bm.max_index(), bi.max_index()); ++i) s << " " << bm.total(i);
  s << "; beta(in) totals:";
  for (int i = 0; i <= std::max(bm.max_index(), bi.max_index()); ++i) s << " " << bi.total(i);
  r.details.insert(r.details.begin(), s.str());
  if (!any) {
    r.reason = "vacuous: no matching Betti number";
    r.counters["vacuous"] = 1;
    return r;
  }
  r.reason = "hypothesis holds";
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report remark_initial(const Submodule<Field>& m, const WeightData& w, const Params& p, const io::Naming& nm) {
  Report r;
  constexpr std::int64_t guard = 40;
  auto fam = homogenize_module(m, w);
  auto res = free_resolution(Quotient<Field>{fam.tilde_module()});
  std::int64_t total = 0;
  for (const auto& sp : res.modules) total += sp.rank();
  if (total > guard) {
    r.verdict = Verdict::NotApplicable;
    r.reason = "bigraded resolution too large (" + std::to_string(total) + " > " + std::to_string(guard) + ")";
    return r;
  }
  if (!is_complex(res)) {
    r.verdict = Verdict::Fail;
    r.reason = "bigraded resolution is not a complex";
    return r;
  }
  const auto& base = m.ambient();
  const auto& K = base.field();
  std::vector<int> indices;
  if (!p.empty()) {
    indices.push_back(static_cast<int>(p[0]));
  } else {
    for (int i = 0; i < static_cast<int>(res.maps.size()); ++i) indices.push_back(i);
  }
  bool ok = true;
  for (int i : indices) {
    if (i < 0) throw std::invalid_argument("homological index must be non-negative");
    if (static_cast<std::size_t>(i) >= res.maps.size()) {
      r.details.push_back("i = " + std::to_string(i) + ": image is zero on both sides");
      continue;
    }
    const auto& Fi = res.modules[i];
    auto Gi = base.with_module(FreeModuleDescriptor::with_shifts(Fi.descriptor().shifts));
    std::vector<ModuleElement<Field>> b1, b0;
    for (const auto& c : res.maps[i]) {
      b1.push_back(evaluate_t_into(Fi, Gi, c, K.one()));
      b0.push_back(evaluate_t_into(Fi, Gi, c, K.zero()));
    }
    WeightData wi(w.omega, Fi.descriptor().weights);
    auto lhs = initial_module_sat(Submodule<Field>::spanned_by(Gi, b1), wi);
    auto rhs = Submodule<Field>::spanned_by(Gi, b0);
    bool eq = lhs.same_module(rhs);
    r.counters["indices"] += 1;
    if (i >= 1) r.counters["fired"] = 1;
    r.details.push_back("i = " + std::to_string(i) + ", eps(i) = (" + io::join_ints(Fi.descriptor().weights) + "): " +
                        (eq ? "equal" : "differ"));
    if (!eq) {
      ok = false;
      r.details.push_back("  in(B_t=1) = " + detail::module_line(lhs, nm));
      r.details.push_back("  B_t=0     = " + detail::module_line(rhs, nm));
    }
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report lifting(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto wb = weight_buchberger(m, w);
  BigradedContext<Field> ctx(m.ambient(), w);
  auto judge = [&](const std::vector<ModuleElement<Field>>& gens, const std::string& label,
                   std::optional<bool> expected) {
    auto inst = make_lifting_instance(ctx, gens);
    bool lc = lifting_criterion(inst);
    bool tr = t_regular_on_cokernel(inst);
    r.counters[lc ? "criterion_true" : "criterion_false"] += 1;
    bool ok = lc == tr && (!expected || *expected == lc);
    r.details.push_back(label + ": criterion " + (lc ? "true" : "false") + ", torsion-free " + (tr ? "true" : "false"));
    if (!ok) r.verdict = Verdict::Fail;
  };
  for (std::size_t k = 0; k < wb.trace.steps.size(); ++k) {
    const auto& st = wb.trace.steps[k];
    // the algorithm stops exactly when the criterion holds
    judge(st.generators, "step " + std::to_string(k), st.terminal);
  }
  judge(homogenize_module(m, w).basis, "saturated", true);
  return r;
}

template <class Field>
Report criterion(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto in = initial_module_sat(m, w);
  bool eq = initial_forms_module(m, w).same_module(in);
  bool b1 = buchberger_criterion(m, w, SyzygyStrategy::Minimal);
  bool b2 = buchberger_criterion(m, w, SyzygyStrategy::GroebnerBlock);
  auto sd = syzygy_generating_degree(m, w);
  std::int64_t d = sd ? *sd : hilbert_floor(m);
  bool tc = truncated_criterion(m, w, d);
  r.details.push_back(std::string("<in f_i> = in(M): ") + (eq ? "yes" : "no"));
  r.details.push_back(std::string("criterion (minimal syzygies): ") + (b1 ? "true" : "false"));
  r.details.push_back(std::string("criterion (full syzygy basis): ") + (b2 ? "true" : "false"));
  r.details.push_back("truncated criterion at d = " + std::to_string(d) + ": " + (tc ? "true" : "false"));
  r.counters[eq ? "equal" : "differ"] = 1;
  if (b1 == b2) r.counters["strategies_agree"] = 1;
  r.verdict = b1 == eq && b2 == eq && tc == eq ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report ld_creg(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  auto in = initial_module_sat(m, w);
  bool ok = true;
  for (const Submodule<Field>* x : {&m, static_cast<const Submodule<Field>*>(&in)}) {
    int ld = linear_defect(*x);
    auto c = creg(*x);
    r.details.push_back(std::string(x == &m ? "M" : "in(M)") + ": ld = " + std::to_string(ld) +
                        ", creg = " + std::to_string(c));
    if ((ld == 0) != (c == 0)) ok = false;
    if (c == 0) r.counters["clin"] += 1;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

template <class Field>
Report gb(const Submodule<Field>& m, const WeightData& w) {
  Report r;
  bool ok = true;
  const auto& sp = m.ambient();
  auto basis = m.groebner_basis();
  if (!all_spairs_reduce_to_zero(sp, basis)) {
    ok = false;
    r.details.push_back("s-pairs of the basis of M do not all reduce to zero");
  }
  auto gens = m.generators();
  std::vector<ModuleElement<Field>> rev(gens.rbegin(), gens.rend());
  std::vector<ModuleElement<Field>> rot(gens.begin(), gens.end());
  if (!rot.empty()) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  if (buchberger(sp, rev) != basis || buchberger(sp, rot) != basis) {
    ok = false;
    r.details.push_back("reduced basis depends on generator order");
  }
  auto in = initial_module_sat(m, w);
  if (!all_spairs_reduce_to_zero(sp, in.groebner_basis())) {
    ok = false;
    r.details.push_back("s-pairs of the basis of in(M) do not all reduce to zero");
  }
  auto fam = homogenize_module(m, w);
  if (!all_spairs_reduce_to_zero(fam.context.tilde(), fam.basis)) {
    ok = false;
    r.details.push_back("s-pairs of the basis of the homogenization do not all reduce to zero");
  }
  r.details.push_back(std::to_string(basis.size()) + " basis elements for M, " + std::to_string(fam.basis.size()) +
                      " for its homogenization");
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace impl

/// Runs one named check on M with weights w.
template <class Field>
Report run_check(const std::string& name, const Submodule<Field>& m, const WeightData& w, const Params& p = {},
                 std::optional<io::Naming> names = std::nullopt) {
  if (!is_check_name(name)) throw std::invalid_argument("unknown check: " + name);
  if (m.is_zero()) throw std::invalid_argument("checks need a non-zero module");
  require_graded(m);
  io::Naming nm = names ? *names : detail::default_names(m.ambient().nvars());
  Report r;
  try {
    if (name == "routes") r = impl::routes(m, w, nm);
    else if (name == "hilbert") r = impl::hilbert(m, w);
    else if (name == "dominance") r = impl::dominance(m, w);
    else if (name == "cancellation") r = impl::cancellation(m, w);
    else if (name == "crystallization") r = impl::crystallization(m, w, false);
    else if (name == "crystallization-weak") r = impl::crystallization(m, w, true);
    else if (name == "same-beta0") r = impl::same_beta(m, w, 0);
    else if (name == "same-beta1") r = impl::same_beta(m, w, 1);
    else if (name == "syzygy-linear") r = impl::syzygy_linear(m, w, p);
    else if (name == "remark-initial") r = impl::remark_initial(m, w, p, nm);
    else if (name == "lifting") r = impl::lifting(m, w);
    else if (name == "criterion") r = impl::criterion(m, w);
    else if (name == "ld-creg") r = impl::ld_creg(m, w);
    else r = impl::gb(m, w);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    // an engine error on a valid instance is a defect, reported as such
    r = Report{};
    r.verdict = Verdict::Fail;
    r.reason = "engine error";
    r.details.push_back(e.what());
  }
  r.check = name;
  return r;
}

inline Report run_check(const std::string& name, const Instance& inst, const Params& p = {}) {
  if (inst.rational) return run_check(name, build_module(inst, Rationals{}), inst.weights(), p, inst.names());
  return run_check(name, build_module(inst, PrimeField(inst.p)), inst.weights(), p, inst.names());
}

struct SweepOptions {
  std::uint64_t seed = 1;
  std::size_t budget = 500;
  unsigned threads = 1;
  GeneratorParams generator;
  Params params;
};

struct SweepEntry {
  Instance instance;
  Report report;
};

struct SweepSummary {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t seeds = 0;
  std::size_t pass = 0, fail = 0, na = 0;
  std::map<std::string, std::int64_t> counters;
  std::vector<SweepEntry> failures;

  // conditional checks only say something when their hypothesis fired
  bool never_fired() const {
    const CheckInfo* c = find_check(name);
    if (!c || !c->conditional) return false;
    auto it = counters.find("fired");
    return it == counters.end() || it->second == 0;
  }
};

/// Instance k of the sweep uses seed + k, so `--seed s --budget 1` replays
/// a single reported instance. Work is strided over threads and merged in
/// seed order; the summary does not depend on the thread count.
inline SweepSummary sweep(const std::string& name, const SweepOptions& opt) {
  if (!is_check_name(name)) throw std::invalid_argument("unknown check: " + name);
  std::vector<SweepEntry> out(opt.budget);
  auto work = [&](unsigned tid, unsigned nthreads) {
    for (std::size_t k = tid; k < opt.budget; k += nthreads) {
      out[k].instance = generate_instance(opt.seed + k, opt.generator);
      out[k].report = run_check(name, out[k].instance, opt.params);
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::max<std::size_t>(opt.budget, 1))));
  if (t == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(work, i, t);
    for (auto& th : pool) th.join();
  }
  SweepSummary s;
  s.name = name;
  s.seed = opt.seed;
  s.seeds = opt.budget;
  for (auto& e : out) {
    switch (e.report.verdict) {
      case Verdict::Pass:
        ++s.pass;
        break;
      case Verdict::Fail:
        ++s.fail;
        s.failures.push_back(e);
        break;
      default:
        ++s.na;
    }
    for (const auto& [k, v] : e.report.counters) s.counters[k] += v;
  }
  return s;
}

}  // namespace cregro::checks

#endif  // CREGRO_CHECKS_HPP
