#ifndef CREGRO_IO_SESSION_HPP
#define CREGRO_IO_SESSION_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "cregro/checks.hpp"
#include "cregro/field.hpp"
#include "cregro/invariants.hpp"
#include "cregro/io/parse.hpp"
#include "cregro/resolution.hpp"
#include "cregro/submodule.hpp"
#include "cregro/weight_initial.hpp"

namespace cregro::io {

using json = nlohmann::json;

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct RunOptions {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t budget = 500;
  unsigned threads = 1;
  std::optional<std::int64_t> max_degree;
};

// ---- formatting helpers shared by text and JSON output ----

/// Increasing degree, and inside one degree the canonical order from the
/// top down; this is the order every generator list is printed in.
template <class Field>
std::vector<std::string> format_sorted(const ModuleSpace<Field>& sp, const Naming& nm,
                                       std::vector<ModuleElement<Field>> v) {
  for (auto& f : v) f = sp.make_monic(f);
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    auto da = sp.std_degree(a), db = sp.std_degree(b);
    if (da != db) return da < db;
    return sp.order().greater(a.lead_monomial(), b.lead_monomial());
  });
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(format_element(sp, nm, f));
  return out;
}

inline std::string bracket_list(const std::vector<std::string>& v) {
  if (v.empty()) return "0";
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "]";
}

/// A(-2)^2+A(-3) style name of a graded free module.
inline std::string free_module_name(const std::vector<std::int64_t>& shifts) {
  if (shifts.empty()) return "0";
  std::vector<std::pair<std::int64_t, int>> runs;
  for (auto d : shifts) {
    if (!runs.empty() && runs.back().first == d) ++runs.back().second;
    else runs.emplace_back(d, 1);
  }
  std::string s;
  for (const auto& [d, k] : runs) {
    if (!s.empty()) s += "+";
    s += "A";
    if (d != 0) s += "(" + std::to_string(-d) + ")";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

/// Triangular layout: columns i, rows j - i, dots for zeros.
inline std::vector<std::string> betti_layout(const BettiTable& t) {
  if (t.empty()) return {"0"};
  int top = t.max_index();
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : t.entries()) {
    std::int64_t r = k.second - k.first;
    if (first || r < lo) lo = r;
    if (first || r > hi) hi = r;
    first = false;
  }
  std::vector<std::string> labels{"", "total"};
  for (auto r = lo; r <= hi; ++r) labels.push_back(std::to_string(r));
  std::vector<std::vector<std::string>> cols;
  for (int i = 0; i <= top; ++i) {
    std::vector<std::string> c{std::to_string(i), std::to_string(t.total(i))};
    for (auto r = lo; r <= hi; ++r) {
      auto v = t.at(i, r + i);
      c.push_back(v == 0 ? "." : std::to_string(v));
    }
    cols.push_back(std::move(c));
  }
  std::size_t lw = 0;
  for (const auto& l : labels) lw = std::max(lw, l.size());
  std::vector<std::string> lines;
  for (std::size_t row = 0; row < labels.size(); ++row) {
    std::string s = row == 0 ? std::string(lw + 1, ' ') : std::string(lw - labels[row].size(), ' ') + labels[row] + ":";
    for (const auto& c : cols) {
      std::size_t w = 0;
      for (const auto& x : c) w = std::max(w, x.size());
      s += " " + std::string(w - c[row].size(), ' ') + c[row];
    }
    lines.push_back(s);
  }
  return lines;
}

inline json betti_json(const BettiTable& t) {
  json a = json::array();
  for (const auto& [k, v] : t.entries()) a.push_back({k.first, k.second, v});
  return a;
}

// ---- the interpreter ----

namespace session_detail {

template <class Field>
struct Env {
  Field K;
  Naming names;
  FreeModuleDescriptor free;
  std::vector<std::int64_t> omega;
  std::vector<std::int64_t> epsilon;
  std::map<std::string, Submodule<Field>> modules;

  ModuleSpace<Field> space() const { return standard_space(K, names.vars.size(), free); }
};

struct Output {
  std::vector<std::string> lines;
  json j;
  bool failed = false;
};

inline std::int64_t int_arg(const CommandAst& c, std::size_t k, const std::string& what) {
  const std::string& s = c.args.at(k);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ScriptError(c.pos, what + " must be an integer, got '" + s + "'");
  return v;
}

inline void allow_options(const CommandAst& c, std::initializer_list<const char*> ok) {
  for (const auto& [k, v] : c.options) {
    bool found = false;
    for (const char* o : ok) found = found || k == o;
    if (!found) throw ScriptError(c.pos, "option --" + k + " not accepted by " + c.name);
  }
}

inline void arity(const CommandAst& c, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (c.args.size() < lo || c.args.size() > hi) throw ScriptError(c.pos, "usage: " + usage);
}

inline bool flag(const CommandAst& c, const std::string& k) {
  auto it = c.options.find(k);
  return it != c.options.end() && it->second != 0;
}

inline std::string t_name(const Naming& nm) {
  std::string t = "t";
  while (nm.var_index(t)) t += "_";
  return t;
}

}  // namespace session_detail

/// Runs scripts. A first pass replays all declarations and checks every
/// command statically (names, arities, homogeneity, weight lengths), so a
/// usage error never leaves half an output behind; the second pass runs.
class Session {
 public:
  Session(RunOptions opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int run_text(const std::string& text) {
    Script s;
    try {
      s = parse(text);
    } catch (const ScriptError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return run(s);
  }

  int run(const Script& s) {
    try {
      interpret(s, true);
    } catch (const ScriptError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    try {
      return interpret(s, false);
    } catch (const ScriptError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

 private:
  using AnyEnv = std::variant<std::monostate, session_detail::Env<Rationals>, session_detail::Env<PrimeField>>;

  int interpret(const Script& s, bool dry) {
    AnyEnv env;
    bool failed = false;
    for (const auto& st : s.statements) {
      if (const auto* r = std::get_if<RingDecl>(&st)) {
        declare_ring(env, *r);
        continue;
      }
      auto pos = std::visit([](const auto& x) { return x.pos; }, st);
      if (std::holds_alternative<std::monostate>(env)) throw ScriptError(pos, "no ring declared");
      std::visit(
          [&](auto& e) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(e)>, std::monostate>) {
              if (const auto* f = std::get_if<FreeDecl>(&st)) {
                e.free = FreeModuleDescriptor::with_shifts(f->shifts);
                e.epsilon.assign(f->shifts.size(), 0);
              } else if (const auto* w = std::get_if<WeightDecl>(&st)) {
                declare_weight(e, *w);
              } else if (const auto* l = std::get_if<LetDecl>(&st)) {
                declare_module(e, *l);
              } else {
                const auto& c = std::get<CommandAst>(st);
                try {
                  auto o = command(e, c, dry);
                  if (!dry) {
                    emit(c, o);
                    failed = failed || o.failed;
                  }
                } catch (const ScriptError&) {
                  throw;
                } catch (const std::exception& ex) {
                  throw ScriptError(c.pos, ex.what());
                }
              }
            }
          },
          env);
    }
    return failed ? kExitCheckFailed : kExitOk;
  }

  void declare_ring(AnyEnv& env, const RingDecl& r) {
    std::set<std::string> seen;
    for (const auto& n : r.names)
      if (!seen.insert(n).second) throw ScriptError(r.pos, "variable '" + n + "' declared twice");
    if (r.names.size() > kMaxVars)
      throw ScriptError(r.pos, "at most " + std::to_string(kMaxVars) + " variables are supported");
    auto init = [&](auto& e) {
      e.names.vars = r.names;
      e.free = FreeModuleDescriptor::with_shifts({0});
      e.omega.assign(r.names.size(), 0);
      e.epsilon.assign(1, 0);
    };
    if (r.field.rational) {
      session_detail::Env<Rationals> e{Rationals{}, {}, {}, {}, {}, {}};
      init(e);
      env = std::move(e);
    } else {
      session_detail::Env<PrimeField> e{PrimeField(static_cast<std::uint32_t>(r.field.p)), {}, {}, {}, {}, {}};
      init(e);
      env = std::move(e);
    }
  }

  template <class Field>
  void declare_weight(session_detail::Env<Field>& e, const WeightDecl& w) {
    if (w.omega.size() != e.names.vars.size())
      throw ScriptError(w.pos, "omega has " + std::to_string(w.omega.size()) + " entries but the ring has " +
                                   std::to_string(e.names.vars.size()) + " variables");
    if (w.epsilon.size() != e.free.rank())
      throw ScriptError(w.pos, "epsilon has " + std::to_string(w.epsilon.size()) + " entries but F has rank " +
                                   std::to_string(e.free.rank()));
    for (auto v : w.omega)
      if (v < 0) throw ScriptError(w.pos, "weights must be non-negative");
    for (auto v : w.epsilon)
      if (v < 0) throw ScriptError(w.pos, "weights must be non-negative");
    e.omega = w.omega;
    e.epsilon = w.epsilon;
  }

  template <class Field>
  void declare_module(session_detail::Env<Field>& e, const LetDecl& l) {
    auto sp = e.space();
    std::vector<ModuleElement<Field>> gens;
    for (const auto& a : l.elements) {
      auto f = resolve(sp, e.names, a);
      if (f.is_zero()) continue;
      if (!sp.is_std_homogeneous(f)) throw ScriptError(a.pos, "generator not homogeneous: " + format_element(sp, e.names, f));
      if (opt_.max_degree && sp.std_degree(f) > *opt_.max_degree)
        throw ScriptError(a.pos, "generator degree " + std::to_string(sp.std_degree(f)) + " exceeds --max-degree " +
                                     std::to_string(*opt_.max_degree));
      gens.push_back(std::move(f));
    }
    e.modules.insert_or_assign(l.name, Submodule<Field>(sp, std::move(gens)));
  }

  template <class Field>
  const Submodule<Field>& lookup(const session_detail::Env<Field>& e, const CommandAst& c, bool need_nonzero) const {
    auto it = e.modules.find(c.args.at(0));
    if (it == e.modules.end()) throw ScriptError(c.pos, "unknown module '" + c.args[0] + "'");
    if (need_nonzero && it->second.is_zero())
      throw ScriptError(c.pos, c.name + " is undefined for the zero module '" + c.args[0] + "'");
    return it->second;
  }

  template <class Field>
  WeightData weights_for(const session_detail::Env<Field>& e, const CommandAst& c, const Submodule<Field>& m) const {
    if (e.epsilon.size() != m.ambient().rank())
      throw ScriptError(c.pos, "epsilon has " + std::to_string(e.epsilon.size()) + " entries but '" + c.args[0] +
                                   "' lives in a free module of rank " + std::to_string(m.ambient().rank()));
    return WeightData(e.omega, e.epsilon);
  }

  template <class Field>
  session_detail::Output command(const session_detail::Env<Field>& e, const CommandAst& c, bool dry) {
    using namespace session_detail;
    Output o;
    const std::string& name = c.name;
    if (name == "check") return check(e, c, dry);

    if (name == "inw" || name == "gb" || name == "reg" || name == "creg" || name == "ld") {
      arity(c, 1, 1, name + " MODULE");
      allow_options(c, name == "inw" ? std::initializer_list<const char*>{"trace"} : std::initializer_list<const char*>{});
      bool nz = name == "reg" || name == "creg" || name == "ld";
      const auto& m = lookup(e, c, nz);
      auto w = weights_for(e, c, m);
      if (dry) return o;
      const auto& sp = m.ambient();
      const std::string& id = c.args[0];
      o.j["module"] = id;
      if (name == "inw") {
        WeightBuchbergerResult<Field> r = weight_buchberger(m, w);
        auto gens = m.is_zero() ? std::vector<std::string>{} : format_sorted(sp, e.names, r.initial.groebner_basis());
        o.lines.push_back("in(" + id + ") = " + bracket_list(gens));
        o.lines.push_back("steps = " + std::to_string(r.trace.steps.size()));
        o.j["initial"] = gens;
        o.j["steps"] = r.trace.steps.size();
        if (flag(c, "trace")) {
          Naming tn = e.names;
          tn.vars.push_back(t_name(e.names));
          BigradedContext<Field> ctx(sp, w);
          json steps = json::array();
          for (std::size_t k = 0; k < r.trace.steps.size(); ++k) {
            const auto& s = r.trace.steps[k];
            std::vector<std::string> q;
            for (std::size_t i = 0; i < s.q.size(); ++i)
              q.push_back(format_element(ctx.tilde(), tn, s.q[i]) + (s.q_contained[i] ? "" : " (new)"));
            o.lines.push_back("  step " + std::to_string(k) + ": q = " + bracket_list(q) +
                              (s.terminal ? ", terminal" : ""));
            steps.push_back({{"q", q}, {"terminal", s.terminal}});
          }
          o.j["trace"] = steps;
        }
      } else if (name == "gb") {
        auto gens = m.is_zero() ? std::vector<std::string>{} : format_sorted(sp, e.names, m.groebner_basis());
        o.lines.push_back("gb(" + id + ") = " + bracket_list(gens));
        o.j["basis"] = gens;
      } else if (name == "reg") {
        auto v = regularity(m);
        o.lines.push_back("reg = " + std::to_string(v));
        o.j["reg"] = v;
      } else if (name == "creg") {
        auto r = creg_profile(m);
        std::string prof;
        json pj = json::array();
        for (const auto& [d, v] : r.profile) {
          prof += (prof.empty() ? "" : ", ") + ("d=" + std::to_string(d) + ": " + std::to_string(v));
          pj.push_back({d, v});
        }
        o.lines.push_back("creg = " + std::to_string(r.value));
        o.lines.push_back("profile: " + prof);
        o.j["creg"] = r.value;
        o.j["profile"] = pj;
      } else {
        auto v = linear_defect(m);
        o.lines.push_back("ld = " + std::to_string(v));
        o.j["ld"] = v;
      }
      return o;
    }

    if (name == "betti") {
      arity(c, 1, 1, "betti MODULE [--sub 1] [--initial 1]");
      allow_options(c, {"sub", "initial"});
      const auto& m = lookup(e, c, false);
      bool initial = flag(c, "initial"), sub = flag(c, "sub");
      std::optional<WeightData> w;
      if (initial) w = weights_for(e, c, m);
      if (dry) return o;
      const std::string& id = c.args[0];
      Submodule<Field> target = initial ? initial_module_sat(m, *w) : m;
      std::string inner = initial ? "in(" + id + ")" : id;
      BettiTable t = sub ? (target.is_zero() ? BettiTable{} : free_resolution(target).betti())
                         : free_resolution(Quotient<Field>{target}).betti();
      o.lines.push_back("betti(" + (sub ? inner : "F/" + inner) + "):");
      for (const auto& l : betti_layout(t)) o.lines.push_back(l);
      o.j["module"] = id;
      o.j["kind"] = sub ? "submodule" : "quotient";
      o.j["initial"] = initial;
      o.j["betti"] = betti_json(t);
      return o;
    }

    if (name == "truncate" || name == "syz") {
      arity(c, 2, 2, name + " MODULE DEGREE");
      allow_options(c, {});
      const auto& m = lookup(e, c, name == "syz");
      auto k = int_arg(c, 1, name == "syz" ? "syzygy index" : "degree");
      if (name == "syz" && k < 0) throw ScriptError(c.pos, "syzygy index must be non-negative");
      if (dry) return o;
      const std::string& id = c.args[0];
      o.j["module"] = id;
      if (name == "truncate") {
        auto tr = truncation(m, k);
        auto gens = format_sorted(tr.ambient(), e.names, tr.generators());
        o.lines.push_back(id + "<" + std::to_string(k) + "> = " + bracket_list(gens));
        o.j["degree"] = k;
        o.j["generators"] = gens;
      } else {
        auto res = free_resolution(m);
        auto om = syzygy_module(res, static_cast<int>(k));
        const auto& shifts = om.ambient().descriptor().shifts;
        auto gens = format_sorted(om.ambient(), e.names, om.generators());
        o.lines.push_back("F_" + std::to_string(k) + " = " + free_module_name(shifts));
        o.lines.push_back("Omega_" + std::to_string(k) + "(" + id + ") = " + bracket_list(gens));
        o.j["index"] = k;
        o.j["shifts"] = shifts;
        o.j["generators"] = gens;
      }
      return o;
    }
    throw ScriptError(c.pos, "unknown command '" + name + "'");
  }

  template <class Field>
  session_detail::Output check(const session_detail::Env<Field>& e, const CommandAst& c, bool dry) {
    using namespace session_detail;
    Output o;
    if (!checks::is_check_name(c.check)) {
      std::string known;
      for (const auto& ci : checks::catalogue()) known += (known.empty() ? "" : ", ") + ci.name;
      throw ScriptError(c.pos, "unknown check '" + c.check + "' (known: " + known + ")");
    }
    bool indexed = c.check == "syzygy-linear" || c.check == "remark-initial";
    o.j["name"] = c.check;
    if (c.args.empty()) {
      allow_options(c, {"seed", "budget"});
      checks::SweepOptions so;
      so.seed = opt_.seed;
      so.budget = opt_.budget;
      if (auto it = c.options.find("seed"); it != c.options.end()) {
        if (it->second < 0) throw ScriptError(c.pos, "seed must be non-negative");
        so.seed = static_cast<std::uint64_t>(it->second);
      }
      if (auto it = c.options.find("budget"); it != c.options.end()) {
        if (it->second < 1) throw ScriptError(c.pos, "budget must be positive");
        so.budget = static_cast<std::size_t>(it->second);
      }
      so.threads = opt_.threads;
      if (opt_.max_degree) so.generator.max_degree = std::max<std::int64_t>(1, *opt_.max_degree);
      if (dry) return o;
      auto s = checks::sweep(c.check, so);
      o.lines.push_back(c.check + ": seeds " + std::to_string(s.seed) + ".." + std::to_string(s.seed + s.seeds - 1) +
                        ": pass " + std::to_string(s.pass) + ", fail " + std::to_string(s.fail) + ", n/a " +
                        std::to_string(s.na));
      if (!s.counters.empty()) {
        std::string cs;
        for (const auto& [k, v] : s.counters) cs += (cs.empty() ? "" : " ") + k + "=" + std::to_string(v);
        o.lines.push_back("  counters: " + cs);
      }
      if (s.never_fired()) o.lines.push_back("  warning: hypothesis never fired, every pass is vacuous");
      json fails = json::array();
      for (const auto& f : s.failures) {
        o.lines.push_back("  fail at seed " + std::to_string(f.instance.seed) + ": " + f.report.reason);
        o.lines.push_back("    replay: " + f.instance.script());
        for (const auto& d : f.report.details) o.lines.push_back("    " + d);
        fails.push_back({{"seed", f.instance.seed},
                         {"script", f.instance.script()},
                         {"reason", f.report.reason},
                         {"details", f.report.details}});
      }
      o.j["seed"] = s.seed;
      o.j["seeds"] = s.seeds;
      o.j["pass"] = s.pass;
      o.j["fail"] = s.fail;
      o.j["na"] = s.na;
      o.j["counters"] = s.counters;
      o.j["never_fired"] = s.never_fired();
      o.j["failures"] = fails;
      o.failed = s.fail > 0;
      return o;
    }
    arity(c, 1, indexed ? 2 : 1, "check " + c.check + (indexed ? " [MODULE [INDEX]]" : " [MODULE]"));
    allow_options(c, {});
    const auto& m = lookup(e, c, true);
    auto w = weights_for(e, c, m);
    checks::Params p;
    if (c.args.size() == 2) {
      auto i = int_arg(c, 1, "homological index");
      if (i < 0) throw ScriptError(c.pos, "homological index must be non-negative");
      p.push_back(i);
    }
    if (dry) return o;
    auto r = checks::run_check(c.check, m, w, p, e.names);
    std::string head = c.check + "(" + c.args[0] + "): " + checks::to_string(r.verdict);
    if (!r.reason.empty()) head += " (" + r.reason + ")";
    o.lines.push_back(head);
    for (const auto& d : r.details) o.lines.push_back("  " + d);
    o.j["module"] = c.args[0];
    o.j["verdict"] = checks::to_string(r.verdict);
    o.j["reason"] = r.reason;
    o.j["details"] = r.details;
    o.j["counters"] = r.counters;
    o.failed = r.verdict == checks::Verdict::Fail;
    return o;
  }

  void emit(const CommandAst& c, session_detail::Output& o) {
    if (opt_.json) {
      o.j["command"] = c.name;
      o.j["input"] = to_text(Statement{c});
      out_ << o.j.dump() << "\n";
      return;
    }
    out_ << "> " << to_text(Statement{c}) << "\n";
    for (const auto& l : o.lines) out_ << l << "\n";
  }

  RunOptions opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace cregro::io

#endif  // CREGRO_IO_SESSION_HPP
