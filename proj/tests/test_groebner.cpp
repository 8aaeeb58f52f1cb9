#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cregro;
using namespace testing_support;

namespace {

// dim_K of the degree-d part of <gens> by plain linear algebra on all
// degree-d multiples; no Groebner basis involved.
template <class Field>
std::size_t macaulay_dim(const ModuleSpace<Field>& sp, const std::vector<ModuleElement<Field>>& gens, std::int64_t d) {
  std::vector<ModuleElement<Field>> rows;
  for (const auto& g : gens) {
    std::int64_t e = d - sp.std_degree(g);
    if (e < 0) continue;
    for (const auto& u : detail::monomials_of_degree(sp.nvars(), e)) rows.push_back(sp.mul_term(g, sp.field().one(), u));
  }
  return detail::echelon(sp, rows).size();
}

// dimension of the degree-d part of the monomial module spanned by lms
template <class Field>
std::size_t monomial_span_dim(const ModuleSpace<Field>& sp, const std::vector<Monomial>& lms, std::int64_t d) {
  std::size_t n = 0;
  for (std::uint32_t j = 0; j < sp.rank(); ++j)
    for (auto u : detail::monomials_of_degree(sp.nvars(), d - sp.descriptor().shifts[j])) {
      u.comp = j;
      for (const auto& l : lms)
        if (l.divides(u)) {
          ++n;
          break;
        }
    }
  return n;
}

template <class Field>
std::vector<ModuleElement<Field>> random_homogeneous(std::mt19937_64& rng, const ModuleSpace<Field>& sp, int count,
                                                     int max_deg) {
  std::vector<ModuleElement<Field>> out;
  while (static_cast<int>(out.size()) < count) {
    std::int64_t d = 1 + rng() % max_deg;
    std::vector<Term<Field>> terms;
    for (std::uint32_t j = 0; j < sp.rank(); ++j)
      for (auto u : detail::monomials_of_degree(sp.nvars(), d - sp.descriptor().shifts[j])) {
        if (rng() % 3 != 0) continue;
        u.comp = j;
        terms.push_back({sp.field().from_int(static_cast<long>(rng() % 7) - 3), u});
      }
    auto f = sp.from_terms(terms);
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(NormalForm, Examples) {
  auto sp = space(2);
  EXPECT_TRUE(normal_form(sp, el(sp, "x^2*y"), els(sp, "x^2")).is_zero());
  // xy + y is not homogeneous; normal_form itself does not care
  EXPECT_EQ(str(sp, normal_form(sp, el(sp, "x*y+y"), els(sp, "x"))), "y");
  auto lex = standard_space(Q{}, 2, FreeModuleDescriptor::with_shifts({0}), ModuleOrder::PositionOverTerm, RingOrder::Lex);
  EXPECT_EQ(str(lex, normal_form(lex, el(lex, "x^2+y^2"), els(lex, "x-y"))), "2*y^2");
}

TEST(Buchberger, Examples) {
  auto sp = space(2);
  EXPECT_EQ(strs(sp, buchberger(sp, els(sp, "x^2, y"))), (std::vector<std::string>{"x^2", "y"}));
  EXPECT_EQ(strs(sp, buchberger(sp, els(sp, "x+y, x-y"))), (std::vector<std::string>{"x", "y"}));
  // char 2: x+y and x-y coincide
  auto g2 = space<PrimeField>(2, {0}, PrimeField(2));
  EXPECT_EQ(strs(g2, buchberger(g2, els(g2, "x+y, x-y"))), (std::vector<std::string>{"x+y"}));
}

TEST(Buchberger, TwistedCubicPair) {
  auto sp = space(3);
  auto gens = els(sp, "x^2-y*z, x*y-z^2");
  auto gb = buchberger(sp, gens);
  // the s-pair y(x^2-yz) - x(xy-z^2) = xz^2 - y^2z has leading term y^2z in
  // degrevlex; its own pairs then reduce to zero
  EXPECT_EQ(strs(sp, gb), (std::vector<std::string>{"y^2*z-x*z^2", "x^2-y*z", "x*y-z^2"}));
  EXPECT_TRUE(all_spairs_reduce_to_zero(sp, gb));
  // y^3 - x z^2 is not even in the ideal: no degree-3 multiple has a y^3 term
  EXPECT_FALSE(is_member(sp, el(sp, "y^3-x*z^2"), gb));
  for (std::int64_t d = 0; d <= 6; ++d) {
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.lead_monomial());
    EXPECT_EQ(macaulay_dim(sp, gens, d), monomial_span_dim(sp, lms, d)) << d;
  }
}

TEST(Membership, Examples) {
  auto sp = space(2);
  auto I = sub(sp, "x^2");
  EXPECT_TRUE(I.contains(el(sp, "x^2*y")));
  EXPECT_FALSE(I.contains(el(sp, "y^2")));
  // over A[t] with omega = 0, so t has the same total degree as x and y
  BigradedContext<Q> ctx(sp, WeightData::zero(2, 1));
  io::Naming nm{{"x", "y", "t"}};
  auto gens = io::read_elements(ctx.tilde(), nm, "x^2-t*y, y^2-t*x");
  EXPECT_TRUE(is_member(ctx.tilde(), io::read_element(ctx.tilde(), nm, "x^3-y^3"), buchberger(ctx.tilde(), gens)));
}

TEST(Syzygies, Examples) {
  auto sp = space(2);
  auto s1 = syzygies(sp, els(sp, "x, y"));
  ASSERT_EQ(s1.columns.size(), 1u);
  EXPECT_EQ(str(s1.source, s1.columns[0]), "y*e1-x*e2");

  auto gens = els(sp, "x^2, x*y, y^2");
  auto s2 = syzygies(sp, gens);
  auto expected = els(s2.source, "y*e1-x*e2, y*e2-x*e3");
  EXPECT_TRUE(Submodule<Q>(s2.source, s2.columns).same_module(Submodule<Q>(s2.source, expected)));
  EXPECT_EQ(s2.columns.size(), 2u);
  for (const auto& c : s2.columns) EXPECT_TRUE(apply_column(sp, s2.source, c, gens).is_zero());
  // Hilbert function of the syzygy module from 0 -> Syz -> A(-2)^3 -> I -> 0
  Submodule<Q> syz(s2.source, s2.columns);
  for (std::int64_t d = 0; d <= 8; ++d) {
    std::int64_t hf_i = d < 2 ? 0 : d + 1;  // every monomial of degree >= 2
    EXPECT_EQ(hilbert_value(syz, d), 3 * detail::monomial_count(2, d - 2) - hf_i) << d;
  }
  EXPECT_TRUE(syzygies(sp, els(sp, "x^2+y^2")).columns.empty());
}

TEST(Syzygies, ModuleTuplesAndZeros) {
  auto sp = space(2, {0, 1});
  auto gens = els(sp, "x*e1+e2, y*e1, x*y*e2");
  auto syz = syzygies(sp, gens);
  for (const auto& c : syz.columns) EXPECT_TRUE(apply_column(sp, syz.source, c, gens).is_zero());
  // a zero entry in the tuple is a free syzygy
  std::vector<ModuleElement<Q>> with_zero{el(sp, "x*e1"), sp.zero()};
  FreeModuleDescriptor d = FreeModuleDescriptor::with_shifts({1, 4});
  auto z = syzygies(sp, with_zero, d);
  ASSERT_EQ(z.columns.size(), 1u);
  EXPECT_EQ(str(z.source, z.columns[0]), "e2");
}

TEST(Saturation, Examples) {
  auto sp = space(2);
  BigradedContext<Q> ctx(sp, WeightData::zero(2, 1));
  io::Naming nm{{"x", "y", "t"}};
  auto fmt = [&](const std::vector<ModuleElement<Q>>& v) {
    std::vector<std::string> o;
    for (const auto& f : v) o.push_back(io::format_element(ctx.tilde(), nm, f));
    return o;
  };
  EXPECT_EQ(fmt(saturate_t(ctx.tilde(), 2, io::read_elements(ctx.tilde(), nm, "t*x"))), std::vector<std::string>{"x"});
  EXPECT_EQ(fmt(saturate_t(ctx.tilde(), 2, io::read_elements(ctx.tilde(), nm, "x"))), std::vector<std::string>{"x"});
  BigradedContext<Q> c2(sp, WeightData({1, 0}, {0}));
  auto v = saturate_t(c2.tilde(), 2, io::read_elements(c2.tilde(), nm, "t*x+t^2*y"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(io::format_element(c2.tilde(), nm, v[0]), "x+y*t");
}

TEST(Buchberger, PermutationInvarianceAndSelfCheck) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto sp = trial % 3 == 2 ? space(3, {0, 1}) : space(3);
    auto gens = random_homogeneous(rng, sp, 1 + rng() % 4, 3);
    auto gb = buchberger(sp, gens);
    EXPECT_TRUE(all_spairs_reduce_to_zero(sp, gb));
    auto perm = gens;
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(buchberger(sp, perm), gb);
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.lead_monomial());
    for (std::int64_t d = 0; d <= 5; ++d) EXPECT_EQ(macaulay_dim(sp, gens, d), monomial_span_dim(sp, lms, d));
    // membership of random combinations, non-membership of normal forms
    Submodule<Q> M(sp, gens);
    auto extra = random_homogeneous(rng, sp, 2, 3);
    for (const auto& h : extra) {
      auto comb = sp.zero();
      for (const auto& g : gens) {
        std::int64_t e = sp.std_degree(h) + 1 - sp.std_degree(g);
        if (e < 0) continue;
        auto mons = detail::monomials_of_degree(3, e);
        comb = sp.axpy(comb, Q{}.from_int(1 + rng() % 3), mons[rng() % mons.size()], g);
        break;
      }
      if (!comb.is_zero()) { EXPECT_TRUE(M.contains(comb)); }
      auto nf = normal_form(sp, h, gb);
      if (!nf.is_zero()) { EXPECT_FALSE(M.contains(nf)); }
    }
  }
}

TEST(Buchberger, PrimeFieldAgreesWithMacaulayCount) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto sp = space<PrimeField>(3, {0}, PrimeField(101));
    auto gens = random_homogeneous(rng, sp, 1 + rng() % 4, 3);
    auto gb = buchberger(sp, gens);
    EXPECT_TRUE(all_spairs_reduce_to_zero(sp, gb));
    std::vector<Monomial> lms;
    for (const auto& g : gb) lms.push_back(g.lead_monomial());
    for (std::int64_t d = 0; d <= 5; ++d) EXPECT_EQ(macaulay_dim(sp, gens, d), monomial_span_dim(sp, lms, d));
  }
}

TEST(Saturation, IdempotentAndColonStable) {
  std::mt19937_64 rng(29);
  io::Naming nm{{"x", "y", "z", "t"}};
  for (int trial = 0; trial < 20; ++trial) {
    auto base = space(3);
    WeightData w({static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3),
                  static_cast<std::int64_t>(rng() % 3)},
                 {0});
    BigradedContext<Q> ctx(base, w);
    std::vector<ModuleElement<Q>> gens;
    for (const auto& f : random_homogeneous(rng, base, 1 + rng() % 3, 3)) gens.push_back(ctx.homogenize(f));
    auto s1 = saturate_t(ctx.tilde(), 3, gens);
    EXPECT_EQ(saturate_t(ctx.tilde(), 3, s1), s1);
    EXPECT_TRUE(t_regular_on_cokernel(ctx.tilde(), 3, s1));
    for (const auto& g : gens) EXPECT_TRUE(is_member(ctx.tilde(), g, s1));
  }
}
