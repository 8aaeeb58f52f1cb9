#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cregro;
using namespace testing_support;

namespace {

io::Naming with_t(std::size_t n) {
  auto nm = xyz(n);
  nm.vars.push_back("t");
  return nm;
}

}  // namespace

TEST(Field, RationalsStayReduced) {
  Rationals K;
  auto a = K.from_fraction(4, 6);
  EXPECT_EQ(K.to_string(a), "2/3");
  EXPECT_EQ(K.to_string(K.from_fraction(3, -6)), "-1/2");
  EXPECT_THROW(K.from_fraction(1, 0), std::domain_error);
}

TEST(Field, PrimeFieldRejectsComposite) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2147483647));
  PrimeField F(7);
  EXPECT_EQ(F.to_string(F.from_int(6)), "-1");
  EXPECT_EQ(F.mul(F.inv(3), 3), 1u);
  EXPECT_EQ(F.from_fraction(1, 2), 4u);
}

TEST(Weights, WeightOf) {
  auto sp = space(2);
  WeightData w({1, 2}, {0});
  EXPECT_EQ(weight_of(el(sp, "x*y^2").lead_monomial(), w), 5);
  EXPECT_EQ(weight_of(el(sp, "x^3*y").lead_monomial(), WeightData::zero(2, 1)), 0);
  auto sp2 = space(2, {0, 0});
  EXPECT_EQ(weight_of(el(sp2, "y*e2").lead_monomial(), WeightData({1, 1}, {0, 2})), 3);
}

TEST(Weights, InitialForm) {
  auto sp = space(2, {0});
  // x^2 + x*y + y is not homogeneous but initial forms do not care
  auto f = el(sp, "x^2+x*y+y");
  EXPECT_EQ(str(sp, initial_form(f, WeightData({1, 1}, {0}))), "x^2+x*y");
  auto g = el(sp, "x^2-3*x*y+y^2");
  EXPECT_EQ(initial_form(g, WeightData::zero(2, 1)), g);
  auto sp2 = space(2, {0, 1});
  auto h = el(sp2, "x^2*e1+y*e2");
  EXPECT_EQ(str(sp2, initial_form(h, WeightData({1, 1}, {0, 2}))), "y*e2");
  EXPECT_THROW(initial_form(sp.zero(), WeightData({1, 1}, {0})), std::domain_error);
  try {
    initial_form(sp.zero(), WeightData({1, 1}, {0}));
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "initial form of zero undefined");
  }
}

TEST(Weights, Homogenize) {
  auto sp = space(2);
  BigradedContext<Q> c11(sp, WeightData({1, 1}, {0}));
  EXPECT_THROW(c11.homogenize(el(sp, "x^2+y")), std::domain_error);
  EXPECT_THROW(c11.homogenize(sp.zero()), std::domain_error);
  BigradedContext<Q> c21(sp, WeightData({2, 1}, {0}));
  auto ft = c21.homogenize(el(sp, "x+y"));
  EXPECT_EQ(io::format_element(c21.tilde(), with_t(2), ft), "x+y*t");
  auto m = el(sp, "3*x^2*y");
  EXPECT_EQ(c21.evaluate_t(c21.homogenize(m), Q{}.one()), m);
  EXPECT_EQ(t_valuation(c21.homogenize(m), 2), 0u);
}

TEST(Weights, EvaluateT) {
  auto sp = space(2);
  BigradedContext<Q> c(sp, WeightData({2, 1}, {0}));
  auto g = io::read_element(c.tilde(), with_t(2), "x+t*y");
  EXPECT_EQ(str(sp, c.evaluate_t(g, Q{}.one())), "x+y");
  EXPECT_EQ(str(sp, c.evaluate_t(g, Q{}.zero())), "x");
  auto h = io::read_element(c.tilde(), with_t(2), "t*x^3-t*y^3");
  EXPECT_TRUE(c.evaluate_t(h, Q{}.zero()).is_zero());
}

TEST(Element, Arithmetic) {
  auto sp = space(2);
  EXPECT_EQ(str(sp, sp.add(el(sp, "x+y"), el(sp, "x-y"))), "2*x");
  auto g2 = space<PrimeField>(2, {0}, PrimeField(2));
  EXPECT_TRUE(g2.add(el(g2, "x+y"), el(g2, "x+y")).is_zero());
  Monomial x;
  x.exp[0] = 1;
  EXPECT_EQ(str(sp, sp.mul_term(el(sp, "y"), Q{}.one(), x)), "x*y");
  auto sp2 = space(2, {0, 0});
  EXPECT_THROW(sp.add(el(sp, "x"), el(sp2, "x*e1")), std::invalid_argument);
}

TEST(Element, ExponentOverflowIsChecked) {
  auto sp = space(1);
  auto big = el(sp, "x^40000");
  EXPECT_THROW(sp.mul_poly(big.terms(), big), std::overflow_error);
}

TEST(Element, CanonicalFormAndRoundTrip) {
  auto sp = space(3, {0, 1});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Term<Q>> terms;
    int k = 1 + rng() % 5;
    for (int i = 0; i < k; ++i) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.exp[v] = rng() % 3;
      m.comp = rng() % 2;
      terms.push_back({Q{}.from_fraction(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3), m});
    }
    auto f = sp.from_terms(terms);
    std::string s = str(sp, f);
    EXPECT_EQ(el(sp, s), f) << s;
    // permuted input gives the same canonical element
    std::shuffle(terms.begin(), terms.end(), rng);
    EXPECT_EQ(sp.from_terms(terms), f);
  }
}

TEST(Element, HomogenizationProperties) {
  std::mt19937_64 rng(5);
  auto sp = space(3, {0, 1});
  for (int trial = 0; trial < 200; ++trial) {
    WeightData w({static_cast<std::int64_t>(rng() % 4), static_cast<std::int64_t>(rng() % 4),
                  static_cast<std::int64_t>(rng() % 4)},
                 {static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)});
    BigradedContext<Q> ctx(sp, w);
    std::vector<Term<Q>> terms;
    std::int64_t deg = 2 + rng() % 2;
    for (int i = 0; i < 4; ++i) {
      Monomial m;
      m.comp = rng() % 2;
      std::int64_t left = deg - (m.comp == 1 ? 1 : 0);
      m.exp[0] = rng() % (left + 1);
      left -= m.exp[0];
      m.exp[1] = rng() % (left + 1);
      m.exp[2] = left - m.exp[1];
      terms.push_back({Q{}.from_int(1 + rng() % 3), m});
    }
    auto f = sp.from_terms(terms);
    if (f.is_zero()) continue;
    auto ft = ctx.homogenize(f);
    EXPECT_EQ(ctx.evaluate_t(ft, Q{}.one()), f);
    EXPECT_EQ(ctx.evaluate_t(ft, Q{}.zero()), initial_form(f, w));
    EXPECT_EQ(initial_form(initial_form(f, w), w), initial_form(f, w));
    EXPECT_EQ(t_valuation(ft, ctx.t_index()), 0u);
    // weight is additive
    Monomial u;
    u.exp[1] = 2;
    u.exp[2] = 1;
    auto m = f.lead_monomial();
    EXPECT_EQ(weight_of(multiply(u, m), w), w.omega[1] * 2 + w.omega[2] + weight_of(m, w));
  }
}

TEST(MonomialOrder, Axioms) {
  std::mt19937_64 rng(3);
  std::vector<MonomialOrder> orders;
  std::vector<std::int64_t> gr{1, 2, 1};
  for (auto ro : {RingOrder::Lex, RingOrder::DegRevLex})
    for (auto mo : {ModuleOrder::PositionOverTerm, ModuleOrder::TermOverPosition})
      orders.emplace_back(ro, mo, gr, std::vector<std::int64_t>{0, 2});
  orders.push_back(orders[3].with_leading_weight({1, 0, 3}, {0, 1}));
  auto rnd = [&] {
    Monomial m;
    for (int v = 0; v < 3; ++v) m.exp[v] = rng() % 4;
    m.comp = rng() % 2;
    return m;
  };
  for (const auto& o : orders) {
    for (int trial = 0; trial < 2000; ++trial) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ(o.compare(a, b), -o.compare(b, a));
      EXPECT_EQ(o.compare(a, b) == 0, a == b);
      if (o.compare(a, b) > 0 && o.compare(b, c) > 0) { EXPECT_GT(o.compare(a, c), 0); }
      Monomial u = rnd();
      u.comp = 0;
      if (a.comp == b.comp) { EXPECT_EQ(o.compare(a, b), o.compare(multiply(u, a), multiply(u, b))); }
      // well order: a proper multiple is larger
      if (!u.is_one()) { EXPECT_GT(o.compare(multiply(u, a), a), 0); }
    }
  }
}

TEST(Parse, Diagnostics) {
  try {
    io::parse("ring QQ[x,y]\nlet I=[x^2+, y]");
    FAIL();
  } catch (const io::ScriptError& e) {
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_EQ(e.pos().col, 12);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(io::parse("ring QQ[x,e1]"), io::ScriptError);
  EXPECT_THROW(io::parse("ring QQ[x,let]"), io::ScriptError);
  EXPECT_THROW(io::parse("ring QQ[x] $"), io::ScriptError);
  try {
    io::parse("ring GF(4)[x]");
    FAIL();
  } catch (const io::ScriptError& e) {
    EXPECT_EQ(e.message(), "GF argument must be prime");
  }
  EXPECT_NO_THROW(io::parse("ring GF(101)[x]"));
}

TEST(Parse, ScriptRoundTrip) {
  std::string text =
      "ring QQ[x,y] free F=(0) weight omega=1,0 epsilon=0 let I=[x^2+y^2, x*y] inw I\n"
      "# comment\n"
      "let J=[-3/2*x*y^2+x^3, 2*y^3] truncate J 4 syz J -1 check crystallization-weak J --seed 3 check hilbert";
  auto s = io::parse(text);
  ASSERT_EQ(s.statements.size(), 10u);
  auto printed = io::to_text(s);
  auto again = io::parse(printed);
  EXPECT_EQ(io::strip_positions(again), io::strip_positions(s));
  EXPECT_EQ(io::to_text(again), printed);
  const auto& chk = std::get<io::CommandAst>(s.statements[8]);
  EXPECT_EQ(chk.check, "crystallization-weak");
  EXPECT_EQ(chk.args, std::vector<std::string>{"J"});
  EXPECT_EQ(chk.options.at("seed"), 3);
}
