#include "qcx/errors.hpp"
#include "qcx/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcx;

namespace {

std::vector<Elem> digits(std::initializer_list<int> ds) {
  std::vector<Elem> v;
  for (int d : ds) v.push_back(Elem{static_cast<std::uint8_t>(d)});
  return v;
}

Poly P(const FieldPtr& F, std::initializer_list<int> ds) { return Poly(F, digits(ds)); }

// Naive polynomial product with no reduction; used as an oracle against
// mul_mod by folding exponents by hand.
std::vector<Elem> naive_cyclic(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b, std::size_t n) {
  std::vector<Elem> full(2 * n, kZero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) full[i + j] = F.add(full[i + j], F.mul(a[i], b[j]));
  std::vector<Elem> out(n, kZero);
  for (std::size_t i = 0; i < full.size(); ++i) out[i % n] = F.add(out[i % n], full[i]);
  return out;
}

bool associates(const Poly& a, const Poly& b) { return a.monic() == b.monic(); }

RingPoly random_ring(const FieldPtr& F, std::size_t n, std::mt19937_64& rng) {
  std::vector<Elem> c(n);
  for (auto& e : c) e = Elem{static_cast<std::uint8_t>(rng() % F->order())};
  return RingPoly(F, n, c);
}

}  // namespace

TEST(Compact, TableExamples) {
  auto F4 = field_make(2);
  EXPECT_EQ(parse_compact("101^3", F4, 7), RingPoly(F4, 7, digits({1, 0, 1, 1, 1})));
  EXPECT_EQ(parse_compact("(13)^23^21", F4, 7), RingPoly(F4, 7, digits({1, 3, 1, 3, 3, 3, 1})));
  EXPECT_EQ(parse_compact("1^30^21^3", F4, 15), RingPoly(F4, 15, digits({1, 1, 1, 0, 0, 1, 1, 1})));
  EXPECT_EQ(expand_compact("1^{12}212", F4).size(), 15u);
  auto F9 = field_make(3);
  // 1 + xi^4 x^2 + x^3 + x^4
  EXPECT_EQ(parse_compact("1051^2", F9, 11), RingPoly(F9, 11, digits({1, 0, 5, 1, 1})));
}

TEST(Compact, Errors) {
  auto F4 = field_make(2);
  EXPECT_THROW(parse_compact("104", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("(13", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("13)", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("1^", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("1^0", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("1^{}", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("()", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("1^8", F4, 7), SpecError);
  EXPECT_THROW(parse_compact("1 2", F4, 7), SpecError);
}

TEST(Compact, WideFieldTokens) {
  auto F81 = field_make(9);
  auto g = parse_compact("z^48, z^44, z^10, z^36, z^52, z^58, z^44, 1", F81, 10);
  EXPECT_EQ(g[0], F81->from_log(48));
  EXPECT_EQ(g[7], kOne);
  EXPECT_EQ(g.degree(), 7);
  EXPECT_EQ(parse_compact("0,1,80", F81, 3)[2], Elem{80});
  EXPECT_THROW(parse_compact("81", F81, 3), SpecError);
  EXPECT_THROW(parse_compact("1,,2", F81, 3), SpecError);
  EXPECT_THROW(parse_compact("z^x", F81, 3), SpecError);
}

TEST(Compact, RoundTrip) {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 9u}) {
    auto F = field_make(q);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      std::vector<Elem> c(n);
      // long runs exercise the braced form
      for (auto& e : c) e = Elem{static_cast<std::uint8_t>(rng() % 3 == 0 ? rng() % F->order() : 1)};
      RingPoly p(F, n, c);
      if (p.is_zero()) continue;
      EXPECT_EQ(parse_compact(render_compact(p), F, n), p) << render_compact(p);
    }
  }
  auto F4 = field_make(2);
  EXPECT_EQ(render_compact(RingPoly(F4, 20, digits({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2}))), "1^{12}2");
}

TEST(Poly, GcdQuotientDivides) {
  auto F9 = field_make(3);
  const Elem m1 = F9->neg(kOne);
  const Poly x2m1(F9, {m1, kZero, kOne});
  const Poly xm1(F9, {m1, kOne});
  EXPECT_EQ(gcd(x2m1, xm1), xm1);
  EXPECT_TRUE(divides(xm1, x2m1));
  EXPECT_FALSE(divides(x2m1, xm1));
  EXPECT_THROW(quotient(xm1, x2m1), PreconditionError);

  auto F4 = field_make(2);
  EXPECT_EQ(quotient(Poly::xn_minus_1(F4, 7), P(F4, {1, 1})), P(F4, {1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(P(F4, {1, 1, 1, 1, 1, 1, 1}).to_string(), "x^6+x^5+x^4+x^3+x^2+x+1");
  EXPECT_EQ(P(F4, {0, 3, 2}).to_string(), "2x^2+3x");
}

TEST(RingPoly, MulMod) {
  auto F4 = field_make(2);
  const auto x6 = RingPoly::from_poly(Poly::monomial(F4, 6), 7);
  const auto x2 = RingPoly::from_poly(Poly::monomial(F4, 2), 7);
  EXPECT_EQ(mul_mod(x6, x2), RingPoly::from_poly(Poly::monomial(F4, 1), 7));

  std::mt19937_64 rng(11);
  for (unsigned q : {2u, 3u, 9u}) {
    auto F = field_make(q);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng() % 20;
      auto a = random_ring(F, n, rng), b = random_ring(F, n, rng);
      EXPECT_EQ(mul_mod(a, b).coeffs(), naive_cyclic(*F, a.coeffs(), b.coeffs(), n));
      EXPECT_EQ(mul_mod(a, b), RingPoly::from_poly(a.to_poly() * b.to_poly(), n));
      EXPECT_TRUE((a + (-a)).is_zero());
      EXPECT_EQ(a.shifted(3), mul_mod(a, RingPoly::from_poly(Poly::monomial(F, 3), n)));
    }
  }
}

TEST(RingPoly, BarAndFrob) {
  auto F4 = field_make(2);
  const RingPoly f(F4, 7, digits({0, 3, 2, 3, 2, 1}));
  EXPECT_EQ(bar(f), RingPoly(F4, 7, digits({0, 0, 1, 2, 3, 2, 3})));
  // printed f-bar^q for the n = 7 example
  EXPECT_EQ(frob_poly(bar(f)), RingPoly(F4, 7, digits({0, 0, 1, 3, 2, 3, 2})));
  EXPECT_TRUE(bar(RingPoly(F4, 7)).is_zero());

  std::mt19937_64 rng(3);
  for (unsigned q : {2u, 3u, 9u}) {
    auto F = field_make(q);
    for (int t = 0; t < 30; ++t) {
      auto a = random_ring(F, 1 + rng() % 15, rng);
      EXPECT_EQ(bar(bar(a)), a);
      EXPECT_EQ(frob_poly(frob_poly(a)), a);
      EXPECT_EQ(bar(frob_poly(a)), frob_poly(bar(a)));
    }
    const RingPoly prime(F, 4, {kOne, F->from_int(2), kZero, kOne});
    EXPECT_EQ(frob_poly(prime), prime);
  }
}

TEST(DualGen, WorkedExamples) {
  auto F4 = field_make(2);
  EXPECT_EQ(dual_gen(P(F4, {1, 1}), 7), P(F4, {1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(dual_gen(P(F4, {1, 0, 1}), 7), PreconditionError);

  auto F9 = field_make(3);
  const Poly g2 = parse_compact("5310571", F9, 10).to_poly();
  EXPECT_EQ(dual_gen(g2, 10).degree(), 4);

  auto F81 = field_make(9);
  const Poly g6 = parse_compact("z^48,z^44,z^10,z^36,z^52,z^58,z^44,1", F81, 10).to_poly();
  const Poly expect(F81, {kOne, F81->from_log(36), F81->from_log(12), F81->from_log(8)});
  EXPECT_TRUE(associates(dual_gen(g6, 10), expect));
}

TEST(Factor, SmallCases) {
  auto F4 = field_make(2);
  auto f3 = factor_xn_minus_1(F4, 3);
  ASSERT_EQ(f3.size(), 3u);
  std::vector<Poly> want{P(F4, {1, 1}), P(F4, {2, 1}), P(F4, {3, 1})};
  for (const auto& w : want) {
    bool found = false;
    for (const auto& f : f3) found = found || f.poly == w;
    EXPECT_TRUE(found) << w.to_string();
  }

  std::vector<int> degs;
  for (const auto& f : factor_xn_minus_1(F4, 7)) degs.push_back(f.poly.degree());
  EXPECT_EQ(degs, (std::vector<int>{1, 3, 3}));
  EXPECT_EQ(cyclotomic_cosets(4, 7), (std::vector<std::vector<std::size_t>>{{0}, {1, 2, 4}, {3, 5, 6}}));

  auto F9 = field_make(3);
  auto f10 = factor_xn_minus_1(F9, 10);
  EXPECT_EQ(multiplicative_order(9, 10), 2u);
  EXPECT_EQ(f10.size(), 6u);  // cosets of 9 mod 10: {0},{5},{1,9},{2,8},{3,7},{4,6}
  EXPECT_THROW(factor_xn_minus_1(F4, 6), PreconditionError);
}

TEST(Factor, ProductAndIrreducibility) {
  const std::vector<std::pair<unsigned, std::size_t>> cases{
      {2, 1}, {2, 7}, {2, 15}, {2, 17}, {2, 23}, {2, 31}, {2, 51}, {3, 10}, {3, 11}, {3, 17}, {3, 23}, {9, 10}, {9, 13}};
  for (auto [q, n] : cases) {
    auto F = field_make(q);
    auto fs = factor_xn_minus_1(F, n);
    Poly prod(F, {kOne});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      EXPECT_EQ(fs[i].poly.lead(), kOne);
      EXPECT_EQ(static_cast<std::size_t>(fs[i].poly.degree()), fs[i].coset.size());
      EXPECT_TRUE(is_irreducible(F, fs[i].poly.coeffs()));
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(gcd(fs[i].poly, fs[j].poly), Poly(F, {kOne}));
      prod = prod * fs[i].poly;
    }
    EXPECT_EQ(prod, Poly::xn_minus_1(F, n)) << "q=" << q << " n=" << n;
  }
}

TEST(DualGen, InvolutionOnDivisors) {
  // every divisor of x^n - 1 built from subsets of the factorization
  for (auto [q, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 7}, {2, 15}, {3, 10}, {9, 10}}) {
    auto F = field_make(q);
    auto fs = factor_xn_minus_1(F, n);
    ASSERT_LE(fs.size(), 12u);
    for (unsigned mask = 0; mask < (1u << fs.size()); ++mask) {
      Poly g(F, {kOne});
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (mask >> i & 1u) g = g * fs[i].poly;
      const Poly d = dual_gen(g, n);
      EXPECT_TRUE(divides(d, Poly::xn_minus_1(F, n)));
      EXPECT_EQ(d.degree(), static_cast<int>(n) - g.degree());
      EXPECT_TRUE(associates(dual_gen(d, n), g));
    }
  }
}
