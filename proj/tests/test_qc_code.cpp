#include "qcx/errors.hpp"
#include "qcx/qc_code.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace qcx;
using namespace qcx::fixtures;

namespace {

// Every codeword of the row space by brute force.
std::vector<std::vector<Elem>> span_of(const Mat& m) {
  const Field& F = *m.field();
  std::vector<std::vector<Elem>> out{std::vector<Elem>(m.cols(), kZero)};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::vector<Elem>> next;
    for (const auto& v : out)
      for (unsigned d = 0; d < F.order(); ++d) {
        auto w = v;
        for (std::size_t c = 0; c < m.cols(); ++c) w[c] = F.add(w[c], F.mul(Elem{static_cast<std::uint8_t>(d)}, m.at(r, c)));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(QcCode, Example4Structure) {
  const QcCode c = example4();
  EXPECT_EQ(c.k(), 6u);
  EXPECT_EQ(c.length(), 14u);
  EXPECT_TRUE(c.f_coprime());
  EXPECT_EQ(c.H1().rows(), 1u);
  EXPECT_EQ(c.H2().row_vec(0), digits({0, 0, 1, 3, 2, 3, 2}));
  EXPECT_EQ(c.H2().row_vec(1), digits({2, 0, 0, 1, 3, 2, 3}));
  const auto so = c.self_orthogonality();
  EXPECT_FALSE(so.by_gram);
  EXPECT_FALSE(so.by_lemma2);
  EXPECT_EQ(rank(c.H() * c.H().conj_transpose()), 8u);
  EXPECT_EQ(c.gram_rank(), 6u);
  EXPECT_EQ(hull_dim(c.G()), 0u);
  EXPECT_EQ(hull_dim_by_intersection(c.G()), 0u);
  EXPECT_TRUE(c.psi_closed());

  const auto t7 = theorem7_conditions(c);
  EXPECT_TRUE(t7.h1h1_nonsingular);
  EXPECT_TRUE(t7.one_not_eigenvalue);
  ASSERT_TRUE(t7.char_poly_P.has_value());
  EXPECT_EQ(*t7.char_poly_P, Poly(c.field(), digits({0, 1, 0, 0, 1, 0, 0, 1})));
}

TEST(QcCode, Example1ExtendOne) {
  const QcCode c = example1();
  EXPECT_EQ(c.k(), 6u);
  EXPECT_EQ(c.G1().row_vec(0), digits({1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(c.G2().row_vec(0), digits({1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 2, 0, 0}));
  const auto so = c.self_orthogonality();
  EXPECT_TRUE(so.by_gram);
  EXPECT_TRUE(so.by_lemma2);
  EXPECT_EQ(hull_dim(c.G()), 6u);

  const auto x1 = digits({1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2});
  EXPECT_EQ(self_product(*c.field(), x1), kOne);
  const ExtendedCode e = extend_one(c, x1);
  EXPECT_EQ(e.applied, Proposition::SelfOrthogonal);
  EXPECT_EQ(e.length(), 31u);
  EXPECT_EQ(e.k(), 7u);
  EXPECT_EQ(e.gram_rank, 0u);
  EXPECT_EQ(e.G.row_vec(3), digits({0, 0, 0, 1, 2, 2, 0, 3, 1, 0, 1, 3, 1, 0, 0, 2, 0, 0,
                                    1, 0, 3, 2, 3, 3, 3, 2, 3, 2, 1, 3, 0}));
  EXPECT_EQ(e.G.row_vec(6), digits({1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 0, 0, 0,
                                    0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
}

TEST(QcCode, Example2ExtendTwo) {
  const QcCode c = example2();
  EXPECT_EQ(c.k(), 4u);
  EXPECT_EQ(dual_gen(c.g(), 10).degree(), 4);
  EXPECT_TRUE(c.is_hermitian_self_orthogonal());
  const auto x1 = digits({1, 1, 8, 2, 1, 2, 2, 6, 0, 1});
  const auto x2 = digits({1, 7, 3, 8, 5, 7, 7, 0, 3, 2});
  const ExtendedCode e = extend_two(c, x1, x2);
  EXPECT_EQ(e.applied, Proposition::SelfOrthogonal);
  EXPECT_EQ(e.length(), 22u);
  EXPECT_EQ(e.k(), 6u);
  EXPECT_EQ(e.gram_rank, 0u);
  EXPECT_EQ(e.G.row_vec(0), digits({5, 3, 1, 0, 5, 7, 1, 0, 0, 0, 5, 8, 2, 7, 6, 4, 5, 2, 5, 1, 0, 0}));
  EXPECT_EQ(e.G.row_vec(3), digits({0, 0, 0, 5, 3, 1, 0, 5, 7, 1, 2, 5, 1, 5, 8, 2, 7, 6, 4, 5, 0, 0}));
  EXPECT_EQ(e.G.row_vec(5), digits({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 7, 3, 8, 5, 7, 7, 0, 3, 2, 0, 1}));
}

TEST(QcCode, Example6EntanglementExtension) {
  const QcCode c = example6();
  const FieldPtr& F = c.field();
  EXPECT_EQ(c.k(), 3u);
  EXPECT_TRUE(c.f_coprime());
  EXPECT_EQ(c.fbar_q(), RingPoly(F, 10, zeta(F, {0, -1, -1, -1, -1, -1, -1, -1, 46, 18})));
  EXPECT_EQ(c.H2().row_vec(0), zeta(F, {40, -1, -1, -1, -1, -1, -1, -1, 6, 58}));
  EXPECT_EQ(c.H1().row_vec(0), zeta(F, {0, 36, 12, 8, -1, -1, -1, -1, -1, -1}));

  const auto t7 = theorem7_conditions(c);
  EXPECT_TRUE(t7.holds());
  EXPECT_EQ(t7.P->row_vec(0), zeta(F, {60, 19, 0, 28, 41, -1, 49, 12, 0, 11}));
  EXPECT_EQ(t7.P->row_vec(3), zeta(F, {12, 0, 11, 60, 19, 0, 28, 41, -1, 49}));
  EXPECT_EQ(c.gram_rank(), c.k());

  const auto x1 = zeta(F, {44, 71, 56, 22, 52, 73, 33, 58, 58, 33});
  const auto x2 = zeta(F, {18, 41, 40, 10, 17, 31, 71, 61, 66, 75});
  EXPECT_EQ(self_product(*F, x1), F->from_log(60));
  EXPECT_EQ(self_product(*F, x2), F->from_log(50));
  const ExtendedCode e = extend_two(c, x1, x2);
  EXPECT_EQ(e.applied, Proposition::Entanglement);
  EXPECT_EQ(e.length(), 22u);
  EXPECT_EQ(e.k(), 5u);
  EXPECT_EQ(e.gram_rank, 5u);
  EXPECT_THROW(extend_two(c, x1, x2, kOne, kOne, Proposition::SelfOrthogonal), PreconditionError);
}

TEST(QcCode, DegenerateCases) {
  auto F = field_make(2);
  // f = 0
  const QcCode z = QcCode::build(RingPoly(F, 7), Poly(F, digits({1, 1})));
  EXPECT_FALSE(z.f_coprime());
  EXPECT_TRUE(z.G2().is_zero());
  EXPECT_THROW(theorem7_conditions(z), PreconditionError);
  // g = x^n - 1: the zero code
  const QcCode zero = QcCode::build(RingPoly(F, 7, {kOne}), Poly::xn_minus_1(F, 7));
  EXPECT_EQ(zero.k(), 0u);
  EXPECT_TRUE(zero.self_orthogonality().by_gram);
  EXPECT_TRUE(zero.self_orthogonality().by_lemma2);
  EXPECT_EQ(zero.H1(), Mat::identity(F, 7));
  EXPECT_THROW(QcCode::build(RingPoly(F, 7, {kOne}), Poly(F, digits({1, 0, 1}))), PreconditionError);
}

TEST(QcCode, ExtensionErrors) {
  const QcCode c1 = example1();
  auto x1 = digits({1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2, 1, 3, 2});
  auto bad = x1;
  bad[0] = Elem{2};
  try {
    extend_one(c1, bad);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "not-in-dual");
  }
  try {
    extend_one(c1, x1, kOne, Proposition::Entanglement);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "wrong-field-size");
  }
  // a dual codeword with <x,x> = 0
  const Mat basis = c1.dual_basis(1);
  std::vector<Elem> y(15, kZero);
  for (const auto& cand : {basis.row_vec(0), basis.row_vec(1)})
    if (self_product(*c1.field(), cand).is_zero()) y = cand;
  if (!std::all_of(y.begin(), y.end(), [](Elem e) { return e.is_zero(); })) {
    try {
      extend_one(c1, y);
      FAIL();
    } catch (const PreconditionError& e) {
      EXPECT_EQ(e.code(), "wrong-self-product");
    }
  }
}

TEST(ExtensionSearch, FindsQualifyingDualVectors) {
  for (const QcCode& c : {example1(), example2()}) {
    for (int side : {1, 2}) {
      const auto x = find_extension_vector(c, side, ExtensionRule::equal_p_minus_1());
      EXPECT_TRUE(rule_accepts(*c.field(), ExtensionRule::equal_p_minus_1(), x));
      EXPECT_EQ(self_product(*c.field(), x), c.field()->from_int(c.field()->p() - 1));
      const Mat& gi = side == 1 ? c.G1() : c.G2();
      EXPECT_TRUE((gi * Mat::row_vector(c.field(), x).conj_transpose()).is_zero());
    }
  }
  const QcCode c2 = example2();
  const auto e = extend_two(c2, find_extension_vector(c2, 1, ExtensionRule::equal_p_minus_1()),
                            find_extension_vector(c2, 2, ExtensionRule::equal_p_minus_1()));
  EXPECT_EQ(e.gram_rank, 0u);

  const QcCode c6 = example6();
  const auto rule = ExtensionRule::not_equal(kOne);
  const auto x1 = find_extension_vector(c6, 1, rule);
  const auto x2 = find_extension_vector(c6, 2, rule);
  EXPECT_EQ(extend_two(c6, x1, x2).gram_rank, 5u);
}

TEST(ExtensionSearch, FirstInLexicographicOrder) {
  // brute-force oracle over the whole dual (dimension 6 over GF(9))
  const QcCode c = example2();
  for (int side : {1, 2}) {
    const Mat basis = c.dual_basis(side);
    ASSERT_LE(basis.rows(), 6u);
    const auto all = span_of(basis);  // lexicographic in message digits, digit 0 most significant
    std::vector<Elem> expect;
    for (std::size_t i = 1; i < all.size(); ++i)
      if (rule_accepts(*c.field(), ExtensionRule::equal_p_minus_1(), all[i])) {
        expect = all[i];
        break;
      }
    EXPECT_EQ(find_extension_vector(c, side, ExtensionRule::equal_p_minus_1()), expect);
  }
}

TEST(ExtensionSearch, CapAndAbsence) {
  const QcCode c = example1();  // dual of C1 has dimension 9
  ExtensionSearchLimits tiny;
  tiny.max_dim_q4 = 0;
  EXPECT_THROW(find_extension_vector(c, 1, ExtensionRule::equal_p_minus_1(), tiny), BudgetExceeded);

  // [1 1] over GF(4): C1 = <x+1> in R_2, dual = <x+1>, self products are 0
  auto F = field_make(2);
  const QcCode small = QcCode::build(RingPoly(F, 3, {kOne}), Poly(F, digits({1, 1})));
  const Mat b = small.dual_basis(1);
  bool any = false;
  for (const auto& v : span_of(b))
    any = any || rule_accepts(*F, ExtensionRule::equal_p_minus_1(), v);
  if (!any) EXPECT_THROW(find_extension_vector(small, 1, ExtensionRule::equal_p_minus_1()), PreconditionError);
}

TEST(QcCode, InvariantsOnRandomCodes) {
  std::mt19937_64 rng(77);
  for (auto [q, n] : std::vector<std::pair<unsigned, std::size_t>>{{2, 7}, {2, 9}, {2, 15}, {3, 8}, {3, 10}, {9, 10}, {9, 5}}) {
    auto F = field_make(q);
    auto fs = factor_xn_minus_1(F, n);
    for (int t = 0; t < 15; ++t) {
      Poly g(F, {kOne});
      for (const auto& fac : fs)
        if (rng() % 2) g = g * fac.poly;
      std::vector<Elem> fc(n);
      for (auto& e : fc) e = Elem{static_cast<std::uint8_t>(rng() % F->order())};
      const QcCode c = QcCode::build(RingPoly(F, n, fc), g);
      EXPECT_EQ(rank(c.G()), n - static_cast<std::size_t>(g.degree()));
      EXPECT_TRUE(c.psi_closed());
      EXPECT_TRUE((c.G() * c.H().conj_transpose()).is_zero());
      EXPECT_EQ(rank(c.H()), n + static_cast<std::size_t>(g.degree()));
      EXPECT_EQ(hull_dim(c.G()), hull_dim_by_intersection(c.G()));
      const auto so = c.self_orthogonality();
      if (so.by_lemma2) EXPECT_TRUE(so.by_gram);
      if (c.f_coprime()) {
        EXPECT_EQ(rank(vstack(c.G1(), c.G2())), c.k());
        for (int side : {1, 2}) {
          const Mat d = c.dual_basis(side);
          const Mat& gi = side == 1 ? c.G1() : c.G2();
          EXPECT_EQ(d.rows() + rank(gi), n);
          if (d.rows()) {
            EXPECT_TRUE((gi * d.conj_transpose()).is_zero());
          }
        }
        // rank(H H^dag) = rank(G G^dag) + 2n - 2k
        EXPECT_EQ(rank(c.H() * c.H().conj_transpose()), c.gram_rank() + 2 * n - 2 * c.k());
      }
    }
  }
}
