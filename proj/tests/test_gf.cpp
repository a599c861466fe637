#include "qcx/gf.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace qcx;

namespace {

// Independent model of GF(p^D): component vectors reduced modulo the
// defining polynomial, built up by repeated multiplication by t.
struct VecField {
  unsigned p;
  std::vector<unsigned> modulus;  // monic, ascending

  std::vector<unsigned> times_t(const std::vector<unsigned>& v) const {
    const std::size_t D = modulus.size() - 1;
    std::vector<unsigned> r(D, 0);
    const unsigned top = v[D - 1];
    for (std::size_t i = D - 1; i > 0; --i) r[i] = v[i - 1];
    for (std::size_t i = 0; i < D; ++i) r[i] = (r[i] + p * p - top * modulus[i] % p) % p;
    return r;
  }

  // powers[k] = t^k for k = 0..Q-2
  std::vector<std::vector<unsigned>> powers() const {
    const std::size_t D = modulus.size() - 1;
    unsigned Q = 1;
    for (std::size_t i = 0; i < D; ++i) Q *= p;
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(D, 0);
    cur[0] = 1;
    for (unsigned k = 0; k + 1 < Q; ++k) {
      out.push_back(cur);
      cur = times_t(cur);
    }
    return out;
  }
};

std::vector<unsigned> comps(const Field& F, Elem a) {
  auto s = F.components(a);
  return {s.begin(), s.end()};
}

std::vector<unsigned> vec_add(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned p) {
  std::vector<unsigned> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
  return r;
}

bool has_root_mod_p(const std::vector<unsigned>& m, unsigned p) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = (acc * x + m[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

class AllFields : public ::testing::TestWithParam<unsigned> {};

}  // namespace

TEST(FieldMake, ConwayModuli) {
  EXPECT_EQ(field_make(2)->modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(field_make(3)->modulus(), (std::vector<unsigned>{2, 2, 1}));
  EXPECT_EQ(field_make(9)->modulus(), (std::vector<unsigned>{2, 0, 0, 2, 1}));
  for (unsigned q : {2u, 3u, 9u}) EXPECT_FALSE(has_root_mod_p(field_make(q)->modulus(), field_make(q)->p()));
  // x^4+2x^3+2 has no quadratic factor over GF(3)
  const std::vector<unsigned> m = field_make(9)->modulus();
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d) {
          // (x^2+ax+b)(x^2+cx+d)
          const std::vector<unsigned> prod{b * d % 3, (a * d + b * c) % 3, (b + d + a * c) % 3, (a + c) % 3, 1};
          EXPECT_NE(prod, m);
        }
}

TEST(FieldMake, Sizes) {
  EXPECT_EQ(field_make(2)->order(), 4u);
  EXPECT_EQ(field_make(3)->order(), 9u);
  EXPECT_EQ(field_make(9)->order(), 81u);
  EXPECT_EQ(field_make(9)->p(), 3u);
  EXPECT_EQ(field_make(9)->q(), 9u);
  EXPECT_EQ(field_make(2).get(), field_make(2).get());
  EXPECT_THROW(field_make(4), std::invalid_argument);
  EXPECT_THROW(field_make(5), std::invalid_argument);
}

TEST(FieldMake, RejectsBadModulus) {
  EXPECT_THROW(Field(2, {1, 0, 1}), std::invalid_argument);     // (x+1)^2
  EXPECT_THROW(Field(3, {1, 0, 1}), std::invalid_argument);     // irreducible, root not primitive
  EXPECT_THROW(Field(4, {1, 1, 1}), std::invalid_argument);     // 4 not prime
  EXPECT_THROW(Field(2, {1, 1, 0, 1}), std::invalid_argument);  // odd degree
}

TEST(FieldArith, SmallExamples) {
  auto F4 = field_make(2);
  EXPECT_EQ(F4->mul(Elem{2}, Elem{3}), kOne);
  EXPECT_EQ(F4->add(Elem{2}, Elem{3}), kOne);
  EXPECT_EQ(F4->conj(Elem{2}), Elem{3});
  auto F9 = field_make(3);
  for (std::uint8_t d = 0; d < 9; ++d) EXPECT_EQ(F9->add(F9->add(Elem{d}, Elem{d}), Elem{d}), kZero);
  EXPECT_EQ(F9->conj(Elem{2}), Elem{4});
  EXPECT_THROW(F9->inv(kZero), std::domain_error);
  EXPECT_THROW(F4->mul(Elem{4}, kOne), std::invalid_argument);
}

TEST_P(AllFields, MatchesVectorModel) {
  auto F = field_make(GetParam());
  const VecField model{F->p(), F->modulus()};
  const auto pw = model.powers();
  ASSERT_EQ(pw.size(), F->order() - 1);
  for (unsigned k = 0; k < pw.size(); ++k) EXPECT_EQ(comps(*F, F->from_log(k)), pw[k]) << "alpha^" << k;
  for (unsigned a = 0; a < F->order(); ++a)
    for (unsigned b = 0; b < F->order(); ++b) {
      const Elem ea{static_cast<std::uint8_t>(a)}, eb{static_cast<std::uint8_t>(b)};
      EXPECT_EQ(comps(*F, F->add(ea, eb)), vec_add(comps(*F, ea), comps(*F, eb), F->p()));
    }
}

TEST_P(AllFields, GroupAndFrobeniusLaws) {
  auto F = field_make(GetParam());
  const unsigned Q = F->order();
  for (unsigned a = 0; a < Q; ++a) {
    const Elem x{static_cast<std::uint8_t>(a)};
    EXPECT_EQ(F->conj(F->conj(x)), x);
    EXPECT_EQ(F->conj(x), F->pow(x, F->q()));
    if (!x.is_zero()) {
      EXPECT_EQ(F->pow(x, Q - 1), kOne);
      EXPECT_EQ(F->mul(x, F->inv(x)), kOne);
      EXPECT_EQ(F->from_log(F->log(x)), x);
    }
    EXPECT_EQ(F->add(x, F->neg(x)), kZero);
    EXPECT_EQ(F->from_components(F->components(x)), x);
    for (unsigned b = 0; b < Q; ++b) {
      const Elem y{static_cast<std::uint8_t>(b)};
      EXPECT_EQ(F->add(x, y), F->add(y, x));
      EXPECT_EQ(F->mul(x, y), F->mul(y, x));
      EXPECT_EQ(F->conj(F->add(x, y)), F->add(F->conj(x), F->conj(y)));
      EXPECT_EQ(F->conj(F->mul(x, y)), F->mul(F->conj(x), F->conj(y)));
    }
  }
  EXPECT_EQ(F->conj(kZero), kZero);
  EXPECT_EQ(F->conj(kOne), kOne);
  unsigned ord = 1;
  for (Elem g = F->generator(); g != kOne; g = F->mul(g, F->generator())) ++ord;
  EXPECT_EQ(ord, Q - 1);
}

TEST_P(AllFields, Associativity) {
  auto F = field_make(GetParam());
  const unsigned Q = F->order();
  const unsigned step = Q > 9 ? 7 : 1;
  for (unsigned a = 0; a < Q; a += step)
    for (unsigned b = 0; b < Q; b += step)
      for (unsigned c = 0; c < Q; ++c) {
        const Elem x{static_cast<std::uint8_t>(a)}, y{static_cast<std::uint8_t>(b)}, z{static_cast<std::uint8_t>(c)};
        EXPECT_EQ(F->mul(F->mul(x, y), z), F->mul(x, F->mul(y, z)));
        EXPECT_EQ(F->add(F->add(x, y), z), F->add(x, F->add(y, z)));
        EXPECT_EQ(F->mul(x, F->add(y, z)), F->add(F->mul(x, y), F->mul(x, z)));
      }
}

INSTANTIATE_TEST_SUITE_P(Q, AllFields, ::testing::Values(2u, 3u, 9u));

TEST(GF81, MinusOneIsZetaForty) {
  auto F = field_make(9);
  EXPECT_EQ(F->from_int(2), F->from_log(40));
  EXPECT_EQ(F->to_string(F->from_log(40)), "z^40");
  EXPECT_EQ(F->to_string(kOne), "1");
}

TEST(ExtField, DegreeOneIsBase) {
  auto F = field_make(2);
  ExtField E = ext_field_make(F, 1);
  EXPECT_EQ(E.order(), 4);
  EXPECT_TRUE(E.is_base(E.embed(Elem{3})));
}

TEST(ExtField, GF16SplitsX15) {
  auto F = field_make(2);
  ExtField E = ext_field_make(F, 2);
  EXPECT_EQ(E.order(), 16);
  // every nonzero element satisfies a^15 = 1
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      ExtField::Value v{Elem{static_cast<std::uint8_t>(a)}, Elem{static_cast<std::uint8_t>(b)}};
      if (E.is_zero(v)) continue;
      EXPECT_EQ(E.pow(v, 15), E.one());
    }
}

TEST(ExtField, EleventhRootsInGF9to5) {
  auto F = field_make(3);
  EXPECT_EQ(multiplicative_order(9, 11), 5u);
  ExtField E = ext_field_make(F, 5);
  std::mt19937_64 rng(1);
  auto beta = E.root_of_unity(11, rng);
  EXPECT_EQ(E.pow(beta, 11), E.one());
  EXPECT_NE(beta, E.one());
  EXPECT_THROW(E.root_of_unity(7, rng), std::invalid_argument);
}

TEST(ExtField, IrreducibilityAgreesWithRootSearch) {
  // Over GF(4), a cubic is irreducible iff it has no root in GF(4).
  auto F = field_make(2);
  for (unsigned c0 = 1; c0 < 4; ++c0)
    for (unsigned c1 = 0; c1 < 4; ++c1)
      for (unsigned c2 = 0; c2 < 4; ++c2) {
        std::vector<Elem> f{Elem{static_cast<std::uint8_t>(c0)}, Elem{static_cast<std::uint8_t>(c1)},
                            Elem{static_cast<std::uint8_t>(c2)}, kOne};
        bool root = false;
        for (unsigned x = 0; x < 4; ++x) {
          Elem acc = kZero;
          for (std::size_t i = f.size(); i-- > 0;) acc = F->add(F->mul(acc, Elem{static_cast<std::uint8_t>(x)}), f[i]);
          root = root || acc.is_zero();
        }
        EXPECT_EQ(is_irreducible(F, f), !root);
      }
}

TEST(NumberTheory, Helpers) {
  EXPECT_EQ(prime_factors(80), (std::vector<std::uint64_t>{2, 5}));
  EXPECT_EQ(prime_factors(1), std::vector<std::uint64_t>{});
  EXPECT_EQ(multiplicative_order(4, 7), 3u);
  EXPECT_EQ(multiplicative_order(9, 10), 2u);
  EXPECT_EQ(multiplicative_order(5, 1), 1u);
  EXPECT_THROW(multiplicative_order(2, 4), std::invalid_argument);
}
