#include <gtest/gtest.h>

#include "opprank/error.hpp"
#include "opprank/finite_field.hpp"

namespace opprank {
namespace {

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST(FiniteField, Axioms) {
  for (int q : kOrders) {
    const FiniteField f = FiniteField::of_order(q);
    ASSERT_EQ(f.order(), q);
    for (int a = 0; a < q; ++a) {
      const auto x = static_cast<FieldElem>(a);
      EXPECT_EQ(f.add(x, 0), x);
      EXPECT_EQ(f.mul(x, 1), x);
      EXPECT_EQ(f.mul(x, 0), 0);
      EXPECT_EQ(f.add(x, f.neg(x)), 0);
      if (a) EXPECT_EQ(f.mul(x, f.inv(x)), 1) << "q=" << q << " a=" << a;
      for (int b = 0; b < q; ++b) {
        const auto y = static_cast<FieldElem>(b);
        EXPECT_EQ(f.add(x, y), f.add(y, x));
        EXPECT_EQ(f.mul(x, y), f.mul(y, x));
        EXPECT_EQ(f.sub(f.add(x, y), y), x);
        for (int c = 0; c < q; ++c) {
          const auto z = static_cast<FieldElem>(c);
          ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
          ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
          ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        }
      }
    }
  }
}

TEST(FiniteField, NoZeroDivisorsAndCyclicGroup) {
  for (int q : kOrders) {
    const FiniteField f = FiniteField::of_order(q);
    bool has_generator = false;
    for (int a = 1; a < q; ++a) {
      const auto x = static_cast<FieldElem>(a);
      EXPECT_EQ(f.pow(x, static_cast<unsigned>(q - 1)), 1);
      for (int b = 1; b < q; ++b) EXPECT_NE(f.mul(x, static_cast<FieldElem>(b)), 0);
      int order = 1;
      for (FieldElem y = x; y != 1; y = f.mul(y, x)) ++order;
      if (order == q - 1) has_generator = true;
    }
    EXPECT_TRUE(has_generator) << q;
  }
}

TEST(FiniteField, Frobenius) {
  for (int q : kOrders) {
    const FiniteField f = FiniteField::of_order(q);
    std::vector<bool> hit(static_cast<std::size_t>(q), false);
    for (int a = 0; a < q; ++a) {
      const auto x = static_cast<FieldElem>(a);
      hit[f.frobenius(x)] = true;
      // x^q = x; Frobenius^t is the identity.
      EXPECT_EQ(f.pow(x, static_cast<unsigned>(q)), x);
      FieldElem y = x;
      for (int k = 0; k < f.degree(); ++k) y = f.frobenius(y);
      EXPECT_EQ(y, x);
      for (int b = 0; b < q; ++b) {
        const auto z = static_cast<FieldElem>(b);
        EXPECT_EQ(f.frobenius(f.add(x, z)), f.add(f.frobenius(x), f.frobenius(z)));
        EXPECT_EQ(f.frobenius(f.mul(x, z)), f.mul(f.frobenius(x), f.frobenius(z)));
      }
    }
    for (bool h : hit) EXPECT_TRUE(h);
    // Fixed points of Frobenius are exactly the prime field.
    int fixed = 0;
    for (int a = 0; a < q; ++a) fixed += f.frobenius(static_cast<FieldElem>(a)) == a;
    EXPECT_EQ(fixed, f.characteristic());
  }
}

TEST(FiniteField, PrimeFieldEncoding) {
  const FiniteField f(7, 1);
  EXPECT_EQ(f.mul(3, 5), 1);
  EXPECT_EQ(f.add(4, 5), 2);
  EXPECT_EQ(f.inv(3), 5);
  // GF(4): x * x = x + 1, encoded 2 * 2 = 3.
  const FiniteField g(2, 2);
  EXPECT_EQ(g.mul(2, 2), 3);
  EXPECT_EQ(g.add(2, 3), 1);
}

TEST(FiniteField, Moduli) {
  for (int q : {4, 8, 9, 16}) {
    const FiniteField f = FiniteField::of_order(q);
    EXPECT_EQ(static_cast<int>(f.modulus().size()), f.degree() + 1);
    EXPECT_EQ(f.modulus().back(), 1);
    EXPECT_TRUE(is_irreducible_mod_p(f.modulus(), f.characteristic()));
  }
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));     // (x+1)^2
  EXPECT_FALSE(is_irreducible_mod_p({0, 1, 1}, 3));     // x(x+1)
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 0, 0, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p({2, 0, 1}, 3));     // x^2 - 1
  EXPECT_TRUE(is_irreducible_mod_p({1, 0, 1}, 3));      // x^2 + 1
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 0, 1}, 2));   // x^3 + x + 1
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 1, 1, 1}, 2));   // 5th cyclotomic, 2 has order 4 mod 5
}

TEST(FiniteField, Unsupported) {
  for (int q : {0, 1, 6, 10, 12, 15, 17, 25, 32}) EXPECT_THROW(FiniteField::of_order(q), UnsupportedError) << q;
}

}  // namespace
}  // namespace opprank
