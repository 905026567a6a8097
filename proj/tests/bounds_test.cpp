#include <gtest/gtest.h>

#include "eccad/bounds.hpp"

using namespace eccad;

namespace {

mpz_class ipow(long b, unsigned long e) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

// Product of 2 m_i d_i over the given rows.
mpq_class full_product(const std::vector<GrowthRow>& rows) {
  mpq_class p = 1;
  for (const auto& r : rows) p *= 2 * r.count * r.degree;
  return p;
}

}  // namespace

TEST(Bounds, TableExamples) {
  auto t1 = growth_table(4, 3, 2, 0, Flavor::P_only);
  ASSERT_EQ(t1.size(), 4u);
  EXPECT_EQ(t1[0].count, 3);
  EXPECT_EQ(t1[1].count, 2 * 9);
  EXPECT_EQ(t1[1].degree, 2 * 4);
  EXPECT_EQ(t1[2].count, 4 * 81);  // 4m^4
  EXPECT_EQ(t1[2].degree, 8 * 16);  // 8d^4
  auto t2 = growth_table(5, 3, 2, 2, Flavor::EC_then_P);
  EXPECT_EQ(t2[2].count, 9 * 3);  // 3^l m
  EXPECT_EQ(t2[2].degree, ipow(2, 3) * ipow(2, 4));
  auto t3 = growth_table(6, 3, 2, 3, Flavor::GB_EC_then_P);
  EXPECT_EQ(t3[1].ec_degree, 4 * 4);    // 4d^2
  EXPECT_EQ(t3[2].ec_degree, 27 * 8);   // 27d^3
  EXPECT_EQ(t3[3].ec_degree, 256 * 16);  // 256d^4
  EXPECT_EQ(t3[1].degree, 4);             // d^2
  EXPECT_EQ(t3[2].degree, 16);            // d^4
  EXPECT_EQ(t3[3].degree, 128);           // d^7
}

TEST(Bounds, TableRecurrences) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int d = 1; d <= 4; ++d) {
        auto t1 = growth_table(n, m, d, 0, Flavor::P_only);
        for (int i = 2; i < n; ++i) {
          EXPECT_EQ(t1[i].count, t1[i - 1].count * t1[i - 1].count);
          EXPECT_EQ(t1[i].degree, 2 * t1[i - 1].degree * t1[i - 1].degree);
        }
        EXPECT_EQ(t1[1].count, 2 * m * m);
        for (int l = 1; l <= std::min(3, std::min(m, n)); ++l) {
          auto t2 = growth_table(n, m, d, l, Flavor::EC_then_P);
          auto t3 = growth_table(n, m, d, l, Flavor::GB_EC_then_P);
          for (int s = 1; s < n; ++s) {
            EXPECT_EQ(t2[s].degree, 2 * t2[s - 1].degree * t2[s - 1].degree);
            if (s <= l) EXPECT_EQ(t2[s].count, 3 * t2[s - 1].count);
            else EXPECT_EQ(t2[s].count, t2[s - 1].count * t2[s - 1].count);
            EXPECT_EQ(t3[s].count, t2[s].count);
            // EC-derived rows add the EC degree exponent to the others' exponent
            if (s <= l) {
              EXPECT_EQ(t3[s].degree, t3[s - 1].degree * ipow(d, s));
            } else {
              EXPECT_EQ(t3[s].degree, t3[s - 1].degree * t3[s - 1].degree);
            }
          }
        }
      }
}

TEST(Bounds, DominantTermExamples) {
  EXPECT_EQ(dominant_term(2, 1, 1, 0, DominantTerm::Eq8), 16);
  EXPECT_EQ(dominant_term(2, 2, 2, 1, DominantTerm::Eq11), 32);
  EXPECT_EQ(dominant_term(3, 2, 2, 1, DominantTerm::Eq10), mpq_class(ipow(4, 7) * ipow(2, 4) * ipow(3, 3)));
  EXPECT_THROW(dominant_term(3, 2, 2, 0, DominantTerm::Eq10), UsageError);
  EXPECT_THROW(dominant_term(3, 1, 2, 2, DominantTerm::Eq11), UsageError);
}

TEST(Bounds, DominantTermsAreTableProducts) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int d = 1; d <= 4; ++d) {
        EXPECT_EQ(full_product(growth_table(n, m, d, 0, Flavor::P_only)), dominant_term(n, m, d, 0, DominantTerm::Eq8));
        for (int l = 1; l <= std::min(m, n); ++l) {
          auto t2 = growth_table(n, m, d, l, Flavor::EC_then_P);
          EXPECT_EQ(full_product(t2), dominant_term(n, m, d, l, DominantTerm::Eq10));
          // reduced lifting: degrees only for the constraint levels, leading 2;
          // the closed form assumes at least one unconstrained level
          if (l == n) continue;
          mpq_class p = 2;
          for (int s = 0; s < n; ++s) p *= s <= l ? mpq_class(t2[s].degree) : mpq_class(2 * t2[s].count * t2[s].degree);
          EXPECT_EQ(p, dominant_term(n, m, d, l, DominantTerm::Eq11)) << n << m << d << l;
        }
      }
}

TEST(Bounds, ReducedBoundIsSmaller) {
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= 5; ++m)
      for (int d = 2; d <= 5; ++d)
        for (int l = 1; l <= 3 && l < n && l <= m; ++l)
          EXPECT_LT(dominant_term(n, m, d, l, DominantTerm::Eq11), dominant_term(n, m, d, 0, DominantTerm::Eq8));
}

TEST(Bounds, GbDegreeExponent) {
  EXPECT_EQ(gb_degree_exponent(3, 1), 5);
  EXPECT_EQ(gb_degree_exponent(2, 1), 1);
  EXPECT_EQ(gb_degree_exponent(4, 2), 11);
  EXPECT_THROW(gb_degree_exponent(3, 3), UsageError);
}

TEST(Bounds, DomainErrors) {
  EXPECT_THROW(growth_table(3, 2, 2, 0, Flavor::EC_then_P), UsageError);
  EXPECT_THROW(growth_table(3, 2, 2, 3, Flavor::GB_EC_then_P), UsageError);
  EXPECT_THROW(growth_table(0, 2, 2, 0, Flavor::P_only), UsageError);
  EXPECT_NO_THROW(growth_table(3, 3, 2, 3, Flavor::GB_EC_then_P));
}
