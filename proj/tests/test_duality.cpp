#include "sdual/duality.hpp"
#include "sdual/series.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace sdual;
using namespace sdual::duality;
using oracle::binom;

namespace {

Int lhs_oracle(long n, long d) {
  switch (d) {
    case 1: return binom(n + 2, 2);
    case 2: return binom(n + 5, 5);
    default: return binom(n + 9, 9) + binom(n + 7, 9);
  }
}

SchurDecomposition dec_of(std::initializer_list<std::pair<Partition, long>> parts) {
  SchurDecomposition d;
  for (const auto& [p, m] : parts) d.add(p, m);
  return d;
}

}  // namespace

TEST(Duality, LhsExamples) {
  EXPECT_EQ(lhs_dim(3, 1), 10);
  EXPECT_EQ(lhs_dim(2, 3), 56);
  EXPECT_EQ(lhs_dim(0, 2), 1);
  EXPECT_THROW(lhs_dim(3, 4), Unsupported);
  EXPECT_THROW(lhs_dim(3, 0), Unsupported);
  EXPECT_THROW(lhs_dim(-1, 2), DomainError);
}

TEST(Duality, LhsMatchesBinomials) {
  for (long n = 0; n <= 8; ++n)
    for (long d = 1; d <= 3; ++d) ASSERT_EQ(lhs_dim(n, d), lhs_oracle(n, d)) << n << "," << d;
}

TEST(Duality, LhsUsesDualStandard) {
  // S^n E* has SL(3) type (0, n); as a polynomial character it is S^(n,n,0).
  EXPECT_EQ(rep3::decompose(lhs_character(3, 1)), dec_of({{Partition(3, 3), 1}}));
}

TEST(Duality, RhsExamples) {
  EXPECT_EQ(rhs_dim(4, 2), 126);
  EXPECT_EQ(rhs_dim(4, 3), 770);
  EXPECT_EQ(rhs_dim(3, 3), 230);
  EXPECT_EQ(rhs_dim(3, 2), 56);
  EXPECT_EQ(rhs_dim(5, 3), 2222);
  EXPECT_EQ(rhs_dim(4, 1), 15);
  EXPECT_EQ(rhs_dim(3, 1), 10);
  EXPECT_EQ(rhs_dim(4, 0), 1);
  EXPECT_THROW(rhs_dim(4, 4), Unsupported);
  EXPECT_THROW(rhs_dim(-1, 2), DomainError);
  EXPECT_TRUE(rhs_paper_backed(3, 2));
  EXPECT_FALSE(rhs_paper_backed(1, 2));
  EXPECT_FALSE(rhs_paper_backed(6, 2));
}

TEST(Duality, RhsOnP5) {
  // n = 2: M_c = P5, sections of O(d).
  for (long d = 0; d <= 3; ++d) EXPECT_EQ(rhs_dim(2, d), binom(d + 5, 5));
}

TEST(Duality, DimensionLevelTheorem) {
  for (long n = 2; n <= 5; ++n)
    for (long d = 1; d <= 3; ++d) {
      ASSERT_EQ(lhs_dim(n, d), rhs_dim(n, d)) << n << "," << d;
      ASSERT_EQ(rhs_dim(n, d), lhs_oracle(n, d));
    }
}

TEST(Duality, SeriesAgreeWithRhs) {
  const series::PoincareSeries s3{series::IntPolynomial{1, 0, 1, 0, 1}, 9, 2};
  const series::PoincareSeries s4{series::IntPolynomial{1, 1, 7, 7, 22, 7, 7, 1, 1}, 13, 2};
  for (long d = 0; d <= 3; ++d) {
    EXPECT_EQ(series::coefficient(s3, d), rhs_dim(3, d)) << d;
    EXPECT_EQ(series::coefficient(s4, d), rhs_dim(4, d)) << d;
  }
}

TEST(Duality, CheckReports) {
  auto r = check(5, 3);
  EXPECT_EQ(r.lhs_dim, 2222);
  EXPECT_EQ(r.rhs_dim, 2222);
  EXPECT_TRUE(r.orthogonal);
  EXPECT_TRUE(r.asserted_by_paper);
  EXPECT_EQ(r.c, (kring::KClass{2, 0, -3}));
  EXPECT_EQ(r.u, (kring::KClass{0, 3, 0}));
  EXPECT_EQ(r.delta, 2);

  r = check(3, 2);
  EXPECT_EQ(r.lhs_dim, 56);
  EXPECT_EQ(r.rhs_dim, 56);
  EXPECT_TRUE(r.asserted_by_paper);

  r = check(2, 1);
  EXPECT_EQ(r.lhs_dim, 6);
  EXPECT_EQ(r.rhs_dim, 6);
  EXPECT_TRUE(r.orthogonal);

  EXPECT_FALSE(check(6, 2).asserted_by_paper);
  EXPECT_TRUE(check(19, 1).asserted_by_paper);
  EXPECT_FALSE(check(20, 1).asserted_by_paper);
  EXPECT_FALSE(check(1, 2).asserted_by_paper);
  EXPECT_FALSE(check(0, 1).asserted_by_paper);
}

TEST(Duality, OrthogonalityOfConstructedClasses) {
  for (long n = 0; n <= 12; ++n)
    for (long d = 1; d <= 3; ++d) {
      const auto r = check(n, d);
      ASSERT_TRUE(r.orthogonal);
      ASSERT_EQ(kring::euler_pair(r.c, r.u), 0);
      ASSERT_TRUE(r.consistent());
    }
}

TEST(Duality, ModuliDimensionsOfBothSides) {
  for (long n = 1; n <= 10; ++n)
    EXPECT_EQ(kring::moduli_dim(kring::chern_to_chi({2, 0, n})), 4 * n - 3);
  for (long d = 1; d <= 5; ++d) EXPECT_EQ(kring::moduli_dim({0, d, 0}), d * d + 1);
}

TEST(Duality, KernelOfSquaring) {
  EXPECT_TRUE(ker_sym2_mult(1).empty());
  EXPECT_TRUE(ker_sym2_mult(0).empty());
  EXPECT_EQ(ker_sym2_mult(2), dec_of({{Partition(2, 2), 1}}));
  EXPECT_EQ(ker_sym2_mult(2).dim(), 6);
  EXPECT_EQ(ker_sym2_mult(3), dec_of({{Partition(4, 2), 1}}));
  EXPECT_EQ(ker_sym2_mult(3).dim(), 27);
  EXPECT_THROW(ker_sym2_mult(-1), DomainError);
}

TEST(Duality, KernelOfSquaringStructure) {
  for (long a = 0; a <= 6; ++a) {
    const auto ker = ker_sym2_mult(a);
    const long da = (a + 1) * (a + 2) / 2;
    ASSERT_EQ(ker.dim(), binom(da + 1, 2) - binom(2 * a + 2, 2)) << a;
    // Against the enumeration oracle for S^2.
    const auto brute = rep3::decompose(oracle::enumerate_power(rep3::sym(a), 2, false));
    ASSERT_EQ(ker, brute - dec_of({{Partition(2 * a), 1}}));
    for (const auto& [p, m] : ker.parts()) {
      ASSERT_EQ(p[2], 0) << p;
      ASSERT_EQ(p[0] % 2, 0) << p;
      ASSERT_EQ(p[1] % 2, 0) << p;
      ASSERT_EQ(p.size(), 2 * a);
      ASSERT_EQ(m, 1);
    }
  }
}

TEST(Duality, SectionDims) {
  auto dims = section_dims(4, -1, 2);
  EXPECT_EQ(dims[0], 126);
  EXPECT_EQ(dims[2], 56);
  dims = section_dims(1, 0, 1);
  EXPECT_EQ(dims[1], 3);
  // Part ii at k = -1 reproduces rhs_dim(n, 1).
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(section_dims(n + 1, -1, 1)[1], binom(n + 2, 2));
  EXPECT_THROW(section_dims(-1, 0, 1), DomainError);
  EXPECT_THROW(section_dims(1, 0, 0), DomainError);
}

TEST(Duality, AlphaAudit) {
  for (long n = 0; n <= 7; ++n) {
    const auto a = alpha_audit(n);
    ASSERT_TRUE(a.passed()) << n << ": " << (a.failures.empty() ? "" : a.failures.front());
    ASSERT_EQ(a.ker_dim, binom(n + 9, 9) + binom(n + 7, 9));
    ASSERT_EQ(a.coker_dim, 35 * binom(n + 7, 9));
  }
  const auto a4 = alpha_audit(4);
  EXPECT_EQ(a4.ker_dim, 770);
  EXPECT_EQ(a4.coker_dim, 1925);
  const auto a2 = alpha_audit(2);
  EXPECT_EQ(a2.ker_dim, 56);
  EXPECT_EQ(a2.coker_dim, 35);
  EXPECT_EQ(a2.sym3_sym2 - dec_of({{Partition(2, 2, 2), 1}}), dec_of({{Partition(6), 1}, {Partition(4, 2), 1}}));
  EXPECT_EQ(a2.sym4_sym2 - dec_of({{Partition(5, 1), 1}}), dec_of({{Partition(6), 1}, {Partition(4, 2), 1}}));
  EXPECT_EQ(a2.nu_kernel, dec_of({{Partition(2, 2, 2), 1}}));
  EXPECT_EQ(a2.nu_cokernel, dec_of({{Partition(5, 1), 1}}));
  EXPECT_EQ(a2.nu_kernel.dim(), 1);
  EXPECT_EQ(a2.nu_cokernel.dim(), 35);
  EXPECT_THROW(alpha_audit(-1), DomainError);
}

TEST(Duality, AlphaTermsAtDualityParameters) {
  // k = -1, d = 3, m = n + 1 with n = 3.
  const auto [source, target] = alpha_terms(4, -1, 3);
  ASSERT_EQ(source.size(), 3u);
  ASSERT_EQ(target.size(), 2u);
  EXPECT_EQ(rep3::char_dim(source[0].character), binom(12, 9));
  EXPECT_EQ(rep3::char_dim(source[1].character), 3 * 6 * binom(11, 9));
  EXPECT_EQ(rep3::char_dim(source[2].character), 56 * binom(10, 9));
  EXPECT_EQ(rep3::char_dim(target[0].character), 6 * 3 * binom(11, 9));
  EXPECT_EQ(rep3::char_dim(target[1].character), 15 * 6 * binom(10, 9));
}

TEST(Duality, ConcurrentChecksAgree) {
  std::vector<std::thread> pool;
  std::vector<Int> got(12);
  for (long i = 0; i < 12; ++i)
    pool.emplace_back([i, &got] { got[static_cast<std::size_t>(i)] = check(2 + i / 3, 1 + i % 3).rhs_dim; });
  for (auto& t : pool) t.join();
  for (long i = 0; i < 12; ++i) EXPECT_EQ(got[static_cast<std::size_t>(i)], lhs_oracle(2 + i / 3, 1 + i % 3));
}
