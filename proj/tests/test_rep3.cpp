#include "sdual/rep3.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sdual;
using namespace sdual::rep3;

namespace {

SchurDecomposition dec_of(std::initializer_list<std::pair<Partition, long>> parts) {
  SchurDecomposition d;
  for (const auto& [p, m] : parts) d.add(p, m);
  return d;
}

std::vector<Partition> partitions_up_to(long size) {
  std::vector<Partition> out;
  for (long a = 0; a <= size; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c)
        if (a + b + c <= size) out.emplace_back(a, b, c);
  return out;
}

}  // namespace

TEST(Rep3, SchurCharacterExamples) {
  Character e;
  e.add(Weight{{1, 0, 0}}, 1);
  e.add(Weight{{0, 1, 0}}, 1);
  e.add(Weight{{0, 0, 1}}, 1);
  EXPECT_EQ(schur_char(Partition(1)), e);

  Character l2;
  l2.add(Weight{{1, 1, 0}}, 1);
  l2.add(Weight{{1, 0, 1}}, 1);
  l2.add(Weight{{0, 1, 1}}, 1);
  EXPECT_EQ(schur_char(Partition(1, 1)), l2);

  EXPECT_EQ(char_dim(schur_char(Partition(2, 1))), 8);
  EXPECT_EQ(schur_char(Partition(2, 1)), oracle::ssyt_character({2, 1, 0}));
}

TEST(Rep3, SchurCharacterMatchesTableaux) {
  for (const auto& p : partitions_up_to(9)) {
    const Character c = schur_char(p);
    ASSERT_EQ(c, oracle::ssyt_character(p.parts())) << p;
    ASSERT_EQ(char_dim(c), weyl_dim(p)) << p;
    ASSERT_TRUE(c.is_symmetric());
    ASSERT_EQ(c.homogeneous_degree().value_or(-1), p.size());
  }
}

TEST(Rep3, WeylDimension) {
  EXPECT_EQ(weyl_dim(Partition(2, 2, 2)), 1);
  EXPECT_EQ(weyl_dim(Partition(5, 1, 0)), 35);
  EXPECT_EQ(weyl_dim(Partition(4, 2, 0)), 27);
  EXPECT_EQ(char_dim(schur_char(Partition(5, 1))), 35);
  EXPECT_EQ(char_dim(schur_char(Partition(4, 2))), 27);
}

TEST(Rep3, InvalidPartitions) {
  EXPECT_THROW(Partition(1, 2, 0), DomainError);
  EXPECT_THROW(Partition(3, 1, -1), DomainError);
  EXPECT_THROW(Partition(-1), DomainError);
  EXPECT_EQ(Partition(4, 2, 1).sl3(), std::make_pair(3L, 1L));
}

TEST(Rep3, TensorProducts) {
  EXPECT_EQ(tensor(standard(), Character::trivial()), standard());
  EXPECT_EQ(decompose(tensor(standard(), standard())),
            dec_of({{Partition(2), 1}, {Partition(1, 1), 1}}));
  const auto d = decompose(tensor(sym(4), sym(2)));
  EXPECT_EQ(d, dec_of({{Partition(6), 1}, {Partition(5, 1), 1}, {Partition(4, 2), 1}}));
  EXPECT_EQ(d.dim(), 90);
}

TEST(Rep3, PieriOracle) {
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b)
      ASSERT_EQ(decompose(tensor(sym(a), sym(b))), SchurDecomposition(oracle::pieri(a, b)))
          << a << "," << b;
}

TEST(Rep3, SymmetricPowers) {
  EXPECT_EQ(char_dim(sym_power(standard(), 3)), 10);
  EXPECT_EQ(sym_power(standard(), 3), schur_char(Partition(3)));
  EXPECT_EQ(sym_power(schur_char(Partition(3, 1)), 0), Character::trivial());
  EXPECT_TRUE(sym_power(standard(), -1).empty());

  const auto d = decompose(sym_power(sym(2), 3));
  EXPECT_EQ(d, dec_of({{Partition(6), 1}, {Partition(4, 2), 1}, {Partition(2, 2, 2), 1}}));
  EXPECT_EQ(d.dim(), 56);
  EXPECT_EQ(decompose(sym_power(sym(2), 2)), dec_of({{Partition(4), 1}, {Partition(2, 2), 1}}));
}

TEST(Rep3, ExteriorPowers) {
  EXPECT_EQ(ext_power(standard(), 3), schur_char(Partition(1, 1, 1)));
  EXPECT_EQ(char_dim(ext_power(standard(), 3)), 1);
  EXPECT_EQ(ext_power(standard(), 2), schur_char(Partition(1, 1)));
  EXPECT_TRUE(ext_power(standard(), 4).empty());
  EXPECT_TRUE(ext_power(Character{}, 1).empty());
  EXPECT_TRUE(ext_power(Character{}, 3).empty());
  EXPECT_EQ(ext_power(Character{}, 0), Character::trivial());
}

TEST(Rep3, CharDim) {
  EXPECT_EQ(char_dim(sym(2)), 6);
  EXPECT_EQ(char_dim(sym_power(sym(3), 4)), 715);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(char_dim(sym_power(sym(2), n)), oracle::binom(n + 5, 5));
  EXPECT_EQ(char_dim(sym_power(sym(2), 3)), 56);
}

TEST(Rep3, PowersRejectVirtualCharacters) {
  const Character v = standard() - Character::trivial();
  EXPECT_THROW(sym_power(v, 2), DomainError);
  EXPECT_THROW(ext_power(v, 2), DomainError);
}

TEST(Rep3, DecomposeRejectsNonSymmetric) {
  Character x;
  x.add(Weight{{1, 0, 0}}, 1);
  EXPECT_THROW(decompose(x), DomainError);
}

TEST(Rep3, VirtualDecomposition) {
  const auto d = decompose(schur_char(Partition(2)) - schur_char(Partition(1, 1)));
  EXPECT_TRUE(d.is_virtual());
  EXPECT_EQ(d.coefficient(Partition(1, 1)), -1);
  EXPECT_EQ(d.dim(), 3);
  EXPECT_FALSE(decompose(schur_char(Partition(3, 1))).is_virtual());
  EXPECT_EQ(decompose(schur_char(Partition(3, 1))), dec_of({{Partition(3, 1), 1}}));
}

TEST(Rep3Property, AdamsOperations) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Character x = oracle::random_symmetric(rng, 5, 3, 4, true);
    ASSERT_EQ(adams(x, 1), x);
    for (long a = 1; a <= 3; ++a)
      for (long b = 1; b <= 3; ++b) ASSERT_EQ(adams(adams(x, b), a), adams(x, a * b));
  }
}

TEST(Rep3Property, TensorDimensionMultiplicative) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Character x = oracle::random_symmetric(rng, 4, 3, 5, true);
    const Character y = oracle::random_symmetric(rng, 4, 3, 5, true);
    ASSERT_EQ(char_dim(tensor(x, y)), char_dim(x) * char_dim(y));
  }
}

// Brute-force plethysm oracle: Newton's recurrence against explicit multiset
// and subset enumeration, for dim V <= 6 and n <= 4.
TEST(Rep3Property, NewtonMatchesEnumeration) {
  std::vector<Character> spaces;
  for (const auto& p : partitions_up_to(4))
    if (weyl_dim(p) <= 6) spaces.push_back(schur_char(p));
  spaces.push_back(standard() + Character::trivial());
  spaces.push_back(standard() + dual_standard());
  spaces.push_back(Character::trivial() + Character::trivial() + schur_char(Partition(1, 1, 1)));
  for (const auto& v : spaces) {
    ASSERT_LE(char_dim(v), 6);
    for (long n = 0; n <= 4; ++n) {
      ASSERT_EQ(sym_power(v, n), oracle::enumerate_power(v, n, false)) << v << " n=" << n;
      ASSERT_EQ(ext_power(v, n), oracle::enumerate_power(v, n, true)) << v << " n=" << n;
      ASSERT_EQ(char_dim(sym_power(v, n)), oracle::binom(to_long(char_dim(v)) + n - 1, n));
    }
  }
}

// sum_i (-1)^i Lambda^i(V) S^{n-i}(V) = 0 for n >= 1.
TEST(Rep3Property, KoszulIdentity) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Character v = oracle::random_symmetric(rng, 2, 2, 1, false);
    if (char_dim(v) > 10 || v.empty()) continue;
    for (long n = 1; n <= 5; ++n) {
      Character sum;
      for (long i = 0; i <= n; ++i) {
        const Character term = tensor(ext_power(v, i), sym_power(v, n - i));
        if (i % 2 == 0) sum += term;
        else sum -= term;
      }
      ASSERT_TRUE(sum.empty()) << v << " n=" << n;
    }
  }
}

TEST(Rep3Property, DecomposeRecomposeRoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Character x = oracle::random_symmetric(rng, 8, 4, 5, false);
    const auto d = decompose(x);
    ASSERT_EQ(d.recompose(), x);
    ASSERT_EQ(d.dim(), char_dim(x));
  }
  const auto parts = partitions_up_to(8);
  std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int i = 0; i < 200; ++i) {
    SchurDecomposition d;
    for (int j = 0; j < 4; ++j) d.add(parts[pick(rng)], coeff(rng));
    ASSERT_EQ(decompose(d.recompose()), d);
  }
}

TEST(Rep3Property, SymPowerDimensions) {
  for (const auto& p : partitions_up_to(3))
    for (long n = 0; n <= 5; ++n) {
      const long dv = to_long(weyl_dim(p));
      ASSERT_EQ(char_dim(sym_power(schur_char(p), n)), oracle::binom(dv + n - 1, n));
      ASSERT_EQ(char_dim(ext_power(schur_char(p), n)), oracle::binom(dv, n));
    }
}
