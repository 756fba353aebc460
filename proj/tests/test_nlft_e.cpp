#include <gtest/gtest.h>

#include "nlft/io/generate.hpp"
#include "test_support.hpp"

using namespace nlft;
using nlft::testing::naive_dft;
using nlft::testing::random_complex;

namespace {

double signal_error(const DiscreteSignal& l, const DiscreteSignal& r) {
  double e = 0.0;
  for (std::size_t n = 0; n < l.size(); ++n) e = std::max(e, std::abs(l.u[n] - r.u[n]));
  return e;
}

}  // namespace

TEST(Dft, MatchesNaiveSum) {
  std::mt19937_64 rng(31);
  for (std::size_t N : {1u, 2u, 7u, 32u, 100u}) {
    std::vector<Complex> v(N);
    for (Complex& c : v) c = random_complex(rng, 1.0);
    const auto fast = dft(v), slow = naive_dft(v);
    for (std::size_t k = 0; k < N; ++k) EXPECT_LT(std::abs(fast[k] - slow[k]), 1e-12 * static_cast<double>(N));
    const auto back = idft(fast);
    for (std::size_t k = 0; k < N; ++k) EXPECT_LT(std::abs(back[k] - v[k]), 1e-14 * static_cast<double>(N));
  }
  EXPECT_TRUE(dft(std::vector<Complex>{}).empty());
}

TEST(ForwardE, TopOffDiagonalCoefficientIsLastSample) {
  const DiscreteSignal s = io::gen_signal(16, 2);
  const GridMat g = forward_e(s);
  std::vector<Complex> b(16);
  for (std::size_t z = 0; z < 16; ++z) b[z] = g.samples[z].b;
  EXPECT_LT(std::abs(idft(b)[15] - s.u[15] / 16.0), 1e-14);
}

TEST(ForwardE, DeterminantIsProductOfFactors) {
  const DiscreteSignal s = io::gen_signal(12, 3);
  double expected = 1.0;
  for (Complex u : s.u) expected *= 1.0 + std::norm(u) / 144.0;
  for (const QMat& m : forward_e(s).samples) EXPECT_NEAR(m.det(), expected, 1e-12 * expected);
}

TEST(ForwardE, ZeroSignalIsIdentity) {
  const GridMat g = forward_e({std::vector<Complex>(8)});
  EXPECT_EQ(max_abs_diff(g, GridMat::identity(8)), 0.0);
}

TEST(PeelE, OneStepCyclicallyShiftsTheSignal) {
  const DiscreteSignal s = io::gen_signal(10, 4);
  const PeelE step = peel_step_e(forward_e(s));
  EXPECT_LT(std::abs(step.u - s.u.back()), 1e-12);
  DiscreteSignal shifted{{s.u.back()}};
  shifted.u.insert(shifted.u.end(), s.u.begin(), s.u.end() - 1);
  EXPECT_LT(max_abs_diff(step.next, forward_e(shifted)), 1e-12);
}

TEST(InverseE, RoundTrip) {
  for (std::size_t N : {1u, 4u, 16u, 64u, 128u}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const DiscreteSignal s = io::gen_signal(static_cast<int>(N), seed);
      EXPECT_LT(signal_error(inverse_e(forward_e(s)), s), 1e-8) << "N " << N << " seed " << seed;
    }
  }
}

TEST(InverseE, RejectsNonImage) {
  GridMat g = forward_e(io::gen_signal(8, 5));
  g.samples[3].b *= 1.1;
  try {
    inverse_e(g);
    FAIL() << "expected NotInImage";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInImage);
  }
}

TEST(MembershipE, ImagesAndPerturbations) {
  std::mt19937_64 rng(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int N = 4 << (seed % 4);
    GridMat g = forward_e(io::gen_signal(N, seed));
    EXPECT_TRUE(membership_e(g));
    g.samples[std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)].b *= 1.1;
    EXPECT_FALSE(membership_e(g)) << "seed " << seed;
  }
  EXPECT_FALSE(membership_e(GridMat{}));
}

TEST(Strata, ClosedFormAnchor) {
  EXPECT_EQ(stratum_count(100, 10, 25), BigInt("225798070267414150"));
  EXPECT_EQ(stratum_count(100, 10, 25), BigInt(2042975) * BigInt(110524147514LL));
}

TEST(Strata, ClosedFormMatchesEnumeration) {
  for (int N = 1; N <= 12; ++N) {
    for (int k = 1; 2 * k - 1 <= N; ++k) {
      for (int l = 0; l < N; ++l) {
        const auto arrays = oracle::enumerate_stratum(N, 2 * k - 1, l);
        EXPECT_EQ(BigInt(arrays.size()), stratum_count(N, k, l)) << N << " " << k << " " << l;
      }
    }
  }
}

TEST(Strata, OutOfRangeIsZero) {
  EXPECT_EQ(stratum_count(10, 1, 10), BigInt(0));
  EXPECT_EQ(stratum_count(10, 0, 3), BigInt(0));
  EXPECT_EQ(stratum_count(10, 6, 5), BigInt(0));
}

TEST(Strata, DysonBracketsReproduceTheGrid) {
  const DiscreteSignal s = io::gen_signal(9, 8);
  const StrataBrackets br = dyson_strata_e(s);
  const auto alpha = dft(br.alpha), beta = dft(br.beta);
  const GridMat g = forward_e(s);
  for (std::size_t z = 0; z < 9; ++z) {
    EXPECT_LT(std::abs(g.samples[z].a - (1.0 + alpha[z])), 1e-12);
    EXPECT_LT(std::abs(g.samples[z].b - beta[z]), 1e-12);
  }
}
