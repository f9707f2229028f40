#include "qtrsk/sampler.hpp"

namespace qtrsk {

namespace {

const mpz_class& two_to_64() {
  static const mpz_class x = mpz_class(1) << 64;
  return x;
}

mpz_class to_mpz(std::uint64_t u) {
  mpz_class z = static_cast<unsigned long>(u >> 32);
  z <<= 32;
  z += static_cast<unsigned long>(u & 0xffffffffu);
  return z;
}

template <class Choice, class ProbOf>
std::size_t draw(const std::vector<Choice>& choices, ProbOf prob_of, const BigRational& q0, const BigRational& t0,
                 SplitMix64& rng) {
  if (choices.empty()) throw Error(Errc::InvalidArgument, "no local choice available");
  if (choices.size() == 1) return 0;
  std::vector<BigRational> w;
  for (const auto& c : choices) w.push_back(qt_eval(prob_of(c), q0, t0));
  return choose_index(w, rng.next());
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t choose_index(const std::vector<BigRational>& weights, std::uint64_t u) {
  if (weights.empty()) throw Error(Errc::InvalidArgument, "no weights");
  BigRational total = 0;
  for (const auto& w : weights) {
    if (w < 0 || w > 1) throw Error(Errc::InvalidArgument, "weight outside [0,1]");
    total += w;
  }
  if (total != 1) throw Error(Errc::NotNormalized, "weights sum to " + total.get_str());
  const mpz_class uz = to_mpz(u);
  BigRational cum = 0;
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
    cum += weights[k];
    BigRational scaled = cum * two_to_64();
    mpz_class threshold;
    mpz_fdiv_q(threshold.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (uz < threshold) return k;
  }
  return weights.size() - 1;
}

void check_sampling_parameters(const BigRational& q0, const BigRational& t0) {
  auto below = [](const BigRational& x) { return x >= 0 && x < 1; };
  auto above = [](const BigRational& x) { return x > 1; };
  if (!(below(q0) && below(t0)) && !(above(q0) && above(t0)))
    throw Error(Errc::ParameterOutOfRange,
                "q and t must both lie in [0,1) or both in (1,inf), got " + q0.get_str() + ", " + t0.get_str());
}

TableauPair sample_forward(const Matrix01& a, const BigRational& q0, const BigRational& t0, std::uint64_t seed) {
  check_sampling_parameters(q0, t0);
  SplitMix64 rng(seed);
  const int m = a.rows(), n = a.cols();
  DualGrowth g{a, std::vector<std::vector<Partition>>(m + 1, std::vector<Partition>(n + 1))};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      auto choices = local_forward_choices(GrowthRule::Qt, g.at(i - 1, j - 1), g.at(i, j - 1), g.at(i - 1, j), a.at(i, j));
      std::size_t k = draw(choices, [](const auto& c) { return c.second; }, q0, t0, rng);
      g.grid[i][j] = choices[k].first;
    }
  return {g.P(), g.Q()};
}

Matrix01 sample_backward(const Tableau& p, const Tableau& q, int m, int n, const BigRational& q0,
                         const BigRational& t0, std::uint64_t seed) {
  check_sampling_parameters(q0, t0);
  if (p.flavor() != Flavor::Ssyt || q.flavor() != Flavor::DualSsyt)
    throw Error(Errc::InvalidArgument, "expected an SSYT P and a dual SSYT Q");
  if (p.shape() != q.shape())
    throw Error(Errc::ShapeMismatch, "P has shape " + to_string(p.shape()) + ", Q has " + to_string(q.shape()));
  Tableau pp = p.with_max_entry(m), qq = q.with_max_entry(n);
  if (pp.max_entry() != m || qq.max_entry() != n)
    throw Error(Errc::InvalidArgument, "tableau entries exceed the matrix dimensions");
  SplitMix64 rng(seed);
  Matrix01 out(m, n);
  std::vector<std::vector<Partition>> grid(m + 1, std::vector<Partition>(n + 1));
  for (int i = 0; i <= m; ++i) grid[i][n] = pp.chain()[i];
  for (int j = 0; j <= n; ++j) grid[m][j] = qq.chain()[j];
  for (int i = m; i >= 1; --i)
    for (int j = n; j >= 1; --j) {
      auto choices = local_backward_choices(grid[i][j - 1], grid[i - 1][j], grid[i][j]);
      std::size_t k = draw(choices, [](const auto& c) { return c.prob; }, q0, t0, rng);
      grid[i - 1][j - 1] = choices[k].mu;
      out.set(i, j, choices[k].a);
    }
  return out;
}

}  // namespace qtrsk
