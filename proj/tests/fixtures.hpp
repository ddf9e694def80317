#pragma once

// Shared test data and independent oracles.

#include <cstdint>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "colog/formula.hpp"
#include "colog/model.hpp"

namespace colog::testing {

// Three-level model: rank 0 = {ABC, A~BC}, rank 1 = {AB~C, A~B~C},
// rank 2 = {~ABC, ~AB~C}.
inline constexpr const char* kThreeLevelText =
    "atoms: A B C\n"
    "rank 0: 111 101\n"
    "rank 1: 110 100\n"
    "rank 2: 011 010\n";

inline RankedModel three_level() { return parse_model(kThreeLevelText); }

inline constexpr const char* kStudentKb =
    "# adults are normally employed, students are normally adults,\n"
    "# students are normally unemployed\n"
    "A => E\n"
    "S => A\n"
    "S => ~E\n";

// Ordered set partitions of an n-set, by the recurrence
// F(n) = sum_k C(n,k) F(n-k).
inline std::uint64_t fubini(unsigned n) {
  std::vector<std::uint64_t> f(n + 1, 0);
  f[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    std::uint64_t c = 1;  // C(m, k)
    for (unsigned k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      f[m] += c * f[m - k];
    }
  }
  return f[n];
}

// Direct listing: rank functions from n elements onto {0..k-1} for some k.
inline std::uint64_t count_rankings_by_listing(unsigned n) {
  if (n == 0) return 1;
  std::uint64_t count = 0;
  std::vector<unsigned> r(n, 0);
  for (;;) {
    unsigned mx = 0;
    for (unsigned x : r) mx = std::max(mx, x);
    std::vector<bool> used(mx + 1, false);
    for (unsigned x : r) used[x] = true;
    bool onto = true;
    for (bool u : used) onto = onto && u;
    if (onto) ++count;
    unsigned i = 0;
    while (i < n && ++r[i] == n) r[i++] = 0;
    if (i == n) break;
  }
  return count;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Random formula trees for property tests.
class FormulaGenerator {
 public:
  FormulaGenerator(std::uint32_t seed, std::vector<std::string> atoms, bool sugar = true,
                   bool modal = true)
      : rng_(seed), atoms_(std::move(atoms)), sugar_(sugar), modal_(modal) {}

  Formula operator()(int depth) {
    std::uniform_int_distribution<int> leaf(0, static_cast<int>(atoms_.size()) + 1);
    if (depth <= 0) {
      const int l = leaf(rng_);
      if (l == static_cast<int>(atoms_.size())) return top();
      if (l == static_cast<int>(atoms_.size()) + 1) return bottom();
      return atom(atoms_[static_cast<std::size_t>(l)]);
    }
    static constexpr Kind kAll[] = {Kind::Atom,   Kind::Not,  Kind::And,    Kind::Or,     Kind::Implies,
                                    Kind::Iff,    Kind::Box,  Kind::IBox,   Kind::Dia,    Kind::IDia,
                                    Kind::AllBox, Kind::AllDia, Kind::Belief, Kind::OnlyKnow, Kind::Cond};
    const std::size_t count = !modal_ ? 6 : !sugar_ ? 8 : std::size(kAll);
    const std::vector<Kind> kinds(kAll, kAll + count);
    std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
    const Kind k = kinds[pick(rng_)];
    if (k == Kind::Atom) return (*this)(0);
    if (arity(k) == 1) return Formula::make_unary(k, (*this)(depth - 1));
    Formula a = (*this)(depth - 1);
    Formula b = (*this)(depth - 1);
    return Formula::make_binary(k, a, b);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
  bool sugar_;
  bool modal_;
};

}  // namespace colog::testing
