#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zktor/chain_complex.hpp"
#include "zktor/complexes.hpp"
#include "zktor/matrix.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

/// Basis elements a_S of the Taylor complex of a monomial generator system
/// are indexed by strictly increasing tuples S of generator indices
/// (1-based).  The free module generator a_S sits in homological degree |S|
/// and multidegree lcm{a_i : i in S}.

using IndexTuple = std::vector<int>;

inline void check_tuple(const GeneratorSystem& sys, const IndexTuple& S) {
  for (std::size_t u = 0; u < S.size(); ++u) {
    if (S[u] < 1 || S[u] > sys.k())
      throw std::invalid_argument("tuple index out of range");
    if (u > 0 && S[u - 1] >= S[u])
      throw std::invalid_argument("tuple must be strictly increasing");
  }
}

/// lcm of the selected generators; the empty tuple has multidegree 0.
inline ExponentVector taylor_multidegree(const GeneratorSystem& sys,
                                         const IndexTuple& S) {
  check_tuple(sys, S);
  ExponentVector d = ExponentVector::zero(sys.m());
  for (int i : S) d = d.join(sys.generator(i));
  return d;
}

/// One term of a k[x]-linear combination of Taylor basis elements: the
/// monomial multiplier x^multiplier times sign times a_tuple.
struct TaylorTerm {
  int sign = 1;
  ExponentVector multiplier;
  IndexTuple tuple;

  bool operator==(const TaylorTerm&) const = default;
};

/// Differential of a basis element:
///
///   d a_S = sum_u (-1)^(u-1) x^(lcm(S) - lcm(S\u)) a_(S\u)
///
/// where u runs over the positions 1..|S| of the tuple.  The empty tuple is
/// the module unit and has zero differential.
inline std::vector<TaylorTerm> taylor_differential(const GeneratorSystem& sys,
                                                   const IndexTuple& S) {
  check_tuple(sys, S);
  ExponentVector full = taylor_multidegree(sys, S);
  std::vector<TaylorTerm> out;
  for (std::size_t u = 0; u < S.size(); ++u) {
    IndexTuple rest;
    rest.reserve(S.size() - 1);
    for (std::size_t v = 0; v < S.size(); ++v)
      if (v != u) rest.push_back(S[v]);
    TaylorTerm t;
    t.sign = (u % 2 == 0) ? 1 : -1;
    t.multiplier = full.minus(taylor_multidegree(sys, rest));
    t.tuple = std::move(rest);
    out.push_back(std::move(t));
  }
  return out;
}

/// Product a_S * a_T.  Zero (nullopt) when the tuples share an index;
/// otherwise the shuffle sign times x^(lcm(S)+lcm(T)-lcm(S u T)) a_(S u T).
/// The sign is the parity of the merge: one factor -1 per pair (i,j) with
/// i in S, j in T, i > j.
inline std::optional<TaylorTerm> taylor_product(const GeneratorSystem& sys,
                                                const IndexTuple& S,
                                                const IndexTuple& T) {
  check_tuple(sys, S);
  check_tuple(sys, T);
  int inversions = 0;
  for (int i : S)
    for (int j : T) {
      if (i == j) return std::nullopt;
      if (i > j) ++inversions;
    }
  IndexTuple merged;
  merged.reserve(S.size() + T.size());
  std::merge(S.begin(), S.end(), T.begin(), T.end(),
             std::back_inserter(merged));
  TaylorTerm t;
  t.sign = (inversions % 2 == 0) ? 1 : -1;
  t.multiplier = taylor_multidegree(sys, S)
                     .plus(taylor_multidegree(sys, T))
                     .minus(taylor_multidegree(sys, merged));
  t.tuple = std::move(merged);
  return t;
}

inline std::string tuple_label(const IndexTuple& S, char prefix) {
  if (S.empty()) return "1";
  std::string out;
  for (std::size_t u = 0; u < S.size(); ++u) {
    if (u) out += "^";
    out += prefix + std::to_string(S[u]);
  }
  return out;
}

/// The multidegree-b slice of the Taylor complex, as a chain complex of
/// k-vector spaces.  A basis element a_S contributes exactly when
/// lcm(S) <= b, i.e. when every selected generator fits under b; the slice
/// basis in degree s is therefore all s-subsets of the fitting generators,
/// and every term of the differential survives with coefficient +-1 (the
/// monomial multipliers are absorbed into the slice identification).
template <class F>
ChainComplex<F> taylor_strand(const GeneratorSystem& sys,
                              const ExponentVector& b, F field) {
  if (b.m() != sys.m())
    throw std::invalid_argument("multidegree length does not match system");
  std::vector<int> candidates;
  for (int i = 1; i <= sys.k(); ++i)
    if (sys.generator(i).leq(b)) candidates.push_back(i);
  const int n = static_cast<int>(candidates.size());
  if (n > 24)
    throw std::invalid_argument(
        "multidegree slice spans more than 2^24 basis elements");

  std::vector<std::vector<IndexTuple>> tuples(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IndexTuple S;
    for (int t = 0; t < n; ++t)
      if ((mask >> t) & 1u) S.push_back(candidates[static_cast<std::size_t>(t)]);
    tuples[S.size()].push_back(std::move(S));
  }
  for (auto& level : tuples) std::sort(level.begin(), level.end());

  std::vector<std::vector<std::string>> labels;
  std::vector<std::map<IndexTuple, int>> pos(tuples.size());
  for (std::size_t s = 0; s < tuples.size(); ++s) {
    std::vector<std::string> lv;
    for (std::size_t j = 0; j < tuples[s].size(); ++j) {
      pos[s][tuples[s][j]] = static_cast<int>(j);
      lv.push_back(tuple_label(tuples[s][j], 'a'));
    }
    labels.push_back(std::move(lv));
  }

  std::vector<ExactMatrix<F>> boundaries;
  boundaries.emplace_back(field, 0, static_cast<int>(tuples[0].size()));
  for (std::size_t s = 1; s < tuples.size(); ++s) {
    ExactMatrix<F> d(field, static_cast<int>(tuples[s - 1].size()),
                     static_cast<int>(tuples[s].size()));
    for (std::size_t j = 0; j < tuples[s].size(); ++j)
      for (const TaylorTerm& t : taylor_differential(sys, tuples[s][j]))
        d.at(pos[s - 1].at(t.tuple), static_cast<int>(j)) =
            field.from_int(t.sign);
    boundaries.push_back(std::move(d));
  }
  return ChainComplex<F>(field, 0, std::move(labels), std::move(boundaries));
}

/// Exactness of the multidegree-b slice: the Taylor complex resolves
/// k[x]/I, so H_0 of the slice is 1-dimensional exactly when x^b is not in
/// the ideal (no generator divides x^b) and all higher homology vanishes.
struct ExactnessReport {
  int h0_expected = 0;
  int h0_actual = 0;
  bool higher_vanish = true;

  bool passed() const {
    return h0_expected == h0_actual && higher_vanish;
  }
};

template <class F>
ExactnessReport verify_exactness(const GeneratorSystem& sys,
                                 const ExponentVector& b, F field) {
  bool in_ideal = false;
  for (int i = 1; i <= sys.k(); ++i)
    if (sys.generator(i).leq(b)) {
      in_ideal = true;
      break;
    }
  ExactnessReport rep;
  rep.h0_expected = in_ideal ? 0 : 1;
  std::map<int, int> h = taylor_strand(sys, b, field).homology_dims();
  for (const auto& [q, d] : h) {
    if (q == 0) rep.h0_actual = d;
    else if (d != 0) rep.higher_vanish = false;
  }
  return rep;
}

/// Every multidegree b with 0 <= b <= cap coordinatewise, in odometer order.
/// With cap the generator systems' exponent_cap this is the full sweep needed
/// to certify exactness: slices above the cap repeat lower ones.
inline std::vector<ExponentVector> multidegrees_upto(const ExponentVector& cap) {
  std::vector<ExponentVector> out;
  std::vector<int> b(static_cast<std::size_t>(cap.m()), 0);
  while (true) {
    out.push_back(ExponentVector(b));
    int j = 0;
    while (j < cap.m() && b[static_cast<std::size_t>(j)] == cap.at(j + 1)) {
      b[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == cap.m()) break;
    ++b[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace zktor
