#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zktor/complexes.hpp"
#include "zktor/hochster.hpp"
#include "zktor/lambda.hpp"
#include "zktor/moment_angle.hpp"
#include "zktor/taylor.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

/// Outcome of a randomized verification suite.  Failure messages are kept
/// (capped) so a failing run can say which instance broke and how.
struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;

  bool ok() const { return failures == 0; }

  void fail(const std::string& message) {
    ++failures;
    if (messages.size() < 20) messages.push_back(message);
  }
};

namespace detail {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
}

/// Random complement: up to k_max generators, each a uniformly sized random
/// nonempty subset of [m].  Duplicates and nested generators arise naturally,
/// which is exactly what the invariance suites want to see.
inline SimplicialComplement random_complement(Rng& rng, int m, int k) {
  std::vector<VertexSet> gens;
  for (int i = 0; i < k; ++i) {
    int size = uniform(rng, 1, m);
    std::vector<int> pool;
    for (int v = 1; v <= m; ++v) pool.push_back(v);
    std::vector<int> pick;
    for (int s = 0; s < size; ++s) {
      int j = uniform(rng, 0, static_cast<int>(pool.size()) - 1);
      pick.push_back(pool[static_cast<std::size_t>(j)]);
      pool.erase(pool.begin() + j);
    }
    gens.push_back(VertexSet::from_members(m, pick));
  }
  return SimplicialComplement(m, std::move(gens));
}

inline PoincarePolynomial random_series(Rng& rng, bool allow_zero = true) {
  if (allow_zero && uniform(rng, 0, 3) == 0) return PoincarePolynomial::zero();
  int deg = uniform(rng, 0, 3);
  std::vector<long long> coeffs;
  for (int d = 0; d <= deg; ++d) coeffs.push_back(uniform(rng, 0, 2));
  return PoincarePolynomial(std::move(coeffs));
}

inline std::string describe(const SimplicialComplement& P) {
  std::string out = "m=" + std::to_string(P.ambient()) + " P=[";
  for (int i = 1; i <= P.k(); ++i) {
    if (i > 1) out += ",";
    out += P.generator(i).to_string();
  }
  return out + "]";
}

}  // namespace detail

/// Quotient-complex route vs subcomplex-cohomology route on random
/// complements (equivalently, on the random complexes they present).
template <class F>
SuiteReport hochster_suite(int m_max, int trials, std::uint64_t seed,
                           F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "hochster agreement (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, m_max);
    SimplicialComplement P =
        detail::random_complement(rng, m, detail::uniform(rng, 0, 6));
    ++rep.trials;
    std::vector<Discrepancy> bad = compare_with_lambda(P, field);
    if (!bad.empty())
      rep.fail(detail::describe(P) + ": " +
               std::to_string(bad.size()) + " cells disagree, first at q=" +
               std::to_string(bad.front().q) + " sigma=" +
               bad.front().sigma.to_string());
  }
  return rep;
}

/// Exactness of every multidegree slice of the Taylor complex of random
/// monomial systems (m <= 4, k <= 5, exponents <= 2), swept up to the
/// coordinatewise exponent cap.
template <class F>
SuiteReport taylor_suite(int trials, std::uint64_t seed, F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "taylor exactness (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, 4);
    int k = detail::uniform(rng, 1, 5);
    std::vector<ExponentVector> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> e(static_cast<std::size_t>(m));
      bool nonzero = false;
      while (!nonzero) {
        for (int j = 0; j < m; ++j) {
          e[static_cast<std::size_t>(j)] = detail::uniform(rng, 0, 2);
          if (e[static_cast<std::size_t>(j)] != 0) nonzero = true;
        }
      }
      gens.push_back(ExponentVector(e));
    }
    GeneratorSystem sys(m, std::move(gens));
    ++rep.trials;
    bool good = true;
    ExponentVector failed_at = ExponentVector::zero(m);
    for (const ExponentVector& b : multidegrees_upto(sys.exponent_cap())) {
      if (!verify_exactness(sys, b, field).passed()) {
        good = false;
        failed_at = b;
        break;
      }
    }
    if (!good)
      rep.fail("system of " + std::to_string(k) + " generators in m=" +
               std::to_string(m) + " fails at b=" + failed_at.to_string());
  }
  return rep;
}

/// The bigraded table must not change under minimalization, permutation of
/// the generator order, or appending a redundant (containing or duplicate)
/// generator.
template <class F>
SuiteReport equivalence_suite(int trials, std::uint64_t seed, F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "presentation invariance (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, 8);
    SimplicialComplement P =
        detail::random_complement(rng, m, detail::uniform(rng, 1, 6));
    ++rep.trials;
    BettiTable base = bigraded_betti(P, field);

    if (!bigraded_betti(minimalize(P), field).same_entries(base)) {
      rep.fail(detail::describe(P) + ": table changed under minimalize");
      continue;
    }

    std::vector<VertexSet> shuffled = P.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (!bigraded_betti(SimplicialComplement(m, shuffled), field)
             .same_entries(base)) {
      rep.fail(detail::describe(P) + ": table changed under permutation");
      continue;
    }

    std::vector<VertexSet> extended = P.generators();
    VertexSet extra = P.generator(detail::uniform(rng, 1, P.k()));
    if (detail::uniform(rng, 0, 1) == 1) {
      // Grow the chosen generator into a proper superset when possible.
      std::vector<int> outside = extra.complement().members();
      if (!outside.empty())
        extra = extra.unite(VertexSet(
            m, {outside[static_cast<std::size_t>(detail::uniform(
                   rng, 0, static_cast<int>(outside.size()) - 1))]}));
    }
    extended.push_back(extra);
    if (!bigraded_betti(SimplicialComplement(m, extended), field)
             .same_entries(base))
      rep.fail(detail::describe(P) + ": table changed under redundant append");
  }
  return rep;
}

/// Link identity: for a face omega of the complex presented by P, the
/// ([m] \ omega)-strand homology of the compressed complement matches the
/// reduced cohomology of link(omega) under j = m - |omega| - q - 1.  For a
/// random non-face the compressed strand must vanish outright.
template <class F>
SuiteReport link_identity_suite(int m_max, int trials, std::uint64_t seed,
                                F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "link identity (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, m_max);
    SimplicialComplement P =
        detail::random_complement(rng, m, detail::uniform(rng, 0, 6));
    SimplicialComplex K = complex_from_complement(P);
    std::vector<VertexSet> faces = K.faces();
    VertexSet omega =
        faces[static_cast<std::size_t>(detail::uniform(
            rng, 0, static_cast<int>(faces.size()) - 1))];
    ++rep.trials;

    std::map<int, long> via_strand = link_cohomology(P, omega, field);
    std::map<int, long> via_link = reduced_cohomology(link(K, omega), field);
    if (via_strand != via_link) {
      rep.fail(detail::describe(P) + " omega=" + omega.to_string() +
               ": strand route disagrees with link cohomology");
      continue;
    }

    // A random subset that is not a face: compression swallows a generator
    // and the strand section must be identically zero.
    VertexSet rho(m);
    for (int v = 1; v <= m; ++v)
      if (detail::uniform(rng, 0, 1)) rho = rho.unite(VertexSet(m, {v}));
    if (!K.is_face(rho) && !link_cohomology(P, rho, field).empty())
      rep.fail(detail::describe(P) + " rho=" + rho.to_string() +
               ": non-face has nonvanishing strand section");
  }
  return rep;
}

/// The subset-sweep form and the face-sweep form of the polyhedral-product
/// series must agree (the sweep runs unpruned so the vanishing of non-face
/// strata is computed, not assumed).
template <class F>
SuiteReport ma_form_suite(int trials, std::uint64_t seed, F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "series form equivalence (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, 7);
    SimplicialComplement P =
        detail::random_complement(rng, m, detail::uniform(rng, 0, 6));
    std::vector<PoincarePolynomial> X, A;
    for (int v = 0; v < m; ++v) {
      X.push_back(detail::random_series(rng));
      A.push_back(detail::random_series(rng));
    }
    PairFamily pairs(std::move(X), std::move(A));
    ++rep.trials;
    MASeriesReport all =
        ma_poincare(P, pairs, field, /*exhaustive_omega=*/true);
    MASeriesReport faces = ma_poincare_over_K(P, pairs, field);
    if (!(all.total == faces.total) || all.total_betti != faces.total_betti)
      rep.fail(detail::describe(P) + ": subset sweep " +
               all.total.to_string('t') + " vs face sweep " +
               faces.total.to_string('t'));
  }
  return rep;
}

/// The three closed-form specializations must drop out of the general
/// assembly: contractible A (face count series), (D^2,S^1) (the classical
/// moment-angle series), and (S^2,S^1) (the stratified series).
template <class F>
SuiteReport specialization_suite(int trials, std::uint64_t seed, F field) {
  detail::Rng rng(seed);
  SuiteReport rep;
  rep.name = "specialization coherence (" + field.spec().name() + ")";
  for (int t = 0; t < trials; ++t) {
    int m = detail::uniform(rng, 1, 7);
    SimplicialComplement P =
        detail::random_complement(rng, m, detail::uniform(rng, 0, 6));
    ++rep.trials;

    std::vector<PoincarePolynomial> X;
    for (int v = 0; v < m; ++v)
      X.push_back(detail::random_series(rng, /*allow_zero=*/false));
    PairFamily contractible_a(
        X, std::vector<PoincarePolynomial>(static_cast<std::size_t>(m)));
    PoincarePolynomial general =
        ma_poincare(P, contractible_a, field).total;
    PoincarePolynomial closed = contractible_A_series(P, contractible_a, field);
    if (!(general == closed)) {
      rep.fail(detail::describe(P) + ": contractible-A form " +
               closed.to_string('t') + " vs general " +
               general.to_string('t'));
      continue;
    }

    PairFamily d2s1 = PairFamily::uniform(m, PoincarePolynomial::zero(),
                                          PoincarePolynomial::monomial(1));
    if (!(ma_poincare(P, d2s1, field).total == zk_series(P, field))) {
      rep.fail(detail::describe(P) + ": (D2,S1) specialization mismatch");
      continue;
    }

    PairFamily s2s1 = PairFamily::uniform(m, PoincarePolynomial::monomial(2),
                                          PoincarePolynomial::monomial(1));
    if (!(ma_poincare(P, s2s1, field).total == s2s1_series(P, field)))
      rep.fail(detail::describe(P) + ": (S2,S1) specialization mismatch");
  }
  return rep;
}

}  // namespace zktor
