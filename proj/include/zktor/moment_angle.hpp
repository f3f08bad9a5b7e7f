#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zktor/complexes.hpp"
#include "zktor/lambda.hpp"
#include "zktor/poincare.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

/// One (X_i, A_i) pair per vertex, each given by the Poincare polynomial of
/// its reduced cohomology: X[i] for the ambient space, A[i] for the subspace.
/// The zero polynomial encodes a space with no reduced cohomology (a
/// contractible factor); nonnegative coefficients are required.
struct PairFamily {
  std::vector<PoincarePolynomial> X;  // index 0 <-> vertex 1
  std::vector<PoincarePolynomial> A;

  PairFamily() = default;

  PairFamily(std::vector<PoincarePolynomial> x,
             std::vector<PoincarePolynomial> a)
      : X(std::move(x)), A(std::move(a)) {
    if (X.size() != A.size())
      throw std::invalid_argument("pair family needs matching X and A lists");
    for (const PoincarePolynomial& p : X) check_coeffs(p);
    for (const PoincarePolynomial& p : A) check_coeffs(p);
  }

  int m() const { return static_cast<int>(X.size()); }

  /// Same polynomial pair at every vertex.
  static PairFamily uniform(int m, PoincarePolynomial x,
                            PoincarePolynomial a) {
    return PairFamily(std::vector<PoincarePolynomial>(
                          static_cast<std::size_t>(m), std::move(x)),
                      std::vector<PoincarePolynomial>(
                          static_cast<std::size_t>(m), std::move(a)));
  }

  const PoincarePolynomial& x_at(int v) const {  // 1-based vertex
    return X.at(static_cast<std::size_t>(v - 1));
  }
  const PoincarePolynomial& a_at(int v) const {
    return A.at(static_cast<std::size_t>(v - 1));
  }

private:
  static void check_coeffs(const PoincarePolynomial& p) {
    for (long long c : p.coefficients())
      if (c < 0)
        throw std::invalid_argument(
            "cohomology series must have nonnegative coefficients");
  }
};

/// One additive contribution to a polyhedral-product cohomology series: the
/// stratum omega, the bigraded position (q, sigma) in the compressed table,
/// its dimension, and the polynomial it adds to the total.
struct MAContribution {
  VertexSet omega;
  VertexSet sigma;
  int q = 0;
  long dim = 0;
  PoincarePolynomial added;
};

/// Assembled cohomology series of a polyhedral product, with the audit trail
/// of every contribution.  total = unit_term + sum of ledger terms; the unit
/// term is the (omega,sigma,q) = ({},{},0) cell, which is 1 for any honest
/// complement.  The series is valid under the stated hypotheses only; they
/// cannot be checked from dimension data, hence the note travels with every
/// report.
struct MASeriesReport {
  PoincarePolynomial total;
  long long total_betti = 0;
  long long unit_term = 0;
  std::vector<MAContribution> ledger;
  std::string hypotheses;

  static const char* standard_hypotheses() {
    return "valid when each inclusion A_i -> X_i is null-homotopic and all "
           "reduced cohomologies are free over the coefficient ring; these "
           "hypotheses are not checked by this computation";
  }
};

/// Cohomology series of the polyhedral product Z_K(X,A) over the complex
/// associated with P.  For each stratum omega the compressed complement's
/// bigraded table is consulted at supports sigma inside the remaining
/// vertices, and each cell (q, sigma, dim) contributes
///
///     dim * t^(|sigma|-q) * prod_{i in omega} X_i * prod_{j in sigma} A_j.
///
/// By default omega ranges over subsets of [m] that contain no generator
/// (precisely the faces of the complex -- compression would otherwise leave
/// an empty generator and kill the whole table); `exhaustive_omega` disables
/// that pruning so every subset is processed and the vanishing is computed
/// rather than reasoned about.
template <class F>
MASeriesReport ma_poincare(const SimplicialComplement& P,
                           const PairFamily& pairs, F field,
                           bool exhaustive_omega = false) {
  const int m = P.ambient();
  if (pairs.m() != m)
    throw std::invalid_argument("pair family size does not match m");
  if (m > 24)
    throw std::invalid_argument("stratum sweep over 2^m needs m <= 24");

  MASeriesReport report;
  report.hypotheses = MASeriesReport::standard_hypotheses();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    VertexSet omega = SimplicialComplex::from_mask(m, mask);
    if (!exhaustive_omega) {
      bool swallowed = false;
      for (const VertexSet& g : P.generators())
        if (g.subset_of(omega)) {
          swallowed = true;
          break;
        }
      if (swallowed) continue;
    }
    PoincarePolynomial x_prod = PoincarePolynomial::one();
    for (int v : omega.members()) x_prod = x_prod * pairs.x_at(v);
    if (x_prod.is_zero()) continue;

    BettiTable table = bigraded_betti(compress(P, omega), field);
    for (const auto& [key, dim] : table.entries) {
      if (!key.sigma.disjoint_from(omega))
        throw std::logic_error("compressed table met the stratum");
      PoincarePolynomial a_prod = PoincarePolynomial::one();
      for (int v : key.sigma.members()) a_prod = a_prod * pairs.a_at(v);
      if (a_prod.is_zero()) continue;
      PoincarePolynomial added =
          PoincarePolynomial::monomial(key.sigma.size() - key.q, dim) *
          x_prod * a_prod;
      if (added.is_zero()) continue;
      if (omega.empty() && key.sigma.empty() && key.q == 0) {
        report.unit_term += added.coeff(0);
        report.total += added;
        continue;
      }
      report.ledger.push_back(
          MAContribution{omega, key.sigma, key.q, dim, added});
      report.total += added;
    }
  }
  report.total_betti = report.total.sum();
  return report;
}

/// Same series computed the other way around: iterate over the faces of the
/// associated complex K (obtained from P by transversal enumeration) rather
/// than over subsets of [m].  Agreement of the two routes is one of the
/// library's standing verification checks.
template <class F>
MASeriesReport ma_poincare_over_K(const SimplicialComplement& P,
                                  const PairFamily& pairs, F field) {
  const int m = P.ambient();
  if (pairs.m() != m)
    throw std::invalid_argument("pair family size does not match m");
  SimplicialComplex K = complex_from_complement(P);

  MASeriesReport report;
  report.hypotheses = MASeriesReport::standard_hypotheses();
  for (const VertexSet& omega : K.faces()) {
    PoincarePolynomial x_prod = PoincarePolynomial::one();
    for (int v : omega.members()) x_prod = x_prod * pairs.x_at(v);
    if (x_prod.is_zero()) continue;

    BettiTable table = bigraded_betti(compress(P, omega), field);
    for (const auto& [key, dim] : table.entries) {
      PoincarePolynomial a_prod = PoincarePolynomial::one();
      for (int v : key.sigma.members()) a_prod = a_prod * pairs.a_at(v);
      if (a_prod.is_zero()) continue;
      PoincarePolynomial added =
          PoincarePolynomial::monomial(key.sigma.size() - key.q, dim) *
          x_prod * a_prod;
      if (added.is_zero()) continue;
      if (omega.empty() && key.sigma.empty() && key.q == 0) {
        report.unit_term += added.coeff(0);
        report.total += added;
        continue;
      }
      report.ledger.push_back(
          MAContribution{omega, key.sigma, key.q, dim, added});
      report.total += added;
    }
  }
  report.total_betti = report.total.sum();
  return report;
}

/// Specialization with every A_i contractible: only sigma = {} cells survive
/// and the series collapses to the face-ring count sum_{omega in K} prod X_i.
/// Computed directly from the face list as an independent cross-check.
template <class F>
PoincarePolynomial contractible_A_series(const SimplicialComplement& P,
                                         const PairFamily& pairs, F) {
  const int m = P.ambient();
  if (pairs.m() != m)
    throw std::invalid_argument("pair family size does not match m");
  SimplicialComplex K = complex_from_complement(P);
  PoincarePolynomial out;
  for (const VertexSet& omega : K.faces()) {
    PoincarePolynomial x_prod = PoincarePolynomial::one();
    for (int v : omega.members()) x_prod = x_prod * pairs.x_at(v);
    out += x_prod;
  }
  return out;
}

/// Series of the classical moment-angle complex (each pair (D^2, S^1)):
/// every bigraded cell contributes t^(2|sigma|-q).  Only omega = {} has
/// nonvanishing X-product, so this reads the table of P itself.
template <class F>
PoincarePolynomial zk_series(const SimplicialComplement& P, F field) {
  PoincarePolynomial out;
  for (const auto& [key, dim] : bigraded_betti(P, field).entries)
    out += PoincarePolynomial::monomial(2 * key.sigma.size() - key.q, dim);
  return out;
}

/// The contribution of one stratum omega to the (S^2, S^1) product: each
/// cell of the compressed table adds dim * t^(2|omega|+2|sigma|-q).
template <class F>
PoincarePolynomial stratum_series(const SimplicialComplement& P,
                                  const VertexSet& omega, F field) {
  if (omega.ambient() != P.ambient())
    throw std::invalid_argument("omega ambient does not match complement");
  PoincarePolynomial out;
  BettiTable table = bigraded_betti(compress(P, omega), field);
  for (const auto& [key, dim] : table.entries)
    out += PoincarePolynomial::monomial(
        2 * omega.size() + 2 * key.sigma.size() - key.q, dim);
  return out;
}

/// Series of the (S^2, S^1) polyhedral product: sum of the stratum series
/// over the faces of the associated complex.
template <class F>
PoincarePolynomial s2s1_series(const SimplicialComplement& P, F field) {
  SimplicialComplex K = complex_from_complement(P);
  PoincarePolynomial out;
  for (const VertexSet& omega : K.faces())
    out += stratum_series(P, omega, field);
  return out;
}

}  // namespace zktor
