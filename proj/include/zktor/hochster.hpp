#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zktor/chain_complex.hpp"
#include "zktor/complexes.hpp"
#include "zktor/lambda.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

namespace detail {

/// Augmented simplicial chain complex of a downward-closed face list (which
/// must contain the empty face).  Degree j holds the faces of size j+1, so
/// the range starts at -1 with the empty-face slot; the boundary drops one
/// vertex at a time with sign (-1)^position in the ascending vertex order.
template <class F>
ChainComplex<F> chain_complex_of_faces(int m,
                                       const std::vector<VertexSet>& faces,
                                       F field) {
  int dim = -1;
  for (const VertexSet& f : faces) dim = std::max(dim, f.size() - 1);
  std::vector<std::vector<VertexSet>> by_dim(static_cast<std::size_t>(dim) + 2);
  for (const VertexSet& f : faces)
    by_dim[static_cast<std::size_t>(f.size())].push_back(f);
  for (auto& level : by_dim)
    std::sort(level.begin(), level.end(), CanonicalLess{});

  std::vector<std::map<std::uint64_t, int>> pos(by_dim.size());
  std::vector<std::vector<std::string>> labels;
  for (std::size_t s = 0; s < by_dim.size(); ++s) {
    std::vector<std::string> lv;
    for (std::size_t j = 0; j < by_dim[s].size(); ++j) {
      pos[s][by_dim[s][j].mask()] = static_cast<int>(j);
      lv.push_back(by_dim[s][j].to_string());
    }
    labels.push_back(std::move(lv));
  }

  std::vector<ExactMatrix<F>> boundaries;
  boundaries.emplace_back(field, 0, static_cast<int>(by_dim[0].size()));
  for (std::size_t s = 1; s < by_dim.size(); ++s) {
    ExactMatrix<F> d(field, static_cast<int>(by_dim[s - 1].size()),
                     static_cast<int>(by_dim[s].size()));
    for (std::size_t j = 0; j < by_dim[s].size(); ++j) {
      std::vector<int> mem = by_dim[s][j].members();
      for (std::size_t u = 0; u < mem.size(); ++u) {
        VertexSet sub = by_dim[s][j].minus(VertexSet(m, {mem[u]}));
        int sign = (u % 2 == 0) ? 1 : -1;
        d.at(pos[s - 1].at(sub.mask()), static_cast<int>(j)) =
            field.from_int(sign);
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex<F>(field, -1, std::move(labels), std::move(boundaries));
}

}  // namespace detail

/// Augmented (reduced) chain complex of K, degrees -1..dim(K).
template <class F>
ChainComplex<F> reduced_chain_complex(const SimplicialComplex& K, F field) {
  return detail::chain_complex_of_faces(K.ambient(), K.faces(), field);
}

/// Reduced cohomology dimensions of K over the field, indexed by cohomological
/// degree; only nonzero entries appear.  Over a field the dimensions agree
/// with reduced homology (rank of a matrix equals rank of its transpose), so
/// they are read off the augmented chain complex.  The complex {{}} has
/// one-dimensional reduced cohomology in degree -1; a point has none.
template <class F>
std::map<int, long> reduced_cohomology(const SimplicialComplex& K, F field) {
  std::map<int, long> out;
  for (const auto& [j, d] : reduced_chain_complex(K, field).homology_dims())
    if (d != 0) out[j] = d;
  return out;
}

/// The bigraded table of K's face ring computed the classical way: the
/// (q, sigma) entry is dim of reduced H^(|sigma|-q-1) of the full subcomplex
/// on sigma.  Every sigma in [m] is visited; faces of K contribute nothing
/// because their full subcomplexes are simplices -- that comes out of the
/// computation rather than being assumed.  The resulting table is the
/// independent oracle the quotient-complex route is checked against.
template <class F>
BettiTable hochster_bigraded(const SimplicialComplex& K, F field) {
  const int m = K.ambient();
  if (m > 24)
    throw std::invalid_argument("subset sweep over 2^m needs m <= 24");
  std::vector<VertexSet> faces = K.faces();
  BettiTable table{field.spec(), {}};
  table.entries[BettiKey{0, VertexSet(m)}] = 1;  // Tor_0 = ground field
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    VertexSet sigma = SimplicialComplex::from_mask(m, mask);
    std::vector<VertexSet> sub;
    for (const VertexSet& f : faces)
      if (f.subset_of(sigma)) sub.push_back(f);
    ChainComplex<F> chain = detail::chain_complex_of_faces(m, sub, field);
    for (const auto& [j, d] : chain.homology_dims()) {
      if (d == 0) continue;
      int q = sigma.size() - j - 1;
      // j = |sigma|-1 would need the full simplex on sigma, which is
      // contractible; anything landing there signals a broken boundary.
      if (q < 1)
        throw std::logic_error("full subcomplex has top-degree cohomology");
      table.entries[BettiKey{q, sigma}] = d;
    }
  }
  return table;
}

/// One cell of disagreement between the two routes to the bigraded table.
struct Discrepancy {
  int q = 0;
  VertexSet sigma;
  long lambda_dim = 0;
  long hochster_dim = 0;
};

/// Compare the quotient-complex table of P with the subcomplex-cohomology
/// table of the associated complex.  Empty result means full agreement.
template <class F>
std::vector<Discrepancy> compare_with_lambda(const SimplicialComplement& P,
                                             F field) {
  BettiTable lhs = bigraded_betti(P, field);
  BettiTable rhs = hochster_bigraded(complex_from_complement(P), field);
  std::vector<Discrepancy> out;
  for (const auto& [key, dim] : lhs.entries)
    if (rhs.entry(key.q, key.sigma) != dim)
      out.push_back(Discrepancy{key.q, key.sigma, dim,
                                rhs.entry(key.q, key.sigma)});
  for (const auto& [key, dim] : rhs.entries)
    if (lhs.entry(key.q, key.sigma) != dim && lhs.entry(key.q, key.sigma) == 0)
      out.push_back(Discrepancy{key.q, key.sigma,
                                lhs.entry(key.q, key.sigma), dim});
  return out;
}

}  // namespace zktor
