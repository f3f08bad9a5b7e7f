#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zktor/chain_complex.hpp"
#include "zktor/complexes.hpp"
#include "zktor/fields.hpp"
#include "zktor/matrix.hpp"
#include "zktor/poincare.hpp"
#include "zktor/vertex_set.hpp"

namespace zktor {

/// Quotient of the Taylor complex by the maximal ideal: basis elements are
/// still index tuples, but coefficients live in the ground field and a term
/// of the differential survives only when dropping the index does not shrink
/// the union of the selected generator supports.  The complex splits as a
/// direct sum of strands, one per achievable union ("support"), and H_q of
/// the sigma-strand is the bigraded Tor module in homological degree q and
/// squarefree multidegree sigma.

using IndexTuple = std::vector<int>;

inline void check_lambda_tuple(const SimplicialComplement& P,
                               const IndexTuple& S) {
  for (std::size_t u = 0; u < S.size(); ++u) {
    if (S[u] < 1 || S[u] > P.k())
      throw std::invalid_argument("tuple index out of range");
    if (u > 0 && S[u - 1] >= S[u])
      throw std::invalid_argument("tuple must be strictly increasing");
  }
}

/// Union of the supports of the selected generators; {} for the empty tuple.
inline VertexSet lambda_support(const SimplicialComplement& P,
                                const IndexTuple& S) {
  check_lambda_tuple(P, S);
  VertexSet u(P.ambient());
  for (int i : S) u = u.unite(P.generator(i));
  return u;
}

/// All achievable supports (unions of subfamilies of generators), canonically
/// ordered.  Computed as the union-closure of {{}} under the generators, so
/// the cost is proportional to the answer, not to 2^k.
inline std::vector<VertexSet> lambda_supports(const SimplicialComplement& P) {
  std::set<std::uint64_t> seen = {0};
  std::vector<std::uint64_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t mask : frontier)
      for (const VertexSet& g : P.generators()) {
        std::uint64_t u = mask | g.mask();
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (std::uint64_t mask : seen)
    out.push_back(SimplicialComplex::from_mask(P.ambient(), mask));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

namespace detail {

inline std::string tuple_label_s(const IndexTuple& S) {
  if (S.empty()) return "1";
  std::string out;
  for (std::size_t u = 0; u < S.size(); ++u) {
    if (u) out += "^";
    out += "s" + std::to_string(S[u]);
  }
  return out;
}

/// Strand basis and chain complex together; the tuple lists are needed again
/// when multiplying homology classes.
template <class F>
struct StrandData {
  VertexSet support;
  std::vector<std::vector<IndexTuple>> tuples;  // by homological degree
  std::map<IndexTuple, std::pair<int, int>> position;  // tuple -> (q, index)
  ChainComplex<F> complex;
};

template <class F>
StrandData<F> strand_data(const SimplicialComplement& P,
                          const VertexSet& sigma, F field) {
  if (sigma.ambient() != P.ambient())
    throw std::invalid_argument("support ambient does not match complement");
  std::vector<int> candidates;
  for (int i = 1; i <= P.k(); ++i)
    if (P.generator(i).subset_of(sigma)) candidates.push_back(i);
  const int n = static_cast<int>(candidates.size());
  if (n > 24)
    throw std::invalid_argument(
        "strand spans more than 2^24 candidate tuples");

  std::vector<std::vector<IndexTuple>> tuples(1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet u(P.ambient());
    IndexTuple S;
    for (int t = 0; t < n; ++t)
      if ((mask >> t) & 1u) {
        int i = candidates[static_cast<std::size_t>(t)];
        S.push_back(i);
        u = u.unite(P.generator(i));
      }
    if (!(u == sigma)) continue;
    if (S.size() >= tuples.size()) tuples.resize(S.size() + 1);
    tuples[S.size()].push_back(std::move(S));
  }
  for (auto& level : tuples) std::sort(level.begin(), level.end());

  std::map<IndexTuple, std::pair<int, int>> position;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t q = 0; q < tuples.size(); ++q) {
    std::vector<std::string> lv;
    for (std::size_t j = 0; j < tuples[q].size(); ++j) {
      position[tuples[q][j]] = {static_cast<int>(q), static_cast<int>(j)};
      lv.push_back(tuple_label_s(tuples[q][j]));
    }
    labels.push_back(std::move(lv));
  }

  std::vector<ExactMatrix<F>> boundaries;
  boundaries.emplace_back(field, 0, static_cast<int>(tuples[0].size()));
  for (std::size_t q = 1; q < tuples.size(); ++q) {
    ExactMatrix<F> d(field, static_cast<int>(tuples[q - 1].size()),
                     static_cast<int>(tuples[q].size()));
    for (std::size_t j = 0; j < tuples[q].size(); ++j) {
      const IndexTuple& S = tuples[q][j];
      for (std::size_t u = 0; u < S.size(); ++u) {
        IndexTuple rest;
        rest.reserve(S.size() - 1);
        VertexSet rest_union(P.ambient());
        for (std::size_t v = 0; v < S.size(); ++v)
          if (v != u) {
            rest.push_back(S[v]);
            rest_union = rest_union.unite(P.generator(S[v]));
          }
        if (!(rest_union == sigma)) continue;  // multiplier would vanish
        int sign = (u % 2 == 0) ? 1 : -1;
        auto it = position.find(rest);
        d.at(it->second.second, static_cast<int>(j)) = field.from_int(sign);
      }
    }
    boundaries.push_back(std::move(d));
  }

  return StrandData<F>{sigma, std::move(tuples), std::move(position),
                       ChainComplex<F>(field, 0, std::move(labels),
                                       std::move(boundaries))};
}

}  // namespace detail

/// The sigma-strand as a chain complex.  Basis labels are "1" for the unit
/// and "s1^s4" style tuples otherwise; degree q holds the q-tuples whose
/// supports union to sigma.  The differential drops one index at a time with
/// sign (-1)^(u-1), keeping only the union-preserving terms.
template <class F>
ChainComplex<F> build_strand(const SimplicialComplement& P,
                             const VertexSet& sigma, F field) {
  return detail::strand_data(P, sigma, field).complex;
}

/// Bigraded dimension table: (homological degree q, squarefree multidegree
/// sigma) -> dim over the chosen field.  Only nonzero entries are stored.
struct BettiKey {
  int q = 0;
  VertexSet sigma;

  bool operator==(const BettiKey&) const = default;
};

struct BettiKeyLess {
  bool operator()(const BettiKey& a, const BettiKey& b) const {
    if (a.q != b.q) return a.q < b.q;
    return canonical_less(a.sigma, b.sigma);
  }
};

struct BettiTable {
  FieldSpec field;
  std::map<BettiKey, long, BettiKeyLess> entries;

  long entry(int q, const VertexSet& sigma) const {
    auto it = entries.find(BettiKey{q, sigma});
    return it == entries.end() ? 0 : it->second;
  }

  long long total() const {
    long long t = 0;
    for (const auto& [k, v] : entries) t += v;
    return t;
  }

  /// Sum over multidegrees: coefficient of x^q is the total dimension in
  /// homological degree q.
  PoincarePolynomial poincare() const {
    PoincarePolynomial p;
    for (const auto& [k, v] : entries)
      p += PoincarePolynomial::monomial(k.q, v);
    return p;
  }

  bool same_entries(const BettiTable& o) const { return entries == o.entries; }
};

/// Full bigraded table of the complement: homology of every strand.  A
/// complement containing an empty generator presents the unit ideal and
/// every strand is exact, so the table comes out empty -- by computation,
/// not by special-casing.
template <class F>
BettiTable bigraded_betti(const SimplicialComplement& P, F field) {
  BettiTable table{field.spec(), {}};
  for (const VertexSet& sigma : lambda_supports(P)) {
    ChainComplex<F> strand = build_strand(P, sigma, field);
    for (const auto& [q, d] : strand.homology_dims())
      if (d != 0) table.entries[BettiKey{q, sigma}] = d;
  }
  return table;
}

template <class F>
PoincarePolynomial tor_poincare(const SimplicialComplement& P, F field) {
  return bigraded_betti(P, field).poincare();
}

/// Product of two basis tuples in the quotient complex.  Nonzero only when
/// the tuples share no index and their supports are disjoint (otherwise the
/// monomial multiplier is annihilated); then it is the merged tuple with the
/// shuffle sign.
inline std::optional<std::pair<int, IndexTuple>> wedge_product(
    const SimplicialComplement& P, const IndexTuple& S, const IndexTuple& T) {
  check_lambda_tuple(P, S);
  check_lambda_tuple(P, T);
  if (!lambda_support(P, S).disjoint_from(lambda_support(P, T)))
    return std::nullopt;
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
  return std::make_pair(inversions % 2 == 0 ? 1 : -1, std::move(merged));
}

/// One homology class in the table: position `index` within the canonical
/// representative basis of H_q of the sigma-strand.
struct TorClass {
  int q = 0;
  VertexSet sigma;
  int index = 0;
  std::string label;

  bool operator==(const TorClass&) const = default;
};

/// Multiplication table of the Tor algebra.  `classes` lists all homology
/// classes in canonical order; products maps an ordered pair of class
/// positions to the coordinate vector of their product in the basis at
/// (q1+q2, sigma1 u sigma2) -- an empty vector when that group is zero.
template <class F>
struct ProductTable {
  using Elem = typename F::Elem;

  std::vector<TorClass> classes;
  std::map<BettiKey, std::pair<int, int>, BettiKeyLess> blocks;  // -> (first, count)
  std::map<std::pair<int, int>, std::vector<Elem>> products;

  int class_count() const { return static_cast<int>(classes.size()); }

  const std::vector<Elem>& product(int a, int b) const {
    return products.at({a, b});
  }
};

template <class F>
ProductTable<F> tor_product_table(const SimplicialComplement& P, F field) {
  using Elem = typename F::Elem;
  std::vector<detail::StrandData<F>> strands;
  std::vector<HomologyBasis<F>> bases;
  for (const VertexSet& sigma : lambda_supports(P)) {
    strands.push_back(detail::strand_data(P, sigma, field));
    bases.push_back(strands.back().complex.homology_representatives());
  }

  ProductTable<F> table;
  std::map<std::uint64_t, int> strand_of;  // support mask -> strand position
  for (std::size_t s = 0; s < strands.size(); ++s) {
    strand_of[strands[s].support.mask()] = static_cast<int>(s);
    for (int q = strands[s].complex.min_degree();
         q <= strands[s].complex.max_degree(); ++q) {
      int h = bases[s].dim(q);
      if (h == 0) continue;
      table.blocks[BettiKey{q, strands[s].support}] = {table.class_count(), h};
      for (int i = 0; i < h; ++i) {
        std::string label = strands[s].support.to_string() + ":q" +
                            std::to_string(q) + "#" + std::to_string(i);
        table.classes.push_back(TorClass{q, strands[s].support, i, label});
      }
    }
  }
  // Re-sort classes canonically (by degree, then support, then index) and
  // rebuild the block offsets accordingly.
  std::sort(table.classes.begin(), table.classes.end(),
            [](const TorClass& a, const TorClass& b) {
              BettiKeyLess less;
              BettiKey ka{a.q, a.sigma}, kb{b.q, b.sigma};
              if (less(ka, kb)) return true;
              if (less(kb, ka)) return false;
              return a.index < b.index;
            });
  table.blocks.clear();
  for (int c = 0; c < table.class_count(); ++c) {
    const TorClass& tc = table.classes[static_cast<std::size_t>(c)];
    BettiKey key{tc.q, tc.sigma};
    auto it = table.blocks.find(key);
    if (it == table.blocks.end()) table.blocks[key] = {c, 1};
    else it->second.second += 1;
  }

  // Chain-level products of canonical representatives, expressed back in the
  // canonical homology basis of the target strand.
  for (int a = 0; a < table.class_count(); ++a) {
    const TorClass& ca = table.classes[static_cast<std::size_t>(a)];
    int sa = strand_of.at(ca.sigma.mask());
    const auto& rep_a = bases[static_cast<std::size_t>(sa)]
                            .degrees.at(ca.q)
                            .representatives[static_cast<std::size_t>(ca.index)];
    for (int b = 0; b < table.class_count(); ++b) {
      const TorClass& cb = table.classes[static_cast<std::size_t>(b)];
      int sb = strand_of.at(cb.sigma.mask());
      const auto& rep_b =
          bases[static_cast<std::size_t>(sb)]
              .degrees.at(cb.q)
              .representatives[static_cast<std::size_t>(cb.index)];

      VertexSet target_supp = ca.sigma.unite(cb.sigma);
      auto ts = strand_of.find(target_supp.mask());
      if (ts == strand_of.end()) {
        table.products[{a, b}] = {};
        continue;
      }
      const detail::StrandData<F>& target =
          strands[static_cast<std::size_t>(ts->second)];
      int tq = ca.q + cb.q;
      if (!target.complex.in_range(tq)) {
        // Overlapping supports can push the nominal degree past the strand's
        // top; the group there is zero and so is the product.
        table.products[{a, b}] = {};
        continue;
      }
      int tdim = target.complex.dim(tq);
      std::vector<Elem> chain(static_cast<std::size_t>(tdim), field.zero());
      const auto& tuples_a =
          strands[static_cast<std::size_t>(sa)].tuples[static_cast<std::size_t>(
              ca.q)];
      const auto& tuples_b =
          strands[static_cast<std::size_t>(sb)].tuples[static_cast<std::size_t>(
              cb.q)];
      for (std::size_t i = 0; i < tuples_a.size(); ++i) {
        if (field.is_zero(rep_a[i])) continue;
        for (std::size_t j = 0; j < tuples_b.size(); ++j) {
          if (field.is_zero(rep_b[j])) continue;
          auto w = wedge_product(P, tuples_a[i], tuples_b[j]);
          if (!w) continue;
          auto pos = target.position.find(w->second);
          // The merged tuple's support is exactly the target support, so it
          // is always present in the target strand basis.
          Elem c = field.mul(rep_a[i], rep_b[j]);
          if (w->first < 0) c = field.neg(c);
          chain[static_cast<std::size_t>(pos->second.second)] =
              field.add(chain[static_cast<std::size_t>(pos->second.second)], c);
        }
      }
      table.products[{a, b}] =
          bases[static_cast<std::size_t>(ts->second)].express_in_homology(
              chain, tq);
    }
  }
  return table;
}

/// Cohomology of the link of omega in the complex associated with P, read
/// off from the compressed complement: H_q of the ([m] \ omega)-strand of
/// the compression equals reduced H^(m-|omega|-q-1) of the link.  Only
/// nonzero dimensions appear in the result.
template <class F>
std::map<int, long> link_cohomology(const SimplicialComplement& P,
                                    const VertexSet& omega, F field) {
  if (omega.ambient() != P.ambient())
    throw std::invalid_argument("omega ambient does not match complement");
  SimplicialComplement E = compress(P, omega);
  VertexSet rest = omega.complement();
  ChainComplex<F> strand = build_strand(E, rest, field);
  std::map<int, long> out;
  const int m = P.ambient();
  for (const auto& [q, d] : strand.homology_dims())
    if (d != 0) out[m - omega.size() - q - 1] = d;
  return out;
}

}  // namespace zktor
