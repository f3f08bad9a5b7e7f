#pragma once

#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zktor/matrix.hpp"

namespace zktor {

/// Running totals of internal consistency checks.  Every complex validates
/// d o d = 0 at construction and every homology computation re-asserts the
/// Euler-characteristic balance; the counters let a verification run report
/// how many such checks it exercised.
namespace chain_stats {
inline std::atomic<long>& complexes_validated() {
  static std::atomic<long> n{0};
  return n;
}
inline std::atomic<long>& euler_checks() {
  static std::atomic<long> n{0};
  return n;
}
}  // namespace chain_stats

template <class F>
struct HomologyBasis;

/// Finite chain complex of based vector spaces over an exact field:
///
///     C_min --d--> 0,   ...,   C_q --d--> C_{q-1},   ...,   C_max
///
/// Degrees run over an explicit interval [min_degree, max_degree] which may
/// start below zero (reduced simplicial chains start at -1, the empty-face
/// slot).  Basis elements carry string labels for reporting.  Construction
/// validates shapes and the identity d_q o d_{q+1} = 0 and throws otherwise.
template <class F>
class ChainComplex {
public:
  using Elem = typename F::Elem;

  /// labels[i] names the basis of C_{min_degree+i}; boundaries[i] is the map
  /// C_{min_degree+i} -> C_{min_degree+i-1} (the lowest one has 0 rows).
  ChainComplex(F field, int min_degree,
               std::vector<std::vector<std::string>> labels,
               std::vector<ExactMatrix<F>> boundaries)
      : field_(field), min_(min_degree), labels_(std::move(labels)),
        d_(std::move(boundaries)) {
    if (labels_.empty())
      throw std::invalid_argument("chain complex needs at least one degree");
    if (d_.size() != labels_.size())
      throw std::invalid_argument("need one boundary map per degree");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      int expect_rows = i == 0 ? 0 : static_cast<int>(labels_[i - 1].size());
      if (d_[i].rows() != expect_rows ||
          d_[i].cols() != static_cast<int>(labels_[i].size()))
        throw std::invalid_argument(
            "boundary map at degree " + std::to_string(min_ + (int)i) +
            " has shape " + std::to_string(d_[i].rows()) + "x" +
            std::to_string(d_[i].cols()) + ", expected " +
            std::to_string(expect_rows) + "x" +
            std::to_string(labels_[i].size()));
    }
    for (std::size_t i = 1; i < d_.size(); ++i)
      if (!d_[i - 1].multiply(d_[i]).is_zero())
        throw std::logic_error("d o d != 0 at degree " +
                               std::to_string(min_ + static_cast<int>(i)));
    chain_stats::complexes_validated().fetch_add(1,
                                                 std::memory_order_relaxed);
  }

  const F& field() const { return field_; }
  int min_degree() const { return min_; }
  int max_degree() const { return min_ + static_cast<int>(labels_.size()) - 1; }

  bool in_range(int q) const { return q >= min_ && q <= max_degree(); }

  int dim(int q) const {
    return in_range(q) ? static_cast<int>(labels_[idx(q)].size()) : 0;
  }

  const std::vector<std::string>& labels(int q) const {
    return labels_[idx(q)];
  }

  /// d_q : C_q -> C_{q-1}.
  const ExactMatrix<F>& boundary(int q) const { return d_[idx(q)]; }

  /// Dimensions of H_q for every q in range, via
  /// dim H_q = dim C_q - rank d_q - rank d_{q+1}.  Re-asserts the Euler
  /// balance sum (-1)^q dim C_q = sum (-1)^q dim H_q.
  std::map<int, int> homology_dims() const {
    std::vector<int> ranks(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) ranks[i] = rank(d_[i]);
    std::map<int, int> h;
    long euler_c = 0, euler_h = 0;
    for (int q = min_; q <= max_degree(); ++q) {
      int r_in = idx(q) + 1 < d_.size() ? ranks[idx(q) + 1] : 0;
      int hq = dim(q) - ranks[idx(q)] - r_in;
      if (hq < 0) throw std::logic_error("negative homology dimension");
      h[q] = hq;
      long s = (q % 2 == 0) ? 1 : -1;
      euler_c += s * dim(q);
      euler_h += s * hq;
    }
    if (euler_c != euler_h)
      throw std::logic_error("Euler characteristic mismatch: chain " +
                             std::to_string(euler_c) + " vs homology " +
                             std::to_string(euler_h));
    chain_stats::euler_checks().fetch_add(1, std::memory_order_relaxed);
    return h;
  }

  /// Canonical cycle representatives of a basis of H_q for every degree.
  /// Kernel vectors (echelon basis of ker d_q) are reduced modulo the image
  /// of d_{q+1}; the nonzero residuals, normalized, are the representatives.
  HomologyBasis<F> homology_representatives() const {
    HomologyBasis<F> basis{field_, {}};
    for (int q = min_; q <= max_degree(); ++q) {
      RowReducer<F> reducer(field_, dim(q));
      std::vector<std::vector<Elem>> image_cols;
      if (in_range(q + 1)) {
        const ExactMatrix<F>& dn = boundary(q + 1);
        for (int j = 0; j < dn.cols(); ++j) {
          image_cols.push_back(dn.col(j));
          reducer.insert(dn.col(j));
        }
      }
      std::vector<std::vector<Elem>> reps;
      for (std::vector<Elem>& z : nullspace_basis(boundary(q))) {
        std::vector<Elem> res = reducer.insert(std::move(z));
        bool zero = true;
        for (const Elem& x : res)
          if (!field_.is_zero(x)) {
            zero = false;
            break;
          }
        if (!zero) reps.push_back(std::move(res));
      }
      basis.degrees[q] = {std::move(reps), std::move(image_cols)};
    }
    return basis;
  }

private:
  F field_;
  int min_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<ExactMatrix<F>> d_;

  std::size_t idx(int q) const {
    if (!in_range(q))
      throw std::out_of_range("degree " + std::to_string(q) +
                              " outside chain complex range");
    return static_cast<std::size_t>(q - min_);
  }
};

/// Homology representatives of one complex, plus enough of the boundary data
/// to express arbitrary cycles in the representative basis.
template <class F>
struct HomologyBasis {
  using Elem = typename F::Elem;

  struct Degree {
    std::vector<std::vector<Elem>> representatives;
    std::vector<std::vector<Elem>> image_columns;  // columns of d_{q+1}
  };

  F field;
  std::map<int, Degree> degrees;

  int dim(int q) const {
    auto it = degrees.find(q);
    return it == degrees.end()
               ? 0
               : static_cast<int>(it->second.representatives.size());
  }

  /// Coordinates of the cycle z in the chosen basis of H_q.  Solves
  /// [reps | image] x = z and returns the representative block; free
  /// variables are zero, so coordinates are deterministic.  Throws when z is
  /// not in the span (i.e. not a cycle of this complex).
  std::vector<Elem> express_in_homology(const std::vector<Elem>& z,
                                        int q) const {
    auto it = degrees.find(q);
    if (it == degrees.end())
      throw std::out_of_range("degree outside chain complex range");
    const Degree& deg = it->second;
    const int n = static_cast<int>(z.size());
    const int r = static_cast<int>(deg.representatives.size());
    const int b = static_cast<int>(deg.image_columns.size());
    ExactMatrix<F> M(field, n, r + b);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n; ++i)
        M.at(i, j) = deg.representatives[static_cast<std::size_t>(j)]
                                        [static_cast<std::size_t>(i)];
    for (int j = 0; j < b; ++j)
      for (int i = 0; i < n; ++i)
        M.at(i, r + j) = deg.image_columns[static_cast<std::size_t>(j)]
                                          [static_cast<std::size_t>(i)];
    auto sol = solve_affine(M, z);
    if (!sol)
      throw std::invalid_argument(
          "vector is not a cycle of the complex at this degree");
    return std::vector<Elem>(sol->begin(), sol->begin() + r);
  }
};

}  // namespace zktor
