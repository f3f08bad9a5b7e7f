#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zktor {

/// Dense matrix over an exact field, row-major.  Dimensions may be zero; a
/// 0xN or Nx0 matrix is a legitimate (zero) linear map and shows up routinely
/// as the boundary at the ends of a chain complex.
template <class F>
class ExactMatrix {
public:
  using Elem = typename F::Elem;

  ExactMatrix(F field, int rows, int cols)
      : field_(field), rows_(check_dim(rows)), cols_(check_dim(cols)),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
           field.zero()) {}

  /// Build from a flat row-major list of small integers.
  static ExactMatrix from_int_rows(F field, int rows, int cols,
                                   const std::vector<int>& entries) {
    if (entries.size() !=
        static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
      throw std::invalid_argument("entry count does not match dimensions");
    ExactMatrix M(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
      M.a_[i] = field.from_int(entries[i]);
    return M;
  }

  static ExactMatrix identity(F field, int n) {
    ExactMatrix M(field, n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = field.one();
    return M;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(int i, int j) { return a_[index(i, j)]; }
  const Elem& at(int i, int j) const { return a_[index(i, j)]; }

  std::vector<Elem> row(int i) const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
  }

  std::vector<Elem> col(int j) const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
  }

  ExactMatrix multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (field_.is_zero(at(i, k))) continue;
        for (int j = 0; j < o.cols_; ++j)
          out.at(i, j) =
              field_.add(out.at(i, j), field_.mul(at(i, k), o.at(k, j)));
      }
    return out;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Elem> out(static_cast<std::size_t>(rows_), field_.zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        out[static_cast<std::size_t>(i)] =
            field_.add(out[static_cast<std::size_t>(i)],
                       field_.mul(at(i, j), v[static_cast<std::size_t>(j)]));
    return out;
  }

  bool is_zero() const {
    for (const Elem& x : a_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

private:
  F field_;
  int rows_, cols_;
  std::vector<Elem> a_;

  static int check_dim(int n) {
    if (n < 0) throw std::invalid_argument("negative matrix dimension");
    return n;
  }

  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
};

namespace detail {

/// In-place reduced row echelon form.  Pivot choice is deterministic: columns
/// are scanned left to right and the first row with a nonzero entry is used.
/// Returns the pivot columns in order.
template <class F>
std::vector<int> rref_in_place(ExactMatrix<F>& M) {
  const F& k = M.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < M.rows(); ++i)
      if (!k.is_zero(M.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M.at(pr, j), M.at(r, j));
    typename F::Elem s = k.inv(M.at(r, c));
    for (int j = c; j < M.cols(); ++j) M.at(r, j) = k.mul(s, M.at(r, j));
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || k.is_zero(M.at(i, c))) continue;
      typename F::Elem f = M.at(i, c);
      for (int j = c; j < M.cols(); ++j)
        M.at(i, j) = k.sub(M.at(i, j), k.mul(f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class F>
int rank(const ExactMatrix<F>& M) {
  ExactMatrix<F> W = M;
  return static_cast<int>(detail::rref_in_place(W).size());
}

/// One solution of M x = v, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
template <class F>
std::optional<std::vector<typename F::Elem>> solve_affine(
    const ExactMatrix<F>& M, const std::vector<typename F::Elem>& v) {
  if (static_cast<int>(v.size()) != M.rows())
    throw std::invalid_argument("right-hand side has wrong length");
  const F& k = M.field();
  ExactMatrix<F> W(k, M.rows(), M.cols() + 1);
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) W.at(i, j) = M.at(i, j);
    W.at(i, M.cols()) = v[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = detail::rref_in_place(W);
  if (!pivots.empty() && pivots.back() == M.cols()) return std::nullopt;
  std::vector<typename F::Elem> x(static_cast<std::size_t>(M.cols()),
                                  k.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] =
        W.at(static_cast<int>(r), M.cols());
  return x;
}

/// Basis of the kernel of M, one vector per free column, in ascending column
/// order; each vector has a 1 in its free coordinate.  This is the canonical
/// echelon form of the kernel, so equal matrices give identical bases.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace_basis(
    const ExactMatrix<F>& M) {
  const F& k = M.field();
  ExactMatrix<F> W = M;
  std::vector<int> pivots = detail::rref_in_place(W);
  std::vector<bool> is_pivot(static_cast<std::size_t>(M.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int f = 0; f < M.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<typename F::Elem> x(static_cast<std::size_t>(M.cols()),
                                    k.zero());
    x[static_cast<std::size_t>(f)] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      x[static_cast<std::size_t>(pivots[r])] =
          k.neg(W.at(static_cast<int>(r), f));
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Incremental Gaussian elimination against a growing pivot set.  Feeding the
/// image of a boundary first and then kernel vectors yields canonical
/// homology representatives: each surviving residual is a cycle reduced
/// modulo the boundaries (and modulo previously chosen representatives).
template <class F>
class RowReducer {
public:
  using Elem = typename F::Elem;

  RowReducer(F field, int n) : field_(field), n_(n) {}

  /// Residual of v modulo the span of the inserted vectors.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    if (static_cast<int>(v.size()) != n_)
      throw std::invalid_argument("vector has wrong length");
    for (const auto& [c, row] : pivots_) {
      const Elem& f = v[static_cast<std::size_t>(c)];
      if (field_.is_zero(f)) continue;
      Elem fc = f;
      for (int j = c; j < n_; ++j)
        v[static_cast<std::size_t>(j)] =
            field_.sub(v[static_cast<std::size_t>(j)],
                       field_.mul(fc, row[static_cast<std::size_t>(j)]));
    }
    return v;
  }

  /// Reduce v and, if the residual is nonzero, normalize its leading entry to
  /// one and add it to the pivot set.  Returns the residual (zero when v was
  /// already in the span).
  std::vector<Elem> insert(std::vector<Elem> v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < n_; ++j)
      if (!field_.is_zero(v[static_cast<std::size_t>(j)])) {
        lead = j;
        break;
      }
    if (lead < 0) return v;
    Elem s = field_.inv(v[static_cast<std::size_t>(lead)]);
    for (int j = lead; j < n_; ++j)
      v[static_cast<std::size_t>(j)] =
          field_.mul(s, v[static_cast<std::size_t>(j)]);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos].first < lead) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos),
                   {lead, v});
    return v;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

private:
  F field_;
  int n_;
  std::vector<std::pair<int, std::vector<Elem>>> pivots_;  // sorted by column
};

}  // namespace zktor
