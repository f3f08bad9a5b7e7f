#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace zktor {

/// Subset of the vertex set {1,...,m}, stored as a bitmask.  The ambient m
/// travels with the set so that complements and validation are well defined;
/// all binary operations require matching ambients.  m is capped at 64.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(int m) : m_(check_ambient(m)) {}

  VertexSet(int m, std::initializer_list<int> members) : m_(check_ambient(m)) {
    for (int v : members) add(v);
  }

  static VertexSet from_members(int m, const std::vector<int>& members) {
    VertexSet s(m);
    for (int v : members) {
      if (s.contains(v))
        throw std::invalid_argument("duplicate vertex " + std::to_string(v) +
                                    " in vertex set");
      s.add(v);
    }
    return s;
  }

  static VertexSet full(int m) {
    VertexSet s(m);
    s.bits_ = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    return s;
  }

  int ambient() const { return m_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t mask() const { return bits_; }

  bool contains(int v) const {
    return v >= 1 && v <= m_ && (bits_ >> (v - 1)) & 1u;
  }

  VertexSet unite(const VertexSet& o) const {
    return with_bits(o, bits_ | o.bits_);
  }
  VertexSet intersect(const VertexSet& o) const {
    return with_bits(o, bits_ & o.bits_);
  }
  VertexSet minus(const VertexSet& o) const {
    return with_bits(o, bits_ & ~o.bits_);
  }
  VertexSet complement() const { return full(m_).minus(*this); }

  bool subset_of(const VertexSet& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool disjoint_from(const VertexSet& o) const {
    check_same(o);
    return (bits_ & o.bits_) == 0;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : members()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "}";
  }

  bool operator==(const VertexSet& o) const {
    return m_ == o.m_ && bits_ == o.bits_;
  }

private:
  std::uint64_t bits_ = 0;
  int m_ = 0;

  static int check_ambient(int m) {
    if (m < 0 || m > 64)
      throw std::invalid_argument("vertex count must be in [0,64], got " +
                                  std::to_string(m));
    return m;
  }

  void check_same(const VertexSet& o) const {
    if (m_ != o.m_)
      throw std::invalid_argument("vertex sets live in different ambients (" +
                                  std::to_string(m_) + " vs " +
                                  std::to_string(o.m_) + ")");
  }

  VertexSet with_bits(const VertexSet& o, std::uint64_t bits) const {
    check_same(o);
    VertexSet s(m_);
    s.bits_ = bits;
    return s;
  }

  void add(int v) {
    if (v < 1 || v > m_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside 1.." + std::to_string(m_));
    bits_ |= std::uint64_t{1} << (v - 1);
  }
};

/// Order used everywhere sets are listed: by size, then lexicographically on
/// the sorted member lists.  For the lexicographic tie-break the set owning
/// the smallest non-shared vertex comes first.
inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  return (a.mask() >> std::countr_zero(diff)) & 1u;
}

struct CanonicalLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    return canonical_less(a, b);
  }
};

/// Exponent vector of a monomial in k[x_1,...,x_m]: m nonnegative integers.
class ExponentVector {
public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
      if (x < 0) throw std::invalid_argument("negative exponent");
  }

  static ExponentVector zero(int m) {
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(m), 0));
  }

  /// Square-free vector x^sigma of a vertex set.
  static ExponentVector from_set(const VertexSet& s) {
    ExponentVector e = zero(s.ambient());
    for (int v : s.members()) e.e_[static_cast<std::size_t>(v - 1)] = 1;
    return e;
  }

  int m() const { return static_cast<int>(e_.size()); }
  int at(int j) const { return e_[index(j)]; }  // 1-based coordinate
  const std::vector<int>& coords() const { return e_; }

  bool is_zero() const {
    for (int x : e_)
      if (x != 0) return false;
    return true;
  }

  bool leq(const ExponentVector& o) const {
    check_same(o);
    for (std::size_t j = 0; j < e_.size(); ++j)
      if (e_[j] > o.e_[j]) return false;
    return true;
  }

  /// Coordinatewise max: the lcm of the two monomials.
  ExponentVector join(const ExponentVector& o) const {
    check_same(o);
    std::vector<int> out(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j)
      out[j] = std::max(e_[j], o.e_[j]);
    return ExponentVector(std::move(out));
  }

  ExponentVector plus(const ExponentVector& o) const {
    check_same(o);
    std::vector<int> out(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) out[j] = e_[j] + o.e_[j];
    return ExponentVector(std::move(out));
  }

  /// Coordinatewise difference; only valid when o.leq(*this).
  ExponentVector minus(const ExponentVector& o) const {
    check_same(o);
    std::vector<int> out(e_.size());
    for (std::size_t j = 0; j < e_.size(); ++j) {
      out[j] = e_[j] - o.e_[j];
      if (out[j] < 0)
        throw std::invalid_argument("exponent difference is negative");
    }
    return ExponentVector(std::move(out));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t j = 0; j < e_.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(e_[j]);
    }
    return out + ")";
  }

  bool operator==(const ExponentVector&) const = default;

private:
  std::vector<int> e_;

  std::size_t index(int j) const {
    if (j < 1 || j > m())
      throw std::invalid_argument("coordinate " + std::to_string(j) +
                                  " outside 1.." + std::to_string(m()));
    return static_cast<std::size_t>(j - 1);
  }

  void check_same(const ExponentVector& o) const {
    if (e_.size() != o.e_.size())
      throw std::invalid_argument("exponent vectors of different lengths");
  }
};

/// lcm of a nonempty family of monomials (coordinatewise max).
inline ExponentVector lcm_join(const std::vector<ExponentVector>& vs) {
  if (vs.empty())
    throw std::invalid_argument("lcm_join of an empty family is undefined");
  ExponentVector acc = vs.front();
  for (std::size_t i = 1; i < vs.size(); ++i) acc = acc.join(vs[i]);
  return acc;
}

}  // namespace zktor
