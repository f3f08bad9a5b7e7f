#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zktor/vertex_set.hpp"

namespace zktor {

/// Abstract simplicial complex on vertices {1,...,m}, stored by its facets
/// (inclusion-maximal faces).  The empty face is always a member; the complex
/// whose only face is the empty face has facet list {{}}.  Vertices of [m]
/// need not appear in any face.
class SimplicialComplex {
public:
  /// Normalizes the given faces: drops faces contained in others, removes
  /// duplicates, sorts canonically.  An empty list yields the complex {{}}.
  SimplicialComplex(int m, std::vector<VertexSet> faces) : m_(m) {
    for (const VertexSet& f : faces)
      if (f.ambient() != m_)
        throw std::invalid_argument("face ambient does not match complex");
    for (std::size_t i = 0; i < faces.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (i == j) continue;
        if (faces[i].subset_of(faces[j]) &&
            (!(faces[i] == faces[j]) || j < i)) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets_.push_back(faces[i]);
    }
    if (facets_.empty()) facets_.push_back(VertexSet(m_));
    std::sort(facets_.begin(), facets_.end(), CanonicalLess{});
  }

  int ambient() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  /// Dimension: max facet size - 1; the complex {{}} has dimension -1.
  int dim() const {
    int d = -1;
    for (const VertexSet& f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  bool is_face(const VertexSet& s) const {
    for (const VertexSet& f : facets_)
      if (s.subset_of(f)) return true;
    return false;
  }

  /// All faces including the empty face, in canonical order.
  std::vector<VertexSet> faces() const {
    std::set<std::uint64_t> seen;
    std::vector<std::uint64_t> stack;
    for (const VertexSet& f : facets_)
      if (seen.insert(f.mask()).second) stack.push_back(f.mask());
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      for (std::uint64_t b = cur; b != 0; b &= b - 1) {
        std::uint64_t sub = cur & ~(b & -b);
        if (seen.insert(sub).second) stack.push_back(sub);
      }
    }
    std::vector<VertexSet> out;
    out.reserve(seen.size());
    for (std::uint64_t mask : seen) out.push_back(from_mask(m_, mask));
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && facets_ == o.facets_;
  }

  static VertexSet from_mask(int m, std::uint64_t mask) {
    VertexSet s(m);
    std::vector<int> members;
    for (std::uint64_t b = mask; b != 0; b &= b - 1)
      members.push_back(std::countr_zero(b) + 1);
    return VertexSet::from_members(m, members);
  }

private:
  int m_;
  std::vector<VertexSet> facets_;
};

/// Ordered sequence of subsets of {1,...,m}; repetitions are allowed and the
/// caller's order is preserved (differential and product signs depend on it).
/// Empty generators are legal -- compression produces them -- but a complement
/// with an empty generator presents the whole polynomial ring, so it has no
/// associated complex and its Tor table vanishes identically.
class SimplicialComplement {
public:
  SimplicialComplement(int m, std::vector<VertexSet> generators)
      : m_(m), gens_(std::move(generators)) {
    for (const VertexSet& g : gens_)
      if (g.ambient() != m_)
        throw std::invalid_argument("generator ambient does not match");
  }

  int ambient() const { return m_; }
  int k() const { return static_cast<int>(gens_.size()); }
  const std::vector<VertexSet>& generators() const { return gens_; }
  const VertexSet& generator(int i) const {  // 1-based
    if (i < 1 || i > k()) throw std::out_of_range("generator index");
    return gens_[static_cast<std::size_t>(i - 1)];
  }

  bool has_empty_generator() const {
    for (const VertexSet& g : gens_)
      if (g.empty()) return true;
    return false;
  }

  bool operator==(const SimplicialComplement& o) const {
    return m_ == o.m_ && gens_ == o.gens_;
  }

private:
  int m_;
  std::vector<VertexSet> gens_;
};

/// Finite list of monomial generators in k[x_1,...,x_m], each a nonzero
/// exponent vector.  Order matters for signs, as with complements.
class GeneratorSystem {
public:
  GeneratorSystem(int m, std::vector<ExponentVector> generators)
      : m_(m), gens_(std::move(generators)) {
    for (const ExponentVector& g : gens_) {
      if (g.m() != m_)
        throw std::invalid_argument("generator length does not match m");
      if (g.is_zero())
        throw std::invalid_argument(
            "monomial generators must be nonzero vectors");
    }
  }

  /// Square-free system x^{sigma_i}; rejects empty generators.
  static GeneratorSystem from_complement(const SimplicialComplement& P) {
    std::vector<ExponentVector> gens;
    gens.reserve(static_cast<std::size_t>(P.k()));
    for (const VertexSet& g : P.generators())
      gens.push_back(ExponentVector::from_set(g));
    return GeneratorSystem(P.ambient(), std::move(gens));
  }

  int m() const { return m_; }
  int k() const { return static_cast<int>(gens_.size()); }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  const ExponentVector& generator(int i) const {  // 1-based
    if (i < 1 || i > k()) throw std::out_of_range("generator index");
    return gens_[static_cast<std::size_t>(i - 1)];
  }

  /// Coordinatewise max over all generators: the tightest box containing
  /// every generator, used to bound multidegree sweeps.
  ExponentVector exponent_cap() const {
    ExponentVector cap = ExponentVector::zero(m_);
    for (const ExponentVector& g : gens_) cap = cap.join(g);
    return cap;
  }

private:
  int m_;
  std::vector<ExponentVector> gens_;
};

/// Minimal non-faces of K, canonically ordered.  A non-face t is minimal when
/// every proper subset is a face; every such t arises as f+{v} for a face f,
/// which is how the search is organized.
inline SimplicialComplement complement_from_complex(const SimplicialComplex& K) {
  const int m = K.ambient();
  std::vector<VertexSet> faces = K.faces();
  std::set<std::uint64_t> face_masks;
  for (const VertexSet& f : faces) face_masks.insert(f.mask());
  std::set<std::uint64_t> found;
  for (const VertexSet& f : faces) {
    for (int v = 1; v <= m; ++v) {
      if (f.contains(v)) continue;
      VertexSet t = f.unite(VertexSet(m, {v}));
      if (face_masks.count(t.mask())) continue;
      bool minimal = true;
      for (int u : t.members()) {
        VertexSet sub = t.minus(VertexSet(m, {u}));
        if (!face_masks.count(sub.mask())) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(t.mask());
    }
  }
  std::vector<VertexSet> gens;
  gens.reserve(found.size());
  for (std::uint64_t mask : found)
    gens.push_back(SimplicialComplex::from_mask(m, mask));
  std::sort(gens.begin(), gens.end(), CanonicalLess{});
  return SimplicialComplement(m, std::move(gens));
}

/// The complex whose non-faces are exactly the sets containing some
/// generator.  Facets are complements of the minimal transversals of the
/// generator family, computed by Berge multiplication.  An empty generator
/// makes every set a non-face, leaving no complex: that is an error here.
inline SimplicialComplex complex_from_complement(const SimplicialComplement& P) {
  if (P.has_empty_generator())
    throw std::invalid_argument(
        "complement with an empty generator has no associated complex");
  const int m = P.ambient();
  std::vector<std::uint64_t> transversals = {0};
  for (const VertexSet& g : P.generators()) {
    std::vector<std::uint64_t> next;
    std::set<std::uint64_t> seen;
    for (std::uint64_t t : transversals) {
      if (t & g.mask()) {
        if (seen.insert(t).second) next.push_back(t);
        continue;
      }
      for (int v : g.members()) {
        std::uint64_t ext = t | (std::uint64_t{1} << (v - 1));
        if (seen.insert(ext).second) next.push_back(ext);
      }
    }
    // Keep only inclusion-minimal transversals.
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t a : next) {
      bool keep = true;
      for (std::uint64_t b : next)
        if (b != a && (b & ~a) == 0) {
          keep = false;
          break;
        }
      if (keep) minimal.push_back(a);
    }
    transversals = std::move(minimal);
  }
  std::vector<VertexSet> facets;
  facets.reserve(transversals.size());
  for (std::uint64_t t : transversals)
    facets.push_back(SimplicialComplex::from_mask(m, t).complement());
  return SimplicialComplex(m, std::move(facets));
}

/// Inclusion-minimal generators with duplicates removed, canonically sorted.
/// The result presents the same ideal, so every homological output of the
/// library is invariant under this operation.
inline SimplicialComplement minimalize(const SimplicialComplement& P) {
  const std::vector<VertexSet>& g = P.generators();
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (g[j].subset_of(g[i]) && (!(g[j] == g[i]) || j < i)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(g[i]);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return SimplicialComplement(P.ambient(), std::move(out));
}

/// Remove the vertices of omega from every generator, preserving order and
/// multiplicity.  Empty generators in the output are meaningful: they flag
/// that omega contains a whole generator (omega is then a non-face).
inline SimplicialComplement compress(const SimplicialComplement& P,
                                     const VertexSet& omega) {
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(P.k()));
  for (const VertexSet& g : P.generators()) out.push_back(g.minus(omega));
  return SimplicialComplement(P.ambient(), std::move(out));
}

/// Faces whose union with omega is still a face.  When omega is not a face
/// the star is the complex {{}}.
inline SimplicialComplex star(const SimplicialComplex& K,
                              const VertexSet& omega) {
  std::vector<VertexSet> facets;
  for (const VertexSet& f : K.facets())
    if (omega.subset_of(f)) facets.push_back(f);
  return SimplicialComplex(K.ambient(), std::move(facets));
}

/// link_K(omega) = { f \ omega : f in K, f contains omega }; the complex {{}}
/// when omega is not a face.
inline SimplicialComplex link(const SimplicialComplex& K,
                              const VertexSet& omega) {
  std::vector<VertexSet> facets;
  for (const VertexSet& f : K.facets())
    if (omega.subset_of(f)) facets.push_back(f.minus(omega));
  return SimplicialComplex(K.ambient(), std::move(facets));
}

/// Full subcomplex on sigma: all faces of K contained in sigma.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& K,
                                         const VertexSet& sigma) {
  std::vector<VertexSet> facets;
  for (const VertexSet& f : K.facets()) facets.push_back(f.intersect(sigma));
  return SimplicialComplex(K.ambient(), std::move(facets));
}

}  // namespace zktor
