#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include "zktor/complexes.hpp"
#include "zktor/fields.hpp"
#include "zktor/lambda.hpp"
#include "zktor/taylor.hpp"
#include "zktor/vertex_set.hpp"

using namespace zktor;

namespace {

// Four subsets of [5] whose associated complex has facets {1,2}, {4,5},
// {1,3,4}, {2,3,5}.  Used throughout as a small example with nontrivial
// homology in three consecutive degrees.
SimplicialComplement sample5() {
  return SimplicialComplement(5, {VertexSet(5, {1, 5}), VertexSet(5, {2, 4}),
                                  VertexSet(5, {1, 2, 3}),
                                  VertexSet(5, {3, 4, 5})});
}

// Minimal non-faces of the octahedron: three disjoint antipodal pairs.
SimplicialComplement oct6() {
  return SimplicialComplement(6, {VertexSet(6, {1, 2}), VertexSet(6, {3, 4}),
                                  VertexSet(6, {5, 6})});
}

}  // namespace

TEST_CASE("tuple supports are unions of generator supports") {
  auto P = sample5();
  CHECK(lambda_support(P, {}) == VertexSet(5));
  CHECK(lambda_support(P, {1}) == VertexSet(5, {1, 5}));
  CHECK(lambda_support(P, {1, 2}) == VertexSet(5, {1, 2, 4, 5}));
  CHECK(lambda_support(P, {3, 4}) == VertexSet::full(5));
  CHECK_THROWS_AS(lambda_support(P, {5}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_support(P, {2, 1}), std::invalid_argument);
}

TEST_CASE("achievable supports are the union closure") {
  auto supports = lambda_supports(sample5());
  REQUIRE(supports.size() == 11);
  CHECK(supports.front() == VertexSet(5));
  CHECK(supports.back() == VertexSet::full(5));
  // One support per generator, all five 4-element sets, nothing else.
  int by_size[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& s : supports) ++by_size[s.size()];
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 0);
  CHECK(by_size[2] == 2);
  CHECK(by_size[3] == 2);
  CHECK(by_size[4] == 5);
  CHECK(by_size[5] == 1);

  // Generators that only ever merge pairwise: three disjoint pairs give the
  // full Boolean lattice on the pairs, 8 supports.
  CHECK(lambda_supports(oct6()).size() == 8);
}

TEST_CASE("strand complexes keep only union-preserving terms") {
  auto P = sample5();
  Rationals Q;

  // The full-support strand: one 2-tuple, four 3-tuples, one 4-tuple.
  auto C = build_strand(P, VertexSet::full(5), Q);
  CHECK(C.min_degree() == 0);
  CHECK(C.max_degree() == 4);
  CHECK(C.dim(0) == 0);
  CHECK(C.dim(1) == 0);
  CHECK(C.dim(2) == 1);
  CHECK(C.dim(3) == 4);
  CHECK(C.dim(4) == 1);
  CHECK(C.labels(2) == std::vector<std::string>{"s3^s4"});
  CHECK(C.homology_dims() ==
        std::map<int, int>{{0, 0}, {1, 0}, {2, 0}, {3, 2}, {4, 0}});

  // A generator's own support carries its one tuple in degree one.
  auto C1 = build_strand(P, VertexSet(5, {1, 5}), Q);
  CHECK(C1.dim(1) == 1);
  CHECK(C1.homology_dims() == std::map<int, int>{{0, 0}, {1, 1}});

  CHECK_THROWS_AS(build_strand(P, VertexSet(4, {1}), Q),
                  std::invalid_argument);
}

TEST_CASE("bigraded table of the five-vertex example") {
  auto P = sample5();
  Rationals Q;
  auto table = bigraded_betti(P, Q);

  CHECK(table.field == FieldSpec::rationals());
  CHECK(table.entry(0, VertexSet(5)) == 1);
  for (const auto& g : P.generators()) CHECK(table.entry(1, g) == 1);
  for (int v = 1; v <= 5; ++v)
    CHECK(table.entry(2, VertexSet::full(5).minus(VertexSet(5, {v}))) == 1);
  CHECK(table.entry(3, VertexSet::full(5)) == 2);
  CHECK(table.entries.size() == 11);
  CHECK(table.total() == 12);
  CHECK(table.poincare() == parse_poincare("1+4t+5t^2+2t^3", 't'));

  // Characteristic 2 gives the same table here.
  PrimeField F2(2);
  CHECK(bigraded_betti(P, F2).same_entries(table));
  CHECK(tor_poincare(P, F2) == table.poincare());
}

TEST_CASE("an empty generator kills every strand") {
  // The generator {} presents the unit ideal: all strands are exact, so the
  // table has no entries at all (not even the unit).
  SimplicialComplement P(3, {VertexSet(3), VertexSet(3, {1, 2})});
  Rationals Q;
  auto table = bigraded_betti(P, Q);
  CHECK(table.entries.empty());
  CHECK(table.total() == 0);
  CHECK(table.poincare() == PoincarePolynomial());
}

TEST_CASE("wedge products need disjoint supports and indices") {
  auto P = sample5();
  auto p = wedge_product(P, {1}, {2});
  REQUIRE(p.has_value());
  CHECK(p->first == 1);
  CHECK(p->second == IndexTuple{1, 2});

  auto q = wedge_product(P, {2}, {1});
  REQUIRE(q.has_value());
  CHECK(q->first == -1);
  CHECK(q->second == IndexTuple{1, 2});

  // Supports {1,5} and {1,2,3} overlap in vertex 1.
  CHECK_FALSE(wedge_product(P, {1}, {3}).has_value());
  // Same index twice.
  CHECK_FALSE(wedge_product(P, {2}, {2}).has_value());
  // The unit multiplies anything.
  auto u = wedge_product(P, {}, {2});
  REQUIRE(u.has_value());
  CHECK(u->first == 1);
  CHECK(u->second == IndexTuple{2});
}

TEST_CASE("multiplication table of the five-vertex example") {
  auto P = sample5();
  Rationals Q;
  auto table = tor_product_table(P, Q);
  REQUIRE(table.class_count() == 12);

  // Classes come sorted by degree then support; position 0 is the unit.
  CHECK(table.classes[0].q == 0);
  CHECK(table.classes[0].sigma == VertexSet(5));
  CHECK(table.classes[1].sigma == VertexSet(5, {1, 5}));
  CHECK(table.classes[2].sigma == VertexSet(5, {2, 4}));
  CHECK(table.classes[3].sigma == VertexSet(5, {1, 2, 3}));
  CHECK(table.classes[4].sigma == VertexSet(5, {3, 4, 5}));
  CHECK(table.classes[10].q == 3);
  CHECK(table.classes[11].q == 3);

  // The unit is a two-sided identity on every class.
  for (int b = 0; b < table.class_count(); ++b) {
    const auto& left = table.product(0, b);
    const auto& right = table.product(b, 0);
    auto [first, count] =
        table.blocks.at(BettiKey{table.classes[b].q, table.classes[b].sigma});
    (void)first;
    REQUIRE(static_cast<int>(left.size()) == count);
    REQUIRE(right.size() == left.size());
    for (int i = 0; i < count; ++i) {
      auto expect =
          i == table.classes[b].index ? Q.one() : Q.zero();
      CHECK(Q.eq(left[static_cast<std::size_t>(i)], expect));
      CHECK(Q.eq(right[static_cast<std::size_t>(i)], expect));
    }
  }

  // The one nonzero product of positive-degree classes: the two degree-one
  // classes with disjoint supports multiply onto the generator of
  // (2, {1,2,4,5}), antisymmetrically.
  const auto& ab = table.product(1, 2);
  const auto& ba = table.product(2, 1);
  REQUIRE(ab.size() == 1);
  REQUIRE(ba.size() == 1);
  CHECK(Q.eq(ab[0], Q.one()));
  CHECK(Q.eq(ba[0], Q.from_int(-1)));

  for (int a = 1; a < table.class_count(); ++a)
    for (int b = 1; b < table.class_count(); ++b) {
      if ((a == 1 && b == 2) || (a == 2 && b == 1)) continue;
      for (const auto& c : table.product(a, b)) CHECK(Q.is_zero(c));
    }

  // A square pushes past the top degree of its own strand: the empty vector.
  CHECK(table.product(1, 1).empty());
}

TEST_CASE("products are graded-commutative") {
  auto P = sample5();
  Rationals Q;
  auto table = tor_product_table(P, Q);
  for (int a = 0; a < table.class_count(); ++a)
    for (int b = 0; b < table.class_count(); ++b) {
      const auto& ab = table.product(a, b);
      const auto& ba = table.product(b, a);
      REQUIRE(ab.size() == ba.size());
      bool flip = (table.classes[a].q * table.classes[b].q) % 2 != 0;
      for (std::size_t i = 0; i < ab.size(); ++i) {
        auto expect = flip ? Q.neg(ba[i]) : ba[i];
        CHECK(Q.eq(ab[i], expect));
      }
    }
}

namespace {

SimplicialComplement random_complement(std::mt19937_64& rng, int m) {
  std::vector<VertexSet> gens;
  int count = 1 + static_cast<int>(rng() % 5);
  std::uint64_t all = (1ull << m) - 1;
  for (int i = 0; i < count; ++i) {
    std::uint64_t mask = rng() & all;
    if (mask == 0) mask = 1ull << (rng() % m);
    gens.push_back(SimplicialComplex::from_mask(m, mask));
  }
  return SimplicialComplement(m, gens);
}

// (a*b)*c and a*(b*c) as coordinate vectors in the block at
// (q_a+q_b+q_c, sigma_a u sigma_b u sigma_c), checked equal for every
// ordered triple of classes.
template <class F>
void check_associative(const SimplicialComplement& P, F field) {
  auto table = tor_product_table(P, field);
  const int n = table.class_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        BettiKey fin{table.classes[a].q + table.classes[b].q +
                         table.classes[c].q,
                     table.classes[a].sigma.unite(table.classes[b].sigma)
                         .unite(table.classes[c].sigma)};
        auto fit = table.blocks.find(fin);
        int fcount = fit == table.blocks.end() ? 0 : fit->second.second;
        std::vector<typename F::Elem> lhs(fcount, field.zero());
        std::vector<typename F::Elem> rhs(fcount, field.zero());

        const auto& ab = table.product(a, b);
        if (!ab.empty()) {
          auto [first, count] = table.blocks.at(
              BettiKey{table.classes[a].q + table.classes[b].q,
                       table.classes[a].sigma.unite(table.classes[b].sigma)});
          for (int i = 0; i < count; ++i) {
            if (field.is_zero(ab[static_cast<std::size_t>(i)])) continue;
            const auto& step = table.product(first + i, c);
            for (std::size_t j = 0; j < step.size(); ++j)
              lhs[j] = field.add(
                  lhs[j],
                  field.mul(ab[static_cast<std::size_t>(i)], step[j]));
          }
        }
        const auto& bc = table.product(b, c);
        if (!bc.empty()) {
          auto [first, count] = table.blocks.at(
              BettiKey{table.classes[b].q + table.classes[c].q,
                       table.classes[b].sigma.unite(table.classes[c].sigma)});
          for (int i = 0; i < count; ++i) {
            if (field.is_zero(bc[static_cast<std::size_t>(i)])) continue;
            const auto& step = table.product(a, first + i);
            for (std::size_t j = 0; j < step.size(); ++j)
              rhs[j] = field.add(
                  rhs[j],
                  field.mul(bc[static_cast<std::size_t>(i)], step[j]));
          }
        }
        for (int j = 0; j < fcount; ++j)
          CHECK(field.eq(lhs[static_cast<std::size_t>(j)],
                         rhs[static_cast<std::size_t>(j)]));
      }
}

}  // namespace

TEST_CASE("entries never shrink in positive characteristic") {
  // Boundary matrices have integer entries, so ranks can only drop and
  // homology can only grow when reduced mod p.
  Rationals Q;
  PrimeField F2(2), F3(3);
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 2 + static_cast<int>(rng() % 5);
    SimplicialComplement P = random_complement(rng, m);
    auto tq = bigraded_betti(P, Q);
    auto t2 = bigraded_betti(P, F2);
    auto t3 = bigraded_betti(P, F3);
    for (const auto& [key, dim] : tq.entries) {
      CHECK(t2.entry(key.q, key.sigma) >= dim);
      CHECK(t3.entry(key.q, key.sigma) >= dim);
    }
    CHECK(t2.total() >= tq.total());
    CHECK(t3.total() >= tq.total());
  }

  // A strict increase: the complement of the 6-vertex projective plane has
  // two extra classes over GF(2) (torsion in the top supports).
  SimplicialComplex rp2(6, {VertexSet(6, {1, 2, 3}), VertexSet(6, {1, 3, 4}),
                            VertexSet(6, {1, 4, 5}), VertexSet(6, {1, 5, 6}),
                            VertexSet(6, {1, 2, 6}), VertexSet(6, {2, 3, 5}),
                            VertexSet(6, {3, 5, 6}), VertexSet(6, {3, 4, 6}),
                            VertexSet(6, {2, 4, 6}), VertexSet(6, {2, 4, 5})});
  SimplicialComplement P = complement_from_complex(rp2);
  auto tq = bigraded_betti(P, Q);
  auto t2 = bigraded_betti(P, F2);
  VertexSet full = VertexSet::full(6);
  CHECK(tq.entry(4, full) == 0);
  CHECK(tq.entry(3, full) == 0);
  CHECK(t2.entry(4, full) == 1);
  CHECK(t2.entry(3, full) == 1);
}

TEST_CASE("quotient differential is a derivation for the wedge") {
  // d(e1*e2) = (d e1)*e2 + (-1)^|e1| e1*(d e2), accumulated symbolically on
  // basis tuples.  The quotient differential keeps exactly the terms whose
  // monomial multiplier vanishes.
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 2 + static_cast<int>(rng() % 5);
    SimplicialComplement P = random_complement(rng, m);
    GeneratorSystem sys = GeneratorSystem::from_complement(P);
    ExponentVector none = ExponentVector::zero(m);
    auto quotient_diff = [&](const IndexTuple& S) {
      std::vector<std::pair<int, IndexTuple>> out;
      for (const TaylorTerm& t : taylor_differential(sys, S))
        if (t.multiplier == none) out.emplace_back(t.sign, t.tuple);
      return out;
    };

    IndexTuple S, T;
    if (trial % 4 == 3) {
      // Occasionally overlapping index sets: both sides must vanish.
      for (int i = 1; i <= sys.k(); ++i) {
        if (rng() % 2) S.push_back(i);
        if (rng() % 2) T.push_back(i);
      }
    } else {
      for (int i = 1; i <= sys.k(); ++i) {
        switch (rng() % 3) {
          case 0: S.push_back(i); break;
          case 1: T.push_back(i); break;
          default: break;
        }
      }
    }

    std::map<IndexTuple, int> acc;
    auto st = wedge_product(P, S, T);
    if (st.has_value())
      for (const auto& [sign, tuple] : quotient_diff(st->second))
        acc[tuple] += st->first * sign;
    for (const auto& [sign, tuple] : quotient_diff(S)) {
      auto w = wedge_product(P, tuple, T);
      if (w.has_value()) acc[w->second] -= sign * w->first;
    }
    int koszul = S.size() % 2 == 0 ? 1 : -1;
    for (const auto& [sign, tuple] : quotient_diff(T)) {
      auto w = wedge_product(P, S, tuple);
      if (w.has_value()) acc[w->second] -= koszul * sign * w->first;
    }
    for (const auto& [tuple, coeff] : acc) CHECK(coeff == 0);
  }
}

TEST_CASE("multiplication table of the octahedron complement") {
  auto P = oct6();
  Rationals Q;
  auto table = tor_product_table(P, Q);
  REQUIRE(table.class_count() == 8);

  // Position 0 is the unit; 1..3 the degree-one classes at the generator
  // supports; 4..6 degree two at the three 4-element unions; 7 the top.
  CHECK(table.classes[1].sigma == VertexSet(6, {1, 2}));
  CHECK(table.classes[2].sigma == VertexSet(6, {3, 4}));
  CHECK(table.classes[3].sigma == VertexSet(6, {5, 6}));
  CHECK(table.classes[4].sigma == VertexSet(6, {1, 2, 3, 4}));
  CHECK(table.classes[5].sigma == VertexSet(6, {1, 2, 5, 6}));
  CHECK(table.classes[6].sigma == VertexSet(6, {3, 4, 5, 6}));
  CHECK(table.classes[7].q == 3);
  CHECK(table.classes[7].sigma == VertexSet::full(6));

  // Disjoint degree-one pairs multiply onto the degree-two generators,
  // antisymmetrically.
  REQUIRE(table.product(1, 2).size() == 1);
  CHECK(Q.eq(table.product(1, 2)[0], Q.one()));
  CHECK(Q.eq(table.product(2, 1)[0], Q.from_int(-1)));
  REQUIRE(table.product(1, 3).size() == 1);
  CHECK(Q.eq(table.product(1, 3)[0], Q.one()));
  REQUIRE(table.product(2, 3).size() == 1);
  CHECK(Q.eq(table.product(2, 3)[0], Q.one()));

  // Degree-one squares land in zero groups.
  CHECK(table.product(1, 1).empty());
  CHECK(table.product(2, 2).empty());
  CHECK(table.product(3, 3).empty());

  // The triple product of the three generators is the fundamental class:
  // (e1 e2) e3 and e1 (e2 e3) both give +1 times the top class.
  REQUIRE(table.product(4, 3).size() == 1);
  CHECK(Q.eq(table.product(4, 3)[0], Q.one()));
  REQUIRE(table.product(1, 6).size() == 1);
  CHECK(Q.eq(table.product(1, 6)[0], Q.one()));
  // Swapping a degree-two past a degree-one keeps the sign.
  REQUIRE(table.product(3, 4).size() == 1);
  CHECK(Q.eq(table.product(3, 4)[0], Q.one()));

  // Overlapping supports annihilate: e1 * e12' for any class over a support
  // meeting {1,2}.
  for (const auto& coord : table.product(1, 4)) CHECK(Q.is_zero(coord));
  for (const auto& coord : table.product(1, 5)) CHECK(Q.is_zero(coord));
  for (const auto& coord : table.product(4, 5)) CHECK(Q.is_zero(coord));
}

TEST_CASE("products are associative") {
  Rationals Q;
  PrimeField F2(2);
  check_associative(sample5(), Q);
  check_associative(sample5(), F2);
  check_associative(oct6(), Q);
  check_associative(oct6(), F2);
}

TEST_CASE("link cohomology via compression") {
  auto P = oct6();
  Rationals Q;

  // Link of a vertex in the octahedron boundary is a square.
  CHECK(link_cohomology(P, VertexSet(6, {1}), Q) ==
        std::map<int, long>{{1, 1}});
  // Link of the empty face is the whole 2-sphere.
  CHECK(link_cohomology(P, VertexSet(6), Q) == std::map<int, long>{{2, 1}});
  // Link of a facet is the empty complex: one class in degree -1.
  CHECK(link_cohomology(P, VertexSet(6, {1, 3, 5}), Q) ==
        std::map<int, long>{{-1, 1}});
  // A non-face compresses some generator to {}: everything vanishes.
  CHECK(link_cohomology(P, VertexSet(6, {1, 2}), Q).empty());

  CHECK_THROWS_AS(link_cohomology(P, VertexSet(5, {1}), Q),
                  std::invalid_argument);
}
