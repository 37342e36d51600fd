#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace hypermaps;
using testing_support::catalog;
using testing_support::fingerprint;
using testing_support::model;

namespace {

FiniteGroup alt5() {
  return generate_group({Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}, 5);
}

/// All even permutations of {0..4}, listed directly.
std::set<Permutation> even_permutations_of_five() {
  std::vector<Point> p{0, 1, 2, 3, 4};
  std::set<Permutation> out;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    if (inversions % 2 == 0) out.insert(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::set<Permutation> as_set(const FiniteGroup& g) { return {g.elements().begin(), g.elements().end()}; }

FiniteGroup dihedral_model(std::size_t n) { return model(GroupName{GroupName::Kind::Dihedral, n}); }

}  // namespace

TEST(GenerateGroup, TwoCommutingInvolutionsGiveKleinFour) {
  const auto g = generate_group({Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 3}, {1, 2}})}, 4);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(recognize_group(g), GroupName::klein_four());
}

TEST(GenerateGroup, Type233HypermapHasMonodromyOfOrder24) {
  const auto h = regular_from_type(2, 3, 3);
  const auto g = generate_group({h.h(0), h.h(1), h.h(2)}, h.size());
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(recognize_group(g), GroupName::sym4());
}

TEST(GenerateGroup, ThreeCycleGivesCyclicGroup) {
  const auto g = generate_group({Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.identity().is_identity());
  EXPECT_EQ(FiniteGroup::identity_index, 0u);
}

TEST(GenerateGroup, Errors) {
  try {
    generate_group({}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGenerators);
  }
  EXPECT_THROW(generate_group({Permutation::identity(2)}, 3), Error);
  try {
    generate_group({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1}})}, 5, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupTooLarge);
  }
}

TEST(GenerateGroup, ElementsAreClosedAndContainGenerators) {
  const auto g = alt5();
  for (const auto& gen : g.generators()) EXPECT_TRUE(g.contains(gen));
  for (const auto& a : g.elements()) {
    EXPECT_TRUE(g.contains(a.inverse()));
    for (const auto& b : g.elements()) ASSERT_TRUE(g.contains(a * b));
  }
  EXPECT_EQ(120 % g.order(), 0u);
}

TEST(GenerateGroup, BreadthFirstOrderIsDeterministic) {
  const auto a = alt5();
  const auto b = alt5();
  EXPECT_EQ(a.elements(), b.elements());
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(*a.index_of(a.elements()[i]), i);
}

TEST(Orbits, VerticesAndFacesOfType233) {
  const auto h = regular_from_type(2, 3, 3);
  EXPECT_EQ(orbits({h.h(1), h.h(2)}, h.size()).size(), 6u);
  EXPECT_EQ(orbits({h.h(0), h.h(1)}, h.size()).size(), 4u);
}

TEST(Orbits, NoGeneratorsGiveSingletons) {
  const auto o = orbits({}, 5);
  ASSERT_EQ(o.size(), 5u);
  for (Point i = 0; i < 5; ++i) EXPECT_EQ(o[i], std::vector<Point>{i});
}

TEST(Orbits, ListedBySmallestMember) {
  const auto o = orbits({Permutation::from_cycles(6, {{4, 0}, {5, 2}})}, 6);
  EXPECT_EQ(o, (std::vector<std::vector<Point>>{{0, 4}, {1}, {2, 5}, {3}}));
}

TEST(PointStabilizer, RegularActionHasTrivialStabilizer) {
  const auto h = build_platonic(Platonic::Cube);
  EXPECT_EQ(point_stabilizer(monodromy(h), 0).order(), 1u);
}

TEST(PointStabilizer, PinOfTetrahedron) {
  const auto k = pin(build_platonic(Platonic::Tetrahedron));
  ASSERT_EQ(k.size(), 48u);
  EXPECT_EQ(point_stabilizer(monodromy(k), 0).order(), 12u);
}

TEST(PointStabilizer, NaturalDihedralAction) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto d = dihedral_model(n);
    EXPECT_EQ(d.order(), 2 * n);
    for (Point x = 0; x < n; ++x) EXPECT_EQ(point_stabilizer(d, x).order(), 2u);
  }
}

TEST(NormalClosure, IdentitySeedGivesTrivialGroup) {
  const auto g = alt5();
  EXPECT_EQ(normal_closure(g, {g.identity()}).order(), 1u);
  EXPECT_EQ(normal_closure(g, {}).order(), 1u);
}

TEST(NormalClosure, Alt5IsSimple) {
  const auto g = alt5();
  ASSERT_EQ(as_set(g), even_permutations_of_five());
  for (const auto& a : g.elements()) {
    if (a.is_identity()) continue;
    EXPECT_EQ(normal_closure(g, {a}).order(), 60u);
  }
}

TEST(NormalClosure, PinOfDodecahedronStabilizer) {
  const auto k = pin(build_platonic(Platonic::Dodecahedron));
  const auto mon = monodromy(k);
  const auto stab = point_stabilizer(mon, 0);
  EXPECT_EQ(normal_closure(mon, stab.generators()).order(), 3600u);
  EXPECT_EQ(mon.order() / 3600, 4u);
}

TEST(NormalClosure, RejectsNonMembers) {
  try {
    normal_closure(alt5(), {Permutation::from_cycles(5, {{0, 1}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAMember);
  }
}

TEST(QuotientAction, ByWholeGroupAndByTrivialGroup) {
  const auto g = alt5();
  const auto whole = quotient_action(g, g);
  EXPECT_EQ(whole.coset_count, 1u);
  for (const auto& p : whole.generator_images) EXPECT_TRUE(p.is_identity());
  const auto regular = quotient_action(g, normal_closure(g, {}));
  EXPECT_EQ(regular.coset_count, 60u);
  EXPECT_EQ(generate_group(regular.generator_images, 60).order(), 60u);
  EXPECT_EQ(regular.coset_of[FiniteGroup::identity_index], 0u);
}

TEST(QuotientAction, MinimalNormalSubgroupOfType233Monodromy) {
  const auto h = regular_from_type(2, 3, 3);
  const auto mon = monodromy(h);
  // Exhaustive scan over subgroups generated by at most two elements.
  std::set<std::set<Permutation>> subgroups;
  std::vector<FiniteGroup> normal;
  for (const auto& a : mon.elements()) {
    for (const auto& b : mon.elements()) {
      auto sub = generate_group({a, b}, mon.degree());
      if (!subgroups.insert(as_set(sub)).second) continue;
      bool is_normal = true;
      for (const auto& x : sub.elements()) {
        for (const auto& g : mon.elements()) is_normal = is_normal && sub.contains(x.conjugate_by(g));
      }
      if (is_normal && sub.order() > 1) normal.push_back(sub);
    }
  }
  std::vector<std::size_t> orders;
  for (const auto& n : normal) orders.push_back(n.order());
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{4, 12, 24}));
  const auto& v4 = *std::find_if(normal.begin(), normal.end(), [](const auto& n) { return n.order() == 4; });
  EXPECT_TRUE(is_normal_subgroup(mon, v4));
  const auto q = quotient_action(mon, v4);
  EXPECT_EQ(q.coset_count, 6u);
}

TEST(QuotientAction, RejectsNonNormal) {
  const auto g = alt5();
  const auto sub = generate_group({Permutation::from_cycles(5, {{0, 1, 2}})}, 5);
  try {
    quotient_action(g, sub);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }
}

TEST(Recognize, Alt5MatchesDirectModel) {
  const auto g = alt5();
  EXPECT_EQ(recognize_group(g), GroupName::alt5());
  // Element-order multiset of A5 counted by hand: 1 + 15 + 20 + 24.
  EXPECT_EQ(element_order_counts(g), (std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
}

TEST(Recognize, CyclicSix) {
  const auto g = generate_group({Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}})}, 5);
  EXPECT_EQ(recognize_group(g), GroupName::cyclic(6));
  EXPECT_EQ(recognize_group(g).to_string(), "C6");
}

TEST(Recognize, IrregularityGroupOfPinTetrahedron) {
  const auto k = pin(build_platonic(Platonic::Tetrahedron));
  EXPECT_EQ(recognize_group(point_stabilizer(monodromy(k), 0)), GroupName::alt4());
}

TEST(Recognize, SmallFamilies) {
  EXPECT_EQ(recognize_group(generate_group({Permutation::identity(3)}, 3)), GroupName::trivial());
  EXPECT_EQ(recognize_group(generate_group({Permutation::from_cycles(2, {{0, 1}})}, 2)), GroupName::cyclic(2));
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(recognize_group(dihedral_model(n)), GroupName::dihedral(n));
  EXPECT_EQ(recognize_group(model(GroupName::sym4())), GroupName::sym4());
  EXPECT_EQ(recognize_group(model(GroupName::alt4())), GroupName::alt4());
  // C2 x C2 x C2 is on none of the lists.
  const auto e8 = generate_group({Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{2, 3}}),
                                  Permutation::from_cycles(6, {{4, 5}})}, 6);
  EXPECT_EQ(recognize_group(e8), GroupName::unrecognized(8));
  // C2 x C6 is abelian of exponent 6: not cyclic, not dihedral.
  const auto c2c6 = generate_group({Permutation::from_cycles(8, {{0, 1}}), Permutation::from_cycles(8, {{2, 3, 4, 5, 6, 7}})}, 8);
  EXPECT_EQ(recognize_group(c2c6).kind, GroupName::Kind::Unrecognized);
}

TEST(GroupName, Normalisation) {
  EXPECT_EQ(GroupName::dihedral(1), GroupName::cyclic(2));
  EXPECT_EQ(GroupName::dihedral(2), GroupName::klein_four());
  EXPECT_EQ(GroupName::cyclic(1), GroupName::trivial());
  EXPECT_EQ(GroupName::dihedral(5).order(), 10u);
  EXPECT_EQ(GroupName::dihedral(5).to_string(), "D5");
  EXPECT_EQ(GroupName::unrecognized(8).to_string(), "unrecognized(8)");
}

TEST(DerivedSubgroup, AbelianIsTrivial) {
  const auto g = generate_group({Permutation::from_cycles(6, {{0, 1, 2}}), Permutation::from_cycles(6, {{3, 4}})}, 6);
  EXPECT_EQ(derived_subgroup(g).order(), 1u);
}

TEST(DerivedSubgroup, Alt5IsPerfect) {
  const auto g = alt5();
  EXPECT_EQ(derived_subgroup(g).order(), 60u);
}

TEST(DerivedSubgroup, DihedralTwelveGivesCyclicThree) {
  const auto d6 = dihedral_model(6);
  std::vector<Permutation> commutators;
  for (const auto& a : d6.elements()) {
    for (const auto& b : d6.elements()) commutators.push_back(a.inverse() * b.inverse() * a * b);
  }
  const auto brute = generate_group(commutators, 6);
  const auto derived = derived_subgroup(d6);
  EXPECT_EQ(brute.order(), 3u);
  EXPECT_EQ(as_set(derived), as_set(brute));
  EXPECT_EQ(recognize_group(derived), GroupName::cyclic(3));
}

TEST(GroupProperties, OrbitStabilizer) {
  std::size_t checked = 0;
  for (const auto& [name, h] : catalog()) {
    if (h.size() > 48) continue;
    for (const auto& gens : {std::vector<Permutation>{h.h(0), h.h(1), h.h(2)}, std::vector<Permutation>{h.h(1), h.h(2)},
                             std::vector<Permutation>{h.h(0), h.h(2)}}) {
      const auto g = generate_group(gens, h.size());
      for (const auto& orbit : orbits(gens, h.size())) {
        for (Point x : orbit) {
          ASSERT_EQ(orbit.size() * point_stabilizer(g, x).order(), g.order()) << name;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(GroupProperties, NormalClosureIsConjugationInvariant) {
  for (const auto& [name, h] : catalog()) {
    if (h.size() > 48) continue;
    const auto mon = monodromy(h);
    const auto closure = normal_closure(mon, point_stabilizer(mon, 0).generators());
    for (const auto& g : mon.generators()) {
      for (const auto& n : closure.elements()) ASSERT_TRUE(closure.contains(n.conjugate_by(g))) << name;
    }
    EXPECT_TRUE(is_normal_subgroup(mon, closure)) << name;
  }
}

TEST(GroupProperties, QuotientActionPreservesRelations) {
  std::size_t relations = 0;
  for (const auto& [name, h] : catalog()) {
    const auto mon = monodromy(h);
    if (mon.order() > 240) continue;
    const auto closure = normal_closure(mon, point_stabilizer(mon, 0).generators());
    const auto q = quotient_action(mon, closure);
    // Every word of length <= 6 that is trivial in Mon is trivial on cosets.
    std::vector<std::pair<Permutation, Permutation>> frontier{{mon.identity(), Permutation::identity(q.coset_count)}};
    for (int length = 1; length <= 6; ++length) {
      std::vector<std::pair<Permutation, Permutation>> next;
      for (const auto& [w, qw] : frontier) {
        for (int i = 0; i < 3; ++i) {
          auto pw = w * mon.generators()[static_cast<std::size_t>(i)];
          auto pq = qw * q.generator_images[static_cast<std::size_t>(i)];
          if (pw.is_identity()) {
            ASSERT_TRUE(pq.is_identity()) << name;
            ++relations;
          }
          next.emplace_back(std::move(pw), std::move(pq));
        }
      }
      frontier = std::move(next);
    }
  }
  EXPECT_GT(relations, 0u);
}

TEST(GroupProperties, RecognitionAgreesWithFingerprints) {
  using K = GroupName::Kind;
  std::vector<FiniteGroup> groups;
  for (const auto& [name, h] : catalog()) {
    const auto mon = monodromy(h);
    if (mon.order() <= 24) groups.push_back(mon);
    if (mon.order() <= 24 * h.size()) {
      const auto stab = point_stabilizer(mon, 0);
      if (stab.order() <= 24) groups.push_back(stab);
    }
  }
  ASSERT_GT(groups.size(), 50u);
  std::size_t recognised = 0;
  for (const auto& g : groups) {
    const auto name = recognize_group(g);
    const auto fp = fingerprint(g);
    std::vector<GroupName> candidates{GroupName::cyclic(g.order())};
    if (g.order() % 2 == 0 && g.order() >= 2) candidates.push_back(GroupName::dihedral(g.order() / 2));
    if (g.order() == 4) candidates.push_back(GroupName::klein_four());
    if (g.order() == 12) candidates.push_back(GroupName::alt4());
    if (g.order() == 24) candidates.push_back(GroupName::sym4());
    if (name.kind == K::Unrecognized) {
      for (const auto& c : candidates) EXPECT_NE(fingerprint(model(c)), fp) << c.to_string();
    } else {
      EXPECT_EQ(name.order(), g.order());
      EXPECT_EQ(fingerprint(model(name)), fp) << name.to_string();
      ++recognised;
    }
  }
  EXPECT_GT(recognised, 0u);
}
