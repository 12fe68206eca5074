#include <doctest.h>

#include "intaut/orbit_analysis.hpp"
#include "intaut/transform_group.hpp"

using namespace intaut;

TEST_SUITE("orbit_analysis") {
  TEST_CASE("orbits_under examples") {
    const std::vector<PointPermutation> gens{PointPermutation({1, 0, 2, 3, 4}), PointPermutation({0, 1, 3, 4, 2})};
    const auto orb = orbits_under(gens, 5);
    CHECK(orb.rank() == 2);
    CHECK(orb.orbits[0] == std::vector<std::uint32_t>{0, 1});
    CHECK(orb.orbits[1] == std::vector<std::uint32_t>{2, 3, 4});
    CHECK(orb.sizes() == std::vector<std::size_t>{2, 3});
    CHECK(orb.subdegrees(0) == std::vector<std::size_t>{3});
    CHECK(orbits_under({}, 3).rank() == 3);
    CHECK_THROWS_AS(orbits_under(gens, 4), Error);
  }

  TEST_CASE("M-orbits are the sphere classes") {
    const auto f3 = make_field(3, 1);
    const AffineSpace s33(f3, 3);
    const auto orb = m_orbits(s33);
    CHECK(orb.sizes() == std::vector<std::size_t>{1, 6, 8, 12});
    CHECK(orb == classify_partition(s33));
    CHECK(m_orbits(AffineSpace(f3, 2)).sizes() == std::vector<std::size_t>{1, 4, 4});

    for (const auto& [p, h, n] : {std::tuple{3u, 1u, 4u}, {5u, 1u, 3u}, {3u, 2u, 2u}, {5u, 1u, 2u}, {7u, 1u, 3u}}) {
      const AffineSpace s(make_field(p, h), n);
      const auto enumerated = m_orbits(s, MGenerators::Enumerated);
      CHECK(enumerated == m_orbits(s, MGenerators::Reflections));
      CHECK(enumerated == classify_partition(s));
    }
  }

  TEST_CASE("stabilizer orbits of the semiaffine group") {
    const AffineSpace s(make_field(3, 1), 3);
    const auto group = semiaffine_group(s);
    const auto orb = stabilizer_orbits(group, 0, true);
    CHECK(orb.rank() == 4);
    CHECK(orb.subdegrees(0) == std::vector<std::size_t>{6, 8, 12});
    CHECK(orb == classify_partition(s));
  }

  TEST_CASE("stabilizer orbits of other groups") {
    const AffineSpace s(make_field(3, 1), 2);
    std::vector<PointPermutation> translations;
    for (PointIndex b = 0; b < s.size(); ++b)
      translations.push_back(to_permutation(SemiaffineMap::translation(s.point(b)), s));
    std::sort(translations.begin(), translations.end());
    CHECK(stabilizer_orbits(translations, 0, true).rank() == 9);

    const auto sym4 = generate_group(std::vector{PointPermutation({1, 2, 3, 0}), PointPermutation({1, 0, 2, 3})}, 4, 100);
    const auto orb = stabilizer_orbits(sym4, 2, true);
    CHECK(orb.rank() == 2);
    CHECK(orb.subdegrees(2) == std::vector<std::size_t>{3});

    const std::vector<PointPermutation> not_group{PointPermutation::identity(3), PointPermutation({1, 2, 0})};
    CHECK_THROWS_AS(stabilizer_orbits(not_group, 0, true), Error);
  }

  TEST_CASE("orbital connectivity") {
    const auto f3 = make_field(3, 1);
    const AffineSpace s33(f3, 3);
    for (auto cls : {SphereClass::Isotropic, SphereClass::SquareNonzero, SphereClass::NonSquare}) {
      const auto c = orbital_connected(s33, cls);
      CHECK(c.connected);
      CHECK_FALSE(c.degenerate);
      CHECK(c.reached == 27);
    }
    CHECK_THROWS_AS(orbital_connected(s33, SphereClass::Origin), Error);

    const AffineSpace s32(f3, 2);
    const auto iso = orbital_connected(s32, SphereClass::Isotropic);
    CHECK(iso.degenerate);
    CHECK_FALSE(iso.connected);
    CHECK(orbital_connected(s32, SphereClass::SquareNonzero).connected);

    const AffineSpace s52(make_field(5, 1), 2);
    const auto iso5 = orbital_connected(s52, SphereClass::Isotropic);
    CHECK_FALSE(iso5.degenerate);
    CHECK(iso5.connected);
  }
}
