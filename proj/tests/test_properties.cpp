#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace property_checks;
using testing_support::catalog;

namespace {

std::string joined(const Violations& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

}  // namespace

TEST(CatalogProperties, CatalogIsLargeEnough) { EXPECT_GE(catalog().size(), 60u); }

TEST(CatalogProperties, EulerFormulas) { EXPECT_EQ(joined(euler_formulas(catalog())), ""); }

TEST(CatalogProperties, CoveringValencies) { EXPECT_EQ(joined(covering_valencies(catalog())), ""); }

TEST(CatalogProperties, EvenValencies) { EXPECT_EQ(joined(even_valencies(catalog())), ""); }

TEST(CatalogProperties, WalshPinTransfer) { EXPECT_EQ(joined(walsh_pin_transfer(catalog())), ""); }

TEST(CatalogProperties, DualityAndInjectivity) { EXPECT_EQ(joined(duality_and_injectivity(catalog())), ""); }

TEST(CatalogProperties, DualityInvariants) { EXPECT_EQ(joined(duality_invariants(catalog())), ""); }

TEST(CatalogProperties, IrregularityIdentities) {
  std::size_t checked = 0;
  EXPECT_EQ(joined(irregularity_identities(catalog(), &checked)), "");
  EXPECT_GT(checked, 40u);
}

TEST(CatalogProperties, Delta0Orders) { EXPECT_EQ(joined(delta0_orders(catalog())), ""); }

TEST(CatalogProperties, ChecksDetectViolations) {
  // A non-bipartite-regular member slipped into the list is reported.
  std::vector<NamedHypermap> tampered{{"T", build_platonic(Platonic::Tetrahedron)}};
  EXPECT_TRUE(even_valencies(tampered).empty());
  Violations v;
  check_covering_valencies(v, build_platonic(Platonic::Tetrahedron), build_platonic(Platonic::Tetrahedron),
                           std::vector<Point>(24, 0), "constant map");
  EXPECT_EQ(v.size(), 1u);
}
