#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "orbitcoh/error.hpp"
#include "orbitcoh/rootsys.hpp"

using namespace orbitcoh;
using namespace orbitcoh::rootsys;

namespace {

std::vector<CartanType> all_types_up_to(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(CartanType::make(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(CartanType::make(Family::B, n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(CartanType::make(Family::C, n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(CartanType::make(Family::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(CartanType::make(Family::E, n));
  out.push_back(CartanType::make(Family::F, 4));
  out.push_back(CartanType::make(Family::G, 2));
  return out;
}

RootVector negate(RootVector v) {
  for (int& x : v) x = -x;
  return v;
}

}  // namespace

TEST_CASE("A1 has the two roots alpha and -alpha") {
  const auto rs = build_root_system(CartanType::parse("A1"));
  REQUIRE(rs.roots().size() == 2);
  CHECK(rs.is_root({1}));
  CHECK(rs.is_root({-1}));
  CHECK(rs.highest_root() == RootVector{1});
}

TEST_CASE("root counts of the exceptional types") {
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"G2", 12}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  const std::vector<int> dims = {14, 52, 78, 133, 248};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto type = CartanType::parse(expected[k].first);
    const auto rs = build_root_system(type);
    CAPTURE(expected[k].first);
    CHECK(rs.roots().size() == expected[k].second);
    CHECK(expected_root_count(type) == expected[k].second);
    CHECK(algebra_dimension(type) == dims[k]);
    CHECK(rs.positive_roots().size() * 2 == rs.roots().size());
  }
}

TEST_CASE("classical root counts match the closed formulas") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(build_root_system(CartanType::make(Family::A, n)).roots().size() ==
          static_cast<std::size_t>(n * (n + 1)));
  }
  for (int n = 2; n <= 8; ++n) {
    CHECK(build_root_system(CartanType::make(Family::B, n)).roots().size() ==
          static_cast<std::size_t>(2 * n * n));
  }
  for (int n = 3; n <= 8; ++n) {
    CHECK(build_root_system(CartanType::make(Family::C, n)).roots().size() ==
          static_cast<std::size_t>(2 * n * n));
  }
  for (int n = 4; n <= 8; ++n) {
    CHECK(build_root_system(CartanType::make(Family::D, n)).roots().size() ==
          static_cast<std::size_t>(2 * n * (n - 1)));
  }
}

TEST_CASE("Cartan matrix conventions") {
  CHECK(cartan_matrix(CartanType::parse("G2")) == IntMatrix{{2, -3}, {-1, 2}});
  const auto b3 = cartan_matrix(CartanType::parse("B3"));
  CHECK(b3[2][1] == -2);
  CHECK(b3[1][2] == -1);
  const auto c3 = cartan_matrix(CartanType::parse("C3"));
  CHECK(c3[1][2] == -2);
  CHECK(c3[2][1] == -1);
  const auto f4 = cartan_matrix(CartanType::parse("F4"));
  CHECK(f4[2][1] == -2);
  CHECK(f4[1][2] == -1);
  const auto e6 = cartan_matrix(CartanType::parse("E6"));
  CHECK(e6[1][3] == -1);  // node 2 hangs off node 4
  CHECK(e6[0][2] == -1);
  CHECK(e6[0][1] == 0);
}

TEST_CASE("Cartan matrices satisfy the structural invariants") {
  for (const auto& t : all_types_up_to(8)) {
    const auto m = cartan_matrix(t);
    CAPTURE(t.to_string());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(m[i][i] == 2);
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i == j) continue;
        CHECK(m[i][j] <= 0);
        CHECK(m[i][j] >= -3);
        CHECK((m[i][j] == 0) == (m[j][i] == 0));
      }
    }
  }
}

TEST_CASE("highest roots") {
  CHECK(build_root_system(CartanType::parse("G2")).highest_root() == RootVector{3, 2});
  CHECK(build_root_system(CartanType::parse("E6")).highest_root() ==
        RootVector{1, 2, 2, 3, 2, 1});
  CHECK(build_root_system(CartanType::parse("E7")).highest_root() ==
        RootVector{2, 2, 3, 4, 3, 2, 1});
  CHECK(build_root_system(CartanType::parse("E8")).highest_root() ==
        RootVector{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_root_system(CartanType::parse("F4")).highest_root() == RootVector{2, 3, 4, 2});
}

TEST_CASE("highest root is dominant, long and dominates every root") {
  for (const auto& t : all_types_up_to(6)) {
    const auto rs = build_root_system(t);
    CAPTURE(t.to_string());
    const auto& theta = rs.highest_root();
    const auto simple = rs.simple_roots();
    for (const auto& a : simple) CHECK(rs.pairing(theta, a) >= 0);
    long max_len = 0;
    for (const auto& r : rs.roots()) max_len = std::max(max_len, rs.inner_product(r, r));
    CHECK(rs.inner_product(theta, theta) == max_len);
    for (const auto& r : rs.roots()) {
      for (std::size_t i = 0; i < r.size(); ++i) CHECK(theta[i] >= r[i]);
    }
    // s_i fixes theta whenever <theta, alpha_i^vee> = 0
    for (std::size_t i = 0; i < simple.size(); ++i) {
      if (rs.pairing(theta, simple[i]) == 0) CHECK(rs.reflect(i, theta) == theta);
    }
  }
}

TEST_CASE("roots are closed under negation and sign-coherent") {
  for (const char* name : {"G2", "F4", "E6", "E7", "E8", "B5", "C4", "D6"}) {
    const auto rs = build_root_system(CartanType::parse(name));
    CAPTURE(name);
    CHECK(rs.roots().size() % 2 == 0);
    for (const auto& r : rs.roots()) {
      CHECK(rs.is_root(negate(r)));
      const bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
      const bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
      CHECK((nonneg || nonpos));
    }
  }
}

TEST_CASE("pairings of roots lie in {0, +-1, +-2, +-3}") {
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const auto rs = build_root_system(CartanType::parse(name));
    CAPTURE(name);
    bool ok = true;
    for (const auto& a : rs.roots()) {
      for (const auto& b : rs.roots()) {
        const int p = rs.pairing(b, a);
        if (p < -3 || p > 3) ok = false;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("reflection closure is idempotent") {
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const auto rs = build_root_system(CartanType::parse(name));
    CAPTURE(name);
    std::set<RootVector> all(rs.roots().begin(), rs.roots().end());
    for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i) {
      for (const auto& r : rs.roots()) CHECK(all.count(rs.reflect(i, r)) == 1);
    }
    const auto again = generate_roots(rs.cartan_matrix(), 10 * rs.roots().size());
    CHECK(std::set<RootVector>(again.begin(), again.end()) == all);
  }
}

TEST_CASE("extended basis") {
  SUBCASE("A1") {
    const auto eb = extended_basis(build_root_system(CartanType::parse("A1")));
    CHECK(eb.nodes.size() == 2);
    CHECK(eb.alpha_0 == RootVector{-1});
  }
  SUBCASE("G2") {
    const auto eb = extended_basis(build_root_system(CartanType::parse("G2")));
    CHECK(eb.nodes.size() == 3);
    CHECK(eb.alpha_0 == RootVector{-3, -2});
    CHECK(eb.alpha_0_index == 2);
    CHECK(eb.nodes[2] == eb.alpha_0);
  }
  SUBCASE("E8") {
    const auto rs = build_root_system(CartanType::parse("E8"));
    const auto eb = extended_basis(rs);
    CHECK(eb.nodes.size() == 9);
    CHECK(eb.alpha_0 == negate(rs.highest_root()));
    for (const auto& a : rs.simple_roots()) CHECK(rs.pairing(eb.alpha_0, a) <= 0);
  }
  SUBCASE("extended Cartan matrix of E6 attaches alpha_0 to node 2") {
    const auto m = extended_cartan_matrix(build_root_system(CartanType::parse("E6")));
    REQUIRE(m.size() == 7);
    CHECK(m[6][6] == 2);
    CHECK(m[6][1] == -1);
    CHECK(m[1][6] == -1);
    for (std::size_t i : {0u, 2u, 3u, 4u, 5u}) CHECK(m[6][i] == 0);
  }
}

TEST_CASE("identify_cartan_type examples") {
  CHECK(identify_cartan_type({{2}}) == CartanType::parse("A1"));
  CHECK(identify_cartan_type({{2, -1}, {-3, 2}}) == CartanType::parse("G2"));
  CHECK(identify_cartan_type({{2, -3}, {-1, 2}}) == CartanType::parse("G2"));
  // B2 and C2 coincide; so do A3 and D3.
  CHECK(identify_cartan_type({{2, -2}, {-1, 2}}) == CartanType::parse("B2"));
  CHECK(CartanType::parse("C2") == CartanType::parse("B2"));
  CHECK(CartanType::parse("D3") == CartanType::parse("A3"));
}

TEST_CASE("identify_cartan_type round trip, also under node permutation") {
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.to_string());
    const auto m = cartan_matrix(t);
    CHECK(identify_cartan_type(m) == t);
    const std::size_t n = m.size();
    IntMatrix rev(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rev[i][j] = m[n - 1 - i][n - 1 - j];
    }
    CHECK(identify_cartan_type(rev) == t);
  }
}

TEST_CASE("B and C of equal rank are told apart by the arrow") {
  for (int n = 3; n <= 8; ++n) {
    const auto b = cartan_matrix(CartanType::make(Family::B, n));
    const auto c = cartan_matrix(CartanType::make(Family::C, n));
    CHECK(identify_cartan_type(b).family() == Family::B);
    CHECK(identify_cartan_type(c).family() == Family::C);
  }
}

TEST_CASE("identify_cartan_type rejects non finite-type input") {
  CHECK_THROWS_AS(identify_cartan_type({}), UnrecognizedDiagram);
  CHECK_THROWS_AS(identify_cartan_type({{2, 0}, {0, 2}}), UnrecognizedDiagram);       // A1 x A1
  CHECK_THROWS_AS(identify_cartan_type({{2, -2}, {-2, 2}}), UnrecognizedDiagram);     // affine A1
  CHECK_THROWS_AS(identify_cartan_type({{2, -1}, {0, 2}}), UnrecognizedDiagram);      // zero pattern
  CHECK_THROWS_AS(identify_cartan_type({{3, -1}, {-1, 2}}), UnrecognizedDiagram);     // diagonal
  CHECK_THROWS_AS(identify_cartan_type({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                  UnrecognizedDiagram);  // affine A2 cycle
}

TEST_CASE("invalid Cartan types") {
  CHECK_THROWS_AS(CartanType::make(Family::E, 5), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::make(Family::E, 9), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::make(Family::F, 3), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::make(Family::G, 3), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::make(Family::A, 0), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::make(Family::B, 1), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("X3"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("E"), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("E6x"), InvalidCartanType);
  CHECK(CartanType::parse("E7").to_string() == "E7");
}

TEST_CASE("closure cap stops non finite-type matrices") {
  CHECK_THROWS_AS(generate_roots({{2, -2}, {-2, 2}}, 100), ClosureLimitExceeded);
  CHECK_THROWS_AS(generate_roots({{2, -3}, {-3, 2}}, 100), ClosureLimitExceeded);
}

TEST_CASE("E6 folding") {
  const auto sum = fold_e6(FoldingSpec::standard(FoldingConvention::kOrbitSum));
  const auto res = fold_e6(FoldingSpec::standard(FoldingConvention::kOrbitRestriction));
  CHECK(sum == CartanType::parse("F4"));
  CHECK(res == CartanType::parse("C4"));
  CHECK(fold_e6(FoldingSpec::identity(FoldingConvention::kOrbitSum)) == CartanType::parse("E6"));
  CHECK(fold_e6(FoldingSpec::identity(FoldingConvention::kOrbitRestriction)) ==
        CartanType::parse("E6"));
}

TEST_CASE("folded E6 matrix has rank 4 and entries in {2, -1, -2, 0}") {
  const auto e6 = cartan_matrix(CartanType::parse("E6"));
  const std::vector<std::vector<std::size_t>> orbits = {{0, 5}, {2, 4}, {1}, {3}};
  for (const bool transpose : {false, true}) {
    const auto m = folded_cartan_matrix(e6, orbits, transpose);
    REQUIRE(m.size() == 4);
    std::set<int> nonzero;
    for (const auto& row : m) {
      REQUIRE(row.size() == 4);
      for (const int x : row) {
        if (x != 0) nonzero.insert(x);
      }
    }
    CHECK(nonzero == std::set<int>{2, -1, -2});
    CHECK(identify_cartan_type(m).family() == Family::F);
  }
}

TEST_CASE("malformed foldings are rejected") {
  auto spec = FoldingSpec::standard(FoldingConvention::kOrbitSum);
  spec.node_orbits = {{1, 6}, {3, 5}, {2}};  // node 4 missing
  CHECK_THROWS_AS(fold_e6(spec), InvalidFolding);
  spec.node_orbits = {{1, 6}, {3, 5}, {2}, {4}, {4}};  // repeated node
  CHECK_THROWS_AS(fold_e6(spec), InvalidFolding);
  spec.node_orbits = {{1, 7}, {3, 5}, {2}, {4}, {6}};  // out of range
  CHECK_THROWS_AS(fold_e6(spec), InvalidFolding);
  spec.node_orbits = {{1, 2}, {3, 5}, {6}, {4}};  // not automorphism orbits
  CHECK_THROWS_AS(fold_e6(spec), InvalidFolding);
  spec = FoldingSpec::standard(FoldingConvention::kOrbitSum);
  spec.source = CartanType::parse("E7");
  CHECK_THROWS_AS(fold_e6(spec), InvalidFolding);
}

TEST_CASE("folding convention names") {
  CHECK(parse_folding_convention("orbit-sum") == FoldingConvention::kOrbitSum);
  CHECK(parse_folding_convention("orbit-restriction") == FoldingConvention::kOrbitRestriction);
  CHECK(to_string(FoldingConvention::kOrbitRestriction) == "orbit-restriction");
  CHECK_THROWS_AS(parse_folding_convention("transpose"), InvalidFolding);
}
