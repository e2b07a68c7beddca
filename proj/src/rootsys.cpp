#include "orbitcoh/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "orbitcoh/error.hpp"

namespace orbitcoh::rootsys {

namespace {

bool valid_pair(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void link(IntMatrix& m, std::size_t i, std::size_t j) {
  m[i][j] = -1;
  m[j][i] = -1;
}

// Rational number with a positive denominator, only as much as the symmetrizer needs.
struct Ratio {
  long num;
  long den;
};

Ratio reduce(Ratio r) {
  const long g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

std::vector<int> compute_symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Ratio> d(n, Ratio{0, 0});
  // Breadth-first over each connected component; d_j = d_i * C[i][j] / C[j][i].
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start].den != 0) continue;
    d[start] = {1, 1};
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || c[i][j] == 0) continue;
        const Ratio next = reduce({d[i].num * c[i][j], d[i].den * c[j][i]});
        if (d[j].den == 0) {
          d[j] = next;
          queue.push_back(j);
        } else if (d[j].num * next.den != next.num * d[j].den) {
          throw InvalidCartanType("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  long lcm = 1;
  for (const Ratio& r : d) lcm = std::lcm(lcm, r.den);
  std::vector<long> scaled(n);
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = d[i].num * (lcm / d[i].den);
    g = std::gcd(g, scaled[i]);
  }
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(scaled[i] / g);
  return out;
}

void check_generalized_cartan(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw UnrecognizedDiagram("empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw UnrecognizedDiagram("matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 2) throw UnrecognizedDiagram("diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) throw UnrecognizedDiagram("positive off-diagonal entry");
      if ((m[i][j] == 0) != (m[j][i] == 0)) {
        throw UnrecognizedDiagram("zero pattern is not symmetric");
      }
      const int bond = m[i][j] * m[j][i];
      if (bond > 3) throw UnrecognizedDiagram("bond of multiplicity above 3");
    }
  }
}

// Backtracking search for a permutation p with canonical[i][j] == m[p[i]][p[j]].
// Canonical nodes are visited in breadth-first order, so each new node is
// adjacent to an already placed one and the branching stays tiny.
bool isomorphic(const IntMatrix& canonical, const IntMatrix& m) {
  const std::size_t n = canonical.size();
  if (m.size() != n) return false;
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop_front();
      order.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && canonical[i][j] != 0 && i != j) {
          seen[j] = true;
          q.push_back(j);
        }
      }
    }
  }
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const std::size_t node = order[k];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < k && ok; ++prev) {
        const std::size_t other = order[prev];
        ok = canonical[node][other] == m[cand][image[other]] &&
             canonical[other][node] == m[image[other]][cand];
      }
      if (!ok) continue;
      used[cand] = true;
      image[node] = cand;
      if (self(self, k + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return place(place, 0);
}

bool less_or_equal(const RootVector& a, const RootVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

CartanType CartanType::make(Family family, int rank) {
  if (!valid_pair(family, rank)) {
    std::ostringstream os;
    os << "invalid Cartan type " << static_cast<char>(family) << rank;
    throw InvalidCartanType(os.str());
  }
  if (family == Family::C && rank == 2) return CartanType(Family::B, 2);
  if (family == Family::D && rank == 3) return CartanType(Family::A, 3);
  return CartanType(family, rank);
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + std::string(text) + "'");
  const char f = text.front();
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos) {
    throw InvalidCartanType("unknown family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (const char ch : text.substr(1)) {
    if (ch < '0' || ch > '9' || rank > 1000) {
      throw InvalidCartanType("cannot parse Cartan type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (ch - '0');
  }
  return make(static_cast<Family>(f), rank);
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

IntMatrix cartan_matrix(const CartanType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  switch (type.family()) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      m[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6(-7-8), node 2 attached to 4.
      link(m, 0, 2);
      link(m, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      link(m, 0, 1);
      link(m, 2, 3);
      m[1][2] = -1;
      m[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      m[0][1] = -3;  // alpha_1 short
      m[1][0] = -1;
      break;
  }
  return m;
}

std::size_t expected_root_count(const CartanType& type) {
  const auto n = static_cast<std::size_t>(type.rank());
  switch (type.family()) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

int algebra_dimension(const CartanType& type) {
  return static_cast<int>(expected_root_count(type)) + type.rank();
}

std::vector<RootVector> generate_roots(const IntMatrix& cartan, std::size_t cap) {
  const std::size_t n = cartan.size();
  std::set<RootVector> found;
  std::deque<RootVector> frontier;
  auto visit = [&](RootVector v) {
    if (found.insert(v).second) {
      if (found.size() > cap) {
        throw ClosureLimitExceeded("reflection closure exceeded " + std::to_string(cap) +
                                   " roots; matrix is not of finite type");
      }
      frontier.push_back(std::move(v));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    visit(e);
    e[i] = -1;
    visit(e);
  }
  while (!frontier.empty()) {
    const RootVector beta = frontier.front();
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < n; ++j) p += cartan[i][j] * beta[j];
      if (p == 0) continue;
      RootVector image = beta;
      image[i] -= p;
      visit(std::move(image));
    }
  }
  return {found.begin(), found.end()};
}

RootSystem::RootSystem(CartanType type, IntMatrix cartan, std::vector<RootVector> roots)
    : type_(type), cartan_(std::move(cartan)), roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end());
  symmetrizer_ = compute_symmetrizer(cartan_);
  highest_ = rootsys::highest_root(*this);
}

std::vector<RootVector> RootSystem::simple_roots() const {
  std::vector<RootVector> out;
  for (int i = 0; i < rank(); ++i) {
    RootVector e(static_cast<std::size_t>(rank()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RootVector> RootSystem::positive_roots() const {
  std::vector<RootVector> out;
  for (const auto& r : roots_) {
    if (height(r) > 0) out.push_back(r);
  }
  return out;
}

bool RootSystem::is_root(const RootVector& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

long RootSystem::inner_product(const RootVector& beta, const RootVector& gamma) const {
  long sum = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      sum += static_cast<long>(beta[i]) * gamma[j] * symmetrizer_[i] * cartan_[i][j];
    }
  }
  return sum;
}

int RootSystem::pairing(const RootVector& beta, const RootVector& gamma) const {
  const long norm = inner_product(gamma, gamma);
  if (norm == 0) throw InvalidCartanType("pairing against the zero vector");
  const long twice = 2 * inner_product(beta, gamma);
  if (twice % norm != 0) throw InvalidCartanType("non-integral pairing; vector is not a root");
  return static_cast<int>(twice / norm);
}

RootVector RootSystem::reflect(std::size_t i, const RootVector& beta) const {
  int p = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) p += cartan_[i][j] * beta[j];
  RootVector out = beta;
  out[i] -= p;
  return out;
}

RootSystem build_root_system(const CartanType& type) {
  IntMatrix c = cartan_matrix(type);
  auto roots = generate_roots(c, 10 * expected_root_count(type));
  return RootSystem(type, std::move(c), std::move(roots));
}

int height(const RootVector& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

RootVector highest_root(const RootSystem& rs) {
  const RootVector* best = nullptr;
  for (const auto& r : rs.roots()) {
    if (best == nullptr || height(r) > height(*best)) best = &r;
  }
  for (const auto& r : rs.roots()) {
    if (!less_or_equal(r, *best)) {
      throw InvalidCartanType("root system has no unique maximal root");
    }
  }
  return *best;
}

ExtendedBasis extended_basis(const RootSystem& rs) {
  ExtendedBasis eb;
  eb.alpha_0 = rs.highest_root();
  for (int& c : eb.alpha_0) c = -c;
  eb.nodes = rs.simple_roots();
  eb.alpha_0_index = eb.nodes.size();
  eb.nodes.push_back(eb.alpha_0);
  return eb;
}

IntMatrix extended_cartan_matrix(const RootSystem& rs) {
  const ExtendedBasis eb = extended_basis(rs);
  const std::size_t n = eb.nodes.size();
  IntMatrix m(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rs.pairing(eb.nodes[j], eb.nodes[i]);
  }
  return m;
}

std::string to_string(FoldingConvention c) {
  return c == FoldingConvention::kOrbitSum ? "orbit-sum" : "orbit-restriction";
}

FoldingConvention parse_folding_convention(std::string_view text) {
  if (text == "orbit-sum") return FoldingConvention::kOrbitSum;
  if (text == "orbit-restriction") return FoldingConvention::kOrbitRestriction;
  throw InvalidFolding("unknown folding convention '" + std::string(text) + "'");
}

FoldingSpec FoldingSpec::standard(FoldingConvention convention) {
  return {CartanType::make(Family::E, 6), {{1, 6}, {3, 5}, {2}, {4}}, convention};
}

FoldingSpec FoldingSpec::identity(FoldingConvention convention) {
  return {CartanType::make(Family::E, 6), {{1}, {2}, {3}, {4}, {5}, {6}}, convention};
}

IntMatrix folded_cartan_matrix(const IntMatrix& cartan,
                               const std::vector<std::vector<std::size_t>>& orbits,
                               bool transpose) {
  const std::size_t n = cartan.size();
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (orbits[k].empty()) throw InvalidFolding("empty orbit");
    for (const std::size_t node : orbits[k]) {
      if (node >= n) throw InvalidFolding("orbit node out of range");
      if (owner[node] != -1) throw InvalidFolding("node appears in two orbits");
      owner[node] = static_cast<int>(k);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw InvalidFolding("orbits do not cover every node");
  }
  const std::size_t k = orbits.size();
  IntMatrix out(k, std::vector<int>(k, 0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      bool first = true;
      int value = 0;
      for (const std::size_t i : orbits[a]) {
        int sum = 0;
        for (const std::size_t j : orbits[b]) sum += cartan[i][j];
        if (!first && sum != value) {
          throw InvalidFolding("orbit partition is not invariant: entry depends on representative");
        }
        value = sum;
        first = false;
      }
      out[a][b] = value;
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (out[a][a] != 2) throw InvalidFolding("orbit contains adjacent nodes");
  }
  if (transpose) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) std::swap(out[a][b], out[b][a]);
    }
  }
  return out;
}

CartanType fold_e6(const FoldingSpec& spec) {
  if (spec.source != CartanType::make(Family::E, 6)) {
    throw InvalidFolding("only E6 foldings are supported, got " + spec.source.to_string());
  }
  std::vector<std::vector<std::size_t>> orbits;
  for (const auto& orbit : spec.node_orbits) {
    std::vector<std::size_t> zero_based;
    for (const int node : orbit) {
      if (node < 1 || node > 6) throw InvalidFolding("node label out of range 1..6");
      zero_based.push_back(static_cast<std::size_t>(node - 1));
    }
    orbits.push_back(std::move(zero_based));
  }

  const RootSystem e6 = build_root_system(spec.source);
  if (spec.convention == FoldingConvention::kOrbitSum) {
    return identify_cartan_type(folded_cartan_matrix(e6.cartan_matrix(), orbits));
  }

  // alpha_0 is index 6 of the extended matrix and forms its own orbit.
  orbits.push_back({6});
  const IntMatrix extended = folded_cartan_matrix(extended_cartan_matrix(e6), orbits);
  std::size_t dropped = orbits.size();
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    if (std::find(orbits[k].begin(), orbits[k].end(), 0) != orbits[k].end()) dropped = k;
  }
  IntMatrix restricted;
  for (std::size_t a = 0; a < extended.size(); ++a) {
    if (a == dropped) continue;
    std::vector<int> row;
    for (std::size_t b = 0; b < extended.size(); ++b) {
      if (b != dropped) row.push_back(extended[a][b]);
    }
    restricted.push_back(std::move(row));
  }
  return identify_cartan_type(restricted);
}

CartanType identify_cartan_type(const IntMatrix& matrix) {
  check_generalized_cartan(matrix);
  const int n = static_cast<int>(matrix.size());
  std::vector<CartanType> candidates;
  candidates.push_back(CartanType::make(Family::A, n));
  if (n >= 2) candidates.push_back(CartanType::make(Family::B, n));
  if (n >= 3) candidates.push_back(CartanType::make(Family::C, n));
  if (n >= 4) candidates.push_back(CartanType::make(Family::D, n));
  if (n >= 6 && n <= 8) candidates.push_back(CartanType::make(Family::E, n));
  if (n == 4) candidates.push_back(CartanType::make(Family::F, 4));
  if (n == 2) candidates.push_back(CartanType::make(Family::G, 2));
  for (const auto& t : candidates) {
    if (isomorphic(cartan_matrix(t), matrix)) return t;
  }
  throw UnrecognizedDiagram("matrix is not the Cartan matrix of a simple finite-type root system");
}

}  // namespace orbitcoh::rootsys
