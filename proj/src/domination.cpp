#include "dompoly/domination.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "dompoly/error.hpp"

namespace dompoly {

namespace {

void check_budget(const Graph& g, const char* what) {
  if (g.order() > kBruteForceOrderLimit) {
    throw BudgetExceeded(std::string(what) + ": order " + std::to_string(g.order()) +
                         " exceeds the enumeration budget of " + std::to_string(kBruteForceOrderLimit) +
                         " vertices; use a closed form or product formula");
  }
}

IntPolynomial from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) {
    BigInt b;
    mpz_import(b.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    coeffs.push_back(b);
  }
  return IntPolynomial(std::move(coeffs));
}

/// Counts subsets S of `allowed` (bits over vertices 0..n-1) whose closed
/// neighbourhoods cover `target`.  The subset space is split in two halves
/// with precomputed unions so each subset costs one OR and one compare.
std::vector<std::uint64_t> count_covering_subsets(const std::vector<std::uint64_t>& closed,
                                                  std::uint64_t allowed, std::uint64_t target) {
  std::vector<std::uint64_t> members;
  for (std::size_t v = 0; v < closed.size(); ++v)
    if (allowed >> v & 1u) members.push_back(closed[v]);
  const std::size_t k = members.size();
  const std::size_t low_bits = k / 2, high_bits = k - low_bits;

  auto table = [&](std::size_t offset, std::size_t bits) {
    std::vector<std::uint64_t> cover(std::size_t{1} << bits, 0);
    for (std::size_t mask = 1; mask < cover.size(); ++mask) {
      const auto lowest = static_cast<std::size_t>(std::countr_zero(mask));
      cover[mask] = cover[mask & (mask - 1)] | members[offset + lowest];
    }
    return cover;
  };
  const auto low = table(0, low_bits);
  const auto high = table(low_bits, high_bits);

  std::vector<std::uint64_t> counts(k + 1, 0);
  for (std::size_t hi = 0; hi < high.size(); ++hi) {
    const auto hi_cover = high[hi];
    const auto hi_size = static_cast<std::size_t>(std::popcount(hi));
    for (std::size_t lo = 0; lo < low.size(); ++lo) {
      if (((hi_cover | low[lo]) & target) == target) ++counts[hi_size + static_cast<std::size_t>(std::popcount(lo))];
    }
  }
  return counts;
}

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// Brute force, short-circuiting the edgeless case D(nK_1) = x^n.
IntPolynomial subterm_poly(const Graph& g) {
  if (g.size() == 0) return edgeless_poly(g.order());
  return brute_force_poly(g);
}

}  // namespace

IntPolynomial edgeless_poly(std::size_t n) { return IntPolynomial::monomial(1, n); }

IntPolynomial brute_force_poly(const Graph& g) {
  check_budget(g, "brute_force_poly");
  const auto closed = g.closed_masks();
  const auto all = full_mask(g.order());
  auto counts = count_covering_subsets(closed, all, all);
  return from_counts(counts);
}

IntPolynomial union_poly(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial join_poly(const IntPolynomial& p, std::size_t n1, const IntPolynomial& q, std::size_t n2) {
  if (n1 == 0 || n2 == 0) throw InvalidParameter("join_poly: operands must be nonempty");
  const IntPolynomial one_plus_x{1, 1};
  const IntPolynomial one{1};
  return (pow(one_plus_x, static_cast<unsigned>(n1)) - one) * (pow(one_plus_x, static_cast<unsigned>(n2)) - one) + p + q;
}

IntPolynomial corona_poly(const IntPolynomial& h_poly, std::size_t m, std::size_t n) {
  if (m == 0) throw InvalidParameter("corona_poly: H must be nonempty (m >= 1)");
  if (n == 0) throw InvalidParameter("corona_poly: G must be nonempty (n >= 1)");
  const IntPolynomial base = IntPolynomial::x() * pow(IntPolynomial{1, 1}, static_cast<unsigned>(m)) + h_poly;
  return pow(base, static_cast<unsigned>(n));
}

RestrictedCount restricted_count(const Graph& g, Vertex u) {
  if (u >= g.order()) throw InvalidParameter("restricted_count: vertex out of range");
  check_budget(g, "restricted_count");
  const auto closed = g.closed_masks();
  const auto all = full_mask(g.order());
  const std::uint64_t target = all & ~(std::uint64_t{1} << u);
  const std::uint64_t allowed = all & ~closed[u];
  auto counts = count_covering_subsets(closed, allowed, target);
  return {from_counts(counts)};
}

IntPolynomial recurrence_poly_vertex(const Graph& g, Vertex u) {
  if (u >= g.order()) throw InvalidParameter("recurrence_poly_vertex: vertex out of range");
  check_budget(g, "recurrence_poly_vertex");
  const auto x = IntPolynomial::x();
  return x * subterm_poly(contract(g, u)) + subterm_poly(delete_vertex(g, u)) +
         x * subterm_poly(delete_closed_neighborhood(g, u)) -
         IntPolynomial{1, 1} * restricted_count(g, u).polynomial;
}

IntPolynomial recurrence_poly_odot(const Graph& g, Vertex u) {
  if (u >= g.order()) throw InvalidParameter("recurrence_poly_odot: vertex out of range");
  check_budget(g, "recurrence_poly_odot");
  const Graph cut = odot(g, u);
  return subterm_poly(delete_vertex(g, u)) + subterm_poly(cut) - subterm_poly(delete_vertex(cut, u));
}

IntPolynomial family_poly(const FamilySpec& spec) {
  const auto n = static_cast<unsigned>(spec.parameter);
  if (n == 0) throw InvalidParameter("family_poly: parameter must be positive for " + to_string(spec));
  const auto x = IntPolynomial::x();
  const IntPolynomial one_plus_x{1, 1};
  const IntPolynomial k2{0, 2, 1};  // 2x + x^2

  switch (spec.kind) {
    case FamilyKind::Friendship:
      return pow(k2, n) + x * pow(one_plus_x, 2 * n);
    case FamilyKind::Book:
      return pow(k2, n) * IntPolynomial{1, 2} + IntPolynomial::monomial(1, 2) * pow(one_plus_x, 2 * n) -
             IntPolynomial::monomial(2, n);
    case FamilyKind::BookContracted: {
      // Odot recurrence at the hub: (B_n/v) - u = K_n o K_1, its odot is
      // the star K_{1,2n}, and removing u from that leaves 2n K_1.
      const auto corona_part = corona_poly(x, 1, n);
      const auto star = family_poly({FamilyKind::Star, 2 * spec.parameter});
      return corona_part + star - edgeless_poly(2 * spec.parameter);
    }
    case FamilyKind::Complete:
      return pow(one_plus_x, n) - IntPolynomial{1};
    case FamilyKind::Empty:
      return edgeless_poly(n);
    case FamilyKind::Star:
      // Centre in: any leaf subset.  Centre out: every leaf.
      return x * pow(one_plus_x, n) + edgeless_poly(n);
    case FamilyKind::Path:
    case FamilyKind::Cycle: {
      // D(X_n) = x (D(X_{n-1}) + D(X_{n-2}) + D(X_{n-3})) for n >= 4.
      const bool cycle = spec.kind == FamilyKind::Cycle;
      if (cycle && n < 3) throw InvalidParameter("family_poly: cycle needs parameter >= 3");
      std::array<IntPolynomial, 3> seed = cycle
          ? std::array<IntPolynomial, 3>{IntPolynomial{0, 1}, IntPolynomial{0, 2, 1}, IntPolynomial{0, 3, 3, 1}}
          : std::array<IntPolynomial, 3>{IntPolynomial{0, 1}, IntPolynomial{0, 2, 1}, IntPolynomial{0, 1, 3, 1}};
      if (n <= 3) return seed[n - 1];
      for (unsigned i = 4; i <= n; ++i) {
        IntPolynomial next = x * (seed[0] + seed[1] + seed[2]);
        seed = {seed[1], seed[2], std::move(next)};
      }
      return seed[2];
    }
  }
  throw InvalidParameter("family_poly: unknown family");
}

IntPolynomial corona_family_poly(const CoronaFamily& family) {
  if (family.base_order == 0 || family.depth == 0) {
    throw InvalidParameter("corona_family_poly: base order and depth must be positive");
  }
  IntPolynomial h_poly;
  std::size_t m = 0;
  switch (family.kind) {
    case CoronaKind::Friendship:
      h_poly = family_poly({FamilyKind::Friendship, family.n});
      m = 2 * family.n + 1;
      break;
    case CoronaKind::Clique:
      h_poly = family_poly({FamilyKind::Complete, family.n});
      m = family.n;
      break;
    case CoronaKind::Book2:
      h_poly = family_poly({FamilyKind::Book, 2});
      m = 6;
      break;
  }
  std::size_t order = family.base_order;
  IntPolynomial result;
  for (std::size_t level = 0; level < family.depth; ++level) {
    result = corona_poly(h_poly, m, order);
    order *= 1 + m;
  }
  return result;
}

}  // namespace dompoly
