#pragma once

#include <cstddef>

#include "dompoly/graph.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Largest order brute_force_poly will enumerate (2^26 subsets).
inline constexpr std::size_t kBruteForceOrderLimit = 26;

/// D(G, x) by enumerating every vertex subset.  D(empty graph) = 1.
/// Throws BudgetExceeded above kBruteForceOrderLimit.
IntPolynomial brute_force_poly(const Graph& g);

/// D(G1 u G2) = D(G1) D(G2).
IntPolynomial union_poly(const IntPolynomial& p, const IntPolynomial& q);
/// D(G1 + G2) from the operands' polynomials and orders n1, n2 >= 1.
IntPolynomial join_poly(const IntPolynomial& p, std::size_t n1, const IntPolynomial& q, std::size_t n2);
/// D(G o H) = (x(1+x)^m + D(H))^n for |V(H)| = m >= 1 and |V(G)| = n >= 1.
IntPolynomial corona_poly(const IntPolynomial& h_poly, std::size_t m, std::size_t n);

/// Counts the dominating sets of G - u that avoid every vertex of N_G(u).
struct RestrictedCount {
  IntPolynomial polynomial;
};
RestrictedCount restricted_count(const Graph& g, Vertex u);

/// x D(G/u) + D(G-u) + x D(G-N[u]) - (1+x) p_u(G), subterms by brute force.
IntPolynomial recurrence_poly_vertex(const Graph& g, Vertex u);
/// D(G-u) + D(G (.) u) - D(G (.) u - u), subterms by brute force.
IntPolynomial recurrence_poly_odot(const Graph& g, Vertex u);

/// Closed forms; no graph is materialized, so any parameter works.
IntPolynomial family_poly(const FamilySpec& spec);

enum class CoronaKind { Friendship, Clique, Book2 };

/// Iterated corona G o H o H ... (depth copies of H), where H is F_n,
/// K_n or B_2 (n ignored for B_2) and only |V(G)| = base_order matters.
struct CoronaFamily {
  CoronaKind kind;
  std::size_t base_order;
  std::size_t n;
  std::size_t depth;
};
IntPolynomial corona_family_poly(const CoronaFamily& family);

/// D of the edgeless graph on n vertices, x^n.
IntPolynomial edgeless_poly(std::size_t n);

}  // namespace dompoly
