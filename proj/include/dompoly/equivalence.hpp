#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dompoly/graph.hpp"
#include "dompoly/graph6.hpp"
#include "dompoly/polynomial.hpp"

namespace dompoly {

/// Evidence that two graphs are not isomorphic, limited to invariants that
/// are cheap to compare.  Identical means the labeled graphs coincide.
enum class CertificateKind { Identical, OrderMismatch, SizeMismatch, DegreeSequenceMismatch, Unavailable };

std::string_view to_string(CertificateKind kind);

struct NonIsomorphismCertificate {
  CertificateKind kind = CertificateKind::Unavailable;
  std::vector<std::size_t> first_degrees;
  std::vector<std::size_t> second_degrees;

  bool certifies_non_isomorphic() const {
    return kind == CertificateKind::OrderMismatch || kind == CertificateKind::SizeMismatch ||
           kind == CertificateKind::DegreeSequenceMismatch;
  }
};

NonIsomorphismCertificate certify_non_isomorphic(const Graph& g, const Graph& h);

struct EquivalenceClass {
  IntPolynomial polynomial;
  /// Sorted ids.
  std::vector<std::string> members;
};

struct WitnessPair {
  std::string first;
  std::string second;
  NonIsomorphismCertificate certificate;
};

struct SkippedGraph {
  std::string id;
  std::string reason;
};

struct EquivalenceReport {
  /// Ordered by polynomial (degree, then coefficients).
  std::vector<EquivalenceClass> classes;
  std::size_t singleton_count = 0;
  std::vector<WitnessPair> witness_pairs;
  std::vector<SkippedGraph> skipped;

  std::size_t graph_count() const;
  /// Graphs lying in a class of size >= 2.
  std::size_t non_unique_count() const;
};

EquivalenceReport partition_catalog(std::span<const CatalogEntry> catalog);

struct FriendshipWitness {
  Graph friendship;
  Graph contracted_book;
  IntPolynomial polynomial;
  bool polynomials_equal = false;
  NonIsomorphismCertificate certificate;
};

/// F_n against B_n/v; requires n >= 2 (the two coincide as K_3 for n = 1).
FriendshipWitness verify_friendship_not_unique(std::size_t n);

struct UniquenessVerdict {
  bool unique = true;
  /// Members with the same polynomial and a non-isomorphism certificate.
  std::vector<std::string> witnesses;
  /// Members with the same polynomial that no certificate separates from g.
  std::vector<std::string> uncertified;
};

UniquenessVerdict is_d_unique_within(const Graph& g, std::span<const CatalogEntry> catalog);

}  // namespace dompoly
