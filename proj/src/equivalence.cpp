#include "dompoly/equivalence.hpp"

#include <algorithm>
#include <map>

#include "dompoly/domination.hpp"
#include "dompoly/error.hpp"

namespace dompoly {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Identical: return "identical";
    case CertificateKind::OrderMismatch: return "order-mismatch";
    case CertificateKind::SizeMismatch: return "size-mismatch";
    case CertificateKind::DegreeSequenceMismatch: return "degree-sequence-mismatch";
    case CertificateKind::Unavailable: return "certificate-unavailable";
  }
  return "unknown";
}

NonIsomorphismCertificate certify_non_isomorphic(const Graph& g, const Graph& h) {
  NonIsomorphismCertificate cert;
  cert.first_degrees = g.degree_sequence();
  cert.second_degrees = h.degree_sequence();
  if (g == h) {
    cert.kind = CertificateKind::Identical;
  } else if (g.order() != h.order()) {
    cert.kind = CertificateKind::OrderMismatch;
  } else if (g.size() != h.size()) {
    cert.kind = CertificateKind::SizeMismatch;
  } else if (cert.first_degrees != cert.second_degrees) {
    cert.kind = CertificateKind::DegreeSequenceMismatch;
  } else {
    cert.kind = CertificateKind::Unavailable;
  }
  return cert;
}

std::size_t EquivalenceReport::graph_count() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.members.size();
  return n;
}

std::size_t EquivalenceReport::non_unique_count() const {
  std::size_t n = 0;
  for (const auto& c : classes)
    if (c.members.size() > 1) n += c.members.size();
  return n;
}

EquivalenceReport partition_catalog(std::span<const CatalogEntry> catalog) {
  EquivalenceReport report;
  std::map<IntPolynomial, std::vector<const CatalogEntry*>> buckets;
  for (const auto& entry : catalog) {
    try {
      buckets[brute_force_poly(entry.graph)].push_back(&entry);
    } catch (const BudgetExceeded& e) {
      report.skipped.push_back({entry.id, e.what()});
    }
  }
  for (auto& [poly, entries] : buckets) {
    std::sort(entries.begin(), entries.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    EquivalenceClass cls{poly, {}};
    for (const auto* e : entries) cls.members.push_back(e->id);
    if (entries.size() == 1) ++report.singleton_count;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i + 1; j < entries.size(); ++j)
        report.witness_pairs.push_back(
            {entries[i]->id, entries[j]->id, certify_non_isomorphic(entries[i]->graph, entries[j]->graph)});
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.skipped.begin(), report.skipped.end(),
            [](const SkippedGraph& a, const SkippedGraph& b) { return a.id < b.id; });
  return report;
}

FriendshipWitness verify_friendship_not_unique(std::size_t n) {
  if (n < 2) {
    throw InvalidParameter("verify_friendship_not_unique: n must be at least 2 (F_1 and B_1/v are both K_3)");
  }
  FriendshipWitness w;
  w.friendship = build_family({FamilyKind::Friendship, n});
  w.contracted_book = contract(build_family({FamilyKind::Book, n}), 1);
  w.polynomial = family_poly({FamilyKind::Friendship, n});
  w.polynomials_equal = w.polynomial == family_poly({FamilyKind::BookContracted, n});
  w.certificate = certify_non_isomorphic(w.friendship, w.contracted_book);
  return w;
}

UniquenessVerdict is_d_unique_within(const Graph& g, std::span<const CatalogEntry> catalog) {
  const IntPolynomial target = brute_force_poly(g);
  UniquenessVerdict verdict;
  for (const auto& entry : catalog) {
    if (entry.graph.order() != g.order()) continue;
    if (brute_force_poly(entry.graph) != target) continue;
    const auto cert = certify_non_isomorphic(g, entry.graph);
    if (cert.kind == CertificateKind::Identical) continue;
    if (cert.certifies_non_isomorphic()) {
      verdict.witnesses.push_back(entry.id);
    } else {
      verdict.uncertified.push_back(entry.id);
    }
  }
  verdict.unique = verdict.witnesses.empty();
  return verdict;
}

}  // namespace dompoly
