#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fdg/relation.hpp"

namespace fdg {

// Subsets of small ground sets are bitmasks; bit i is node i.
using SubsetMask = std::uint32_t;

SubsetMask mask_of(std::span<const NodeId> nodes);
std::vector<NodeId> nodes_of(SubsetMask mask);

struct SubsetFamily {
  std::shared_ptr<const NameTable> ground;
  std::vector<SubsetMask> members;  // distinct, nonempty subsets of ground
};

// Every nonempty subset of the ground set.
SubsetFamily full_powerset_family(std::shared_ptr<const NameTable> ground);

// The choice correspondence realized by a relation: the sinks of the
// relation restricted to A. Computed by the closed-form scan; the
// restrict+sinks route in core-graph is kept as an independent oracle.
std::vector<NodeId> choose(const Relation& rel, std::span<const NodeId> subset);
SubsetMask choose_mask(const Relation& rel, SubsetMask subset);

// A lies in Dom(C) iff it has at least one sink.
bool in_domain(const Relation& rel, std::span<const NodeId> subset);

// Checkers run over any correspondence given as member-mask -> choice-mask,
// so broken synthetic correspondences can exercise the failure reporting.
using ChoiceFn = std::function<SubsetMask(SubsetMask)>;

// Counterexamples are minimal by total cardinality |A|+|B|, ties broken by
// comparing A then B as sorted index sequences, then x.
struct KappaVerdict {
  bool pass = true;
  SubsetMask set = 0;  // member with choice ⊄ set, when failing
};

struct PairVerdict {
  bool pass = true;
  SubsetMask a = 0;
  SubsetMask b = 0;
  NodeId x = 0;
};

KappaVerdict check_kappa(const SubsetFamily& fam, const ChoiceFn& choice);
PairVerdict check_alpha(const SubsetFamily& fam, const ChoiceFn& choice);
PairVerdict check_iota(const SubsetFamily& fam, const ChoiceFn& choice);
bool check_semilattice(const SubsetFamily& fam);

struct PropositionVerdict {
  // κ ∧ ι ⇒ C(A)∩C(B) ⊆ C(A∩B), re-verified by enumeration
  PairVerdict prop1;
  bool prop1_applicable = false;
  // ι ⇒ α, and (semilattice ∧ κ ∧ α) ⇒ ι
  bool iota_implies_alpha = true;
  bool kappa_alpha_imply_iota = true;
};

PropositionVerdict check_propositions(const SubsetFamily& fam, const ChoiceFn& choice);

// Spec surface: the same checks for C_rel over a family.
KappaVerdict check_kappa(const Relation& rel, const SubsetFamily& fam);
PairVerdict check_alpha(const Relation& rel, const SubsetFamily& fam);
PairVerdict check_iota(const Relation& rel, const SubsetFamily& fam);
PropositionVerdict check_propositions(const Relation& rel, const SubsetFamily& fam);

struct ChoiceAuditReport {
  std::shared_ptr<const NameTable> ground;
  KappaVerdict kappa;
  PairVerdict alpha;
  PairVerdict iota;
  bool semilattice = false;
  bool domain_total = false;
  PropositionVerdict propositions;
};

// Exhaustive audit of C_rel over the full nonempty powerset. Guarded: the
// enumeration is exponential, so universes above max_nodes are rejected
// with CapacityExceeded.
ChoiceAuditReport audit(const Relation& rel, std::size_t max_nodes = 12);

}  // namespace fdg
