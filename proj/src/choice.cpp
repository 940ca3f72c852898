#include "fdg/choice.hpp"

#include <algorithm>
#include <bit>

namespace fdg {

namespace {

// Subset enumeration is exponential and pair scans are quadratic in the
// family, so the audit keeps a hard ceiling on the ground set.
constexpr std::size_t kAuditNodeCap = 14;
constexpr std::size_t kMaskNodeCap = 25;

int popcount(SubsetMask mask) { return std::popcount(mask); }

// Lexicographic order on subsets viewed as ascending index sequences; a
// proper prefix sorts first.
bool mask_lex_less(SubsetMask a, SubsetMask b) {
  while (a != 0 && b != 0) {
    unsigned low_a = static_cast<unsigned>(std::countr_zero(a));
    unsigned low_b = static_cast<unsigned>(std::countr_zero(b));
    if (low_a != low_b) return low_a < low_b;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool pair_candidate_less(const PairVerdict& lhs, const PairVerdict& rhs) {
  int lt = popcount(lhs.a) + popcount(lhs.b);
  int rt = popcount(rhs.a) + popcount(rhs.b);
  if (lt != rt) return lt < rt;
  if (lhs.a != rhs.a) return mask_lex_less(lhs.a, rhs.a);
  if (lhs.b != rhs.b) return mask_lex_less(lhs.b, rhs.b);
  return lhs.x < rhs.x;
}

void offer(std::optional<PairVerdict>& best, SubsetMask a, SubsetMask b, SubsetMask violators) {
  if (violators == 0) return;
  PairVerdict candidate{false, a, b, static_cast<NodeId>(std::countr_zero(violators))};
  if (!best || pair_candidate_less(candidate, *best)) best = candidate;
}

void require_mask_capacity(const Relation& rel) {
  if (rel.node_count() > kMaskNodeCap) {
    throw Error(errc::capacity_exceeded,
                "mask-based subset operations support at most " +
                    std::to_string(kMaskNodeCap) + " nodes");
  }
}

}  // namespace

SubsetMask mask_of(std::span<const NodeId> nodes) {
  SubsetMask mask = 0;
  for (NodeId node : nodes) {
    if (node >= kMaskNodeCap) {
      throw Error(errc::capacity_exceeded, "node index too large for a subset mask");
    }
    mask |= SubsetMask{1} << node;
  }
  return mask;
}

std::vector<NodeId> nodes_of(SubsetMask mask) {
  std::vector<NodeId> nodes;
  while (mask != 0) {
    nodes.push_back(static_cast<NodeId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return nodes;
}

SubsetFamily full_powerset_family(std::shared_ptr<const NameTable> ground) {
  if (ground->size() > kMaskNodeCap) {
    throw Error(errc::capacity_exceeded, "powerset family limited to small ground sets");
  }
  SubsetFamily fam;
  fam.ground = std::move(ground);
  SubsetMask all = (SubsetMask{1} << fam.ground->size()) - 1;
  fam.members.reserve(all);
  for (SubsetMask mask = 1; mask <= all; ++mask) fam.members.push_back(mask);
  return fam;
}

std::vector<NodeId> choose(const Relation& rel, std::span<const NodeId> subset) {
  if (subset.empty()) throw Error(errc::empty_subset, "choice over the empty set");
  std::vector<NodeId> nodes(subset.begin(), subset.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.back() >= rel.node_count()) {
    throw Error(errc::unknown_name, "subset node out of universe range");
  }
  std::vector<bool> member(rel.node_count(), false);
  for (NodeId node : nodes) member[node] = true;

  // closed form: s is chosen iff no arc leaves s toward another member
  std::vector<NodeId> result;
  for (NodeId s : nodes) {
    bool chosen = true;
    for (NodeId to : rel.out(s)) {
      if (to != s && member[to]) {
        chosen = false;
        break;
      }
    }
    if (chosen) result.push_back(s);
  }
  return result;
}

SubsetMask choose_mask(const Relation& rel, SubsetMask subset) {
  if (subset == 0) throw Error(errc::empty_subset, "choice over the empty set");
  require_mask_capacity(rel);
  if (subset >= (SubsetMask{1} << rel.node_count())) {
    throw Error(errc::unknown_name, "subset node out of universe range");
  }
  SubsetMask result = 0;
  for (SubsetMask rest = subset; rest != 0; rest &= rest - 1) {
    NodeId s = static_cast<NodeId>(std::countr_zero(rest));
    bool chosen = true;
    for (NodeId to : rel.out(s)) {
      if (to != s && (subset & (SubsetMask{1} << to)) != 0) {
        chosen = false;
        break;
      }
    }
    if (chosen) result |= SubsetMask{1} << s;
  }
  return result;
}

bool in_domain(const Relation& rel, std::span<const NodeId> subset) {
  return !choose(rel, subset).empty();
}

KappaVerdict check_kappa(const SubsetFamily& fam, const ChoiceFn& choice) {
  KappaVerdict best;
  for (SubsetMask member : fam.members) {
    if ((choice(member) & ~member) != 0) {
      if (best.pass || popcount(member) < popcount(best.set) ||
          (popcount(member) == popcount(best.set) && mask_lex_less(member, best.set))) {
        best = KappaVerdict{false, member};
      }
    }
  }
  return best;
}

PairVerdict check_alpha(const SubsetFamily& fam, const ChoiceFn& choice) {
  std::vector<SubsetMask> chosen(fam.members.size());
  for (std::size_t i = 0; i < fam.members.size(); ++i) chosen[i] = choice(fam.members[i]);

  std::optional<PairVerdict> best;
  for (std::size_t ai = 0; ai < fam.members.size(); ++ai) {
    SubsetMask a = fam.members[ai];
    for (std::size_t bi = 0; bi < fam.members.size(); ++bi) {
      SubsetMask b = fam.members[bi];
      if ((a & ~b) != 0) continue;  // need A ⊆ B
      offer(best, a, b, a & chosen[bi] & ~chosen[ai]);
    }
  }
  return best.value_or(PairVerdict{});
}

PairVerdict check_iota(const SubsetFamily& fam, const ChoiceFn& choice) {
  std::vector<SubsetMask> chosen(fam.members.size());
  for (std::size_t i = 0; i < fam.members.size(); ++i) chosen[i] = choice(fam.members[i]);

  std::optional<PairVerdict> best;
  for (std::size_t ai = 0; ai < fam.members.size(); ++ai) {
    SubsetMask a = fam.members[ai];
    for (std::size_t bi = 0; bi < fam.members.size(); ++bi) {
      SubsetMask common = a & fam.members[bi];
      if (common == 0) continue;  // empty intersections are out of P*(X)
      offer(best, a, fam.members[bi], a & chosen[bi] & ~choice(common));
    }
  }
  return best.value_or(PairVerdict{});
}

bool check_semilattice(const SubsetFamily& fam) {
  SubsetMask limit = 0;
  for (SubsetMask member : fam.members) limit = std::max(limit, member);
  std::vector<bool> present(static_cast<std::size_t>(limit) + 1, false);
  for (SubsetMask member : fam.members) present[member] = true;
  for (SubsetMask a : fam.members) {
    for (SubsetMask b : fam.members) {
      SubsetMask common = a & b;
      if (common != 0 && !present[common]) return false;
    }
  }
  return true;
}

PropositionVerdict check_propositions(const SubsetFamily& fam, const ChoiceFn& choice) {
  PropositionVerdict verdict;
  KappaVerdict kappa = check_kappa(fam, choice);
  PairVerdict alpha = check_alpha(fam, choice);
  PairVerdict iota = check_iota(fam, choice);
  bool semilattice = check_semilattice(fam);

  verdict.prop1_applicable = kappa.pass && iota.pass;
  if (verdict.prop1_applicable) {
    std::vector<SubsetMask> chosen(fam.members.size());
    for (std::size_t i = 0; i < fam.members.size(); ++i) chosen[i] = choice(fam.members[i]);
    std::optional<PairVerdict> best;
    for (std::size_t ai = 0; ai < fam.members.size(); ++ai) {
      for (std::size_t bi = 0; bi < fam.members.size(); ++bi) {
        SubsetMask common = fam.members[ai] & fam.members[bi];
        if (common == 0) continue;
        offer(best, fam.members[ai], fam.members[bi],
              chosen[ai] & chosen[bi] & ~choice(common));
      }
    }
    verdict.prop1 = best.value_or(PairVerdict{});
  }

  verdict.iota_implies_alpha = !iota.pass || alpha.pass;
  verdict.kappa_alpha_imply_iota = !(semilattice && kappa.pass && alpha.pass) || iota.pass;
  return verdict;
}

namespace {

ChoiceFn choice_of(const Relation& rel) {
  return [&rel](SubsetMask mask) { return choose_mask(rel, mask); };
}

}  // namespace

KappaVerdict check_kappa(const Relation& rel, const SubsetFamily& fam) {
  return check_kappa(fam, choice_of(rel));
}

PairVerdict check_alpha(const Relation& rel, const SubsetFamily& fam) {
  return check_alpha(fam, choice_of(rel));
}

PairVerdict check_iota(const Relation& rel, const SubsetFamily& fam) {
  return check_iota(fam, choice_of(rel));
}

PropositionVerdict check_propositions(const Relation& rel, const SubsetFamily& fam) {
  return check_propositions(fam, choice_of(rel));
}

ChoiceAuditReport audit(const Relation& rel, std::size_t max_nodes) {
  const std::size_t n = rel.node_count();
  if (n > max_nodes || n > kAuditNodeCap) {
    throw Error(errc::capacity_exceeded,
                "audit over " + std::to_string(n) + " nodes exceeds the cap of " +
                    std::to_string(std::min(max_nodes, kAuditNodeCap)));
  }

  ChoiceAuditReport report;
  report.ground = rel.universe_ptr();
  SubsetFamily fam = full_powerset_family(rel.universe_ptr());

  // one choice table shared by every check
  std::vector<SubsetMask> table(SubsetMask{1} << n, 0);
  for (SubsetMask mask = 1; mask < table.size(); ++mask) table[mask] = choose_mask(rel, mask);
  ChoiceFn choice = [&table](SubsetMask mask) { return table[mask]; };

  report.kappa = check_kappa(fam, choice);
  report.alpha = check_alpha(fam, choice);
  report.iota = check_iota(fam, choice);
  report.semilattice = check_semilattice(fam);
  report.domain_total = true;
  for (SubsetMask member : fam.members) {
    if (choice(member) == 0) {
      report.domain_total = false;
      break;
    }
  }
  report.propositions = check_propositions(fam, choice);
  return report;
}

}  // namespace fdg
