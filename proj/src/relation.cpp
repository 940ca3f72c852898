#include "fdg/relation.hpp"

#include <algorithm>
#include <queue>

namespace fdg {

namespace {

// Closure computations materialize reachability per node; cap the universe
// so a bad input cannot blow up memory.
constexpr std::size_t kClosureNodeCap = 10'000;

void check_closure_capacity(const Relation& rel) {
  if (rel.node_count() > kClosureNodeCap) {
    throw Error(errc::capacity_exceeded,
                "universe of " + std::to_string(rel.node_count()) +
                    " nodes exceeds the closure cap of " + std::to_string(kClosureNodeCap));
  }
}

}  // namespace

const char* to_string(errc code) {
  switch (code) {
    case errc::duplicate_name: return "DuplicateName";
    case errc::empty_universe: return "EmptyUniverse";
    case errc::unknown_name: return "UnknownName";
    case errc::unknown_agent: return "UnknownAgent";
    case errc::capacity_exceeded: return "CapacityExceeded";
    case errc::partition_mismatch: return "PartitionMismatch";
    case errc::empty_subset: return "EmptySubset";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::parse_error: return "ParseError";
    case errc::arc_before_agent: return "ArcBeforeAgent";
    case errc::duplicate_situations_line: return "DuplicateSituationsLine";
    case errc::missing_profile: return "MissingProfile";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::malformed_game: return "MalformedGame";
    case errc::validation_failed: return "ValidationFailed";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

NameTable::NameTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error(errc::empty_universe, "a universe needs at least one name");
  }
  index_.reserve(names_.size());
  for (NodeId id = 0; id < names_.size(); ++id) {
    auto [it, inserted] = index_.emplace(names_[id], id);
    if (!inserted) {
      throw Error(errc::duplicate_name, "duplicate name '" + names_[id] + "'");
    }
  }
}

std::optional<NodeId> NameTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId NameTable::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(errc::unknown_name, "unknown name '" + std::string(name) + "'");
}

std::shared_ptr<const NameTable> intern_universe(std::vector<std::string> names) {
  return std::make_shared<const NameTable>(std::move(names));
}

Relation::Relation(std::shared_ptr<const NameTable> universe,
                   std::vector<std::pair<NodeId, NodeId>> arcs)
    : universe_(std::move(universe)) {
  if (!universe_ || universe_->size() == 0) {
    throw Error(errc::empty_universe, "relation needs a nonempty universe");
  }
  out_.resize(universe_->size());
  for (auto [from, to] : arcs) {
    if (from >= universe_->size() || to >= universe_->size()) {
      throw Error(errc::unknown_name, "arc endpoint out of universe range");
    }
    out_[from].push_back(to);
  }
  for (auto& succ : out_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
    arc_count_ += succ.size();
  }
}

bool Relation::has_arc(NodeId from, NodeId to) const {
  const auto& succ = out_.at(from);
  return std::binary_search(succ.begin(), succ.end(), to);
}

std::vector<std::pair<NodeId, NodeId>> Relation::arcs() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(arc_count_);
  for (NodeId from = 0; from < out_.size(); ++from) {
    for (NodeId to : out_[from]) result.emplace_back(from, to);
  }
  return result;
}

bool Relation::operator==(const Relation& other) const {
  return *universe_ == *other.universe_ && out_ == other.out_;
}

SccPartition scc(const Relation& rel) {
  const std::size_t n = rel.node_count();
  // Iterative Tarjan.
  constexpr std::uint32_t kUnvisited = 0xffffffffu;
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::uint32_t> raw_component(n, kUnvisited);
  std::uint32_t next_index = 0;
  std::uint32_t component_count = 0;

  struct Frame {
    NodeId node;
    std::size_t next_succ;
  };
  std::vector<Frame> call;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& frame = call.back();
      const auto& succ = rel.out(frame.node);
      if (frame.next_succ < succ.size()) {
        NodeId next = succ[frame.next_succ++];
        if (index[next] == kUnvisited) {
          index[next] = lowlink[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          call.push_back({next, 0});
        } else if (on_stack[next]) {
          lowlink[frame.node] = std::min(lowlink[frame.node], index[next]);
        }
      } else {
        NodeId done = frame.node;
        call.pop_back();
        if (!call.empty()) {
          lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[done]);
        }
        if (lowlink[done] == index[done]) {
          while (true) {
            NodeId member = stack.back();
            stack.pop_back();
            on_stack[member] = false;
            raw_component[member] = component_count;
            if (member == done) break;
          }
          ++component_count;
        }
      }
    }
  }

  // Canonical order: peel condensation sinks first, ties by smallest member.
  std::vector<std::vector<NodeId>> raw_members(component_count);
  for (NodeId node = 0; node < n; ++node) raw_members[raw_component[node]].push_back(node);

  std::vector<std::uint32_t> out_degree(component_count, 0);
  std::vector<std::vector<std::uint32_t>> preds(component_count);
  for (NodeId from = 0; from < n; ++from) {
    for (NodeId to : rel.out(from)) {
      std::uint32_t cf = raw_component[from];
      std::uint32_t ct = raw_component[to];
      if (cf != ct) {
        ++out_degree[cf];
        preds[ct].push_back(cf);
      }
    }
  }

  // min-heap keyed by smallest member index (members are ascending, so
  // front() is the smallest)
  auto weight = [&](std::uint32_t comp) { return raw_members[comp].front(); };
  auto cmp = [&](std::uint32_t a, std::uint32_t b) { return weight(a) > weight(b); };
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(cmp)> ready(cmp);
  for (std::uint32_t comp = 0; comp < component_count; ++comp) {
    if (out_degree[comp] == 0) ready.push(comp);
  }

  SccPartition part;
  part.components.reserve(component_count);
  part.component_of.assign(n, 0);
  std::vector<std::uint32_t> final_index(component_count, 0);
  while (!ready.empty()) {
    std::uint32_t comp = ready.top();
    ready.pop();
    final_index[comp] = static_cast<std::uint32_t>(part.components.size());
    part.components.push_back(raw_members[comp]);
    for (std::uint32_t pred : preds[comp]) {
      if (--out_degree[pred] == 0) ready.push(pred);
    }
  }
  for (NodeId node = 0; node < n; ++node) {
    part.component_of[node] = final_index[raw_component[node]];
  }
  return part;
}

namespace {

void check_partition(const Relation& rel, const SccPartition& part) {
  const std::size_t n = rel.node_count();
  if (part.component_of.size() != n) {
    throw Error(errc::partition_mismatch, "partition covers a different universe size");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < part.components.size(); ++k) {
    if (part.components[k].empty()) {
      throw Error(errc::partition_mismatch, "empty component in partition");
    }
    for (NodeId node : part.components[k]) {
      if (node >= n || seen[node] || part.component_of[node] != k) {
        throw Error(errc::partition_mismatch, "partition does not partition the universe");
      }
      seen[node] = true;
    }
  }
  for (bool covered : seen) {
    if (!covered) throw Error(errc::partition_mismatch, "partition misses a node");
  }
}

std::string component_label(const NameTable& names, const std::vector<NodeId>& members) {
  std::string label = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) label += ",";
    label += names.name(members[i]);
  }
  label += "}";
  return label;
}

}  // namespace

ReducedGraph condense(const Relation& rel, const SccPartition& part) {
  check_partition(rel, part);
  std::vector<std::string> names;
  names.reserve(part.components.size());
  for (const auto& members : part.components) {
    names.push_back(component_label(rel.universe(), members));
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId from = 0; from < rel.node_count(); ++from) {
    for (NodeId to : rel.out(from)) {
      std::uint32_t cf = part.component_of[from];
      std::uint32_t ct = part.component_of[to];
      if (cf != ct) arcs.emplace_back(cf, ct);
    }
  }
  Relation graph(intern_universe(std::move(names)), std::move(arcs));
  return ReducedGraph{part, std::move(graph)};
}

std::vector<NodeId> sinks(const Relation& rel) {
  std::vector<NodeId> result;
  for (NodeId node = 0; node < rel.node_count(); ++node) {
    const auto& succ = rel.out(node);
    bool sink = true;
    for (NodeId to : succ) {
      if (to != node) {
        sink = false;
        break;
      }
    }
    if (sink) result.push_back(node);
  }
  return result;
}

bool is_acyclic(const Relation& rel) {
  for (NodeId node = 0; node < rel.node_count(); ++node) {
    if (rel.has_arc(node, node)) return false;
  }
  for (const auto& component : scc(rel).components) {
    if (component.size() > 1) return false;
  }
  return true;
}

Relation transitive_closure(const Relation& rel) {
  check_closure_capacity(rel);
  const std::size_t n = rel.node_count();
  std::vector<std::pair<NodeId, NodeId>> arcs;
  std::vector<bool> reached(n);
  std::vector<NodeId> queue;
  for (NodeId source = 0; source < n; ++source) {
    std::fill(reached.begin(), reached.end(), false);
    queue.clear();
    for (NodeId to : rel.out(source)) {
      if (!reached[to]) {
        reached[to] = true;
        queue.push_back(to);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId to : rel.out(queue[head])) {
        if (!reached[to]) {
          reached[to] = true;
          queue.push_back(to);
        }
      }
    }
    for (NodeId to = 0; to < n; ++to) {
      if (reached[to]) arcs.emplace_back(source, to);
    }
  }
  return Relation(rel.universe_ptr(), std::move(arcs));
}

Relation reflexive_transitive_closure(const Relation& rel) {
  Relation closed = transitive_closure(rel);
  std::vector<std::pair<NodeId, NodeId>> arcs = closed.arcs();
  for (NodeId node = 0; node < rel.node_count(); ++node) arcs.emplace_back(node, node);
  return Relation(rel.universe_ptr(), std::move(arcs));
}

Relation restrict_to(const Relation& rel, std::span<const NodeId> nodes) {
  if (nodes.empty()) {
    throw Error(errc::empty_universe, "cannot restrict to an empty node set");
  }
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  constexpr NodeId kAbsent = 0xffffffffu;
  std::vector<NodeId> remap(rel.node_count(), kAbsent);
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (NodeId fresh = 0; fresh < keep.size(); ++fresh) {
    NodeId original = keep[fresh];
    if (original >= rel.node_count()) {
      throw Error(errc::unknown_name, "restriction node out of universe range");
    }
    remap[original] = fresh;
    names.push_back(rel.universe().name(original));
  }

  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId from : keep) {
    for (NodeId to : rel.out(from)) {
      if (remap[to] != kAbsent) arcs.emplace_back(remap[from], remap[to]);
    }
  }
  return Relation(intern_universe(std::move(names)), std::move(arcs));
}

}  // namespace fdg
