#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fdg/error.hpp"

namespace fdg {

using NodeId = std::uint32_t;

// Interned universe: names get dense indices in declaration order.
class NameTable {
public:
  explicit NameTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(NodeId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<NodeId> find(std::string_view name) const;
  NodeId id_of(std::string_view name) const;  // throws unknown_name

  bool operator==(const NameTable& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
};

std::shared_ptr<const NameTable> intern_universe(std::vector<std::string> names);

// Finite directed relation over an interned universe. Arcs have set
// semantics (duplicates collapse); self-loops are kept. Immutable after
// construction, so values are safe to share across threads.
class Relation {
public:
  explicit Relation(std::shared_ptr<const NameTable> universe,
                    std::vector<std::pair<NodeId, NodeId>> arcs = {});

  std::size_t node_count() const noexcept { return universe_->size(); }
  const NameTable& universe() const noexcept { return *universe_; }
  const std::shared_ptr<const NameTable>& universe_ptr() const noexcept { return universe_; }

  // Out-neighbors of `from`, sorted ascending, unique.
  const std::vector<NodeId>& out(NodeId from) const { return out_.at(from); }
  bool has_arc(NodeId from, NodeId to) const;

  std::size_t arc_count() const noexcept { return arc_count_; }
  std::vector<std::pair<NodeId, NodeId>> arcs() const;  // lexicographic order

  bool operator==(const Relation& other) const;

private:
  std::shared_ptr<const NameTable> universe_;
  std::vector<std::vector<NodeId>> out_;
  std::size_t arc_count_ = 0;
};

// Strongly connected components in reverse topological order (components
// that only receive arcs come first); ties broken by smallest contained
// node index. Members of each component are sorted ascending.
struct SccPartition {
  std::vector<std::vector<NodeId>> components;
  std::vector<std::uint32_t> component_of;  // node -> index into components
};

// Condensation: one node per SCC, arcs between distinct components.
struct ReducedGraph {
  SccPartition partition;
  Relation graph;  // node k of `graph` is partition.components[k]
};

SccPartition scc(const Relation& rel);
ReducedGraph condense(const Relation& rel, const SccPartition& part);

// Nodes all of whose out-arcs, if any, are self-loops.
std::vector<NodeId> sinks(const Relation& rel);

bool is_acyclic(const Relation& rel);

Relation transitive_closure(const Relation& rel);
Relation reflexive_transitive_closure(const Relation& rel);

// Sub-relation induced by `nodes`: universe becomes those nodes (original
// index order), arcs keep both endpoints inside.
Relation restrict_to(const Relation& rel, std::span<const NodeId> nodes);

}  // namespace fdg
