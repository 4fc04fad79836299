#pragma once

#include <string>
#include <vector>

namespace gems {

/// One undirected relation between two node types. `a` and `b` are type
/// indices; a == b encodes a same-type relation such as user-user.
struct Relation {
  std::string name;
  int a = 0;
  int b = 0;
};

/// The designated recommendation target: source type (users), sink type
/// (items) and the relation that carries the positive interactions.
struct Target {
  int source_type = 0;
  int sink_type = 0;
  int relation = 0;
};

/// Node types, permitted relations, and the target pair of a HIN.
/// Immutable after construction; relations are unique per unordered type
/// pair so `relation_between` is well defined.
class Schema {
 public:
  Schema(std::vector<std::string> node_types, std::vector<Relation> relations,
         Target target);

  int type_count() const { return static_cast<int>(node_types_.size()); }
  const std::string& type_name(int t) const { return node_types_.at(t); }
  const std::vector<std::string>& node_types() const { return node_types_; }

  /// Index of a type name; throws ValidationError when unknown.
  int type_index(const std::string& name) const;
  /// -1 when the name is unknown.
  int find_type(const std::string& name) const;

  const std::vector<Relation>& relations() const { return relations_; }
  const Relation& relation(int r) const { return relations_.at(r); }
  int relation_count() const { return static_cast<int>(relations_.size()); }

  /// Relation index joining the unordered pair (ta, tb), or -1.
  int relation_between(int ta, int tb) const;
  int relation_index(const std::string& name) const;

  const Target& target() const { return target_; }

 private:
  std::vector<std::string> node_types_;
  std::vector<Relation> relations_;
  Target target_;
  std::vector<int> pair_to_relation_;  // type_count^2 lookup, -1 = none
};

/// Parses and validates a schema file (JSON; see README for the format).
Schema load_schema(const std::string& path);
Schema schema_from_json_text(const std::string& text);
std::string schema_to_json_text(const Schema& schema);

}  // namespace gems
