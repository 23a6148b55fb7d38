#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "airtime/node_id.hpp"

namespace airtime {

struct ContactEntry {
  NodeId id{};
  double pcd_s = 0.0;  // estimated pairwise contact duration with the owner
  double data_mb = 0.0;

  friend bool operator==(const ContactEntry&, const ContactEntry&) = default;
};

/// A node's view of the group: who is in contact, for how long, and how
/// much data each of them carries.
struct ContactTable {
  NodeId owner{};
  double owner_data_mb = 0.0;
  std::vector<ContactEntry> entries;

  const ContactEntry* find(NodeId id) const;
  bool empty() const { return entries.empty(); }

  friend bool operator==(const ContactTable&, const ContactTable&) = default;
};

struct JoinEvent {
  NodeId id{};
  double pcd_s = 0.0;
  double data_mb = 0.0;
};
struct LeaveEvent {
  NodeId id{};
};
struct SelfLeaveEvent {};

using ContactEvent = std::variant<JoinEvent, LeaveEvent, SelfLeaveEvent>;

/// Applies one membership event. A join appends an entry, a leave removes
/// it and the owner leaving drops the whole table. Throws InvalidInput on a
/// duplicate join, a leave for an unknown node or a non-positive PCD.
ContactTable update_contact_table(ContactTable table, const ContactEvent& event);

}  // namespace airtime
