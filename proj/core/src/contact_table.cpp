#include "airtime/contact_table.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

const ContactEntry* ContactTable::find(NodeId id) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [id](const ContactEntry& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

namespace {

struct Apply {
  ContactTable& table;

  void operator()(const JoinEvent& join) const {
    if (join.id == table.owner || table.find(join.id) != nullptr) {
      throw InvalidInput(fmt::format("node {} is already in the contact table of {}",
                                     to_int(join.id), to_int(table.owner)));
    }
    if (!(join.pcd_s > 0.0)) {
      throw InvalidInput(fmt::format("node {} joined with a non-positive PCD", to_int(join.id)));
    }
    table.entries.push_back({join.id, join.pcd_s, join.data_mb});
  }

  void operator()(const LeaveEvent& leave) const {
    auto it = std::find_if(table.entries.begin(), table.entries.end(),
                           [&](const ContactEntry& e) { return e.id == leave.id; });
    if (it == table.entries.end()) {
      throw InvalidInput(fmt::format("node {} is not in the contact table of {}",
                                     to_int(leave.id), to_int(table.owner)));
    }
    table.entries.erase(it);
  }

  void operator()(const SelfLeaveEvent&) const { table.entries.clear(); }
};

}  // namespace

ContactTable update_contact_table(ContactTable table, const ContactEvent& event) {
  std::visit(Apply{table}, event);
  return table;
}

}  // namespace airtime
