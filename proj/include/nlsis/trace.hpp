#pragma once

#include "nlsis/dynamics.hpp"

#include <ostream>

namespace nlsis {

/// Writes one CSV row per jump:
/// `jump_index,time,event_kind,infected_count[,center_infected]`.
class TraceWriter {
public:
    TraceWriter(std::ostream& out, bool with_center);

    void operator()(const JumpRecord& record);
    JumpObserver observer();

private:
    std::ostream* out_;
    bool with_center_;
};

}  // namespace nlsis
