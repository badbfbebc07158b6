#include "nlsis/trace.hpp"

#include "nlsis/format.hpp"

namespace nlsis {

TraceWriter::TraceWriter(std::ostream& out, bool with_center) : out_(&out), with_center_(with_center)
{
    *out_ << "jump_index,time,event_kind,infected_count";
    if (with_center_)
        *out_ << ",center_infected";
    *out_ << '\n';
}

void TraceWriter::operator()(const JumpRecord& record)
{
    *out_ << record.index << ',' << format_double(record.time) << ',' << to_string(record.kind) << ','
          << record.infected_count;
    if (with_center_)
        *out_ << ',' << (record.center_infected.value_or(false) ? 1 : 0);
    *out_ << '\n';
}

JumpObserver TraceWriter::observer()
{
    return [this](const JumpRecord& r) { (*this)(r); };
}

}  // namespace nlsis
