#include "idealclose/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <ostream>

namespace idealclose {

std::string to_json_line(const CheckRecord& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["ring"] = r.ring;
    j["closure"] = r.closure;
    j["status"] = r.status;
    j["witnesses"] = r.witnesses;
    for (const auto& [key, value] : r.extra)
        if (!j.contains(key)) j[key] = value;
    return j.dump();
}

void write_json_lines(std::ostream& os, const CheckReport& rep) {
    for (const CheckRecord& r : rep.records) os << to_json_line(r) << '\n';
}

void write_table(std::ostream& os, const CheckReport& rep) {
    std::size_t wc = 5, wl = 7, ws = 6;
    for (const CheckRecord& r : rep.records) {
        wc = std::max(wc, r.check.size());
        wl = std::max(wl, r.closure.size());
        ws = std::max(ws, r.status.size());
    }
    auto pad = [&os](const std::string& s, std::size_t w) {
        os << s << std::string(w - s.size() + 2, ' ');
    };
    pad("check", wc);
    pad("closure", wl);
    pad("status", ws);
    os << "ring\n";

    std::size_t passed = 0, failed = 0, unknown = 0;
    for (const CheckRecord& r : rep.records) {
        pad(r.check, wc);
        pad(r.closure, wl);
        pad(r.status, ws);
        os << r.ring << '\n';
        for (const std::string& w : r.witnesses) os << "    ! " << w << '\n';
        for (const auto& [key, value] : r.extra) os << "    - " << key << ": " << value << '\n';
        if (r.status == "pass")
            ++passed;
        else if (r.status == "fail")
            ++failed;
        else
            ++unknown;
    }
    os << rep.records.size() << " records: " << passed << " passed, " << failed
       << " failed, " << unknown << " unknown\n";
}

}  // namespace idealclose
