#pragma once

#include "idealclose/closure.hpp"

#include <iosfwd>
#include <string>

namespace idealclose {

// One record as a single JSON object: the five fixed fields first
// ({"check","ring","closure","status","witnesses"}), then the extras in
// recorded order.  Key order is stable, so equal reports serialize to equal
// bytes.
std::string to_json_line(const CheckRecord& r);

// One line per record, in order, each terminated by "\n".
void write_json_lines(std::ostream& os, const CheckReport& rep);

// Aligned table with one row per record, witnesses and notes indented
// underneath, and a closing summary line.
void write_table(std::ostream& os, const CheckReport& rep);

}  // namespace idealclose
