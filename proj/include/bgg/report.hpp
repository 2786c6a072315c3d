#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bgg {

// 64-bit FNV-1a over raw bytes; the hex form tags inputs in reports.
uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// Ordered key/value result sheet for one command invocation. Both renderings
// print exactly these pairs, so the human and machine views cannot drift.
// Values may span lines; the text form indents continuation lines.
struct Report {
    std::string command;
    std::string input_digest = "-";
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> items;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long value);
    void add(const std::string& key, const std::vector<int>& values);  // space-joined

    std::string render_text() const;
    std::string render_machine() const;  // JSON with the same fields
    std::string render(bool machine) const { return machine ? render_machine() : render_text(); }
};

}  // namespace bgg
