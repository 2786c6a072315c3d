#include "bgg/report.hpp"

#include <sstream>

#include "json.hpp"

namespace bgg {

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << fnv1a(bytes);
    return "fnv1a:" + os.str();
}

void Report::add(const std::string& key, const std::string& value) {
    items.emplace_back(key, value);
}

void Report::add(const std::string& key, long value) {
    items.emplace_back(key, std::to_string(value));
}

void Report::add(const std::string& key, const std::vector<int>& values) {
    std::ostringstream os;
    for (size_t k = 0; k < values.size(); ++k) os << (k ? " " : "") << values[k];
    items.emplace_back(key, os.str());
}

std::string Report::render_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "input: " << input_digest << "\n";
    os << "status: " << (ok ? "ok" : "fail") << "\n";
    for (const auto& [key, value] : items) {
        if (value.find('\n') == std::string::npos) {
            os << key << ": " << value << "\n";
            continue;
        }
        os << key << ":\n";
        std::istringstream lines(value);
        std::string line;
        while (std::getline(lines, line)) os << "  " << line << "\n";
    }
    return os.str();
}

std::string Report::render_machine() const {
    nlohmann::json j;
    j["command"] = command;
    j["input"] = input_digest;
    j["status"] = ok ? "ok" : "fail";
    nlohmann::json results = nlohmann::json::array();
    for (const auto& [key, value] : items) results.push_back({key, value});
    j["results"] = std::move(results);
    return j.dump(2) + "\n";
}

}  // namespace bgg
