#include "zinbiel/report.hpp"

#include <json.hpp>

namespace zinbiel {

void Report::field(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

void Report::check(std::string name, std::string expected, std::string computed, bool pass) {
    checks_.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

void Report::check_equal(std::string name, std::string expected, std::string computed) {
    bool pass = expected == computed;
    check(std::move(name), std::move(expected), std::move(computed), pass);
}

bool Report::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_text() const {
    std::string out = "== " + title_ + " ==\n";
    for (const auto& [k, v] : fields_) {
        // Multi-line values are indented under their key.
        if (v.find('\n') != std::string::npos) {
            out += k + ":\n";
            std::size_t start = 0;
            while (start <= v.size()) {
                std::size_t end = v.find('\n', start);
                if (end == std::string::npos) end = v.size();
                out += "  " + v.substr(start, end - start) + "\n";
                start = end + 1;
            }
        } else {
            out += k + ": " + v + "\n";
        }
    }
    for (const auto& c : checks_) {
        out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name + ": expected " + c.expected +
               ", computed " + c.computed + "\n";
    }
    if (!checks_.empty()) {
        std::size_t passed = 0;
        for (const auto& c : checks_)
            if (c.pass) ++passed;
        out += "result: " + std::string(all_pass() ? "PASS" : "FAIL") + " (" +
               std::to_string(passed) + "/" + std::to_string(checks_.size()) + " checks)\n";
    }
    return out;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["title"] = title_;
    for (const auto& [k, v] : fields_) j[k] = v;
    if (!checks_.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks_) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["pass"] = c.pass;
            arr.push_back(jc);
        }
        j["checks"] = arr;
        j["result"] = all_pass() ? "PASS" : "FAIL";
    }
    return j.dump(2) + "\n";
}

}  // namespace zinbiel
