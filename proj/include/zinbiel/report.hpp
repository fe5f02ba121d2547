#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zinbiel {

// Deterministic line-oriented report: named fields in insertion order, then
// one line per check, then a summary verdict.  The JSON rendering is a flat
// mirror of the same fields for machine consumption.
class Report {
public:
    explicit Report(std::string title) : title_(std::move(title)) {}

    void field(std::string key, std::string value);
    void check(std::string name, std::string expected, std::string computed, bool pass);
    // Pass iff expected and computed render identically.
    void check_equal(std::string name, std::string expected, std::string computed);

    bool all_pass() const;
    std::size_t check_count() const { return checks_.size(); }

    std::string to_text() const;
    std::string to_json() const;

private:
    struct CheckLine {
        std::string name, expected, computed;
        bool pass;
    };

    std::string title_;
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<CheckLine> checks_;
};

}  // namespace zinbiel
