#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace simplie {

// One violated law, with enough context to reproduce the failure:
// which law, at which indices (meaning depends on the law), and a
// human-readable detail line.
struct Issue {
    std::string law;          // e.g. "jacobi", "face-face", "peiffer"
    std::vector<long> where;  // witness indices (basis / level / map indices)
    std::string detail;

    std::string to_string() const {
        std::string s = law;
        if (!where.empty()) {
            s += " @(";
            for (size_t i = 0; i < where.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(where[i]);
            }
            s += ")";
        }
        if (!detail.empty()) s += ": " + detail;
        return s;
    }
};

struct Report {
    std::vector<Issue> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string law, std::vector<long> where, std::string detail = "") {
        issues.push_back({std::move(law), std::move(where), std::move(detail)});
    }
    void merge(const Report& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }
    std::string to_string() const {
        std::string s;
        for (const auto& i : issues) {
            s += i.to_string();
            s += "\n";
        }
        return s;
    }
};

// Thrown when a construction is handed data that fails its validator.
struct ValidationError : std::runtime_error {
    Report report;
    explicit ValidationError(Report r)
        : std::runtime_error(r.ok() ? "validation failed" : r.issues.front().to_string()),
          report(std::move(r)) {}
};

// Thrown on malformed input (parsing, shape mismatches, bad rationals).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace simplie
