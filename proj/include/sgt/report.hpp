#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sgt {

struct CheckItem {
    std::string name;
    bool passed;
    bool advisory = false; // informational only, never fails the report
    std::string detail;
};

struct Report {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.advisory && !it.passed) return false;
        return true;
    }

    void add(std::string name, bool passed, std::string detail = "") {
        items.push_back({std::move(name), passed, false, std::move(detail)});
    }

    void add_advisory(std::string name, bool passed, std::string detail = "") {
        items.push_back({std::move(name), passed, true, std::move(detail)});
    }

    void merge(const Report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
};

} // namespace sgt
