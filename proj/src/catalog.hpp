#ifndef ADEND_CATALOG_HPP
#define ADEND_CATALOG_HPP

#include "bundles.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace adend {

// Built-in named instances used by tests and for CLI exploration.
struct CatalogEntry {
    struct Expected {
        std::string bundle;
        std::map<std::string, std::string> binding;
        std::optional<Rational> q;
        bool holds = true;
    };

    std::string id;
    std::string description;
    std::map<std::string, Rational> params; // name -> default
    std::function<AlgebraSpace(const std::map<std::string, Rational>&)> build;
    std::vector<Expected> expected;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

// Instantiates an entry; unspecified parameters take their defaults.
AlgebraSpace catalog_load(const std::string& id,
                          const std::map<std::string, Rational>& params = {});

struct SelfTestReport {
    struct Item {
        std::string entry;
        std::string bundle;
        bool expected = false;
        bool actual = false;
        bool pass() const { return expected == actual; }
    };
    std::vector<Item> items;
    bool all_pass = true;
};

SelfTestReport catalog_self_test();

} // namespace adend

#endif
