/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aodesign {

std::string trim(std::string_view text);
std::string casefold(std::string_view text);

/// Comparison key for class and message names: trimmed, ASCII case-folded.
std::string name_key(std::string_view text);

/// A set of names compared by name_key. The first spelling seen is retained
/// for display.
class NameSet {
public:
    NameSet() = default;
    NameSet(std::initializer_list<std::string_view> names);

    bool insert(std::string_view name);
    bool contains(std::string_view name) const;
    bool empty() const { return keys_.empty(); }
    std::size_t size() const { return keys_.size(); }

    /// Display spellings in canonical (key-sorted) order.
    std::vector<std::string> names() const;

    friend bool operator==(const NameSet &a, const NameSet &b) { return a.keys_ == b.keys_; }

private:
    std::set<std::string> keys_;
    std::vector<std::pair<std::string, std::string>> display_;  // key, spelling
};

}  // namespace aodesign
