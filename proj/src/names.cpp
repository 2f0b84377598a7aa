/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/names.hpp"

#include <algorithm>
#include <cctype>

namespace aodesign {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string trim(std::string_view text) {
    auto first = std::find_if_not(text.begin(), text.end(), is_space);
    auto last = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
    if (first >= last) return {};
    return std::string(first, last);
}

std::string casefold(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string name_key(std::string_view text) { return casefold(trim(text)); }

NameSet::NameSet(std::initializer_list<std::string_view> names) {
    for (auto n : names) insert(n);
}

bool NameSet::insert(std::string_view name) {
    auto key = name_key(name);
    if (!keys_.insert(key).second) return false;
    display_.emplace_back(std::move(key), trim(name));
    return true;
}

bool NameSet::contains(std::string_view name) const { return keys_.count(name_key(name)) != 0; }

std::vector<std::string> NameSet::names() const {
    auto sorted = display_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> out;
    out.reserve(sorted.size());
    for (auto &[key, spelling] : sorted) out.push_back(spelling);
    return out;
}

}  // namespace aodesign
