/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/concerns.hpp"

#include "aodesign/diagnostics.hpp"

#include <json.hpp>

#include <climits>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace aodesign {

using json = nlohmann::json;

const char *to_string(ConcernType c) {
    return c == ConcernType::functional ? "functional" : "non-functional";
}

std::optional<ConcernType> parse_concern_type(std::string_view text) {
    auto key = name_key(text);
    if (key == "functional") return ConcernType::functional;
    if (key == "non-functional" || key == "non_functional" || key == "nonfunctional" || key == "non functional")
        return ConcernType::non_functional;
    return std::nullopt;
}

void ConcernMap::add(std::string_view class_name, ConcernType type) {
    auto key = name_key(class_name);
    if (key.empty()) throw ConfigError("empty class name in concern map");
    if (!entries_.emplace(key, std::make_pair(trim(class_name), type)).second)
        throw ConfigError("duplicate concern entry for class '" + trim(class_name) + "'");
}

bool ConcernMap::is_mapped(std::string_view class_name) const { return entries_.count(name_key(class_name)) != 0; }

ConcernType classify(std::string_view class_name, const ConcernMap &map) {
    auto it = map.entries().find(name_key(class_name));
    return it == map.entries().end() ? map.default_type() : it->second.second;
}

const char *to_string(AdviceKind k) {
    switch (k) {
        case AdviceKind::before: return "before";
        case AdviceKind::after: return "after";
        case AdviceKind::around: return "around";
    }
    return "before";
}

namespace {

// nlohmann::json keeps the last of two equal keys; reject them while parsing.
json parse_rejecting_duplicates(std::string_view document) {
    std::vector<std::set<std::string>> open_objects;
    std::string duplicate;
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json &parsed) {
        switch (event) {
            case json::parse_event_t::object_start: open_objects.emplace_back(); break;
            case json::parse_event_t::object_end:
                if (!open_objects.empty()) open_objects.pop_back();
                break;
            case json::parse_event_t::key:
                if (!open_objects.empty() && !open_objects.back().insert(parsed.get<std::string>()).second &&
                    duplicate.empty())
                    duplicate = parsed.get<std::string>();
                break;
            default: break;
        }
        return true;
    };
    json doc;
    try {
        doc = json::parse(document.begin(), document.end(), cb);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!duplicate.empty()) throw ConfigError("duplicate key '" + duplicate + "' in config");
    return doc;
}

}  // namespace

Config load_config(std::string_view document) {
    Config cfg;
    if (trim(document).empty()) return cfg;

    auto doc = parse_rejecting_duplicates(document);
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    for (auto &[key, value] : doc.items()) {
        if (key == "concerns") {
            if (!value.is_object()) throw ConfigError("'concerns' must map class names to concern types");
            for (auto &[cls, type] : value.items()) {
                auto parsed = type.is_string() ? parse_concern_type(type.get<std::string>()) : std::nullopt;
                if (!parsed)
                    throw ConfigError("unknown concern value " + type.dump() + " for class '" + cls +
                                      "' (expected \"functional\" or \"non-functional\")");
                cfg.concerns.add(cls, *parsed);
            }
        } else if (key == "actors") {
            if (!value.is_array()) throw ConfigError("'actors' must be a list of class names");
            for (auto &a : value) {
                if (!a.is_string()) throw ConfigError("'actors' entries must be strings");
                cfg.concerns.add_actor(a.get<std::string>());
            }
        } else if (key == "threshold") {
            if (!value.is_number_integer()) throw ConfigError("'threshold' must be an integer");
            bool in_range = value.is_number_unsigned()
                                ? value.get<unsigned long long>() - 1 < static_cast<unsigned long long>(INT_MAX)
                                : value.get<long long>() >= 1;
            if (!in_range)
                throw ConfigError("'threshold' must be an integer between 1 and " + std::to_string(INT_MAX));
            cfg.threshold = value.get<int>();
        } else if (key == "advice_kind") {
            auto kind = value.is_string() ? name_key(value.get<std::string>()) : std::string();
            if (kind == "before") cfg.advice_kind = AdviceKind::before;
            else if (kind == "after") cfg.advice_kind = AdviceKind::after;
            else if (kind == "around") cfg.advice_kind = AdviceKind::around;
            else throw ConfigError("'advice_kind' must be \"before\", \"after\" or \"around\"");
        } else if (key == "coupling") {
            auto mode = value.is_string() ? name_key(value.get<std::string>()) : std::string();
            if (mode == "distinct") cfg.coupling = CouplingMode::distinct_classes;
            else if (mode == "messages") cfg.coupling = CouplingMode::message_count;
            else throw ConfigError("'coupling' must be \"distinct\" or \"messages\"");
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

Config load_config_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot open config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load_config(text.str());
}

ConcernMap load_concern_map(std::string_view document) { return load_config(document).concerns; }

}  // namespace aodesign
