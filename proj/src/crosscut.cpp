/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/crosscut.hpp"

#include <algorithm>

namespace aodesign {

RepetitionKey::RepetitionKey(std::string message, std::string receiver)
    : message_name(trim(message)), receiver_class(trim(receiver)) {}

std::pair<std::string, std::string> RepetitionKey::normalized() const {
    return {name_key(message_name), name_key(receiver_class)};
}

RepetitionCounts repetition_counts(const MessageTable &table) {
    RepetitionCounts counts;
    for (const auto &r : table.rows) {
        if (!r.is_call() || r.sender_concern != ConcernType::functional ||
            r.receiver_concern != ConcernType::non_functional)
            continue;
        ++counts[RepetitionKey(r.name, r.receiver_class)];
    }
    return counts;
}

MessageTable annotate_repetitions(const MessageTable &table) {
    auto counts = repetition_counts(table);
    MessageTable out = table;
    for (auto &r : out.rows) {
        r.repetition.reset();
        if (r.receiver_concern != ConcernType::non_functional) continue;
        auto it = counts.find(RepetitionKey(r.name, r.receiver_class));
        r.repetition = it == counts.end() ? 0 : it->second;
    }
    return out;
}

AspectCandidateSet detect_aspect_candidates(const RepetitionCounts &counts, const ConcernMap &concerns,
                                            int threshold) {
    if (threshold < 1) throw ConfigError("threshold must be at least 1, got " + std::to_string(threshold));
    AspectCandidateSet set;
    set.threshold = threshold;

    std::map<std::string, std::string> display;  // class key -> spelling
    std::map<std::string, std::vector<CandidateEvidence>> by_key;
    for (const auto &[key, count] : counts) {
        if (count < threshold || classify(key.receiver_class, concerns) != ConcernType::non_functional) continue;
        auto ck = name_key(key.receiver_class);
        display.try_emplace(ck, key.receiver_class);
        by_key[ck].push_back({key, count});
    }
    for (auto &[ck, ev] : by_key) {
        set.classes.insert(display[ck]);
        std::sort(ev.begin(), ev.end(), [](const CandidateEvidence &a, const CandidateEvidence &b) {
            return a.key.normalized().first < b.key.normalized().first;
        });
        set.evidence[display[ck]] = std::move(ev);
    }
    return set;
}

}  // namespace aodesign
