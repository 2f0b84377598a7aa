/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/concerns.hpp"
#include "aodesign/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace aodesign {

/// (message name, receiver class). Compared by name_key on both parts; the
/// first spelling seen is kept for display.
struct RepetitionKey {
    std::string message_name;
    std::string receiver_class;

    RepetitionKey() = default;
    RepetitionKey(std::string message, std::string receiver);

    std::pair<std::string, std::string> normalized() const;

    friend bool operator<(const RepetitionKey &a, const RepetitionKey &b) { return a.normalized() < b.normalized(); }
    friend bool operator==(const RepetitionKey &a, const RepetitionKey &b) { return a.normalized() == b.normalized(); }
};

using RepetitionCounts = std::map<RepetitionKey, long>;

/// Counts functional -> non-functional call rows per (message, receiver
/// class) over every diagram of the table. The sender is ignored.
RepetitionCounts repetition_counts(const MessageTable &table);

/// Copies the model-wide count onto every row whose receiver is
/// non-functional (0 when the key was never counted); clears it elsewhere.
MessageTable annotate_repetitions(const MessageTable &table);

struct CandidateEvidence {
    RepetitionKey key;
    long count = 0;
};

struct AspectCandidateSet {
    int threshold = 1;
    NameSet classes;
    std::map<std::string, std::vector<CandidateEvidence>> evidence;  // by class display name

    /// Display names in canonical order.
    std::vector<std::string> sorted() const { return classes.names(); }
};

/// A non-functional class becomes a candidate when some key naming it reaches
/// the threshold. Throws ConfigError for threshold < 1.
AspectCandidateSet detect_aspect_candidates(const RepetitionCounts &counts, const ConcernMap &concerns, int threshold);

}  // namespace aodesign
