/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "aodesign/codegen.hpp"
#include "aodesign/crosscut.hpp"
#include "aodesign/metrics.hpp"
#include "aodesign/model.hpp"
#include "aodesign/transform.hpp"

#include <json.hpp>

#include <vector>

namespace aodesign {

using ordered_json = nlohmann::ordered_json;

// Document schemas written by the CLI. Keys keep insertion order so the
// output is stable and reads top-down.

/// {"rows": [{<kTableColumns as snake_case>, xmi_id, seq, seqno, guard,
///  assignment, args, synchronicity, kind}], "woven": [...]}
ordered_json to_json(const MessageRecord &row);
ordered_json to_json(const MessageTable &table);

/// {threshold, candidates: [{class, evidence: [{message, count}]}]}
ordered_json to_json(const AspectCandidateSet &candidates);

/// [{message, class, count}] in key order.
ordered_json to_json(const RepetitionCounts &counts);

/// {aspects: [{name, source_class, advices: [...]}], base_messages,
///  removed_rows, absorbed_rows, unanchored}
ordered_json to_json(const AdviceSpec &advice);
ordered_json to_json(const AodModel &aod);

/// {mode, classes: [{class, ood: {fan_in, fan_out}, aod: {...}|null}],
///  aspects: [...], totals: {ood, aod}, delta}
ordered_json to_json(const CouplingReport &report);

/// {units: [{path, kind, sha256}]}
ordered_json manifest_json(const std::vector<GeneratedUnit> &units);

ordered_json to_json(const Diagnostics &diags);

}  // namespace aodesign
