/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "aodesign/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace aodesign {

const char *to_string(Severity s) {
    switch (s) {
        case Severity::note: return "note";
        case Severity::warning: return "warning";
        case Severity::error: return "error";
    }
    return "unknown";
}

std::ostream &operator<<(std::ostream &os, const Diagnostic &d) {
    os << to_string(d.severity) << ": ";
    if (d.location.line != 0) os << "line " << d.location.line << ", column " << d.location.column << ": ";
    return os << d.message;
}

std::size_t count_severity(const Diagnostics &diags, Severity s) {
    return static_cast<std::size_t>(
        std::count_if(diags.begin(), diags.end(), [s](const Diagnostic &d) { return d.severity == s; }));
}

namespace {

std::string located(const std::string &what, SourceLocation where) {
    std::ostringstream os;
    os << "line " << where.line << ", column " << where.column << ": " << what;
    return os.str();
}

}  // namespace

XmlParseError::XmlParseError(const std::string &what, SourceLocation where)
    : UserError(located(what, where)), where_(where) {}

LabelParseError::LabelParseError(std::string label)
    : UserError("cannot parse message label '" + label + "'"), label_(std::move(label)) {}

}  // namespace aodesign
