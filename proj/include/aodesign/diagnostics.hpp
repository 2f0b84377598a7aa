/*
 * Copyright (c) 2026 The aodesign Authors. All rights reserved.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aodesign {

enum class Severity { note, warning, error };

/// 1-based line/column into the source document; line 0 means "no location".
struct SourceLocation {
    std::size_t line = 0;
    std::size_t column = 0;

    friend bool operator==(const SourceLocation &, const SourceLocation &) = default;
};

struct Diagnostic {
    Severity severity = Severity::warning;
    std::string message;
    SourceLocation location;

    friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

using Diagnostics = std::vector<Diagnostic>;

const char *to_string(Severity s);
std::ostream &operator<<(std::ostream &os, const Diagnostic &d);

std::size_t count_severity(const Diagnostics &diags, Severity s);

// Errors caused by the input (bad file, bad config, unparseable label). The
// CLI maps these to exit status 1; everything else is an internal failure.
class UserError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class XmlParseError : public UserError {
public:
    XmlParseError(const std::string &what, SourceLocation where);
    SourceLocation location() const { return where_; }

private:
    SourceLocation where_;
};

class UnsupportedFormatError : public UserError {
public:
    using UserError::UserError;
};

class LabelParseError : public UserError {
public:
    explicit LabelParseError(std::string label);
    const std::string &label() const { return label_; }

private:
    std::string label_;
};

class ConfigError : public UserError {
public:
    using UserError::UserError;
};

class TransformError : public UserError {
public:
    using UserError::UserError;
};

class NamingError : public UserError {
public:
    using UserError::UserError;
};

class GenerationError : public UserError {
public:
    using UserError::UserError;
};

/// Broken pipeline invariant, e.g. a candidate set computed against another table.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace aodesign
