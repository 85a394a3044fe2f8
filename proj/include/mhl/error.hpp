/* Copyright 2026 The mhl Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MHL_ERROR_HPP
#define MHL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mhl {

// Location of a piece of source text. Lines and columns are 1-based; a zero
// line means "no location".
struct SourceSpan {
    std::string file;
    int line = 0;
    int column = 0;
    int end_line = 0;
    int end_column = 0;

    bool valid() const { return line > 0; }
    std::string to_string() const;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-typed term, unbound index, bad substitution.
class TypeError : public Error {
public:
    using Error::Error;
};

// A kernel rule refused its inputs.
class KernelError : public Error {
public:
    using Error::Error;
};

// A gated axiom was requested from a theory that does not enable the gate.
class GateError : public KernelError {
public:
    GateError(const std::string& gate, const std::string& what)
        : KernelError("gate " + gate + " is not enabled: " + what), gate_(gate) {}
    const std::string& gate() const { return gate_; }

private:
    std::string gate_;
};

// Errors carrying a source position (parser and session diagnostics).
class SpannedError : public Error {
public:
    SpannedError(const std::string& msg, SourceSpan span)
        : Error(span.valid() ? span.to_string() + ": " + msg : msg), message_(msg), span_(std::move(span)) {}
    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    SourceSpan span_;
};

class ParseError : public SpannedError {
public:
    using SpannedError::SpannedError;
};

}  // namespace mhl

#endif
