// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "synthkit/aig/aig.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace synthkit::aig {

class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// ASCII AIGER ("aag") text of the compacted graph. Named PIs, latches and
/// POs are listed in the symbol table.
std::string write_aiger(const Aig& aig);

/// Parses ASCII AIGER. AND lines may appear in any order as long as the
/// definitions are acyclic. Latch reset values other than 0 and the
/// optional B/C/J/F sections are rejected.
Aig read_aiger(std::string_view text);

} // namespace synthkit::aig
