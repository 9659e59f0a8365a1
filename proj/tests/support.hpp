// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace synthkit::test {

inline constexpr std::array<const char*, 5> kCorpus = {"psel_scan", "mac16", "mac32", "rng_rom", "scoreboard"};

inline std::string corpus_path(const std::string& name) { return std::string(SYNTHKIT_CORPUS_DIR) + "/" + name + ".v"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_source(const std::string& name) { return read_file(corpus_path(name)); }

} // namespace synthkit::test
