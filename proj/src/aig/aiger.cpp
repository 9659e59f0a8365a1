// Copyright 2026 The synthkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "synthkit/aig/aiger.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace synthkit::aig {

std::string write_aiger(const Aig& input) {
  Aig aig = cleanup(input);
  std::ostringstream os;
  std::size_t ands = aig.size() - 1 - aig.num_pis() - aig.num_latches();
  os << "aag " << aig.size() - 1 << " " << aig.num_pis() << " " << aig.num_latches() << " " << aig.num_pos()
     << " " << ands << "\n";
  for (uint32_t pi : aig.pis())
    os << Literal::from_node(pi).raw() << "\n";
  for (const Latch& l : aig.latches())
    os << Literal::from_node(l.node).raw() << " " << l.next.raw() << "\n";
  for (const Output& o : aig.pos())
    os << o.literal.raw() << "\n";
  for (uint32_t i = 0; i < aig.size(); ++i) {
    if (!aig.is_and(i))
      continue;
    const Node& n = aig.node(i);
    os << Literal::from_node(i).raw() << " " << n.fanin0.raw() << " " << n.fanin1.raw() << "\n";
  }
  for (std::size_t i = 0; i < aig.num_pis(); ++i)
    if (!aig.pi_name(i).empty())
      os << "i" << i << " " << aig.pi_name(i) << "\n";
  for (std::size_t i = 0; i < aig.num_latches(); ++i)
    if (!aig.latches()[i].name.empty())
      os << "l" << i << " " << aig.latches()[i].name << "\n";
  for (std::size_t i = 0; i < aig.num_pos(); ++i)
    if (!aig.pos()[i].name.empty())
      os << "o" << i << " " << aig.pos()[i].name << "\n";
  return os.str();
}

namespace {

class Reader {
public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos)
        end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  Aig read();

private:
  [[noreturn]] void fail(const std::string& message) const { throw FormatError(line_ + 1, message); }

  std::vector<uint64_t> numbers(std::size_t expected_min, std::size_t expected_max) {
    if (line_ >= lines_.size())
      fail("unexpected end of file");
    std::string_view s = lines_[line_];
    std::vector<uint64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ' ') {
        ++pos;
        continue;
      }
      uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
      if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' '))
        fail("expected unsigned integer");
      out.push_back(v);
      pos = static_cast<std::size_t>(ptr - s.data());
    }
    if (out.size() < expected_min || out.size() > expected_max)
      fail("wrong number of fields");
    return out;
  }

  uint32_t literal(uint64_t v) {
    if (v > 2 * max_var_ + 1)
      fail("literal " + std::to_string(v) + " exceeds maximum variable index");
    return static_cast<uint32_t>(v);
  }

  Literal resolve(uint32_t lit);

  std::vector<std::string_view> lines_;
  std::size_t line_ = 0;
  uint64_t max_var_ = 0;
  Aig aig_;
  // Per AIGER variable: the image literal, its AND definition and state.
  std::vector<Literal> image_;
  std::vector<uint8_t> state_; // 0 undefined, 1 input, 2 and-pending, 3 in progress, 4 done
  std::vector<std::pair<uint32_t, uint32_t>> and_def_;
  std::vector<std::size_t> and_line_;
};

Literal Reader::resolve(uint32_t lit) {
  uint32_t var = lit >> 1;
  bool neg = lit & 1;
  if (var == 0)
    return kFalse ^ neg;
  // Iterative DFS so long AND chains do not overflow the stack.
  std::vector<uint32_t> stack{var};
  while (!stack.empty()) {
    uint32_t v = stack.back();
    if (state_[v] == 0) {
      line_ = lines_.size() - 1;
      fail("variable " + std::to_string(v) + " is used but never defined");
    }
    if (state_[v] == 1 || state_[v] == 4) {
      stack.pop_back();
      continue;
    }
    auto [r0, r1] = and_def_[v];
    if (state_[v] == 2) {
      state_[v] = 3;
      for (uint32_t r : {r0, r1}) {
        uint32_t rv = r >> 1;
        if (rv == 0)
          continue;
        if (state_[rv] == 3) {
          line_ = and_line_[v];
          fail("combinational cycle through variable " + std::to_string(v));
        }
        if (state_[rv] == 0) {
          line_ = and_line_[v];
          fail("variable " + std::to_string(rv) + " is used but never defined");
        }
        if (state_[rv] == 2)
          stack.push_back(rv);
      }
      continue;
    }
    auto image = [&](uint32_t r) { return (r >> 1) == 0 ? (kFalse ^ (r & 1)) : image_[r >> 1] ^ (r & 1); };
    image_[v] = aig_.make_and(image(r0), image(r1));
    state_[v] = 4;
    stack.pop_back();
  }
  return image_[var] ^ neg;
}

Aig Reader::read() {
  if (lines_.empty())
    fail("empty input");
  std::string_view header = lines_[0];
  if (header.substr(0, 4) != "aag ") {
    if (header.substr(0, 4) == "aig ")
      fail("binary AIGER is not supported");
    fail("expected 'aag' header");
  }
  lines_[0] = header.substr(4);
  auto h = numbers(5, 9);
  if (h.size() > 5)
    for (std::size_t i = 5; i < h.size(); ++i)
      if (h[i] != 0)
        fail("B/C/J/F sections are not supported");
  max_var_ = h[0];
  uint64_t ni = h[1], nl = h[2], no = h[3], na = h[4];
  if (ni + nl + na > max_var_)
    fail("M is smaller than I + L + A");
  image_.assign(max_var_ + 1, kFalse);
  state_.assign(max_var_ + 1, 0);
  and_def_.assign(max_var_ + 1, {0, 0});
  and_line_.assign(max_var_ + 1, 0);

  auto define = [&](uint64_t lit, uint8_t kind) {
    if (lit & 1 || lit < 2)
      fail("defined literal must be a positive even literal");
    uint32_t var = literal(lit) >> 1;
    if (state_[var] != 0)
      fail("variable " + std::to_string(var) + " defined twice");
    state_[var] = kind;
    return var;
  };

  ++line_;
  for (uint64_t i = 0; i < ni; ++i, ++line_) {
    uint32_t var = define(numbers(1, 1)[0], 1);
    image_[var] = aig_.create_pi();
  }
  std::vector<uint32_t> latch_next;
  for (uint64_t i = 0; i < nl; ++i, ++line_) {
    auto f = numbers(2, 3);
    if (f.size() == 3 && f[2] != 0)
      fail("only reset value 0 is supported");
    uint32_t var = define(f[0], 1);
    image_[var] = aig_.create_latch();
    latch_next.push_back(literal(f[1]));
  }
  std::vector<uint32_t> outputs;
  for (uint64_t i = 0; i < no; ++i, ++line_)
    outputs.push_back(literal(numbers(1, 1)[0]));
  for (uint64_t i = 0; i < na; ++i, ++line_) {
    auto f = numbers(3, 3);
    uint32_t var = define(f[0], 2);
    and_def_[var] = {literal(f[1]), literal(f[2])};
    and_line_[var] = line_;
  }
  std::size_t body_end = line_;

  std::vector<std::string> pi_names(ni), latch_names(nl), po_names(no);
  for (; line_ < lines_.size(); ++line_) {
    std::string_view s = lines_[line_];
    if (s.empty() && line_ + 1 == lines_.size())
      break;
    if (s == "c")
      break;
    if (s.empty())
      fail("empty line in symbol table");
    char kind = s[0];
    std::size_t space = s.find(' ');
    if ((kind != 'i' && kind != 'l' && kind != 'o') || space == std::string_view::npos || space == 1)
      fail("malformed symbol table entry");
    uint64_t index = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + space, index);
    if (ec != std::errc() || ptr != s.data() + space)
      fail("malformed symbol index");
    std::string name(s.substr(space + 1));
    auto& table = kind == 'i' ? pi_names : kind == 'l' ? latch_names : po_names;
    if (index >= table.size())
      fail("symbol index out of range");
    table[index] = name;
  }

  // Resolve AND definitions in file order so node numbering follows the file
  // whenever the file is already topological.
  for (uint32_t v = 0; v <= max_var_; ++v)
    if (state_[v] == 2)
      resolve(2 * v);
  line_ = body_end;

  Aig out;
  std::vector<Literal> ins;
  for (uint64_t i = 0; i < ni; ++i)
    ins.push_back(out.create_pi(pi_names[i]));
  for (uint64_t i = 0; i < nl; ++i)
    ins.push_back(out.create_latch(latch_names[i]));
  for (uint64_t i = 0; i < no; ++i)
    aig_.create_po(resolve(outputs[i]));
  for (uint64_t i = 0; i < nl; ++i)
    aig_.set_latch_next(i, resolve(latch_next[i]));
  auto cos = copy_into(out, aig_, ins);
  for (uint64_t i = 0; i < no; ++i)
    out.create_po(cos[i], po_names[i]);
  for (uint64_t i = 0; i < nl; ++i)
    out.set_latch_next(i, cos[no + i]);
  return out;
}

} // namespace

Aig read_aiger(std::string_view text) { return Reader(text).read(); }

} // namespace synthkit::aig
