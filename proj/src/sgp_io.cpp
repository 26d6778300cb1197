/*
 * Copyright 2026 The frobdet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cctype>
#include <set>
#include <sstream>

#include "frobdet/error.hpp"
#include "frobdet/semigroup.hpp"

namespace frobdet {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

Elem resolve(const std::string& tok, const std::vector<std::string>& names, std::size_t n,
             std::size_t line) {
  if (!names.empty()) {
    for (Elem i = 0; i < names.size(); ++i) {
      if (names[i] == tok) return i;
    }
    fail(line, "unknown element '" + tok + "'");
  }
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) {
    fail(line, "expected a 1-based index, got '" + tok + "'");
  }
  const unsigned long v = std::stoul(tok);
  if (v < 1 || v > n) {
    throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(line) + ": index " + tok);
  }
  return static_cast<Elem>(v - 1);
}

}  // namespace

Semigroup parse_sgp(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    pos = end + 1;
    auto toks = split_ws(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    lines.push_back({number, std::move(toks)});
  }
  std::size_t k = 0;
  auto next = [&]() -> const Line& {
    if (k >= lines.size()) fail(number, "unexpected end of input");
    return lines[k++];
  };
  const Line& head = next();
  if (head.tokens.size() != 2 || head.tokens[0] != "n") fail(head.number, "expected 'n <size>'");
  if (head.tokens[1].find_first_not_of("0123456789") != std::string::npos ||
      head.tokens[1].size() > 9) {
    fail(head.number, "bad size");
  }
  const std::size_t n = std::stoul(head.tokens[1]);
  if (n == 0) fail(head.number, "size must be positive");
  if (n > kDefaultSizeCap) throw Error(ErrorCode::SizeOverflow, "size " + head.tokens[1]);
  std::vector<std::string> names;
  const Line* cur = &next();
  if (cur->tokens[0] == "elements") {
    names.assign(cur->tokens.begin() + 1, cur->tokens.end());
    if (names.size() != n) fail(cur->number, "expected " + std::to_string(n) + " names");
    cur = &next();
  }
  if (cur->tokens.size() != 1 || cur->tokens[0] != "table") fail(cur->number, "expected 'table'");
  {
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (!seen.insert(nm).second) throw Error(ErrorCode::DuplicateName, nm);
    }
  }
  std::vector<Elem> tab;
  tab.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = next();
    if (row.tokens.size() != n) fail(row.number, "expected " + std::to_string(n) + " entries");
    for (const auto& tok : row.tokens) tab.push_back(resolve(tok, names, n, row.number));
  }
  std::optional<Elem> zero;
  std::optional<Elem> identity;
  while (k < lines.size()) {
    const Line& l = lines[k++];
    if (l.tokens.size() != 2) fail(l.number, "expected 'zero <x>' or 'identity <x>'");
    if (l.tokens[0] == "zero" && !zero) {
      zero = resolve(l.tokens[1], names, n, l.number);
    } else if (l.tokens[0] == "identity" && !identity) {
      identity = resolve(l.tokens[1], names, n, l.number);
    } else {
      fail(l.number, "unexpected '" + l.tokens[0] + "'");
    }
  }
  return Semigroup::from_table(n, std::move(tab), std::move(names), zero, identity);
}

std::string to_sgp(const Semigroup& s) {
  std::ostringstream os;
  const std::size_t n = s.size();
  os << "n " << n << '\n';
  if (s.has_names()) {
    os << "elements";
    for (const auto& nm : s.names()) os << ' ' << nm;
    os << '\n';
  }
  os << "table\n";
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << s.name(s.mul(i, j));
    }
    os << '\n';
  }
  if (s.zero()) os << "zero " << s.name(*s.zero()) << '\n';
  if (s.identity()) os << "identity " << s.name(*s.identity()) << '\n';
  return os.str();
}

}  // namespace frobdet
