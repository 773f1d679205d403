#include "bellperm/text.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "bellperm/errors.hpp"

namespace bellperm::text {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token) {
  int value = 0;
  auto const* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<int> digits(std::string_view token) {
  std::vector<int> out;
  for (char c : token) {
    if (c < '1' || c > '9')
      throw ParseError("digit-string shorthand accepts only 1-9: '" + std::string(token) +
                       "'");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

std::string format_word(std::span<int const> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_permutation(Permutation const& sigma) { return format_word(sigma.word()); }

std::string format_sef(SubexceedantFunction const& f) { return format_word(f.word()); }

std::string format_partition(SetPartition const& pi) {
  std::string out;
  for (auto const& b : pi.blocks()) {
    if (!out.empty()) out += '/';
    out += format_word(b);
  }
  return out;
}

std::string format_cycles(Permutation const& sigma, CycleStart start, bool compact) {
  if (compact && sigma.size() > 9)
    throw InvalidArgument("compact cycle notation needs n <= 9");
  auto const cd = cycle_decomposition(sigma);
  auto const cycles = start == CycleStart::Maximum ? max_first(cd) : cd.cycles;
  std::string out;
  for (auto const& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i && !compact) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

bool is_cycle_text(std::string_view t) {
  t = trim(t);
  return !t.empty() && t.front() == '(';
}

std::vector<int> parse_word(std::string_view t) {
  auto const tokens = split_ws(trim(t));
  if (tokens.empty()) throw ParseError("empty input");
  if (tokens.size() == 1 && tokens[0].size() > 1) return digits(tokens[0]);
  std::vector<int> out;
  out.reserve(tokens.size());
  for (auto tok : tokens) out.push_back(parse_int(tok));
  return out;
}

std::vector<std::vector<int>> parse_cycles(std::string_view t) {
  t = trim(t);
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < t.size()) {
    if (is_space(t[i])) {
      ++i;
      continue;
    }
    if (t[i] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(i));
    auto const close = t.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unclosed '('");
    auto const body = trim(t.substr(i + 1, close - i - 1));
    if (body.empty()) throw ParseError("empty cycle");
    if (body.find('(') != std::string_view::npos) throw ParseError("nested '('");
    auto const tokens = split_ws(body);
    std::vector<int> cycle;
    // "(9721)": one multi-digit token without a zero is read digit by digit.
    if (tokens.size() == 1 && tokens[0].size() > 1 &&
        tokens[0].find('0') == std::string_view::npos) {
      cycle = digits(tokens[0]);
    } else {
      for (auto tok : tokens) cycle.push_back(parse_int(tok));
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (cycles.empty()) throw ParseError("empty input");
  return cycles;
}

Permutation parse_permutation(std::string_view t, int n) {
  if (is_cycle_text(t)) return from_cycles(parse_cycles(t), n);
  return Permutation(parse_word(t));
}

SubexceedantFunction parse_sef(std::string_view t) {
  return SubexceedantFunction(parse_word(t));
}

SetPartition parse_partition(std::string_view t) {
  t = trim(t);
  if (t.empty()) throw ParseError("empty input");
  std::vector<std::vector<int>> blocks;
  std::size_t start = 0;
  while (true) {
    auto const slash = t.find('/', start);
    auto const part = t.substr(start, slash == std::string_view::npos ? t.size() - start
                                                                      : slash - start);
    auto const tokens = split_ws(part);
    if (tokens.empty()) throw ParseError("empty block");
    std::vector<int> block;
    for (auto tok : tokens) block.push_back(parse_int(tok));
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return SetPartition::normalized(std::move(blocks));
}

}  // namespace bellperm::text
