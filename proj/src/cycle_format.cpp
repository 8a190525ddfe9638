#include <cctype>
#include <charconv>
#include <sstream>

#include "mingrp/error.hpp"
#include "mingrp/perm.hpp"

namespace mingrp
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::vector<point_t>> parse_cycles(std::string_view text)
{
  std::vector<std::vector<point_t>> cycles;
  std::size_t i = 0;

  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  if (i == text.size())
    throw ParseError("empty permutation");

  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;

    std::vector<point_t> cycle;
    for (;;) {
      skip_space();
      if (i == text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        if (cycle.empty())
          throw ParseError("stray ',' in \"" + std::string(text) + "\"");
        ++i;
        skip_space();
      }

      point_t value = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0)
        throw ParseError("bad point in \"" + std::string(text) + "\"");
      i = static_cast<std::size_t>(end - text.data());
      cycle.push_back(value);
    }

    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }

  return cycles;
}

point_t largest_point(std::vector<std::vector<point_t>> const &cycles)
{
  point_t result = 0;
  for (auto const &c : cycles) {
    for (point_t x : c)
      result = std::max(result, x);
  }
  return result;
}

} // namespace

std::string to_cycles(Permutation const &p)
{
  std::string out;
  std::vector<bool> done(p.degree(), false);

  for (point_t i = 0; i < p.degree(); ++i) {
    if (done[i] || p[i] == i)
      continue;
    out += '(';
    for (point_t j = i; !done[j]; j = p[j]) {
      done[j] = true;
      if (j != i)
        out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }

  return out.empty() ? "()" : out;
}

Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree)
{
  auto cycles = parse_cycles(text);
  std::size_t largest = largest_point(cycles);
  std::size_t n = degree.value_or(std::max<std::size_t>(largest, 1));

  if (largest > n)
    throw ParseError("point " + std::to_string(largest) + " exceeds degree "
                     + std::to_string(n));
  if (n > max_degree)
    throw ParseError("degree exceeds supported maximum");

  try {
    return Permutation::from_cycles(n, cycles);
  } catch (std::invalid_argument const &e) {
    throw ParseError(e.what());
  }
}

PermGroup parse_generators(std::string_view text)
{
  std::optional<std::size_t> degree;
  std::vector<std::vector<std::vector<point_t>>> parsed;
  std::size_t largest = 1;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    if (line.starts_with("degree")) {
      std::string_view rest = trim(line.substr(6));
      std::size_t value = 0;
      auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || end != rest.data() + rest.size() || value == 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad degree header");
      if (degree)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate degree header");
      degree = value;
      continue;
    }

    try {
      parsed.push_back(parse_cycles(line));
    } catch (ParseError const &e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    largest = std::max<std::size_t>(largest, largest_point(parsed.back()));
  }

  std::size_t n = degree.value_or(largest);
  if (largest > n)
    throw ParseError("point " + std::to_string(largest) + " exceeds degree "
                     + std::to_string(n));
  if (n > max_degree)
    throw ParseError("degree exceeds supported maximum");

  std::vector<Permutation> gens;
  for (auto const &cycles : parsed) {
    try {
      gens.push_back(Permutation::from_cycles(n, cycles));
    } catch (std::invalid_argument const &e) {
      throw ParseError(e.what());
    }
  }

  return PermGroup(n, std::move(gens));
}

std::string format_generators(PermGroup const &group,
                              std::vector<std::string> const &header)
{
  std::ostringstream out;
  for (auto const &line : header)
    out << "# " << line << '\n';
  out << "degree " << group.degree() << '\n';
  for (auto const &g : group.generators())
    out << to_cycles(g) << '\n';
  return out.str();
}

} // namespace mingrp
