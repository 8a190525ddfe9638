#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "mingrp/corpus.hpp"
#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"

namespace mingrp
{

namespace
{

PermGroup from_cycles(std::size_t degree, std::vector<std::string> const &gens)
{
  std::vector<Permutation> perms;
  for (auto const &g : gens)
    perms.push_back(parse_permutation(g, degree));
  return PermGroup(degree, std::move(perms));
}

CorpusRow named_row(std::string const &text, TheoremCase expected,
                    std::uint64_t limit = default_order_limit)
{
  auto name = parse_name(text);
  return {text, [name] { return construct(name); }, name, expected, limit};
}

TheoremCase parse_case(std::string text)
{
  text.erase(0, text.find_first_not_of(" \t"));
  text.erase(text.find_last_not_of(" \t\r") + 1);
  if (text == "1")
    return TheoremCase::one;
  if (text == "2")
    return TheoremCase::two;
  if (text == "3")
    return TheoremCase::three;
  if (text == "4")
    return TheoremCase::four;
  if (text == "violation")
    return TheoremCase::violation;
  throw ParseError("unknown expected case '" + text + "'");
}

RowResult run_row(CorpusRow const &row, std::optional<std::uint64_t> override_limit)
{
  RowResult r;
  r.label = row.label;
  r.expected = row.expected;
  r.limit = override_limit.value_or(row.limit);
  auto start = std::chrono::steady_clock::now();
  try {
    auto group = row.build();
    auto order = group.order();
    if (order > r.limit) {
      r.status = RowStatus::skipped;
      r.message = "order " + std::to_string(order) + " exceeds limit " + std::to_string(r.limit);
    } else {
      r.verification = verify(group, row.label, row.name, r.limit);
      auto got = r.verification->theorem.kind;
      r.status = got == row.expected ? RowStatus::pass : RowStatus::fail;
      if (got != row.expected)
        r.message = "expected case " + to_string(row.expected) + ", got " + to_string(got);
    }
  } catch (std::exception const &e) {
    r.status = RowStatus::fail;
    r.message = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace

std::vector<CorpusRow> standard_corpus()
{
  std::vector<CorpusRow> rows;
  rows.push_back({"S4", [] { return from_cycles(4, {"(1,2)", "(1,2,3,4)"}); }, parse_name("S4"),
                  TheoremCase::one});
  rows.push_back(named_row("A5", TheoremCase::two));
  rows.push_back({"SL(2,5)", [] { return special_linear_on_vectors(5); }, std::nullopt,
                  TheoremCase::two});
  rows.push_back(named_row("L2(7)", TheoremCase::two));
  rows.push_back(named_row("L2(8)", TheoremCase::two));
  rows.push_back(named_row("S5", TheoremCase::three));
  rows.push_back({"A5xC2",
                  [] { return from_cycles(7, {"(1,2,3)", "(1,2,3,4,5)", "(6,7)"}); },
                  std::nullopt, TheoremCase::three});
  rows.push_back(named_row("A6", TheoremCase::four));
  rows.push_back(named_row("L2(11)", TheoremCase::four));
  rows.push_back(named_row("L2(13)", TheoremCase::two, 1100));
  rows.push_back(named_row("A7", TheoremCase::violation, 2600));
  rows.push_back(named_row("S6", TheoremCase::violation));
  return rows;
}

std::vector<CorpusRow> corpus_from_directory(std::filesystem::path const &dir)
{
  std::vector<std::filesystem::path> files;
  for (auto const &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gens")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusRow> rows;
  for (auto const &path : files) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    CorpusRow row;
    row.label = path.filename().string();
    row.expected = TheoremCase::violation;
    std::string error;
    std::istringstream lines(text);
    bool found = false;
    for (std::string line; std::getline(lines, line);) {
      auto pos = line.find("# expect:");
      if (pos == std::string::npos)
        continue;
      try {
        row.expected = parse_case(line.substr(pos + 9));
        found = true;
      } catch (ParseError const &e) {
        error = e.what();
      }
      break;
    }
    if (!found && error.empty())
      error = "missing '# expect:' header";

    if (!error.empty())
      row.build = [error, label = row.label]() -> PermGroup {
        throw ParseError(label + ": " + error);
      };
    else
      row.build = [text] { return parse_generators(text); };
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(RowStatus status)
{
  switch (status) {
  case RowStatus::pass: return "PASS";
  case RowStatus::fail: return "FAIL";
  case RowStatus::skipped: return "SKIPPED";
  }
  return "FAIL";
}

std::vector<RowResult> run_corpus(std::vector<CorpusRow> const &rows,
                                  std::optional<std::uint64_t> limit, unsigned jobs)
{
  std::vector<RowResult> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < rows.size();)
      results[i] = run_row(rows[i], limit);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t)
    threads.emplace_back(worker);
  worker();
  for (auto &t : threads)
    t.join();
  return results;
}

nlohmann::json corpus_json(std::vector<RowResult> const &results)
{
  auto rows = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (auto const &r : results) {
    nlohmann::json row{{"label", r.label},
                       {"expected", to_string(r.expected)},
                       {"status", to_string(r.status)},
                       {"limit", r.limit}};
    if (r.verification) {
      row["case"] = to_string(r.verification->theorem.kind);
      row["report"] = to_json(*r.verification);
    }
    if (!r.message.empty())
      row["message"] = r.message;
    row["timings"] = {{"total", r.seconds}};
    rows.push_back(row);
    pass += r.status == RowStatus::pass;
    fail += r.status == RowStatus::fail;
    skipped += r.status == RowStatus::skipped;
  }
  return {{"rows", rows}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

std::string corpus_text(std::vector<RowResult> const &results)
{
  std::ostringstream out;
  std::size_t pass = 0, fail = 0, skipped = 0;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-10s %-10s %-8s %s\n", "group", "expected", "got",
                "status", "time");
  out << line;
  for (auto const &r : results) {
    std::string got = r.verification ? to_string(r.verification->theorem.kind) : "-";
    std::snprintf(line, sizeof line, "%-16s %-10s %-10s %-8s %.2fs", r.label.c_str(),
                  to_string(r.expected).c_str(), got.c_str(), to_string(r.status).c_str(),
                  r.seconds);
    out << line;
    if (!r.message.empty())
      out << "  " << r.message;
    out << '\n';
    pass += r.status == RowStatus::pass;
    fail += r.status == RowStatus::fail;
    skipped += r.status == RowStatus::skipped;
  }
  out << results.size() << " rows: " << pass << " pass, " << fail << " fail, " << skipped
      << " skipped\n";
  return out.str();
}

} // namespace mingrp
