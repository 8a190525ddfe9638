#ifndef MINGRP_CORPUS_HPP
#define MINGRP_CORPUS_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mingrp/verdict.hpp"

namespace mingrp
{

struct CorpusRow
{
  std::string label;
  std::function<PermGroup()> build;
  std::optional<GroupName> name;
  TheoremCase expected;
  /// Order limit used when the caller does not override it.
  std::uint64_t limit = default_order_limit;
};

/// The fixed verification corpus, in report order.
std::vector<CorpusRow> standard_corpus();

/// Rows from `*.gens` files in `dir`, sorted by file name. Each file carries
/// a "# expect: <case>" comment; a file that fails to parse yields a row
/// whose build throws.
std::vector<CorpusRow> corpus_from_directory(std::filesystem::path const &dir);

enum class RowStatus { pass, fail, skipped };

std::string to_string(RowStatus status);

struct RowResult
{
  std::string label;
  TheoremCase expected = TheoremCase::violation;
  RowStatus status = RowStatus::fail;
  std::uint64_t limit = 0;
  std::optional<Verification> verification;
  std::string message;
  double seconds = 0;
};

/// Runs every row; `limit` overrides the per-row limits. Rows run on up to
/// `jobs` threads; results keep the input order.
std::vector<RowResult> run_corpus(std::vector<CorpusRow> const &rows,
                                  std::optional<std::uint64_t> limit, unsigned jobs = 1);

nlohmann::json corpus_json(std::vector<RowResult> const &results);
std::string corpus_text(std::vector<RowResult> const &results);

} // namespace mingrp

#endif // MINGRP_CORPUS_HPP
