#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mingrp/corpus.hpp"
#include "mingrp/error.hpp"
#include "mingrp/gf.hpp"
#include "mingrp/lists.hpp"
#include "mingrp/verdict.hpp"

namespace mingrp
{

namespace
{

int exit_code_for(std::exception const &e)
{
  if (dynamic_cast<LimitExceeded const *>(&e))
    return exit_limit;
  if (dynamic_cast<Unsupported const *>(&e))
    return exit_unsupported;
  if (dynamic_cast<ParseError const *>(&e) || dynamic_cast<DegreeMismatch const *>(&e)
      || dynamic_cast<FieldError const *>(&e))
    return exit_parse;
  return exit_failure;
}

nlohmann::json verdict_json(ListVerdict const &v)
{
  return {{"member", v.member}, {"list", to_string(v.list)}, {"item", v.item}, {"reason", v.reason}};
}

std::string verdict_text(ListVerdict const &v)
{
  if (!v.member)
    return "no (" + v.reason + ")";
  return "yes, item " + std::to_string(v.item) + " (" + v.reason + ")";
}

int cmd_classify(std::string const &text, bool json, std::ostream &out)
{
  auto name = parse_name(text);
  auto normal = normalize(name);
  auto l1 = in_list1(name);
  auto l3 = in_list3(name);
  std::optional<std::uint64_t> order;
  try {
    order = expected_order(normal);
  } catch (std::overflow_error const &) {
  }

  if (json) {
    nlohmann::json j{{"input", text},
                     {"normalized_name", render(normal)},
                     {"list1", verdict_json(l1)},
                     {"list3", verdict_json(l3)}};
    j["order"] = order ? nlohmann::json(*order) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return exit_ok;
  }
  out << "name: " << render(normal) << '\n';
  out << "order: " << (order ? std::to_string(*order) : "exceeds 64 bits") << '\n';
  out << "list 1: " << verdict_text(l1) << '\n';
  out << "list 3: " << verdict_text(l3) << '\n';
  return exit_ok;
}

int cmd_construct(std::string const &text, std::string const &format, std::ostream &out)
{
  auto name = parse_name(text);
  auto group = construct(name);
  auto label = render(name);
  auto order = group.order();

  if (format == "json") {
    auto cycles = nlohmann::json::array();
    auto images = nlohmann::json::array();
    for (auto const &g : group.generators()) {
      cycles.push_back(to_cycles(g));
      auto one_based = nlohmann::json::array();
      for (auto x : g.images())
        one_based.push_back(x + 1);
      images.push_back(one_based);
    }
    out << nlohmann::json{{"name", label},
                          {"degree", group.degree()},
                          {"order", order},
                          {"generators", cycles},
                          {"images", images}}
             .dump(2)
        << '\n';
    return exit_ok;
  }

  std::vector<std::string> header{"name: " + label, "degree: " + std::to_string(group.degree()),
                                  "order: " + std::to_string(order)};
  if (format == "cycles") {
    out << format_generators(group, header);
    return exit_ok;
  }
  for (auto const &line : header)
    out << "# " << line << '\n';
  for (auto const &g : group.generators()) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      out << (i ? " " : "") << g[static_cast<point_t>(i)] + 1;
    out << '\n';
  }
  return exit_ok;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_verify(std::string const &text, std::string const &gens_file, std::uint64_t limit,
               bool json, std::ostream &out, std::ostream &err)
{
  std::optional<GroupName> name;
  std::string input;
  PermGroup group = PermGroup::trivial(1);
  if (!gens_file.empty()) {
    input = gens_file;
    group = parse_generators(read_file(gens_file));
  } else {
    name = parse_name(text);
    input = text;
    group = construct(*name);
  }

  if (group.order() > limit) {
    err << "order " << group.order() << " exceeds the limit of " << limit << '\n';
    return exit_limit;
  }
  auto v = verify(group, input, name, limit);
  if (json)
    out << to_json(v).dump(2) << '\n';
  else
    out << render_text(v);
  return v.theorem.kind == TheoremCase::violation ? exit_failure : exit_ok;
}

int cmd_corpus(std::optional<std::uint64_t> limit, bool json,
               std::vector<std::string> const &dirs, unsigned jobs, std::ostream &out)
{
  auto rows = standard_corpus();
  for (auto const &dir : dirs) {
    auto extra = corpus_from_directory(dir);
    rows.insert(rows.end(), std::make_move_iterator(extra.begin()),
                std::make_move_iterator(extra.end()));
  }
  auto results = run_corpus(rows, limit, jobs);
  if (json)
    out << corpus_json(results).dump(2) << '\n';
  else
    out << corpus_text(results);
  bool failed = std::any_of(results.begin(), results.end(),
                            [](RowResult const &r) { return r.status == RowStatus::fail; });
  return failed ? exit_failure : exit_ok;
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Minimal simple groups and the soluble second-maximal condition"};
  app.name("mingrp");
  app.require_subcommand(1);

  std::string output;
  app.add_option("-o,--output", output, "Write the report to a file");

  std::string name, gens_file, format = "cycles";
  std::uint64_t verify_limit = default_order_limit;
  std::optional<std::uint64_t> corpus_limit;
  bool json = false;
  std::vector<std::string> dirs;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto *classify = app.add_subcommand("classify", "List 1 / List 3 membership of a group name");
  classify->add_option("name", name, "Group name, e.g. L2(2^6)")->required();
  classify->add_flag("--json", json, "JSON output");

  auto *construct_cmd = app.add_subcommand("construct", "Permutation generators for a name");
  construct_cmd->add_option("name", name, "Group name")->required();
  construct_cmd->add_option("--format", format, "Output format")
    ->check(CLI::IsMember({"cycles", "images", "json"}));

  auto *verify_cmd = app.add_subcommand("verify", "Assign a concrete group to a theorem case");
  auto *name_opt = verify_cmd->add_option("name", name, "Group name");
  auto *gens_opt = verify_cmd->add_option("--gens", gens_file, "Generator file");
  name_opt->excludes(gens_opt);
  verify_cmd->add_option("--limit", verify_limit, "Largest group order to analyse")
    ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", json, "JSON output");

  auto *corpus = app.add_subcommand("corpus", "Run the verification corpus");
  corpus->add_option("--limit", corpus_limit, "Override the per-row order limits")
    ->check(CLI::PositiveNumber);
  corpus->add_flag("--json", json, "JSON output");
  corpus->add_option("--dir", dirs, "Directory of extra *.gens rows")->check(CLI::ExistingDirectory);
  corpus->add_option("--jobs", jobs, "Rows evaluated concurrently")->check(CLI::PositiveNumber);

  std::ostringstream report;
  int code = exit_ok;
  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed() && name_opt->count() + gens_opt->count() != 1)
      throw CLI::ValidationError("verify", "give exactly one of NAME or --gens");

    if (classify->parsed())
      code = cmd_classify(name, json, report);
    else if (construct_cmd->parsed())
      code = cmd_construct(name, format, report);
    else if (verify_cmd->parsed())
      code = cmd_verify(name, gens_file, verify_limit, json, report, err);
    else
      code = cmd_corpus(corpus_limit, json, dirs, jobs, report);
  } catch (CLI::ParseError const &e) {
    int status = app.exit(e, out, err);
    return status == 0 ? exit_ok : exit_parse;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    code = exit_code_for(e);
  }

  if (output.empty()) {
    out << report.str();
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write " << output << '\n';
      return exit_failure;
    }
    file << report.str();
  }
  return code;
}

} // namespace mingrp
