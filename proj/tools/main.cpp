// usagefold - command line entry point
//
// find:   cluster the usages of a symbol under a corpus root
// diff:   match two serialized trees and print the shared/unmatched counts
// matrix: print the pairwise similarity matrix for a query as CSV
//
// Exit codes: 0 success (find: at least one usage), 1 find ran clean but
// matched nothing, 2 bad invocation, unreadable corpus, or malformed input.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufold/diagnostics.hpp"
#include "ufold/pipeline.hpp"
#include "ufold/report.hpp"
#include "ufold/sexpr.hpp"
#include "ufold/source_scan.hpp"

namespace {

using ufold::UsageKind;

struct FindArgs {
  std::string symbol;
  std::string root;
  std::vector<std::string> includes;
  std::vector<std::string> excludes;
  double threshold = 0.88;
  std::uint32_t min_height = 2;
  double dice = 0.5;
  std::string kind = "any";
  std::optional<std::uint32_t> arity;
  std::string format = "text";
  bool serial = false;
  std::string config_file;
};

// Shared by `find` and `matrix`; `symbol` stays positional so a config
// file can preset everything but the query itself.
void add_corpus_options(CLI::App* cmd, FindArgs& args, bool with_cluster) {
  cmd->add_option("symbol", args.symbol, "identifier to look for")
      ->required();
  cmd->add_option("--root", args.root, "corpus directory to scan");
  cmd->add_option("--include", args.includes,
                  "glob for files to scan (repeatable; default: every file "
                  "a parser claims)");
  cmd->add_option("--exclude", args.excludes,
                  "glob for files to skip (repeatable)");
  if (with_cluster) {
    cmd->add_option("--threshold", args.threshold,
                    "cluster admission similarity, 0..1")
        ->check(CLI::Range(0.0, 1.0));
  }
  cmd->add_option("--min-height", args.min_height,
                  "smallest subtree height the first match phase anchors")
      ->check(CLI::Range(1u, 1000u));
  cmd->add_option("--dice", args.dice,
                  "descendant-overlap cutoff for the second match phase, "
                  "above 0 up to 1");
  cmd->add_option("--kind", args.kind, "restrict to call or type usages")
      ->check(CLI::IsMember({"call", "type", "any"}));
  cmd->add_option("--arity", args.arity,
                  "restrict to calls with this many arguments");
  cmd->add_flag("--serial", args.serial,
                "run the single-thread reference kernels");
  cmd->add_option("--config", args.config_file,
                  "JSON file presetting any of these options; explicit "
                  "flags win");
}

// Fills settings the command line left untouched. Unknown keys are
// errors so a typo cannot silently fall back to a default.
void apply_config(const CLI::App* cmd, FindArgs& args) {
  std::string error;
  auto text = ufold::read_text_file(args.config_file, error);
  if (!text) throw std::runtime_error(error);
  nlohmann::json doc = nlohmann::json::parse(*text);
  if (!doc.is_object()) throw std::runtime_error("config must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "root") {
      if (!cmd->count("--root")) args.root = value.get<std::string>();
    } else if (key == "include") {
      if (!cmd->count("--include")) {
        args.includes = value.get<std::vector<std::string>>();
      }
    } else if (key == "exclude") {
      if (!cmd->count("--exclude")) {
        args.excludes = value.get<std::vector<std::string>>();
      }
    } else if (key == "threshold") {
      if (!cmd->count("--threshold")) args.threshold = value.get<double>();
    } else if (key == "min_height") {
      if (!cmd->count("--min-height")) {
        args.min_height = value.get<std::uint32_t>();
      }
    } else if (key == "dice") {
      if (!cmd->count("--dice")) args.dice = value.get<double>();
    } else if (key == "kind") {
      if (!cmd->count("--kind")) args.kind = value.get<std::string>();
    } else if (key == "arity") {
      if (!cmd->count("--arity")) args.arity = value.get<std::uint32_t>();
    } else if (key == "format") {
      if (!cmd->count("--format")) args.format = value.get<std::string>();
    } else if (key == "serial") {
      if (!cmd->count("--serial")) args.serial = value.get<bool>();
    } else {
      throw std::runtime_error("unknown config key: " + key);
    }
  }
}

ufold::FindOptions to_options(const FindArgs& args) {
  if (args.root.empty()) {
    throw std::runtime_error("--root is required (flag or config file)");
  }
  if (args.threshold < 0.0 || args.threshold > 1.0) {
    throw std::runtime_error("threshold must be within 0..1");
  }
  if (!(args.dice > 0.0) || args.dice > 1.0) {
    throw std::runtime_error("dice must be above 0 and at most 1");
  }
  if (args.min_height < 1) {
    throw std::runtime_error("min-height must be at least 1");
  }
  if (args.kind != "call" && args.kind != "type" && args.kind != "any") {
    throw std::runtime_error("kind must be call, type, or any");
  }
  if (args.format != "text" && args.format != "json") {
    throw std::runtime_error("format must be text or json");
  }

  ufold::FindOptions opt;
  opt.query.name = args.symbol;
  if (args.kind == "call") opt.query.kind_filter = UsageKind::call;
  if (args.kind == "type") opt.query.kind_filter = UsageKind::type_reference;
  opt.query.arity_filter = args.arity;
  opt.root = args.root;
  opt.include_globs = args.includes;
  opt.exclude_globs = args.excludes;
  opt.matcher.min_height = args.min_height;
  opt.matcher.dice_threshold = args.dice;
  opt.cluster.threshold = args.threshold;
  opt.parallel = !args.serial;
  return opt;
}

void print_warnings(const ufold::Report& report) {
  for (const ufold::Warning& w : report.warnings) {
    std::cerr << "warning: " << w.file << ": " << w.message << "\n";
  }
}

int run_find_command(const CLI::App* cmd, FindArgs& args) {
  if (!args.config_file.empty()) apply_config(cmd, args);
  ufold::FindResult result = ufold::run_find(to_options(args));
  print_warnings(result.report);
  std::cout << (args.format == "json" ? ufold::render_json(result.report)
                                      : ufold::render_text(result.report));
  if (result.sites.empty()) {
    std::cerr << "0 usages found\n";
    return 1;
  }
  return 0;
}

int run_matrix_command(const CLI::App* cmd, FindArgs& args) {
  if (!args.config_file.empty()) apply_config(cmd, args);
  ufold::FindResult result = ufold::run_find(to_options(args));
  print_warnings(result.report);
  const ufold::SimilarityMatrix& m = result.matrix;
  std::string row;
  for (std::size_t i = 0; i < m.size(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < m.size(); ++j) {
      char cell[32];
      std::snprintf(cell, sizeof cell, "%.17g", m.at(i, j));
      if (j > 0) row += ',';
      row += cell;
    }
    std::cout << row << "\n";
  }
  return 0;
}

std::string format_score(double score) {
  char buf[32];
  if (score == std::floor(score)) {
    std::snprintf(buf, sizeof buf, "%.1f", score);
  } else {
    std::snprintf(buf, sizeof buf, "%g", score);
  }
  return buf;
}

int run_diff_command(const std::string& path1, const std::string& path2,
                     const ufold::MatcherConfig& cfg) {
  ufold::SyntaxTree trees[2];
  const std::string* paths[2] = {&path1, &path2};
  for (int i = 0; i < 2; ++i) {
    std::string error;
    auto text = ufold::read_text_file(*paths[i], error);
    if (!text) throw std::runtime_error(error);
    trees[i] = ufold::parse_sexpr(*text, *paths[i]);
  }
  ufold::DiffResult d = ufold::diff(trees[0], trees[1], cfg);
  std::cout << "shared=" << d.shared << " unmatched=" << d.unmatched1 << "/"
            << d.unmatched2 << " score=" << format_score(ufold::score(d))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groups the usages of a code symbol by how similar their "
               "enclosing declarations look"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  FindArgs find_args;
  CLI::App* find_cmd =
      app.add_subcommand("find", "scan a corpus and cluster usages");
  add_corpus_options(find_cmd, find_args, true);
  find_cmd->add_option("--format", find_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  FindArgs matrix_args;
  CLI::App* matrix_cmd = app.add_subcommand(
      "matrix", "print pairwise usage similarities as CSV");
  add_corpus_options(matrix_cmd, matrix_args, false);

  std::string diff_path1;
  std::string diff_path2;
  ufold::MatcherConfig diff_cfg;
  CLI::App* diff_cmd = app.add_subcommand(
      "diff", "match two serialized trees and print the counts");
  diff_cmd->add_option("tree1", diff_path1, "first tree file")->required();
  diff_cmd->add_option("tree2", diff_path2, "second tree file")->required();
  diff_cmd->add_option("--min-height", diff_cfg.min_height, "anchor height")
      ->check(CLI::Range(1u, 1000u));
  diff_cmd->add_option("--dice", diff_cfg.dice_threshold, "overlap cutoff");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (find_cmd->parsed()) return run_find_command(find_cmd, find_args);
    if (matrix_cmd->parsed()) return run_matrix_command(matrix_cmd, matrix_args);
    return run_diff_command(diff_path1, diff_path2, diff_cfg);
  } catch (const ufold::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ufold::CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
