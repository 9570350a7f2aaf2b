// qflow: questionnaire flow tool.
//
// Exit codes: 0 success, 1 validation failure, 2 inadmissible precedence
// relation, 3 I/O or schema error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qflow/core.hpp"
#include "qflow/dot.hpp"
#include "qflow/fsdigraph.hpp"
#include "qflow/fstree.hpp"
#include "qflow/oracles.hpp"
#include "qflow/ordering.hpp"
#include "qflow/preprocess.hpp"
#include "qflow/spec_file.hpp"
#include "qflow/walk.hpp"

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kInadmissible = 2, kIoOrSchema = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    throw IoError("cannot write " + path);
  }
}

struct Expanded {
  qflow::SpecFile spec;
  qflow::SkipList skips;
  qflow::FlagSet flags;
};

Expanded expand(const std::string& path) {
  Expanded e{qflow::load_spec(path), {}, {}};
  e.skips = qflow::expand_skip_list(e.spec.questionnaire, e.spec.pre_skip);
  if (auto report = qflow::validate_skip_list(e.spec.questionnaire, e.skips); !report.ok()) {
    throw qflow::RejectedInput("expanded skip-list is invalid", std::move(report));
  }
  e.flags = qflow::expand_flag_set(e.spec.questionnaire, e.skips, e.spec.pre_flag);
  return e;
}

std::vector<int> parse_script(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) {
        throw std::invalid_argument(token);
      }
    } catch (const std::exception&) {
      throw qflow::WalkError("--script: \"" + token + "\" is not an integer");
    }
  }
  return out;
}

int run_validate(const std::string& path) {
  const auto spec = qflow::load_spec(path);
  const auto& q = spec.questionnaire;
  const auto skips = qflow::expand_skip_list(q, spec.pre_skip);
  const auto skip_report = qflow::validate_skip_list(q, skips);
  std::cout << "skip-list: " << skip_report.to_string();
  if (!skip_report.ok()) {
    return kValidation;
  }
  try {
    qflow::expand_flag_set(q, skips, spec.pre_flag);
    std::cout << "flag-set: ok\n";
  } catch (const qflow::IncompatibleFlagSet& e) {
    std::cout << "flag-set: " << e.report().to_string();
    return kValidation;
  }
  return kOk;
}

int verify_oracle(const Expanded& e, const qflow::FsDigraph& built, int seeds) {
  const auto tree = qflow::build_fs_tree(e.spec.questionnaire, e.flags, e.skips);
  int agreeing = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto reduced = qflow::reduce_exhaustive(tree, e.spec.questionnaire, static_cast<std::uint64_t>(seed));
    if (qflow::digraph_isomorphic(reduced, built)) {
      ++agreeing;
    } else {
      std::cerr << "oracle: merge order with seed " << seed << " reached a different digraph\n";
    }
  }
  const bool unfolds = qflow::unfold(built, e.spec.questionnaire) == tree;
  std::cerr << "oracle: " << agreeing << "/" << seeds << " exhaustive reductions isomorphic; unfold "
            << (unfolds ? "matches" : "differs from") << " the FS-decision tree\n";
  return agreeing == seeds && unfolds ? kOk : kValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Questionnaire flow modelling: orderings, skip/flag expansion, FS-decision trees and digraphs"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string output_path;
  std::string dot_path;
  std::string script;
  bool verify = false;
  int seeds = 10;

  auto add_common = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("spec", spec_path, "questionnaire spec file (JSON)")->required();
    sub->add_option("-o,--output", output_path, "write the result here instead of standard output");
    if (with_dot) {
      sub->add_option("--dot", dot_path, "also write a Graphviz rendering");
    }
  };

  auto* orderings = app.add_subcommand("orderings", "list every question order respecting the precedence relation");
  add_common(orderings, false);
  auto* expand_cmd = app.add_subcommand("expand", "expand pre-skip-list and pre-flag-set");
  add_common(expand_cmd, false);
  auto* validate = app.add_subcommand("validate", "check the expanded skip-list and flag-set");
  validate->add_option("spec", spec_path, "questionnaire spec file (JSON)")->required();
  auto* tree_cmd = app.add_subcommand("tree", "build the FS-decision tree");
  add_common(tree_cmd, true);
  auto* digraph_cmd = app.add_subcommand("digraph", "build the fully reduced FS-decision digraph");
  add_common(digraph_cmd, true);
  digraph_cmd->add_flag("--verify-oracle", verify, "cross-check against exhaustive merging of the tree");
  digraph_cmd->add_option("--seeds", seeds, "merge orders tried by --verify-oracle")->check(CLI::PositiveNumber);
  auto* walk_cmd = app.add_subcommand("walk", "answer the questionnaire by following the digraph");
  walk_cmd->add_option("spec", spec_path, "questionnaire spec file (JSON)")->required();
  walk_cmd->add_option("--script", script, "comma separated answers instead of prompting");
  auto* stats = app.add_subcommand("stats", "tree and digraph sizes");
  add_common(stats, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoOrSchema;
  }

  try {
    if (orderings->parsed()) {
      const auto spec = qflow::load_spec(spec_path);
      const auto result = qflow::enumerate_orderings(spec.precedence);
      write_output(output_path, qflow::emit_orderings(std::get<std::vector<qflow::Ordering>>(result)));
      return kOk;
    }
    if (validate->parsed()) {
      return run_validate(spec_path);
    }
    if (walk_cmd->parsed()) {
      const auto e = expand(spec_path);
      const auto d = qflow::build_fs_digraph(e.spec.questionnaire, e.flags, e.skips);
      const auto result = walk_cmd->count("--script") != 0
                              ? qflow::walk_scripted(d, e.spec.questionnaire, parse_script(script))
                              : qflow::walk_interactive(d, e.spec.questionnaire, std::cin, std::cout);
      std::cout << result.transcript;
      return kOk;
    }

    const auto e = expand(spec_path);
    const auto& q = e.spec.questionnaire;
    if (expand_cmd->parsed()) {
      write_output(output_path, qflow::emit_expanded(q, e.skips, e.flags));
    } else if (tree_cmd->parsed()) {
      const auto tree = qflow::build_fs_tree(q, e.flags, e.skips);
      write_output(output_path, qflow::emit_tree(tree, q));
      if (!dot_path.empty()) {
        write_output(dot_path, qflow::export_dot(tree));
      }
    } else if (digraph_cmd->parsed()) {
      const auto d = qflow::build_fs_digraph(q, e.flags, e.skips);
      write_output(output_path, qflow::emit_digraph(d, q));
      if (!dot_path.empty()) {
        write_output(dot_path, qflow::export_dot(d));
      }
      if (verify) {
        return verify_oracle(e, d, seeds);
      }
    } else if (stats->parsed()) {
      const auto tree = qflow::build_fs_tree(q, e.flags, e.skips);
      nlohmann::json doc{{"tree_vertices", tree.vertex_count()}};
      if (q.all_branching()) {
        const auto d = qflow::build_fs_digraph(q, e.flags, e.skips);
        doc["digraph_vertices"] = d.vertex_count();
        doc["compression_ratio"] =
            static_cast<double>(d.vertex_count()) / static_cast<double>(tree.vertex_count());
      } else {
        doc["digraph_vertices"] = nullptr;
        doc["compression_ratio"] = nullptr;
      }
      write_output(output_path, doc.dump(2) + "\n");
    }
    return kOk;
  } catch (const qflow::SpecError& err) {
    std::cerr << "error: " << err.what() << "\n";
    switch (err.kind()) {
      case qflow::SpecError::Kind::schema:
        return kIoOrSchema;
      case qflow::SpecError::Kind::inadmissible:
        return kInadmissible;
      case qflow::SpecError::Kind::semantic:
        return kValidation;
    }
    return kValidation;
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kIoOrSchema;
  } catch (const qflow::InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidation;
  } catch (const qflow::UnsupportedHypothesis& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kValidation;
  }
}
