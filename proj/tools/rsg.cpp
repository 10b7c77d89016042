// rsg: sample random polygon-gluing surfaces, enumerate exact small-case
// distributions, and run the statistical verification suite.
//
//   rsg sample --model sprime --n 10000 --m 100 --samples 10000 --seed 13
//   rsg dist   --model sprime --n 10000 --m 100 --samples 10000 --out hist.csv
//   rsg oracle --model s --n 4 --m 0
//   rsg stirling --m 8
//   rsg verify [--only euler] [--out verdicts.json]
//
// Exit codes: 0 success, 1 validation error, 2 runtime error,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rsg/io.hpp"
#include "rsg/models.hpp"
#include "rsg/oracle.hpp"
#include "rsg/runner.hpp"
#include "rsg/verify.hpp"

namespace {

struct CliArgs {
  std::string model = "sprime";
  std::int64_t n = 2;
  std::int64_t m = 0;
  std::int64_t t = 3;
  std::int64_t samples = 1000;
  std::uint64_t seed = rsg::kDefaultSeed;
  int threads = 0;
  std::string out;
  std::string format = "jsonl";
  std::string only;
  std::int64_t stirling_m = 8;
};

rsg::ModelParams make_params(const CliArgs& args) {
  const auto kind = rsg::parse_model(args.model);
  if (!kind) throw std::invalid_argument("unknown model '" + args.model + "'");
  rsg::ModelParams p{*kind, args.n, args.m, args.t};
  p.validate();
  return p;
}

// Writes to the path when given, else to stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + out_path);
}

int cmd_sample(const CliArgs& args) {
  const rsg::ModelParams params = make_params(args);
  if (args.samples < 1) throw std::invalid_argument("--samples must be positive");
  if (args.format != "jsonl" && args.format != "csv")
    throw std::invalid_argument("--format must be jsonl or csv");
  emit(args.out, rsg::sample_records(params, args.samples, args.seed, args.threads,
                                     args.format == "csv"));
  return 0;
}

int cmd_dist(const CliArgs& args) {
  const rsg::ModelParams params = make_params(args);
  const rsg::DistOutput out = rsg::run_dist(params, args.samples, args.seed, args.threads);
  if (args.out.empty()) {
    std::cout << out.csv << out.moments_json << "\n";
  } else {
    emit(args.out, out.csv);
    std::cout << out.moments_json << "\n";
  }
  return 0;
}

int cmd_oracle(const CliArgs& args) {
  const rsg::ModelParams params = make_params(args);
  emit(args.out, rsg::exact_distribution_csv(rsg::exact_joint(params)));
  return 0;
}

int cmd_stirling(const CliArgs& args) {
  const rsg::StirlingRow row = rsg::stirling_first(args.stirling_m);
  std::string csv = "b,stirling_first\n";
  for (std::size_t b = 0; b < row.values.size(); ++b)
    csv += std::to_string(b + 1) + "," + row.values[b].str() + "\n";
  emit(args.out, csv);
  return 0;
}

int cmd_verify(const CliArgs& args) {
  rsg::verify::Options opts;
  opts.threads = args.threads;
  std::vector<std::string> ids;
  if (args.only.empty()) {
    ids = rsg::verify::criterion_ids();
  } else {
    ids.push_back(args.only);
  }
  std::vector<rsg::verify::CriterionResult> results;
  bool all_pass = true;
  for (const std::string& id : ids) {
    rsg::verify::CriterionResult r = rsg::verify::run_criterion(id, opts);
    std::cout << rsg::verify::format_result(r);
    std::cout.flush();
    all_pass = all_pass && r.pass();
    results.push_back(std::move(r));
  }
  if (!args.out.empty()) emit(args.out, rsg::verify::verdicts_json(results) + "\n");
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random surface gluing simulator and verification harness"};
  app.require_subcommand(1);

  CliArgs args;
  auto add_model_flags = [&](CLI::App* cmd) {
    cmd->add_option("--model", args.model, "t, tprime, s or sprime")->capture_default_str();
    cmd->add_option("--n", args.n, "polygon count (t/tprime) or ordinary edges (s/sprime)")
        ->capture_default_str();
    cmd->add_option("--m", args.m, "boundary edges")->capture_default_str();
    cmd->add_option("--t", args.t, "polygon sides for t/tprime")->capture_default_str();
  };

  CLI::App* sample = app.add_subcommand("sample", "sample surfaces, one record per line");
  add_model_flags(sample);
  sample->add_option("--samples", args.samples)->capture_default_str();
  sample->add_option("--seed", args.seed)->capture_default_str();
  sample->add_option("--threads", args.threads, "0 = all cores")->capture_default_str();
  sample->add_option("--out", args.out, "output path (default stdout)");
  sample->add_option("--format", args.format, "jsonl or csv")->capture_default_str();

  CLI::App* dist = app.add_subcommand("dist", "histograms and moment report for an experiment");
  add_model_flags(dist);
  dist->add_option("--samples", args.samples)->capture_default_str();
  dist->add_option("--seed", args.seed)->capture_default_str();
  dist->add_option("--threads", args.threads)->capture_default_str();
  dist->add_option("--out", args.out, "histogram CSV path (moment JSON goes to stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "exact distribution by exhaustive enumeration");
  add_model_flags(oracle);
  oracle->add_option("--out", args.out);

  CLI::App* stirling = app.add_subcommand("stirling", "unsigned Stirling numbers of the first kind");
  stirling->add_option("--m", args.stirling_m, "row index, 1..64")->capture_default_str();
  stirling->add_option("--out", args.out);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", args.only, "run a single criterion id");
  verify->add_option("--threads", args.threads)->capture_default_str();
  verify->add_option("--out", args.out, "write JSON verdicts here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed()) return cmd_sample(args);
    if (dist->parsed()) return cmd_dist(args);
    if (oracle->parsed()) return cmd_oracle(args);
    if (stirling->parsed()) return cmd_stirling(args);
    if (verify->parsed()) return cmd_verify(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
