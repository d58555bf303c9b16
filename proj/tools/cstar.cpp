#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cstar/commands.hpp"

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string alpha;
  std::string tol = "1/16777216";
  unsigned max_precision = 1u << 14;
  std::string format = "json";
  unsigned jobs = 1;
  std::string output;
};

cstar::IntVector parse_alpha(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<cstar::Integer> entries;
  std::string token;
  while (in >> token) entries.emplace_back(token);
  cstar::IntVector alpha(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) alpha(static_cast<Eigen::Index>(i)) = entries[i];
  return alpha;
}

int emit(const cstar::CommandResult& result, const std::string& text, const Options& opts) {
  std::ofstream file;
  if (!opts.output.empty()) file.open(opts.output);
  std::ostream& out = opts.output.empty() ? std::cout : file;
  if (opts.format == "text" && !text.empty()) {
    out << text;
  } else {
    out << result.document.dump(2) << "\n";
  }
  if (result.status == cstar::ExitStatus::Invalid && opts.format == "text")
    std::cerr << result.document.value("error", "") << ": " << result.document.value("message", "") << "\n";
  return static_cast<int>(result.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of log del Pezzo C*-surfaces"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub, bool many) {
    if (many) {
      sub->add_option("inputs", opts.inputs, "Surface documents or directories")->required();
    } else {
      sub->add_option("input", opts.inputs, "Surface document")->required()->expected(1);
    }
    sub->add_option("-o,--output", opts.output, "Write output to a file");
    sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--alpha", opts.alpha, "Override alpha, e.g. 1,1,0,0,1");
    sub->add_option("--tol", opts.tol, "Bracket tolerance (rational)");
    sub->add_option("--max-precision", opts.max_precision, "Precision budget in bits");
  };

  auto* validate = app.add_subcommand("validate", "Check a surface document");
  add_common(validate, false);
  auto* analyze = app.add_subcommand("analyze", "Run the KE, KRS and SE tests");
  add_common(analyze, false);
  add_analysis(analyze);
  auto* degenerations = app.add_subcommand("degenerations", "Export the per-kappa degeneration atlas");
  add_common(degenerations, false);
  degenerations->add_option("--alpha", opts.alpha, "Override alpha, e.g. 1,1,0,0,1");
  auto* batch = app.add_subcommand("batch", "Analyze many surfaces and tabulate");
  add_common(batch, true);
  add_analysis(batch);
  batch->add_option("--jobs", opts.jobs, "Concurrent workers")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  cstar::RunConfig config;
  config.jobs = opts.jobs;
  config.options.max_precision = opts.max_precision;
  try {
    if (!opts.alpha.empty()) config.alpha = parse_alpha(opts.alpha);
    config.options.tol = cstar::parse_rational(opts.tol);
    if (config.options.tol <= 0) throw cstar::Error(cstar::ErrorCode::MalformedInput, "--tol must be positive");

    if (batch->parsed()) {
      std::vector<std::filesystem::path> paths(opts.inputs.begin(), opts.inputs.end());
      const auto result = cstar::batch_command(cstar::collect_inputs(paths), config);
      return emit(result, cstar::batch_to_text(result.document), opts);
    }

    const cstar::Json doc = cstar::read_json_file(opts.inputs.front());
    if (validate->parsed()) return emit(cstar::validate_command(doc), "", opts);
    if (degenerations->parsed()) return emit(cstar::degenerations_command(doc, config), "", opts);
    const auto result = cstar::analyze_command(doc, config);
    return emit(result, result.report ? cstar::report_to_text(*result.report) : "", opts);
  } catch (const cstar::Error& e) {
    std::cout << cstar::error_to_json(e).dump(2) << "\n";
    return static_cast<int>(cstar::ExitStatus::Invalid);
  } catch (const std::exception& e) {
    std::cout << cstar::error_to_json(cstar::Error(cstar::ErrorCode::MalformedInput, e.what())).dump(2) << "\n";
    return static_cast<int>(cstar::ExitStatus::Invalid);
  }
}
