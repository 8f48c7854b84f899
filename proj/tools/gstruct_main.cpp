// gstruct: batch front end over JSON files or stdin.
//
//   gstruct <command> [--in file|-] [--out file|-] [--tolerance f] [--k-max k] [--seed s]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gstruct/cli.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using gstruct::cli::json;

  CLI::App app{"Exact computations with jet groups, prolongations and G-structures"};
  std::string command, in_path = "-", out_path = "-";
  gstruct::cli::CommandOptions opts;
  std::string names;
  for (const auto& n : gstruct::cli::command_names()) names += (names.empty() ? "" : " | ") + n;

  app.add_option("command", command, "One of: " + names)->required();
  app.add_option("--in", in_path, "Input JSON file, '-' for stdin");
  app.add_option("--out", out_path, "Output JSON file, '-' for stdout");
  app.add_option("--tolerance", opts.tolerance, "Floating-point tolerance for root-extraction checks");
  app.add_option("--k-max", opts.k_max, "Largest prolongation order tried by type-order");
  app.add_option("--seed", opts.seed, "Seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  gstruct::cli::CommandResult result;
  try {
    json input = json::parse(read_all(in_path));
    result = gstruct::cli::run(command, input, opts);
  } catch (const json::parse_error& e) {
    result.status = gstruct::cli::Status::Error;
    result.code = "schema";
    result.data = nullptr;
    result.diagnostics.push_back(std::string("invalid JSON: ") + e.what());
  } catch (const std::exception& e) {
    result.status = gstruct::cli::Status::Error;
    result.code = "schema";
    result.data = nullptr;
    result.diagnostics.push_back(e.what());
  }

  try {
    write_all(out_path, result.to_json().dump(2));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  for (const auto& d : result.diagnostics) std::cerr << "gstruct: " << d << '\n';
  return result.exit_code();
}
