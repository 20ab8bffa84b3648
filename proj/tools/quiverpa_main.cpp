#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quiverpa/commands.hpp"

namespace {

int run(const std::string& verb, const std::string& input_path,
        const std::string& output_path, int truncate,
        const std::string& format) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "error: cannot read '" << input_path << "'\n";
      return 2;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  qpa::CommandOptions opts;
  opts.truncate = truncate;
  opts.structured = format == "structured";
  qpa::CommandResult result = qpa::run_command(verb, text, opts);

  if (output_path.empty() || output_path == "-") {
    std::cout << result.output;
  } else {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return 2;
    }
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations with partial group actions on quivers and their "
      "path algebras"};
  app.require_subcommand(1);

  std::string input, output, format = "text";
  int truncate = -1;
  for (const char* verb : {"validate", "globalize", "restrict", "algebra-check",
                           "export-dot"}) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("--input", input, "instance file (default: stdin)");
    sub->add_option("--output", output,
                    "write the result here (default: stdout)");
    sub->add_option("--truncate", truncate,
                    "length window for path-algebra checks (default 4, or the "
                    "document's 'truncate' line)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  }

  CLI11_PARSE(app, argc, argv);
  return run(app.get_subcommands().front()->get_name(), input, output, truncate,
             format);
}
