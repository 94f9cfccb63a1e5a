#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "holobrace/holobrace.h"

namespace {

enum Exit { kPass = 0, kFailure = 1, kMismatch = 2, kResource = 3 };

int exit_for(hb_status status) {
  switch (status) {
    case HB_OK:
      return kPass;
    case HB_TOO_LARGE:
      return kResource;
    case HB_MISMATCH:
      return kMismatch;
    default:
      return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular subgroups of holomorphs of groups of order 2p^2, skew braces and Hopf-Galois counts"};
  app.set_version_flag("--version", hb_version());

  std::string command;
  unsigned p = 3;
  std::string format = "tsv";
  bool force = false;
  std::string out_path;
  std::string additive;

  app.add_option("command", command, "groups | hgs-table | transitive-table | braces | brace-summary | cyclic-type | verify")
      ->required()
      ->check(CLI::IsMember({"groups", "hgs-table", "transitive-table", "braces", "brace-summary", "cyclic-type", "verify"}));
  app.add_option("--p", p, "odd prime")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.add_flag("--force", force, "allow primes above 5");
  app.add_option("--out", out_path, "write to FILE instead of standard output");
  app.add_option("--additive", additive, "restrict braces to one additive group");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kFailure;
  }

  hb_session* raw = nullptr;
  if (hb_status st = hb_session_create(p, force ? 1 : 0, &raw); st != HB_OK) {
    std::cerr << "holobrace: " << hb_last_error() << '\n';
    return exit_for(st);
  }
  std::unique_ptr<hb_session, decltype(&hb_session_destroy)> session(raw, hb_session_destroy);

  char* text = nullptr;
  int match = 0;
  if (hb_status st = hb_render(session.get(), command.c_str(), format.c_str(),
                               additive.empty() ? nullptr : additive.c_str(), &text, &match);
      st != HB_OK) {
    std::cerr << "holobrace: " << hb_last_error() << '\n';
    return exit_for(st);
  }
  std::unique_ptr<char, decltype(&hb_free_string)> owned(text, hb_free_string);

  if (out_path.empty()) {
    std::fputs(text, stdout);
    std::fflush(stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "holobrace: cannot write " << out_path << '\n';
      return kFailure;
    }
  }

  if (match) return kPass;
  if (command == "verify") {
    std::cerr << "holobrace: verification failed\n";
    return kFailure;
  }
  std::cerr << "holobrace: table differs from the closed form\n";
  return kMismatch;
}
