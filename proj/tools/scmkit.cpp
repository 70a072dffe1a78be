// scmkit run FILE --op OP --target NAME [--index I] [--format text|json]
//              [--strict-scm] [--timeout SECONDS]
//
// Exit codes: 0 verdict printed, 2 input error, 3 timeout.

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "scmkit/scmkit.hpp"

namespace {

// Kills the process when the deadline passes; no partial output is written.
class Watchdog {
 public:
  Watchdog(double seconds, std::string message) {
    if (seconds <= 0) return;
    thread_ = std::thread([this, seconds, message = std::move(message)] {
      std::unique_lock lock(m_);
      if (!cv_.wait_for(lock, std::chrono::duration<double>(seconds), [this] { return done_; })) {
        std::fputs(message.c_str(), stdout);
        std::fflush(stdout);
        std::fputs("error: timeout\n", stderr);
        std::_Exit(3);
      }
    });
  }
  ~Watchdog() {
    {
      std::lock_guard lock(m_);
      done_ = true;
    }
    cv_.notify_all();
    if (thread_.joinable()) thread_.join();
  }

 private:
  std::mutex m_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scmkit: sequentially Cohen-Macaulay checks for graded modules and ideals"};
  app.require_subcommand(1);
  auto* run = app.add_subcommand("run", "run one operation on an object declared in a script");

  std::string file, op, target, format = "text";
  std::optional<int> index;
  bool strict = false;
  double timeout = 0;
  run->add_option("file", file, "input script")->required();
  run->add_option("--op", op, "operation")->required()->check(CLI::IsMember(scmkit::known_ops()));
  run->add_option("--target", target, "name of the ideal or module")->required();
  run->add_option("--index", index, "index i for deficiency-module, filter-ideal, unmixed-layer");
  run->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--strict-scm", strict, "module SCM check also inspects i = dim M");
  run->add_option("--timeout", timeout, "wall-clock limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ifstream in(file);
  if (!in) {
    std::cout << scmkit::emit_error(op, target, "cannot read " + file, format);
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Watchdog dog(timeout, scmkit::emit_error(op, target, "timeout after " + std::to_string(timeout) + " s", format));
  try {
    scmkit::Session session = scmkit::parse_script(buf.str());
    scmkit::CommandOptions opt;
    opt.index = index;
    opt.strict_scm = strict;
    opt.threads = scmkit::configured_threads();
    auto verdict = scmkit::run_command(session, op, target, opt);
    std::cout << scmkit::emit(verdict, format);
    return 0;
  } catch (const scmkit::ParseError& e) {
    std::cout << scmkit::emit_error(op, target, file + ": " + e.what(), format);
  } catch (const scmkit::InputError& e) {
    std::cout << scmkit::emit_error(op, target, e.what(), format);
  } catch (const std::exception& e) {
    std::cout << scmkit::emit_error(op, target, e.what(), format);
  }
  return 2;
}
