#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <fstream>

#include "lramsey/errors.hpp"
#include "lramsey/solver.hpp"

namespace lramsey {

void ExternalSolverConfig::validate() const {
  if (command.find_first_not_of(" \t") == std::string::npos) throw ConfigError("solver command is empty");
  if (!(timeout_seconds > 0)) throw ConfigError("solver timeout must be positive");
}

SolverOutput parse_solver_output(std::string_view text) {
  SolverOutput out;
  std::size_t pos = 0;
  bool model_closed = false;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.size() < 2 || line[1] != ' ') {
      if (line == "s" || line == "v") throw ParseError(ParseErrorKind::kSolverOutput, "empty solver line");
      continue;
    }
    const std::string_view body = line.substr(2);
    switch (line[0]) {
      case 's': {
        std::string_view word = body.substr(0, body.find_first_of(" \t"));
        if (word == "SATISFIABLE") {
          out.status = SolveStatus::kSat;
        } else if (word == "UNSATISFIABLE") {
          out.status = SolveStatus::kUnsat;
        } else if (word == "UNKNOWN" || word == "INDETERMINATE") {
          out.status = SolveStatus::kUnknown;
        } else {
          throw ParseError(ParseErrorKind::kSolverOutput, "unknown status line: " + std::string(line));
        }
        break;
      }
      case 'v': {
        std::size_t i = 0;
        while (i < body.size()) {
          while (i < body.size() && (body[i] == ' ' || body[i] == '\t')) ++i;
          if (i >= body.size()) break;
          std::size_t j = body.find_first_of(" \t", i);
          if (j == std::string_view::npos) j = body.size();
          int lit = 0;
          auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + j, lit);
          if (ec != std::errc() || ptr != body.data() + j) {
            throw ParseError(ParseErrorKind::kSolverOutput, "bad value token in: " + std::string(line));
          }
          if (lit == 0) {
            model_closed = true;
          } else {
            out.model.push_back(lit);
          }
          i = j;
        }
        break;
      }
      case 'c': {
        // "c conflicts : 1234" and "c conflicts:   1234   (...)".
        const auto at = body.find("conflicts");
        if (at == std::string_view::npos || out.conflicts) break;
        std::size_t i = at + 9;
        while (i < body.size() && (body[i] == ' ' || body[i] == ':' || body[i] == '\t')) ++i;
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), value);
        if (ec == std::errc() && ptr != body.data() + i) out.conflicts = value;
        break;
      }
      default:
        break;
    }
  }
  if (out.status == SolveStatus::kSat && !model_closed) {
    throw ParseError(ParseErrorKind::kSolverOutput, "model is not terminated by 0");
  }
  return out;
}

namespace {

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) {
    if (ch == '\'') {
      q += "'\\''";
    } else {
      q += ch;
    }
  }
  return q + "'";
}

std::string command_line(const std::string& templ, const std::string& path) {
  const std::string quoted = shell_quote(path);
  const auto at = templ.find("{cnf}");
  if (at == std::string::npos) return templ + " " + quoted;
  std::string cmd = templ;
  cmd.replace(at, 5, quoted);
  return cmd;
}

ProcessResult run_shell(const std::string& cmd, double timeout_seconds) {
  int out_pipe[2];
  int err_pipe[2];
  if (pipe(out_pipe) != 0) throw std::runtime_error("pipe failed");
  if (pipe(err_pipe) != 0) {
    close(out_pipe[0]);
    close(out_pipe[1]);
    throw std::runtime_error("pipe failed");
  }
  const pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork failed");
  if (pid == 0) {
    setpgid(0, 0);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  setpgid(pid, pid);
  close(out_pipe[1]);
  close(err_pipe[1]);

  ProcessResult result;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  pollfd fds[2] = {{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}};
  int open_fds = 2;
  char buf[65536];
  while (open_fds > 0) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      break;
    }
    const int ready = poll(fds, 2, static_cast<int>(std::min<std::int64_t>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    for (int i = 0; i < 2; ++i) {
      if (fds[i].fd < 0 || !(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      const ssize_t got = read(fds[i].fd, buf, sizeof buf);
      if (got > 0) {
        (i == 0 ? result.out : result.err).append(buf, static_cast<std::size_t>(got));
      } else if (got == 0 || errno != EINTR) {
        close(fds[i].fd);
        fds[i].fd = -1;
        --open_fds;
      }
    }
  }
  if (result.timed_out) kill(-pid, SIGKILL);
  for (auto& f : fds) {
    if (f.fd >= 0) close(f.fd);
  }
  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!result.timed_out && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

class TempFile {
 public:
  TempFile(const std::filesystem::path& dir, const std::string& content) {
    static std::atomic<int> counter{0};
    path_ = dir / ("lramsey-" + std::to_string(getpid()) + "-" + std::to_string(counter++) + ".cnf");
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path_.string());
    out << content;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

SolveOutcome unknown(std::string why) {
  SolveOutcome out;
  out.status = SolveStatus::kUnknown;
  out.diagnostic = std::move(why);
  return out;
}

}  // namespace

SolveOutcome solve_external(const ExternalSolverConfig& cfg, const CnfInstance& inst, const VarMap& map) {
  cfg.validate();
  if (inst.num_vars != map.num_vars()) throw ConfigError("instance and variable map disagree on the variable count");

  ProcessResult proc;
  try {
    const TempFile cnf(cfg.workdir, write_dimacs(inst));
    proc = run_shell(command_line(cfg.command, cnf.path().string()), cfg.timeout_seconds);
  } catch (const std::exception& e) {
    return unknown(std::string("could not run solver: ") + e.what());
  }
  if (proc.timed_out) return unknown("solver timed out after " + std::to_string(cfg.timeout_seconds) + " s");

  SolverOutput parsed;
  try {
    parsed = parse_solver_output(proc.out);
  } catch (const ParseError& e) {
    return unknown(std::string("unreadable solver output: ") + e.what());
  }

  std::optional<SolveStatus> status = parsed.status;
  if (proc.exit_code == 10 || proc.exit_code == 20) {
    const SolveStatus by_code = proc.exit_code == 10 ? SolveStatus::kSat : SolveStatus::kUnsat;
    if (status && *status != by_code) {
      return unknown("exit code " + std::to_string(proc.exit_code) + " contradicts the status line");
    }
    status = by_code;
  }
  if (!status) {
    return unknown("solver exited with code " + std::to_string(proc.exit_code) + " and printed no status line");
  }

  SolveOutcome out;
  out.stats.conflicts = parsed.conflicts;
  out.status = *status;
  if (*status == SolveStatus::kUnknown) out.diagnostic = "solver answered UNKNOWN";
  if (*status != SolveStatus::kSat) return out;

  GridColoring grid;
  try {
    grid = decode_model(map, parsed.model);
  } catch (const ModelError& e) {
    throw IntegrityError(std::string("solver model does not decode to a grid: ") + e.what());
  }
  if (auto bad = find_mono_ls(grid); !bad.empty()) {
    throw IntegrityError("solver model has a monochromatic L at (" + std::to_string(bad[0].r) + ", " +
                         std::to_string(bad[0].c) + ", " + std::to_string(bad[0].t) + ")");
  }
  out.witness = std::move(grid);
  return out;
}

}  // namespace lramsey
