// Copyright 2026 The Ducut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ducut/oracle.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <condition_variable>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <thread>

#include "ducut/errors.hpp"

extern char** environ;

namespace ducut {

namespace fs = std::filesystem;

const char* oracle_status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::Pass: return "pass";
    case OracleStatus::Fail: return "fail";
    case OracleStatus::Timeout: return "timeout";
    case OracleStatus::ScriptFailure: return "script-error";
  }
  return "?";
}

std::string OracleRunner::sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw InternalError("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

OracleRunner::OracleRunner(OracleConfig config) : config_(std::move(config)) {
  if (config_.temp_root.empty()) {
    config_.temp_root = fs::temp_directory_path().string();
  }
}

OracleStats OracleRunner::stats() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return stats_;
}

namespace {

struct SpawnResult {
  OracleStatus status;
  std::optional<int> exit_code;
  std::int64_t wall_ms;
  std::string output;
};

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// fork/exec with a process group, merged stdout+stderr capture, and a
// wall-clock deadline enforced with SIGKILL on the whole group.
SpawnResult spawn_with_timeout(const std::string& script,
                               const std::string& candidate_path,
                               const std::string& workdir,
                               std::int64_t timeout_ms) {
  int out_pipe[2];
  int err_pipe[2];  // CLOEXEC status pipe: reports exec failure errno
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    throw ScriptError("pipe() failed: " + std::string(std::strerror(errno)));
  }
  fcntl(err_pipe[1], F_SETFD, FD_CLOEXEC);

  pid_t pid = fork();
  if (pid < 0) {
    throw ScriptError("fork() failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    setpgid(0, 0);
    if (chdir(workdir.c_str()) != 0) _exit(127);
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(out_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    setenv("DUCUT_CANDIDATE", candidate_path.c_str(), 1);
    char* const argv[] = {const_cast<char*>(script.c_str()),
                          const_cast<char*>(candidate_path.c_str()), nullptr};
    execv(script.c_str(), argv);
    int saved = errno;
    ssize_t ignored = write(err_pipe[1], &saved, sizeof(saved));
    (void)ignored;
    _exit(127);
  }

  close(out_pipe[1]);
  close(err_pipe[1]);

  // If exec failed the child reports errno before any output can appear.
  int exec_errno = 0;
  ssize_t n = read(err_pipe[0], &exec_errno, sizeof(exec_errno));
  close(err_pipe[0]);
  if (n == static_cast<ssize_t>(sizeof(exec_errno))) {
    close(out_pipe[0]);
    waitpid(pid, nullptr, 0);
    throw ScriptError("cannot execute test script '" + script +
                      "': " + std::strerror(exec_errno));
  }

  SpawnResult result;
  std::int64_t start = now_ms();
  bool timed_out = false;
  bool output_open = true;
  char buf[4096];

  int status = 0;
  pid_t waited = 0;
  while (true) {
    std::int64_t elapsed = now_ms() - start;
    if (elapsed >= timeout_ms) {
      timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      waited = waitpid(pid, &status, 0);
      break;
    }
    if (output_open) {
      struct pollfd pfd = {out_pipe[0], POLLIN, 0};
      int remaining = static_cast<int>(timeout_ms - elapsed);
      int ready = poll(&pfd, 1, std::min(remaining, 50));
      if (ready > 0) {
        ssize_t got = read(out_pipe[0], buf, sizeof(buf));
        if (got > 0) {
          if (result.output.size() < (1u << 20)) {
            result.output.append(buf, static_cast<std::size_t>(got));
          }
          continue;
        }
        output_open = false;
      }
    } else {
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    waited = waitpid(pid, &status, WNOHANG);
    if (waited == pid) break;
  }
  // Drain whatever remains after exit or kill.
  while (output_open) {
    ssize_t got = read(out_pipe[0], buf, sizeof(buf));
    if (got <= 0) break;
    if (result.output.size() < (1u << 20)) {
      result.output.append(buf, static_cast<std::size_t>(got));
    }
  }
  close(out_pipe[0]);
  if (waited != pid) waitpid(pid, &status, 0);

  result.wall_ms = now_ms() - start;
  if (timed_out) {
    result.status = OracleStatus::Timeout;
    result.exit_code = std::nullopt;
    if (result.wall_ms < timeout_ms) result.wall_ms = timeout_ms;
  } else if (WIFEXITED(status)) {
    int code = WEXITSTATUS(status);
    result.exit_code = code;
    result.status = code == 0 ? OracleStatus::Pass : OracleStatus::Fail;
  } else {
    result.exit_code = 128 + (WIFSIGNALED(status) ? WTERMSIG(status) : 0);
    result.status = OracleStatus::Fail;
  }
  return result;
}

}  // namespace

OracleVerdict OracleRunner::run_script(const std::string& candidate_text) {
  struct stat st{};
  if (stat(config_.script_path.c_str(), &st) != 0) {
    throw ScriptError("test script '" + config_.script_path + "' not found");
  }
  if (access(config_.script_path.c_str(), X_OK) != 0) {
    throw ScriptError("test script '" + config_.script_path +
                      "' is not executable");
  }

  std::int64_t serial;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    serial = ++workspace_counter_;
  }
  fs::path workdir = fs::path(config_.temp_root) /
                     ("ducut-" + std::to_string(getpid()) + "-" +
                      std::to_string(serial));
  std::error_code ec;
  fs::create_directories(workdir, ec);
  if (ec) throw ScriptError("cannot create workspace " + workdir.string());

  fs::path candidate = workdir / "candidate.c";
  {
    std::ofstream out(candidate);
    out << candidate_text;
    if (!out) {
      fs::remove_all(workdir, ec);
      throw ScriptError("cannot write candidate file " + candidate.string());
    }
  }

  SpawnResult spawned;
  try {
    spawned = spawn_with_timeout(fs::absolute(config_.script_path).string(),
                                 candidate.string(), workdir.string(),
                                 config_.timeout_ms);
  } catch (...) {
    fs::remove_all(workdir, ec);
    throw;
  }
  fs::remove_all(workdir, ec);

  if (!config_.log_path.empty()) {
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream log(config_.log_path, std::ios::app);
    log << "=== " << oracle_status_name(spawned.status) << " exit="
        << (spawned.exit_code ? std::to_string(*spawned.exit_code) : "-")
        << " wall_ms=" << spawned.wall_ms << "\n"
        << spawned.output;
    if (!spawned.output.empty() && spawned.output.back() != '\n') log << "\n";
  }

  OracleVerdict v;
  v.status = spawned.status;
  v.exit_code = spawned.exit_code;
  v.wall_ms = spawned.wall_ms;
  v.cached = false;
  return v;
}

OracleVerdict OracleRunner::evaluate(const std::string& candidate_text) {
  std::string digest = sha256_hex(candidate_text);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto hit = cache_.find(digest);
    if (hit != cache_.end()) {
      ++stats_.cache_hits;
      OracleVerdict v = hit->second;
      v.cached = true;
      return v;
    }
    stats_.budget = config_.budget;
    if (config_.budget && stats_.invocations >= *config_.budget) {
      throw BudgetExhausted("oracle budget of " +
                            std::to_string(*config_.budget) +
                            " invocations exhausted");
    }
    ++stats_.invocations;
  }

  OracleVerdict v;
  try {
    v = run_script(candidate_text);
  } catch (...) {
    std::lock_guard<std::mutex> lock(mutex_);
    --stats_.invocations;  // the spawn never happened
    throw;
  }

  std::lock_guard<std::mutex> lock(mutex_);
  ++stats_.by_status[v.status];
  cache_[digest] = v;
  return v;
}

std::vector<OracleVerdict> OracleRunner::evaluate_batch(
    const std::vector<std::string>& candidates, int jobs) {
  if (jobs < 1) {
    throw InternalError("evaluate_batch requires jobs >= 1");
  }
  std::vector<OracleVerdict> verdicts(candidates.size());
  if (candidates.empty()) return verdicts;

  // First occurrence of each digest does the work; duplicates replay it.
  std::map<std::string, std::size_t> first_of;
  std::vector<std::size_t> unique_indices;
  std::vector<std::ptrdiff_t> duplicate_of(candidates.size(), -1);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::string digest = sha256_hex(candidates[i]);
    auto [it, fresh] = first_of.emplace(digest, i);
    if (fresh) {
      unique_indices.push_back(i);
    } else {
      duplicate_of[i] = static_cast<std::ptrdiff_t>(it->second);
    }
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= unique_indices.size()) return;
      {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (failure) return;  // abort remaining work
      }
      std::size_t index = unique_indices[slot];
      try {
        verdicts[index] = evaluate(candidates[index]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  int n_threads = std::min<int>(jobs, static_cast<int>(unique_indices.size()));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (duplicate_of[i] >= 0) verdicts[i] = evaluate(candidates[i]);
  }
  return verdicts;
}

}  // namespace ducut
