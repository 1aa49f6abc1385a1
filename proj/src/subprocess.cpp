#include "graphforge/subprocess.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstring>

namespace graphforge {

RunResult run_command(const std::string& command, const std::string& input, int timeout_ms) {
  RunResult res;
  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (pipe(in_pipe) || pipe(out_pipe) || pipe(err_pipe)) {
    res.spawn_failed = true;
    return res;
  }
  pid_t pid = fork();
  if (pid < 0) {
    res.spawn_failed = true;
    return res;
  }
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);

  // feed stdin and drain stdout/stderr without deadlocking
  fcntl(in_pipe[1], F_SETFL, O_NONBLOCK);
  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);
  fcntl(err_pipe[0], F_SETFL, O_NONBLOCK);

  std::size_t written = 0;
  bool stdin_open = true;
  bool out_open = true, err_open = true;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);

  while (out_open || err_open || stdin_open) {
    if (std::chrono::steady_clock::now() > deadline) {
      kill(pid, SIGKILL);
      res.timed_out = true;
      break;
    }
    struct pollfd fds[3];
    int nfds = 0;
    int idx_in = -1, idx_out = -1, idx_err = -1;
    if (stdin_open) {
      idx_in = nfds;
      fds[nfds++] = {in_pipe[1], POLLOUT, 0};
    }
    if (out_open) {
      idx_out = nfds;
      fds[nfds++] = {out_pipe[0], POLLIN, 0};
    }
    if (err_open) {
      idx_err = nfds;
      fds[nfds++] = {err_pipe[0], POLLIN, 0};
    }
    int rc = poll(fds, static_cast<nfds_t>(nfds), 50);
    if (rc < 0) break;
    char buf[4096];
    if (idx_in >= 0 && (fds[idx_in].revents & (POLLOUT | POLLERR | POLLHUP))) {
      if (written >= input.size() || (fds[idx_in].revents & (POLLERR | POLLHUP))) {
        close(in_pipe[1]);
        stdin_open = false;
      } else {
        ssize_t w = write(in_pipe[1], input.data() + written, input.size() - written);
        if (w > 0) {
          written += static_cast<std::size_t>(w);
          if (written >= input.size()) {
            close(in_pipe[1]);
            stdin_open = false;
          }
        } else if (w < 0 && errno != EAGAIN) {
          close(in_pipe[1]);
          stdin_open = false;
        }
      }
    }
    if (idx_out >= 0 && (fds[idx_out].revents & (POLLIN | POLLHUP))) {
      ssize_t r = read(out_pipe[0], buf, sizeof(buf));
      if (r > 0) {
        res.out.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || (r < 0 && errno != EAGAIN)) {
        close(out_pipe[0]);
        out_open = false;
      }
    }
    if (idx_err >= 0 && (fds[idx_err].revents & (POLLIN | POLLHUP))) {
      ssize_t r = read(err_pipe[0], buf, sizeof(buf));
      if (r > 0) {
        res.err.append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || (r < 0 && errno != EAGAIN)) {
        close(err_pipe[0]);
        err_open = false;
      }
    }
  }
  if (stdin_open) close(in_pipe[1]);
  if (out_open) close(out_pipe[0]);
  if (err_open) close(err_pipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  if (res.timed_out) {
    res.exit_code = -1;
  } else if (WIFEXITED(status)) {
    res.exit_code = WEXITSTATUS(status);
  } else {
    res.exit_code = -WTERMSIG(status);
  }
  return res;
}

}  // namespace graphforge
