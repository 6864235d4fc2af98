// Copyright 2026 The anion-forge Authors
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

#include "anionforge/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <csignal>
#include <cstring>
#include <thread>

#include "anionforge/error.hpp"

namespace anionforge {

std::vector<std::string> run_line_filter(const std::string& command,
                                         const std::vector<std::string>& input_lines,
                                         long expect_lines) {
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw DataError("pipe() failed: " + std::string(std::strerror(errno)));
  }

  const pid_t pid = fork();
  if (pid < 0) throw DataError("fork() failed: " + std::string(std::strerror(errno)));
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);

  // Writer runs on its own thread so a chatty child cannot deadlock the pipe.
  std::thread writer([fd = to_child[1], &input_lines] {
    signal(SIGPIPE, SIG_IGN);
    for (const std::string& line : input_lines) {
      std::string payload = line;
      payload.push_back('\n');
      std::size_t off = 0;
      while (off < payload.size()) {
        const ssize_t n = write(fd, payload.data() + off, payload.size() - off);
        if (n <= 0) {
          close(fd);
          return;
        }
        off += static_cast<std::size_t>(n);
      }
    }
    close(fd);
  });

  std::string output;
  char buffer[4096];
  while (true) {
    const ssize_t n = read(from_child[0], buffer, sizeof(buffer));
    if (n <= 0) break;
    output.append(buffer, static_cast<std::size_t>(n));
  }
  close(from_child[0]);
  writer.join();

  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw DataError("external command failed (" + command + ")");
  }

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < output.size()) {
    std::size_t end = output.find('\n', start);
    if (end == std::string::npos) end = output.size();
    std::string line = output.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  if (expect_lines >= 0 && static_cast<long>(lines.size()) != expect_lines) {
    throw DataError("external command produced " + std::to_string(lines.size()) +
                    " lines, expected " + std::to_string(expect_lines));
  }
  return lines;
}

}  // namespace anionforge
