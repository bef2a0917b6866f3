#include "stegocanary/transport.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <system_error>

#include "stegocanary/symbolic.hpp"
#include "stegocanary/unicode_tables.hpp"
#include "stegocanary/utf8.hpp"

namespace stegocanary::transport {

namespace {

constexpr std::array<const char*, 13> kNames = {
    "T00", "T01", "T02", "T03", "T04", "T05", "T06",
    "T07", "T08", "T09", "T10", "T11", "T12"};

std::string t01_line_endings(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  for (; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

bool blank_line(const std::vector<char32_t>& line) {
  for (char32_t cp : line)
    if (cp != U' ' && cp != U'\t') return false;
  return true;
}

std::string t02_reflow(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::vector<std::vector<char32_t>> lines(1);
  for (char32_t cp : cps) {
    if (cp == U'\n')
      lines.emplace_back();
    else
      lines.back().push_back(cp);
  }
  // Paragraph = maximal run of non-blank lines. Intra-paragraph newlines
  // become spaces, then each paragraph greedily re-wraps at 80 columns.
  std::vector<std::vector<char32_t>> paragraphs;
  for (const auto& line : lines) {
    if (blank_line(line)) {
      if (!paragraphs.empty() && !paragraphs.back().empty())
        paragraphs.emplace_back();
      continue;
    }
    if (paragraphs.empty()) paragraphs.emplace_back();
    if (!paragraphs.back().empty()) paragraphs.back().push_back(U' ');
    paragraphs.back().insert(paragraphs.back().end(), line.begin(), line.end());
  }
  if (!paragraphs.empty() && paragraphs.back().empty()) paragraphs.pop_back();

  constexpr std::size_t kWidth = 80;
  std::vector<char32_t> out;
  bool first_para = true;
  for (const auto& para : paragraphs) {
    if (!first_para) {
      out.push_back(U'\n');
      out.push_back(U'\n');
    }
    first_para = false;
    std::vector<std::vector<char32_t>> words(1);
    for (char32_t cp : para) {
      if (cp == U' ') {
        if (!words.back().empty()) words.emplace_back();
      } else {
        words.back().push_back(cp);
      }
    }
    if (words.back().empty()) words.pop_back();
    std::size_t col = 0;
    for (const auto& word : words) {
      if (col == 0) {
        out.insert(out.end(), word.begin(), word.end());
        col = word.size();
      } else if (col + 1 + word.size() <= kWidth) {
        out.push_back(U' ');
        out.insert(out.end(), word.begin(), word.end());
        col += 1 + word.size();
      } else {
        out.push_back(U'\n');
        out.insert(out.end(), word.begin(), word.end());
        col = word.size();
      }
    }
  }
  if (!out.empty()) out.push_back(U'\n');
  return utf8::encode(out);
}

std::string t03_smart_quotes(std::string_view text) {
  auto cps = utf8::decode(text);
  const auto opens_here = [&](std::size_t i) {
    if (i == 0) return true;
    const char32_t prev = cps[i - 1];
    return uni::is_white_space(prev) || prev == U'(' || prev == U'[' ||
           prev == U'{' || prev == 0x2018 || prev == 0x201C;
  };
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == U'\'')
      cps[i] = opens_here(i) ? 0x2018 : 0x2019;
    else if (cps[i] == U'"')
      cps[i] = opens_here(i) ? 0x201C : 0x201D;
  }
  return utf8::encode(cps);
}

// Editors and VCS hooks trim ASCII blanks; Unicode spaces are left alone.
std::string t04_strip_trailing(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t line_start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      std::size_t end = i;
      while (end > line_start &&
             (text[end - 1] == ' ' || text[end - 1] == '\t'))
        --end;
      out.append(text.substr(line_start, end - line_start));
      if (i < text.size()) out.push_back('\n');
      line_start = i + 1;
    }
  }
  return out;
}

std::string t05_nfkc(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    const auto repl = uni::nfkc_singleton(cp);
    if (repl.empty())
      utf8::append(out, cp);
    else
      out.append(repl);
  }
  return out;
}

std::string t06_collapse_ws(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_run = false;
  for (char32_t cp : utf8::decode(text)) {
    if (uni::is_white_space(cp)) {
      if (!in_run) out.push_back(' ');
      in_run = true;
    } else {
      utf8::append(out, cp);
      in_run = false;
    }
  }
  return out;
}

template <typename Pred>
std::string drop_if(std::string_view text, Pred pred) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text))
    if (!pred(cp)) utf8::append(out, cp);
  return out;
}

std::string t09_deconfuse(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) utf8::append(out, codec::hg_to_latin(cp));
  return out;
}

constexpr bool ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

std::string t11_plain(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    if (ascii_punct(cp)) continue;
    utf8::append(out, uni::simple_lower(cp));
  }
  return out;
}

// Feeds `input` to `cmd` via /bin/sh and returns its stdout. Bidirectional
// pipe with the child's stdin closed before draining to avoid deadlock on
// filters that buffer the whole document.
std::string run_external_filter(const std::string& cmd, std::string_view input) {
  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0)
    throw std::system_error(errno, std::generic_category(), "pipe");
  const pid_t pid = fork();
  if (pid < 0) throw std::system_error(errno, std::generic_category(), "fork");
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  std::size_t written = 0;
  while (written < input.size()) {
    const ssize_t n =
        write(in_pipe[1], input.data() + written, input.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;  // child exited early; report via status below
    }
    written += static_cast<std::size_t>(n);
  }
  close(in_pipe[1]);
  std::string output;
  char buf[4096];
  for (;;) {
    const ssize_t n = read(out_pipe[0], buf, sizeof(buf));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    output.append(buf, static_cast<std::size_t>(n));
  }
  close(out_pipe[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw std::runtime_error("paraphrase command failed: " + cmd);
  return output;
}

}  // namespace

const char* transform_name(TransformId id) {
  return kNames[static_cast<int>(id)];
}

std::optional<TransformId> transform_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (name == kNames[i]) return static_cast<TransformId>(i);
  return std::nullopt;
}

std::string apply_transform(TransformId id, std::string_view text,
                            const TransformOptions& opts) {
  using enum TransformId;
  switch (id) {
    case kT00:
      return std::string(text);
    case kT01:
      return t01_line_endings(text);
    case kT02:
      return t02_reflow(text);
    case kT03:
      return t03_smart_quotes(text);
    case kT04:
      return t04_strip_trailing(text);
    case kT05:
      return t05_nfkc(text);
    case kT06:
      return t06_collapse_ws(text);
    case kT07:
      return drop_if(text, uni::is_format_char);
    case kT08:
      return drop_if(text, codec::is_zw_char);
    case kT09:
      return t09_deconfuse(text);
    case kT10:
      return drop_if(text, [](char32_t cp) { return cp > 0x7F; });
    case kT11:
      return t11_plain(text);
    case kT12:
      if (opts.paraphrase_cmd.empty())
        throw TransformUnavailable("T12 requires paraphrase_cmd");
      return run_external_filter(opts.paraphrase_cmd, text);
  }
  return std::string(text);
}

const std::vector<Chain>& standard_chains() {
  using enum TransformId;
  static const std::vector<Chain> chains = {
      {"Tier-1", {kT01, kT02, kT03, kT04}},
      {"Tier-2", {kT05, kT06, kT07}},
      {"Tier-3", {kT08, kT09, kT10}},
      {"Tier-1+2", {kT01, kT02, kT03, kT04, kT05, kT06, kT07}},
      {"Tier-1+2+3",
       {kT01, kT02, kT03, kT04, kT05, kT06, kT07, kT08, kT09, kT10}},
      {"Tier-4", {kT12}},
  };
  return chains;
}

std::optional<Chain> chain_from_name(std::string_view name) {
  if (name == "Tier-0") return Chain{"Tier-0", {}};
  for (const auto& c : standard_chains())
    if (c.name == name) return c;
  return std::nullopt;
}

std::string apply_chain(const Chain& chain, std::string_view text,
                        const TransformOptions& opts) {
  std::string cur(text);
  for (TransformId id : chain.transforms) cur = apply_transform(id, cur, opts);
  return cur;
}

}  // namespace stegocanary::transport
