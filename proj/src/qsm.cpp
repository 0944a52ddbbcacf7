// Copyright 2026 The qcdm Authors
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

#include "qcdm/qsm.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "qcdm/errors.hpp"

namespace qcdm {

namespace {

const char* const kTimes = "×";

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_number_char(char c) {
  return (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' || c == 'e' ||
         c == 'E';
}

std::string shape(std::size_t dim) {
  return std::to_string(dim) + kTimes + std::to_string(dim);
}

// Cursor over one line with comment stripped; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view line, int line_no) : line_(line), line_no_(line_no) {
    if (auto hash = line_.find('#'); hash != std::string_view::npos) {
      line_ = line_.substr(0, hash);
    }
  }

  void skip_blanks() {
    while (pos_ < line_.size() && is_blank(line_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= line_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, column());
  }
  [[noreturn]] void fail_at(const std::string& message, int column) const {
    throw ParseError(message, line_no_, column);
  }

  /// Next run of non-blank characters; empty at end of line.
  std::string_view word() {
    skip_blanks();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_blank(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= line_.size() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  double real() {
    skip_blanks();
    const int col = column();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_number_char(line_[pos_])) ++pos_;
    std::string_view token = line_.substr(start, pos_ - start);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (token.empty() || ec != std::errc() || end != digits.data() + digits.size() ||
        (!digits.empty() && (digits.front() == '+' || digits.front() == '-') &&
         token.front() == '+')) {
      fail_at("malformed real literal '" + std::string(token) + "'", col);
    }
    if (!std::isfinite(value)) {
      fail_at("real literal '" + std::string(token) + "' is out of range", col);
    }
    return value;
  }

 private:
  std::string_view line_;
  int line_no_;
  std::size_t pos_ = 0;
};

std::size_t parse_dimension(LineScanner& scan) {
  scan.skip_blanks();
  const int col = scan.column();
  const std::string_view token = scan.word();
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || value == 0) {
    scan.fail_at("invalid factor dimension '" + std::string(token) + "'", col);
  }
  return value;
}

}  // namespace

QsmDocument parse_qsm(std::string_view text) {
  std::vector<std::pair<std::string_view, int>> lines;
  int line_no = 0;
  int last_line = 1;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    last_line = line_no;
    if (!LineScanner(line, line_no).at_end()) lines.emplace_back(line, line_no);
  }

  std::size_t next = 0;
  if (lines.empty()) throw ParseError("missing header 'qsm 1'", 1, 1);

  {
    LineScanner scan(lines[next].first, lines[next].second);
    ++next;
    if (scan.word() != "qsm") scan.fail_at("expected header 'qsm 1'", 1);
    scan.skip_blanks();
    const int col = scan.column();
    const std::string_view version = scan.word();
    if (version != "1") {
      scan.fail_at("unsupported qsm version '" + std::string(version) + "'", col);
    }
    if (!scan.at_end()) scan.fail("unexpected text after header");
  }

  QsmDocument doc;
  {
    if (next == lines.size()) throw ParseError("missing 'dims' line", last_line + 1, 1);
    LineScanner scan(lines[next].first, lines[next].second);
    ++next;
    scan.skip_blanks();
    if (scan.word() != "dims") scan.fail_at("expected 'dims' line", 1);
    std::size_t total = 1;
    while (!scan.at_end()) {
      const int col = scan.column();
      const std::size_t d = parse_dimension(scan);
      if (d > kMaxQsmDim || total * d > kMaxQsmDim) {
        scan.fail_at("matrix dimension exceeds " + std::to_string(kMaxQsmDim), col);
      }
      total *= d;
      doc.dims.push_back(d);
    }
    if (doc.dims.empty()) scan.fail("'dims' line lists no factors");
  }

  const std::size_t dim = dims_product(doc.dims);
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  std::size_t rows = 0;
  for (; next < lines.size(); ++next) {
    LineScanner scan(lines[next].first, lines[next].second);
    if (rows == dim) {
      scan.skip_blanks();
      scan.fail("expected " + shape(dim) + " matrix, found extra row");
    }
    std::size_t count = 0;
    while (!scan.at_end()) {
      if (count == dim) {
        scan.fail("expected " + shape(dim) + " matrix, row " + std::to_string(rows + 1) +
                  " has more than " + std::to_string(dim) + " entries");
      }
      scan.expect('(');
      const double re = scan.real();
      scan.expect(',');
      const double im = scan.real();
      scan.expect(')');
      entries.emplace_back(re, im);
      ++count;
    }
    if (count != dim) {
      scan.fail("expected " + shape(dim) + " matrix, row " + std::to_string(rows + 1) +
                " has " + std::to_string(count) + " entries");
    }
    ++rows;
  }
  if (rows != dim) {
    throw ParseError("expected " + shape(dim) + " matrix, found " + std::to_string(rows) +
                         " rows",
                     last_line + 1, 1);
  }
  doc.matrix = Matrix(dim, std::move(entries));
  return doc;
}

std::string format_exact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string emit_qsm(const QsmDocument& doc) {
  std::string out = "qsm 1\ndims";
  for (std::size_t d : doc.dims) {
    out += ' ';
    out += std::to_string(d);
  }
  out += '\n';
  const Matrix& m = doc.matrix;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out += ' ';
      out += '(';
      out += format_exact(m(r, c).real());
      out += ',';
      out += format_exact(m(r, c).imag());
      out += ')';
    }
    out += '\n';
  }
  return out;
}

}  // namespace qcdm
