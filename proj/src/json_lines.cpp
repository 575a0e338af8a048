#include "nielsen/json_lines.hpp"

#include <algorithm>
#include <cctype>

#include "nielsen/errors.hpp"

namespace nielsen {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view t) : text_(t) {}

  std::map<std::string, int> run() {
    value("");
    return std::move(out_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  char peek() {
    if (pos_ >= text_.size()) throw InputError("unexpected end of JSON text");
    return text_[pos_];
  }

  std::string string_token() {
    if (peek() != '"') throw InputError("expected a string");
    ++pos_;
    std::string s;
    while (peek() != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
        char e = peek();
        s += (e == 'n' ? '\n' : e == 't' ? '\t' : e);
      } else {
        s += text_[pos_];
      }
      ++pos_;
    }
    ++pos_;
    return s;
  }

  static std::string escape(const std::string& key) {
    std::string r;
    for (char c : key) r += (c == '~' ? "~0" : c == '/' ? "~1" : std::string(1, c));
    return r;
  }

  void value(const std::string& path) {
    skip_ws();
    out_[path] = line_;
    char c = peek();
    if (c == '{') {
      ++pos_;
      skip_ws();
      if (peek() == '}') {
        ++pos_;
        return;
      }
      for (;;) {
        skip_ws();
        std::string key = string_token();
        skip_ws();
        if (peek() != ':') throw InputError("expected ':'");
        ++pos_;
        value(path + "/" + escape(key));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() != '}') throw InputError("expected ',' or '}'");
        ++pos_;
        return;
      }
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        return;
      }
      for (std::size_t i = 0;; ++i) {
        value(path + "/" + std::to_string(i));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() != ']') throw InputError("expected ',' or ']'");
        ++pos_;
        return;
      }
    }
    if (c == '"') {
      string_token();
      return;
    }
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string_view(",]}").find(text_[pos_]) == std::string_view::npos)
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> out_;
};

}  // namespace

std::map<std::string, int> json_pointer_lines(std::string_view text) { return Scanner(text).run(); }

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace nielsen
