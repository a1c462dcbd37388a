// Copyright 2026 The dlcf Authors.
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

// Tokenizer shared by the goal parsers.

#ifndef DLCF_SRC_GOAL_LEXER_HPP_
#define DLCF_SRC_GOAL_LEXER_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "dlcf/script.hpp"

namespace dlcf::internal {

class GoalLexer {
 public:
  explicit GoalLexer(std::string_view src) : src_(src) {}

  std::size_t position() {
    skip();
    return pos_;
  }
  bool at_end() {
    skip();
    return pos_ == src_.size();
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  // [a-z_][a-z0-9_]*, empty when none.
  std::string_view peek_ident() {
    skip();
    std::size_t end = pos_;
    if (end < src_.size() && (std::islower(uc(src_[end])) || src_[end] == '_'))
      while (end < src_.size() &&
             (std::islower(uc(src_[end])) || std::isdigit(uc(src_[end])) ||
              src_[end] == '_'))
        ++end;
    return src_.substr(pos_, end - pos_);
  }
  std::string ident() {
    std::string_view id = peek_ident();
    if (id.empty()) error("expected an identifier");
    pos_ += id.size();
    return std::string(id);
  }
  bool accept_word(std::string_view w) {
    if (peek_ident() != w) return false;
    pos_ += w.size();
    return true;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) error("expected '" + std::string(w) + "'");
  }

  bool peek_digit() {
    skip();
    return pos_ < src_.size() && std::isdigit(uc(src_[pos_]));
  }
  std::string digits() {
    skip();
    std::size_t end = pos_;
    while (end < src_.size() && std::isdigit(uc(src_[end]))) ++end;
    if (end == pos_) error("expected a number");
    std::string out(src_.substr(pos_, end - pos_));
    pos_ = end;
    return out;
  }

  void finish() {
    if (!at_end()) error("trailing input");
  }

  [[noreturn]] void error(const std::string& what) {
    throw ParseError(position(), what);
  }

 private:
  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }
  void skip() {
    while (pos_ < src_.size() && std::isspace(uc(src_[pos_]))) ++pos_;
  }
  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace dlcf::internal

#endif  // DLCF_SRC_GOAL_LEXER_HPP_
