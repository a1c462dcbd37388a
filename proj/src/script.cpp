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

#include "dlcf/script.hpp"

#include <cctype>

namespace dlcf {

struct Tac::Node {
  Kind kind;
  std::string name;
  std::vector<Tac> kids;
  std::vector<MTac> multi;
};

struct MTac::Node {
  Kind kind;
  std::vector<Tac> tacs;
  std::vector<MTac> inner;
};

Tac Tac::rule(std::string name) {
  return Tac(std::make_shared<const Node>(
      Node{Kind::kRule, std::move(name), {}, {}}));
}
Tac Tac::id() { return Tac(std::make_shared<const Node>(Node{Kind::kId, {}, {}, {}})); }
Tac Tac::orelse(Tac a, Tac b) {
  return Tac(std::make_shared<const Node>(
      Node{Kind::kOrElse, {}, {std::move(a), std::move(b)}, {}}));
}
Tac Tac::star(Tac t) {
  return Tac(
      std::make_shared<const Node>(Node{Kind::kStar, {}, {std::move(t)}, {}}));
}
Tac Tac::seq(Tac t, MTac m) {
  return Tac(std::make_shared<const Node>(
      Node{Kind::kSeq, {}, {std::move(t)}, {std::move(m)}}));
}

Tac::Kind Tac::kind() const { return n_->kind; }
const std::string& Tac::name() const { return n_->name; }
const Tac& Tac::lhs() const { return n_->kids.at(0); }
const Tac& Tac::rhs() const { return n_->kids.at(1); }
const MTac& Tac::multi() const { return n_->multi.at(0); }

bool operator==(const Tac& a, const Tac& b) {
  if (a.n_ == b.n_) return true;
  return a.n_->kind == b.n_->kind && a.n_->name == b.n_->name &&
         a.n_->kids == b.n_->kids && a.n_->multi == b.n_->multi;
}

MTac MTac::all(Tac t) {
  return MTac(
      std::make_shared<const Node>(Node{Kind::kAll, {std::move(t)}, {}}));
}
MTac MTac::each(std::vector<Tac> ts) {
  return MTac(std::make_shared<const Node>(Node{Kind::kEach, std::move(ts), {}}));
}
MTac MTac::star(MTac m) {
  return MTac(
      std::make_shared<const Node>(Node{Kind::kStar, {}, {std::move(m)}}));
}

MTac::Kind MTac::kind() const { return n_->kind; }
const Tac& MTac::body() const { return n_->tacs.at(0); }
const std::vector<Tac>& MTac::items() const { return n_->tacs; }
const MTac& MTac::inner() const { return n_->inner.at(0); }

bool operator==(const MTac& a, const MTac& b) {
  if (a.n_ == b.n_) return true;
  return a.n_->kind == b.n_->kind && a.n_->tacs == b.n_->tacs &&
         a.n_->inner == b.n_->inner;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Tac script() {
    Tac t = tac();
    skip();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return t;
  }

 private:
  void skip() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  [[noreturn]] void error(const std::string& what) {
    throw ParseError(pos_, what);
  }

  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
  }

  // Identifier at the cursor without consuming it.
  std::string_view peek_ident() {
    skip();
    std::size_t end = pos_;
    while (end < src_.size() && ident_char(src_[end])) ++end;
    if (end == pos_ || !ident_start(src_[pos_])) return {};
    return src_.substr(pos_, end - pos_);
  }

  Tac tac() {
    Tac t = seqt();
    while (accept('|')) t = Tac::orelse(t, seqt());
    return t;
  }

  Tac seqt() {
    Tac t = post();
    while (accept(';')) t = Tac::seq(t, mpost());
    return t;
  }

  Tac post() {
    Tac t = atom();
    while (accept('*')) t = Tac::star(t);
    return t;
  }

  Tac atom() {
    if (accept('(')) {
      Tac t = tac();
      expect(')');
      return t;
    }
    std::string_view id = peek_ident();
    if (id.empty()) {
      if (pos_ == src_.size()) error("unexpected end of script");
      error("expected a tactic");
    }
    if (id == "all") error("'all' needs to follow ';'");
    pos_ += id.size();
    if (id == "id") return Tac::id();
    return Tac::rule(std::string(id));
  }

  MTac mpost() {
    MTac m = matom();
    while (accept('*')) m = MTac::star(m);
    return m;
  }

  MTac matom() {
    if (accept('(')) {
      MTac m = mpost();
      expect(')');
      return m;
    }
    if (accept('[')) {
      std::vector<Tac> ts;
      if (!accept(']')) {
        ts.push_back(tac());
        while (accept(',')) ts.push_back(tac());
        expect(']');
      }
      return MTac::each(std::move(ts));
    }
    if (peek_ident() == "all") {
      pos_ += 3;
      expect('(');
      Tac t = tac();
      expect(')');
      return MTac::all(t);
    }
    if (pos_ == src_.size()) error("unexpected end of script");
    error("expected a multitactic");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// 0: alternative operand, 1: sequence operand, 2: postfix operand.
std::string print_at(const Tac& t, int level) {
  switch (t.kind()) {
    case Tac::Kind::kRule:
      return t.name();
    case Tac::Kind::kId:
      return "id";
    case Tac::Kind::kStar:
      return print_at(t.lhs(), 2) + "*";
    case Tac::Kind::kOrElse: {
      std::string s = print_at(t.lhs(), 0) + " | " + print_at(t.rhs(), 1);
      return level > 0 ? "(" + s + ")" : s;
    }
    case Tac::Kind::kSeq: {
      std::string s = print_at(t.lhs(), 1) + "; " + print(t.multi());
      return level > 1 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

Tac parse_script(std::string_view src) { return Parser(src).script(); }

std::string print(const Tac& t) { return print_at(t, 0); }

std::string print(const MTac& m) {
  switch (m.kind()) {
    case MTac::Kind::kAll:
      return "all(" + print(m.body()) + ")";
    case MTac::Kind::kEach: {
      std::string s = "[";
      for (std::size_t i = 0; i < m.items().size(); ++i)
        s += (i ? ", " : "") + print(m.items()[i]);
      return s + "]";
    }
    case MTac::Kind::kStar:
      return print(m.inner()) + "*";
  }
  return {};
}

std::string show(const Tac& t) {
  switch (t.kind()) {
    case Tac::Kind::kRule:
      return "Rule(" + t.name() + ")";
    case Tac::Kind::kId:
      return "Id";
    case Tac::Kind::kStar:
      return "Star(" + show(t.lhs()) + ")";
    case Tac::Kind::kOrElse:
      return "OrElse(" + show(t.lhs()) + ", " + show(t.rhs()) + ")";
    case Tac::Kind::kSeq:
      return "Seq(" + show(t.lhs()) + ", " + show(t.multi()) + ")";
  }
  return {};
}

std::string show(const MTac& m) {
  switch (m.kind()) {
    case MTac::Kind::kAll:
      return "All(" + show(m.body()) + ")";
    case MTac::Kind::kEach: {
      std::string s = "Each([";
      for (std::size_t i = 0; i < m.items().size(); ++i)
        s += (i ? ", " : "") + show(m.items()[i]);
      return s + "])";
    }
    case MTac::Kind::kStar:
      return "MStar(" + show(m.inner()) + ")";
  }
  return {};
}

}  // namespace dlcf
