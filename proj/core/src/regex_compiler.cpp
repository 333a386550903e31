// Copyright 2026 The strclean Authors.
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

#include "regex_compiler.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "strclean/error.hpp"

namespace strclean::detail {

namespace {

constexpr int kUnbounded = -1;

struct Node {
  enum class Type { Set, Concat, Alt, Repeat, Empty };
  Type type = Type::Empty;
  SymbolSet set;
  std::vector<std::unique_ptr<Node>> kids;
  int min = 0;
  int max = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Type t) {
  auto n = std::make_unique<Node>();
  n->type = t;
  return n;
}

SymbolSet symbol_range(int lo, int hi) {
  SymbolSet s;
  for (int i = lo; i <= hi; ++i) s.set(static_cast<std::size_t>(i));
  return s;
}

SymbolSet char_set(char c) {
  SymbolSet s;
  s.set(static_cast<std::size_t>(alphabet::symbol_of(static_cast<unsigned char>(c))));
  return s;
}

SymbolSet fold(SymbolSet s) {
  for (int c = 'A'; c <= 'Z'; ++c) {
    const auto up = static_cast<std::size_t>(alphabet::symbol_of(static_cast<char32_t>(c)));
    if (s.test(up)) {
      s.reset(up);
      s.set(static_cast<std::size_t>(alphabet::symbol_of(static_cast<char32_t>(c - 'A' + 'a'))));
    }
  }
  return s;
}

class Parser {
 public:
  Parser(std::string_view src, bool fold_case) : src_(src), fold_(fold_case) {}

  NodePtr parse() {
    NodePtr n = alternation();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return n;
  }

  // Parses a bare class body (no brackets) for JSON symbol lists.
  SymbolSet class_body_only() {
    SymbolSet s = class_items(false);
    if (pos_ != src_.size()) fail("trailing characters in class");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidSpec("pattern error at offset " + std::to_string(pos_) + ": " + what);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  NodePtr alternation() {
    NodePtr first = concatenation();
    if (eof() || peek() != '|') return first;
    NodePtr alt = make(Node::Type::Alt);
    alt->kids.push_back(std::move(first));
    while (!eof() && peek() == '|') {
      ++pos_;
      alt->kids.push_back(concatenation());
    }
    return alt;
  }

  NodePtr concatenation() {
    NodePtr cat = make(Node::Type::Concat);
    while (!eof() && peek() != '|' && peek() != ')') cat->kids.push_back(repetition());
    if (cat->kids.empty()) return make(Node::Type::Empty);
    if (cat->kids.size() == 1) return std::move(cat->kids.front());
    return cat;
  }

  NodePtr repetition() {
    NodePtr atom_node = atom();
    while (!eof()) {
      int lo = 0;
      int hi = 0;
      const char c = peek();
      if (c == '*') {
        lo = 0, hi = kUnbounded, ++pos_;
      } else if (c == '+') {
        lo = 1, hi = kUnbounded, ++pos_;
      } else if (c == '?') {
        lo = 0, hi = 1, ++pos_;
      } else if (c == '{') {
        ++pos_;
        lo = number();
        hi = lo;
        if (!eof() && peek() == ',') {
          ++pos_;
          hi = (!eof() && peek() == '}') ? kUnbounded : number();
        }
        if (eof() || peek() != '}') fail("unterminated {}");
        ++pos_;
        if (hi != kUnbounded && hi < lo) fail("bad repeat bounds");
      } else {
        break;
      }
      NodePtr rep = make(Node::Type::Repeat);
      rep->min = lo;
      rep->max = hi;
      rep->kids.push_back(std::move(atom_node));
      atom_node = std::move(rep);
    }
    return atom_node;
  }

  int number() {
    if (eof() || peek() < '0' || peek() > '9') fail("expected number");
    int v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 1000) fail("repeat bound too large");
      ++pos_;
    }
    return v;
  }

  NodePtr leaf(SymbolSet s) {
    NodePtr n = make(Node::Type::Set);
    n->set = fold_ ? fold(s) : s;
    return n;
  }

  NodePtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = alternation();
      if (eof() || peek() != ')') fail("unbalanced parenthesis");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      bool negate = false;
      if (!eof() && peek() == '^') {
        negate = true;
        ++pos_;
      }
      SymbolSet s = class_items(true);
      if (eof() || peek() != ']') fail("unterminated class");
      ++pos_;
      if (negate) s.flip();
      return leaf(s);
    }
    if (c == '.') {
      ++pos_;
      return leaf(SymbolSet().set());
    }
    if (c == '\\') return leaf(escape());
    if (c == '*' || c == '+' || c == '?' || c == '{' || c == ')') fail("misplaced operator");
    return leaf(literal());
  }

  // One source character, decoding UTF-8 so that any non-ASCII character
  // becomes the OTHER symbol.
  SymbolSet literal() {
    const auto b = static_cast<unsigned char>(peek());
    if (b < 0x80) {
      ++pos_;
      return char_set(static_cast<char>(b));
    }
    std::size_t len = (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3 : (b & 0xF8) == 0xF0 ? 4 : 1;
    pos_ = std::min(src_.size(), pos_ + len);
    SymbolSet s;
    s.set(alphabet::kOther);
    return s;
  }

  SymbolSet escape() {
    ++pos_;
    if (eof()) fail("dangling escape");
    const char c = peek();
    ++pos_;
    switch (c) {
      case 'd':
        return symbol_range(alphabet::symbol_of('0'), alphabet::symbol_of('9'));
      case 'w': {
        SymbolSet s = symbol_range(alphabet::symbol_of('0'), alphabet::symbol_of('9'));
        s |= symbol_range(alphabet::symbol_of('a'), alphabet::symbol_of('z'));
        s |= symbol_range(alphabet::symbol_of('A'), alphabet::symbol_of('Z'));
        s |= char_set('_');
        return s;
      }
      case 's':
        return char_set(' ');
      case 'o': {
        SymbolSet s;
        s.set(alphabet::kOther);
        return s;
      }
      default:
        if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) > 0x7E) {
          fail("bad escape");
        }
        return char_set(c);
    }
  }

  SymbolSet class_items(bool bracketed) {
    SymbolSet s;
    bool first = true;
    while (!eof() && !(bracketed && peek() == ']' && !first)) {
      first = false;
      SymbolSet item;
      int single = -1;
      if (peek() == '\\') {
        item = escape();
        if (item.count() == 1 && pos_ >= 2 && src_[pos_ - 1] != 'd' && src_[pos_ - 1] != 'w' &&
            src_[pos_ - 1] != 's' && src_[pos_ - 1] != 'o') {
          single = static_cast<int>(item._Find_first());
        }
      } else {
        item = literal();
        single = static_cast<int>(item._Find_first());
      }
      if (single >= 0 && single != alphabet::kOther && pos_ + 1 < src_.size() && peek() == '-' &&
          src_[pos_ + 1] != ']') {
        ++pos_;
        SymbolSet hi_set = peek() == '\\' ? escape() : literal();
        const int hi = static_cast<int>(hi_set._Find_first());
        if (hi < single || hi == alphabet::kOther) fail("bad class range");
        item = symbol_range(single, hi);
      }
      s |= item;
    }
    return s;
  }

  std::string_view src_;
  bool fold_;
  std::size_t pos_ = 0;
};

struct Nfa {
  struct State {
    std::vector<std::pair<SymbolSet, int>> edges;
    std::vector<int> eps;
  };
  std::vector<State> states;

  int add() {
    states.emplace_back();
    return static_cast<int>(states.size()) - 1;
  }
};

struct Frag {
  int start;
  int end;
};

Frag build(const Node& n, Nfa& nfa) {
  switch (n.type) {
    case Node::Type::Empty: {
      int s = nfa.add();
      return {s, s};
    }
    case Node::Type::Set: {
      int s = nfa.add();
      int e = nfa.add();
      if (n.set.any()) nfa.states[static_cast<std::size_t>(s)].edges.emplace_back(n.set, e);
      return {s, e};
    }
    case Node::Type::Concat: {
      Frag f = build(*n.kids.front(), nfa);
      for (std::size_t i = 1; i < n.kids.size(); ++i) {
        Frag g = build(*n.kids[i], nfa);
        nfa.states[static_cast<std::size_t>(f.end)].eps.push_back(g.start);
        f.end = g.end;
      }
      return f;
    }
    case Node::Type::Alt: {
      int s = nfa.add();
      int e = nfa.add();
      for (const auto& k : n.kids) {
        Frag g = build(*k, nfa);
        nfa.states[static_cast<std::size_t>(s)].eps.push_back(g.start);
        nfa.states[static_cast<std::size_t>(g.end)].eps.push_back(e);
      }
      return {s, e};
    }
    case Node::Type::Repeat: {
      int s = nfa.add();
      int cur = s;
      for (int i = 0; i < n.min; ++i) {
        Frag g = build(*n.kids.front(), nfa);
        nfa.states[static_cast<std::size_t>(cur)].eps.push_back(g.start);
        cur = g.end;
      }
      int e = nfa.add();
      if (n.max == kUnbounded) {
        Frag g = build(*n.kids.front(), nfa);
        nfa.states[static_cast<std::size_t>(cur)].eps.push_back(g.start);
        nfa.states[static_cast<std::size_t>(g.end)].eps.push_back(g.start);
        nfa.states[static_cast<std::size_t>(g.end)].eps.push_back(e);
        nfa.states[static_cast<std::size_t>(cur)].eps.push_back(e);
      } else {
        for (int i = n.min; i < n.max; ++i) {
          Frag g = build(*n.kids.front(), nfa);
          nfa.states[static_cast<std::size_t>(cur)].eps.push_back(g.start);
          nfa.states[static_cast<std::size_t>(cur)].eps.push_back(e);
          cur = g.end;
        }
        nfa.states[static_cast<std::size_t>(cur)].eps.push_back(e);
      }
      return {s, e};
    }
  }
  return {0, 0};
}

std::vector<int> closure(const Nfa& nfa, std::vector<int> set) {
  std::vector<bool> seen(nfa.states.size(), false);
  std::vector<int> stack = set;
  for (int s : set) seen[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : nfa.states[static_cast<std::size_t>(s)].eps) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

Dfa compile_pattern(std::string_view pattern, bool case_sensitive) {
  Parser parser(pattern, !case_sensitive);
  NodePtr ast = parser.parse();
  Nfa nfa;
  Frag frag = build(*ast, nfa);

  Dfa raw;
  std::map<std::vector<int>, std::int32_t> index;
  std::vector<std::vector<int>> sets;
  auto intern = [&](std::vector<int> set) -> std::int32_t {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    const auto id = static_cast<std::int32_t>(sets.size());
    index.emplace(set, id);
    raw.accepting.push_back(std::binary_search(set.begin(), set.end(), frag.end));
    raw.next.emplace_back();
    raw.next.back().fill(-1);
    sets.push_back(std::move(set));
    return id;
  };
  intern(closure(nfa, {frag.start}));
  for (std::size_t d = 0; d < sets.size(); ++d) {
    for (int sym = 0; sym < alphabet::kSize; ++sym) {
      std::vector<int> moved;
      for (int s : sets[d]) {
        for (const auto& [syms, t] : nfa.states[static_cast<std::size_t>(s)].edges) {
          if (syms.test(static_cast<std::size_t>(sym))) moved.push_back(t);
        }
      }
      if (moved.empty()) continue;
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      const std::int32_t target = intern(closure(nfa, std::move(moved)));
      raw.next[d][static_cast<std::size_t>(sym)] = target;
    }
  }

  // Keep only states from which acceptance is reachable.
  const std::size_t n = raw.next.size();
  std::vector<bool> live(raw.accepting.begin(), raw.accepting.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t d = 0; d < n; ++d) {
      if (live[d]) continue;
      for (auto t : raw.next[d]) {
        if (t >= 0 && live[static_cast<std::size_t>(t)]) {
          live[d] = true;
          changed = true;
          break;
        }
      }
    }
  }
  if (!live[0]) throw InvalidSpec("pattern accepts no string: " + std::string(pattern));
  std::vector<std::int32_t> remap(n, -1);
  Dfa dfa;
  for (std::size_t d = 0; d < n; ++d) {
    if (live[d]) {
      remap[d] = static_cast<std::int32_t>(dfa.accepting.size());
      dfa.accepting.push_back(raw.accepting[d]);
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (!live[d]) continue;
    std::array<std::int32_t, alphabet::kSize> row{};
    for (std::size_t sym = 0; sym < row.size(); ++sym) {
      const auto t = raw.next[d][sym];
      row[sym] = t >= 0 ? remap[static_cast<std::size_t>(t)] : -1;
    }
    dfa.next.push_back(row);
  }
  return dfa;
}

std::string symbols_to_class(const SymbolSet& set) {
  auto emit = [](int sym) -> std::string {
    if (sym == alphabet::kOther) return "\\o";
    const char c = static_cast<char>(sym + 0x20);
    if (c == '\\' || c == ']' || c == '-' || c == '^' || c == '[') return std::string("\\") + c;
    return std::string(1, c);
  };
  std::string out;
  int sym = 0;
  while (sym < alphabet::kSize) {
    if (!set.test(static_cast<std::size_t>(sym))) {
      ++sym;
      continue;
    }
    int end = sym;
    while (end + 1 < alphabet::kOther && set.test(static_cast<std::size_t>(end + 1))) ++end;
    if (sym == alphabet::kOther) end = sym;
    if (end - sym >= 2) {
      out += emit(sym) + "-" + emit(end);
    } else {
      for (int k = sym; k <= end; ++k) out += emit(k);
    }
    sym = end + 1;
  }
  return out;
}

SymbolSet class_to_symbols(std::string_view body) {
  Parser parser(body, false);
  return parser.class_body_only();
}

}  // namespace strclean::detail
