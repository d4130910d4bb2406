#include "hopfit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfit {

namespace {

// Whitespace tokenizer that strips '#' comments and tracks line numbers.
class Tokens {
 public:
  Tokens(std::istream& is, std::string source)
      : is_(is), source_(std::move(source)) {}

  std::string next(const char* what) {
    std::string tok;
    while (true) {
      const int c = is_.get();
      if (c == EOF) {
        if (!tok.empty()) return tok;
        throw ParseError(source_, line_, std::string("expected ") + what +
                                             ", found end of file");
      }
      if (c == '#') {
        if (!tok.empty()) return tok;
        while (is_.good() && is_.get() != '\n') {
        }
        ++line_;
        continue;
      }
      if (std::isspace(c)) {
        if (c == '\n') ++line_;
        if (!tok.empty()) return tok;
        continue;
      }
      if (tok.empty()) token_line_ = line_;
      tok.push_back(static_cast<char>(c));
    }
  }

  long long next_int(const char* what) {
    const std::string tok = next(what);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(source_, token_line_, std::string("expected ") + what +
                                                 ", found '" + tok + "'");
    }
  }

  // line of the most recent token, for errors raised after reading it
  int line() const { return token_line_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& is_;
  std::string source_;
  int line_ = 1;
  int token_line_ = 1;
};

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  return is;
}

FiniteMonoid read_monoid_stream(Tokens& t) {
  const std::string head = t.next("'monoid'");
  if (head != "monoid") {
    throw ParseError(t.source(), t.line(),
                     "expected 'monoid', found '" + head + "'");
  }
  const long long n = t.next_int("monoid size");
  if (n < 1 || n > 64) {
    throw ParseError(t.source(), t.line(),
                     "monoid size " + std::to_string(n) + " out of range");
  }
  const long long e = t.next_int("identity index");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (long long x = 0; x < n; ++x) {
    for (long long y = 0; y < n; ++y) {
      const long long v = t.next_int("table entry");
      if (v < 0 || v >= n) {
        throw ParseError(t.source(), t.line(),
                         "table entry " + std::to_string(v) + " out of range");
      }
      table[x][y] = static_cast<Element>(v);
    }
  }
  if (e < 0 || e >= n) {
    throw ParseError(t.source(), 1, "identity index out of range");
  }
  return validate_monoid(std::move(table), static_cast<Element>(e));
}

}  // namespace

FiniteMonoid read_monoid(const std::filesystem::path& path) {
  std::ifstream is = open_or_throw(path);
  Tokens t(is, path.string());
  return read_monoid_stream(t);
}

FiniteAct read_act(const std::filesystem::path& path) {
  std::ifstream is = open_or_throw(path);
  Tokens t(is, path.string());
  const std::string head = t.next("'act'");
  if (head != "act") {
    throw ParseError(path.string(), t.line(),
                     "expected 'act', found '" + head + "'");
  }
  const long long m = t.next_int("act size");
  if (m < 1 || m > 64) {
    throw ParseError(path.string(), t.line(),
                     "act size " + std::to_string(m) + " out of range");
  }
  const std::string monoid_file = t.next("monoid file name");
  std::filesystem::path monoid_path(monoid_file);
  if (monoid_path.is_relative()) {
    monoid_path = path.parent_path() / monoid_path;
  }
  auto monoid = std::make_shared<const FiniteMonoid>(read_monoid(monoid_path));
  const int n = monoid->size();
  std::vector<std::vector<Element>> action(m, std::vector<Element>(n));
  for (long long a = 0; a < m; ++a) {
    for (int s = 0; s < n; ++s) {
      const long long v = t.next_int("action entry");
      if (v < 0 || v >= m) {
        throw ParseError(path.string(), t.line(),
                         "action entry " + std::to_string(v) +
                             " out of range");
      }
      action[a][s] = static_cast<Element>(v);
    }
  }
  return FiniteAct(std::move(monoid), std::move(action));
}

std::string classify_file(const std::filesystem::path& path) {
  std::ifstream is = open_or_throw(path);
  Tokens t(is, path.string());
  const std::string head = t.next("'monoid' or 'act'");
  if (head != "monoid" && head != "act") {
    throw ParseError(path.string(), t.line(),
                     "expected 'monoid' or 'act', found '" + head + "'");
  }
  return head;
}

void write_monoid(std::ostream& os, const FiniteMonoid& m) {
  os << "monoid " << m.size() << " " << m.identity() << "\n";
  for (const auto& row : m.table()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? " " : "") << row[i];
    }
    os << "\n";
  }
}

void write_act(std::ostream& os, const FiniteAct& a,
               const std::string& monoid_ref) {
  os << "act " << a.size() << " " << monoid_ref << "\n";
  for (const auto& row : a.action()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? " " : "") << row[i];
    }
    os << "\n";
  }
}

Congruence parse_congruence(const FiniteAct& a, const std::string& text) {
  std::istringstream is(text);
  Tokens t(is, "congruence");
  std::string head = t.next("'cong' or block id");
  if (head == "cong") head = t.next("block id");
  std::vector<int> block_of(a.size());
  for (int i = 0; i < a.size(); ++i) {
    long long v;
    if (i == 0) {
      try {
        v = std::stoll(head);
      } catch (const std::exception&) {
        throw ParseError("congruence", 1, "bad block id '" + head + "'");
      }
    } else {
      v = t.next_int("block id");
    }
    if (v < 0 || v >= a.size()) {
      throw ParseError("congruence", 1,
                       "block id " + std::to_string(v) + " out of range");
    }
    block_of[i] = static_cast<int>(v);
  }
  return Congruence(a, std::move(block_of));
}

std::string format_congruence(const Congruence& rho) {
  std::ostringstream os;
  os << "cong";
  for (int id : rho.block_of()) os << " " << id;
  return os.str();
}

ActHom parse_endo(const FiniteAct& a, const std::string& text) {
  std::vector<Element> map(a.size(), -1);
  std::istringstream is(text);
  std::string pair;
  while (is >> pair) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) {
      throw ParseError("endo", 1, "expected a:b, found '" + pair + "'");
    }
    long long from, to;
    try {
      from = std::stoll(pair.substr(0, colon));
      to = std::stoll(pair.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("endo", 1, "bad pair '" + pair + "'");
    }
    if (from < 0 || from >= a.size() || to < 0 || to >= a.size()) {
      throw ParseError("endo", 1, "pair '" + pair + "' out of range");
    }
    if (map[from] != -1) {
      throw ParseError("endo", 1,
                       "element " + std::to_string(from) + " mapped twice");
    }
    map[from] = static_cast<Element>(to);
  }
  for (int i = 0; i < a.size(); ++i) {
    if (map[i] == -1) {
      throw ParseError("endo", 1,
                       "element " + std::to_string(i) + " has no image");
    }
  }
  return ActHom(a, a, std::move(map));
}

std::string format_hom(const ActHom& f) {
  std::ostringstream os;
  os << "hom " << f.source().size() << " :";
  for (Element v : f.map()) os << " " << v;
  return os.str();
}

std::string format_subact(const Subact& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.members().size(); ++i) {
    os << (i ? " " : "") << b.members()[i];
  }
  return os.str();
}

}  // namespace hopfit
