#include "r4embed/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace r4embed {

Word free_reduce(const std::vector<Syllable>& raw) { return Word(raw); }

Word::Word(std::vector<Syllable> raw) {
  // Stack reduction: merging adjacent equal-generator syllables and
  // dropping zero exponents cascades into full free reduction.
  for (Syllable& s : raw) {
    if (s.exponent == 0) continue;
    if (!syls_.empty() && syls_.back().generator == s.generator) {
      syls_.back().exponent += s.exponent;
      if (syls_.back().exponent == 0) syls_.pop_back();
    } else {
      syls_.push_back(std::move(s));
    }
  }
}

Integer Word::length() const {
  Integer n = 0;
  for (const Syllable& s : syls_) n += boost::multiprecision::abs(s.exponent);
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    rev.push_back({it->generator, -it->exponent});
  return Word(std::move(rev));
}

Word Word::operator*(const Word& o) const {
  std::vector<Syllable> cat = syls_;
  cat.insert(cat.end(), o.syls_.begin(), o.syls_.end());
  return Word(std::move(cat));
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void expect(char c, const char* what) {
    skip_ws();
    if (eof() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos);
    ++pos;
  }
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' ||
         c == '\'';
}

std::string read_ident(Cursor& cur) {
  cur.skip_ws();
  if (cur.eof() || !ident_start(cur.peek()))
    throw ParseError("expected identifier", cur.pos);
  std::size_t start = cur.pos;
  while (!cur.eof() && ident_char(cur.peek())) ++cur.pos;
  return std::string(cur.text.substr(start, cur.pos - start));
}

Integer read_int(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  bool neg = false;
  if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) {
    neg = cur.peek() == '-';
    ++cur.pos;
  }
  std::size_t digits_start = cur.pos;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
    ++cur.pos;
  if (cur.pos == digits_start) throw ParseError("expected integer", start);
  Integer v(std::string(cur.text.substr(digits_start, cur.pos - digits_start)));
  return neg ? Integer(-v) : v;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Cursor cur{text};
  Presentation p;
  cur.expect('<', "presentation opens with '<'");

  std::map<std::string, int> index;
  cur.skip_ws();
  if (!cur.eof() && cur.peek() != ';') {
    for (;;) {
      cur.skip_ws();
      std::size_t at = cur.pos;
      std::string name = read_ident(cur);
      if (index.count(name)) throw ParseError("duplicate generator '" + name + "'", at);
      index[name] = static_cast<int>(p.generators.size());
      p.generators.push_back(name);
      cur.skip_ws();
      if (!cur.eof() && cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      break;
    }
  }
  cur.expect(';', "between generators and relators");

  cur.skip_ws();
  if (!cur.eof() && cur.peek() != '>') {
    for (;;) {
      // One word: sequence of syllables, or the literal `1`.
      std::vector<Syllable> syls;
      bool saw_token = false;
      for (;;) {
        cur.skip_ws();
        if (cur.eof()) throw ParseError("unterminated presentation", cur.pos);
        char c = cur.peek();
        if (c == ',' || c == '>') break;
        if (c == '1') {
          ++cur.pos;
          saw_token = true;
          continue;  // identity letter contributes nothing
        }
        std::size_t at = cur.pos;
        std::string name = read_ident(cur);
        auto it = index.find(name);
        if (it == index.end())
          throw ParseError("unknown generator '" + name + "'", at);
        Integer exp = 1;
        cur.skip_ws();
        if (!cur.eof() && cur.peek() == '^') {
          ++cur.pos;
          std::size_t eat = cur.pos;
          exp = read_int(cur);
          if (exp == 0) throw ParseError("zero exponent", eat);
        }
        syls.push_back({it->second, std::move(exp)});
        saw_token = true;
      }
      if (!saw_token) throw ParseError("empty relator (write '1')", cur.pos);
      p.relators.emplace_back(std::move(syls));
      cur.skip_ws();
      if (!cur.eof() && cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      break;
    }
  }
  cur.expect('>', "presentation closes with '>'");
  cur.skip_ws();
  if (!cur.eof()) throw ParseError("trailing input", cur.pos);
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " ; ";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    if (j) out += ", ";
    const Word& w = p.relators[j];
    if (w.empty()) {
      out += "1";
      continue;
    }
    for (std::size_t k = 0; k < w.syllables().size(); ++k) {
      const Syllable& s = w.syllables()[k];
      if (k) out += " ";
      out += p.generators[static_cast<std::size_t>(s.generator)];
      if (s.exponent != 1) out += "^" + s.exponent.str();
    }
  }
  out += ">";
  return out;
}

Presentation pad_relations(Presentation p) {
  while (p.relators.size() < p.generators.size()) p.relators.emplace_back();
  return p;
}

namespace {

std::string fresh_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

}  // namespace

Presentation stabilize(const Presentation& p) {
  if (p.relators.size() < p.generators.size())
    throw std::invalid_argument("stabilize requires a padded presentation");
  const std::size_t n = p.generators.size();
  const std::size_t m = p.relators.size();
  std::set<std::string> taken(p.generators.begin(), p.generators.end());

  Presentation out;
  out.generators = p.generators;
  for (std::size_t j = 0; j < m; ++j) {
    std::string h = fresh_name("h#" + std::to_string(j + 1), taken);
    taken.insert(h);
    out.generators.push_back(h);
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Syllable> syls = p.relators[j].syllables();
    syls.push_back({static_cast<int>(n + j), 1});
    out.relators.emplace_back(std::move(syls));
  }
  for (std::size_t j = 0; j < m; ++j)
    out.relators.emplace_back(
        std::vector<Syllable>{{static_cast<int>(n + j), 1}});
  return out;
}

Integer unary_size(const Presentation& p) {
  Integer s = static_cast<unsigned long>(p.generators.size());
  for (const Word& w : p.relators) s += w.length();
  return s;
}

namespace {

// Presentation-wide max |exponent| per generator.
std::vector<Integer> max_exponents(const Presentation& p) {
  std::vector<Integer> m(p.generators.size(), 0);
  for (const Word& w : p.relators)
    for (const Syllable& s : w.syllables()) {
      Integer a = boost::multiprecision::abs(s.exponent);
      auto& slot = m[static_cast<std::size_t>(s.generator)];
      if (a > slot) slot = a;
    }
  return m;
}

}  // namespace

Integer binary_size(const Presentation& p) {
  const std::vector<Integer> mg = max_exponents(p);
  Integer b = static_cast<unsigned long>(p.generators.size());
  for (const Word& w : p.relators)
    for (const Syllable& s : w.syllables()) {
      unsigned cost = ceil_log2(mg[static_cast<std::size_t>(s.generator)]);
      b += std::max(1u, cost);
    }
  return b;
}

Presentation binary_compress(const Presentation& p) {
  if (p.relators.size() < p.generators.size())
    throw std::invalid_argument("binary_compress requires a padded presentation");
  const std::size_t n = p.generators.size();
  const std::vector<Integer> mg = max_exponents(p);

  std::set<std::string> taken(p.generators.begin(), p.generators.end());
  Presentation out;
  out.generators = p.generators;

  // level_gen[g][k] = generator index representing g^(2^k); level 0 is g.
  std::vector<std::vector<int>> level_gen(n);
  std::vector<Word> doubling;
  for (std::size_t g = 0; g < n; ++g) {
    level_gen[g].push_back(static_cast<int>(g));
    const unsigned levels = ceil_log2(mg[g]);  // generators g#2 .. g#levels
    for (unsigned k = 2; k <= levels; ++k) {
      std::string name =
          fresh_name(p.generators[g] + "#" + std::to_string(k), taken);
      taken.insert(name);
      int id = static_cast<int>(out.generators.size());
      out.generators.push_back(name);
      int prev = level_gen[g].back();
      level_gen[g].push_back(id);
      doubling.emplace_back(std::vector<Syllable>{{id, -1}, {prev, 1}, {prev, 1}});
    }
  }

  for (const Word& w : p.relators) {
    std::vector<Syllable> syls;
    for (const Syllable& s : w.syllables()) {
      const std::size_t g = static_cast<std::size_t>(s.generator);
      const unsigned top = static_cast<unsigned>(level_gen[g].size()) - 1;
      Integer k = boost::multiprecision::abs(s.exponent);
      // Greedy expansion over the powers 2^0..2^top (top power may repeat),
      // highest power first.
      std::vector<Syllable> expanded;
      Integer pw = Integer(1) << top;
      unsigned lvl = top;
      while (k > 0) {
        while (pw > k && lvl > 0) {
          pw >>= 1;
          --lvl;
        }
        expanded.push_back({level_gen[g][lvl], 1});
        k -= pw;
      }
      if (s.exponent < 0) {
        std::reverse(expanded.begin(), expanded.end());
        for (Syllable& e : expanded) e.exponent = -e.exponent;
      }
      syls.insert(syls.end(), expanded.begin(), expanded.end());
    }
    out.relators.emplace_back(std::move(syls));
  }
  for (Word& d : doubling) out.relators.push_back(std::move(d));
  return out;
}

IntegerMatrix abelianized_matrix(const Presentation& p) {
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const Syllable& s : p.relators[j].syllables())
      m(j, static_cast<std::size_t>(s.generator)) += s.exponent;
  return m;
}

Presentation matrix_to_presentation(const IntegerMatrix& m) {
  Presentation p;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    // g1, g2, ... ; single letters stay readable for small matrices.
    p.generators.push_back("g" + std::to_string(i + 1));
  }
  for (std::size_t j = 0; j < m.rows(); ++j) {
    std::vector<Syllable> syls;
    for (std::size_t i = 0; i < m.cols(); ++i)
      if (m(j, i) != 0) syls.push_back({static_cast<int>(i), m(j, i)});
    p.relators.emplace_back(std::move(syls));
  }
  return p;
}

}  // namespace r4embed
