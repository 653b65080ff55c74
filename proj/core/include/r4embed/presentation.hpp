#ifndef R4EMBED_PRESENTATION_HPP
#define R4EMBED_PRESENTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "r4embed/matrix.hpp"
#include "r4embed/numeric.hpp"

namespace r4embed {

// One letter block g^k of a relator word; exponent is never zero.
struct Syllable {
  int generator = 0;       // index into Presentation::generators
  Integer exponent = 1;

  bool operator==(const Syllable&) const = default;
};

// A freely reduced word: adjacent syllables always have distinct
// generators, and no syllable has exponent zero.  The empty word is the
// identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> raw);   // reduces on construction

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool empty() const { return syls_.empty(); }
  std::size_t size() const { return syls_.size(); }

  // Total letter count: sum of |exponent| over syllables.
  Integer length() const;

  Word inverse() const;
  Word operator*(const Word& o) const;        // concatenation, reduced

  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syls_;
};

// Stack-based free reduction; the unique normal form in the free group.
Word free_reduce(const std::vector<Syllable>& raw);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Grammar: "<" gens ";" relators ">", gens a comma list of identifiers,
// relators a comma list of words, word = space-separated `ident` or
// `ident^int` (int nonzero, possibly negative), empty word written `1`.
Presentation parse_presentation(std::string_view text);

// Canonical printer for the same grammar; parse(print(P)) == P.
std::string print_presentation(const Presentation& p);

// Append empty relators until there are at least as many relators as
// generators.
Presentation pad_relations(Presentation p);

// P' = <g_1..g_n, h_1..h_m ; r_1 h_1, ..., r_m h_m, h_1, ..., h_m>.
// Requires a padded presentation (relators >= generators).
Presentation stabilize(const Presentation& p);

// s(P) = n + sum_j (letter count of r_j).
Integer unary_size(const Presentation& p);

// b(P) = n + sum over syllables of max(1, ceil(log2 m_g)), where m_g is
// the presentation-wide maximum |exponent| of g.
Integer binary_size(const Presentation& p);

// Repeated-squaring generators g#2..g#K with doubling relators; each
// syllable g^k is rewritten by the binary expansion of |k|.  Requires a
// padded presentation; the result is padded and presents the same group.
Presentation binary_compress(const Presentation& p);

// m x n matrix of exponent sums: entry (j, i) = total exponent of g_i in r_j.
IntegerMatrix abelianized_matrix(const Presentation& p);

// Rows as relators: relator j = g_1^{M(j,0)} ... g_n^{M(j,n-1)}.
Presentation matrix_to_presentation(const IntegerMatrix& m);

}  // namespace r4embed

#endif
