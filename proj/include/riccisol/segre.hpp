#ifndef RICCISOL_SEGRE_HPP
#define RICCISOL_SEGRE_HPP

#include "riccisol/poly.hpp"
#include "riccisol/roots.hpp"

namespace riccisol {

/// Causal position of a block in the bracketed symbol. Spacelike size-1
/// blocks render before the comma; everything else (timelike size-1
/// blocks, size >= 2 blocks, complex pairs) renders after it.
enum class Causal { Spacelike, Timelike, Null, Pair };

struct SegreBlock {
  int size = 1;
  enum class EigenKind { Rational, RealIrrational, ComplexPair, Numeric } kind = EigenKind::Rational;
  Rational eigen;                    // Rational kind
  IsolatingInterval interval{};      // RealIrrational kind
  Poly min_factor;                   // the irreducible factor the eigenvalue satisfies
  double approx_re = 0, approx_im = 0; // Numeric kind (documented fallback)
  int group = 0;                     // blocks with equal eigenvalues share a group id
  Causal causal = Causal::Spacelike;
};

/// Metric-adapted Jordan structure of a g-self-adjoint operator, plus its
/// rendering in the bracketed table notation, e.g. "[111,1]" or
/// "[(1,12)]"; complex-pair blocks carry a combining macron (U+0304).
struct SegreSymbol {
  std::vector<SegreBlock> blocks;
  std::string rendering;
  bool numeric_fallback = false; // an irreducible factor of degree > 2 was
                                 // handled with 64-bit roots (grouping tol 1e-9)
  int spacelike_count() const;
};

/// Classifies Q with respect to g. Preconditions: g nondegenerate and gQ
/// symmetric (Q is g-self-adjoint); throws std::invalid_argument otherwise.
SegreSymbol segre_type(const QMatrix& Q, const QMatrix& g);

/// True iff some eigenvalue carries more than one block.
bool is_degenerate(const SegreSymbol& sym);

/// String-level symbol parser. Parsing is lossless: render(parse(s)) == s
/// byte-exactly for every table string, including the oddly bracketed
/// ones; well_formed marks the strings that also carry a clean structure.
struct ParsedSegre {
  std::string text;
  std::vector<std::string> lexemes; // lossless tokenization of text
  bool well_formed = false;
  struct Group {
    bool parenthesized = false;
    int digit_count = 0; // block tokens inside
  };
  std::vector<Group> groups;
};

ParsedSegre parse_segre(const std::string& text);
std::string render_segre(const ParsedSegre& parsed);
/// Degeneracy read off a printed string: some parenthesized group holds
/// more than one block.
bool is_degenerate(const ParsedSegre& parsed);

/// UTF-8 combining macron used for complex-pair block tokens.
extern const char* const kBarMark;

} // namespace riccisol

#endif
