#ifndef DUVAL_SYMBOL_HPP
#define DUVAL_SYMBOL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace duval {

// Formal symbols (lambda, t, a, t1, ...) are interned into a global table.
// Ids give the fixed total order used for canonical forms; names are only
// needed for printing.  Interning is thread-safe; all lookups after that
// are lock-free reads of immutable entries.
using Symbol = std::uint32_t;

Symbol intern_symbol(const std::string& name);
const std::string& symbol_name(Symbol s);
// The distinguished symbol carrying the surface modulus.
Symbol lambda_symbol();

// Sparse exponent vector of a monomial in formal symbols.  Entries are
// (symbol, nonzero exponent), sorted by symbol id; exponents may be
// negative (Laurent).
using SymExp = std::vector<std::pair<Symbol, int>>;

SymExp sym_exp_mul(const SymExp& a, const SymExp& b);
SymExp sym_exp_neg(const SymExp& a);
long sym_exp_total_degree(const SymExp& a);
int sym_exp_get(const SymExp& a, Symbol s);
// Graded-lex comparison; returns true when a < b.
bool sym_exp_grlex_less(const SymExp& a, const SymExp& b);

struct SymExpGrlexLess {
    bool operator()(const SymExp& a, const SymExp& b) const { return sym_exp_grlex_less(a, b); }
};

std::string sym_exp_str(const SymExp& a);

}  // namespace duval

#endif
