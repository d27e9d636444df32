#include "duval/symbol.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "duval/errors.hpp"

namespace duval {

namespace {

struct SymbolTable {
    std::mutex mu;
    std::vector<std::string> names;
    std::map<std::string, Symbol> index;
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

Symbol intern_symbol(const std::string& name) {
    if (name.empty()) throw Error("empty symbol name");
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.index.find(name);
    if (it != t.index.end()) return it->second;
    const Symbol id = static_cast<Symbol>(t.names.size());
    t.names.push_back(name);
    t.index.emplace(name, id);
    return id;
}

const std::string& symbol_name(Symbol s) {
    auto& t = table();
    std::lock_guard<std::mutex> lock(t.mu);
    if (s >= t.names.size()) throw Error("unknown symbol id");
    return t.names[s];
}

Symbol lambda_symbol() {
    static const Symbol s = intern_symbol("lambda");
    return s;
}

SymExp sym_exp_mul(const SymExp& a, const SymExp& b) {
    SymExp out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            const int e = a[i].second + b[j].second;
            if (e != 0) out.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

SymExp sym_exp_neg(const SymExp& a) {
    SymExp out = a;
    for (auto& [s, e] : out) e = -e;
    return out;
}

long sym_exp_total_degree(const SymExp& a) {
    long d = 0;
    for (const auto& [s, e] : a) d += e;
    return d;
}

int sym_exp_get(const SymExp& a, Symbol s) {
    for (const auto& [sym, e] : a)
        if (sym == s) return e;
    return 0;
}

bool sym_exp_grlex_less(const SymExp& a, const SymExp& b) {
    const long da = sym_exp_total_degree(a);
    const long db = sym_exp_total_degree(b);
    if (da != db) return da < db;
    // Lex on (symbol, exponent) walking both sparse vectors in id order;
    // for a shared symbol the larger exponent wins, a symbol missing on one
    // side counts as exponent 0 there.
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Symbol sa = i < a.size() ? a[i].first : std::numeric_limits<Symbol>::max();
        Symbol sb = j < b.size() ? b[j].first : std::numeric_limits<Symbol>::max();
        const Symbol s = std::min(sa, sb);
        const int ea = (sa == s) ? a[i].second : 0;
        const int eb = (sb == s) ? b[j].second : 0;
        if (ea != eb) return ea < eb;
        if (sa == s) ++i;
        if (sb == s) ++j;
    }
    return false;
}

std::string sym_exp_str(const SymExp& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, e] : a) {
        if (!first) os << "*";
        first = false;
        os << symbol_name(s);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace duval
