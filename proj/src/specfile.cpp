#include "specfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace fp {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;
  size_t col_base;  // offset of this value within its line, for error columns

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    throw Error(Errc::parse, "line " + std::to_string(line) + ", col " +
                                 std::to_string(col_base + at + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  unsigned long read_uint(const std::string& what) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected " + what, start);
    if (pos - start > 18) fail(what + " too large", start);
    return std::stoul(s.substr(start, pos - start));
  }
};

// term := coeff ['*' factors] | factors ; factor := ('x'|'y') idx ['^' exp]
// A bare coefficient is a constant term; it parses fine and is rejected later
// by the reduction stage (unit ideal).
Term parse_term(Cursor& c, const VariableContext& ctx, long max_degree) {
  Scalar coeff(1);
  Monomial mono(ctx.total());
  bool saw_factor = false, saw_coeff = false;

  c.skip_ws();
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    saw_coeff = true;
    unsigned long num = c.read_uint("coefficient");
    if (c.eat('/')) {
      unsigned long den = c.read_uint("denominator");
      if (den == 0) c.fail("zero denominator", c.pos - 1);
      coeff = Scalar(Integer(num), Integer(den));
    } else {
      coeff = Scalar(Integer(num));
    }
  }

  while (true) {
    c.skip_ws();
    if (saw_coeff || saw_factor) {
      size_t save = c.pos;
      if (!c.eat('*')) {
        // juxtaposition like "2x1" is accepted; anything else ends the term
        char ch = c.peek();
        if (ch != 'x' && ch != 'y') break;
        c.pos = save;
      }
    }
    char ch = c.peek();
    if (ch != 'x' && ch != 'y') {
      if (saw_factor || saw_coeff) c.fail("expected variable after '*'", c.pos);
      c.fail("expected term", c.pos);
    }
    size_t vstart = c.pos;
    ++c.pos;
    unsigned long idx = c.read_uint("variable index");
    int v;
    if (ch == 'x') {
      if (idx < 1 || idx > static_cast<unsigned long>(ctx.n))
        c.fail("variable x" + std::to_string(idx) + " out of range (xvars: " +
                   std::to_string(ctx.n) + ")",
               vstart);
      v = static_cast<int>(idx) - 1;
    } else {
      if (idx < 1 || idx > static_cast<unsigned long>(ctx.nprime))
        c.fail("variable y" + std::to_string(idx) + " out of range (yvars: " +
                   std::to_string(ctx.nprime) + ")",
               vstart);
      v = ctx.n + static_cast<int>(idx) - 1;
    }
    unsigned long e = 1;
    if (c.eat('^')) e = c.read_uint("exponent");
    mono.set_exp(v, mono.exp(v) + static_cast<uint32_t>(e));
    if (mono.degree() > max_degree)
      c.fail("term degree exceeds limit " + std::to_string(max_degree), vstart);
    saw_factor = true;
  }
  return {coeff, mono};
}

Polynomial parse_generator(Cursor& c, const VariableContext& ctx, long max_degree) {
  std::vector<Term> terms;
  bool negate = false;
  if (c.eat('-'))
    negate = true;
  else
    c.eat('+');
  while (true) {
    Term t = parse_term(c, ctx, max_degree);
    if (negate) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    c.skip_ws();
    if (c.eat('+'))
      negate = false;
    else if (c.eat('-'))
      negate = true;
    else
      break;
  }
  if (!c.done()) c.fail("unexpected character", c.pos);
  return Polynomial::from_terms(std::move(terms), ctx.field);
}

std::vector<Polynomial> parse_generator_list(const std::string& value, int line,
                                             size_t col_base, const VariableContext& ctx,
                                             bool x_side, long max_degree) {
  std::vector<Polynomial> gens;
  size_t start = 0;
  while (start <= value.size()) {
    size_t end = value.find(';', start);
    std::string piece = value.substr(start, end == std::string::npos ? std::string::npos
                                                                     : end - start);
    bool blank = piece.find_first_not_of(" \t") == std::string::npos;
    if (!blank) {
      Cursor c{piece, 0, line, col_base + start};
      Polynomial g = parse_generator(c, ctx, max_degree);
      for (const auto& t : g.terms()) {
        for (int v = 0; v < ctx.total(); ++v) {
          if (!t.mono.involves(v)) continue;
          if (x_side && !ctx.is_x(v))
            c.fail("generator of I mentions " + ctx.var_name(v), 0);
          if (!x_side && ctx.is_x(v))
            c.fail("generator of I' mentions " + ctx.var_name(v), 0);
        }
      }
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return gens;
}

std::vector<Integer> parse_betti_override(const std::string& value, int line,
                                          size_t col_base, const std::string& key) {
  Cursor c{value, 0, line, col_base};
  std::vector<Integer> seq;
  while (true) {
    unsigned long v = c.read_uint("Betti number");
    seq.emplace_back(v);
    if (!c.eat(',')) break;
  }
  if (!c.done()) c.fail("unexpected character", c.pos);
  if (seq.empty() || seq[0] != 1)
    c.fail(key + " must start with 1", 0);
  while (seq.size() > 1 && seq.back() == 0) seq.pop_back();
  return seq;
}

}  // namespace

ParsedSpec parse_ideal_spec(const std::string& text, const ParseOptions& opts) {
  struct Entry {
    std::string value;
    int line;
    size_t col;
  };
  std::map<std::string, Entry> entries;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos
                                                                 : eol - pos);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') {
      size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::parse,
                    "line " + std::to_string(lineno) + ": expected 'key: value'");
      std::string key = line.substr(first, colon - first);
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
      static const char* known[] = {"xvars", "yvars", "field", "I", "I'", "betti_J", "betti_J'"};
      if (std::find_if(std::begin(known), std::end(known),
                       [&](const char* k) { return key == k; }) == std::end(known))
        throw Error(Errc::parse, "line " + std::to_string(lineno) + ": unknown key '" +
                                     key + "'");
      if (entries.count(key))
        throw Error(Errc::parse, "line " + std::to_string(lineno) + ": duplicate key '" +
                                     key + "'");
      entries[key] = {line.substr(colon + 1), lineno, colon + 1};
    }
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }

  auto require = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) throw Error(Errc::parse, "missing required key '" + key + "'");
    return it->second;
  };
  auto read_count = [&](const std::string& key) {
    const Entry& e = require(key);
    Cursor c{e.value, 0, e.line, e.col};
    unsigned long v = c.read_uint(key);
    if (!c.done()) c.fail("unexpected character", c.pos);
    if (v < 1 || v > 64) c.fail(key + " must be between 1 and 64", 0);
    return static_cast<int>(v);
  };

  ParsedSpec spec;
  spec.ctx.n = read_count("xvars");
  spec.ctx.nprime = read_count("yvars");

  if (opts.field_override) {
    spec.ctx.field = *opts.field_override;
  } else if (auto it = entries.find("field"); it != entries.end()) {
    Cursor c{it->second.value, 0, it->second.line, it->second.col};
    c.skip_ws();
    std::string rest = it->second.value.substr(c.pos);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
    if (rest == "Q") {
      spec.ctx.field = Field::rationals();
    } else if (rest.rfind("GF", 0) == 0) {
      Cursor pc{rest, 2, it->second.line, it->second.col + c.pos};
      unsigned long p = pc.read_uint("characteristic");
      if (!pc.done()) pc.fail("unexpected character", pc.pos);
      spec.ctx.field = Field::gf(p);  // rejects non-prime
    } else {
      c.fail("field must be 'Q' or 'GF <prime>'", 0);
    }
  }

  const Entry& ei = require("I");
  spec.gens_I = parse_generator_list(ei.value, ei.line, ei.col, spec.ctx, true, opts.max_degree);
  const Entry& eip = require("I'");
  spec.gens_Iprime =
      parse_generator_list(eip.value, eip.line, eip.col, spec.ctx, false, opts.max_degree);

  if (auto it = entries.find("betti_J"); it != entries.end())
    spec.betti_J = parse_betti_override(it->second.value, it->second.line, it->second.col,
                                        "betti_J");
  if (auto it = entries.find("betti_J'"); it != entries.end())
    spec.betti_Jprime = parse_betti_override(it->second.value, it->second.line,
                                             it->second.col, "betti_J'");
  return spec;
}

std::string format_ideal_spec(const ParsedSpec& spec) {
  std::string out;
  out += "xvars: " + std::to_string(spec.ctx.n) + "\n";
  out += "yvars: " + std::to_string(spec.ctx.nprime) + "\n";
  out += "field: " + spec.ctx.field.str() + "\n";
  auto gen_line = [&](const char* key, const std::vector<Polynomial>& gens) {
    out += key;
    out += ":";
    for (size_t i = 0; i < gens.size(); ++i)
      out += (i == 0 ? " " : "; ") + gens[i].str(spec.ctx);
    out += "\n";
  };
  gen_line("I", spec.gens_I);
  gen_line("I'", spec.gens_Iprime);
  auto betti_line = [&](const char* key, const std::optional<std::vector<Integer>>& b) {
    if (!b) return;
    out += key;
    out += ": ";
    for (size_t i = 0; i < b->size(); ++i) out += (i ? "," : "") + (*b)[i].get_str();
    out += "\n";
  };
  betti_line("betti_J", spec.betti_J);
  betti_line("betti_J'", spec.betti_Jprime);
  return out;
}

Field parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.rfind("gf:", 0) == 0 || s.rfind("GF:", 0) == 0) {
    std::string num = s.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 18)
      throw Error(Errc::parse, "bad --field value '" + s + "'");
    return Field::gf(std::stoul(num));
  }
  throw Error(Errc::parse, "bad --field value '" + s + "' (expected q or gf:<prime>)");
}

}  // namespace fp
