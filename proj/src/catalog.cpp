#include "filicheck/catalog.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace filicheck {

namespace {

struct Term {
  long coef;
  std::size_t k;  // 1-based
};

struct BracketSpec {
  std::size_t i, j;  // 1-based
  std::vector<Term> terms;
};

LieAlgebra from_table(std::size_t n, std::vector<std::string> labels, const std::vector<BracketSpec>& table) {
  LieAlgebra alg(Field::Q, StructureTensor(n), std::move(labels));
  for (const auto& b : table) {
    Vector v(n);
    for (const auto& t : b.terms) v[t.k - 1] += Scalar(t.coef);
    alg.set_bracket(b.i - 1, b.j - 1, v);
  }
  return alg;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t count, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::vector<std::string> xy_labels(std::size_t half) {
  auto out = numbered("X", half);
  auto ys = numbered("Y", half);
  out.insert(out.end(), ys.begin(), ys.end());
  return out;
}

LieAlgebra heisenberg3() { return from_table(3, numbered("X", 3), {{1, 2, {{1, 3}}}}); }

// Basis order (X1, X2, X3, Y1, Y2, Y3).
LieAlgebra g6_2() {
  return from_table(6, xy_labels(3),
                    {
                        {2, 3, {{1, 1}}},   // [X2,X3] = X1
                        {5, 6, {{-1, 1}}},  // [Y2,Y3] = -X1
                        {2, 6, {{1, 4}}},   // [X2,Y3] = Y1
                        {5, 3, {{1, 4}}},   // [Y2,X3] = Y1
                    });
}

// Basis order (X1..X4, Y1..Y4): Xl -> l, Yl -> l + 4.
LieAlgebra g8_3() {
  return from_table(8, xy_labels(4),
                    {
                        {2, 4, {{1, 1}}},
                        {6, 8, {{-1, 1}}},
                        {2, 8, {{1, 5}}},
                        {6, 4, {{1, 5}}},
                        {3, 4, {{1, 2}}},
                        {7, 8, {{-1, 2}}},
                        {3, 8, {{1, 6}}},
                        {7, 4, {{1, 6}}},
                    });
}

LieAlgebra g8_4() {
  return from_table(8, xy_labels(4),
                    {
                        {2, 3, {{1, 1}}},
                        {6, 7, {{-1, 1}}},
                        {2, 7, {{1, 5}}},
                        {6, 3, {{1, 5}}},
                        {2, 4, {{1, 5}}},
                        {6, 8, {{-1, 5}}},
                        {2, 8, {{-1, 1}}},
                        {6, 4, {{-1, 1}}},
                    });
}

LieAlgebra r2_2() { return from_table(2, numbered("X", 2), {{1, 2, {{1, 1}}}}); }

LieAlgebra r4_2() {
  return from_table(4, numbered("X", 4),
                    {
                        {1, 3, {{1, 3}}},
                        {1, 4, {{1, 4}}},
                        {2, 3, {{-1, 4}}},
                        {2, 4, {{1, 3}}},
                    });
}

LieAlgebra relabel(const LieAlgebra& alg, std::vector<std::string> labels) {
  return LieAlgebra(alg.field(), alg.tensor(), std::move(labels));
}

std::optional<std::size_t> numeric_suffix(std::string_view key, std::string_view prefix) {
  if (key.substr(0, prefix.size()) != prefix || key.size() == prefix.size()) return std::nullopt;
  std::size_t n = 0;
  auto rest = key.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return n;
}

std::string ones(std::size_t n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n; ++i) s += i ? ",1" : "1";
  return s + ")";
}

}  // namespace

LieAlgebra model_filiform(std::size_t n) {
  if (n < 2) throw DimensionMismatch("model filiform algebra needs n >= 2");
  std::vector<BracketSpec> table;
  for (std::size_t i = 2; i + 1 <= n; ++i) table.push_back({1, i, {{1, i + 1}}});
  return from_table(n, numbered("X", n), table);
}

LieAlgebra builtin_algebra(std::string_view key) {
  if (auto n = numeric_suffix(key, "abelian"); n && *n >= 1)
    return LieAlgebra(Field::Q, StructureTensor(*n), numbered("X", *n));
  if (auto n = numeric_suffix(key, "L"); n && *n >= 2) return model_filiform(*n);
  static const std::map<std::string_view, std::string_view> kAliases{
      {"g2_1", "abelian2"}, {"g4_1", "abelian4"}, {"g6_1", "abelian6"}, {"g8_1", "abelian8"}, {"r4_1", "abelian4"}};
  if (auto it = kAliases.find(key); it != kAliases.end()) return builtin_algebra(it->second);
  if (key == "h3") return heisenberg3();
  if (key == "h3+h3") return relabel(direct_sum(heisenberg3(), heisenberg3()), numbered("X", 6));
  if (key == "g6_2") return g6_2();
  if (key == "g8_2") {
    auto labels = xy_labels(3);
    labels.push_back("Z1");
    labels.push_back("Z2");
    return relabel(direct_sum(g6_2(), LieAlgebra::abelian(2)), labels);
  }
  if (key == "g8_3") return g8_3();
  if (key == "g8_4") return g8_4();
  if (key == "r2_2") return r2_2();
  if (key == "r2_2+r2_2") return relabel(direct_sum(r2_2(), r2_2()), numbered("X", 4));
  if (key == "r4_2") return r4_2();
  throw Error("unknown builtin algebra '" + std::string(key) + "'");
}

CatalogEntry builtin(std::string_view key) {
  CatalogEntry e;
  e.key = std::string(key);
  e.algebra = builtin_algebra(key);
  const std::size_t n = e.algebra.dim();
  auto& x = e.expected;
  if (auto an = numeric_suffix(key, "abelian"); an || key == "g2_1" || key == "g4_1" || key == "g6_1" ||
                                                key == "g8_1" || key == "r4_1") {
    e.provenance = "abelian algebra (classification list, dimensions 2 to 8)";
    x = {{"nilpotent", "true"}, {"filiform", "false"}, {"central_series", "(" + std::to_string(n) + ",0)"},
         {"char_sequence", ones(n)}};
    if (n % 2 == 0) x["bi_invariant"] = "Exists";
    return e;
  }
  if (auto ln = numeric_suffix(key, "L")) {
    e.provenance = "model filiform algebra L_n";
    std::string series = "(";
    for (std::size_t i = 0; i < n; ++i) series += std::to_string(i == 0 ? n : n - i - 1) + (i + 1 < n ? "," : "");
    series += ")";
    x = {{"nilpotent", "true"},
         {"filiform", n >= 3 ? "true" : "false"},
         {"central_series", series},
         {"char_sequence", "(" + std::to_string(n - 1) + ",1)"}};
    if (n % 2 == 0 && n >= 4) {
      x["bi_invariant"] = "NotExists";
      x["invariant"] = "NotExists";
    }
    return e;
  }
  if (key == "h3") {
    e.provenance = "Heisenberg algebra h3";
    x = {{"nilpotent", "true"}, {"filiform", "true"}, {"central_series", "(3,1,0)"}, {"char_sequence", "(2,1)"}};
  } else if (key == "h3+h3") {
    e.provenance = "h3 + h3, no bi-invariant structure";
    x = {{"nilpotent", "true"},
         {"filiform", "false"},
         {"central_series", "(6,2,0)"},
         {"char_sequence", "(2,2,1,1)"},
         {"bi_invariant", "NotExists"}};
  } else if (key == "g6_2") {
    e.provenance = "g6^2, dimension 6 classification";
    x = {{"nilpotent", "true"},
         {"filiform", "false"},
         {"central_series", "(6,2,0)"},
         {"char_sequence", "(2,2,1,1)"},
         {"bi_invariant", "Exists"}};
  } else if (key == "g8_2") {
    e.provenance = "g8^2 = g6^2 + g2^1";
    x = {{"nilpotent", "true"},
         {"filiform", "false"},
         {"central_series", "(8,2,0)"},
         {"char_sequence", "(2,2,1,1,1,1)"},
         {"bi_invariant", "Exists"}};
  } else if (key == "g8_3") {
    e.provenance = "g8^3, dimension 8 classification";
    x = {{"nilpotent", "true"},
         {"filiform", "false"},
         {"central_series", "(8,4,2,0)"},
         {"char_sequence", "(3,3,1,1)"},
         {"bi_invariant", "Exists"}};
  } else if (key == "g8_4") {
    e.provenance = "g8^4, dimension 8 classification";
    x = {{"nilpotent", "true"},
         {"filiform", "false"},
         {"central_series", "(8,2,0)"},
         {"char_sequence", "(2,2,1,1,1,1)"},
         {"bi_invariant", "Exists"}};
  } else if (key == "r2_2") {
    e.provenance = "r2^2, non-nilpotent solvable dimension 2";
    x = {{"nilpotent", "false"}, {"central_series", "(2,1)"}, {"bi_invariant", "NotExists"}};
  } else if (key == "r2_2+r2_2") {
    e.provenance = "r2^2 x r2^2, same complexification as r4^2";
    x = {{"nilpotent", "false"}, {"central_series", "(4,2)"}, {"bi_invariant", "NotExists"}};
  } else if (key == "r4_2") {
    e.provenance = "r4^2, four-dimensional solvable with bi-invariant structures";
    x = {{"nilpotent", "false"}, {"central_series", "(4,2)"}, {"bi_invariant", "Exists"}};
  }
  return e;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const char* key : {"abelian2", "abelian4", "abelian6", "abelian8", "h3", "h3+h3", "g6_2", "g8_2", "g8_3",
                          "g8_4", "r2_2", "r2_2+r2_2", "r4_2", "L3", "L4", "L5", "L6", "L7", "L8"})
    out.push_back(builtin(key));
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::optional<mpq_class> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (s[k] >= '0' && s[k] <= '9') {
      seen_digit = true;
    } else if (s[k] == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
      seen_slash = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  std::string str(s[0] == '+' ? s.substr(1) : s);
  mpq_class q;
  if (q.set_str(str, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::optional<Scalar> parse_scalar(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto q = parse_rational(s);
    if (!q) return std::nullopt;
    return Scalar(*q);
  }
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading: "re+imi" / "re-imi"; otherwise purely imaginary.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  mpq_class re = 0;
  std::string_view im_part = body;
  if (split != std::string_view::npos) {
    auto r = parse_rational(body.substr(0, split));
    if (!r) return std::nullopt;
    re = *r;
    im_part = body.substr(split);
  }
  mpq_class im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    auto q = parse_rational(im_part);
    if (!q) return std::nullopt;
    im = *q;
  }
  return Scalar(re, im);
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text, const ParseOptions& opts) {
  std::optional<std::size_t> dim;
  Field field = Field::Q;
  bool field_seen = false;
  std::vector<std::string> labels;
  // (i, j) with i != j in the order given -> vector and the line it came from.
  struct Given {
    Vector v;
    std::size_t line;
  };
  std::map<std::pair<std::size_t, std::size_t>, Given> given;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& head = toks[0].text;
    auto fail = [&](const std::string& what, std::size_t tok) -> ParseError {
      const std::size_t col = tok < toks.size() ? toks[tok].column : line.size() + 1;
      return ParseError(what, line_no, col);
    };
    if (head == "dim") {
      if (dim) throw fail("duplicate dim header", 0);
      if (toks.size() != 2) throw fail("expected 'dim <n>'", toks.size() < 2 ? 1 : 2);
      auto n = parse_index(toks[1].text);
      if (!n || *n == 0 || *n > kMaxDim) throw fail("dimension must be an integer in 1.." + std::to_string(kMaxDim), 1);
      dim = *n;
    } else if (head == "field") {
      if (field_seen) throw fail("duplicate field header", 0);
      if (toks.size() != 2 || (toks[1].text != "Q" && toks[1].text != "Qi"))
        throw fail("expected 'field Q' or 'field Qi'", toks.size() < 2 ? 1 : 1);
      if (!given.empty()) throw fail("field must precede bracket lines", 0);
      field = toks[1].text == "Q" ? Field::Q : Field::Qi;
      field_seen = true;
    } else if (head == "labels") {
      if (!dim) throw fail("labels before dim", 0);
      if (toks.size() != *dim + 1) throw fail("expected " + std::to_string(*dim) + " labels", toks.size());
      labels.clear();
      for (std::size_t t = 1; t < toks.size(); ++t) labels.push_back(toks[t].text);
    } else if (head == "bracket") {
      if (!dim) throw fail("bracket before dim", 0);
      const std::size_t n = *dim;
      if (toks.size() < 4 || toks[3].text != ":") throw fail("expected 'bracket <i> <j> : <coef> e<k> ...'", std::min<std::size_t>(toks.size(), 3));
      auto i = parse_index(toks[1].text);
      auto j = parse_index(toks[2].text);
      if (!i || *i < 1 || *i > n) throw fail("bracket index out of range", 1);
      if (!j || *j < 1 || *j > n) throw fail("bracket index out of range", 2);
      if ((toks.size() - 4) % 2 != 0) throw fail("terms come in '<coef> e<k>' pairs", toks.size() - 1);
      Vector v(n);
      for (std::size_t t = 4; t < toks.size(); t += 2) {
        auto c = parse_scalar(toks[t].text);
        if (!c) throw fail("bad coefficient '" + toks[t].text + "'", t);
        if (field == Field::Q && !c->is_real()) throw fail("complex coefficient with field Q", t);
        const std::string& basis = toks[t + 1].text;
        if (basis.size() < 2 || basis[0] != 'e') throw fail("expected basis vector e<k>", t + 1);
        auto k = parse_index(std::string_view(basis).substr(1));
        if (!k || *k < 1 || *k > n) throw fail("basis index out of range", t + 1);
        v[*k - 1] += *c;
      }
      const std::size_t a = *i - 1, b = *j - 1;
      if (a == b) {
        if (!is_zero(v)) throw AntisymmetryConflict("[e_i, e_i] must be zero", line_no, toks[1].column);
        continue;
      }
      if (auto it = given.find({a, b}); it != given.end()) {
        if (it->second.v != v)
          throw AntisymmetryConflict("conflicts with line " + std::to_string(it->second.line), line_no, toks[0].column);
        continue;
      }
      if (auto it = given.find({b, a}); it != given.end()) {
        if (it->second.v != Scalar(-1) * v)
          throw AntisymmetryConflict("conflicts with line " + std::to_string(it->second.line) + " under antisymmetry",
                                     line_no, toks[0].column);
        continue;
      }
      given[{a, b}] = {v, line_no};
    } else {
      throw fail("unknown directive '" + head + "'", 0);
    }
    if (end == text.size()) break;
  }
  if (!dim) throw ParseError("missing 'dim' header", 1, 1);
  LieAlgebra alg(field, StructureTensor(*dim), labels);
  for (const auto& [ij, g] : given) alg.set_bracket(ij.first, ij.second, g.v);
  if (opts.check_jacobi) {
    const auto rep = validate(alg);
    if (!rep.jacobi.empty()) {
      const auto& q = rep.jacobi.front();
      throw JacobiFailure("Jacobi identity fails at (" + std::to_string(q.i + 1) + "," + std::to_string(q.j + 1) + "," +
                          std::to_string(q.k + 1) + "), component " + std::to_string(q.l + 1));
    }
  }
  return alg;
}

std::string serialize_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::ostringstream out;
  out << "dim " << n << "\n";
  out << "field " << to_string(alg.field()) << "\n";
  bool default_labels = true;
  for (std::size_t i = 0; i < n; ++i) default_labels = default_labels && alg.labels()[i] == "e" + std::to_string(i + 1);
  if (!default_labels) {
    out << "labels";
    for (const auto& l : alg.labels()) out << ' ' << l;
    out << "\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector v = alg.tensor().pair(i, j);
      if (is_zero(v)) continue;
      out << "bracket " << i + 1 << ' ' << j + 1 << " :";
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) out << ' ' << v[k].str() << " e" << k + 1;
      out << "\n";
    }
  return out.str();
}

}  // namespace filicheck
