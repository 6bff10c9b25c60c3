#include "gstruct/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "gstruct/exactla.hpp"

namespace gstruct {

namespace {

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

void add_term(std::vector<std::pair<std::size_t, Rational>>& entry, std::size_t k,
              const Rational& c) {
  auto it = std::find_if(entry.begin(), entry.end(), [k](const auto& p) { return p.first == k; });
  if (it == entry.end()) {
    entry.emplace_back(k, c);
  } else {
    it->second += c;
    if (it->second == 0) entry.erase(it);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits "(a,b,c)" into slots; throws on missing parentheses.
std::vector<std::string_view> split_slots(std::string_view spec) {
  spec = trim(spec);
  if (spec.size() < 2 || spec.front() != '(' || spec.back() != ')') {
    throw ParseError("expected '(t1,...,tm)', got '" + std::string(spec) + "'");
  }
  spec = spec.substr(1, spec.size() - 2);
  std::vector<std::string_view> slots;
  std::size_t start = 0;
  for (std::size_t pos = 0; pos <= spec.size(); ++pos) {
    if (pos == spec.size() || spec[pos] == ',') {
      slots.push_back(trim(spec.substr(start, pos - start)));
      start = pos + 1;
    }
  }
  return slots;
}

/// Splits a slot into signed terms: "-12+34" -> {(-1,"12"), (+1,"34")}.
std::vector<std::pair<int, std::string_view>> split_terms(std::string_view slot) {
  std::vector<std::pair<int, std::string_view>> terms;
  std::size_t pos = 0;
  int sign = 1;
  bool expect_term = true;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view t = trim(slot.substr(start, end - start));
    if (t.empty()) throw ParseError("empty term in '" + std::string(slot) + "'");
    terms.emplace_back(sign, t);
  };
  for (; pos < slot.size(); ++pos) {
    const char ch = slot[pos];
    if (ch == '+' || ch == '-') {
      if (expect_term) {
        if (!terms.empty() || pos != 0 || ch == '+') {
          throw ParseError("misplaced sign in '" + std::string(slot) + "'");
        }
        sign = -1;
        start = pos + 1;
        continue;
      }
      flush(pos);
      sign = ch == '-' ? -1 : 1;
      start = pos + 1;
      expect_term = true;
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      expect_term = false;
    }
  }
  if (expect_term) throw ParseError("dangling sign in '" + std::string(slot) + "'");
  flush(slot.size());
  return terms;
}

std::size_t parse_index(char ch, std::size_t m, std::string_view context) {
  if (!std::isdigit(static_cast<unsigned char>(ch))) {
    throw ParseError("malformed token '" + std::string(context) + "'");
  }
  const std::size_t idx = static_cast<std::size_t>(ch - '0');
  if (idx == 0 || idx > m) {
    throw ParseError("index " + std::string(1, ch) + " out of range 1.." + std::to_string(m) +
                     " in '" + std::string(context) + "'");
  }
  return idx - 1;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(labels.empty() ? default_labels(dim) : std::move(labels)),
      table_(dim * dim) {
  if (labels_.size() != dim_) throw DimensionError("label count does not match dimension");
}

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<BracketTerm>& terms,
                       std::vector<std::string> labels)
    : LieAlgebra(dim, std::move(labels)) {
  for (const auto& t : terms) {
    if (t.i >= dim_ || t.j >= dim_ || t.k >= dim_) {
      throw DimensionError("bracket term index out of range");
    }
    if (t.i == t.j) {
      if (t.coeff != 0) throw ValidationError("[e_i, e_i] must vanish");
      continue;
    }
    add_term(table_[t.i * dim_ + t.j], t.k, t.coeff);
    add_term(table_[t.j * dim_ + t.i], t.k, -t.coeff);
  }
  for (auto& entry : table_) std::sort(entry.begin(), entry.end());
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : basis_bracket(i, j))
    if (kk == k) return c;
  return 0;
}

std::vector<BracketTerm> LieAlgebra::nonzero_terms() const {
  std::vector<BracketTerm> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (const auto& [k, c] : basis_bracket(i, j)) out.push_back({i, j, k, c});
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& e) { return e.empty(); });
}

Vec bracket_eval(const LieAlgebra& L, const Vec& x, const Vec& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("bracket of vectors of length " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in a " + std::to_string(n) +
                         "-dimensional algebra");
  }
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const auto& entry = L.basis_bracket(i, j);
      if (entry.empty()) continue;
      const Rational w = x[i] * y[j];
      for (const auto& [k, c] : entry) out[k] += w * c;
    }
  }
  return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<JacobiViolation> violations;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec x = unit_vector(n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec y = unit_vector(n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec z = unit_vector(n, k);
        Vec sum = bracket_eval(L, x, bracket_eval(L, y, z));
        sum = add(sum, bracket_eval(L, y, bracket_eval(L, z, x)));
        sum = add(sum, bracket_eval(L, z, bracket_eval(L, x, y)));
        if (!is_zero(sum)) violations.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return violations;
}

const LieAlgebra& require_jacobi(const LieAlgebra& L) {
  auto violations = jacobi_check(L);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw JacobiError("Jacobi identity fails on (" + L.labels()[v.i] + ", " + L.labels()[v.j] +
                          ", " + L.labels()[v.k] + "): " + to_string(v.value),
                      v);
  }
  return L;
}

LieAlgebra parse_salamon(std::string_view spec) {
  const auto slots = split_slots(spec);
  const std::size_t m = slots.size();
  if (m > 9) throw ParseError("Salamon notation supports at most 9 dimensions");
  std::vector<BracketTerm> terms;
  for (std::size_t slot = 0; slot < m; ++slot) {
    const std::string_view text = slots[slot];
    if (text.empty()) throw ParseError("empty slot " + std::to_string(slot + 1));
    if (text == "0") continue;
    for (const auto& [sgn, token] : split_terms(text)) {
      if (token.size() != 2) throw ParseError("malformed token '" + std::string(token) + "'");
      const std::size_t j = parse_index(token[0], m, token);
      const std::size_t k = parse_index(token[1], m, token);
      if (j == k) throw ParseError("repeated index in '" + std::string(token) + "'");
      terms.push_back({j, k, slot, Rational(sgn)});
    }
  }
  LieAlgebra L(m, terms);
  require_jacobi(L);
  return L;
}

std::string to_salamon(const LieAlgebra& L) {
  const std::size_t m = L.dim();
  if (m > 9) throw ValidationError("Salamon notation supports at most 9 dimensions");
  std::vector<std::string> slots(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (const auto& [k, c] : L.basis_bracket(i, j)) {
        if (c != 1 && c != -1) {
          throw ValidationError("structure constant " + to_string(c) +
                                " is not expressible in Salamon notation");
        }
        std::string& s = slots[k];
        if (c == -1) {
          s += "-";
        } else if (!s.empty()) {
          s += "+";
        }
        s += std::to_string(i + 1) + std::to_string(j + 1);
      }
    }
  }
  std::string out = "(";
  for (std::size_t k = 0; k < m; ++k) {
    if (k) out += ",";
    out += slots[k].empty() ? "0" : slots[k];
  }
  return out + ")";
}

LieAlgebra cotangent_algebra(const LieAlgebra& L) {
  const std::size_t m = L.dim();
  std::vector<BracketTerm> terms;
  std::vector<std::string> labels = L.labels();
  for (std::size_t i = 0; i < m; ++i) labels.push_back(L.labels()[i] + "*");
  for (const auto& t : L.nonzero_terms()) {
    // [e_i, e_j] = c e_k  in g
    terms.push_back({t.i, t.j, t.k, t.coeff});
    // [e_a, e_k*] = -sum_l c^k_{al} e_l*: c^k_{ij} contributes [e_i, e_k*] -= c e_j*
    // and, through c^k_{ji} = -c, [e_j, e_k*] += c e_i*.
    terms.push_back({t.i, m + t.k, m + t.j, -t.coeff});
    terms.push_back({t.j, m + t.k, m + t.i, t.coeff});
  }
  LieAlgebra T(2 * m, terms, std::move(labels));
  require_jacobi(T);
  return T;
}

SubalgebraResult subalgebra_check(const LieAlgebra& L, const std::vector<Vec>& span) {
  for (const auto& v : span) {
    if (v.size() != L.dim()) throw DimensionError("span vector has wrong length");
  }
  if (span_rank(span) != span.size()) {
    throw ValidationError("subalgebra_check: span vectors are linearly dependent");
  }
  SubalgebraResult result;
  if (span.empty()) return result;
  const RMatrix basis = from_columns(span);
  for (std::size_t a = 0; a < span.size(); ++a) {
    for (std::size_t b = a + 1; b < span.size(); ++b) {
      Vec br = bracket_eval(L, span[a], span[b]);
      if (in_span(span, br)) continue;
      // Residual: the bracket reduced against the echelon rows of the span.
      const auto e = rref(basis.transpose());
      Vec residual = br;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Rational f = residual[e.pivots[r]];
        if (f == 0) continue;
        for (std::size_t i = 0; i < L.dim(); ++i) residual[i] -= f * e.reduced(r, i);
      }
      result.closed = false;
      result.witness = SubalgebraWitness{a, b, std::move(br), std::move(residual)};
      return result;
    }
  }
  return result;
}

std::vector<DualBracket> mixed_brackets(const LieAlgebra& cotangent, std::size_t m) {
  if (cotangent.dim() != 2 * m) throw DimensionError("not a cotangent algebra of dimension 2m");
  std::vector<DualBracket> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [k, c] : cotangent.basis_bracket(i, m + j)) {
        if (k < m) throw ValidationError("mixed bracket leaves the dual ideal");
        out.push_back({i, j, c, k - m});
      }
  std::sort(out.begin(), out.end(), [](const DualBracket& a, const DualBracket& b) {
    return std::tie(a.i, a.j, a.l) < std::tie(b.i, b.j, b.l);
  });
  return out;
}

std::vector<DualBracket> parse_dual_table(std::string_view table, std::size_t m) {
  const auto slots = split_slots(table);
  if (slots.size() != m) {
    throw ParseError("dual table has " + std::to_string(slots.size()) + " slots, expected " +
                     std::to_string(m));
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> acc;
  for (std::size_t l = 0; l < m; ++l) {
    if (slots[l].empty()) throw ParseError("empty slot " + std::to_string(l + 1));
    if (slots[l] == "0") continue;
    for (const auto& [sgn, token] : split_terms(slots[l])) {
      if (token.size() != 3) throw ParseError("malformed token '" + std::string(token) + "'");
      if (token[2] == '*') {
        // "ab*": [e_a, e_b*] = e_l*
        const std::size_t a = parse_index(token[0], m, token);
        const std::size_t b = parse_index(token[1], m, token);
        acc[{a, b, l}] += sgn;
      } else if (token[1] == '*') {
        // "a*b": [e_a*, e_b] = e_l*, i.e. [e_b, e_a*] = -e_l*
        const std::size_t a = parse_index(token[0], m, token);
        const std::size_t b = parse_index(token[2], m, token);
        acc[{b, a, l}] -= sgn;
      } else {
        throw ParseError("malformed token '" + std::string(token) + "'");
      }
    }
  }
  std::vector<DualBracket> out;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    const auto [i, j, l] = key;
    out.push_back({i, j, c, l});
  }
  return out;
}

}  // namespace gstruct
