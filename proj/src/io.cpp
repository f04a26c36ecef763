#include "lyat/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace lyat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool is_label(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

struct Entry {
  std::size_t line;
  char kind; // '[', '{' or '('
  std::vector<std::string> args;
  std::string rhs;
};

struct Parsed {
  bool leibniz = false;
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::vector<Entry> entries;
};

Parsed split_statements(std::string_view text) {
  Parsed p;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_statement = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const char c = line.front();
    if (c == '[' || c == '{' || c == '(') {
      const char close = c == '[' ? ']' : c == '{' ? '}' : ')';
      const auto closing = line.find(close);
      if (closing == std::string_view::npos) throw ParseError(line_no, std::string("missing '") + close + "'");
      const auto rest = trim(line.substr(closing + 1));
      if (rest.empty() || rest.front() != '=') throw ParseError(line_no, "expected '=' after product");
      Entry e{line_no, c, {}, std::string(trim(rest.substr(1)))};
      std::string inside(line.substr(1, closing - 1));
      std::istringstream is(inside);
      for (std::string arg; std::getline(is, arg, ',');) e.args.emplace_back(trim(arg));
      const std::size_t want = c == '{' ? 3 : 2;
      if (e.args.size() != want)
        throw ParseError(line_no, "expected " + std::to_string(want) + " arguments, got " + std::to_string(e.args.size()));
      if (e.rhs.empty()) throw ParseError(line_no, "empty right-hand side");
      p.entries.push_back(std::move(e));
    } else {
      auto w = words(line);
      if (w[0] == "leibniz") {
        if (seen_statement) throw ParseError(line_no, "'leibniz' must be the first statement");
        if (w.size() != 1) throw ParseError(line_no, "'leibniz' takes no arguments");
        p.leibniz = true;
      } else if (w[0] == "field") {
        if (p.field) throw ParseError(line_no, "field given twice");
        std::string name;
        for (std::size_t i = 1; i < w.size(); ++i) name += (i > 1 ? " " : "") + w[i];
        try {
          p.field = parse_field(name);
        } catch (const std::exception& ex) {
          throw ParseError(line_no, ex.what());
        }
      } else if (w[0] == "dim") {
        if (p.dim) throw ParseError(line_no, "dim given twice");
        if (w.size() != 2) throw ParseError(line_no, "usage: dim <n>");
        try {
          std::size_t used = 0;
          const long long v = std::stoll(w[1], &used);
          if (used != w[1].size() || v < 0) throw std::invalid_argument("");
          p.dim = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
          throw ParseError(line_no, "malformed dimension '" + w[1] + "'");
        }
      } else if (w[0] == "basis") {
        if (!p.labels.empty()) throw ParseError(line_no, "basis given twice");
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (!is_label(w[i])) throw ParseError(line_no, "invalid basis label '" + w[i] + "'");
          for (const auto& l : p.labels)
            if (l == w[i]) throw ParseError(line_no, "duplicate basis label '" + w[i] + "'");
          p.labels.push_back(w[i]);
        }
        if (p.labels.empty()) throw ParseError(line_no, "empty basis");
      } else {
        throw ParseError(line_no, "unknown statement '" + w[0] + "'");
      }
    }
    seen_statement = true;
    if (end == text.size()) break;
  }
  return p;
}

Element parse_combination(const std::string& rhs, const Field& f, const std::map<std::string, std::size_t>& index,
                          std::size_t line) {
  const std::size_t n = index.size();
  Element out = zero_vector(f, n);
  std::string s;
  for (char c : rhs)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError(line, "expected '+' or '-' in '" + rhs + "'");
    }
    first = false;
    Scalar coeff = f.one();
    bool has_number = false;
    std::size_t q = pos;
    while (q < s.size() && (std::isdigit(static_cast<unsigned char>(s[q])) || s[q] == '/')) ++q;
    if (q > pos) {
      try {
        coeff = f.parse(s.substr(pos, q - pos));
      } catch (const std::exception& ex) {
        throw ParseError(line, ex.what());
      }
      has_number = true;
      pos = q;
      if (pos < s.size() && s[pos] == '*') ++pos;
      else if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
        throw ParseError(line, "expected '*' after coefficient in '" + rhs + "'");
    }
    if (negative) coeff = -coeff;
    q = pos;
    while (q < s.size() && s[q] != '+' && s[q] != '-') ++q;
    const std::string label = s.substr(pos, q - pos);
    pos = q;
    if (label.empty()) {
      if (!has_number || !coeff.is_zero()) throw ParseError(line, "bare nonzero scalar in '" + rhs + "'");
      continue;
    }
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(line, "unknown basis label '" + label + "'");
    out[it->second] += coeff;
  }
  if (first) throw ParseError(line, "empty right-hand side");
  return out;
}

} // namespace

Field parse_field(std::string_view text) {
  text = trim(text);
  if (text.substr(0, 3) == "Fp " || text.substr(0, 3) == "Fp:") {
    std::string digits(trim(text.substr(3)));
    return Field::from_name("Fp:" + digits);
  }
  return Field::from_name(text);
}

LYAlgebra parse_algebra(std::string_view text, std::optional<Field> field_override) {
  Parsed p = split_statements(text);
  const Field field = field_override ? *field_override : p.field.value_or(Field::rationals());
  if (p.labels.empty()) {
    if (!p.dim) throw ParseError(1, "need a 'dim' or 'basis' statement");
    for (std::size_t i = 0; i < *p.dim; ++i) p.labels.push_back("e" + std::to_string(i));
  } else if (p.dim && *p.dim != p.labels.size()) {
    throw ParseError(1, "dim " + std::to_string(*p.dim) + " does not match " + std::to_string(p.labels.size()) +
                            " basis labels");
  }
  const std::size_t n = p.labels.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[p.labels[i]] = i;
  auto lookup = [&](const std::string& label, std::size_t line) {
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(line, "unknown basis label '" + label + "'");
    return it->second;
  };

  if (p.leibniz) {
    LeibnizTable table{field, p.labels, zero_vector(field, n * n * n)};
    std::vector<bool> set(n * n, false);
    for (const auto& e : p.entries) {
      if (e.kind != '(') throw ParseError(e.line, "a Leibniz table lists products as (a,b) = ...");
      const std::size_t i = lookup(e.args[0], e.line), j = lookup(e.args[1], e.line);
      const Element v = parse_combination(e.rhs, field, index, e.line);
      for (std::size_t k = 0; k < n; ++k) {
        Scalar& slot = table.products[(i * n + j) * n + k];
        if (set[i * n + j] && slot != v[k]) throw InvariantError("line " + std::to_string(e.line) + ": conflicting entry");
        slot = v[k];
      }
      set[i * n + j] = true;
    }
    return from_leibniz(table);
  }

  LYAlgebraBuilder builder(field, p.labels);
  for (const auto& e : p.entries) {
    if (e.kind == '(') throw ParseError(e.line, "(a,b) products need the 'leibniz' header");
    const Element v = parse_combination(e.rhs, field, index, e.line);
    try {
      if (e.kind == '[')
        builder.set_bracket(lookup(e.args[0], e.line), lookup(e.args[1], e.line), v);
      else
        builder.set_triple(lookup(e.args[0], e.line), lookup(e.args[1], e.line), lookup(e.args[2], e.line), v);
    } catch (const InvariantError& ex) {
      throw InvariantError("line " + std::to_string(e.line) + ": " + ex.what());
    }
  }
  return builder.build();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LYAlgebra load_algebra(const std::string& path, std::optional<Field> field_override) {
  return parse_algebra(read_file(path), field_override);
}

namespace {

std::string combination_text(const std::vector<std::pair<std::size_t, Scalar>>& terms,
                             const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& [k, c] : terms) {
    const bool neg = c.is_rational() && c.rational() < 0;
    const Scalar mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += labels[k];
  }
  return out;
}

} // namespace

std::string format_algebra(const LYAlgebra& a) {
  std::ostringstream os;
  const Field& f = a.field();
  os << "field " << (f.is_rational() ? std::string("Q") : "Fp " + std::to_string(f.characteristic())) << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\n";
  const auto& lab = a.labels();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!a.bracket_basis(i, j).empty())
        os << "[" << lab[i] << "," << lab[j] << "] = " << combination_text(a.bracket_basis(i, j), lab) << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.triple_basis(i, j, k).empty())
          os << "{" << lab[i] << "," << lab[j] << "," << lab[k]
             << "} = " << combination_text(a.triple_basis(i, j, k), lab) << "\n";
  return os.str();
}

Matrix parse_matrix(std::string_view text, const Field& field, std::size_t n) {
  std::vector<Vector> rows;
  std::size_t line_no = 0;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto w = words(line);
    if (w.empty()) continue;
    if (w.size() != n)
      throw ParseError(line_no, "expected " + std::to_string(n) + " entries, got " + std::to_string(w.size()));
    Vector row;
    for (const auto& s : w) {
      try {
        row.push_back(field.parse(s));
      } catch (const std::exception& ex) {
        throw ParseError(line_no, ex.what());
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n)
    throw ParseError(line_no, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  return Matrix::from_rows(field, n, rows);
}

Matrix load_matrix(const std::string& path, const Field& field, std::size_t n) {
  return parse_matrix(read_file(path), field, n);
}

} // namespace lyat
