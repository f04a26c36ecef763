#pragma once

#include "lyat/algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lyat {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Algebra definition format, one statement per line, `#` starts a comment:
///
///   field Q                  (or: field Fp 7)
///   dim 3                    (optional when a basis line is present)
///   basis x y z              (optional; defaults to e0 .. e{n-1})
///   [x,y] = 2*z - 1/2*x
///   {x,y,z} = y
///
/// A file whose first statement is `leibniz` instead lists a left Leibniz
/// product table with lines `(x,y) = ...`, and the algebra is obtained by
/// skew-symmetrization. Unlisted products are zero. In the LY format one
/// orientation of each skew pair suffices; in both formats conflicting
/// entries are errors.
///
/// `field_override`, when given, replaces the field named in the file.
/// Throws ParseError for malformed input, InvariantError for [a,a] != 0,
/// {a,a,b} != 0 or conflicting entries.
LYAlgebra parse_algebra(std::string_view text, std::optional<Field> field_override = std::nullopt);
LYAlgebra load_algebra(const std::string& path, std::optional<Field> field_override = std::nullopt);

/// Writes `a` in the format above; parse_algebra(format_algebra(a)) == a.
std::string format_algebra(const LYAlgebra& a);

/// Whitespace-separated scalars, one row per line; must be n x n.
Matrix parse_matrix(std::string_view text, const Field& field, std::size_t n);
Matrix load_matrix(const std::string& path, const Field& field, std::size_t n);

/// "Q" or "Fp:<p>" (also accepts "Fp <p>").
Field parse_field(std::string_view text);

/// Reads a file into a string; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::string& path);

} // namespace lyat
