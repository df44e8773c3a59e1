#include "goodstein/notation.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "goodstein/errors.hpp"

namespace goodstein {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

namespace {

void append_tree(std::string& out, const Tree& tree, const std::string& base,
                 bool nested) {
  if (tree.is_zero()) {
    out += '0';
    return;
  }
  auto terms = tree.terms();
  // A constant exponent is written as its bare decimal value.
  if (nested && terms.size() == 1 && terms[0].exponent.is_zero()) {
    out += std::to_string(terms[0].coeff);
    return;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += std::to_string(terms[i].coeff);
    out += '*';
    out += base;
    out += "^(";
    append_tree(out, terms[i].exponent, base, true);
    out += ')';
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<Base> base)
      : text_(text), base_(base) {}

  HereditaryRep parse() {
    Tree tree = parse_rep(false);
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "'+' or end of input");
    return HereditaryRep::trusted(base_.value_or(Base(2)), std::move(tree));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t number() {
    if (!at_digit()) throw SyntaxError(pos_, "a decimal number");
    const std::size_t start = pos_;
    u128 value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint64_t>::max()) {
        throw SyntaxError(start, "a number below 2^64");
      }
      ++pos_;
    }
    return static_cast<std::uint64_t>(value);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw SyntaxError(pos_, std::string("'") + c + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void check_base(std::uint64_t b) {
    if (b < 2) throw NonCanonical("base must be at least 2, got " + std::to_string(b));
    if (!base_) {
      base_ = Base(b);
    } else if (base_->value() != b) {
      throw NonCanonical("mixed bases " + std::to_string(base_->value()) +
                         " and " + std::to_string(b));
    }
  }

  void check_coeff(std::uint64_t c) {
    if (c == 0) throw NonCanonical("zero coefficients are not stored");
    if (c >= base_->value()) {
      throw NonCanonical("coefficient " + std::to_string(c) +
                         " is not below base " + std::to_string(base_->value()));
    }
  }

  Tree parse_rep(bool nested) {
    const std::size_t start = pos_;
    std::uint64_t first = number();
    if (!accept('*')) {
      if (first == 0) return Tree();
      if (!nested) throw SyntaxError(pos_, "'*'");
      // Bare constant exponent; the enclosing term already fixed the base.
      check_coeff(first);
      return Tree({Term{first, Tree()}});
    }
    std::vector<Term> terms;
    std::uint64_t coeff = first;
    while (true) {
      check_base(number());
      check_coeff(coeff);
      expect('^');
      expect('(');
      Tree exponent = parse_rep(true);
      expect(')');
      if (!terms.empty() && !(terms.back().exponent > exponent)) {
        throw NonCanonical("exponents must strictly decrease (term at offset " +
                           std::to_string(start) + ")");
      }
      terms.push_back({coeff, std::move(exponent)});
      if (!accept('+')) break;
      coeff = number();
      expect('*');
    }
    return Tree(std::move(terms));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Base> base_;
};

}  // namespace

std::string format(const HereditaryRep& r, Notation style) {
  const std::string base = std::to_string(r.base().value());
  std::string out;
  if (style == Notation::kPadded) {
    if (r.is_zero()) return "0*" + base + "^(0)";
    append_tree(out, r.tree(), base, false);
    if (!r.tree().lowest().exponent.is_zero()) out += " + 0*" + base + "^(0)";
    return out;
  }
  append_tree(out, r.tree(), base, false);
  return out;
}

HereditaryRep parse(std::string_view text, std::optional<Base> base) {
  return Parser(text, base).parse();
}

}  // namespace goodstein
