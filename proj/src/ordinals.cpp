#include "goodstein/ordinals.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>

#include "goodstein/errors.hpp"

namespace goodstein {

struct OrdinalBuilder {
  static Ordinal make(std::vector<OrdinalTerm> terms) {
    return Ordinal(Ordinal::Unchecked{}, std::move(terms));
  }
};

Ordinal::Ordinal(Unchecked, std::vector<OrdinalTerm> terms) {
  if (!terms.empty()) {
    terms_ = std::make_shared<const std::vector<OrdinalTerm>>(std::move(terms));
  }
}

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff < 1) {
      throw NonCanonical("ordinal coefficients must be positive");
    }
    if (i > 0 && !(terms[i - 1].exponent > terms[i].exponent)) {
      throw NonCanonical("ordinal exponents must strictly decrease");
    }
  }
  *this = Ordinal(Unchecked{}, std::move(terms));
}

Ordinal Ordinal::omega() { return Ordinal({OrdinalTerm{from_natural(1), 1}}); }

std::span<const OrdinalTerm> Ordinal::terms() const {
  if (!terms_) return {};
  return {terms_->data(), terms_->size()};
}

bool Ordinal::is_finite() const {
  return !terms_ || (terms_->size() == 1 && terms_->front().exponent.is_zero());
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  if (a.terms_ == b.terms_) return std::strong_ordering::equal;
  auto ta = a.terms();
  auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = ta[i].exponent <=> tb[i].exponent; c != 0) return c;
    if (const int c = cmp(ta[i].coeff, tb[i].coeff); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return ta.size() <=> tb.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

// Mirrors of trees keyed by tree identity. Entries hold a copy of the tree
// so an address cannot be reused while its entry exists. The memo is
// emptied when it grows well past the size of the trees being mirrored.
class MirrorMemo {
 public:
  Ordinal mirror(const Tree& tree) {
    if (tree.is_zero()) return Ordinal();
    const void* id = tree.identity();
    if (auto it = memo_.find(id); it != memo_.end()) return it->second.second;
    std::vector<OrdinalTerm> terms;
    terms.reserve(tree.size());
    for (const Term& t : tree.terms()) {
      terms.push_back(
          {mirror(t.exponent), Natural(static_cast<unsigned long>(t.coeff))});
    }
    Ordinal result = OrdinalBuilder::make(std::move(terms));
    memo_.emplace(id, std::make_pair(tree, result));
    return result;
  }

  void trim() {
    if (memo_.size() > kMaxEntries) memo_.clear();
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 16;


  std::unordered_map<const void*, std::pair<Tree, Ordinal>> memo_;
};

Ordinal mirror(const HereditaryRep& r) {
  MirrorMemo memo;
  return memo.mirror(r.tree());
}

Ordinal from_natural(const Natural& n) {
  if (n < 0) throw Error("ordinals are not negative");
  if (n == 0) return Ordinal();
  return OrdinalBuilder::make({OrdinalTerm{Ordinal(), n}});
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const OrdinalTerm& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += t.coeff.get_str();
    } else {
      out += "w^(" + to_string(t.exponent) + ")*" + t.coeff.get_str();
    }
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal result = ordinal();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "'+' or end of input");
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  Natural number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw SyntaxError(pos_, "a decimal number");
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  Ordinal ordinal() {
    if (!peek('w')) {
      Natural n = number();
      if (n == 0) return Ordinal();
      return Ordinal({OrdinalTerm{Ordinal(), std::move(n)}});
    }
    std::vector<OrdinalTerm> terms;
    while (true) {
      if (peek('w')) {
        ++pos_;
        expect('^');
        expect('(');
        Ordinal e = ordinal();
        expect(')');
        expect('*');
        terms.push_back({std::move(e), number()});
      } else {
        // A constant closes the sum.
        terms.push_back({Ordinal(), number()});
        break;
      }
      if (!peek('+')) break;
      ++pos_;
    }
    return Ordinal(std::move(terms));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  return OrdinalParser(text).parse();
}

Domination dominates_natural(const HereditaryRep& r) {
  return has_positive_rank(r) ? Domination::kStrict : Domination::kEqual;
}

MirrorAuditor::MirrorAuditor() : memo_(std::make_unique<MirrorMemo>()) {}
MirrorAuditor::~MirrorAuditor() = default;

namespace {

Tree suffix(const Tree& t, std::size_t from) {
  auto terms = t.terms();
  return Tree(std::vector<Term>(terms.begin() + static_cast<std::ptrdiff_t>(from),
                                terms.end()));
}

}  // namespace

void MirrorAuditor::observe(const SeqTerm& term) {
  const Tree& tree = term.rep.tree();
  if (term.value && !audit_.domination_violation) {
    const auto c = mirror(term.rep) <=> from_natural(*term.value);
    const bool agrees = dominates_natural(term.rep) == Domination::kStrict
                            ? c > 0
                            : c == 0;
    if (!agrees) audit_.domination_violation = term.index;
  }
  if (previous_) {
    ++audit_.pairs_checked;
    auto a = previous_->terms();
    auto b = tree.terms();
    std::size_t common = 0;
    while (common < a.size() && common < b.size() &&
           a[common].coeff == b[common].coeff &&
           a[common].exponent.same_storage(b[common].exponent)) {
      ++common;
    }
    const Ordinal before = memo_->mirror(suffix(*previous_, common));
    const Ordinal after = memo_->mirror(suffix(tree, common));
    memo_->trim();
    if (!(before > after) && !audit_.violation) {
      audit_.decreasing = false;
      audit_.violation = previous_index_;
    }
  }
  previous_ = tree;
  previous_index_ = term.index;
}

DecreaseAudit verify_decreasing(std::span<const SeqTerm> terms) {
  MirrorAuditor auditor;
  for (const SeqTerm& t : terms) auditor.observe(t);
  return auditor.result();
}

}  // namespace goodstein
