#include "gateroots/expr.hpp"

#include <cctype>
#include <charconv>

#include "gateroots/involution.hpp"

namespace gateroots {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

GateExprPtr GateExpr::name(GateName g) { return std::make_shared<const GateExpr>(NameNode{g}); }

GateExprPtr GateExpr::product(GateExprPtr left, GateExprPtr right) {
  return std::make_shared<const GateExpr>(ProductNode{std::move(left), std::move(right)});
}

GateExprPtr GateExpr::tensor(GateExprPtr left, GateExprPtr right) {
  return std::make_shared<const GateExpr>(TensorNode{std::move(left), std::move(right)});
}

GateExprPtr GateExpr::root(GateExprPtr inner, unsigned order) {
  if (order == 0) throw DomainError("root order must be at least 1");
  return std::make_shared<const GateExpr>(RootNode{std::move(inner), order});
}

GateExprPtr GateExpr::dagger(GateExprPtr inner) { return std::make_shared<const GateExpr>(DaggerNode{std::move(inner)}); }

bool same_expr(const GateExpr& a, const GateExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const NameNode& x) { return x.name == std::get<NameNode>(b.node()).name; },
          [&](const ProductNode& x) {
            const auto& y = std::get<ProductNode>(b.node());
            return same_expr(*x.left, *y.left) && same_expr(*x.right, *y.right);
          },
          [&](const TensorNode& x) {
            const auto& y = std::get<TensorNode>(b.node());
            return same_expr(*x.left, *y.left) && same_expr(*x.right, *y.right);
          },
          [&](const RootNode& x) {
            const auto& y = std::get<RootNode>(b.node());
            return x.order == y.order && same_expr(*x.inner, *y.inner);
          },
          [&](const DaggerNode& x) { return same_expr(*x.inner, *std::get<DaggerNode>(b.node()).inner); },
      },
      a.node());
}

UnitaryGate evaluate(const GateExpr& expr) {
  return std::visit(
      overloaded{
          [](const NameNode& x) { return gate(x.name); },
          [](const ProductNode& x) { return UnitaryGate(mul(evaluate(*x.left).matrix(), evaluate(*x.right).matrix())); },
          [](const TensorNode& x) { return UnitaryGate(kron(evaluate(*x.left).matrix(), evaluate(*x.right).matrix())); },
          [](const RootNode& x) {
            const UnitaryGate inner = evaluate(*x.inner);
            if (is_involution(inner.matrix(), kPredicateTol)) return nth_root_involution(inner, x.order).root;
            return principal_root(inner, x.order).root;
          },
          [](const DaggerNode& x) { return UnitaryGate(dagger(evaluate(*x.inner).matrix())); },
      },
      expr.node());
}

namespace {

enum class Prec { Product = 0, Tensor = 1, Atom = 2 };

Prec precedence(const GateExpr& e) {
  if (std::holds_alternative<ProductNode>(e.node())) return Prec::Product;
  if (std::holds_alternative<TensorNode>(e.node())) return Prec::Tensor;
  return Prec::Atom;
}

std::string print(const GateExpr& e, Prec min_prec);

std::string print_binary(const GateExprPtr& left, const GateExprPtr& right, Prec own, const char* op) {
  // Left-associative: the right operand needs strictly higher precedence.
  return print(*left, own) + op + print(*right, static_cast<Prec>(static_cast<int>(own) + 1));
}

std::string print(const GateExpr& e, Prec min_prec) {
  std::string body = std::visit(
      overloaded{
          [](const NameNode& x) { return std::string(to_string(x.name)); },
          [](const ProductNode& x) { return print_binary(x.left, x.right, Prec::Product, " . "); },
          [](const TensorNode& x) { return print_binary(x.left, x.right, Prec::Tensor, " x "); },
          [](const RootNode& x) {
            if (x.order == 2) return "sqrt(" + print(*x.inner, Prec::Product) + ")";
            return "root(" + print(*x.inner, Prec::Product) + ", " + std::to_string(x.order) + ")";
          },
          [](const DaggerNode& x) { return "dag(" + print(*x.inner, Prec::Product) + ")"; },
      },
      e.node());
  if (precedence(e) < min_prec) return "(" + body + ")";
  return body;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GateExprPtr parse() {
    GateExprPtr e = product();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail(pos_, "unbalanced parenthesis: unexpected ')'");
      fail(pos_, "unexpected '" + std::string(1, text_[pos_]) + "' after expression");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    std::string snippet(text_);
    snippet += '\n';
    snippet.append(at, ' ');
    snippet += '^';
    throw ParseError(at, message, std::move(snippet));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch, const char* context) {
    if (accept(ch)) return;
    skip_space();
    if (pos_ == text_.size()) {
      fail(pos_, ch == ')' ? std::string("unbalanced parenthesis: missing ')' in ") + context
                           : std::string("unexpected end of input in ") + context);
    }
    fail(pos_, std::string("expected '") + ch + "' in " + context);
  }

  bool accept_keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  GateExprPtr product() {
    GateExprPtr e = tensor();
    while (accept('.')) e = GateExpr::product(e, tensor());
    return e;
  }

  GateExprPtr tensor() {
    GateExprPtr e = atom();
    while (accept('x')) e = GateExpr::tensor(e, atom());
    return e;
  }

  GateExprPtr atom() {
    skip_space();
    if (pos_ == text_.size()) fail(pos_, "unexpected end of input: expected a gate expression");
    const std::size_t start = pos_;
    if (accept('(')) {
      GateExprPtr e = product();
      expect(')', "parenthesised expression");
      return e;
    }
    if (accept_keyword("root")) {
      expect('(', "root(...)");
      GateExprPtr inner = product();
      expect(',', "root(expr, n)");
      const unsigned order = integer();
      expect(')', "root(expr, n)");
      return GateExpr::root(std::move(inner), order);
    }
    if (accept_keyword("sqrt")) {
      expect('(', "sqrt(...)");
      GateExprPtr inner = product();
      expect(')', "sqrt(...)");
      return GateExpr::root(std::move(inner), 2);
    }
    if (accept_keyword("dag")) {
      expect('(', "dag(...)");
      GateExprPtr inner = product();
      expect(')', "dag(...)");
      return GateExpr::dagger(std::move(inner));
    }
    if (std::isupper(static_cast<unsigned char>(text_[pos_]))) {
      // Longest catalog name at this position, so "SWAP" wins over "S" and
      // "XxX" reads as X x X.
      std::optional<GateName> best;
      std::size_t best_len = 0;
      for (GateName g : kAllGates) {
        const std::string_view name = to_string(g);
        if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
          best = g;
          best_len = name.size();
        }
      }
      const std::size_t after = pos_ + best_len;
      const bool runs_on = after < text_.size() && (std::isupper(static_cast<unsigned char>(text_[after])) ||
                                                    std::isdigit(static_cast<unsigned char>(text_[after])));
      if (best && !runs_on) {
        pos_ += best_len;
        return GateExpr::name(*best);
      }
    }
    std::size_t end = start;
    const bool upper_run = std::isupper(static_cast<unsigned char>(text_[start])) != 0;
    while (end < text_.size()) {
      const auto ch = static_cast<unsigned char>(text_[end]);
      if (!(upper_run ? std::isupper(ch) || std::isdigit(ch) : std::isalnum(ch))) break;
      ++end;
    }
    if (end == start) fail(start, "unexpected '" + std::string(1, text_[start]) + "': expected a gate expression");
    fail(start, "unknown gate name '" + std::string(text_.substr(start, end - start)) + "'");
  }

  unsigned integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(start, "expected a positive integer root order");
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail(start, "root order is out of range");
    if (value == 0) fail(start, "root order must be at least 1");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const GateExpr& expr) { return print(expr, Prec::Product); }

GateExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace gateroots
