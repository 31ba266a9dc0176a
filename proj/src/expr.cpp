#include "cofinite/expr.hpp"

#include <cctype>

#include "cofinite/algebra.hpp"
#include "cofinite/serialize.hpp"

namespace cofinite {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Expr parse() {
        Expr e = expr();
        skip_ws();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return e;
      }

     private:
      std::string_view _text;
      std::size_t      _pos = 0;

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(_pos, what);
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool peek(std::string_view token) {
        skip_ws();
        return _text.substr(_pos, token.size()) == token;
      }

      bool accept(std::string_view token) {
        if (peek(token)) {
          _pos += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          fail("expected '" + std::string(token) + "'");
        }
      }

      Int nat() {
        skip_ws();
        if (_pos >= _text.size()
            || !std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          fail("expected a natural number");
        }
        Int value = 0;
        while (_pos < _text.size()
               && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          Int const digit = _text[_pos] - '0';
          if (__builtin_mul_overflow(value, Int(10), &value)
              || __builtin_add_overflow(value, digit, &value)) {
            fail("number too large");
          }
          ++_pos;
        }
        return value;
      }

      std::string word() {
        skip_ws();
        std::size_t const start = _pos;
        while (_pos < _text.size()
               && std::isalpha(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      static std::shared_ptr<Expr const> share(Expr e) {
        return std::make_shared<Expr const>(std::move(e));
      }

      Expr expr() {
        Expr left = term();
        while (accept("*")) {
          Expr right = term();
          left = Expr{Expr::Compose{share(std::move(left)), share(std::move(right))}};
        }
        return left;
      }

      Expr term() {
        if (accept("(")) {
          Expr inner = expr();
          expect(")");
          return inner;
        }
        if (peek("[")) {
          return literal();
        }
        skip_ws();
        std::size_t const start = _pos;
        std::string const name  = word();
        using Kind              = Expr::Named::Kind;
        if (name == "inv") {
          expect("(");
          Expr inner = expr();
          expect(")");
          return Expr{Expr::Invert{share(std::move(inner))}};
        }
        if (name == "id") {
          return Expr{Expr::Named{Kind::Id}};
        }
        if (name == "a") {
          return Expr{Expr::Named{Kind::A}};
        }
        if (name == "b") {
          return Expr{Expr::Named{Kind::B}};
        }
        if (name == "e" || name == "ray") {
          expect("(");
          Int const n = nat();
          expect(")");
          if (n < 1) {
            throw Error(ErrorKind::DomainError,
                        name + "(" + std::to_string(n) + ") needs a positive argument");
          }
          return Expr{Expr::Named{name == "e" ? Kind::Epsilon : Kind::Ray, n}};
        }
        if (name == "cn") {
          expect("(");
          Int const i = nat();
          expect(",");
          Int const j = nat();
          expect(")");
          return Expr{Expr::Named{Kind::Cn, i, j}};
        }
        _pos = start;
        if (name.empty()) {
          fail(_pos < _text.size() ? "expected an element" : "unexpected end of input");
        }
        fail("unknown name '" + name + "'");
      }

      Expr literal() {
        expect("[");
        std::vector<FrontPair> front;
        if (!peek("|")) {
          do {
            Int const x = nat();
            expect(">");
            Int const y = nat();
            front.push_back({x, y});
          } while (accept(","));
        }
        expect("|");
        Int const tail = nat();
        expect("..");
        Int sign = 1;
        if (accept("-") || accept("−")) {
          sign = -1;
        } else {
          expect("+");
        }
        Int const magnitude = nat();
        expect("]");
        try {
          return Expr{Expr::Literal{make_element(std::move(front), tail, sign * magnitude)}};
        } catch (Error const& e) {
          throw Error(ErrorKind::DomainError, e.what());
        }
      }
    };

    struct Evaluator {
      Element operator()(Expr::Literal const& lit) const {
        return lit.value;
      }
      Element operator()(Expr::Named const& named) const {
        using Kind = Expr::Named::Kind;
        switch (named.kind) {
          case Kind::Id: return identity();
          case Kind::A: return generator_a();
          case Kind::B: return generator_b();
          case Kind::Epsilon: return epsilon(named.i);
          case Kind::Ray: return ray_idempotent(named.i);
          case Kind::Cn: return cn_element(named.i, named.j);
        }
        return identity();
      }
      Element operator()(Expr::Compose const& c) const {
        return compose(evaluate(*c.left), evaluate(*c.right));
      }
      Element operator()(Expr::Invert const& inv) const {
        return invert(evaluate(*inv.operand));
      }
    };

  }  // namespace

  Expr parse_expression(std::string_view text) {
    return Parser(text).parse();
  }

  Element evaluate(Expr const& expr) {
    return std::visit(Evaluator{}, expr.node);
  }

  Element parse_element(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '{') {
      json doc;
      try {
        doc = json::parse(text);
      } catch (json::parse_error const& ex) {
        throw ParseError(ex.byte, "invalid JSON element");
      }
      return element_from_json(doc);
    }
    return evaluate(parse_expression(text));
  }

  std::string render(Element const& e, RenderMode mode) {
    if (mode == RenderMode::Json) {
      return json(e).dump();
    }
    std::string out = "[";
    bool        first = true;
    for (auto const& p : e.front()) {
      if (!first) {
        out += ",";
      }
      first = false;
      out += std::to_string(p.from) + ">" + std::to_string(p.to);
    }
    out += " | " + std::to_string(e.tail_start()) + "..";
    out += e.shift() < 0 ? "-" : "+";
    out += std::to_string(e.shift() < 0 ? -e.shift() : e.shift());
    out += "]";
    return out;
  }

}  // namespace cofinite
