#include "laurentbr/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace laurentbr {

namespace {

constexpr long kMaxExponent = 1000000;

class Parser {
 public:
  Parser(const std::string& src, TowerPtr tower) : s_(src), tower_(std::move(tower)) {}

  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }

  bool peek(const std::string& tok) {
    skip();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool accept(const std::string& tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  LaurentPoly element() {
    bool neg = accept("-");
    LaurentPoly x = term();
    if (neg) x = -x;
    for (;;) {
      if (accept("+"))
        x += term();
      else if (accept("-"))
        x -= term();
      else
        return x;
    }
  }

  // A '*' followed by '[' or '<' belongs to a block prefix, not to the product.
  bool product_continues() {
    if (!peek("*")) return false;
    std::size_t q = pos_ + 1;
    while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
    return q < s_.size() && s_[q] != '[' && s_[q] != '<';
  }

  LaurentPoly term() {
    LaurentPoly x = factor();
    while (product_continues()) {
      ++pos_;
      x *= factor();
    }
    return x;
  }

  LaurentPoly factor() {
    const std::size_t start = pos_;
    LaurentPoly x = atom();
    if (accept("^")) {
      const long e = exponent();
      if (e < 0 && !x.is_single_term()) {
        pos_ = start;
        fail("negative power of a sum");
      }
      x = x.pow(e);
    }
    return x;
  }

  long exponent() {
    const bool paren = accept("(");
    const bool neg = accept("-");
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc() || v > kMaxExponent) {
      pos_ = start;
      fail("exponent overflow");
    }
    if (paren) expect(")");
    return neg ? -v : v;
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("(")) {
      LaurentPoly x = element();
      expect(")");
      return x;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      const long p = tower_->p();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + (s_[pos_++] - '0')) % p;
      return LaurentPoly::constant(tower_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < tower_->n; ++i)
        if (tower_->names[i] == name) return LaurentPoly::variable(tower_, i);
      const auto& base = tower_->base;
      if (name == "t" && base->kind() == BaseFieldDesc::Kind::RatFunc)
        return LaurentPoly::constant(tower_, Element::variable(base));
      if (name == "w" && base->degree() > 1) return LaurentPoly::constant(tower_, Element::generator(base));
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::vector<LaurentPoly> element_list() {
    std::vector<LaurentPoly> out{element()};
    while (accept(",")) out.push_back(element());
    return out;
  }

  SymbolAS symbol() {
    expect("[");
    LaurentPoly a = element();
    expect(",");
    const std::size_t bpos = pos_;
    LaurentPoly b = element();
    expect(")");
    if (b.is_zero()) {
      pos_ = bpos;
      fail("Kummer slot must be nonzero");
    }
    return SymbolAS(std::move(a), std::move(b));
  }

  BrauerClass brauer_class() {
    skip();
    if (accept("1")) return BrauerClass(tower_);
    std::vector<SymbolAS> syms{symbol()};
    while (accept("*")) syms.push_back(symbol());
    return BrauerClass(tower_, std::move(syms));
  }

  BilPfister bilinear() {
    expect("<<");
    BilPfister f{tower_, element_list()};
    expect(">>");
    return f;
  }

  QuadPfister quadratic() {
    expect("<<");
    std::vector<LaurentPoly> first = element_list();
    QuadPfister f{tower_, {}, LaurentPoly(tower_)};
    if (accept(";")) {
      f.bil_slots = std::move(first);
      f.as_slot = element();
    } else {
      if (first.size() != 1) fail("expected ';' before the Artin-Schreier slot");
      f.as_slot = std::move(first[0]);
    }
    expect("]]");
    return f;
  }

  void block_term(BlockForm& f) {
    if (peek("<") && !peek("<<")) {
      expect("<");
      for (auto& d : element_list()) f.diag.push_back(std::move(d));
      expect(">");
      return;
    }
    Block b{LaurentPoly::constant(tower_, 1), {}, LaurentPoly(tower_)};
    if (!peek("[") && !peek("<<")) {
      b.scalar = term();
      expect("*");
    }
    if (accept("<<")) {
      b.multiplier = element_list();
      expect(">>");
    }
    expect("[");
    const std::size_t one = pos_;
    if (!(element() == LaurentPoly::constant(tower_, 1))) {
      pos_ = one;
      fail("block must have the shape [1, w]");
    }
    expect(",");
    b.w = element();
    expect("]");
    f.blocks.push_back(std::move(b));
  }

  BlockForm block_form() {
    BlockForm f{tower_, {}, {}};
    if (peek("0")) {
      expect("0");
      return f;
    }
    block_term(f);
    while (accept("_|_")) block_term(f);
    return f;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  TowerPtr tower_;
};

template <typename F>
auto run(const std::string& src, const TowerPtr& tower, F f) {
  Parser p(src, tower);
  auto x = f(p);
  p.finish();
  return x;
}

}  // namespace

LaurentPoly parse_element(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.element(); });
}

SymbolAS parse_symbol(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.symbol(); });
}

BrauerClass parse_class(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.brauer_class(); });
}

BilPfister parse_bilinear(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.bilinear(); });
}

QuadPfister parse_quadratic(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.quadratic(); });
}

BlockForm parse_block_form(const std::string& src, const TowerPtr& tower) {
  return run(src, tower, [](Parser& p) { return p.block_form(); });
}

Parsed parse_expression(const std::string& src, const TowerPtr& tower) {
  std::optional<ParseError> best;
  auto attempt = [&](auto&& f) -> std::optional<Parsed> {
    try {
      return Parsed(f());
    } catch (const ParseError& e) {
      if (!best || e.position() > best->position()) best = e;
    }
    return std::nullopt;
  };
  if (auto x = attempt([&] { return parse_element(src, tower); })) return *x;
  if (auto x = attempt([&] { return parse_class(src, tower); })) {
    auto& c = std::get<BrauerClass>(*x);
    if (c.size() == 1) return c.symbols[0];
    return *x;
  }
  if (auto x = attempt([&] { return parse_bilinear(src, tower); })) return *x;
  if (auto x = attempt([&] { return parse_quadratic(src, tower); })) return *x;
  if (auto x = attempt([&] { return parse_block_form(src, tower); })) return *x;
  throw *best;
}

std::string to_string(const Parsed& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

PrecisionWindow parse_window(const std::string& src, int n) {
  std::vector<std::pair<int, int>> ranges;
  std::size_t start = 0;
  while (start <= src.size()) {
    const std::size_t comma = src.find(',', start);
    const std::string part = src.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t dots = part.find("..");
    if (dots == std::string::npos) throw Error("window range '" + part + "' is not of the form lo..hi");
    int lo = 0, hi = 0;
    const std::string l = part.substr(0, dots), h = part.substr(dots + 2);
    auto r1 = std::from_chars(l.data(), l.data() + l.size(), lo);
    auto r2 = std::from_chars(h.data(), h.data() + h.size(), hi);
    if (r1.ec != std::errc() || r1.ptr != l.data() + l.size() || r2.ec != std::errc() ||
        r2.ptr != h.data() + h.size())
      throw Error("window range '" + part + "' has non-integer bounds");
    if (lo > hi) throw Error("window range '" + part + "' is empty");
    ranges.emplace_back(lo, hi);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (ranges.size() == 1) return PrecisionWindow::uniform(n, ranges[0].first, ranges[0].second);
  if (static_cast<int>(ranges.size()) != n) throw Error("window needs 1 or " + std::to_string(n) + " ranges");
  PrecisionWindow w;
  for (auto [lo, hi] : ranges) {
    w.lo.push_back(lo);
    w.hi.push_back(hi);
  }
  return w;
}

}  // namespace laurentbr
