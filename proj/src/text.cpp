#include "mseg/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "mseg/error.hpp"

namespace mseg {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  void expect_word(std::string_view word) {
    const auto w = ident();
    if (w != word) fail("expected '" + std::string(word) + "', found '" + w + "'");
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
    }
    if (start == pos_) fail("expected an identifier" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    std::int64_t value = 0;
    const char* first = text_.data() + pos_ + (pos_ < text_.size() && text_[pos_] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || end == pos_) fail("expected an integer" + found());
    while (pos_ < end) advance();
    return value;
  }

  int small_int() {
    const auto v = integer();
    if (v < -1'000'000'000 || v > 1'000'000'000) fail("integer out of range");
    return static_cast<int>(v);
  }

  /// The next token is `letter` immediately followed (modulo whitespace) by `follower`.
  bool next_is_letter_then(char letter, char follower) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != letter) return false;
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == follower;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::Parse, std::to_string(line_) + ":" + std::to_string(col_) + ": " + message);
  }
  [[noreturn]] void fail_with(ErrorCode code, const std::string& message) const {
    throw Error(code, std::to_string(line_) + ":" + std::to_string(col_) + ": " + message);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string role_text(const CuspidalAtom& atom) {
  if (const auto* s = std::get_if<SmallOrbitMember>(&atom.role))
    return std::string(atom.side == Field::Base ? "#SmallF(" : "#SmallE(") + std::to_string(s->index) + ")";
  if (std::holds_alternative<FixedBig>(atom.role)) return atom.side == Field::Base ? "#FixedF" : "#FixedE";
  return "";
}

// Parses `line` after the '@'. Returns the line and the integer carry from
// folding the offset into [0,1).
std::pair<CuspidalLine, std::int64_t> parse_line(Cursor& in, const ExtensionContext* ctx) {
  CuspidalAtom atom;
  atom.name = in.ident();
  if (in.accept('#')) {
    const auto role = in.ident();
    if (role == "SmallF" || role == "SmallE") {
      in.expect('(');
      const int j = in.small_int();
      in.expect(')');
      if (j < 0) in.fail("orbit index must be non-negative");
      atom.role = SmallOrbitMember{atom.name, j};
      atom.side = role == "SmallF" ? Field::Base : Field::Extension;
    } else if (role == "FixedF" || role == "FixedE") {
      atom.role = FixedBig{atom.name};
      atom.side = role == "FixedF" ? Field::Base : Field::Extension;
    } else {
      in.fail("unknown orbit role '" + role + "'");
    }
  }
  in.expect('(');
  in.expect_word("k");
  in.expect('=');
  atom.dim_k = in.small_int();
  if (atom.dim_k < 1) in.fail("k must be positive");
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (in.accept(',')) {
    in.expect_word("off");
    in.expect('=');
    num = in.integer();
    in.expect('/');
    den = in.integer();
    if (den == 0) in.fail("offset denominator is zero");
  }
  in.expect(')');
  if (ctx != nullptr && !std::holds_alternative<Plain>(atom.role)) {
    try {
      ctx->validate(atom);
    } catch (const Error& e) {
      in.fail_with(ErrorCode::UnknownOrbit, e.what());
    }
  }
  std::int64_t carry = 0;
  CuspidalLine line{std::move(atom), Offset::reduce(num, den, &carry)};
  return {std::move(line), carry};
}

// '{' segs '}' ['@' line]; the line is mandatory unless the braces are empty.
std::vector<Segment> parse_rigid(Cursor& in, const ExtensionContext* ctx) {
  in.expect('{');
  std::vector<std::pair<int, int>> shape;
  if (!in.accept('}')) {
    do {
      in.expect('[');
      const int a = in.small_int();
      in.expect(',');
      const int b = in.small_int();
      in.expect(']');
      if (a > b) in.fail("segment [" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
      shape.emplace_back(a, b);
    } while (in.accept(','));
    in.expect('}');
  }
  if (shape.empty() && in.peek() != '@') return {};
  in.expect('@');
  auto [line, carry] = parse_line(in, ctx);
  std::vector<Segment> out;
  for (auto [a, b] : shape) out.emplace_back(line, a + static_cast<int>(carry), b + static_cast<int>(carry));
  return out;
}

}  // namespace

std::string to_string(const Offset& off) { return std::to_string(off.num()) + "/" + std::to_string(off.den()); }

std::string to_string(const CuspidalLine& line) {
  std::string out = line.atom.name + role_text(line.atom) + "(k=" + std::to_string(line.atom.dim_k);
  if (!line.offset.is_zero()) out += ",off=" + to_string(line.offset);
  return out + ")";
}

std::string to_string(const Segment& s) { return "[" + std::to_string(s.a()) + "," + std::to_string(s.b()) + "]"; }

std::string to_string(const Multisegment& m) {
  if (m.empty()) return "{}";
  std::string out;
  for (const auto& line : m.lines()) {
    if (!out.empty()) out += " + ";
    out += '{';
    bool first = true;
    for (const auto& s : m.segments()) {
      if (s.line() != line) continue;
      if (!first) out += ',';
      out += to_string(s);
      first = false;
    }
    out += "}@" + to_string(line);
  }
  return out;
}

std::string to_string(const Rep& r) {
  if (r.empty()) return "1";
  std::string out;
  for (const auto& f : r.factors()) {
    if (!out.empty()) out += " x ";
    out += f.presentation == Presentation::Langlands ? 'L' : 'Z';
    out += to_string(f.m);
  }
  return out;
}

Multisegment parse_multisegment(std::string_view text, const ExtensionContext* ctx) {
  Cursor in(text);
  std::vector<Segment> all;
  do {
    auto part = parse_rigid(in, ctx);
    all.insert(all.end(), part.begin(), part.end());
  } while (in.accept('+'));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Multisegment(std::move(all));
}

Rep parse_rep(std::string_view text, const ExtensionContext* ctx) {
  Cursor in(text);
  if (in.accept('1')) {
    if (!in.at_end()) in.fail("unexpected trailing input");
    return Rep{};
  }
  std::vector<RepFactor> factors;
  do {
    Presentation presentation = Presentation::Langlands;
    if (in.next_is_letter_then('L', '{')) {
      in.expect('L');
    } else if (in.next_is_letter_then('Z', '{')) {
      in.expect('Z');
      presentation = Presentation::Zelevinsky;
    }
    factors.push_back(RepFactor{presentation, Multisegment(parse_rigid(in, ctx))});
  } while (in.accept('x') || in.accept('*'));
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Rep(std::move(factors));
}

Composition parse_composition(std::string_view text) {
  Cursor in(text);
  const bool paren = in.accept('(');
  std::vector<int> entries;
  if (!(paren && in.peek() == ')') && !in.at_end()) {
    do {
      const int v = in.small_int();
      if (v < 0) in.fail("entries must be non-negative");
      entries.push_back(v);
    } while (in.accept(','));
  }
  if (paren) in.expect(')');
  if (!in.at_end()) in.fail("unexpected trailing input");
  return Composition(std::move(entries));
}

Partition parse_partition(std::string_view text) {
  const auto c = parse_composition(text);
  return Partition(std::vector<int>(c.entries().begin(), c.entries().end()));
}

ExtensionContext parse_context(std::string_view text) {
  std::optional<int> degree;
  std::vector<OrbitDatum> orbits;
  std::istringstream lines{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto bad = [&](const std::string& msg) {
    throw Error(ErrorCode::BadContext, "context line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(lines, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "degree") {
      int d = 0;
      if (!(words >> d)) bad("degree needs an integer");
      if (degree) bad("degree declared twice");
      degree = d;
    } else if (keyword == "orbit") {
      OrbitDatum o;
      if (!(words >> o.name)) bad("orbit needs a name");
      bool have_kind = false;
      bool have_k = false;
      std::string field;
      while (words >> field) {
        if (field == "kind=I") {
          o.kind = OrbitKind::TypeI;
          have_kind = true;
        } else if (field == "kind=II") {
          o.kind = OrbitKind::TypeII;
          have_kind = true;
        } else if (field.rfind("k=", 0) == 0) {
          try {
            o.k = std::stoi(field.substr(2));
          } catch (const std::exception&) {
            bad("bad k value '" + field + "'");
          }
          have_k = true;
        } else {
          bad("unknown orbit field '" + field + "'");
        }
      }
      if (!have_kind || !have_k) bad("orbit needs kind=<I|II> and k=<int>");
      orbits.push_back(std::move(o));
    } else {
      bad("unknown keyword '" + keyword + "'");
    }
  }
  if (!degree) throw Error(ErrorCode::BadContext, "context file has no degree line");
  ExtensionContext ctx(*degree);
  for (auto& o : orbits) ctx.register_orbit(std::move(o));
  return ctx;
}

}  // namespace mseg
