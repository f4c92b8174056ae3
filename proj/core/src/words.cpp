#include "cubewalk/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

Bits image_bits(const std::string& image, const char* field) {
  Bits out;
  out.reserve(image.size());
  for (char c : image) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::InvalidSpec, std::string(field) + " must be a binary string");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace

void validate(const MorphicSpec& spec) {
  if (spec.seed != 0 && spec.seed != 1)
    throw Error(ErrorKind::InvalidSpec, "morphic seed must be 0 or 1");
  if (spec.image0.empty() || spec.image1.empty())
    throw Error(ErrorKind::EmptyImage, "morphism must be non-erasing");
  image_bits(spec.image0, "image of 0");
  image_bits(spec.image1, "image of 1");
  const std::string& seed_image = spec.seed == 0 ? spec.image0 : spec.image1;
  const char seed_char = static_cast<char>('0' + spec.seed);
  if (seed_image.size() < 2 || seed_image.front() != seed_char)
    throw Error(ErrorKind::NonProlongable,
                "image of the seed must start with the seed and have length >= 2");
}

void validate(const SturmianCfSpec& spec) {
  for (auto a : spec.preperiod)
    if (a < 1) throw Error(ErrorKind::InvalidCF, "partial quotients must be >= 1");
  for (auto a : spec.period)
    if (a < 1) throw Error(ErrorKind::InvalidCF, "partial quotients must be >= 1");
  if (spec.period.empty())
    throw Error(ErrorKind::InvalidCF, "finite expansion denotes a rational slope");
  if (spec.preperiod.empty() && spec.period.empty())
    throw Error(ErrorKind::InvalidCF, "no partial quotients given");
}

void validate(const SturmianSlopeSpec& spec) {
  if (spec.r == 0) throw Error(ErrorKind::InvalidSpec, "slope field r must be nonzero");
  if (spec.d < 0) throw Error(ErrorKind::InvalidSpec, "slope field d must be positive");
  if (spec.d == 0 || spec.q == 0 || is_perfect_square(spec.d))
    throw Error(ErrorKind::NotIrrational, "slope is rational");
  const Quadratic value(spec.p, spec.q, spec.d, spec.r);
  if (value.compare(Rational(0)) <= 0 || value.compare(Rational(1)) >= 0)
    throw Error(ErrorKind::SlopeOutOfRange, "slope must lie strictly in (0,1)");
}

Quadratic slope_value(const SturmianSlopeSpec& spec) {
  validate(spec);
  return Quadratic(spec.p, spec.q, spec.d, spec.r);
}

Bits morphic_prefix(const MorphicSpec& spec, std::size_t n) {
  validate(spec);
  if (n == 0) return {};
  const Bits img[2] = {image_bits(spec.image0, "image of 0"), image_bits(spec.image1, "image of 1")};
  // the fixed point satisfies x = image(x[0]) image(x[1]) ...; the seed image
  // keeps the write front ahead of the read index
  Bits buf = img[spec.seed];
  buf.reserve(n + std::max(img[0].size(), img[1].size()));
  for (std::size_t i = 1; buf.size() < n; ++i) {
    const Bits& next = img[buf[i]];
    buf.insert(buf.end(), next.begin(), next.end());
  }
  buf.resize(n);
  return buf;
}

Bits fibonacci_prefix(std::size_t n) { return morphic_prefix(MorphicSpec{"01", "0", 0}, n); }

Bits sturmian_prefix_cf(const SturmianCfSpec& spec, std::size_t n) {
  validate(spec);
  if (n == 0) return {};
  auto digit = [&](std::size_t k) {  // 1-based
    if (k <= spec.preperiod.size()) return spec.preperiod[k - 1];
    return spec.period[(k - 1 - spec.preperiod.size()) % spec.period.size()];
  };
  // standard words: s_0 = 0, s_1 = 0^{a1-1} 1, s_{k+1} = s_k^{a_{k+1}} s_{k-1}
  Bits s_prev{0};
  Bits s_cur(static_cast<std::size_t>(digit(1) - 1), 0);
  s_cur.push_back(1);
  for (std::size_t k = 2; s_cur.size() < n; ++k) {
    const std::int64_t a = digit(k);
    Bits next;
    next.reserve(std::min<std::size_t>(static_cast<std::size_t>(a) * s_cur.size(),
                                       n + s_cur.size()) +
                 s_prev.size());
    for (std::int64_t t = 0; t < a && next.size() < n; ++t)
      next.insert(next.end(), s_cur.begin(), s_cur.end());
    if (next.size() < n) next.insert(next.end(), s_prev.begin(), s_prev.end());
    s_prev = std::move(s_cur);
    s_cur = std::move(next);
  }
  s_cur.resize(n);
  return s_cur;
}

Bits sturmian_prefix_slope(const SturmianSlopeSpec& spec, std::size_t n) {
  const Quadratic alpha = slope_value(spec);
  if (n == 0) return {};
  // symbol(k) = floor((k+2)*alpha) - floor((k+1)*alpha), exact integer floors
  Bits out;
  out.reserve(n);
  BigInt prev = alpha.floor_multiple(1);
  for (std::size_t k = 0; k < n; ++k) {
    BigInt cur = alpha.floor_multiple(BigInt(k + 2));
    out.push_back(static_cast<std::uint8_t>(cur - prev));
    prev = std::move(cur);
  }
  return out;
}

Bits doubling_prefix(std::size_t n) {
  Bits out;
  out.reserve(n);
  std::size_t block = 1;
  while (out.size() < n) {
    for (std::size_t i = 0; i < block && out.size() < n; ++i) out.push_back(0);
    if (out.size() < n) out.push_back(1);
    block *= 2;
  }
  return out;
}

Bits prefix(const WordSpec& spec, std::size_t n) {
  return std::visit(
      [n](const auto& s) -> Bits {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FibonacciSpec>) return fibonacci_prefix(n);
        else if constexpr (std::is_same_v<T, MorphicSpec>) return morphic_prefix(s, n);
        else if constexpr (std::is_same_v<T, SturmianCfSpec>) return sturmian_prefix_cf(s, n);
        else if constexpr (std::is_same_v<T, SturmianSlopeSpec>) return sturmian_prefix_slope(s, n);
        else return doubling_prefix(n);
      },
      spec);
}

std::vector<std::int64_t> cf_expansion(const SturmianSlopeSpec& spec, std::size_t terms) {
  const Quadratic alpha = slope_value(spec);
  const std::vector<BigInt> raw = alpha.continued_fraction(terms + 1);
  if (raw.at(0) != 0)
    throw Error(ErrorKind::InvalidCF, "slope in (0,1) must expand as [0; ...]");
  std::vector<std::int64_t> out;
  out.reserve(terms);
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i] > std::numeric_limits<std::int64_t>::max())
      throw Error(ErrorKind::InvalidCF, "partial quotient does not fit in 64 bits");
    out.push_back(static_cast<std::int64_t>(raw[i]));
  }
  return out;
}

namespace {

// whitespace-insensitive cursor over the spec text
struct Cursor {
  std::string text;
  std::size_t pos = 0;

  explicit Cursor(std::string_view raw) {
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  bool eat(std::string_view token) {
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token, const char* field) {
    if (!eat(token))
      throw Error(ErrorKind::InvalidSpec,
                  std::string("expected \"") + std::string(token) + "\" in " + field);
  }
  bool done() const { return pos == text.size(); }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  std::int64_t integer(const char* field) {
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos || start == pos)
      throw Error(ErrorKind::InvalidSpec, std::string("expected an integer in ") + field);
    return value;
  }
  std::string binary_string() {
    std::size_t start = pos;
    while (peek() == '0' || peek() == '1') ++pos;
    return text.substr(start, pos - start);
  }
};

WordSpec parse_morphic(Cursor& cur) {
  MorphicSpec spec;
  cur.expect("0->", "morphic image of 0");
  spec.image0 = cur.binary_string();
  cur.expect(",1->", "morphic image of 1");
  spec.image1 = cur.binary_string();
  cur.expect(";seed=", "morphic seed");
  if (cur.eat("0")) spec.seed = 0;
  else if (cur.eat("1")) spec.seed = 1;
  else throw Error(ErrorKind::InvalidSpec, "morphic seed must be 0 or 1");
  if (!cur.done()) throw Error(ErrorKind::InvalidSpec, "trailing characters after morphic spec");
  validate(spec);
  return spec;
}

WordSpec parse_cf(Cursor& cur) {
  SturmianCfSpec spec;
  cur.expect("[0;", "continued fraction (slope must start [0; ...)");
  bool saw_period = false;
  while (!cur.eat("]")) {
    if (saw_period)
      throw Error(ErrorKind::InvalidSpec, "period group must be last in the continued fraction");
    if (cur.eat("(")) {
      while (true) {
        spec.period.push_back(cur.integer("continued fraction period"));
        if (cur.eat(")")) break;
        cur.expect(",", "continued fraction period");
      }
      saw_period = true;
    } else {
      spec.preperiod.push_back(cur.integer("continued fraction digits"));
    }
    if (cur.peek() == ',') cur.eat(",");
  }
  if (!cur.done())
    throw Error(ErrorKind::InvalidSpec, "trailing characters after continued fraction");
  validate(spec);
  return spec;
}

WordSpec parse_slope(Cursor& cur) {
  SturmianSlopeSpec spec;
  cur.expect("(", "slope");
  spec.p = cur.integer("slope field p");
  int sign = 0;
  if (cur.eat("+")) sign = 1;
  else if (cur.eat("-")) sign = -1;
  else throw Error(ErrorKind::InvalidSpec, "expected + or - before the surd in slope");
  std::int64_t q_mag = 1;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    q_mag = cur.integer("slope field q");
    cur.expect("*", "slope (q*sqrt(d))");
  }
  cur.expect("sqrt(", "slope surd");
  spec.d = cur.integer("slope field d");
  cur.expect(")", "slope surd");
  cur.expect(")/", "slope denominator");
  spec.r = cur.integer("slope field r");
  spec.q = BigInt(sign) * q_mag;
  if (!cur.done()) throw Error(ErrorKind::InvalidSpec, "trailing characters after slope spec");
  validate(spec);
  return spec;
}

}  // namespace

WordSpec parse_word_spec(std::string_view text) {
  Cursor cur(text);
  if (cur.eat("fib")) {
    if (!cur.done()) throw Error(ErrorKind::InvalidSpec, "trailing characters after \"fib\"");
    return FibonacciSpec{};
  }
  if (cur.eat("doubling")) {
    if (!cur.done()) throw Error(ErrorKind::InvalidSpec, "trailing characters after \"doubling\"");
    return DoublingSpec{};
  }
  if (cur.eat("morphic:")) return parse_morphic(cur);
  if (cur.eat("cf:")) return parse_cf(cur);
  if (cur.eat("slope:")) return parse_slope(cur);
  throw Error(ErrorKind::InvalidSpec,
              "word spec must be fib | doubling | morphic:... | cf:... | slope:...");
}

std::string to_string(const WordSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FibonacciSpec>) {
          out << "fib";
        } else if constexpr (std::is_same_v<T, DoublingSpec>) {
          out << "doubling";
        } else if constexpr (std::is_same_v<T, MorphicSpec>) {
          out << "morphic:0->" << s.image0 << ",1->" << s.image1 << ";seed=" << int(s.seed);
        } else if constexpr (std::is_same_v<T, SturmianCfSpec>) {
          out << "cf:[0;";
          for (std::size_t i = 0; i < s.preperiod.size(); ++i) {
            if (i) out << ",";
            out << s.preperiod[i];
          }
          if (!s.period.empty()) {
            if (!s.preperiod.empty()) out << ",";
            out << "(";
            for (std::size_t i = 0; i < s.period.size(); ++i) {
              if (i) out << ",";
              out << s.period[i];
            }
            out << ")";
          }
          out << "]";
        } else if constexpr (std::is_same_v<T, SturmianSlopeSpec>) {
          out << "slope:(" << s.p << (s.q < 0 ? "-" : "+");
          const BigInt mag = abs(s.q);
          if (mag != 1) out << mag << "*";
          out << "sqrt(" << s.d << "))/" << s.r;
        }
      },
      spec);
  return out.str();
}

}  // namespace cubewalk
