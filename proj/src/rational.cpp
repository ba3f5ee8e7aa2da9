#include "rlcm/rational.hpp"

#include <cctype>  // for isdigit

#include "rlcm/arith.hpp"
#include "rlcm/error.hpp"

namespace rlcm {

std::size_t hash_value(Rational const& q) {
  constexpr unsigned long kMod = 4294967291UL;
  std::size_t h = mpz_fdiv_ui(q.get_num_mpz_t(), kMod);
  h             = hash_combine(h, mpz_sgn(q.get_num_mpz_t()) + 1);
  return hash_combine(h, mpz_fdiv_ui(q.get_den_mpz_t(), kMod));
}

std::string to_string(Rational const& q) {
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool neg      = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == start) {
      throw ParseError("expected digits in rational '" + std::string(text) + "'",
                       j);
    }
    return Integer(std::string(text.substr(start, j - start)));
  };
  Integer num = digits(i);
  Integer den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = digits(i);
    if (den == 0) {
      throw ParseError("zero denominator", i);
    }
  }
  if (i != text.size()) {
    throw ParseError("trailing characters in rational '" + std::string(text) + "'",
                     i);
  }
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(Gaussian const& z) {
  if (z.is_real()) {
    return to_string(z.re);
  }
  if (sgn(z.re) == 0) {
    if (z.im == 1) {
      return "i";
    }
    if (z.im == -1) {
      return "-i";
    }
    return to_string(z.im) + "i";
  }
  std::string out = "(" + to_string(z.re);
  if (sgn(z.im) > 0) {
    out += "+";
  }
  if (z.im == 1) {
    out += "i";
  } else if (z.im == -1) {
    out += "-i";
  } else {
    out += to_string(z.im) + "i";
  }
  return out + ")";
}

bool exact_sqrt(Rational const& q, Rational& root) {
  if (sgn(q) < 0) {
    return false;
  }
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return false;
  }
  root = Rational(Integer(sqrt(n)), Integer(sqrt(d)));
  root.canonicalize();
  return true;
}

}  // namespace rlcm
