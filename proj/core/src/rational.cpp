#include "semitree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace semitree {

bool is_depth_class(const Rat& r) {
  return mpz_odd_p(r.get_den().get_mpz_t()) != 0;
}

bool is_turn_class(const Rat& r) { return !is_depth_class(r); }

bool has_parity(const Rat& r, Parity p) {
  return p == Parity::Odd ? is_depth_class(r) : is_turn_class(r);
}

Rat parse_rational(const std::string& text) {
  auto trim = [](const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
  };
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  const size_t slash = t.find('/');
  try {
    mpz_class num, den;
    if (slash == std::string::npos) {
      num = mpz_class(t);
      den = 1;
    } else {
      num = mpz_class(trim(t.substr(0, slash)));
      den = mpz_class(trim(t.substr(slash + 1)));
    }
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rat& r) { return r.get_str(); }

Rat simplest_in(const Rat& lo, const Rat& hi, Parity parity,
                const std::optional<Rat>& bias, const std::set<Rat>& exclude) {
  if (!(lo < hi)) {
    throw std::invalid_argument("simplest_in: empty interval [" +
                                rational_to_string(lo) + ", " +
                                rational_to_string(hi) + "]");
  }
  const Rat b = bias ? *bias : Rat((lo + hi) / 2);
  const unsigned long q_start = parity == Parity::Odd ? 1 : 2;
  constexpr unsigned long kDenominatorCap = 200000;
  for (unsigned long q = q_start; q <= kDenominatorCap; q += 2) {
    // Integer numerators strictly inside (lo*q, hi*q).
    mpz_class p_min, p_max;
    {
      Rat loq = lo * static_cast<signed long>(q);
      Rat hiq = hi * static_cast<signed long>(q);
      mpz_fdiv_q(p_min.get_mpz_t(), loq.get_num().get_mpz_t(),
                 loq.get_den().get_mpz_t());
      p_min += 1;
      mpz_cdiv_q(p_max.get_mpz_t(), hiq.get_num().get_mpz_t(),
                 hiq.get_den().get_mpz_t());
      p_max -= 1;
    }
    if (p_min > p_max) continue;
    // Enumerate numerators by increasing distance to bias*q, preferring the
    // smaller numerator on ties; the first admissible one is the answer for
    // this denominator.
    const Rat bq = b * static_cast<signed long>(q);
    mpz_class down;  // floor(bq)
    mpz_fdiv_q(down.get_mpz_t(), bq.get_num().get_mpz_t(),
               bq.get_den().get_mpz_t());
    mpz_class up = down + 1;
    if (down > p_max) { down = p_max; up = p_max + 1; }
    if (up < p_min) { up = p_min; down = p_min - 1; }
    while (down >= p_min || up <= p_max) {
      bool take_down;
      if (down < p_min) {
        take_down = false;
      } else if (up > p_max) {
        take_down = true;
      } else {
        const Rat d_down = bq - Rat(down);
        const Rat d_up = Rat(up) - bq;
        take_down = d_down <= d_up;  // tie -> smaller numerator
      }
      const mpz_class p = take_down ? down : up;
      if (take_down) --down; else ++up;
      mpz_class g;
      mpz_gcd_ui(g.get_mpz_t(), p.get_mpz_t(), q);
      if (g != 1) continue;
      Rat cand(p, mpz_class(q));
      cand.canonicalize();
      if (exclude.count(cand)) continue;
      return cand;
    }
  }
  throw std::logic_error("simplest_in: no admissible rational found in (" +
                         rational_to_string(lo) + ", " + rational_to_string(hi) +
                         ")");
}

}  // namespace semitree
