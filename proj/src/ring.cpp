#include "serreq/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace serreq {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error("PrimeField: characteristic must be prime");
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r = 1 % p_;
  Fp base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  if (a == 0) throw Error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

Fp PrimeField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Fp>(m);
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int x : e_)
    if (x < 0) throw Error("Monomial: negative exponent");
}

int Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + other.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  std::vector<int> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - divisor.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.e_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::var(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (int i = static_cast<int>(ea.size()) - 1; i >= 0; --i)
    if (ea[i] != eb[i]) return ea[i] > eb[i] ? -1 : 1;
  return 0;
}

std::optional<int> GradedPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

GradedPolynomial GradedPolynomial::from_terms(const PrimeField& k,
                                              std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return degrevlex_cmp(a.mono, b.mono) > 0;
  });
  GradedPolynomial f;
  for (auto& t : terms) {
    Fp c = t.coeff % k.characteristic();
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      Fp s = k.add(f.terms_.back().coeff, c);
      if (s == 0)
        f.terms_.pop_back();
      else
        f.terms_.back().coeff = s;
    } else {
      f.terms_.push_back({c, t.mono});
    }
  }
  for (const auto& t : f.terms_)
    if (t.mono.degree() != f.terms_.front().mono.degree())
      throw InhomogeneousInput("polynomial has mixed term degrees");
  return f;
}

GradedPolynomial poly_add(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.degree() != g.degree())
    throw DegreeMismatch("poly_add: degrees differ");
  std::vector<Term> all = f.terms();
  all.insert(all.end(), g.terms().begin(), g.terms().end());
  return GradedPolynomial::from_terms(R.field, std::move(all));
}

GradedPolynomial poly_mul(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g) {
  std::vector<Term> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms())
      out.push_back({R.field.mul(a.coeff, b.coeff), a.mono * b.mono});
  return GradedPolynomial::from_terms(R.field, std::move(out));
}

GradedPolynomial poly_scale(const Ring& R, Fp c, const GradedPolynomial& f) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({R.field.mul(c, t.coeff), t.mono});
  return GradedPolynomial::from_terms(R.field, std::move(out));
}

GradedPolynomial poly_neg(const Ring& R, const GradedPolynomial& f) {
  return poly_scale(R, R.field.neg(1), f);
}

GradedPolynomial poly_sub(const Ring& R, const GradedPolynomial& f,
                          const GradedPolynomial& g) {
  return poly_add(R, f, poly_neg(R, g));
}

GradedPolynomial term_mul(const Ring& R, Fp c, const Monomial& m,
                          const GradedPolynomial& f) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms())
    out.push_back({R.field.mul(c, t.coeff), m * t.mono});
  return GradedPolynomial::from_terms(R.field, std::move(out));
}

GradedPolynomial poly_one(const Ring& R) {
  return GradedPolynomial::from_terms(R.field, {{1, Monomial::one(R.nvars)}});
}

GradedPolynomial poly_var(const Ring& R, int i) {
  return GradedPolynomial::from_terms(R.field, {{1, Monomial::var(R.nvars, i)}});
}

GradedPolynomial poly_monomial(const Ring& R, Fp c, const Monomial& m) {
  return GradedPolynomial::from_terms(R.field, {{c, m}});
}

namespace {

void enumerate_monomials(int nvars, int var, int remaining, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.push_back(Monomial(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate_monomials(nvars, var + 1, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const Ring& R, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> exps(R.nvars, 0);
  enumerate_monomials(R.nvars, 0, d, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; });
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in polynomial");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }
};

}  // namespace

GradedPolynomial parse_poly(const Ring& R, std::string_view text) {
  Cursor c{text};
  std::vector<Term> terms;
  bool first = true;
  while (!c.done()) {
    long long sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.take() == '-' ? -1 : 1;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms");
    }
    first = false;
    if (c.done()) throw ParseError("dangling sign in polynomial");

    long long coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.integer();
      saw_coeff = true;
    }
    std::vector<int> exps(R.nvars, 0);
    bool saw_var = false;
    while (!c.done()) {
      if (c.peek() == '*') {
        c.take();
      } else if (c.peek() == 'x') {
        // "2x0" and "x0x1" are rejected: powers are '*'-separated
        if (saw_var || saw_coeff) throw ParseError("powers must be '*'-separated");
      } else {
        break;
      }
      if (c.done() || c.peek() != 'x') throw ParseError("expected variable");
      c.take();
      long long idx = c.integer();
      if (idx < 0 || idx >= R.nvars) throw ParseError("variable index out of range");
      long long e = 1;
      if (!c.done() && c.peek() == '^') {
        c.take();
        e = c.integer();
        if (e < 0) throw ParseError("negative exponent");
      }
      exps[static_cast<std::size_t>(idx)] += static_cast<int>(e);
      saw_var = true;
      saw_coeff = true;  // any further variable needs a '*'
    }
    terms.push_back({R.field.from_int(sign * coeff), Monomial(exps)});
  }
  try {
    return GradedPolynomial::from_terms(R.field, std::move(terms));
  } catch (const InhomogeneousInput&) {
    throw ParseError("polynomial text is not homogeneous");
  }
}

std::string format_monomial(const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << '*';
    os << 'x' << i;
    if (e[i] > 1) os << '^' << e[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::string format_poly(const GradedPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool constant = t.mono.degree() == 0;
    if (t.coeff != 1 || constant) {
      os << t.coeff;
      if (!constant) os << '*';
    }
    if (!constant) os << format_monomial(t.mono);
  }
  return os.str();
}

}  // namespace serreq
