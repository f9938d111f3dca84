#include "gendouble/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

#include "gendouble/error.hpp"

namespace gd {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) {
    throw AlgebraError(ErrorKind::RingMismatch, "operands live in different rings");
  }
  if (a.domain() != b.domain() || a.modulus() != b.modulus()) {
    throw AlgebraError(ErrorKind::DomainMismatch, "operands use different coefficient domains");
  }
}

struct DescendingMono {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
};

}  // namespace

Poly::Poly(RingPtr ring, CoeffDomain domain, u64 modulus)
    : ring_(std::move(ring)), domain_(domain), modulus_(domain == CoeffDomain::Integer ? 0 : modulus) {
  if (!ring_) throw AlgebraError(ErrorKind::InvalidArgument, "null ring");
  if (domain_ == CoeffDomain::PrimeField && modulus_ < 2) {
    throw AlgebraError(ErrorKind::InvalidArgument, "prime-field polynomial without modulus");
  }
}

Poly Poly::constant(RingPtr ring, const mpz_class& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->num_vars()) throw AlgebraError(ErrorKind::IndexOutOfRange, "variable index");
  Poly p(std::move(ring));
  Monomial m;
  m.set_exponent(var, 1);
  p.terms_.push_back({m, 1});
  return p;
}

void Poly::normalize_coeff(mpz_class& c) const {
  if (domain_ == CoeffDomain::PrimeField) {
    mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), modulus_);
  }
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms, CoeffDomain domain, u64 modulus) {
  Poly p(std::move(ring), domain, modulus);
  for (auto& t : terms) {
    for (std::size_t v = p.ring_->num_vars(); v < kMaxVars; ++v) {
      if (t.mono.exponent(v) != 0) throw AlgebraError(ErrorKind::RingMismatch, "monomial uses a variable outside the ring");
    }
    p.normalize_coeff(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      p.normalize_coeff(p.terms_.back().coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw AlgebraError(ErrorKind::InvalidArgument, "leading term of zero");
  return terms_.front();
}

int Poly::min_degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

int Poly::max_weighted_degree() const {
  if (terms_.empty()) return kZeroDegree;
  int d = INT_MIN;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(*ring_));
  return d;
}

int Poly::min_weighted_degree() const {
  if (terms_.empty()) return kZeroDegree;
  int d = INT_MAX;
  for (const auto& t : terms_) d = std::min(d, t.mono.weighted_degree(*ring_));
  return d;
}

bool Poly::is_homogeneous() const { return terms_.empty() || max_weighted_degree() == min_weighted_degree(); }

bool Poly::is_canonical() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0) return false;
    if (domain_ == CoeffDomain::PrimeField && (terms_[i].coeff < 0 || terms_[i].coeff >= mpz_class(std::to_string(modulus_)))) {
      return false;
    }
    if (i > 0 && compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.coeff = -t.coeff;
    r.normalize_coeff(t.coeff);
  }
  return r;
}

namespace {

// Merge of two sorted term lists; sign selects a + b or a - b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              CoeffDomain domain, u64 modulus) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto fix = [&](mpz_class& c) {
    if (domain == CoeffDomain::PrimeField) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), modulus);
  };
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Term t = b[j++];
      if (subtract) {
        t.coeff = -t.coeff;
        fix(t.coeff);
      }
      out.push_back(std::move(t));
    } else {
      mpz_class c = a[i].coeff;
      if (subtract) c -= b[j].coeff; else c += b[j].coeff;
      fix(c);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same(*this, other);
  terms_ = merge_terms(terms_, other.terms_, false, domain_, modulus_);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same(*this, other);
  terms_ = merge_terms(terms_, other.terms_, true, domain_, modulus_);
  return *this;
}

Poly Poly::times_term(const Monomial& m, const mpz_class& c) const {
  Poly r(ring_, domain_, modulus_);
  mpz_class cc = c;
  normalize_coeff(cc);
  if (cc == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order.
  for (const auto& t : terms_) {
    mpz_class prod = t.coeff * cc;
    r.normalize_coeff(prod);
    if (prod != 0) r.terms_.push_back({t.mono * m, std::move(prod)});
  }
  return r;
}

Poly Poly::scaled(const mpz_class& c) const { return times_term(Monomial{}, c); }

Poly& Poly::operator*=(const Poly& other) {
  require_same(*this, other);
  if (terms_.empty() || other.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (other.terms_.size() == 1) {
    *this = times_term(other.terms_[0].mono, other.terms_[0].coeff);
    return *this;
  }
  if (terms_.size() == 1) {
    *this = other.times_term(terms_[0].mono, terms_[0].coeff);
    return *this;
  }
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  mpz_class prod;
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) {
      mpz_mul(prod.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
      acc[s.mono * t.mono] += prod;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    normalize_coeff(c);
    if (c != 0) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  terms_ = std::move(out);
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(const Poly& a, const Poly& b) {
  Poly r = a;
  r *= b;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring()) || a.domain_ != b.domain_ || a.modulus_ != b.modulus_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly Poly::promote(RingPtr ring) const {
  if (!ring_->compatible(*ring)) throw AlgebraError(ErrorKind::RingMismatch, "promotion between different n");
  if (ring_->extended() && !ring->extended()) {
    for (const auto& t : terms_)
      for (int i = 0; i < 4; ++i)
        if (t.mono.exponent(ring_->alpha(i)) != 0) {
          throw AlgebraError(ErrorKind::RingMismatch, "polynomial uses alpha variables");
        }
  }
  Poly r = *this;
  r.ring_ = std::move(ring);
  return r;
}

Poly Poly::reduce_mod(u64 p) const {
  if (domain_ == CoeffDomain::PrimeField) {
    if (modulus_ != p) throw AlgebraError(ErrorKind::DomainMismatch, "already reduced modulo another prime");
    return *this;
  }
  Poly r(ring_, CoeffDomain::PrimeField, p);
  for (const auto& t : terms_) {
    mpz_class c;
    mpz_fdiv_r_ui(c.get_mpz_t(), t.coeff.get_mpz_t(), p);
    if (c != 0) r.terms_.push_back({t.mono, std::move(c)});
  }
  return r;
}

Poly Poly::primitive() const {
  if (terms_.empty() || domain_ != CoeffDomain::Integer) return *this;
  mpz_class g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  if (terms_.front().coeff < 0) g = -g;
  if (g == 1) return *this;
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < ring_->num_vars(); ++v) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_->name(v);
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

Poly Poly::parse(RingPtr ring, std::string_view text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> AlgebraError {
    return AlgebraError(ErrorKind::InvalidArgument, "cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  skip();
  if (text.substr(pos) == "0") return Poly(ring);
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  for (;;) {
    skip();
    Term t{Monomial{}, negative ? -1 : 1};
    for (;;) {
      skip();
      if (pos >= text.size()) throw fail("unexpected end");
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        t.coeff *= mpz_class(std::string(text.substr(start, pos - start)));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        auto var = ring->find(text.substr(start, pos - start));
        if (!var) throw fail("unknown variable '" + std::string(text.substr(start, pos - start)) + "'");
        unsigned e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::size_t es = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (es == pos) throw fail("missing exponent");
          e = static_cast<unsigned>(std::stoul(std::string(text.substr(es, pos - es))));
        }
        t.mono.set_exponent(*var, t.mono.exponent(*var) + e);
      } else {
        throw fail("unexpected character");
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back(std::move(t));
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+' && text[pos] != '-') throw fail("expected + or -");
    negative = text[pos] == '-';
    ++pos;
  }
  return from_terms(std::move(ring), std::move(terms));
}

Poly arith(const Poly& a, const Poly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return a + b;
    case ArithKind::Sub: return a - b;
    case ArithKind::Mul: return a * b;
    case ArithKind::Neg: return -a;
  }
  return a;
}

Poly exact_divide(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw AlgebraError(ErrorKind::InvalidArgument, "division by zero polynomial");
  const bool field = a.domain() == CoeffDomain::PrimeField;
  const Term& lead = b.leading();
  mpz_class lead_inv;
  if (field) {
    mpz_class m(std::to_string(a.modulus()));
    mpz_invert(lead_inv.get_mpz_t(), lead.coeff.get_mpz_t(), m.get_mpz_t());
  }
  std::map<Monomial, mpz_class, DescendingMono> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  auto reduce = [&](mpz_class& c) {
    if (field) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), a.modulus());
  };
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) {
      throw AlgebraError(ErrorKind::DivisionNotExact, "leading monomial of the remainder is not divisible");
    }
    mpz_class qc;
    if (field) {
      qc = it->second * lead_inv;
      reduce(qc);
    } else {
      if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
        throw AlgebraError(ErrorKind::DivisionNotExact, "coefficient not divisible");
      }
      mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    }
    Monomial qm = lead.mono.quotient_of(it->first);
    rem.erase(it);
    for (std::size_t k = 1; k < b.terms().size(); ++k) {
      const Term& bt = b.terms()[k];
      Monomial m = qm * bt.mono;
      mpz_class delta = qc * bt.coeff;
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= delta;
      reduce(pos->second);
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  // Quotient terms come out in strictly decreasing order already.
  return Poly::from_terms(a.ring_ptr(), std::move(quotient), a.domain(), a.modulus());
}

u64 evaluate(const Poly& a, std::span<const u64> point, const PrimeField& field) {
  const auto& ring = a.ring();
  if (point.size() < ring.num_vars()) {
    throw AlgebraError(ErrorKind::MissingAssignment,
                       "no value for " + ring.name(point.size()) + " (" + std::to_string(point.size()) + " of " +
                           std::to_string(ring.num_vars()) + " assigned)");
  }
  if (a.domain() == CoeffDomain::PrimeField && a.modulus() != field.modulus()) {
    throw AlgebraError(ErrorKind::DomainMismatch, "evaluation modulus differs from coefficient modulus");
  }
  const u64 p = field.modulus();
  const std::size_t nv = ring.num_vars();
  u64 total = 0;
  for (const auto& t : a.terms()) {
    u64 v = mpz_fdiv_ui(t.coeff.get_mpz_t(), p);
    for (std::size_t var = 0; var < nv && v != 0; ++var) {
      unsigned e = t.mono.exponent(var);
      if (e == 0) continue;
      u64 x = point[var] % p;
      for (unsigned k = 0; k < e; ++k) v = field.mul(v, x);
    }
    total = field.add(total, v);
  }
  return total;
}

Poly poly_sqrt(const Poly& q) {
  if (q.domain() != CoeffDomain::Integer) {
    throw AlgebraError(ErrorKind::DomainMismatch, "square roots need integer coefficients");
  }
  auto not_square = [](const std::string& why) { return AlgebraError(ErrorKind::NotAPerfectSquare, why); };
  if (q.is_zero()) throw not_square("zero input");
  const Term& lt = q.leading();
  if (lt.coeff < 0 || !lt.mono.all_even() || !mpz_perfect_square_p(lt.coeff.get_mpz_t())) {
    throw not_square("leading term is not a square");
  }
  if (q.degree() % 2 != 0 || q.min_degree() % 2 != 0) throw not_square("odd extreme degree");
  const int lowest = q.min_degree() / 2;

  // Peel terms from the top: once s_0..s_{k-1} are known, the leading term of
  // q - (s_0 + ... + s_{k-1})^2 is 2*s_0*s_k.
  Term s0{lt.mono.halved(), sqrt(lt.coeff)};
  Poly root = Poly::from_terms(q.ring_ptr(), {s0});
  Poly rem = q - root * root;
  const mpz_class twice = 2 * s0.coeff;
  while (!rem.is_zero()) {
    const Term& r = rem.leading();
    if (!s0.mono.divides(r.mono) || !mpz_divisible_p(r.coeff.get_mpz_t(), twice.get_mpz_t())) {
      throw not_square("remainder term not divisible by twice the leading root term");
    }
    Term next{s0.mono.quotient_of(r.mono), 0};
    mpz_divexact(next.coeff.get_mpz_t(), r.coeff.get_mpz_t(), twice.get_mpz_t());
    if (next.mono.degree() < lowest || compare(next.mono, root.terms().back().mono) >= 0) {
      throw not_square("root term out of range");
    }
    // rem -= 2*root*next + next^2
    Poly t = Poly::from_terms(q.ring_ptr(), {next});
    rem -= (root.scaled(2) + t) * t;
    root += t;
  }
  if (!(root * root == q)) throw not_square("final check failed");
  return root;
}

}  // namespace gd
