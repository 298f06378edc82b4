#include "starq/fock.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "starq/error.hpp"

namespace starq {

namespace {

int below(std::uint32_t mask, int i) { return std::popcount(mask & ((1u << (i - 1)) - 1u)); }

bool has(std::uint32_t mask, int i) { return (mask >> (i - 1)) & 1u; }

// Left multiplication by xi_i; returns the sign, 0 when xi_i is present.
int insert_xi(std::uint32_t& mask, int i) {
  if (has(mask, i)) return 0;
  int s = below(mask, i) % 2 ? -1 : 1;
  mask |= 1u << (i - 1);
  return s;
}

// Left derivative d/dxi_i; returns the sign, 0 when xi_i is absent.
int remove_xi(std::uint32_t& mask, int i) {
  if (!has(mask, i)) return 0;
  int s = below(mask, i) % 2 ? -1 : 1;
  mask &= ~(1u << (i - 1));
  return s;
}

std::string exponent_str(const Scalar& e) {
  if (auto k = e.as_integer(); k && *k > 0) return std::to_string(*k);
  return "(" + e.str() + ")";
}

Weight component_weight(const FockElement& v) {
  if (v.is_zero()) throw std::logic_error("weight of zero vector");
  return v.terms().begin()->first.weight();
}

bool is_ge_some(const Weight& w, const std::vector<Weight>& ts) {
  return std::any_of(ts.begin(), ts.end(), [&](const Weight& t) { return leq(t, w); });
}

long sup_distance(const Weight& a, const Weight& b) {
  long d = 0;
  for (int i = 1; i <= a.n(); ++i) {
    auto k = diff_in_Z(a[i], b[i]);
    if (!k) throw std::logic_error("weights in different cosets");
    d = std::max(d, std::labs(*k));
  }
  return d;
}

std::vector<Generator> raising(int n) {
  std::vector<Generator> g;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      g.push_back(Generator::even_unit(n, i, j));
      g.push_back(Generator::odd_unit(n, i, j));
    }
  return g;
}

std::vector<Generator> lowering(int n) {
  std::vector<Generator> g;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      g.push_back(Generator::even_unit(n, j, i));
      g.push_back(Generator::odd_unit(n, j, i));
    }
  return g;
}

}  // namespace

int Monomial::parity() const { return std::popcount(mask) % 2; }

Weight Monomial::weight() const {
  std::vector<Scalar> w = x;
  for (int i = 1; i <= n(); ++i)
    if (has(mask, i)) w[static_cast<size_t>(i - 1)] += Scalar(1);
  return Weight(std::move(w));
}

Scalar Monomial::degree() const {
  Scalar d = std::popcount(mask);
  for (const auto& e : x) d += e;
  return d;
}

std::string Monomial::str() const {
  std::string out;
  auto sep = [&] {
    if (!out.empty()) out += " ";
  };
  for (int i = 1; i <= n(); ++i) {
    const Scalar& e = x[static_cast<size_t>(i - 1)];
    if (e.is_zero()) continue;
    sep();
    out += "x" + std::to_string(i);
    if (!(e == Scalar(1))) out += "^" + exponent_str(e);
  }
  for (int i = 1; i <= n(); ++i)
    if (has(mask, i)) {
      sep();
      out += "xi" + std::to_string(i);
    }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, int n) {
  auto fail = [&](const std::string& why) -> Monomial {
    throw DomainError(ErrorCode::ParseError, "bad monomial '" + std::string(text) + "': " + why);
  };
  if (n < 1 || n > 31) fail("unsupported n");
  Monomial m;
  m.x.assign(static_cast<size_t>(n), Scalar(0));
  size_t p = 0;
  int last_xi = 0;
  auto skip = [&] {
    while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == '*')) ++p;
  };
  skip();
  if (p < text.size() && text.substr(p) == "1") return m;
  while (skip(), p < text.size()) {
    bool xi = text.substr(p, 2) == "xi";
    if (!xi && text[p] != 'x') fail("expected x or xi");
    p += xi ? 2 : 1;
    size_t q = p;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q == p) fail("missing index");
    int i = std::stoi(std::string(text.substr(p, q - p)));
    if (i < 1 || i > n) fail("index out of range");
    p = q;
    if (xi) {
      if (i <= last_xi) fail("xi indices must be strictly ascending");
      last_xi = i;
      m.mask |= 1u << (i - 1);
      continue;
    }
    Scalar e = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      if (p < text.size() && text[p] == '(') {
        int depth = 0;
        size_t start = p;
        for (; p < text.size(); ++p) {
          if (text[p] == '(') ++depth;
          if (text[p] == ')' && --depth == 0) break;
        }
        if (p == text.size()) fail("unbalanced parentheses");
        e = parse_scalar(text.substr(start + 1, p - start - 1));
        ++p;
      } else {
        size_t start = p;
        if (p < text.size() && text[p] == '-') ++p;
        while (p < text.size() && std::isalnum(static_cast<unsigned char>(text[p]))) ++p;
        if (p == start) fail("missing exponent");
        e = parse_scalar(text.substr(start, p - start));
      }
    }
    m.x[static_cast<size_t>(i - 1)] += e;
  }
  return m;
}

FockElement::FockElement(const Monomial& m, RatFunc c) { add(m, c); }

int FockElement::parity() const {
  if (t_.empty()) return 0;
  int p = t_.begin()->first.parity();
  for (const auto& [m, c] : t_)
    if (m.parity() != p) throw std::logic_error("inhomogeneous Fock element");
  return p;
}

void FockElement::add(const Monomial& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FockElement FockElement::operator-() const {
  FockElement r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

FockElement& FockElement::operator+=(const FockElement& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

FockElement operator*(const RatFunc& c, const FockElement& v) {
  FockElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, a] : v.t_) r.add(m, c * a);
  return r;
}

bool operator==(const FockElement& a, const FockElement& b) { return (a - b).is_zero(); }

std::map<Weight, FockElement> FockElement::weight_components() const {
  std::map<Weight, FockElement> out;
  for (const auto& [m, c] : t_) out[m.weight()].add(m, c);
  return out;
}

std::string FockElement::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    std::string coef = c.str();
    bool neg = false;
    if (coef.size() > 1 && coef[0] == '-' && coef.find_first_of("+- ", 1) == std::string::npos) {
      neg = true;
      coef = coef.substr(1);
    }
    if (coef.find_first_of("+- ", 0) != std::string::npos) coef = "(" + coef + ")";
    std::string mono = m.str();
    std::string term = coef == "1" ? mono : (mono == "1" ? coef : coef + " " + mono);
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

FockElement apply(const DiffOp& op, const FockElement& v) {
  FockElement out;
  for (const auto& [m, c] : v.terms()) {
    for (const auto& t : op.terms) {
      if (t.coef == 0) continue;
      Monomial r = m;
      RatFunc k = RatFunc(Poly(t.coef));
      int sign = 1;
      auto xi = static_cast<size_t>(t.i - 1), xj = static_cast<size_t>(t.j - 1);
      switch (t.kind) {
        case DiffOp::Kind::XX:
          if (r.x[xj].is_zero()) continue;
          k *= RatFunc(Poly(r.x[xj]));
          r.x[xj] -= Scalar(1);
          r.x[xi] += Scalar(1);
          break;
        case DiffOp::Kind::QQ:
          sign = remove_xi(r.mask, t.j);
          if (sign != 0) sign *= insert_xi(r.mask, t.i);
          break;
        case DiffOp::Kind::XQ:
          sign = remove_xi(r.mask, t.j);
          r.x[xi] += Scalar(1);
          break;
        case DiffOp::Kind::QX:
          if (r.x[xj].is_zero()) continue;
          k *= RatFunc(Poly(r.x[xj]));
          r.x[xj] -= Scalar(1);
          sign = insert_xi(r.mask, t.i);
          break;
      }
      if (sign == 0) continue;
      out.add(r, sign > 0 ? k * c : -(k * c));
    }
  }
  return out;
}

Generator Generator::zero(int n) {
  Generator g;
  g.n = n;
  g.A.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  g.B = g.A;
  return g;
}

Generator Generator::even_unit(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("generator index out of range");
  Generator g = zero(n);
  g.A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
  return g;
}

Generator Generator::odd_unit(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("generator index out of range");
  Generator g = zero(n);
  g.B[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
  return g;
}

namespace {

bool is_zero_matrix(const Matrix& m) {
  for (const auto& r : m)
    for (const auto& q : r)
      if (q != 0) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix r(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Matrix mat_lin(const Matrix& a, const Matrix& b, const Rational& s) {  // a + s b
  Matrix r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[i][j] += s * b[i][j];
  return r;
}

}  // namespace

bool Generator::is_even() const { return is_zero_matrix(B); }
bool Generator::is_odd() const { return is_zero_matrix(A); }

int Generator::parity() const {
  if (is_even()) return 0;
  if (is_odd()) return 1;
  throw std::logic_error("inhomogeneous generator");
}

DiffOp Generator::op() const {
  DiffOp d;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational& a = A[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      const Rational& b = B[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      if (a != 0) {
        d.terms.push_back({DiffOp::Kind::XX, i, j, a});
        d.terms.push_back({DiffOp::Kind::QQ, i, j, a});
      }
      if (b != 0) {
        d.terms.push_back({DiffOp::Kind::XQ, i, j, b});
        d.terms.push_back({DiffOp::Kind::QX, i, j, b});
      }
    }
  return d;
}

std::string Generator::str() const {
  std::string out;
  auto emit = [&](const Matrix& m, const char* tag) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Rational& q = m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
        if (q == 0) continue;
        if (!out.empty()) out += " + ";
        if (q != 1) out += format_rational(q) + "*";
        out += std::string(tag) + std::to_string(i) + std::to_string(j);
      }
  };
  emit(A, "a");
  emit(B, "b");
  return out.empty() ? "0" : out;
}

Generator bracket(const Generator& x, const Generator& y) {
  Generator xy = Generator::zero(x.n), yx = Generator::zero(x.n);
  xy.A = mat_lin(mat_mul(x.A, y.A), mat_mul(x.B, y.B), 1);
  xy.B = mat_lin(mat_mul(x.A, y.B), mat_mul(x.B, y.A), 1);
  yx.A = mat_lin(mat_mul(y.A, x.A), mat_mul(y.B, x.B), 1);
  yx.B = mat_lin(mat_mul(y.A, x.B), mat_mul(y.B, x.A), 1);
  Rational s = x.parity() * y.parity() == 1 ? -1 : 1;
  Generator r = Generator::zero(x.n);
  r.A = mat_lin(xy.A, yx.A, -s);
  r.B = mat_lin(xy.B, yx.B, -s);
  return r;
}

FockElement apply(const Generator& g, const FockElement& v) { return apply(g.op(), v); }

DiffOp fock_J(int n) {
  DiffOp d;
  for (int i = 1; i <= n; ++i) {
    d.terms.push_back({DiffOp::Kind::XQ, i, i, 1});
    d.terms.push_back({DiffOp::Kind::QX, i, i, -1});
  }
  return d;
}

bool FockModule::contains(const Monomial& m) const {
  if (m.n() != n()) return false;
  Scalar total = 0;
  for (int i = 1; i <= n(); ++i) {
    if (!diff_in_Z(m.x[static_cast<size_t>(i - 1)], mu_[i])) return false;
    total += mu_[i];
  }
  return m.degree() == total;
}

bool FockModule::contains(const FockElement& v) const {
  return std::all_of(v.terms().begin(), v.terms().end(), [&](const auto& t) { return contains(t.first); });
}

bool FockModule::supports(const Weight& nu) const { return weight_space_dim(mu_, nu) > 0; }

std::vector<Monomial> FockModule::weight_basis(const Weight& nu) const {
  std::vector<Monomial> out;
  if (!supports(nu)) return out;
  for (std::uint32_t mask = 0; mask < (1u << n()); ++mask) {
    Monomial m;
    m.mask = mask;
    for (int i = 1; i <= n(); ++i) m.x.push_back(nu[i] - Scalar(has(mask, i) ? 1 : 0));
    out.push_back(std::move(m));
  }
  return out;
}

int weight_space_dim(const Weight& mu, const Weight& nu) {
  if (mu.n() != nu.n()) return 0;
  long sum = 0;
  for (int i = 1; i <= mu.n(); ++i) {
    auto d = diff_in_Z(nu[i], mu[i]);
    if (!d) return 0;
    sum += *d;
  }
  return sum == 0 ? 1 << mu.n() : 0;
}

std::vector<RatFunc> Rref::reduce(std::vector<RatFunc> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    RatFunc a = v[pivots_[r]];
    if (a.is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= a * rows_[r][j];
  }
  return v;
}

bool Rref::add(std::vector<RatFunc> v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  RatFunc inv = RatFunc(1) / v[p];
  for (auto& a : v) a *= inv;
  for (auto& row : rows_) {
    RatFunc a = row[p];
    if (a.is_zero()) continue;
    for (size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) row[j] -= a * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> m, size_t cols) {
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t r = rank;
    while (r < m.size() && m[r][c].is_zero()) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    RatFunc inv = RatFunc(1) / m[rank][c];
    for (auto& a : m[rank]) a *= inv;
    for (size_t o = 0; o < m.size(); ++o) {
      if (o == rank || m[o][c].is_zero()) continue;
      RatFunc a = m[o][c];
      for (size_t j = 0; j < cols; ++j)
        if (!m[rank][j].is_zero()) m[o][j] -= a * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<std::vector<RatFunc>> basis;
  std::set<size_t> pivots(pivot_col.begin(), pivot_col.end());
  for (size_t f = 0; f < cols; ++f) {
    if (pivots.count(f)) continue;
    std::vector<RatFunc> v(cols);
    v[f] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatFunc> coords(const FockElement& v, const Weight& nu) {
  std::vector<RatFunc> c(static_cast<size_t>(1) << nu.n());
  for (const auto& [m, a] : v.terms()) {
    if (!(m.weight() == nu)) throw std::logic_error("vector not in weight space " + nu.str());
    c[m.mask] = a;
  }
  return c;
}

FockElement from_coords(const std::vector<RatFunc>& c, const Weight& nu) {
  FockElement v;
  for (std::uint32_t mask = 0; mask < c.size(); ++mask) {
    if (c[mask].is_zero()) continue;
    Monomial m;
    m.mask = mask;
    for (int i = 1; i <= nu.n(); ++i) m.x.push_back(nu[i] - Scalar(has(mask, i) ? 1 : 0));
    v.add(m, c[mask]);
  }
  return v;
}

std::vector<FockElement> polynomial_part(int n, int d) {
  std::vector<FockElement> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int rest = d - std::popcount(mask);
    if (rest < 0) continue;
    // compositions of rest into n nonnegative parts
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[0] = rest;
    while (true) {
      Monomial m;
      m.mask = mask;
      for (int x : e) m.x.push_back(Scalar(x));
      out.emplace_back(m);
      // next composition in reverse lex order
      int k = n - 2;
      while (k >= 0 && e[static_cast<size_t>(k)] == 0) --k;
      if (k < 0) break;
      e[static_cast<size_t>(k)]--;
      int tail = e[static_cast<size_t>(n - 1)] + 1;
      e[static_cast<size_t>(n - 1)] = 0;
      e[static_cast<size_t>(k + 1)] = tail;
    }
  }
  return out;
}

SubmoduleSpan::SubmoduleSpan(const FockModule& F, const std::vector<FockElement>& generators,
                             const std::vector<Weight>& targets, int window)
    : F_(F), targets_(targets) {
  const int n = F.n();
  const size_t dim = static_cast<size_t>(1) << n;
  auto check_window = [&](const Weight& w) {
    long best = -1;
    for (const auto& t : targets_) {
      long d = sup_distance(w, t);
      if (best < 0 || d < best) best = d;
    }
    if (best > window)
      throw DomainError(ErrorCode::WindowTooSmall,
                        "submodule closure reaches weight " + w.str() + " outside window " + std::to_string(window));
  };

  // U(b)-closure: raising root vectors and the odd Cartan elements.
  std::vector<Generator> up = raising(n);
  for (int j = 1; j <= n; ++j) up.push_back(Generator::H(n, j));
  std::map<Weight, Rref> borel;
  std::deque<FockElement> queue;
  auto push = [&](std::map<Weight, Rref>& spaces, const FockElement& v) {
    for (const auto& [w, comp] : v.weight_components()) {
      auto it = spaces.try_emplace(w, Rref(dim)).first;
      if (it->second.add(coords(comp, w))) queue.push_back(comp);
    }
  };
  for (const auto& g : generators) {
    if (!F.contains(g)) throw DomainError(ErrorCode::NotInModule, "generator not in F_mu: " + g.str());
    for (const auto& [w, comp] : g.weight_components()) {
      check_window(w);
      push(borel, comp);
    }
  }
  while (!queue.empty()) {
    FockElement v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : up) {
      FockElement r = apply(g, v);
      if (r.is_zero()) continue;
      check_window(component_weight(r));
      push(borel, r);
    }
  }

  // U(n-) applied to the U(b)-closure; only weights above some target matter.
  std::vector<Generator> down = lowering(n);
  for (const auto& [w, space] : borel) {
    if (!is_ge_some(w, targets_)) continue;
    for (const auto& row : space.rows()) push(spaces_, from_coords(row, w));
  }
  while (!queue.empty()) {
    FockElement v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : down) {
      FockElement r = apply(g, v);
      if (r.is_zero() || !is_ge_some(component_weight(r), targets_)) continue;
      push(spaces_, r);
    }
  }
}

const Rref& SubmoduleSpan::space(const Weight& nu) const {
  if (std::find(targets_.begin(), targets_.end(), nu) == targets_.end())
    throw std::logic_error("weight " + nu.str() + " is not a target of this span");
  static const Rref empty;
  auto it = spaces_.find(nu);
  return it == spaces_.end() ? empty : it->second;
}

FockElement SubmoduleSpan::reduce(const FockElement& v) const {
  FockElement out;
  for (const auto& [w, comp] : v.weight_components()) {
    const Rref& s = space(w);
    out += s.rank() == 0 ? comp : from_coords(s.reduce(coords(comp, w)), w);
  }
  return out;
}

bool SubmoduleSpan::contains(const FockElement& v) const { return reduce(v).is_zero(); }

std::vector<FockElement> SubmoduleSpan::basis(const Weight& nu) const {
  std::vector<FockElement> out;
  for (const auto& row : space(nu).rows()) out.push_back(from_coords(row, nu));
  return out;
}

std::vector<FockElement> find_primitive(const FockModule& F,
                                        const std::vector<FockElement>& quotient_generators,
                                        const Weight& nu, int window) {
  const int n = F.n();
  if (!F.supports(nu)) return {};
  std::vector<Weight> targets{nu};
  for (int i = 1; i < n; ++i) targets.push_back(nu + simple_root(n, i));
  SubmoduleSpan S(F, quotient_generators, targets, window);

  std::vector<Monomial> basis = F.weight_basis(nu);
  Rref found(basis.size());
  std::vector<FockElement> out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<size_t> cols;
    for (size_t m = 0; m < basis.size(); ++m)
      if (basis[m].parity() == parity) cols.push_back(m);
    std::vector<std::vector<RatFunc>> rows;
    for (int i = 1; i < n; ++i) {
      Weight up = nu + simple_root(n, i);
      for (const auto& g : {Generator::e(n, i), Generator::E(n, i)}) {
        std::vector<std::vector<RatFunc>> images;
        for (size_t c : cols) images.push_back(coords(S.reduce(apply(g, FockElement(basis[c]))), up));
        for (size_t k = 0; k < images[0].size(); ++k) {
          std::vector<RatFunc> row;
          for (const auto& img : images) row.push_back(img[k]);
          rows.push_back(std::move(row));
        }
      }
    }
    auto ker = rows.empty() ? nullspace({}, cols.size()) : nullspace(rows, cols.size());
    for (const auto& kv : ker) {
      FockElement v;
      for (size_t j = 0; j < cols.size(); ++j) v.add(basis[cols[j]], kv[j]);
      FockElement r = S.reduce(v);
      if (r.is_zero()) continue;
      if (found.add(coords(r, nu))) out.push_back(r);
    }
  }
  return out;
}

bool in_span(const std::vector<FockElement>& vs, const FockElement& target, const Weight& nu) {
  Rref r(static_cast<size_t>(1) << nu.n());
  for (const auto& v : vs) r.add(coords(v, nu));
  auto red = r.reduce(coords(target, nu));
  return std::all_of(red.begin(), red.end(), [](const RatFunc& a) { return a.is_zero(); });
}

void CheckReport::expect(bool ok, const std::string& what) {
  ++cases;
  if (!ok) {
    passed = false;
    witnesses.push_back("FAIL " + what);
  } else if (witnesses.size() < 8) {
    witnesses.push_back(what);
  }
}

namespace {

Monomial random_monomial(std::mt19937& rng, const Weight& mu) {
  const int n = mu.n();
  std::uniform_int_distribution<int> shift(-3, 3);
  std::uniform_int_distribution<std::uint32_t> masks(0, (1u << n) - 1);
  Monomial m;
  m.mask = masks(rng);
  long used = std::popcount(m.mask);
  for (int i = 1; i < n; ++i) {
    int d = shift(rng);
    used += d;
    m.x.push_back(mu[i] + Scalar(d));
  }
  m.x.push_back(mu[n] - Scalar(used));
  return m;
}

Generator random_generator(std::mt19937& rng, int n, int parity) {
  std::uniform_int_distribution<int> coef(-2, 2), idx(1, n), count(1, 3);
  Generator g = Generator::zero(n);
  Matrix& M = parity == 0 ? g.A : g.B;
  int k = count(rng);
  for (int t = 0; t < k; ++t) {
    int c = coef(rng);
    M[static_cast<size_t>(idx(rng) - 1)][static_cast<size_t>(idx(rng) - 1)] += c == 0 ? 1 : c;
  }
  if (parity == 0 ? g.is_odd() : g.is_even())  // all entries cancelled
    M[0][0] = 1;
  return g;
}

std::vector<Generator> basic_generators(int n) {
  std::vector<Generator> g;
  for (int i = 1; i < n; ++i) {
    g.push_back(Generator::e(n, i));
    g.push_back(Generator::f(n, i));
    g.push_back(Generator::E(n, i));
    g.push_back(Generator::F(n, i));
  }
  for (int j = 1; j <= n; ++j) {
    g.push_back(Generator::h(n, j));
    g.push_back(Generator::H(n, j));
  }
  return g;
}

}  // namespace

CheckReport check_J(int n, int samples, unsigned seed) {
  CheckReport rep;
  rep.check = "J";
  std::mt19937 rng(seed);
  const DiffOp J = fock_J(n);
  const Weight mu = zero_weight(n);
  std::vector<Generator> gens = basic_generators(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int s = 0; s < samples; ++s) {
    FockElement v(random_monomial(rng, mu));
    FockElement Jv = apply(J, v);
    rep.expect(apply(J, Jv).is_zero(), "J^2 (" + v.str() + ") = 0");
    std::vector<Generator> gs = gens;
    gs.push_back(random_generator(rng, n, coin(rng)));
    for (const auto& g : gs) {
      FockElement lhs = apply(J, apply(g, v));
      FockElement rhs = apply(g, Jv);
      FockElement comm = g.parity() == 0 ? lhs - rhs : lhs + rhs;
      rep.expect(comm.is_zero(), "[J, " + g.str() + "] (" + v.str() + ") = 0");
    }
  }
  return rep;
}

CheckReport check_homomorphism(int n, int samples, unsigned seed) {
  CheckReport rep;
  rep.check = "homomorphism";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Scalar> mu{Scalar::param("c")};
  for (int i = 2; i <= n; ++i) mu.push_back(Scalar(Rational(i - 1, 2)));
  const Weight w(mu);
  for (int s = 0; s < samples; ++s) {
    Generator x = random_generator(rng, n, coin(rng));
    Generator y = random_generator(rng, n, coin(rng));
    FockElement v(random_monomial(rng, w));
    FockElement lhs = apply(bracket(x, y), v);
    FockElement xy = apply(x, apply(y, v)), yx = apply(y, apply(x, v));
    FockElement rhs = x.parity() * y.parity() == 1 ? xy + yx : xy - yx;
    rep.expect(lhs == rhs, "[" + x.str() + ", " + y.str() + "] on " + v.str());
  }
  return rep;
}

CheckReport check_u_relations() {
  CheckReport rep;
  rep.check = "u_relations";
  const int n = 3;
  const FockModule F(zero_weight(n));
  const Monomial one{{0, 0, 0}, 0};
  const FockElement v0(parse_monomial("x1^(-1) xi1", n));
  const FockElement v1 = apply(Generator::f(n, 1), v0);
  const FockElement u = apply(Generator::F(n, 2), apply(Generator::f(n, 1), v1)) -
                        apply(Generator::f(n, 2), apply(Generator::F(n, 1), v1));
  const Weight wu = u.is_zero() ? zero_weight(n) : component_weight(u);
  std::vector<Weight> targets{zero_weight(n) - simple_root(n, 1), wu};
  std::vector<Generator> n0plus;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      n0plus.push_back(Generator::even_unit(n, i, j));
      targets.push_back(wu + epsilon(n, i) - epsilon(n, j));
    }
  SubmoduleSpan C(F, {FockElement(one)}, targets, 4);

  FockElement expected_v1 = FockElement(parse_monomial("x1^(-1) xi2", n)) -
                            FockElement(parse_monomial("x1^(-2) x2 xi1", n));
  rep.expect(v1 == expected_v1, "v1 = f1 v0 = " + v1.str());
  rep.expect(!u.is_zero() && !C.contains(u), "u = " + u.str() + " is nonzero in F0/C");
  for (const auto& g : n0plus) rep.expect(C.contains(apply(g, u)), g.str() + " u = 0 in F0/C");
  const FockElement e1u = C.reduce(apply(Generator::E(n, 1), u));
  rep.expect(e1u.is_zero(), "E1 u = 0 in F0/C (computed " + e1u.str() + ")");
  rep.expect(C.contains(apply(Generator::E(n, 2), u) - apply(Generator::f(n, 1), v1)),
             "E2 u = f1 v1 = " + apply(Generator::f(n, 1), v1).str() + " in F0/C");
  return rep;
}

CheckReport check_primitives() {
  CheckReport rep;
  rep.check = "primitives";
  for (int n = 2; n <= 4; ++n) {
    for (int c = 1; c <= 3; ++c) {
      if (n == 4 && c > 2) continue;
      FockModule F(Scalar(c) * epsilon(n, 1));
      Weight nu = star(1, Scalar(c) * epsilon(n, 1));
      auto prims = find_primitive(F, polynomial_part(n, c), nu, c + 2);
      std::string v = "x1^(-1) x2" + (c > 1 ? "^" + std::to_string(c) : std::string()) + " xi1";
      FockElement target(parse_monomial(v, n));
      SubmoduleSpan S(F, polynomial_part(n, c), {nu}, c + 2);
      rep.expect(in_span(prims, S.reduce(target), nu),
                 "n=" + std::to_string(n) + " F_" + std::to_string(c) + "/poly at " + nu.str() + ": " + v +
                     " primitive (" + std::to_string(prims.size()) + " found)");
    }
  }
  for (int n = 2; n <= 4; ++n) {
    FockModule F(zero_weight(n));
    std::vector<FockElement> C{FockElement(Monomial{std::vector<Scalar>(static_cast<size_t>(n), Scalar(0)), 0})};
    Weight nu = zero_weight(n) - simple_root(n, 1);
    auto prims = find_primitive(F, C, nu, 3);
    FockElement v1 = FockElement(parse_monomial("x1^(-1) xi2", n)) - FockElement(parse_monomial("x1^(-2) x2 xi1", n));
    rep.expect(in_span(prims, v1, nu), "n=" + std::to_string(n) + " F_0/C at " + nu.str() + ": " + v1.str() +
                                           " primitive (" + std::to_string(prims.size()) + " found)");
    auto prims0 = find_primitive(F, C, zero_weight(n), 3);
    FockElement v0(parse_monomial("x1^(-1) xi1", n));
    rep.expect(in_span(prims0, v0, zero_weight(n)), "n=" + std::to_string(n) + " F_0/C at 0: " + v0.str() +
                                                        " primitive (" + std::to_string(prims0.size()) + " found)");
  }
  return rep;
}

CheckReport check_weight_spaces(int samples, unsigned seed) {
  CheckReport rep;
  rep.check = "weight_spaces";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> ns(2, 4), shift(-2, 2), kind(0, 2);
  for (int s = 0; s < samples; ++s) {
    const int n = ns(rng);
    std::vector<Scalar> mu;
    for (int i = 1; i <= n; ++i) {
      switch (kind(rng)) {
        case 0: mu.push_back(Scalar(shift(rng))); break;
        case 1: mu.push_back(Scalar(Rational(2 * shift(rng) + 1, 2))); break;
        default: mu.push_back(Scalar::param("c") + Scalar(shift(rng))); break;
      }
    }
    const Weight m(mu);
    std::vector<int> d;
    int total = 0;
    for (int i = 1; i < n; ++i) {
      d.push_back(shift(rng));
      total += d.back();
    }
    d.push_back(-total);
    Weight nu = m;
    for (int i = 1; i <= n; ++i) nu[i] += Scalar(d[static_cast<size_t>(i - 1)]);

    // Count monomials of weight nu in a box around mu, independently of the
    // closed form.
    const FockModule F(m);
    int R = 1;
    for (int x : d) R = std::max(R, std::abs(x) + 1);
    int count = 0, even = 0;
    std::vector<int> e(static_cast<size_t>(n), -R);
    while (true) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Monomial mono;
        mono.mask = mask;
        for (int i = 1; i <= n; ++i) mono.x.push_back(m[i] + Scalar(e[static_cast<size_t>(i - 1)]));
        if (F.contains(mono) && mono.weight() == nu) {
          ++count;
          if (mono.parity() == 0) ++even;
        }
      }
      size_t k = 0;
      while (k < e.size() && e[k] == R) e[k++] = -R;
      if (k == e.size()) break;
      ++e[k];
    }
    int dim = weight_space_dim(m, nu);
    rep.expect(dim == (1 << n) && count == dim && even == dim / 2,
               "F_" + m.str() + " at " + nu.str() + ": dim " + std::to_string(dim) + ", counted " +
                   std::to_string(count) + " (" + std::to_string(even) + " even)");
  }
  return rep;
}

}  // namespace starq
