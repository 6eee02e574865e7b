#include "dynr/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace dynr {

namespace {

void require_dim(const LieAlgebra& a, const Vector& v, const char* who) {
  if (v.size() != a.dim) throw DimensionError(std::string(who) + ": element length != algebra dimension");
}

Rational rational_det(std::vector<Rational> m, int n) {
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!m[static_cast<size_t>(r) * n + c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int k = 0; k < n; ++k)
        std::swap(m[static_cast<size_t>(pivot) * n + k], m[static_cast<size_t>(c) * n + k]);
      det = -det;
    }
    Rational p = m[static_cast<size_t>(c) * n + c];
    det *= p;
    for (int r = c + 1; r < n; ++r) {
      Rational factor = m[static_cast<size_t>(r) * n + c] / p;
      if (factor.is_zero()) continue;
      for (int k = c; k < n; ++k)
        m[static_cast<size_t>(r) * n + k] -= factor * m[static_cast<size_t>(c) * n + k];
    }
  }
  return det;
}

LieAlgebra make_abelian(int n) {
  if (n < 1) throw ParseError("abelian(n): n must be positive");
  LieAlgebra a;
  a.dim = n;
  a.name = "abelian(" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i) a.labels.push_back("T" + std::to_string(i + 1));
  a.structure.assign(static_cast<size_t>(n) * n * n, cplx(0));
  a.form = Matrix::Identity(n, n);
  a.real_form = true;
  ExactScalars ex;
  ex.structure.assign(static_cast<size_t>(n) * n * n, Rational(0));
  ex.form.assign(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) ex.form[static_cast<size_t>(i) * n + i] = Rational(1);
  a.exact = std::move(ex);
  return a;
}

void set_exact_structure(ExactScalars& ex, int n, int j, int k, int l, const Rational& v) {
  ex.structure[(static_cast<size_t>(j) * n + k) * n + l] = v;
  ex.structure[(static_cast<size_t>(k) * n + j) * n + l] = -v;
}

LieAlgebra make_sl2(bool real_tag) {
  LieAlgebra a;
  a.dim = 3;
  a.name = real_tag ? "sl2_real" : "sl2";
  a.labels = {"H", "E", "F"};
  a.structure.assign(27, cplx(0));
  ExactScalars ex;
  ex.structure.assign(27, Rational(0));
  ex.form.assign(9, Rational(0));
  // [H,E] = 2E, [H,F] = -2F, [E,F] = H
  set_exact_structure(ex, 3, 0, 1, 1, Rational(2));
  set_exact_structure(ex, 3, 0, 2, 2, Rational(-2));
  set_exact_structure(ex, 3, 1, 2, 0, Rational(1));
  ex.form = killing_form(ex.structure, 3);
  a.form = Matrix::Zero(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      a.form(j, k) = ex.form[static_cast<size_t>(j) * 3 + k].to_double();
      for (int l = 0; l < 3; ++l)
        a.fref(j, k, l) = ex.structure[(static_cast<size_t>(j) * 3 + k) * 3 + l].to_double();
    }
  a.exact = std::move(ex);
  a.real_form = real_tag;
  return a;
}

LieAlgebra make_oscillator() {
  LieAlgebra a;
  a.dim = 4;
  a.name = "oscillator";
  a.labels = {"N", "Ap", "Am", "C"};
  a.structure.assign(64, cplx(0));
  ExactScalars ex;
  ex.structure.assign(64, Rational(0));
  ex.form.assign(16, Rational(0));
  // [N,Ap] = Ap, [N,Am] = -Am, [Ap,Am] = C, C central
  set_exact_structure(ex, 4, 0, 1, 1, Rational(1));
  set_exact_structure(ex, 4, 0, 2, 2, Rational(-1));
  set_exact_structure(ex, 4, 1, 2, 3, Rational(1));
  // <N,C> = <Ap,Am> = 1
  ex.form[0 * 4 + 3] = ex.form[3 * 4 + 0] = Rational(1);
  ex.form[1 * 4 + 2] = ex.form[2 * 4 + 1] = Rational(1);
  a.form = Matrix::Zero(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      a.form(j, k) = ex.form[static_cast<size_t>(j) * 4 + k].to_double();
      for (int l = 0; l < 4; ++l)
        a.fref(j, k, l) = ex.structure[(static_cast<size_t>(j) * 4 + k) * 4 + l].to_double();
    }
  a.exact = std::move(ex);
  a.real_form = true;
  return a;
}

// minimal recursive parser for catalog names: ident [ '(' arg {',' arg} ')' ]
struct NameParser {
  const std::string& s;
  size_t pos = 0;

  explicit NameParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw ParseError("catalog: expected a name at '" + s.substr(start) + "'");
    return s.substr(start, pos - start);
  }

  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  LieAlgebra algebra() {
    std::string id = ident();
    if (id == "abelian") {
      if (!accept('(')) throw ParseError("catalog: abelian requires a dimension, e.g. abelian(3)");
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw ParseError("catalog: abelian(n) needs an integer");
      int n = std::atoi(s.substr(start, pos - start).c_str());
      if (!accept(')')) throw ParseError("catalog: missing ')' in abelian(n)");
      return make_abelian(n);
    }
    if (id == "sl2") return make_sl2(false);
    if (id == "sl2_real") return make_sl2(true);
    if (id == "oscillator") return make_oscillator();
    if (id == "direct_sum") {
      if (!accept('(')) throw ParseError("catalog: direct_sum requires two summands");
      LieAlgebra first = algebra();
      if (!accept(',')) throw ParseError("catalog: direct_sum requires two summands");
      LieAlgebra second = algebra();
      if (!accept(')')) throw ParseError("catalog: missing ')' in direct_sum");
      return direct_sum(first, second);
    }
    throw ParseError("catalog: unknown algebra '" + id + "'");
  }
};

} // namespace

Vector bracket(const LieAlgebra& a, const Vector& x, const Vector& y) {
  require_dim(a, x, "bracket");
  require_dim(a, y, "bracket");
  Vector z = Vector::Zero(a.dim);
  for (int j = 0; j < a.dim; ++j) {
    if (x(j) == cplx(0)) continue;
    for (int k = 0; k < a.dim; ++k) {
      cplx c = x(j) * y(k);
      if (c == cplx(0)) continue;
      for (int l = 0; l < a.dim; ++l) z(l) += c * a.f(j, k, l);
    }
  }
  return z;
}

Matrix ad(const LieAlgebra& a, const Vector& omega) {
  require_dim(a, omega, "ad");
  Matrix m = Matrix::Zero(a.dim, a.dim);
  for (int l = 0; l < a.dim; ++l)
    for (int k = 0; k < a.dim; ++k) {
      cplx acc(0);
      for (int j = 0; j < a.dim; ++j) acc += omega(j) * a.f(j, k, l);
      m(l, k) = acc;
    }
  return m;
}

Matrix ad_basis(const LieAlgebra& a, int j) {
  Vector e = Vector::Zero(a.dim);
  e(j) = 1.0;
  return ad(a, e);
}

DualBasis dual_basis(const LieAlgebra& a) {
  Eigen::FullPivLU<Matrix> lu(a.form);
  if (!lu.isInvertible() || std::abs(a.form.determinant()) <= TOL_RANK)
    throw SingularFormError("dual_basis: bilinear form is singular");
  return DualBasis{lu.inverse()};
}

Matrix transpose_wrt_form(const LieAlgebra& a, const Matrix& A) {
  if (A.rows() != a.dim || A.cols() != a.dim)
    throw DimensionError("transpose_wrt_form: operator shape mismatch");
  return dual_basis(a).D * A.transpose() * a.form;
}

ValidationReport validate(const LieAlgebra& a) {
  ValidationReport rep;
  const int n = a.dim;
  if (a.exact) {
    rep.exact_arithmetic = true;
    const auto& ex = *a.exact;
    auto F = [&](int j, int k, int l) -> const Rational& {
      return ex.structure[(static_cast<size_t>(j) * n + k) * n + l];
    };
    auto B = [&](int j, int k) -> const Rational& { return ex.form[static_cast<size_t>(j) * n + k]; };
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        rep.form_symmetry = std::max(rep.form_symmetry, std::abs((B(j, k) - B(k, j)).to_double()));
        for (int l = 0; l < n; ++l)
          rep.antisymmetry =
              std::max(rep.antisymmetry, std::abs((F(j, k, l) + F(k, j, l)).to_double()));
      }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          for (int p = 0; p < n; ++p) {
            Rational jac(0);
            for (int m = 0; m < n; ++m)
              jac += F(j, k, m) * F(m, l, p) + F(k, l, m) * F(m, j, p) + F(l, j, m) * F(m, k, p);
            rep.jacobi = std::max(rep.jacobi, std::abs(jac.to_double()));
          }
          Rational inv(0);
          for (int m = 0; m < n; ++m) inv += F(j, k, m) * B(m, l) + F(j, l, m) * B(k, m);
          rep.invariance = std::max(rep.invariance, std::abs(inv.to_double()));
        }
    rep.det_form_abs = std::abs(rational_det(ex.form, n).to_double());
    return rep;
  }
  auto F = [&](int j, int k, int l) { return a.f(j, k, l); };
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      rep.form_symmetry = std::max(rep.form_symmetry, std::abs(a.form(j, k) - a.form(k, j)));
      for (int l = 0; l < n; ++l)
        rep.antisymmetry = std::max(rep.antisymmetry, std::abs(F(j, k, l) + F(k, j, l)));
    }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        for (int p = 0; p < n; ++p) {
          cplx jac(0);
          for (int m = 0; m < n; ++m)
            jac += F(j, k, m) * F(m, l, p) + F(k, l, m) * F(m, j, p) + F(l, j, m) * F(m, k, p);
          rep.jacobi = std::max(rep.jacobi, std::abs(jac));
        }
        cplx inv(0);
        for (int m = 0; m < n; ++m) inv += F(j, k, m) * a.form(m, l) + F(j, l, m) * a.form(k, m);
        rep.invariance = std::max(rep.invariance, std::abs(inv));
      }
  rep.det_form_abs = std::abs(a.form.determinant());
  return rep;
}

std::vector<Rational> killing_form(const std::vector<Rational>& structure, int n) {
  auto F = [&](int j, int k, int l) -> const Rational& {
    return structure[(static_cast<size_t>(j) * n + k) * n + l];
  };
  std::vector<Rational> B(static_cast<size_t>(n) * n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Rational tr(0);
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) tr += F(j, m, l) * F(k, l, m);
      B[static_cast<size_t>(j) * n + k] = tr;
    }
  return B;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra s;
  s.dim = a.dim + b.dim;
  s.name = "direct_sum(" + a.name + "," + b.name + ")";
  for (const auto& l : a.labels) s.labels.push_back(l + ".1");
  for (const auto& l : b.labels) s.labels.push_back(l + ".2");
  s.structure.assign(static_cast<size_t>(s.dim) * s.dim * s.dim, cplx(0));
  s.form = Matrix::Zero(s.dim, s.dim);
  s.form.topLeftCorner(a.dim, a.dim) = a.form;
  s.form.bottomRightCorner(b.dim, b.dim) = b.form;
  for (int j = 0; j < a.dim; ++j)
    for (int k = 0; k < a.dim; ++k)
      for (int l = 0; l < a.dim; ++l) s.fref(j, k, l) = a.f(j, k, l);
  for (int j = 0; j < b.dim; ++j)
    for (int k = 0; k < b.dim; ++k)
      for (int l = 0; l < b.dim; ++l) s.fref(a.dim + j, a.dim + k, a.dim + l) = b.f(j, k, l);
  s.real_form = a.real_form && b.real_form;
  if (a.exact && b.exact) {
    ExactScalars ex;
    const int n = s.dim;
    ex.structure.assign(static_cast<size_t>(n) * n * n, Rational(0));
    ex.form.assign(static_cast<size_t>(n) * n, Rational(0));
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) {
        ex.form[static_cast<size_t>(j) * n + k] = a.exact->form[static_cast<size_t>(j) * a.dim + k];
        for (int l = 0; l < a.dim; ++l)
          ex.structure[(static_cast<size_t>(j) * n + k) * n + l] =
              a.exact->structure[(static_cast<size_t>(j) * a.dim + k) * a.dim + l];
      }
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k) {
        ex.form[static_cast<size_t>(a.dim + j) * n + (a.dim + k)] =
            b.exact->form[static_cast<size_t>(j) * b.dim + k];
        for (int l = 0; l < b.dim; ++l)
          ex.structure[(static_cast<size_t>(a.dim + j) * n + (a.dim + k)) * n + (a.dim + l)] =
              b.exact->structure[(static_cast<size_t>(j) * b.dim + k) * b.dim + l];
      }
    s.exact = std::move(ex);
  }
  return s;
}

LieAlgebra catalog(const std::string& name) {
  NameParser p(name);
  LieAlgebra a = p.algebra();
  p.skip_ws();
  if (p.pos != name.size())
    throw ParseError("catalog: trailing characters in '" + name + "'");
  return a;
}

std::vector<std::string> catalog_names() {
  return {"abelian(n)", "sl2", "sl2_real", "oscillator", "direct_sum(a,b)"};
}

ParsedScalar parse_scalar(const std::string& tok) {
  auto fail = [&](const std::string& why) { throw ParseError(why + " '" + tok + "'"); };
  if (tok.find('/') != std::string::npos) {
    size_t slash = tok.find('/');
    try {
      long long p = std::stoll(tok.substr(0, slash));
      long long q = std::stoll(tok.substr(slash + 1));
      if (q == 0) fail("zero denominator in");
      Rational r(p, q);
      return {cplx(r.to_double(), 0.0), r};
    } catch (const std::logic_error&) {
      fail("bad rational");
    }
  }
  // complex literal: a, bi, a+bi, a-bi
  std::string s = tok;
  bool has_i = !s.empty() && (s.back() == 'i' || s.back() == 'I');
  double re = 0, im = 0;
  if (!has_i) {
    char* end = nullptr;
    re = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') fail("bad number");
    // integers stay exact
    try {
      size_t used = 0;
      long long n = std::stoll(s, &used);
      if (used == s.size()) return {cplx(re, 0.0), Rational(n)};
    } catch (const std::logic_error&) {
    }
    return {cplx(re, 0.0), std::nullopt};
  }
  s.pop_back();
  // find the split between real and imaginary parts
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  auto parse_d = [&](const std::string& part, double dflt) {
    if (part.empty() || part == "+") return dflt;
    if (part == "-") return -dflt;
    char* end = nullptr;
    double d = std::strtod(part.c_str(), &end);
    if (end == part.c_str() || *end != '\0') fail("bad number");
    return d;
  };
  if (split == std::string::npos) {
    im = parse_d(s, 1.0);
  } else {
    re = parse_d(s.substr(0, split), 0.0);
    im = parse_d(s.substr(split), 1.0);
  }
  return {cplx(re, im), std::nullopt};
}

LieAlgebra algebra_from_string(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  LieAlgebra a;
  a.name = name;
  bool all_exact = true;
  std::vector<Rational> ex_structure, ex_form;
  std::map<std::tuple<int, int, int>, cplx> given_brackets;
  std::map<std::pair<int, int>, cplx> given_forms;

  auto fail = [&](const std::string& why) {
    throw ParseError("algebra file line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "dim") {
      if (n >= 0) fail("duplicate dim line");
      if (!(ls >> n) || n < 1) fail("dim must be a positive integer");
      a.dim = n;
      a.labels.clear();
      for (int i = 0; i < n; ++i) a.labels.push_back("T" + std::to_string(i + 1));
      a.structure.assign(static_cast<size_t>(n) * n * n, cplx(0));
      a.form = Matrix::Zero(n, n);
      ex_structure.assign(static_cast<size_t>(n) * n * n, Rational(0));
      ex_form.assign(static_cast<size_t>(n) * n, Rational(0));
      continue;
    }
    if (n < 0) fail("the first entry must be 'dim n'");
    if (kw == "label") {
      int j;
      std::string lab;
      if (!(ls >> j >> lab) || j < 1 || j > n) fail("label needs an index in 1..dim and a name");
      a.labels[static_cast<size_t>(j - 1)] = lab;
      continue;
    }
    if (kw == "form") {
      int j, k;
      std::string tok;
      if (!(ls >> j >> k >> tok) || j < 1 || k < 1 || j > n || k > n)
        fail("form needs indices in 1..dim and a value");
      ParsedScalar pv;
      try {
        pv = parse_scalar(tok);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      --j;
      --k;
      auto it = given_forms.find({j, k});
      if (it != given_forms.end() && it->second != pv.value) fail("conflicting duplicate form entry");
      auto sym = given_forms.find({k, j});
      if (sym != given_forms.end() && sym->second != pv.value)
        fail("form entry conflicts with symmetry of an earlier entry");
      given_forms[{j, k}] = pv.value;
      a.form(j, k) = pv.value;
      a.form(k, j) = pv.value;
      if (pv.exact) {
        ex_form[static_cast<size_t>(j) * n + k] = *pv.exact;
        ex_form[static_cast<size_t>(k) * n + j] = *pv.exact;
      } else {
        all_exact = false;
      }
      continue;
    }
    if (kw == "bracket") {
      int j, k, l;
      std::string tok;
      if (!(ls >> j >> k >> l >> tok) || j < 1 || k < 1 || l < 1 || j > n || k > n || l > n)
        fail("bracket needs three indices in 1..dim and a value");
      ParsedScalar pv;
      try {
        pv = parse_scalar(tok);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      --j;
      --k;
      --l;
      if (j == k && pv.value != cplx(0)) fail("bracket j j l must vanish by antisymmetry");
      auto it = given_brackets.find({j, k, l});
      if (it != given_brackets.end() && it->second != pv.value)
        fail("conflicting duplicate bracket entry");
      auto mir = given_brackets.find({k, j, l});
      if (mir != given_brackets.end() && mir->second != -pv.value)
        fail("bracket entry conflicts with antisymmetry of an earlier entry");
      given_brackets[{j, k, l}] = pv.value;
      a.fref(j, k, l) = pv.value;
      a.fref(k, j, l) = -pv.value;
      if (pv.exact) {
        ex_structure[(static_cast<size_t>(j) * n + k) * n + l] = *pv.exact;
        ex_structure[(static_cast<size_t>(k) * n + j) * n + l] = -*pv.exact;
      } else {
        all_exact = false;
      }
      continue;
    }
    fail("unknown keyword '" + kw + "'");
  }
  if (n < 0) throw ParseError("algebra file: missing 'dim n' line");
  if (all_exact) a.exact = ExactScalars{std::move(ex_structure), std::move(ex_form)};
  a.real_form = true;
  for (const auto& c : a.structure)
    if (c.imag() != 0.0) a.real_form = false;
  for (int j = 0; j < n && a.real_form; ++j)
    for (int k = 0; k < n; ++k)
      if (a.form(j, k).imag() != 0.0) {
        a.real_form = false;
        break;
      }
  return a;
}

LieAlgebra algebra_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return algebra_from_string(ss.str(), path);
}

} // namespace dynr
