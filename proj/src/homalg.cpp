#include "zks/homalg.hpp"

#include <algorithm>
#include <utility>

namespace zks {

IntegerMatrix::IntegerMatrix(long rows, long cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
  if (rows < 0 || cols < 0) throw domain_error("matrix dimensions must be >= 0");
}

IntegerMatrix IntegerMatrix::identity(long n) {
  IntegerMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Int& IntegerMatrix::at(long i, long j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw domain_error("matrix index out of range");
  return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

const Int& IntegerMatrix::at(long i, long j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw domain_error("matrix index out of range");
  return data_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw dimension_error("matrix product dimension mismatch");
  IntegerMatrix r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Int& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<long>(v.size()) != cols_) throw dimension_error("vector length mismatch");
  std::vector<Int> out(static_cast<size_t>(rows_));
  for (long i = 0; i < rows_; ++i) {
    Int acc = 0;
    for (long j = 0; j < cols_; ++j) {
      const Int& a = at(i, j);
      if (a != 0) acc += a * v[static_cast<size_t>(j)];
    }
    out[static_cast<size_t>(i)] = std::move(acc);
  }
  return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  long n = std::min(s.rows(), s.cols());
  std::vector<Int> d(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) d[static_cast<size_t>(i)] = s.at(i, i);
  return d;
}

long SmithDecomposition::rank() const {
  long r = 0;
  for (const Int& d : diagonal()) {
    if (d != 0) ++r;
  }
  return r;
}

namespace {

using std::swap;

void swap_rows(IntegerMatrix& m, long a, long b) {
  if (a == b) return;
  for (long j = 0; j < m.cols(); ++j) swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, long a, long b) {
  if (a == b) return;
  for (long i = 0; i < m.rows(); ++i) swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void add_row(IntegerMatrix& m, long a, long b, const Int& q) {
  if (q == 0) return;
  for (long j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void add_col(IntegerMatrix& m, long a, long b, const Int& q) {
  if (q == 0) return;
  for (long i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntegerMatrix& m, long a) {
  for (long j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| of S[t.., t..]; ties broken by position.
bool find_pivot(const IntegerMatrix& s, long t, long& pi, long& pj) {
  bool found = false;
  Int best = 0;
  for (long i = t; i < s.rows(); ++i) {
    for (long j = t; j < s.cols(); ++j) {
      const Int& x = s.at(i, j);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

// Quotient with remainder in [-|d|/2, |d|/2]; keeps multipliers small.
Int nearest_quotient(const Int& a, const Int& d) {
  Int q = a / d;
  Int r = a - q * d;
  if (r != 0 && 2 * abs_int(r) > abs_int(d)) {
    q += ((r < 0) == (d < 0)) ? 1 : -1;
  }
  return q;
}

SmithDecomposition smith_normal_form(IntegerMatrix a) {
  SmithDecomposition d;
  d.u = IntegerMatrix::identity(a.rows());
  d.v = IntegerMatrix::identity(a.cols());
  d.s = std::move(a);
  IntegerMatrix& s = d.s;

  long n = std::min(s.rows(), s.cols());
  for (long t = 0; t < n; ++t) {
    long pi = 0, pj = 0;
    if (!find_pivot(s, t, pi, pj)) break;
    while (true) {
      // Re-select the minimal pivot every pass; together with the symmetric
      // remainders this is what keeps the entries from exploding.
      find_pivot(s, t, pi, pj);
      swap_rows(s, t, pi);
      swap_rows(d.u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(d.v, t, pj);

      bool clean = true;
      for (long i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = nearest_quotient(s.at(i, t), s.at(t, t));
        add_row(s, i, t, q);
        add_row(d.u, i, t, q);
        if (s.at(i, t) != 0) clean = false;  // a smaller remainder; re-pivot
      }
      for (long j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = nearest_quotient(s.at(t, j), s.at(t, t));
        add_col(s, j, t, q);
        add_col(d.v, j, t, q);
        if (s.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the remaining block; folding an
      // offending row into row t strictly shrinks the next pivot.
      bool divisible = true;
      for (long i = t + 1; i < s.rows() && divisible; ++i) {
        for (long j = t + 1; j < s.cols() && divisible; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            add_row(s, t, i, Int(-1));  // row_t += row_i
            add_row(d.u, t, i, Int(-1));
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
    if (s.at(t, t) < 0) {
      negate_row(s, t);
      negate_row(d.u, t);
    }
  }
  return d;
}

Int determinant(IntegerMatrix a) {
  if (a.rows() != a.cols()) throw dimension_error("determinant needs a square matrix");
  long n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  Int sign = 1;
  Int prev = 1;
  for (long t = 0; t < n - 1; ++t) {
    if (a.at(t, t) == 0) {
      long p = -1;
      for (long i = t + 1; i < n; ++i) {
        if (a.at(i, t) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      swap_rows(a, t, p);
      sign = -sign;
    }
    for (long i = t + 1; i < n; ++i) {
      for (long j = t + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / prev;
      }
      a.at(i, t) = 0;
    }
    prev = a.at(t, t);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

// Extended gcd: returns g and x, y with a x + b y = g, g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    if (a < 0) {
      x = -1;
      y = 0;
      return -a;
    }
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(a % m, m, x, y);
  if (g != 1) return std::nullopt;
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::optional<std::vector<Int>> solve_linear(const IntegerMatrix& a, const std::vector<Int>& b,
                                             const Ring& ring) {
  if (static_cast<long>(b.size()) != a.rows()) {
    throw dimension_error("right-hand side length mismatch");
  }
  SmithDecomposition d = smith_normal_form(a);
  std::vector<Int> c = d.u.apply(b);
  std::vector<Int> diag = d.diagonal();
  std::vector<Int> y(static_cast<size_t>(a.cols()), Int(0));

  if (!ring.modular()) {
    for (long i = 0; i < a.rows(); ++i) {
      Int di = (i < static_cast<long>(diag.size())) ? diag[static_cast<size_t>(i)] : Int(0);
      Int ci = c[static_cast<size_t>(i)];
      if (di == 0) {
        if (ci != 0) return std::nullopt;
      } else {
        if (ci % di != 0) return std::nullopt;
        if (i < a.cols()) y[static_cast<size_t>(i)] = ci / di;
      }
    }
  } else {
    const Int& m = ring.modulus();
    for (long i = 0; i < a.rows(); ++i) {
      Int di = (i < static_cast<long>(diag.size())) ? diag[static_cast<size_t>(i)] : Int(0);
      Int ci = ring.reduce(c[static_cast<size_t>(i)]);
      Int dm = ring.reduce(di);
      if (dm == 0) {
        if (ci != 0) return std::nullopt;
        continue;
      }
      Int g = boost::multiprecision::gcd(dm, m);
      if (ci % g != 0) return std::nullopt;
      Int m2 = m / g;
      auto inv = mod_inverse(dm / g, m2);
      if (!inv) return std::nullopt;  // unreachable: dm/g is a unit mod m/g
      if (i < a.cols()) y[static_cast<size_t>(i)] = ((ci / g) * *inv) % m2;
    }
  }

  std::vector<Int> x = d.v.apply(y);
  for (Int& xi : x) xi = ring.reduce(xi);
  // Exact verification of the returned solution.
  std::vector<Int> ax = a.apply(x);
  for (long i = 0; i < a.rows(); ++i) {
    if (!ring.is_zero(ax[static_cast<size_t>(i)] - b[static_cast<size_t>(i)])) {
      throw error("solver produced an invalid solution");
    }
  }
  return x;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& X, int degree) {
  if (degree < 0 || degree > X.dimension()) throw domain_error("boundary degree out of range");
  const auto& faces = X.faces(degree);
  if (degree == 0) {
    IntegerMatrix m(1, static_cast<long>(faces.size()));
    for (long j = 0; j < m.cols(); ++j) m.at(0, j) = 1;
    return m;
  }
  const auto& targets = X.faces(degree - 1);
  std::map<Simplex, long> index;
  for (size_t i = 0; i < targets.size(); ++i) index[targets[i]] = static_cast<long>(i);
  IntegerMatrix m(static_cast<long>(targets.size()), static_cast<long>(faces.size()));
  for (size_t j = 0; j < faces.size(); ++j) {
    const Simplex& s = faces[j];
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (size_t t = 0; t < s.size(); ++t) {
        if (t != i) face.push_back(s[t]);
      }
      m.at(index.at(face), static_cast<long>(j)) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::vector<Int> chain_to_vector(const SimplicialComplex& X, const SimplicialChain& x) {
  const auto& faces = X.faces(x.degree());
  std::map<Simplex, long> index;
  for (size_t i = 0; i < faces.size(); ++i) index[faces[i]] = static_cast<long>(i);
  std::vector<Int> v(faces.size());
  for (const auto& [s, c] : x.terms()) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw domain_error("chain simplex " + X.simplex_str(s) + " is not a face of the complex");
    }
    v[static_cast<size_t>(it->second)] = c;
  }
  return v;
}

SimplicialChain vector_to_chain(const SimplicialComplex& X, int degree, const Ring& ring,
                                const std::vector<Int>& v) {
  const auto& faces = X.faces(degree);
  if (v.size() != faces.size()) throw dimension_error("vector length does not match face count");
  SimplicialChain x(ring, degree);
  for (size_t i = 0; i < faces.size(); ++i) x.add(faces[i], v[i]);
  return x;
}

namespace {

bool is_prime(const Int& m) {
  if (m < 2) return false;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& X, const Ring& ring) {
  bool mod_p = ring.modular();
  Int p = 0;
  if (mod_p) {
    p = ring.modulus();
    if (!is_prime(p)) {
      throw precondition_error("homology over Z/m needs a prime m; got m = " + p.str());
    }
  }

  int dim = X.dimension();
  // Boundary matrices 0..dim (0 = augmentation row), plus consistency check.
  std::vector<IntegerMatrix> bd;
  bd.reserve(static_cast<size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) bd.push_back(boundary_matrix(X, i));
  for (int i = 0; i + 1 <= dim; ++i) {
    if (!(bd[static_cast<size_t>(i)] * bd[static_cast<size_t>(i + 1)]).is_zero()) {
      throw error("boundary matrices do not compose to zero");
    }
  }

  std::vector<SmithDecomposition> snf;
  snf.reserve(bd.size());
  for (const auto& m : bd) snf.push_back(smith_normal_form(m));

  auto rank_of = [&](size_t i) -> long {
    if (i >= snf.size()) return 0;
    if (!mod_p) return snf[i].rank();
    long r = 0;
    for (const Int& di : snf[i].diagonal()) {
      if (di != 0 && di % p != 0) ++r;
    }
    return r;
  };

  std::vector<HomologyGroup> out(static_cast<size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    long n = static_cast<long>(X.faces(i).size());
    HomologyGroup h;
    h.rank = n - rank_of(static_cast<size_t>(i)) - rank_of(static_cast<size_t>(i) + 1);
    if (!mod_p && i + 1 <= dim) {
      for (const Int& di : snf[static_cast<size_t>(i) + 1].diagonal()) {
        if (di > 1) h.torsion.push_back(di);
      }
    }
    out[static_cast<size_t>(i)] = std::move(h);
  }
  return out;
}

RetractReport homology_retract_check(int k, int m, int d, long long facet_cap) {
  RetractReport report;
  Ring z = Ring::integers();
  report.alt_side = reduced_homology(alt_subcomplex(k, m, d, facet_cap).complex, z);
  report.join_side = reduced_homology(join_complex(k, d + 1, facet_cap).complex, z);
  size_t n = std::max(report.alt_side.size(), report.join_side.size());
  report.match = true;
  for (size_t i = 0; i < n; ++i) {
    HomologyGroup a = i < report.alt_side.size() ? report.alt_side[i] : HomologyGroup{};
    HomologyGroup b = i < report.join_side.size() ? report.join_side[i] : HomologyGroup{};
    if (a != b) report.match = false;
  }
  return report;
}

}  // namespace zks
