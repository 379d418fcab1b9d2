#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathobj/errors.hpp"

namespace pathobj {

using Rational = boost::multiprecision::cpp_rational;

// The prime field Z/P.
template <std::uint32_t P>
class Fp {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  Fp() = default;
  Fp(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  std::uint32_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) - b.v_); }
  friend Fp operator*(Fp a, Fp b) { return Fp(static_cast<long long>(static_cast<std::uint64_t>(a.v_) * b.v_ % P)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-static_cast<long long>(v_)); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw InputError("Fp: division by zero");
    std::uint64_t r = 1, b = v_, e = P - 2;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return Fp(static_cast<long long>(r));
  }

 private:
  std::uint32_t v_ = 0;
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static std::string name() { return "Q"; }
  static Rational parse(const std::string& s) {
    try {
      Rational r(s);
      return r;
    } catch (const std::exception&) {
      throw InputError("rational: cannot parse '" + s + "'");
    }
  }
  static std::string format(const Rational& r) { return r.str(); }
};

template <std::uint32_t P>
struct FieldTraits<Fp<P>> {
  static std::string name() { return "F" + std::to_string(P); }
  static Fp<P> parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Fp<P>(std::stoll(s));
      return Fp<P>(std::stoll(s.substr(0, slash))) / Fp<P>(std::stoll(s.substr(slash + 1)));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("Fp: cannot parse '" + s + "'");
    }
  }
  static std::string format(const Fp<P>& v) { return std::to_string(v.value()); }
};

// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {
    if (rows < 0 || cols < 0) throw InputError("matrix: negative shape");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (auto& x : a_)
      if (!(x == F(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<F> column(int c) const {
    std::vector<F> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix: shape mismatch in product");
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (x == F(0)) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!(b(k, j) == F(0))) p(i, j) += x * b(k, j);
      }
    return p;
  }

  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw InputError("matrix: shape mismatch in product");
    std::vector<F> w(a.rows_, F(0));
    for (int k = 0; k < a.cols_; ++k) {
      if (v[k] == F(0)) continue;
      for (int i = 0; i < a.rows_; ++i)
        if (!(a(i, k) == F(0))) w[i] += a(i, k) * v[k];
    }
    return w;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix: shape mismatch in sum");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix: shape mismatch in difference");
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<int> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
    int p = row;
    while (p < m.rows() && m(p, c) == F(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    F inv = F(1) / m(row, c);
    for (int j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == F(0)) continue;
      F factor = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
int rank(const Matrix<F>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

struct KernelBasisInfo {
  std::vector<int> free_columns;  // basis vector i is 1 at free_columns[i] and 0 at the other free columns
};

// Columns form a basis of {v : m v = 0}.
template <class F>
Matrix<F> kernel(const Matrix<F>& m, KernelBasisInfo* info = nullptr) {
  auto [r, piv] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<F> k(m.cols(), static_cast<int>(free.size()));
  for (std::size_t i = 0; i < free.size(); ++i) {
    k(free[i], static_cast<int>(i)) = F(1);
    for (std::size_t row = 0; row < piv.size(); ++row) k(piv[row], static_cast<int>(i)) = -r(static_cast<int>(row), free[i]);
  }
  if (info) info->free_columns = std::move(free);
  return k;
}

// Some x with m x = v; false when none exists.
template <class F>
bool solve(const Matrix<F>& m, const std::vector<F>& v, std::vector<F>& x) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  auto [red, piv] = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  x.assign(m.cols(), F(0));
  for (std::size_t row = 0; row < piv.size(); ++row) x[piv[row]] = red(static_cast<int>(row), m.cols());
  return true;
}

}  // namespace pathobj
