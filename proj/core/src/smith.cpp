#include "lcann/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lcann {

namespace {
inline int cmp_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw AlgebraError("initializer size does not match shape");
  std::size_t k = 0;
  for (long v : values) data_[k++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  IntMatrix b(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
  return b;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix b(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) b(r, c) = (*this)(first + r, c);
  return b;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw AlgebraError("matrix shapes do not compose");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw AlgebraError("matrix-vector shapes do not compose");
  std::vector<Integer> r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) r[i] += a(i, k) * v[k];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw AlgebraError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(a(s, k)) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form.

namespace {

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m, SmithOptions opt) : opt_(opt) {
    f_.d = m;
    rows_ = m.rows();
    cols_ = m.cols();
    if (opt_.track_u) {
      f_.u = IntMatrix::identity(rows_);
      f_.u_inv = IntMatrix::identity(rows_);
    }
    if (opt_.track_w) {
      f_.w = IntMatrix::identity(cols_);
      f_.w_inv = IntMatrix::identity(cols_);
    }
  }

  SmithForm run() {
    IntMatrix& d = f_.d;
    const std::size_t limit = std::min(rows_, cols_);
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!select_pivot(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (sgn(d(i, t)) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
          if (sgn(q) != 0) row_submul(i, t, q, t);
          if (sgn(d(i, t)) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (sgn(d(t, j)) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (sgn(q) != 0) col_submul(j, t, q, t);
          if (sgn(d(t, j)) != 0) clean = false;
        }
        if (!clean) {
          pivot_from_cross(t);
          continue;
        }
        if (fix_divisibility(t)) continue;
        break;
      }
      if (sgn(d(t, t)) < 0) negate_row(t);
    }
    f_.rank = t;
    return std::move(f_);
  }

 private:
  // Smallest nonzero |entry| in the trailing block, ties broken by fewest
  // other nonzeros in its row and column.
  bool select_pivot(std::size_t t) {
    IntMatrix& d = f_.d;
    std::vector<std::size_t> row_nnz(rows_, 0), col_nnz(cols_, 0);
    bool any = false;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (sgn(d(i, j)) != 0) {
          ++row_nnz[i];
          ++col_nnz[j];
          any = true;
        }
    if (!any) return false;
    std::size_t bi = 0, bj = 0, best_cost = 0;
    const Integer* best = nullptr;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        std::size_t cost = (row_nnz[i] - 1) * (col_nnz[j] - 1);
        int cmp = best ? cmp_abs(d(i, j), *best) : -1;
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          best = &d(i, j);
          bi = i;
          bj = j;
          best_cost = cost;
        }
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void pivot_from_cross(std::size_t t) {
    IntMatrix& d = f_.d;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows_; ++i)
      if (sgn(d(i, t)) != 0 && (sgn(d(bi, bj)) == 0 || cmp_abs(d(i, t), d(bi, bj)) < 0)) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t; j < cols_; ++j)
      if (sgn(d(t, j)) != 0 && (sgn(d(bi, bj)) == 0 || cmp_abs(d(t, j), d(bi, bj)) < 0)) {
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  bool fix_divisibility(std::size_t t) {
    IntMatrix& d = f_.d;
    if (cmp_abs(d(t, t), Integer(1)) == 0) return false;
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
          row_submul(t, i, Integer(-1), t);
          return true;
        }
      }
    return false;
  }

  // row_i -= q * row_src
  void row_submul(std::size_t i, std::size_t src, const Integer& q, std::size_t from) {
    IntMatrix& d = f_.d;
    for (std::size_t c = from; c < cols_; ++c)
      if (sgn(d(src, c)) != 0) d(i, c) -= q * d(src, c);
    if (opt_.track_u) {
      for (std::size_t c = 0; c < rows_; ++c)
        if (sgn(f_.u(src, c)) != 0) f_.u(i, c) -= q * f_.u(src, c);
      for (std::size_t r = 0; r < rows_; ++r)
        if (sgn(f_.u_inv(r, i)) != 0) f_.u_inv(r, src) += q * f_.u_inv(r, i);
    }
  }

  // col_j -= q * col_src
  void col_submul(std::size_t j, std::size_t src, const Integer& q, std::size_t from) {
    IntMatrix& d = f_.d;
    for (std::size_t r = from; r < rows_; ++r)
      if (sgn(d(r, src)) != 0) d(r, j) -= q * d(r, src);
    if (opt_.track_w) {
      for (std::size_t r = 0; r < cols_; ++r)
        if (sgn(f_.w(r, src)) != 0) f_.w(r, j) -= q * f_.w(r, src);
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(f_.w_inv(j, c)) != 0) f_.w_inv(src, c) += q * f_.w_inv(j, c);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(f_.d(a, c), f_.d(b, c));
    if (opt_.track_u) {
      for (std::size_t c = 0; c < rows_; ++c) std::swap(f_.u(a, c), f_.u(b, c));
      for (std::size_t r = 0; r < rows_; ++r) std::swap(f_.u_inv(r, a), f_.u_inv(r, b));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(f_.d(r, a), f_.d(r, b));
    if (opt_.track_w) {
      for (std::size_t r = 0; r < cols_; ++r) std::swap(f_.w(r, a), f_.w(r, b));
      for (std::size_t c = 0; c < cols_; ++c) std::swap(f_.w_inv(a, c), f_.w_inv(b, c));
    }
  }

  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < cols_; ++c) f_.d(a, c) = -f_.d(a, c);
    if (opt_.track_u) {
      for (std::size_t c = 0; c < rows_; ++c) f_.u(a, c) = -f_.u(a, c);
      for (std::size_t r = 0; r < rows_; ++r) f_.u_inv(r, a) = -f_.u_inv(r, a);
    }
  }

  SmithOptions opt_;
  SmithForm f_;
  std::size_t rows_ = 0, cols_ = 0;
};

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions options) {
  return SmithWorker(m, options).run();
}

// ---------------------------------------------------------------------------

FinAbGroup FinAbGroup::from_diagonal(std::size_t generators, const std::vector<Integer>& diag) {
  FinAbGroup g;
  g.free_rank = generators - diag.size();
  for (const auto& d : diag) {
    Integer a = abs(d);
    if (sgn(a) == 0) {
      ++g.free_rank;
    } else if (a != 1) {
      g.torsion.push_back(a);
    }
  }
  return g;
}

bool FinAbGroup::killed_by(const Integer& n) const {
  if (free_rank > 0) return false;
  return std::all_of(torsion.begin(), torsion.end(),
                     [&](const Integer& d) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; });
}

std::size_t FinAbGroup::p_torsion_count(std::uint64_t p) const {
  std::size_t count = 0;
  for (const auto& d : torsion)
    if (mpz_divisible_ui_p(d.get_mpz_t(), p)) ++count;
  return count;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank == 1) s = "Z";
  if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

// ---------------------------------------------------------------------------

CochainComplex CochainComplex::from_deltas(std::vector<IntMatrix> deltas) {
  CochainComplex c;
  if (deltas.empty()) return c;
  c.dims.push_back(deltas.front().cols());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i].cols() != c.dims.back()) throw AlgebraError("consecutive maps do not compose");
    c.dims.push_back(deltas[i].rows());
  }
  c.deltas = std::move(deltas);
  return c;
}

std::size_t CochainComplex::dim(int j) const {
  if (j < 0 || j >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(j)];
}

IntMatrix CochainComplex::delta(int j) const {
  if (j >= 0 && j < static_cast<int>(deltas.size())) return deltas[static_cast<std::size_t>(j)];
  return IntMatrix(dim(j + 1), dim(j));
}

Cohomology compute_cohomology(const IntMatrix& incoming, const IntMatrix& outgoing) {
  if (incoming.rows() != outgoing.cols()) throw AlgebraError("consecutive maps do not compose");
  if (!(outgoing * incoming).is_zero()) throw AlgebraError("not a complex");
  Cohomology h;
  const std::size_t m = outgoing.cols();
  h.cochain_dim_ = m;
  h.outgoing_ = outgoing;

  SmithForm out = smith_normal_form(outgoing, {.track_u = false, .track_w = true});
  const std::size_t k = m - out.rank;
  h.kernel_basis_ = out.w.column_block(out.rank, k);
  h.kernel_coords_ = out.w_inv.row_block(out.rank, k);

  IntMatrix reduced = h.kernel_coords_ * incoming;
  SmithForm in = smith_normal_form(reduced, {.track_u = true, .track_w = false});
  h.reduce_ = in.u;
  h.reduce_inv_ = in.u_inv;
  h.diag_.assign(k, Integer(0));
  for (std::size_t i = 0; i < in.rank; ++i) h.diag_[i] = in.d(i, i);
  for (std::size_t i = 0; i < k; ++i)
    if (h.diag_[i] != 1) h.visible_.push_back(i);
  h.group_ = FinAbGroup::from_diagonal(k, in.invariant_factors());
  return h;
}

Cohomology complex_cohomology(const CochainComplex& complex, int spot) {
  return compute_cohomology(complex.delta(spot - 1), complex.delta(spot));
}

std::vector<Integer> Cohomology::generator(std::size_t k) const {
  const std::size_t col = visible_.at(k);
  std::vector<Integer> c(reduce_inv_.rows());
  for (std::size_t r = 0; r < c.size(); ++r) c[r] = reduce_inv_(r, col);
  return kernel_basis_ * c;
}

std::vector<Integer> Cohomology::coordinates(const std::vector<Integer>& z) const {
  if (z.size() != cochain_dim_) throw AlgebraError("cochain has the wrong length");
  for (const auto& v : outgoing_ * z)
    if (sgn(v) != 0) throw AlgebraError("vector is not a cocycle");
  std::vector<Integer> y = reduce_ * (kernel_coords_ * z);
  std::vector<Integer> out;
  out.reserve(visible_.size());
  for (std::size_t idx : visible_) {
    Integer v = y[idx];
    const Integer& d = diag_[idx];
    if (sgn(d) != 0) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    out.push_back(v);
  }
  return out;
}

IntMatrix induced_map(const Cohomology& source, const Cohomology& target, const IntMatrix& chain_map) {
  if (chain_map.cols() != source.cochain_dim() || chain_map.rows() != target.cochain_dim())
    throw AlgebraError("chain map shape does not match the cochain groups");
  IntMatrix m(target.generator_count(), source.generator_count());
  for (std::size_t k = 0; k < source.generator_count(); ++k) {
    auto image = target.coordinates(chain_map * source.generator(k));
    for (std::size_t r = 0; r < image.size(); ++r) m(r, k) = image[r];
  }
  return m;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m, {.track_u = false, .track_w = true});
  return f.w.column_block(f.rank, m.cols() - f.rank);
}

bool induced_map_injective(const Cohomology& source, const Cohomology& target, const IntMatrix& map) {
  const std::size_t g = source.generator_count();
  const std::size_t h = target.generator_count();
  if (g == 0) return true;
  // x is in the kernel iff map * x lies in the target relation lattice, i.e.
  // (x, y) solves [map | diag(target orders)] (x, y) = 0.
  IntMatrix stacked(h, g + h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < g; ++c) stacked(r, c) = map(r, c);
    stacked(r, g + r) = target.summand_order(r);
  }
  IntMatrix kernel = integer_kernel(stacked);
  for (std::size_t v = 0; v < kernel.cols(); ++v)
    for (std::size_t c = 0; c < g; ++c) {
      const Integer& x = kernel(c, v);
      const Integer& d = source.summand_order(c);
      if (sgn(d) == 0 ? sgn(x) != 0 : !mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
    }
  return true;
}

bool induced_map_zero(const Cohomology& target, const IntMatrix& map) {
  for (std::size_t r = 0; r < map.rows(); ++r) {
    const Integer& d = target.summand_order(r);
    for (std::size_t c = 0; c < map.cols(); ++c) {
      const Integer& x = map(r, c);
      if (sgn(d) == 0 ? sgn(x) != 0 : !mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
    }
  }
  return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<ModP>> a(rows, std::vector<ModP>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = ModP(p, m(r, c));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    ModP inv = a[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      ModP factor = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace lcann
