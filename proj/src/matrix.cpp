#include "cosetcat/matrix.hpp"
#include "cosetcat/error.hpp"

namespace cosetcat {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::transpose() const {
  RatMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rat RatMat::trace() const {
  if (rows != cols) fail(ErrCode::DimensionMismatch, "trace of non-square matrix");
  Rat s = 0;
  for (int i = 0; i < rows; ++i) s += at(i, i);
  return s;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) fail(ErrCode::DimensionMismatch, "matrix product shape mismatch");
  RatMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rat& w = y.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrCode::DimensionMismatch, "matrix sum shape mismatch");
  RatMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    fail(ErrCode::DimensionMismatch, "matrix difference shape mismatch");
  RatMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

RatMat operator*(const Rat& c, const RatMat& x) {
  RatMat r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

RatVec apply(const RatMat& m, const RatVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    fail(ErrCode::DimensionMismatch, "matrix-vector shape mismatch");
  RatVec r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

RatVec tensor_vec(const RatVec& v, const RatVec& w) {
  RatVec r(v.size() * w.size(), Rat(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) r[i * w.size() + j] = v[i] * w[j];
  }
  return r;
}

int rref_in_place(RatMat& m, std::vector<int>* pivot_cols) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv_lead = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv_lead;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

int rank(RatMat m) { return rref_in_place(m); }

std::vector<RatVec> nullspace(const RatMat& m) {
  RatMat w = m;
  std::vector<int> piv;
  int r = rref_in_place(w, &piv);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols, Rat(0));
    v[f] = 1;
    for (int i = 0; i < r; ++i) {
      int pc = piv[i];
      v[pc] = -w.at(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) fail(ErrCode::DimensionMismatch, "inverse of non-square matrix");
  int n = m.rows;
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  int r = rref_in_place(aug);
  if (r < n) fail(ErrCode::InvalidInput, "matrix is singular");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool in_span(const std::vector<RatVec>& vecs, const RatVec& target) {
  if (vecs.empty()) return is_zero(target);
  int n = static_cast<int>(target.size());
  RatMat with(static_cast<int>(vecs.size()) + 1, n);
  RatMat without(static_cast<int>(vecs.size()), n);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (int j = 0; j < n; ++j) {
      with.at(static_cast<int>(i), j) = vecs[i][j];
      without.at(static_cast<int>(i), j) = vecs[i][j];
    }
  for (int j = 0; j < n; ++j) with.at(static_cast<int>(vecs.size()), j) = target[j];
  return rank(with) == rank(without);
}

void SparseRowReducer::add_row(const std::vector<std::pair<int, Rat>>& row) {
  std::map<int, Rat> r;
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= ncols_) fail(ErrCode::DimensionMismatch, "sparse row column out of range");
    if (v == 0) continue;
    auto [it, fresh] = r.emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) r.erase(it);
    }
  }
  while (!r.empty()) {
    int c = r.begin()->first;
    auto pit = pivots_.find(c);
    if (pit == pivots_.end()) {
      Rat lead = r.begin()->second;
      for (auto& [_, v] : r) v /= lead;
      pivots_.emplace(c, std::move(r));
      return;
    }
    Rat f = r.begin()->second;
    for (const auto& [pc, pv] : pit->second) {
      auto [it, fresh] = r.emplace(pc, -f * pv);
      if (!fresh) {
        it->second -= f * pv;
        if (it->second == 0) r.erase(it);
      } else if (it->second == 0) {
        r.erase(it);
      }
    }
  }
}

std::vector<RatVec> SparseRowReducer::nullspace() const {
  // Bring the pivot rows to full RREF (eliminate pivot columns everywhere),
  // then read the solutions off per free column.
  std::map<int, std::map<int, Rat>> red = pivots_;
  for (auto it = red.rbegin(); it != red.rend(); ++it) {
    int pc = it->first;
    for (auto& [qc, qrow] : red) {
      if (qc == pc) continue;
      auto f = qrow.find(pc);
      if (f == qrow.end()) continue;
      Rat factor = f->second;
      qrow.erase(f);
      for (const auto& [c, v] : it->second) {
        if (c == pc) continue;
        auto [jt, fresh] = qrow.emplace(c, -factor * v);
        if (!fresh) {
          jt->second -= factor * v;
          if (jt->second == 0) qrow.erase(jt);
        } else if (jt->second == 0) {
          qrow.erase(jt);
        }
      }
    }
  }
  std::vector<bool> is_pivot(ncols_, false);
  for (const auto& [c, _] : red) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols_, Rat(0));
    v[f] = 1;
    for (const auto& [pc, row] : red) {
      auto it = row.find(f);
      if (it != row.end()) v[pc] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace cosetcat
