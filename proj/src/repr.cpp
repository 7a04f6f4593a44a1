#include "dyntwist/repr.hpp"

#include <string>

namespace dyntwist {

RepSpace::RepSpace(std::vector<int> legs) : legs_(std::move(legs)) {
  strides_.assign(legs_.size(), 1);
  for (int i = static_cast<int>(legs_.size()) - 1; i >= 0; --i) {
    strides_[i] = dim_;
    dim_ *= legs_[i] + 1;
  }
}

std::vector<int> RepSpace::multi_index(int idx) const {
  std::vector<int> multi(legs_.size());
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    multi[i] = idx / strides_[i];
    idx %= strides_[i];
  }
  return multi;
}

int RepSpace::index_of(const std::vector<int>& multi) const {
  int idx = 0;
  for (std::size_t i = 0; i < legs_.size(); ++i) idx += multi[i] * strides_[i];
  return idx;
}

int RepSpace::leg_weight(int idx, int leg) const {
  int k = idx / strides_[leg] % (legs_[leg] + 1);
  return legs_[leg] - 2 * k;
}

int RepSpace::total_weight(int idx) const {
  int w = 0;
  for (int i = 0; i < num_legs(); ++i) w += leg_weight(idx, i);
  return w;
}

Operator Operator::zero(const RepSpace& s) {
  return {s, Matrix::Zero(s.dim(), s.dim())};
}

Operator Operator::identity(const RepSpace& s) {
  return {s, Matrix::Identity(s.dim(), s.dim())};
}

bool Operator::is_zero() const {
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j)
      if (!mat(i, j).is_zero()) return false;
  return true;
}

namespace {

void check_same_space(const Operator& a, const Operator& b) {
  if (!(a.space == b.space)) throw std::domain_error("Operator: space mismatch");
}

}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
  check_same_space(a, b);
  return {a.space, a.mat + b.mat};
}

Operator operator-(const Operator& a, const Operator& b) {
  check_same_space(a, b);
  return {a.space, a.mat - b.mat};
}

Operator operator-(const Operator& a) { return {a.space, -a.mat}; }

Operator operator*(const Operator& a, const Operator& b) {
  check_same_space(a, b);
  // weight structure keeps these matrices sparse; skipping zero factors beats
  // the dense product by a wide margin
  Operator out = Operator::zero(a.space);
  int n = static_cast<int>(a.mat.rows());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.mat(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b.mat(k, j).is_zero()) continue;
        out.mat(i, j) = out.mat(i, j) + a.mat(i, k) * b.mat(k, j);
      }
    }
  return out;
}

Operator operator*(const QScalar& c, const Operator& a) { return {a.space, c * a.mat}; }

bool operator==(const Operator& a, const Operator& b) {
  if (!(a.space == b.space)) return false;
  for (int i = 0; i < a.mat.rows(); ++i)
    for (int j = 0; j < a.mat.cols(); ++j)
      if (a.mat(i, j) != b.mat(i, j)) return false;
  return true;
}

GeneratorSet build_irrep(int p) {
  if (p < 0) throw std::domain_error("build_irrep: p must be non-negative");
  RepSpace s({p});
  Operator h = Operator::zero(s), e = Operator::zero(s), f = Operator::zero(s);
  for (int k = 0; k <= p; ++k) {
    h.mat(k, k) = QScalar(static_cast<long>(p - 2 * k));
    if (k >= 1) e.mat(k - 1, k) = qnum(p - k + 1);
    if (k < p) f.mat(k + 1, k) = qnum(k + 1);
  }
  auto qh = [&](int sign) {  // q^{sign h/2} = diag t^{2 sign mu}
    return h_diagonal(s, [sign](int mu) { return QScalar::t_power(2 * sign * mu); });
  };
  Operator Eplus = qh(-1) * e;
  Operator Eminus = f * qh(1);
  return {std::move(h), std::move(Eplus), std::move(Eminus), std::move(e), std::move(f)};
}

GeneratorSet coproduct_generators(const GeneratorSet& g1, const GeneratorSet& g2) {
  const RepSpace& s1 = g1.space();
  const RepSpace& s2 = g2.space();
  auto qh = [](const RepSpace& s, int sign) {
    return h_diagonal(s, [sign](int mu) { return QScalar::t_power(2 * sign * mu); });
  };
  Operator h = tensor(g1.h, Operator::identity(s2)) + tensor(Operator::identity(s1), g2.h);
  Operator Eplus = tensor(g1.Eplus, qh(s2, 1)) + tensor(qh(s1, -1), g2.Eplus);
  Operator Eminus = tensor(g1.Eminus, qh(s2, 1)) + tensor(qh(s1, -1), g2.Eminus);
  const RepSpace& s = h.space;
  Operator e = h_diagonal(s, [](int mu) { return QScalar::t_power(2 * mu); }) * Eplus;
  Operator f = Eminus * h_diagonal(s, [](int mu) { return QScalar::t_power(-2 * mu); });
  return {std::move(h), std::move(Eplus), std::move(Eminus), std::move(e), std::move(f)};
}

Operator h_diagonal(const RepSpace& s, const std::function<QScalar(int)>& fn) {
  Operator op = Operator::zero(s);
  for (int i = 0; i < s.dim(); ++i) op.mat(i, i) = fn(s.total_weight(i));
  return op;
}

Operator multi_diagonal(const RepSpace& s,
                        const std::function<QScalar(const std::vector<int>&)>& fn) {
  Operator op = Operator::zero(s);
  std::vector<int> mu(s.num_legs());
  for (int i = 0; i < s.dim(); ++i) {
    for (int l = 0; l < s.num_legs(); ++l) mu[l] = s.leg_weight(i, l);
    op.mat(i, i) = fn(mu);
  }
  return op;
}

Operator tensor(const Operator& a, const Operator& b) {
  std::vector<int> legs = a.space.legs();
  legs.insert(legs.end(), b.space.legs().begin(), b.space.legs().end());
  RepSpace s(std::move(legs));
  Operator out = Operator::zero(s);
  int db = b.space.dim();
  for (int i1 = 0; i1 < a.space.dim(); ++i1)
    for (int j1 = 0; j1 < a.space.dim(); ++j1) {
      const QScalar& c = a.mat(i1, j1);
      if (c.is_zero()) continue;
      for (int i2 = 0; i2 < db; ++i2)
        for (int j2 = 0; j2 < db; ++j2) {
          const QScalar& d = b.mat(i2, j2);
          if (!d.is_zero()) out.mat(i1 * db + i2, j1 * db + j2) = c * d;
        }
    }
  return out;
}

Operator permute_legs(const Operator& op, const std::vector<int>& perm) {
  const RepSpace& s = op.space;
  if (static_cast<int>(perm.size()) != s.num_legs())
    throw std::domain_error("permute_legs: arity mismatch");
  std::vector<int> new_legs(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_legs[i] = s.legs()[perm[i]];
  RepSpace ns(std::move(new_legs));
  std::vector<int> map(s.dim());
  std::vector<int> nm(perm.size());
  for (int idx = 0; idx < s.dim(); ++idx) {
    std::vector<int> m = s.multi_index(idx);
    for (std::size_t i = 0; i < perm.size(); ++i) nm[i] = m[perm[i]];
    map[idx] = ns.index_of(nm);
  }
  Operator out = Operator::zero(ns);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      if (!op.mat(i, j).is_zero()) out.mat(map[i], map[j]) = op.mat(i, j);
  return out;
}

namespace {

// Pivot preference: fewer terms means cheaper downstream arithmetic.
std::size_t entry_size(const QScalar& c) {
  return c.num().term_count() + c.den().term_count();
}

}  // namespace

Operator invert(const Operator& op) {
  int n = op.space.dim();
  Matrix a = op.mat;
  Matrix inv = Matrix::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      std::size_t sz = entry_size(a(r, col));
      if (pivot < 0 || sz < best) {
        pivot = r;
        best = sz;
      }
    }
    if (pivot < 0)
      throw std::domain_error("invert: singular matrix, vanishing pivot in column " +
                              std::to_string(col));
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    QScalar scale = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      QScalar factor = a(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= factor * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return {op.space, std::move(inv)};
}

Operator qexp_nilpotent(const Operator& a, QBase variant) {
  int n = a.space.dim();
  Operator sum = Operator::identity(a.space);
  Operator power = a;
  for (int k = 1; !power.is_zero(); ++k) {
    if (k > n)
      throw std::domain_error("qexp_nilpotent: operator is not nilpotent");
    sum = sum + qround_factorial(k, variant).inverse() * power;
    power = power * a;
  }
  return sum;
}

Operator subst_x_shift(const Operator& op, int m) {
  Operator out = op;
  for (int i = 0; i < out.mat.rows(); ++i)
    for (int j = 0; j < out.mat.cols(); ++j)
      if (!out.mat(i, j).is_zero()) out.mat(i, j) = out.mat(i, j).subst_x_shift(m);
  return out;
}

}  // namespace dyntwist
