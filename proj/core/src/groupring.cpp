#include "kuforge/groupring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kuforge::groupring {

using exactla::F2Matrix;

namespace {

std::size_t ambient(int r) { return (std::size_t{1} << r) - 1; }

// Powers P^1 .. P^n for one rank, grown on demand.
class PowerChain {
 public:
  explicit PowerChain(int r) : r_(r) {
    if (r < 0 || r > 6) throw std::invalid_argument("group ring rank out of range");
    powers_.push_back(IntMatrix::identity(ambient(r)));
  }

  IntMatrix power(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(powers_.size()) < n) {
      const IntMatrix& prev = powers_.back();
      const std::size_t m = ambient(r_);
      IntMatrix gens(m, prev.cols() * m);
      for (std::size_t c = 0; c < prev.cols(); ++c) {
        IntMatrix col(m, 1);
        for (std::size_t i = 0; i < m; ++i) col.at(i, 0) = prev.at(i, c);
        for (unsigned h = 1; h <= m; ++h) {
          const IntMatrix prod = multiply_by_generator(r_, col, h);
          for (std::size_t i = 0; i < m; ++i) gens.at(i, c * m + (h - 1)) = prod.at(i, 0);
        }
      }
      powers_.push_back(lattice_basis(gens));
    }
    return powers_[static_cast<std::size_t>(n) - 1];
  }

 private:
  int r_;
  std::mutex mu_;
  std::vector<IntMatrix> powers_;
};

PowerChain& chain(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PowerChain>> chains;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = chains[r];
  if (!slot) slot = std::make_unique<PowerChain>(r);
  return *slot;
}

// Coordinates of the columns of `sub` in the basis `base` (both full lattices of the same span type).
IntMatrix coordinates(const IntMatrix& base, const IntMatrix& sub) {
  const exactla::SmithForm s = exactla::smith_normal_form(base);
  IntMatrix out(base.cols(), sub.cols());
  for (std::size_t c = 0; c < sub.cols(); ++c) {
    IntMatrix col(sub.rows(), 1);
    for (std::size_t i = 0; i < sub.rows(); ++i) col.at(i, 0) = sub.at(i, c);
    const auto x = exactla::integer_solve(s, col);
    if (!x) throw std::logic_error("coordinates: vector outside the lattice");
    for (std::size_t i = 0; i < base.cols(); ++i) out.at(i, c) = x->at(i, 0);
  }
  return out;
}

}  // namespace

std::vector<long> basis_product(int r, unsigned g, unsigned h) {
  std::vector<long> v(ambient(r), 0);
  const unsigned gh = g ^ h;
  if (gh != 0) v[gh - 1] += 1;
  v[g - 1] -= 1;
  v[h - 1] -= 1;
  return v;
}

IntMatrix multiply_by_generator(int r, const IntMatrix& element, unsigned h) {
  const std::size_t m = ambient(r);
  IntMatrix out(m, 1);
  mpz_class total = 0;
  for (unsigned g = 1; g <= m; ++g) {
    const mpz_class& c = element.at(g - 1, 0);
    if (c == 0) continue;
    const unsigned gh = g ^ h;
    if (gh != 0) out.at(gh - 1, 0) += c;
    out.at(g - 1, 0) -= c;
    total += c;
  }
  out.at(h - 1, 0) -= total;
  return out;
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  const exactla::SmithForm s = exactla::smith_normal_form(gens);
  const IntMatrix gv = gens * s.v;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < s.rank; ++j) idx.push_back(j);
  return gv.select_columns(idx);
}

bool GroupRingLattice::contains(const IntMatrix& column) const {
  return exactla::integer_solve(exactla::smith_normal_form(basis), column).has_value();
}

GroupRingLattice aug_power_lattice(int r, int n) {
  if (n < 1) throw std::invalid_argument("aug_power_lattice: n must be positive");
  return {r, n, chain(r).power(n)};
}

FinAbGroup rn_group(int r, int n) {
  if (n < 1) throw std::invalid_argument("rn_group: n must be positive");
  return exactla::cokernel_structure(chain(r).power(n + 1));
}

FinAbGroup filtration_subquotient(int r, int n) {
  if (n < 1) throw std::invalid_argument("filtration_subquotient: n must be positive");
  return exactla::cokernel_structure(coordinates(chain(r).power(n), chain(r).power(n + 1)));
}

std::size_t two_torsion_dim(int r, int n) { return rn_group(r, n).two_rank(); }

std::size_t head_dim(int r, int n) {
  const IntMatrix b = chain(r).power(n + 1);
  F2Matrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (mpz_odd_p(b.at(i, j).get_mpz_t())) m.set(i, j, true);
  return b.rows() - exactla::f2_rank(m);
}

FiltrationReport filtration_report(int r, int n) {
  FiltrationReport rep;
  rep.n = n;
  rep.quotient = rn_group(r, n);
  rep.subquotient = filtration_subquotient(r, n);
  rep.two_torsion_dim = rep.quotient.two_rank();
  rep.head_dim = head_dim(r, n);
  return rep;
}

bool completion_inclusion_check(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("completion_inclusion_check: n, k must be positive");
  const IntMatrix b = chain(n).power(n + k);
  const mpz_class q = mpz_class(1) << k;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!mpz_divisible_p(b.at(i, j).get_mpz_t(), q.get_mpz_t())) return false;
  return true;
}

std::vector<FinAbGroup> completion_tower(int r, int d, int kmax) {
  std::vector<FinAbGroup> out;
  const IntMatrix b = chain(r).power(d);
  const std::size_t m = b.rows();
  for (int k = 1; k <= kmax; ++k) {
    IntMatrix scaled(m, m);
    for (std::size_t i = 0; i < m; ++i) scaled.at(i, i) = mpz_class(1) << k;
    const IntMatrix l = lattice_basis(IntMatrix::hconcat(b, scaled));
    out.push_back(exactla::cokernel_structure(coordinates(l, scaled)));
  }
  return out;
}

std::size_t mod2_image_rank(int r, int n) {
  const IntMatrix b = chain(r).power(n);
  F2Matrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (mpz_odd_p(b.at(i, j).get_mpz_t())) m.set(i, j, true);
  return exactla::f2_rank(m);
}

std::size_t f2_augmentation_power_dim(int r, int n) {
  const std::size_t size = std::size_t{1} << r;
  // columns: elements of F_2[V] in the group-element basis
  F2Matrix gens(size, size - 1);
  for (std::size_t h = 1; h < size; ++h) {
    gens.set(0, h - 1, true);
    gens.set(h, h - 1, true);
  }
  F2Matrix power = gens;
  for (int p = 1; p < n; ++p) {
    F2Matrix next(size, power.cols() * (size - 1));
    for (std::size_t c = 0; c < power.cols(); ++c)
      for (std::size_t h = 1; h < size; ++h)
        for (std::size_t g = 0; g < size; ++g)
          if (power.get(g, c)) {
            next.flip(g ^ h, c * (size - 1) + (h - 1));
            next.flip(g, c * (size - 1) + (h - 1));
          }
    power = exactla::f2_image(next);
    if (power.cols() == 0) break;
  }
  return n <= 0 ? size : exactla::f2_rank(power);
}

}  // namespace kuforge::groupring
