#include "kuforge/graded.hpp"

#include <sstream>

namespace kuforge::exactla {

GradedDim::GradedDim(std::initializer_list<std::pair<const int, std::int64_t>> init) {
  for (const auto& [d, v] : init) set(d, v);
}

std::int64_t GradedDim::at(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDim::set(int degree, std::int64_t dim) {
  if (dim < 0) throw std::invalid_argument("GradedDim: negative dimension");
  if (dim == 0)
    dims_.erase(degree);
  else
    dims_[degree] = dim;
}

void GradedDim::add(int degree, std::int64_t dim) { set(degree, at(degree) + dim); }

std::int64_t GradedDim::total() const {
  std::int64_t t = 0;
  for (const auto& kv : dims_) t += kv.second;
  return t;
}

int GradedDim::min_degree() const {
  if (dims_.empty()) throw std::logic_error("GradedDim: empty");
  return dims_.begin()->first;
}

int GradedDim::max_degree() const {
  if (dims_.empty()) throw std::logic_error("GradedDim: empty");
  return dims_.rbegin()->first;
}

GradedDim GradedDim::shifted(int by) const {
  GradedDim g;
  for (const auto& [d, v] : dims_) g.dims_[d + by] = v;
  return g;
}

GradedDim GradedDim::restricted(int lo, int hi) const {
  GradedDim g;
  for (const auto& [d, v] : dims_)
    if (d >= lo && d <= hi) g.dims_[d] = v;
  return g;
}

GradedDim GradedDim::operator+(const GradedDim& other) const {
  GradedDim g = *this;
  for (const auto& [d, v] : other.dims_) g.add(d, v);
  return g;
}

GradedDim GradedDim::operator-(const GradedDim& other) const {
  GradedDim g = *this;
  for (const auto& [d, v] : other.dims_) g.set(d, g.at(d) - v);
  return g;
}

std::string GradedDim::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, v] : dims_) {
    os << (first ? "" : ", ") << d << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string BasisDescriptor::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::unit: os << "F"; break;
    case Kind::sym: os << "S^" << b; break;
    case Kind::ext: os << "L^" << a; break;
    case Kind::ext_sym: os << "L^" << a << "(x)S^" << b; break;
    case Kind::subquotient: os << "subquotient"; break;
    case Kind::free_module: os << "free"; break;
    case Kind::custom: os << "custom"; break;
  }
  if (!label.empty()) os << '[' << label << ']';
  os << "(r=" << rank << ')';
  return os.str();
}

std::int64_t homology_dim(const F2Matrix& d_in, const F2Matrix& d_out) {
  if (d_in.rows() != d_out.cols()) throw std::invalid_argument("homology_dim: middle dimensions differ");
  const std::size_t mid = d_out.cols();
  const std::size_t rk_out = f2_rank(d_out);
  const std::size_t rk_in = f2_rank(d_in);
  return static_cast<std::int64_t>(mid - rk_out) - static_cast<std::int64_t>(rk_in);
}

GradedDim homology_dims(const GradedMap& d_in, const GradedMap& d_out) {
  std::map<int, std::pair<const F2Matrix*, const F2Matrix*>> by_mid;
  for (const auto& [deg, m] : d_in.blocks) by_mid[deg + d_in.shift].first = &m;
  for (const auto& [deg, m] : d_out.blocks) by_mid[deg].second = &m;

  GradedDim out;
  for (const auto& [mid, pair] : by_mid) {
    const F2Matrix* in = pair.first;
    const F2Matrix* o = pair.second;
    std::size_t dim = in ? in->rows() : o->cols();
    if (in && o) {
      if (in->rows() != o->cols()) throw ComplexError("homology_dims: middle dimensions differ", mid);
      if (!((*o) * (*in)).is_zero()) throw ComplexError("homology_dims: composite is nonzero", mid);
    }
    const std::size_t rk_out = o ? f2_rank(*o) : 0;
    const std::size_t rk_in = in ? f2_rank(*in) : 0;
    out.set(mid, static_cast<std::int64_t>(dim - rk_out - rk_in));
  }
  return out;
}

void ChainComplex::check() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    const GradedMap& f = maps[k];
    const GradedMap& g = maps[k + 1];
    for (const auto& [deg, m] : f.blocks) {
      const F2Matrix* h = g.block(deg + f.shift);
      if (h == nullptr) continue;
      if (h->cols() != m.rows()) throw ComplexError("ChainComplex: shape mismatch", deg + f.shift);
      if (!((*h) * m).is_zero()) throw ComplexError("ChainComplex: composite is nonzero", deg + f.shift);
    }
  }
}

}  // namespace kuforge::exactla
