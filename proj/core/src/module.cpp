#include "kuforge/module.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kuforge/milnor.hpp"

namespace kuforge::localcoh {

using exactla::f2_rank;
using exactla::rref;
using polyalg::ExtMask;
using polyalg::monomials;

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

int degree_of_key(MonoKey key, int r) {
  int d = 0;
  for (int j = 0; j < r; ++j) d += polyalg::exponent_of(key, r, j);
  return d;
}

PresentedModule::FreeBasis make_free_basis(int r, int w, const std::vector<int>& degrees, int d) {
  PresentedModule::FreeBasis fb;
  fb.offsets.assign(degrees.size(), npos);
  fb.monos.resize(degrees.size());
  for (std::size_t g = 0; g < degrees.size(); ++g) {
    const int rest = d - degrees[g];
    if (rest < 0 || rest % w != 0) continue;
    fb.monos[g] = monomials(r, rest / w);
    fb.offsets[g] = fb.size;
    fb.size += fb.monos[g]->size();
  }
  return fb;
}

// Adds column * u to position `slot` of `out`, as a row (rows_mode) or a column.
void add_image(const std::vector<PresentationEntry>& column, MonoKey u, const PresentedModule::FreeBasis& fb,
               F2Matrix& out, std::size_t slot, bool rows_mode) {
  for (const auto& e : column)
    for (MonoKey t : e.coefficient.terms) {
      const std::size_t idx = fb.index(e.generator, t + u);
      if (idx == npos) throw std::logic_error("relation image outside the free basis");
      if (rows_mode)
        out.flip(slot, idx);
      else
        out.flip(idx, slot);
    }
}

// Rows: relation (or syzygy) images times monomials in degree d, over the free basis of `degrees`.
F2Matrix image_rows(int r, int w, const std::vector<int>& degrees, const std::vector<int>& rel_degrees,
                    const std::vector<std::vector<PresentationEntry>>& rels, int d) {
  const auto fb = make_free_basis(r, w, degrees, d);
  std::size_t count = 0;
  std::vector<std::shared_ptr<const polyalg::MonomialBasis>> mult(rels.size());
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const int rest = d - rel_degrees[k];
    if (rest < 0 || rest % w != 0) continue;
    mult[k] = monomials(r, rest / w);
    count += mult[k]->size();
  }
  F2Matrix out(count, fb.size);
  std::size_t row = 0;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    if (!mult[k]) continue;
    for (MonoKey u : mult[k]->keys()) add_image(rels[k], u, fb, out, row++, true);
  }
  return out;
}

// Entries of an element of a free module given as a vector over its degree-d basis.
std::vector<PresentationEntry> to_entries(const PresentedModule::FreeBasis& fb, const F2Matrix& v,
                                          std::size_t col, const std::vector<int>& degrees, int w, int d) {
  std::vector<PresentationEntry> out;
  for (std::size_t g = 0; g < fb.offsets.size(); ++g) {
    if (fb.offsets[g] == npos) continue;
    Poly p;
    p.degree = (d - degrees[g]) / w;
    for (std::size_t m = 0; m < fb.monos[g]->size(); ++m)
      if (v.get(fb.offsets[g] + m, col)) p.terms.push_back(fb.monos[g]->key(m));
    if (!p.is_zero()) out.push_back({g, std::move(p)});
  }
  return out;
}

// Columns of `extra` that extend the column space of `base`.
std::vector<std::size_t> extending_columns(const F2Matrix& base, const F2Matrix& extra) {
  const auto ech = rref(F2Matrix::hconcat(base, extra));
  std::vector<std::size_t> out;
  for (std::size_t p : ech.pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Poly Poly::monomial(int r, const polyalg::ExpVec& e) {
  if (e.rank() != r) throw std::invalid_argument("Poly::monomial: rank mismatch");
  return Poly{e.degree(), {polyalg::pack(e)}};
}

Poly Poly::var_power(int r, int j, int power) { return Poly{power, {polyalg::var_key(r, j, power)}}; }

void Poly::add(MonoKey key) {
  auto it = std::lower_bound(terms.begin(), terms.end(), key);
  if (it != terms.end() && *it == key)
    terms.erase(it);
  else
    terms.insert(it, key);
}

void ModulePresentation::validate() const {
  if (rank < 0 || rank > polyalg::kMaxRank) throw std::invalid_argument("presentation: rank out of range");
  if (weight < 1) throw std::invalid_argument("presentation: weight must be positive");
  if (relation_degrees.size() != relations.size()) throw std::invalid_argument("presentation: relation degree count");
  for (std::size_t k = 0; k < relations.size(); ++k)
    for (const auto& e : relations[k]) {
      if (e.generator >= generator_degrees.size()) throw std::invalid_argument("presentation: bad generator index");
      if (generator_degrees[e.generator] + weight * e.coefficient.degree != relation_degrees[k])
        throw std::invalid_argument("presentation: inhomogeneous relation");
      for (MonoKey t : e.coefficient.terms)
        if (degree_of_key(t, rank) != e.coefficient.degree)
          throw std::invalid_argument("presentation: inhomogeneous coefficient");
    }
}

int ModulePresentation::max_degree() const {
  int m = 0;
  for (int d : generator_degrees) m = std::max(m, d);
  for (int d : relation_degrees) m = std::max(m, d);
  return m;
}

ModulePresentation direct_sum(const std::vector<ModulePresentation>& parts, const std::string& name) {
  ModulePresentation out;
  out.name = name;
  if (parts.empty()) return out;
  out.rank = parts.front().rank;
  out.weight = parts.front().weight;
  out.checked_through = parts.front().checked_through;
  for (const auto& p : parts) {
    if (p.rank != out.rank || p.weight != out.weight) throw std::invalid_argument("direct_sum: incompatible parts");
    const std::size_t base = out.generator_degrees.size();
    out.generator_degrees.insert(out.generator_degrees.end(), p.generator_degrees.begin(), p.generator_degrees.end());
    out.relation_degrees.insert(out.relation_degrees.end(), p.relation_degrees.begin(), p.relation_degrees.end());
    for (auto rel : p.relations) {
      for (auto& e : rel) e.generator += base;
      out.relations.push_back(std::move(rel));
    }
    out.stabilized = out.stabilized && p.stabilized;
    out.checked_through = std::min(out.checked_through, p.checked_through);
  }
  return out;
}

std::size_t PresentedModule::FreeBasis::index(std::size_t gen, MonoKey key) const {
  if (gen >= offsets.size() || offsets[gen] == npos) return npos;
  const std::size_t i = monos[gen]->index_of(key);
  return i == npos ? npos : offsets[gen] + i;
}

PresentedModule::PresentedModule(ModulePresentation p) : p_(std::move(p)) { p_.validate(); }

int PresentedModule::min_degree() const {
  if (p_.generator_degrees.empty()) return 0;
  return *std::min_element(p_.generator_degrees.begin(), p_.generator_degrees.end());
}

PresentedModule::FreeBasis PresentedModule::free_basis(int d) const {
  return make_free_basis(p_.rank, p_.weight, p_.generator_degrees, d);
}

F2Matrix PresentedModule::relation_rows(int d) const {
  return image_rows(p_.rank, p_.weight, p_.generator_degrees, p_.relation_degrees, p_.relations, d);
}

const PresentedModule::Piece& PresentedModule::piece(int d) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
  }
  auto pc = std::make_unique<Piece>();
  pc->basis = free_basis(d);
  const auto ech = rref(relation_rows(d));
  std::vector<bool> is_pivot(pc->basis.size, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> qpos(pc->basis.size, npos);
  for (std::size_t c = 0; c < pc->basis.size; ++c)
    if (!is_pivot[c]) {
      qpos[c] = pc->quotient_cols.size();
      pc->quotient_cols.push_back(c);
    }
  pc->normal_form = F2Matrix(pc->basis.size, pc->quotient_cols.size());
  for (std::size_t c = 0; c < pc->basis.size; ++c)
    if (!is_pivot[c]) pc->normal_form.set(c, qpos[c], true);
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    const std::size_t p = ech.pivots[k];
    for (std::size_t c = 0; c < pc->basis.size; ++c)
      if (!is_pivot[c] && ech.reduced.get(k, c)) pc->normal_form.set(p, qpos[c], true);
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(d, std::move(pc));
  return *it->second;
}

std::size_t PresentedModule::dim(int d) const {
  if (d < min_degree()) return 0;
  return piece(d).quotient_cols.size();
}

F2Matrix PresentedModule::multiply(int d, MonoKey u, int udeg) const {
  const int e = d + p_.weight * udeg;
  if (d < min_degree()) return F2Matrix(dim(e), 0);
  const Piece& src = piece(d);
  const Piece& tgt = piece(e);
  F2Matrix out(tgt.quotient_cols.size(), src.quotient_cols.size());
  // quotient basis element -> (generator, monomial)
  std::size_t g = 0;
  for (std::size_t q = 0; q < src.quotient_cols.size(); ++q) {
    const std::size_t pos = src.quotient_cols[q];
    while (g + 1 < src.basis.offsets.size() &&
           (src.basis.offsets[g] == npos || pos >= src.basis.offsets[g] + src.basis.monos[g]->size()))
      ++g;
    const MonoKey key = src.basis.monos[g]->key(pos - src.basis.offsets[g]);
    const std::size_t idx = tgt.basis.index(g, key + u);
    if (idx == npos) throw std::logic_error("multiply: product outside the free basis");
    const auto row = tgt.normal_form.row(idx);
    for (std::size_t c = 0; c < out.rows(); ++c)
      if ((row[c / 64] >> (c % 64)) & 1U) out.set(c, q, true);
  }
  return out;
}

ModulePresentation present_concrete(const ConcreteModule& m, int bound, int margin, const std::string& name) {
  ModulePresentation p;
  p.name = name;
  p.rank = m.rank;
  p.weight = m.weight;
  p.checked_through = bound;
  const int r = m.rank;
  // images of (generator, monomial) in the ambient spaces
  std::map<std::pair<std::size_t, MonoKey>, F2Matrix> images;
  std::vector<F2Matrix> gen_vectors;
  int last_change = m.min_degree - 1;

  auto image_of = [&](auto&& self, std::size_t g, MonoKey key, int d) -> const F2Matrix& {
    auto it = images.find({g, key});
    if (it != images.end()) return it->second;
    int j = 0;
    while (polyalg::exponent_of(key, r, j) == 0) ++j;
    const F2Matrix& prev = self(self, g, key - polyalg::var_key(r, j), d - m.weight);
    F2Matrix v = m.multiply_var(d - m.weight, j) * prev;
    return images.emplace(std::make_pair(g, key), std::move(v)).first->second;
  };

  for (int d = m.min_degree; d <= bound; ++d) {
    const F2Matrix span = m.span(d);
    auto fb = make_free_basis(r, m.weight, p.generator_degrees, d);
    F2Matrix e(span.rows(), fb.size);
    for (std::size_t g = 0; g < fb.offsets.size(); ++g) {
      if (fb.offsets[g] == npos) continue;
      for (std::size_t k = 0; k < fb.monos[g]->size(); ++k) {
        const F2Matrix& v = image_of(image_of, g, fb.monos[g]->key(k), d);
        for (std::size_t i = 0; i < v.rows(); ++i)
          if (v.get(i, 0)) e.set(i, fb.offsets[g] + k, true);
      }
    }
    // relations: kernel of the free map modulo consequences of known relations
    const F2Matrix ker = exactla::f2_kernel(e);
    if (ker.cols() > 0) {
      const F2Matrix known =
          image_rows(r, m.weight, p.generator_degrees, p.relation_degrees, p.relations, d).transpose();
      const F2Matrix known_cols = known.cols() == 0 ? F2Matrix(fb.size, 0) : known;
      for (std::size_t c : extending_columns(known_cols, ker)) {
        p.relation_degrees.push_back(d);
        p.relations.push_back(to_entries(fb, ker, c, p.generator_degrees, m.weight, d));
        last_change = d;
      }
    }
    for (std::size_t c : extending_columns(e, span)) {
      const std::size_t g = p.generator_degrees.size();
      p.generator_degrees.push_back(d);
      images.emplace(std::make_pair(g, MonoKey{0}), span.column(c));
      last_change = d;
    }
  }
  p.stabilized = last_change <= bound - margin;
  return p;
}

std::string ModuleSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case ModuleKind::Kmodule: os << "Kmodule(" << rank << ")"; break;
    case ModuleKind::Kunital: os << "Kunital(" << rank << ")"; break;
    case ModuleKind::Lfrak: os << "Lfrak(" << rank << "," << index << ")"; break;
    case ModuleKind::TorsKu: os << "TorsKu(" << rank << ")"; break;
    case ModuleKind::HZplus: os << "HZplus(" << rank << ")"; break;
    case ModuleKind::Free: os << "Free(" << rank << ")"; break;
  }
  return os.str();
}

ModuleSpec ModuleSpec::parse(const std::string& text, int default_rank) {
  const auto open = text.find('(');
  const std::string head = text.substr(0, open);
  std::vector<int> args;
  if (open != std::string::npos) {
    const auto close = text.find(')', open);
    if (close == std::string::npos || close + 1 != text.size())
      throw std::invalid_argument("module: unbalanced parentheses in '" + text + "'");
    for (const auto& a : split_args(text.substr(open + 1, close - open - 1))) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(a, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != a.size() || a.empty()) throw std::invalid_argument("module: bad argument '" + a + "'");
      args.push_back(v);
    }
  }
  ModuleSpec s;
  s.rank = default_rank;
  static const std::map<std::string, ModuleKind> kinds = {
      {"Kmodule", ModuleKind::Kmodule}, {"Kunital", ModuleKind::Kunital}, {"Lfrak", ModuleKind::Lfrak},
      {"TorsKu", ModuleKind::TorsKu},   {"HZplus", ModuleKind::HZplus},   {"Free", ModuleKind::Free}};
  auto it = kinds.find(head);
  if (it == kinds.end()) throw std::invalid_argument("module: unknown module '" + head + "'");
  s.kind = it->second;
  if (s.kind == ModuleKind::Lfrak) {
    if (args.size() == 1) {
      s.index = args[0];
    } else if (args.size() == 2) {
      s.rank = args[0];
      s.index = args[1];
    } else {
      throw std::invalid_argument("module: Lfrak takes (r,i) or (i)");
    }
  } else if (args.size() == 1) {
    s.rank = args[0];
  } else if (args.size() > 1) {
    throw std::invalid_argument("module: too many arguments");
  }
  if (s.rank < 1 || s.rank > 6) throw std::invalid_argument("module: rank out of range");
  if (s.kind == ModuleKind::Lfrak && (s.index < 1 || s.index > s.rank))
    throw std::invalid_argument("module: Lfrak index must satisfy 1 <= i <= r");
  return s;
}

ModulePresentation free_module(int r, int weight) {
  ModulePresentation p;
  p.name = "Free(" + std::to_string(r) + ")";
  p.rank = r;
  p.weight = weight;
  p.generator_degrees = {0};
  return p;
}

ModulePresentation lfrak_presentation(int r, int i) {
  if (i < 1 || i > r) throw std::invalid_argument("lfrak_presentation: need 1 <= i <= r");
  ModulePresentation p;
  p.name = "Lfrak(" + std::to_string(r) + "," + std::to_string(i) + ")";
  p.rank = r;
  p.weight = 1;
  const auto gens = polyalg::ext_basis(r, i);
  p.generator_degrees.assign(gens.size(), 0);
  for (ExtMask n : polyalg::ext_basis(r, i + 1)) {
    for (int power : {1, 2}) {
      std::vector<PresentationEntry> rel;
      for (int j = 0; j < r; ++j) {
        if (((n >> j) & 1U) == 0) continue;
        rel.push_back({polyalg::ext_index(r, n & ~(ExtMask{1} << j)), Poly::var_power(r, j, power)});
      }
      p.relation_degrees.push_back(power);
      p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

namespace {

ConcreteModule k_concrete(int r, bool unital) {
  ConcreteModule m;
  m.rank = r;
  m.weight = 2;
  m.min_degree = unital ? 0 : 1;
  m.span = [r](int d) { return d == 0 ? F2Matrix::identity(1) : milnor::k_span(r, d); };
  m.multiply_var = [r](int d, int j) {
    const auto src = monomials(r, d);
    const auto tgt = monomials(r, d + 2);
    F2Matrix out(tgt->size(), src->size());
    for (std::size_t c = 0; c < src->size(); ++c) out.set(tgt->index_of(src->key(c) + polyalg::var_key(r, j, 2)), c, true);
    return out;
  };
  return m;
}

int default_k_bound(int r) { return 4 * r + 8; }

}  // namespace

ModulePresentation kmodule_presentation(int r, int bound) {
  if (bound < 0) bound = default_k_bound(r);
  return present_concrete(k_concrete(r, false), bound, 4, "Kmodule(" + std::to_string(r) + ")");
}

ModulePresentation kunital_presentation(int r, int bound) {
  if (bound < 0) bound = default_k_bound(r);
  return present_concrete(k_concrete(r, true), bound, 4, "Kunital(" + std::to_string(r) + ")");
}

ModulePresentation present_module(const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleKind::Kmodule: return kmodule_presentation(spec.rank);
    case ModuleKind::Kunital: return kunital_presentation(spec.rank);
    case ModuleKind::Lfrak: return lfrak_presentation(spec.rank, spec.index);
    case ModuleKind::TorsKu: {
      std::vector<ModulePresentation> parts;
      for (int i = 2; i <= spec.rank; ++i) parts.push_back(lfrak_presentation(spec.rank, i));
      if (parts.empty()) {
        ModulePresentation zero;
        zero.rank = spec.rank;
        zero.name = spec.to_string();
        return zero;
      }
      return direct_sum(parts, spec.to_string());
    }
    case ModuleKind::HZplus: {
      auto p = kmodule_presentation(spec.rank);
      p.name = spec.to_string();
      return p;
    }
    case ModuleKind::Free: return free_module(spec.rank);
  }
  throw std::invalid_argument("present_module: unknown kind");
}

}  // namespace kuforge::localcoh
