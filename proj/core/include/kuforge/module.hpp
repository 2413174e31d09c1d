#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kuforge/f2matrix.hpp"
#include "kuforge/polyalg.hpp"

namespace kuforge::localcoh {

using exactla::F2Matrix;
using polyalg::MonoKey;

// Homogeneous polynomial over F2 as a sorted set of packed monomials.
struct Poly {
  int degree = 0;  // polynomial degree, before weighting
  std::vector<MonoKey> terms;

  static Poly monomial(int r, const polyalg::ExpVec& e);
  static Poly var_power(int r, int j, int power);
  bool is_zero() const { return terms.empty(); }
  void add(MonoKey key);  // toggles a term
};

struct PresentationEntry {
  std::size_t generator;
  Poly coefficient;
};

// Finitely generated graded module over F2[x_1..x_r]; every variable has internal degree `weight`.
struct ModulePresentation {
  std::string name;
  int rank = 0;
  int weight = 1;
  std::vector<int> generator_degrees;
  std::vector<int> relation_degrees;
  std::vector<std::vector<PresentationEntry>> relations;
  bool stabilized = true;
  int checked_through = 0;  // degree through which the presentation was verified

  void validate() const;
  int max_degree() const;
};

ModulePresentation direct_sum(const std::vector<ModulePresentation>& parts, const std::string& name);

// Degreewise view of a graded module: finite-dimensional pieces and multiplication by monomials.
class GradedModule {
 public:
  virtual ~GradedModule() = default;
  virtual int rank() const = 0;
  virtual int weight() const = 0;
  virtual int min_degree() const = 0;
  virtual std::size_t dim(int d) const = 0;
  // Multiplication by the monomial `u` (polynomial degree udeg): M_d -> M_{d + weight * udeg}.
  virtual F2Matrix multiply(int d, MonoKey u, int udeg) const = 0;
};

// Quotient of a free module by the relation submodule, evaluated degree by degree.
class PresentedModule : public GradedModule {
 public:
  explicit PresentedModule(ModulePresentation p);

  int rank() const override { return p_.rank; }
  int weight() const override { return p_.weight; }
  int min_degree() const override;
  std::size_t dim(int d) const override;
  F2Matrix multiply(int d, MonoKey u, int udeg) const override;

  const ModulePresentation& presentation() const { return p_; }

  // Free-module basis in degree d: pairs (generator, monomial) in generator-major order.
  struct FreeBasis {
    std::vector<std::size_t> offsets;  // per generator, npos when absent
    std::vector<std::shared_ptr<const polyalg::MonomialBasis>> monos;
    std::size_t size = 0;
    std::size_t index(std::size_t gen, MonoKey key) const;
  };
  FreeBasis free_basis(int d) const;
  // Images of all relations times monomials, as rows over the free basis in degree d.
  F2Matrix relation_rows(int d) const;

 private:
  struct Piece {
    FreeBasis basis;
    std::vector<std::size_t> quotient_cols;  // free basis positions forming the quotient basis
    F2Matrix normal_form;                    // free basis size x dim, rows are normal forms
  };
  const Piece& piece(int d) const;

  ModulePresentation p_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<Piece>> cache_;
};

// Degreewise data of a module given concretely: pieces as subspaces of an ambient space and a
// multiplication rule on ambient vectors. Used to compute presentations.
struct ConcreteModule {
  int rank = 0;
  int weight = 1;
  int min_degree = 0;
  // Columns spanning M_d inside its ambient space.
  std::function<F2Matrix(int)> span;
  // Ambient-level multiplication by the variable x_j from degree d.
  std::function<F2Matrix(int d, int j)> multiply_var;
};

// Minimal generators and relations of a concrete module through degree `bound`; relations are
// searched through `bound`, and the result is flagged unstabilized when new generators or
// relations appear in the last `margin` degrees.
ModulePresentation present_concrete(const ConcreteModule& m, int bound, int margin, const std::string& name);

// Kmodule is K_{>0} and Kunital is K_* with the unit in degree 0; both in cohomological degrees, variables of weight 2.
enum class ModuleKind { Kmodule, Kunital, Lfrak, TorsKu, HZplus, Free };

struct ModuleSpec {
  ModuleKind kind = ModuleKind::Lfrak;
  int rank = 2;
  int index = 1;  // i for Lfrak

  std::string to_string() const;
  static ModuleSpec parse(const std::string& text, int default_rank);
};

// HZplus returns the presentation of the reduced part K_{>0}; the Z in degree 0 is handled by the integral route.
ModulePresentation present_module(const ModuleSpec& spec);

ModulePresentation free_module(int r, int weight = 1);
ModulePresentation lfrak_presentation(int r, int i);
ModulePresentation kmodule_presentation(int r, int bound = -1);
ModulePresentation kunital_presentation(int r, int bound = -1);

}  // namespace kuforge::localcoh
