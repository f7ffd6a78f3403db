#pragma once

// Dense complex linear algebra for few-qubit states and operators: tensor
// products, inner products, and the Hermitian matrix exponential via spectral
// decomposition. Basis convention throughout: qubit 1 is the most significant
// bit, so for two qubits the order is |00>, |01>, |10>, |11>.

#include <complex>
#include <cstddef>
#include <vector>

#include "qbell/errors.hpp"

namespace qbell {

using cplx = std::complex<double>;

// Capacity cap for tensor dimensions, in qubits. Dense storage only; a 14
// qubit operator is already ~4 GB.
int max_qubits();
void set_max_qubits(int n);

// Dense square complex matrix, row-major.
struct CMatrix {
  std::size_t dim = 0;
  std::vector<cplx> a;

  CMatrix() = default;
  explicit CMatrix(std::size_t d) : dim(d), a(d * d) {}

  cplx& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }

  static CMatrix identity(std::size_t d);
  static CMatrix zero(std::size_t d) { return CMatrix(d); }

  bool is_hermitian(double tol) const;
  bool all_finite() const;
};

// Normalized pure state over the 2^n computational basis.
class PureState {
 public:
  PureState(int n_qubits, std::vector<cplx> amps);

  // |index> in the computational basis.
  static PureState basis(int n_qubits, std::size_t index);
  // Normalizes amps (error if the norm is zero or not finite).
  static PureState normalized(int n_qubits, std::vector<cplx> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amps() const { return amps_; }
  cplx amp(std::size_t k) const { return amps_[k]; }
  double norm() const;

 private:
  struct unchecked_tag {};
  PureState(int n_qubits, std::vector<cplx> amps, unchecked_tag)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  int n_qubits_;
  std::vector<cplx> amps_;

  friend class Propagator;
  friend class UnitaryOperator;
};

class HermitianOperator {
 public:
  // Validates Hermiticity (|H - H^dagger| <= 1e-12 entrywise) and finiteness.
  explicit HermitianOperator(CMatrix m);

  std::size_t dim() const { return m_.dim; }
  const CMatrix& matrix() const { return m_; }
  const cplx& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  // True when every entry has an exactly zero imaginary part; such operators
  // get the real symmetric eigensolver.
  bool is_real() const;

 private:
  CMatrix m_;
};

class UnitaryOperator {
 public:
  explicit UnitaryOperator(CMatrix m);

  std::size_t dim() const { return m_.dim; }
  const CMatrix& matrix() const { return m_; }
  const cplx& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  PureState apply(const PureState& psi) const;
  UnitaryOperator adjoint() const;

 private:
  CMatrix m_;
};

// Kronecker products; the left factor supplies the most significant bits.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);
PureState tensor(const PureState& a, const PureState& b);

// <a|b>, conjugation on the first argument.
cplx inner(const PureState& a, const PureState& b);

// Eigendecomposition of a Hermitian operator. Eigenvectors are stored
// column-major (eigenvector k = column k, contiguous); eigenvalues ascending.
struct SpectralDecomposition {
  std::size_t dim = 0;
  bool real = false;
  std::vector<double> eigenvalues;
  std::vector<double> vectors_real;  // used when real
  std::vector<cplx> vectors;         // used when !real
};

SpectralDecomposition eigh(const HermitianOperator& h);

// exp(-i H t) via spectral decomposition. Materializes the full matrix; for
// repeated times against one H prefer Propagator.
UnitaryOperator hermitian_expm(const HermitianOperator& h, double t);

}  // namespace qbell
