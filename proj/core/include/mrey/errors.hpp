#pragma once

#include <stdexcept>
#include <string>

namespace mrey {

/// Input outside the domain where a formula is real or physically meaningful.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure (quadrature, root refinement) did not deliver.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result does not fit in a double even after the reference-exponent shift.
class range_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

/// The square root in delta has a negative argument.
class negative_radicand_error : public domain_error {
 public:
  explicit negative_radicand_error(double radicand);
  double radicand() const noexcept { return radicand_; }

 private:
  double radicand_;
};

/// c8 or c9 negative: the NU constants c10..c13 would be complex.
class complex_branch_error : public domain_error {
 public:
  complex_branch_error(double c8, double c9);
  double c8() const noexcept { return c8_; }
  double c9() const noexcept { return c9_; }

 private:
  double c8_;
  double c9_;
};

class no_root_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

/// Sampling grid cannot resolve the sign changes of a wavefunction.
class resolution_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace mrey
