#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lrcone {

using Int = std::int64_t;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Z>;

// Bad user input (type strings, weight lists, flags). Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed (calibration, scan agreement, certificates).
// Maps to CLI exit code 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int gcd(Int a, Int b);
Int vec_gcd(const IVec& v);

// Divide by the gcd of the entries; the zero vector is returned unchanged.
IVec primitive(const IVec& v);
// Positive rational rescaling of v to a primitive integer vector.
IVec primitive(const QVec& v);
ZVec primitive(const ZVec& v);

Int dot(const IVec& a, const IVec& b);
Q dot(const QVec& a, const QVec& b);

QVec to_q(const IVec& v);
QMat to_q(const IMat& m);
// Throws if some entry is not an integer fitting in Int.
IVec to_int(const QVec& v);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(Int c, const IVec& a);
IVec neg(const IVec& a);
bool is_zero(const IVec& v);

QVec mat_vec(const QMat& m, const QVec& v);
IVec mat_vec(const IMat& m, const IVec& v);
QMat mat_mul(const QMat& a, const QMat& b);
QMat transpose(const QMat& m);
IMat transpose(const IMat& m);
QMat identity_q(int n);

int rank(QMat m);
int rank(const IMat& m);
// Inverse of a square nonsingular matrix; throws ConsistencyError when singular.
QMat inverse(const QMat& m);
// Basis of {x in Q^cols : m x = 0}, one vector per free column of the reduced
// echelon form. m may have zero rows.
QMat kernel(const QMat& m, int cols);
IMat integer_kernel(const IMat& m, int cols);

std::string to_string(const IVec& v);
std::string to_string(const Q& q);

}  // namespace lrcone
