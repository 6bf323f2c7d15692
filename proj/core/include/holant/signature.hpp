#pragma once

#include "holant/scalar.hpp"

#include <array>
#include <optional>
#include <vector>

namespace holant {

class ArityMismatch : public DomainError {
public:
    explicit ArityMismatch(const std::string& msg) : DomainError("ArityMismatch", msg) {}
};

class IndexOutOfRange : public DomainError {
public:
    explicit IndexOutOfRange(const std::string& msg) : DomainError("IndexOutOfRange", msg) {}
};

class IndicesEqual : public DomainError {
public:
    explicit IndicesEqual(const std::string& msg) : DomainError("IndicesEqual", msg) {}
};

class ZeroScale : public DomainError {
public:
    explicit ZeroScale() : DomainError("ZeroScale", "scaling constant must be nonzero") {}
};

class NotSymmetric : public DomainError {
public:
    explicit NotSymmetric(const std::string& msg) : DomainError("NotSymmetric", msg) {}
};

class UnknownName : public DomainError {
public:
    explicit UnknownName(const std::string& msg) : DomainError("UnknownName", msg) {}
};

class ShapeMismatch : public DomainError {
public:
    explicit ShapeMismatch(const std::string& msg) : DomainError("ShapeMismatch", msg) {}
};

/// Hard cap on arity; guards the 2^k table size.
inline constexpr unsigned kMaxArity = 16;

/// A complex-valued function on {0,1}^k stored as a row vector of 2^k values
/// in lexicographic input order, x1 being the most significant bit. Arity 0
/// is allowed and denotes the scalar result of a full contraction.
/// Signatures are immutable; every operation below is a pure function.
class Signature {
public:
    Signature() : arity_(0), values_(1) {}

    static Signature from_values(unsigned arity, std::vector<Scalar> values);
    static Signature constant(Scalar v);

    unsigned arity() const { return arity_; }
    size_t table_size() const { return values_.size(); }
    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& operator[](size_t idx) const { return values_[idx]; }

    /// Value at the point whose bits are given most-significant-first.
    const Scalar& at_bits(std::initializer_list<int> bits) const;

    bool operator==(const Signature& o) const;
    bool operator!=(const Signature& o) const { return !(*this == o); }

    bool all_zero() const;
    bool all_exact() const;

private:
    unsigned arity_;
    std::vector<Scalar> values_;
};

/// A symmetric signature in compact form: k+1 Hamming-weight values.
class SymSignature {
public:
    SymSignature() : arity_(0), weights_(1) {}
    SymSignature(unsigned arity, std::vector<Scalar> weights);

    unsigned arity() const { return arity_; }
    const std::vector<Scalar>& weights() const { return weights_; }
    const Scalar& operator[](size_t w) const { return weights_[w]; }

    bool operator==(const SymSignature& o) const;
    bool operator!=(const SymSignature& o) const { return !(*this == o); }

private:
    unsigned arity_;
    std::vector<Scalar> weights_;
};

/// Standard named signatures. EQ_k = [1,0,...,0,1]; ONE_3 = [1,1,0,0];
/// OR = [0,1,1]; NAND = [1,1,0]; Implies = (1,1,0,1); AllOnes_1 = [1,1].
/// Accepts "EQ_1".."EQ_16", "ONE_3", "OR", "NAND", "Implies", "AllOnes_1".
Signature make_named(const std::string& name);

/// A permutation of [k], stored as the image sequence (sigma(1),...,sigma(k)),
/// 1-based. permute(f, sigma)(x1,...,xk) = f(x_{sigma(1)},...,x_{sigma(k)}).
using Perm = std::vector<unsigned>;

Perm identity_perm(unsigned k);
Perm inverse_perm(const Perm& p);
/// All permutations of [3] in lexicographic order; the fixed enumeration
/// order used by classification and witness search.
const std::array<Perm, 6>& all_perms3();
bool is_valid_perm(const Perm& p);

Signature permute(const Signature& f, const Perm& sigma);

/// Restrict variable i (1-based) to the bit c; arity drops by one.
Signature pin(const Signature& f, unsigned i, int c);

/// Sum variable i out; arity drops by one.
Signature project(const Signature& f, unsigned i);

/// Sum over x_i with x_j forced equal to x_i (1 <= i < j); arity drops by two.
Signature linked_project(const Signature& f, unsigned i, unsigned j);

/// Insert a fresh ignored variable after position i (0 <= i <= arity).
Signature expand(const Signature& f, unsigned i);

/// Tensor product on disjoint variable sets; f's variables come first.
Signature exmul(const Signature& f, const Signature& g);

/// Pointwise scaling by a nonzero constant.
Signature scale(const Scalar& lambda, const Signature& f);

/// A 2x2 complex matrix, row-major.
struct Matrix2 {
    std::array<std::array<Scalar, 2>, 2> m;

    static Matrix2 identity();
    static Matrix2 of(Scalar a, Scalar b, Scalar c, Scalar d);

    Scalar det() const;
    bool singular() const { return det().is_zero(); }
    Matrix2 transpose() const;
    /// Exact inverse; throws ShapeMismatch("singular matrix") when singular.
    Matrix2 inverse() const;
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator*(const Scalar& s) const;
    bool all_exact() const;
    bool operator==(const Matrix2& o) const;
};

/// Row-vector transform f . A^{tensor k}: the result g satisfies
/// g(j1..jk) = sum_{i1..ik} f(i1..ik) prod_m A[i_m][j_m].
Signature transform(const Signature& f, const Matrix2& a);

/// True iff all equal-Hamming-weight entries agree.
bool is_symmetric(const Signature& f);
/// Compact form of a symmetric signature; throws NotSymmetric otherwise.
SymSignature to_sym(const Signature& f);
Signature from_sym(const SymSignature& g);

/// When the answer is "not degenerate", a witnessing rank-2 certificate:
/// reshaping f along `axis` (1-based) gives a 2 x 2^{k-1} matrix whose minor
/// at columns (col0, col1) is nonzero.
struct RankCertificate {
    unsigned axis;
    size_t col0, col1;
    Scalar minor;
};

struct DegeneracyResult {
    /// Unary factors u1,...,uk with f = u1 (x) ... (x) uk, when degenerate.
    std::optional<std::vector<Signature>> factors;
    std::optional<RankCertificate> certificate;
    bool degenerate() const { return factors.has_value(); }
};

/// Tensor-factorization test; all-zero signatures count as degenerate with
/// all-zero factors. Algorithm: recursive rank-1 split along variable 1.
DegeneracyResult is_degenerate(const Signature& f);

}  // namespace holant
