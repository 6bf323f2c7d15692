#include "holant/signature.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace holant {

Signature Signature::from_values(unsigned arity, std::vector<Scalar> values) {
    if (arity > kMaxArity)
        throw ArityMismatch("arity " + std::to_string(arity) + " exceeds cap " +
                            std::to_string(kMaxArity));
    if (values.size() != (size_t{1} << arity))
        throw ArityMismatch("value table has " + std::to_string(values.size()) +
                            " entries, expected 2^" + std::to_string(arity));
    Signature s;
    s.arity_ = arity;
    s.values_ = std::move(values);
    return s;
}

Signature Signature::constant(Scalar v) {
    Signature s;
    s.values_[0] = std::move(v);
    return s;
}

const Scalar& Signature::at_bits(std::initializer_list<int> bits) const {
    if (bits.size() != arity_) throw ArityMismatch("bit tuple length != arity");
    size_t idx = 0;
    for (int b : bits) idx = (idx << 1) | (b ? 1 : 0);
    return values_[idx];
}

bool Signature::operator==(const Signature& o) const {
    if (arity_ != o.arity_) return false;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != o.values_[i]) return false;
    return true;
}

bool Signature::all_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.is_zero(); });
}

bool Signature::all_exact() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.exact(); });
}

SymSignature::SymSignature(unsigned arity, std::vector<Scalar> weights) : arity_(arity) {
    if (weights.size() != arity + size_t{1})
        throw ArityMismatch("symmetric form needs arity+1 weights");
    weights_ = std::move(weights);
}

bool SymSignature::operator==(const SymSignature& o) const {
    if (arity_ != o.arity_) return false;
    for (size_t i = 0; i < weights_.size(); ++i)
        if (weights_[i] != o.weights_[i]) return false;
    return true;
}

Signature make_named(const std::string& name) {
    auto sym = [](unsigned k, std::initializer_list<long long> w) {
        std::vector<Scalar> weights;
        for (long long v : w) weights.push_back(Scalar::integer(v));
        return from_sym(SymSignature(k, std::move(weights)));
    };
    if (name.rfind("EQ_", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(name.substr(3));
        } catch (...) {
            throw UnknownName("bad signature name: " + name);
        }
        if (k < 1 || k > static_cast<int>(kMaxArity))
            throw UnknownName("EQ_k needs 1 <= k <= " + std::to_string(kMaxArity));
        std::vector<Scalar> w(k + 1);
        w.front() = Scalar::integer(1);
        w.back() = Scalar::integer(1);
        return from_sym(SymSignature(static_cast<unsigned>(k), std::move(w)));
    }
    if (name == "ONE_3") return sym(3, {1, 1, 0, 0});
    if (name == "OR") return sym(2, {0, 1, 1});
    if (name == "NAND") return sym(2, {1, 1, 0});
    if (name == "AllOnes_1") return sym(1, {1, 1});
    if (name == "Implies")
        return Signature::from_values(2, {Scalar::integer(1), Scalar::integer(1),
                                          Scalar::integer(0), Scalar::integer(1)});
    throw UnknownName("unknown signature name: " + name);
}

Perm identity_perm(unsigned k) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 1u);
    return p;
}

Perm inverse_perm(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<unsigned>(i + 1);
    return inv;
}

const std::array<Perm, 6>& all_perms3() {
    static const std::array<Perm, 6> perms = {
        Perm{1, 2, 3}, Perm{1, 3, 2}, Perm{2, 1, 3},
        Perm{2, 3, 1}, Perm{3, 1, 2}, Perm{3, 2, 1},
    };
    return perms;
}

bool is_valid_perm(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (unsigned v : p) {
        if (v < 1 || v > p.size() || seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    return true;
}

Signature permute(const Signature& f, const Perm& sigma) {
    if (sigma.size() != f.arity() || !is_valid_perm(sigma))
        throw ArityMismatch("permutation does not match arity " + std::to_string(f.arity()));
    const unsigned k = f.arity();
    std::vector<Scalar> out(f.table_size());
    for (size_t idx = 0; idx < out.size(); ++idx) {
        // g(x1..xk) = f(x_{sigma(1)},...,x_{sigma(k)}): bit m of the source
        // index is the bit of x_{sigma(m+1)} in idx.
        size_t src = 0;
        for (unsigned m = 0; m < k; ++m) {
            const int bit = (idx >> (k - 1 - (sigma[m] - 1))) & 1;
            src = (src << 1) | bit;
        }
        out[idx] = f[src];
    }
    return Signature::from_values(k, std::move(out));
}

namespace {

void check_index(const Signature& f, unsigned i) {
    if (f.arity() == 0) throw IndexOutOfRange("operation needs arity >= 1");
    if (i < 1 || i > f.arity())
        throw IndexOutOfRange("index " + std::to_string(i) + " outside [1," +
                              std::to_string(f.arity()) + "]");
}

}  // namespace

Signature pin(const Signature& f, unsigned i, int c) {
    check_index(f, i);
    const unsigned k = f.arity();
    const unsigned shift = k - i;  // bit position of x_i
    std::vector<Scalar> out(size_t{1} << (k - 1));
    for (size_t idx = 0; idx < out.size(); ++idx) {
        const size_t lo = idx & ((size_t{1} << shift) - 1);
        const size_t hi = idx >> shift;
        const size_t src = (hi << (shift + 1)) | (size_t(c ? 1 : 0) << shift) | lo;
        out[idx] = f[src];
    }
    return Signature::from_values(k - 1, std::move(out));
}

Signature project(const Signature& f, unsigned i) {
    check_index(f, i);
    const Signature p0 = pin(f, i, 0);
    const Signature p1 = pin(f, i, 1);
    std::vector<Scalar> out(p0.table_size());
    for (size_t idx = 0; idx < out.size(); ++idx) out[idx] = p0[idx] + p1[idx];
    return Signature::from_values(f.arity() - 1, std::move(out));
}

Signature linked_project(const Signature& f, unsigned i, unsigned j) {
    check_index(f, i);
    check_index(f, j);
    if (i == j) throw IndicesEqual("linked projection needs two distinct indices");
    if (i > j) std::swap(i, j);
    // Sum over x_i with x_j = x_i: pin both to 0, both to 1, add.
    // Pinning j first keeps index i meaningful (i < j).
    const Signature a = pin(pin(f, j, 0), i, 0);
    const Signature b = pin(pin(f, j, 1), i, 1);
    std::vector<Scalar> out(a.table_size());
    for (size_t idx = 0; idx < out.size(); ++idx) out[idx] = a[idx] + b[idx];
    return Signature::from_values(f.arity() - 2, std::move(out));
}

Signature expand(const Signature& f, unsigned i) {
    if (i > f.arity())
        throw IndexOutOfRange("expansion position " + std::to_string(i) + " outside [0," +
                              std::to_string(f.arity()) + "]");
    const unsigned k = f.arity();
    if (k + 1 > kMaxArity) throw ArityMismatch("expansion exceeds arity cap");
    const unsigned shift = k - i;  // bit position of the new variable
    std::vector<Scalar> out(size_t{1} << (k + 1));
    for (size_t idx = 0; idx < out.size(); ++idx) {
        const size_t lo = idx & ((size_t{1} << shift) - 1);
        const size_t hi = idx >> (shift + 1);
        out[idx] = f[(hi << shift) | lo];
    }
    return Signature::from_values(k + 1, std::move(out));
}

Signature exmul(const Signature& f, const Signature& g) {
    const unsigned k = f.arity(), kp = g.arity();
    if (k + kp > kMaxArity) throw ArityMismatch("product exceeds arity cap");
    std::vector<Scalar> out(size_t{1} << (k + kp));
    for (size_t a = 0; a < f.table_size(); ++a)
        for (size_t b = 0; b < g.table_size(); ++b) out[(a << kp) | b] = f[a] * g[b];
    return Signature::from_values(k + kp, std::move(out));
}

Signature scale(const Scalar& lambda, const Signature& f) {
    if (lambda.is_zero()) throw ZeroScale();
    std::vector<Scalar> out(f.table_size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = lambda * f[i];
    return Signature::from_values(f.arity(), std::move(out));
}

Matrix2 Matrix2::identity() {
    return of(Scalar::integer(1), Scalar::integer(0), Scalar::integer(0), Scalar::integer(1));
}

Matrix2 Matrix2::of(Scalar a, Scalar b, Scalar c, Scalar d) {
    Matrix2 r;
    r.m[0][0] = std::move(a);
    r.m[0][1] = std::move(b);
    r.m[1][0] = std::move(c);
    r.m[1][1] = std::move(d);
    return r;
}

Scalar Matrix2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 Matrix2::transpose() const { return of(m[0][0], m[1][0], m[0][1], m[1][1]); }

Matrix2 Matrix2::inverse() const {
    const Scalar d = det();
    if (d.is_zero()) throw ShapeMismatch("singular matrix");
    return of(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d);
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    return r;
}

Matrix2 Matrix2::operator*(const Scalar& s) const {
    return of(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s);
}

bool Matrix2::all_exact() const {
    return m[0][0].exact() && m[0][1].exact() && m[1][0].exact() && m[1][1].exact();
}

bool Matrix2::operator==(const Matrix2& o) const {
    return m[0][0] == o.m[0][0] && m[0][1] == o.m[0][1] && m[1][0] == o.m[1][0] &&
           m[1][1] == o.m[1][1];
}

Signature transform(const Signature& f, const Matrix2& a) {
    // Contract one axis at a time: replace the axis-m index i by j with
    // weight A[i][j]. After k passes the table holds f . A^{tensor k}.
    const unsigned k = f.arity();
    std::vector<Scalar> cur = f.values();
    for (unsigned axis = 0; axis < k; ++axis) {
        const unsigned shift = k - 1 - axis;
        std::vector<Scalar> next(cur.size(), Scalar());
        for (size_t idx = 0; idx < cur.size(); ++idx) {
            const int i = (idx >> shift) & 1;
            const size_t base = idx & ~(size_t{1} << shift);
            for (int j = 0; j < 2; ++j) {
                const size_t dst = base | (size_t(j) << shift);
                next[dst] += cur[idx] * a.m[i][j];
            }
        }
        cur = std::move(next);
    }
    return Signature::from_values(k, std::move(cur));
}

bool is_symmetric(const Signature& f) {
    std::vector<const Scalar*> seen(f.arity() + 1, nullptr);
    for (size_t idx = 0; idx < f.table_size(); ++idx) {
        const unsigned w = static_cast<unsigned>(std::popcount(idx));
        if (!seen[w])
            seen[w] = &f[idx];
        else if (*seen[w] != f[idx])
            return false;
    }
    return true;
}

SymSignature to_sym(const Signature& f) {
    if (!is_symmetric(f)) throw NotSymmetric("signature is not symmetric");
    std::vector<Scalar> weights(f.arity() + 1);
    for (size_t idx = 0; idx < f.table_size(); ++idx)
        weights[std::popcount(idx)] = f[idx];
    return SymSignature(f.arity(), std::move(weights));
}

Signature from_sym(const SymSignature& g) {
    std::vector<Scalar> values(size_t{1} << g.arity());
    for (size_t idx = 0; idx < values.size(); ++idx) values[idx] = g[std::popcount(idx)];
    return Signature::from_values(g.arity(), std::move(values));
}

namespace {

// Looks for a nonzero 2x2 minor in the 2 x 2^{k-1} reshape of f along axis
// `axis`; rows are the two pins of that axis.
std::optional<RankCertificate> rank2_certificate(const Signature& f, unsigned axis) {
    const Signature r0 = pin(f, axis, 0);
    const Signature r1 = pin(f, axis, 1);
    // First column with a nonzero entry anchors the minor search.
    for (size_t c0 = 0; c0 < r0.table_size(); ++c0) {
        if (r0[c0].is_zero() && r1[c0].is_zero()) continue;
        for (size_t c1 = c0 + 1; c1 < r0.table_size(); ++c1) {
            const Scalar minor = r0[c0] * r1[c1] - r0[c1] * r1[c0];
            if (!minor.is_zero()) return RankCertificate{axis, c0, c1, minor};
        }
        return std::nullopt;  // all other columns proportional to column c0
    }
    return std::nullopt;  // all-zero reshape
}

}  // namespace

DegeneracyResult is_degenerate(const Signature& f) {
    DegeneracyResult result;
    if (f.arity() == 0) {
        result.factors = std::vector<Signature>{};
        return result;
    }
    if (f.all_zero()) {
        // All-zero signatures are degenerate by convention: all-zero factors.
        std::vector<Signature> factors;
        const Signature zero_unary =
            Signature::from_values(1, {Scalar::integer(0), Scalar::integer(0)});
        for (unsigned i = 0; i < f.arity(); ++i) factors.push_back(zero_unary);
        result.factors = std::move(factors);
        return result;
    }
    if (f.arity() == 1) {
        result.factors = std::vector<Signature>{f};
        return result;
    }

    const Signature r0 = pin(f, 1, 0);
    const Signature r1 = pin(f, 1, 1);
    // Rank-1 split along variable 1: f = u1 (x) rest, where rest is the
    // nonzero row and u1 holds the row ratio.
    Signature rest;
    Signature u1;
    if (r0.all_zero()) {
        u1 = Signature::from_values(1, {Scalar::integer(0), Scalar::integer(1)});
        rest = r1;
    } else {
        size_t piv = 0;
        while (r0[piv].is_zero()) ++piv;
        const Scalar lambda = r1[piv] / r0[piv];
        for (size_t c = 0; c < r0.table_size(); ++c) {
            if (r1[c] != lambda * r0[c]) {
                result.certificate = rank2_certificate(f, 1);
                return result;
            }
        }
        u1 = Signature::from_values(1, {Scalar::integer(1), lambda});
        rest = r0;
    }

    DegeneracyResult sub = is_degenerate(rest);
    if (!sub.degenerate()) {
        // f = u1 (x) rest with u1 nonzero, so a rank-2 reshape of rest lifts
        // to a rank-2 reshape of f along the shifted axis.
        if (sub.certificate) {
            const RankCertificate& inner = *sub.certificate;
            if (auto cert = rank2_certificate(f, inner.axis + 1)) result.certificate = cert;
        }
        return result;
    }
    std::vector<Scalar> zero_check = u1.values();
    std::vector<Signature> factors;
    factors.push_back(u1);
    for (Signature& s : *sub.factors) factors.push_back(std::move(s));
    result.factors = std::move(factors);
    return result;
}

}  // namespace holant
