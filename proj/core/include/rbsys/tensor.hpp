#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rbsys/linalg.hpp"

namespace rbsys {

// Sparse multilinear map V_in^{⊗ arity} -> V_out on fixed bases.
// Keys are (output index, input indices...).
class MultiTensor {
  public:
    using Key = std::vector<uint32_t>;
    using CoefMap = std::map<Key, Rational>;

    MultiTensor() : arity_(0), input_dim_(0), output_dim_(0) {}
    MultiTensor(size_t arity, size_t input_dim, size_t output_dim)
        : arity_(arity), input_dim_(input_dim), output_dim_(output_dim) {}

    size_t arity() const { return arity_; }
    size_t input_dim() const { return input_dim_; }
    size_t output_dim() const { return output_dim_; }
    const CoefMap& coefficients() const { return c_; }

    void add(size_t out, std::span<const size_t> idx, const Rational& v);
    void add(size_t out, std::initializer_list<size_t> idx, const Rational& v);
    Rational coefficient(size_t out, std::span<const size_t> idx) const;

    // Multilinear evaluation on coordinate vectors, one per slot.
    Vec apply(std::span<const Vec> args) const;

    MultiTensor& add_scaled(const Rational& c, const MultiTensor& o);
    MultiTensor scaled(const Rational& c) const;
    bool is_zero() const;

    friend bool operator==(const MultiTensor& a, const MultiTensor& b);

    // First nonzero coefficient (for witnesses); empty key if zero.
    std::pair<Key, Rational> first_nonzero() const;

  private:
    void prune(const Key& k);

    size_t arity_, input_dim_, output_dim_;
    CoefMap c_;
};

// Sparse bilinear map X ⊗ Y -> Z with independent dimensions; the shape
// taken by structure constants and bimodule actions.
class Bilinear {
  public:
    using Key = std::array<uint32_t, 3>; // (i, j, out)
    using CoefMap = std::map<Key, Rational>;

    Bilinear() : dim_x_(0), dim_y_(0), dim_out_(0) {}
    Bilinear(size_t dim_x, size_t dim_y, size_t dim_out)
        : dim_x_(dim_x), dim_y_(dim_y), dim_out_(dim_out) {}

    size_t dim_x() const { return dim_x_; }
    size_t dim_y() const { return dim_y_; }
    size_t dim_out() const { return dim_out_; }
    const CoefMap& coefficients() const { return c_; }

    void add(size_t i, size_t j, size_t out, const Rational& v);
    Rational coefficient(size_t i, size_t j, size_t out) const;

    Vec apply(const Vec& x, const Vec& y) const;
    Vec apply_basis(size_t i, size_t j) const;

    Bilinear& add_scaled(const Rational& c, const Bilinear& o);
    bool is_zero() const;

    // As a MultiTensor, only valid when dim_x == dim_y.
    MultiTensor as_multitensor() const;

    friend bool operator==(const Bilinear& a, const Bilinear& b);

  private:
    size_t dim_x_, dim_y_, dim_out_;
    CoefMap c_;
};

// Sparse multilinear map with independent slot dimensions; used by the
// homotopy operations where slots may read different graded spaces.
class MixedTensor {
  public:
    using Key = std::vector<uint32_t>; // (out, in...)
    using CoefMap = std::map<Key, Rational>;

    MixedTensor() : out_dim_(0) {}
    MixedTensor(std::vector<size_t> slot_dims, size_t out_dim)
        : slot_dims_(std::move(slot_dims)), out_dim_(out_dim) {}

    size_t arity() const { return slot_dims_.size(); }
    const std::vector<size_t>& slot_dims() const { return slot_dims_; }
    size_t out_dim() const { return out_dim_; }
    const CoefMap& coefficients() const { return c_; }

    void add(size_t out, std::span<const size_t> idx, const Rational& v);
    Vec apply(std::span<const Vec> args) const;
    MixedTensor& add_scaled(const Rational& c, const MixedTensor& o);
    bool is_zero() const;
    friend bool operator==(const MixedTensor& a, const MixedTensor& b);

  private:
    std::vector<size_t> slot_dims_;
    size_t out_dim_;
    CoefMap c_;
};

// Sign (-1)^{λ(i+1) + i(|a_1|+...+|a_{λ-1}|)} used by the arity-graded
// identities; `degrees` lists |a_1|, ..., at least λ-1 entries.
int koszul_sign(std::span<const int> degrees, size_t lambda, size_t i);

} // namespace rbsys
