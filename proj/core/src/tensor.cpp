#include "rbsys/tensor.hpp"

#include "rbsys/errors.hpp"

namespace rbsys {

void MultiTensor::add(size_t out, std::span<const size_t> idx, const Rational& v) {
    if (idx.size() != arity_) throw InputError("tensor coefficient arity mismatch");
    if (out >= output_dim_) throw InputError("tensor output index out of range");
    Key k;
    k.reserve(arity_ + 1);
    k.push_back(static_cast<uint32_t>(out));
    for (size_t i : idx) {
        if (i >= input_dim_) throw InputError("tensor input index out of range");
        k.push_back(static_cast<uint32_t>(i));
    }
    c_[k] += v;
    prune(k);
}

void MultiTensor::add(size_t out, std::initializer_list<size_t> idx, const Rational& v) {
    std::vector<size_t> tmp(idx);
    add(out, std::span<const size_t>(tmp), v);
}

Rational MultiTensor::coefficient(size_t out, std::span<const size_t> idx) const {
    Key k;
    k.push_back(static_cast<uint32_t>(out));
    for (size_t i : idx) k.push_back(static_cast<uint32_t>(i));
    auto it = c_.find(k);
    return it == c_.end() ? Rational() : it->second;
}

Vec MultiTensor::apply(std::span<const Vec> args) const {
    if (args.size() != arity_) throw InputError("tensor applied to wrong number of arguments");
    for (const auto& a : args)
        if (a.size() != input_dim_) throw InputError("tensor argument dimension mismatch");
    Vec out(output_dim_);
    for (const auto& [k, coef] : c_) {
        Rational term = coef;
        bool dead = false;
        for (size_t t = 0; t < arity_; ++t) {
            const Rational& x = args[t][k[t + 1]];
            if (x.is_zero()) {
                dead = true;
                break;
            }
            term *= x;
        }
        if (!dead) out[k[0]] += term;
    }
    return out;
}

MultiTensor& MultiTensor::add_scaled(const Rational& c, const MultiTensor& o) {
    if (arity_ != o.arity_ || input_dim_ != o.input_dim_ || output_dim_ != o.output_dim_)
        throw InputError("tensor sum shape mismatch");
    for (const auto& [k, v] : o.c_) {
        c_[k] += c * v;
        prune(k);
    }
    return *this;
}

MultiTensor MultiTensor::scaled(const Rational& c) const {
    MultiTensor r(arity_, input_dim_, output_dim_);
    if (c.is_zero()) return r;
    r.c_ = c_;
    for (auto& [k, v] : r.c_) v *= c;
    return r;
}

bool MultiTensor::is_zero() const { return c_.empty(); }

bool operator==(const MultiTensor& a, const MultiTensor& b) {
    return a.arity_ == b.arity_ && a.input_dim_ == b.input_dim_ &&
           a.output_dim_ == b.output_dim_ && a.c_ == b.c_;
}

std::pair<MultiTensor::Key, Rational> MultiTensor::first_nonzero() const {
    if (c_.empty()) return {{}, Rational()};
    return *c_.begin();
}

void MultiTensor::prune(const Key& k) {
    auto it = c_.find(k);
    if (it != c_.end() && it->second.is_zero()) c_.erase(it);
}

void Bilinear::add(size_t i, size_t j, size_t out, const Rational& v) {
    if (i >= dim_x_ || j >= dim_y_ || out >= dim_out_)
        throw InputError("bilinear coefficient index out of range");
    Key k{static_cast<uint32_t>(i), static_cast<uint32_t>(j), static_cast<uint32_t>(out)};
    auto it = c_.emplace(k, Rational()).first;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

Rational Bilinear::coefficient(size_t i, size_t j, size_t out) const {
    auto it = c_.find(Key{static_cast<uint32_t>(i), static_cast<uint32_t>(j),
                          static_cast<uint32_t>(out)});
    return it == c_.end() ? Rational() : it->second;
}

Vec Bilinear::apply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_x_ || y.size() != dim_y_) throw InputError("bilinear argument dimension mismatch");
    Vec out(dim_out_);
    for (const auto& [k, coef] : c_) {
        const Rational& a = x[k[0]];
        if (a.is_zero()) continue;
        const Rational& b = y[k[1]];
        if (b.is_zero()) continue;
        out[k[2]] += coef * a * b;
    }
    return out;
}

Vec Bilinear::apply_basis(size_t i, size_t j) const {
    Vec out(dim_out_);
    for (const auto& [k, coef] : c_)
        if (k[0] == i && k[1] == j) out[k[2]] += coef;
    return out;
}

Bilinear& Bilinear::add_scaled(const Rational& c, const Bilinear& o) {
    if (dim_x_ != o.dim_x_ || dim_y_ != o.dim_y_ || dim_out_ != o.dim_out_)
        throw InputError("bilinear sum shape mismatch");
    for (const auto& [k, v] : o.c_) {
        auto it = c_.emplace(k, Rational()).first;
        it->second += c * v;
        if (it->second.is_zero()) c_.erase(it);
    }
    return *this;
}

bool Bilinear::is_zero() const { return c_.empty(); }

MultiTensor Bilinear::as_multitensor() const {
    if (dim_x_ != dim_y_) throw InputError("bilinear with mixed dimensions is not a MultiTensor");
    MultiTensor t(2, dim_x_, dim_out_);
    for (const auto& [k, v] : c_) t.add(k[2], {k[0], k[1]}, v);
    return t;
}

bool operator==(const Bilinear& a, const Bilinear& b) {
    return a.dim_x_ == b.dim_x_ && a.dim_y_ == b.dim_y_ && a.dim_out_ == b.dim_out_ &&
           a.c_ == b.c_;
}

void MixedTensor::add(size_t out, std::span<const size_t> idx, const Rational& v) {
    if (idx.size() != arity()) throw InputError("tensor coefficient arity mismatch");
    if (out >= out_dim_) throw InputError("tensor output index out of range");
    Key k;
    k.reserve(arity() + 1);
    k.push_back(static_cast<uint32_t>(out));
    for (size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] >= slot_dims_[t]) throw InputError("tensor input index out of range");
        k.push_back(static_cast<uint32_t>(idx[t]));
    }
    auto it = c_.emplace(k, Rational()).first;
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

Vec MixedTensor::apply(std::span<const Vec> args) const {
    if (args.size() != arity()) throw InputError("tensor applied to wrong number of arguments");
    for (size_t t = 0; t < args.size(); ++t)
        if (args[t].size() != slot_dims_[t]) throw InputError("tensor argument dimension mismatch");
    Vec out(out_dim_);
    for (const auto& [k, coef] : c_) {
        Rational term = coef;
        bool dead = false;
        for (size_t t = 0; t < arity(); ++t) {
            const Rational& x = args[t][k[t + 1]];
            if (x.is_zero()) {
                dead = true;
                break;
            }
            term *= x;
        }
        if (!dead) out[k[0]] += term;
    }
    return out;
}

MixedTensor& MixedTensor::add_scaled(const Rational& c, const MixedTensor& o) {
    if (slot_dims_ != o.slot_dims_ || out_dim_ != o.out_dim_)
        throw InputError("tensor sum shape mismatch");
    for (const auto& [k, v] : o.c_) {
        auto it = c_.emplace(k, Rational()).first;
        it->second += c * v;
        if (it->second.is_zero()) c_.erase(it);
    }
    return *this;
}

bool MixedTensor::is_zero() const { return c_.empty(); }

bool operator==(const MixedTensor& a, const MixedTensor& b) {
    return a.slot_dims_ == b.slot_dims_ && a.out_dim_ == b.out_dim_ && a.c_ == b.c_;
}

int koszul_sign(std::span<const int> degrees, size_t lambda, size_t i) {
    if (lambda < 1) throw InputError("koszul_sign: lambda must be >= 1");
    if (degrees.size() < lambda - 1) throw InputError("koszul_sign: not enough degrees");
    long e = static_cast<long>(lambda) * (static_cast<long>(i) + 1);
    for (size_t t = 0; t + 1 < lambda; ++t) e += static_cast<long>(i) * degrees[t];
    return ((e % 2 + 2) % 2 == 0) ? 1 : -1;
}

} // namespace rbsys
