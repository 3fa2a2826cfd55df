#pragma once

/// \file
/// Dense totally symmetric tensors over dimension n (2..6), stored once per
/// non-decreasing index multiset in lexicographic order.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "finsler/errors.hpp"

namespace finsler {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 6;

namespace detail {

template <int Rank>
struct MultisetIndex {
    std::vector<std::array<int, Rank>> multisets;  // storage order
    std::vector<int> slot;                         // full index (row-major) -> storage slot
};

template <int Rank>
MultisetIndex<Rank> build_index(int n)
{
    MultisetIndex<Rank> idx;
    std::array<int, Rank> a{};
    // enumerate non-decreasing tuples lexicographically
    for (;;) {
        idx.multisets.push_back(a);
        int p = Rank - 1;
        while (p >= 0 && a[p] == n - 1) --p;
        if (p < 0) break;
        ++a[p];
        for (int q = p + 1; q < Rank; ++q) a[q] = a[p];
    }
    int full = 1;
    for (int r = 0; r < Rank; ++r) full *= n;
    idx.slot.assign(full, -1);
    for (int f = 0; f < full; ++f) {
        std::array<int, Rank> t{};
        int rem = f;
        for (int r = Rank - 1; r >= 0; --r) {
            t[r] = rem % n;
            rem /= n;
        }
        std::sort(t.begin(), t.end());
        auto it = std::lower_bound(idx.multisets.begin(), idx.multisets.end(), t);
        idx.slot[f] = static_cast<int>(it - idx.multisets.begin());
    }
    return idx;
}

template <int Rank>
const MultisetIndex<Rank>& multiset_index(int n)
{
    static const std::array<MultisetIndex<Rank>, kMaxDim + 1> table = [] {
        std::array<MultisetIndex<Rank>, kMaxDim + 1> t;
        for (int d = 1; d <= kMaxDim; ++d) t[d] = build_index<Rank>(d);
        return t;
    }();
    return table[n];
}

}  // namespace detail

template <int Rank>
class SymTensor {
    static_assert(Rank >= 1 && Rank <= 4);

public:
    using Index = std::array<int, Rank>;

    SymTensor() = default;
    explicit SymTensor(int n) : n_(n)
    {
        if (n < 1 || n > kMaxDim) throw DimensionMismatch("tensor dimension must be in 1..6");
        data_.assign(index().multisets.size(), 0.0);
    }

    int dim() const noexcept { return n_; }
    std::size_t stored_size() const noexcept { return data_.size(); }

    template <typename... I>
    double operator()(I... i) const
    {
        static_assert(sizeof...(I) == Rank);
        return data_[slot({static_cast<int>(i)...})];
    }

    template <typename... I>
    double& operator()(I... i)
    {
        static_assert(sizeof...(I) == Rank);
        return data_[slot({static_cast<int>(i)...})];
    }

    double at(const Index& i) const { return data_[slot(i)]; }
    double& at(const Index& i) { return data_[slot(i)]; }

    /// Non-decreasing index tuples, in storage order.
    const std::vector<Index>& multisets() const { return index().multisets; }
    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    double max_abs() const
    {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    SymTensor& operator*=(double c)
    {
        for (double& v : data_) v *= c;
        return *this;
    }
    SymTensor& operator+=(const SymTensor& o)
    {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    friend SymTensor operator-(SymTensor a, const SymTensor& b)
    {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend SymTensor operator*(double c, SymTensor a) { return a *= c; }

private:
    const detail::MultisetIndex<Rank>& index() const { return detail::multiset_index<Rank>(n_); }

    int slot(const Index& i) const
    {
        int f = 0;
        for (int r = 0; r < Rank; ++r) f = f * n_ + i[r];
        return index().slot[f];
    }

    int n_ = 0;
    std::vector<double> data_;
};

using SymTensor2 = SymTensor<2>;
using SymTensor3 = SymTensor<3>;
using SymTensor4 = SymTensor<4>;

/// Max over stored entries of |a - b|.
template <int Rank>
double max_abs_diff(const SymTensor<Rank>& a, const SymTensor<Rank>& b)
{
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

}  // namespace finsler
