#include "asym/permutation.hpp"

#include <numeric>

#include "asym/error.hpp"

namespace asym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
            throw InvalidArgument("permutation images are not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b)
{
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
}

bool Permutation::isIdentity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

bool Permutation::isInvolution() const noexcept
{
    bool moved = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto j = static_cast<std::size_t>(images_[i]);
        if (j != i)
            moved = true;
        if (images_[j] != static_cast<int>(i))
            return false;
    }
    return moved;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    Permutation r;
    r.images_.resize(b.images_.size());
    for (std::size_t i = 0; i < b.images_.size(); ++i)
        r.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
    return r;
}

Permutation Permutation::inverse() const
{
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return r;
}

Permutation Permutation::pow(const BigInt& e) const
{
    auto r = identity(size());
    for (const auto& cyc : cycles()) {
        const auto len = cyc.size();
        const auto shift = static_cast<std::size_t>(BigInt(e % len));
        for (std::size_t i = 0; i < len; ++i)
            r.images_[static_cast<std::size_t>(cyc[i])] = cyc[(i + shift) % len];
    }
    return r;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i))
            continue;
        std::vector<int> cyc;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            cyc.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

BigInt Permutation::order() const
{
    BigInt l = 1;
    for (const auto& cyc : cycles()) {
        const BigInt len = cyc.size();
        l = l / boost::multiprecision::gcd(l, len) * len;
    }
    return l;
}

} // namespace asym
