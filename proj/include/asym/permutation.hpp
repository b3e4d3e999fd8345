#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace asym {

using BigInt = boost::multiprecision::cpp_int;

/// Bijection on {0..n-1}; images[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidArgument unless `images` is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    int operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }
    std::span<const int> images() const noexcept { return images_; }

    bool isIdentity() const noexcept;
    bool isInvolution() const noexcept; ///< non-identity and self-inverse

    /// (a * b)(i) = a(b(i)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;
    Permutation pow(const BigInt& e) const;

    std::vector<std::vector<int>> cycles() const; ///< non-trivial cycles only
    BigInt order() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

} // namespace asym
