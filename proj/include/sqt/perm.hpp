#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sqt/error.hpp"

namespace sqt {

// Permutation of {0..n-1}. Text I/O is 1-based cycle notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);

    static Perm from_images(std::vector<int> images);
    static Perm from_images1(const std::vector<int>& images1);
    // degree 0 means "largest symbol mentioned"
    static Perm parse(std::string_view text, int degree = 0);
    static Perm cycle(int n, const std::vector<int>& symbols1);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    std::vector<int> images1() const;
    bool is_identity() const;
    std::string str() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

// (p∘q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm power(const Perm& p, long k);
Perm commutator(const Perm& h, const Perm& v);
std::vector<std::vector<int>> cycles(const Perm& p);
// descending
std::vector<int> cycle_type(const Perm& p);
bool is_transitive(const Perm& h, const Perm& v);
bool is_primitive(const Perm& h, const Perm& v);
// conjugate by relabeling: result(sigma(i)) = sigma(p(i))
Perm relabel(const Perm& p, const Perm& sigma);

}  // namespace sqt
