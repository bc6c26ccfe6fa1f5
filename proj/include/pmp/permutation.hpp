#ifndef PMP_PERMUTATION_HPP
#define PMP_PERMUTATION_HPP

#include <numeric>
#include <string>
#include <vector>

#include "pmp/errors.hpp"

namespace pmp {

/// Permutation of {0..n-1}. Products are written in path order:
/// (a.then(b))(j) = b(a(j)), matching concatenation of loops under
/// analytic continuation.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
        std::iota(img_.begin(), img_.end(), 0);
    }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
                throw InvalidInput("not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation then(const Permutation& next) const {
        std::vector<int> out(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j)
            out[j] = next.img_[static_cast<std::size_t>(img_[j])];
        return Permutation(std::move(out));
    }

    Permutation inverse() const {
        std::vector<int> out(img_.size());
        for (std::size_t j = 0; j < img_.size(); ++j) out[static_cast<std::size_t>(img_[j])] = static_cast<int>(j);
        return Permutation(std::move(out));
    }

    bool is_identity() const {
        for (std::size_t j = 0; j < img_.size(); ++j)
            if (img_[j] != static_cast<int>(j)) return false;
        return true;
    }

    bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const Permutation& rhs) const { return img_ != rhs.img_; }

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
    long order() const;
    bool is_ncycle() const { return n() > 0 && cycles(true).size() == 1 && static_cast<int>(cycles(true)[0].size()) == n(); }

    // "(0 1 2)(4 5)"; fixed points omitted; identity prints "()".
    std::string cycle_string() const;

    Permutation power(long k) const;

   private:
    std::vector<int> img_;
};

// j -> j+1 (mod n)
Permutation full_cycle(int n);

struct GroupProperties {
    bool transitive = false;
    bool primitive = false;
    bool doubly_transitive = false;
};

GroupProperties group_properties(const std::vector<Permutation>& gens);

/// Smallest block containing {alpha, beta} for the group generated by gens
/// (Atkinson's refinement); the trivial block is the whole point set.
std::vector<int> minimal_block(const std::vector<Permutation>& gens, int alpha, int beta);

/// Distinct nontrivial block systems found from minimal blocks through
/// (0, beta) seeds; each system partitions {0..n-1} into equal-size blocks.
std::vector<std::vector<std::vector<int>>> block_systems(const std::vector<Permutation>& gens);

/// Breadth-first closure of the generated group, up to cap elements.
/// Returns the group order, or 0 if the cap was exceeded.
unsigned long group_order(const std::vector<Permutation>& gens, unsigned long cap = 200000);

}  // namespace pmp

#endif
