#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace monoclass {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite group on element indices 0..n-1 (0 is the identity), given by its
// right Cayley graph on the generators and a breadth-first spanning tree.
class FiniteGroup {
public:
    using MulFn = std::function<int(int, int)>;

    FiniteGroup() = default;
    FiniteGroup(std::vector<std::vector<int>> rmul, std::vector<int> parent, std::vector<int> via, MulFn mul);

    void set_mul(MulFn mul) { mul_ = std::move(mul); }

    int order() const { return static_cast<int>(parent_.size()); }
    int gen_count() const { return static_cast<int>(rmul_.size()); }
    int gen(int g) const { return rmul_[g][0]; }
    int rmul(int x, int g) const { return rmul_[g][x]; }
    int parent(int x) const { return parent_[x]; }
    int via(int x) const { return via_[x]; }

    int mul(int x, int y) const;
    int inv(int x) const;
    int conj(int x, int y) const { return mul(inv(y), mul(x, y)); }
    int elem_order(int x) const;
    bool commute(int x, int y) const { return mul(x, y) == mul(y, x); }

    // conjugacy classes: class id per element, one representative and size per class
    const std::vector<int>& class_of() const;
    const std::vector<int>& class_reps() const;
    int class_size(int c) const { return static_cast<int>(class_sizes_[c]); }
    int class_count() const { return static_cast<int>(class_reps().size()); }
    std::vector<int> center() const;
    bool is_abelian() const;
    // subgroup generated by the given elements, as a membership mask
    std::vector<char> subgroup(const std::vector<int>& gens) const;

private:
    void compute_inverses() const;
    void compute_classes() const;

    std::vector<std::vector<int>> rmul_;
    std::vector<int> parent_, via_;
    MulFn mul_;
    mutable std::vector<int> inv_, orders_, class_of_, class_reps_, class_sizes_;
};

// Breadth-first closure of gens under right multiplication.
template <class E, class Mul, class Hash = std::hash<E>>
FiniteGroup build_group(const std::vector<E>& gens, const E& identity, Mul mul, std::size_t budget,
                        std::vector<E>& elems, std::unordered_map<E, int, Hash>& index) {
    elems.assign(1, identity);
    index.clear();
    index.emplace(identity, 0);
    const int k = static_cast<int>(gens.size());
    std::vector<std::vector<int>> rmul(k);
    std::vector<int> parent{0}, via{-1};
    for (std::size_t x = 0; x < elems.size(); ++x) {
        for (int g = 0; g < k; ++g) {
            E y = mul(elems[x], gens[g]);
            auto [it, fresh] = index.emplace(std::move(y), static_cast<int>(elems.size()));
            if (fresh) {
                if (elems.size() >= budget)
                    throw BudgetExceeded("closure exceeded the budget of " + std::to_string(budget) + " elements");
                elems.push_back(it->first);
                parent.push_back(static_cast<int>(x));
                via.push_back(g);
            }
            rmul[g].push_back(it->second);
        }
    }
    return FiniteGroup(std::move(rmul), std::move(parent), std::move(via), nullptr);
}

}  // namespace monoclass
