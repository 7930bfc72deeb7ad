#include "monoclass/group.hpp"

#include <algorithm>

namespace monoclass {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> rmul, std::vector<int> parent, std::vector<int> via,
                         MulFn mul)
    : rmul_(std::move(rmul)), parent_(std::move(parent)), via_(std::move(via)), mul_(std::move(mul)) {}

int FiniteGroup::mul(int x, int y) const {
    if (mul_) return mul_(x, y);
    std::vector<int> word;
    for (int z = y; z != 0; z = parent_[z]) word.push_back(via_[z]);
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = rmul_[*it][x];
    return x;
}

void FiniteGroup::compute_inverses() const {
    const int n = order();
    inv_.assign(n, -1);
    inv_[0] = 0;
    std::vector<int> ginv(gen_count());
    for (int g = 0; g < gen_count(); ++g) {
        int prev = 0, cur = gen(g);
        while (cur != 0) prev = cur, cur = rmul_[g][cur];
        ginv[g] = prev;
    }
    for (int x = 1; x < n; ++x) inv_[x] = mul(ginv[via_[x]], inv_[parent_[x]]);
}

int FiniteGroup::inv(int x) const {
    if (inv_.empty()) compute_inverses();
    return inv_[x];
}

int FiniteGroup::elem_order(int x) const {
    if (orders_.empty()) orders_.assign(order(), 0);
    if (orders_[x] == 0) {
        int k = 1;
        for (int y = x; y != 0; y = mul(y, x)) ++k;
        orders_[x] = x == 0 ? 1 : k - 1;
    }
    return orders_[x];
}

void FiniteGroup::compute_classes() const {
    const int n = order();
    class_of_.assign(n, -1);
    class_reps_.clear();
    class_sizes_.clear();
    std::vector<int> ginv(gen_count());
    for (int g = 0; g < gen_count(); ++g) ginv[g] = inv(gen(g));
    std::vector<int> stack;
    for (int x = 0; x < n; ++x) {
        if (class_of_[x] >= 0) continue;
        const int c = static_cast<int>(class_reps_.size());
        class_reps_.push_back(x);
        class_sizes_.push_back(0);
        class_of_[x] = c;
        stack.assign(1, x);
        while (!stack.empty()) {
            const int y = stack.back();
            stack.pop_back();
            ++class_sizes_[c];
            for (int g = 0; g < gen_count(); ++g) {
                const int z = mul(ginv[g], rmul_[g][y]);
                if (class_of_[z] < 0) class_of_[z] = c, stack.push_back(z);
            }
        }
    }
}

const std::vector<int>& FiniteGroup::class_of() const {
    if (class_of_.empty()) compute_classes();
    return class_of_;
}

const std::vector<int>& FiniteGroup::class_reps() const {
    if (class_of_.empty()) compute_classes();
    return class_reps_;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> out;
    const auto& cls = class_of();
    for (int x = 0; x < order(); ++x)
        if (class_sizes_[cls[x]] == 1) out.push_back(x);
    return out;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < gen_count(); ++a)
        for (int b = a + 1; b < gen_count(); ++b)
            if (!commute(gen(a), gen(b))) return false;
    return true;
}

std::vector<char> FiniteGroup::subgroup(const std::vector<int>& gens) const {
    std::vector<char> in(order(), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int g : gens) {
            const int y = mul(elems[i], g);
            if (!in[y]) in[y] = 1, elems.push_back(y);
        }
    return in;
}

}  // namespace monoclass
