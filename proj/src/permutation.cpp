#include "rank1lab/permutation.hpp"

#include <algorithm>
#include <string>

namespace rank1lab {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= size() || seen[static_cast<size_t>(x)])
            throw BadPermutation("image table is not a bijection on {1.." +
                                 std::to_string(size()) + "}");
        seen[static_cast<size_t>(x)] = 1;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    return Perm(std::move(img));
}

Perm Perm::from_one_based(const std::vector<int>& images) {
    std::vector<int> img(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
        if (images[i] < 1 || images[i] > static_cast<int>(images.size()))
            throw BadPermutation("1-based image " + std::to_string(images[i]) +
                                 " out of range for n=" + std::to_string(images.size()));
        img[i] = images[i] - 1;
    }
    return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i;
    for (const auto& cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k] - 1;
            int b = cyc[(k + 1) % cyc.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw BadPermutation("cycle point out of range");
            img[static_cast<size_t>(a)] = b;
        }
    }
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[i] = img_[static_cast<size_t>(rhs.img_[i])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(img));
}

Perm Perm::conjugate_by(const Perm& phi) const {
    // (phi * this * phi^{-1})(x), computed without building intermediates.
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[static_cast<size_t>(phi.img_[i])] = phi.img_[static_cast<size_t>(img_[i])];
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<size_t>(x)] = 1;
            cyc.push_back(x);
            x = img_[static_cast<size_t>(x)];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Perm::cycle_type() const {
    std::vector<int> type;
    for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::vector<int> Perm::to_one_based() const {
    std::vector<int> out(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

Perm pow(const Perm& p, long long k) {
    Perm base = k < 0 ? p.inverse() : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                 : static_cast<unsigned long long>(k);
    Perm acc = Perm::identity(p.size());
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = base * base;
        e >>= 1ULL;
    }
    return acc;
}

bool acts_transitively(int n, const std::vector<const Perm*>& gens) {
    if (n <= 0) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm* g : gens) {
            // Forward images suffice: the generated group is finite, so the
            // forward orbit of each generator equals its full orbit.
            int y = (*g)(x);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

static void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Perm canonical_of_cycle_type(int n, const std::vector<int>& type) {
    std::vector<int> img(static_cast<size_t>(n));
    int base = 0;
    for (int len : type) {
        for (int k = 0; k < len; ++k)
            img[static_cast<size_t>(base + k)] = base + (k + 1) % len;
        base += len;
    }
    if (base != n) throw BadPermutation("cycle type does not sum to n");
    return Perm(std::move(img));
}

} // namespace rank1lab
