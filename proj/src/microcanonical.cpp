#include "ensemble/microcanonical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "ensemble/errors.hpp"

namespace ensemble {

double log_big(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    const unsigned b = boost::multiprecision::msb(v);
    if (b < 900) return std::log(v.convert_to<double>());
    const unsigned shift = b - 900;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2_v<double>;
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

using Memo = std::unordered_map<std::vector<int>, BigInt, VecHash>;

// Erdos-Gallai on a descending-sorted vector, parity included.
bool graphical_desc(const std::vector<int>& s) {
    long long sum = 0;
    for (int x : s) sum += x;
    if (sum % 2 != 0) return false;
    const int n = static_cast<int>(s.size());
    long long prefix = 0;
    for (int r = 1; r <= n; ++r) {
        prefix += s[static_cast<std::size_t>(r - 1)];
        long long rhs = static_cast<long long>(r) * (r - 1);
        for (int i = r; i < n; ++i) rhs += std::min(s[static_cast<std::size_t>(i)], r);
        if (prefix > rhs) return false;
    }
    return true;
}

constexpr int kMaxChoose = 17;
struct ChooseTable {
    unsigned long long c[kMaxChoose][kMaxChoose] = {};
    ChooseTable() {
        for (int n = 0; n < kMaxChoose; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};
const ChooseTable kChoose;

struct DegreeClass {
    int value;
    int mult;
};

// Eliminate the max-degree node: enumerate how many of its r neighbors come
// from each residual-degree class, weight by the binomial product, and recurse
// on the re-sorted residual sequence. Counts depend only on the multiset of
// residual degrees, which is what the memo is keyed on.
BigInt count_sorted(std::vector<int> deg, Memo& memo);

void assign_classes(const std::vector<DegreeClass>& classes, std::size_t ci, int remaining,
                    int capacity_left, unsigned long long weight, std::vector<int>& picks,
                    const std::vector<int>& deg, Memo& memo, BigInt& total) {
    if (remaining == 0) {
        // child = residual degrees after removing the eliminated node and
        // decrementing the chosen neighbors
        std::vector<int> child;
        child.reserve(deg.size() - 1);
        for (std::size_t j = 0; j < classes.size(); ++j) {
            for (int t = 0; t < classes[j].mult - picks[j]; ++t) child.push_back(classes[j].value);
            for (int t = 0; t < picks[j]; ++t) child.push_back(classes[j].value - 1);
        }
        std::sort(child.begin(), child.end(), std::greater<int>());
        total += BigInt(weight) * count_sorted(std::move(child), memo);
        return;
    }
    if (ci >= classes.size() || capacity_left < remaining) return;
    const int cap = std::min(classes[ci].mult, remaining);
    for (int a = 0; a <= cap; ++a) {
        picks[ci] = a;
        assign_classes(classes, ci + 1, remaining - a, capacity_left - classes[ci].mult,
                       weight * kChoose.c[classes[ci].mult][a], picks, deg, memo, total);
    }
    picks[ci] = 0;
}

BigInt count_sorted(std::vector<int> deg, Memo& memo) {
    while (!deg.empty() && deg.back() == 0) deg.pop_back();
    if (deg.empty()) return 1;
    const int r = deg[0];
    const int rest = static_cast<int>(deg.size()) - 1;
    if (r > rest) return 0;
    if (!graphical_desc(deg)) return 0;

    if (auto it = memo.find(deg); it != memo.end()) return it->second;

    std::vector<DegreeClass> classes;
    for (std::size_t i = 1; i < deg.size();) {
        std::size_t j = i;
        while (j < deg.size() && deg[j] == deg[i]) ++j;
        classes.push_back({deg[i], static_cast<int>(j - i)});
        i = j;
    }

    BigInt total = 0;
    std::vector<int> picks(classes.size(), 0);
    assign_classes(classes, 0, r, rest, 1ULL, picks, deg, memo, total);
    memo.emplace(std::move(deg), total);
    return total;
}

}  // namespace

GraphCount count_graphs(const DegreeSequence& d, int ceiling) {
    const int n = d.n();
    if (n > ceiling) {
        throw SizeLimitError("n=" + std::to_string(n) + " too large for exact counting (ceiling " +
                             std::to_string(ceiling) + ")");
    }
    std::vector<int> work = d.k();
    if (d.sum() > static_cast<long long>(n) * (n - 1) / 2) {
        work = dual_sequence(d).k();  // complement bijection, smaller degrees
    }
    std::sort(work.begin(), work.end(), std::greater<int>());
    Memo memo;
    BigInt omega = count_sorted(std::move(work), memo);
    return {omega, log_big(omega)};
}

GraphCount count_graphs_bruteforce(const DegreeSequence& d) {
    const int n = d.n();
    if (n > 8) throw SizeLimitError("brute-force counting limited to n <= 8");
    const int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(E));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

    const std::vector<int>& target = d.k();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int matched = 0;
    for (int i = 0; i < n; ++i) matched += (target[static_cast<std::size_t>(i)] == 0);

    BigInt count = (matched == n) ? 1 : 0;
    std::uint64_t cur = 0;  // current edge set, Gray-code walk
    const std::uint64_t total = 1ULL << E;
    for (std::uint64_t m = 1; m < total; ++m) {
        const int bit = std::countr_zero(m);
        const int delta = ((cur >> bit) & 1ULL) ? -1 : 1;
        cur ^= (1ULL << bit);
        for (int v : {edges[static_cast<std::size_t>(bit)].first,
                      edges[static_cast<std::size_t>(bit)].second}) {
            matched -= (deg[static_cast<std::size_t>(v)] == target[static_cast<std::size_t>(v)]);
            deg[static_cast<std::size_t>(v)] += delta;
            matched += (deg[static_cast<std::size_t>(v)] == target[static_cast<std::size_t>(v)]);
        }
        if (matched == n) ++count;
    }
    return {count, log_big(count)};
}

double microcanonical_log_probability(const DegreeSequence& d, int ceiling) {
    const GraphCount c = count_graphs(d, ceiling);
    if (c.omega == 0) throw std::invalid_argument("degree sequence is not graphical (Omega = 0)");
    return -c.log_omega;
}

}  // namespace ensemble
