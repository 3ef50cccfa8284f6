#include "ilc/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ilc {

long partition_weight(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0L);
}

bool is_partition(const Partition& p)
{
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

Partition repeated_part(long k, long r)
{
    if (k <= 0 || r <= 0)
        return {};
    return Partition(static_cast<size_t>(r), k);
}

bool dominance_le(const Partition& lam, const Partition& mu)
{
    if (partition_weight(lam) != partition_weight(mu))
        throw invalid_input("dominance_le: partitions must have equal weight");
    long sl = 0, sm = 0;
    size_t len = std::max(lam.size(), mu.size());
    for (size_t i = 0; i < len; ++i) {
        sl += i < lam.size() ? lam[i] : 0;
        sm += i < mu.size() ? mu[i] : 0;
        if (sl > sm)
            return false;
    }
    return true;
}

HExpr HExpr::one()
{
    HExpr f;
    f.add_term({}, ExactInt(1));
    return f;
}

HExpr HExpr::h(long j)
{
    HExpr f;
    if (j == 0)
        return one();
    if (j > 0)
        f.add_term({j}, ExactInt(1));
    return f; // j < 0: zero
}

void HExpr::add_term(const Partition& key, const ExactInt& coeff)
{
    if (sgn(coeff) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

HExpr h_add(const HExpr& f, const HExpr& g)
{
    HExpr out = f;
    for (const auto& [key, c] : g.terms())
        out.add_term(key, c);
    return out;
}

HExpr h_sub(const HExpr& f, const HExpr& g)
{
    HExpr out = f;
    for (const auto& [key, c] : g.terms())
        out.add_term(key, -c);
    return out;
}

HExpr h_scale(const HExpr& f, const ExactInt& c)
{
    HExpr out;
    for (const auto& [key, v] : f.terms())
        out.add_term(key, v * c);
    return out;
}

HExpr h_mul(const HExpr& f, const HExpr& g)
{
    HExpr out;
    Partition merged;
    for (const auto& [ka, ca] : f.terms()) {
        for (const auto& [kb, cb] : g.terms()) {
            merged.clear();
            merged.resize(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), merged.begin(),
                       std::greater<long>());
            out.add_term(merged, ca * cb);
        }
    }
    return out;
}

HExpr schur_to_h(const Partition& lam, long max_length)
{
    if (!is_partition(lam))
        throw invalid_input("schur_to_h: not a partition");
    long len = static_cast<long>(lam.size());
    if (len > max_length)
        throw resource_limit("schur_to_h: partition too long for Leibniz expansion");
    if (len == 0)
        return HExpr::one();

    std::vector<long> perm(static_cast<size_t>(len));
    std::iota(perm.begin(), perm.end(), 0L);

    HExpr out;
    Partition key;
    do {
        // parity by inversion count
        int inversions = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j])
                    ++inversions;

        key.clear();
        bool vanishes = false;
        for (long i = 0; i < len && !vanishes; ++i) {
            long idx = lam[static_cast<size_t>(i)] - (i + 1) + (perm[static_cast<size_t>(i)] + 1);
            if (idx < 0)
                vanishes = true; // h of negative index is 0
            else if (idx > 0)
                key.push_back(idx); // h_0 = 1 contributes nothing to the key
        }
        if (vanishes)
            continue;
        std::sort(key.begin(), key.end(), std::greater<long>());
        out.add_term(key, ExactInt(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<HExpr> l_step_h(const std::vector<HExpr>& s)
{
    auto at = [&](long k) -> const HExpr& {
        static const HExpr zero{};
        if (k < 0 || k >= static_cast<long>(s.size()))
            return zero;
        return s[static_cast<size_t>(k)];
    };
    std::vector<HExpr> out(s.size());
    for (long k = 0; k < static_cast<long>(s.size()); ++k)
        out[static_cast<size_t>(k)] = h_sub(h_mul(at(k), at(k)), h_mul(at(k - 1), at(k + 1)));
    return out;
}

namespace {

struct KeyHash {
    size_t operator()(const std::vector<long>& v) const
    {
        size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Number of nonnegative integer matrices with the given row sums (a weakly
// decreasing suffix of the original mu) and column sums.  Columns are kept
// sorted so permutation-equivalent states share one memo entry.
struct ContingencyCounter {
    std::unordered_map<std::vector<long>, ExactInt, KeyHash> memo;
    long long nodes = 0;
    static constexpr long long node_guard = 100000000; // 10^8 recursive states

    ExactInt count(const std::vector<long>& rows, size_t row_idx, std::vector<long> cols)
    {
        if (++nodes > node_guard)
            throw resource_limit("m_coeff: contingency enumeration guard exceeded");

        std::sort(cols.begin(), cols.end(), std::greater<long>());
        while (!cols.empty() && cols.back() == 0)
            cols.pop_back();
        if (row_idx == rows.size())
            return cols.empty() ? ExactInt(1) : ExactInt(0);
        if (cols.empty())
            return ExactInt(0);

        long remaining = 0;
        for (size_t i = row_idx; i < rows.size(); ++i)
            remaining += rows[i];
        if (cols.front() > remaining)
            return ExactInt(0);

        std::vector<long> key;
        key.reserve(rows.size() - row_idx + cols.size() + 1);
        key.insert(key.end(), rows.begin() + static_cast<long>(row_idx), rows.end());
        key.push_back(-1); // separator
        key.insert(key.end(), cols.begin(), cols.end());
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;

        ExactInt total(0);
        std::vector<long> fill(cols.size(), 0);
        long row = rows[row_idx];
        // enumerate compositions of `row` bounded by the column capacities
        auto rec = [&](auto&& self, size_t j, long left) -> void {
            if (j + 1 == cols.size()) {
                if (left <= cols[j]) {
                    fill[j] = left;
                    std::vector<long> next(cols);
                    for (size_t t = 0; t < cols.size(); ++t)
                        next[t] -= fill[t];
                    total += count(rows, row_idx + 1, std::move(next));
                }
                return;
            }
            long cap = std::min(left, cols[j]);
            for (long v = 0; v <= cap; ++v) {
                fill[j] = v;
                self(self, j + 1, left - v);
            }
        };
        rec(rec, 0, row);
        memo.emplace(std::move(key), total);
        return total;
    }
};

thread_local ContingencyCounter tl_counter;

} // namespace

ExactInt m_coeff(const HExpr& f, const Partition& lam)
{
    if (!is_partition(lam))
        throw invalid_input("m_coeff: not a partition");
    long w = partition_weight(lam);
    for (const auto& [key, c] : f.terms())
        if (partition_weight(key) != w)
            throw invalid_input("m_coeff: expression not homogeneous of degree |lambda|");

    tl_counter.nodes = 0;
    ExactInt total(0);
    std::vector<long> cols(lam.begin(), lam.end());
    for (const auto& [key, c] : f.terms())
        total += c * tl_counter.count(key, 0, cols);
    return total;
}

Partition dominant_partition(const std::vector<Partition>& shapes)
{
    Partition out;
    for (const Partition& s : shapes) {
        if (s.size() > out.size())
            out.resize(s.size(), 0);
        for (size_t i = 0; i < s.size(); ++i)
            out[i] += s[i];
    }
    return out;
}

bool verify_kirillov(long k, long r)
{
    if (k < 1 || r < 1)
        throw invalid_input("verify_kirillov: requires k, r >= 1");
    HExpr skr = schur_to_h(repeated_part(k, r));
    HExpr lhs = h_sub(h_mul(skr, skr), h_mul(schur_to_h(repeated_part(k - 1, r)),
                                             schur_to_h(repeated_part(k + 1, r))));
    HExpr rhs = h_mul(schur_to_h(repeated_part(k, r - 1)),
                      schur_to_h(repeated_part(k, r + 1)));
    return lhs == rhs;
}

std::vector<SchurProduct> l4_table(long k)
{
    auto rp = repeated_part;
    std::vector<SchurProduct> t;
    t.push_back({ExactInt(1), {rp(k, 1), rp(k, 1), rp(k, 1), rp(k, 1), rp(k, 2), rp(k, 2), rp(k, 4), rp(k, 4)}});
    t.push_back({ExactInt(2), {rp(k, 1), rp(k, 1), rp(k, 2), rp(k, 2), rp(k, 4), rp(k - 1, 3), rp(k + 1, 3)}});
    t.push_back({ExactInt(1), {rp(k - 1, 3), rp(k - 1, 3), rp(k, 2), rp(k, 2), rp(k + 1, 3), rp(k + 1, 3)}});
    t.push_back({ExactInt(-1), {rp(k - 1, 1), rp(k - 1, 1), rp(k - 1, 2), rp(k - 1, 4), rp(k + 1, 1), rp(k + 1, 1), rp(k + 1, 2), rp(k + 1, 4)}});
    t.push_back({ExactInt(-1), {rp(k - 1, 1), rp(k - 1, 1), rp(k - 1, 2), rp(k - 1, 4), rp(k, 3), rp(k + 1, 2), rp(k + 2, 3)}});
    t.push_back({ExactInt(-1), {rp(k - 2, 3), rp(k - 1, 2), rp(k, 3), rp(k + 1, 1), rp(k + 1, 1), rp(k + 1, 2), rp(k + 1, 4)}});
    t.push_back({ExactInt(-1), {rp(k - 2, 3), rp(k - 1, 2), rp(k, 3), rp(k, 3), rp(k + 1, 2), rp(k + 2, 3)}});
    return t;
}

HExpr l4_of_hk(long k)
{
    if (k < 2)
        throw invalid_input("l4_of_hk: requires k >= 2");
    HExpr total;
    for (const SchurProduct& term : l4_table(k)) {
        HExpr prod = HExpr::one();
        for (const Partition& shape : term.shapes)
            prod = h_mul(prod, schur_to_h(shape));
        total = h_add(total, h_scale(prod, term.coeff));
    }
    return total;
}

ExactInt l4_negative_witness(long k)
{
    Partition lam = {7 * k + 1, 5 * k - 1, 3 * k - 1, k + 1};
    return m_coeff(l4_of_hk(k), lam);
}

ExactRat specialize(const HExpr& f, const std::function<ExactRat(long)>& h_value)
{
    ExactRat total(0);
    for (const auto& [key, c] : f.terms()) {
        ExactRat prod(c);
        for (long part : key)
            prod *= h_value(part);
        total += prod;
    }
    return total;
}

} // namespace ilc
