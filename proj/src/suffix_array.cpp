#include "subshift/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace subshift {

namespace {

using Index = std::int32_t;

std::vector<Index> naive_sa(const std::vector<Index>& s) {
    const Index n = static_cast<Index>(s.size());
    std::vector<Index> sa(static_cast<std::size_t>(n));
    std::iota(sa.begin(), sa.end(), 0);
    std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
        return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
    });
    return sa;
}

std::vector<Index> sa_is(const std::vector<Index>& s, Index upper) {
    const Index n = static_cast<Index>(s.size());
    if (n == 0) return {};
    if (n < 16) return naive_sa(s);

    std::vector<Index> sa(static_cast<std::size_t>(n));
    std::vector<bool> ls(static_cast<std::size_t>(n));  // true: S-type
    for (Index i = n - 2; i >= 0; --i)
        ls[i] = (s[i] == s[i + 1]) ? ls[i + 1] : (s[i] < s[i + 1]);

    std::vector<Index> sum_l(static_cast<std::size_t>(upper) + 1), sum_s(static_cast<std::size_t>(upper) + 1);
    for (Index i = 0; i < n; ++i) {
        if (!ls[i])
            ++sum_s[s[i]];
        else
            ++sum_l[s[i] + 1];
    }
    for (Index i = 0; i <= upper; ++i) {
        sum_s[i] += sum_l[i];
        if (i < upper) sum_l[i + 1] += sum_s[i];
    }

    auto induce = [&](const std::vector<Index>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::vector<Index> buf(sum_s);
        for (Index d : lms)
            if (d != n) sa[buf[s[d]]++] = d;
        buf = sum_l;
        sa[buf[s[n - 1]]++] = n - 1;
        for (Index i = 0; i < n; ++i) {
            const Index v = sa[i];
            if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        buf = sum_l;
        for (Index i = n - 1; i >= 0; --i) {
            const Index v = sa[i];
            if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<Index> lms_map(static_cast<std::size_t>(n) + 1, -1);
    std::vector<Index> lms;
    for (Index i = 1; i < n; ++i)
        if (!ls[i - 1] && ls[i]) {
            lms_map[i] = static_cast<Index>(lms.size());
            lms.push_back(i);
        }
    const Index m = static_cast<Index>(lms.size());

    induce(lms);

    if (m) {
        std::vector<Index> sorted_lms;
        sorted_lms.reserve(static_cast<std::size_t>(m));
        for (Index v : sa)
            if (lms_map[v] != -1) sorted_lms.push_back(v);
        std::vector<Index> rec_s(static_cast<std::size_t>(m));
        Index rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for (Index i = 1; i < m; ++i) {
            Index l = sorted_lms[i - 1], r = sorted_lms[i];
            const Index end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
            const Index end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if (end_l - l != end_r - r) {
                same = false;
            } else {
                while (l < end_l && s[l] == s[r]) {
                    ++l;
                    ++r;
                }
                if (l == n || s[l] != s[r]) same = false;
            }
            if (!same) ++rec_upper;
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }
        const auto rec_sa = sa_is(rec_s, rec_upper);
        for (Index i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
        induce(sorted_lms);
    }
    return sa;
}

}  // namespace

std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t upper) {
    return sa_is(s, upper);
}

std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s, const std::vector<std::int32_t>& sa) {
    const Index n = static_cast<Index>(s.size());
    std::vector<Index> rank(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) rank[sa[i]] = i;
    std::vector<Index> lcp(static_cast<std::size_t>(n), 0);
    Index h = 0;
    for (Index i = 0; i < n; ++i) {
        if (h > 0) --h;
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const Index j = sa[rank[i] - 1];
        while (j + h < n && i + h < n && s[j + h] == s[i + h]) ++h;
        lcp[rank[i]] = h;
    }
    return lcp;
}

}  // namespace subshift
