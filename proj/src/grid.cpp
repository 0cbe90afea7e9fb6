#include "retractlab/grid.hpp"

#include <algorithm>

namespace retractlab {

BigCount binomial(long a, long b) {
    if (a < 0 || b < 0) throw InvalidShape("binomial: negative argument");
    if (b > a) return 0;
    b = std::min(b, a - b);
    BigCount r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: prefix products of a row are integers
    }
    return r;
}

namespace {

Lattice chain_of(int k, int cap) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
    return lattice_from_covers(k, std::move(covers), {}, cap);
}

void check_shape(GridShape s) {
    if (s.m < 2 || s.n < 2)
        throw InvalidShape("grid formulas need m,n >= 2; chains follow the 2^k rule");
}

}  // namespace

Lattice make_grid(GridShape shape, int cap) {
    if (shape.m < 1 || shape.n < 1) throw InvalidShape("make_grid: m,n must be >= 1");
    if ((long long)shape.m * shape.n > cap)
        throw SizeLimit("make_grid: " + std::to_string((long long)shape.m * shape.n) +
                        " elements exceeds cap " + std::to_string(cap));
    return direct_product(chain_of(shape.m, cap), chain_of(shape.n, cap), cap);
}

SubsetClass classify_subset(GridShape shape, const DynBitset& S) {
    const int m = shape.m, n = shape.n;
    if (S.size() != m * n) throw IndexOutOfRange("classify_subset: mask size mismatch");
    SubsetClass c{};
    c.empty = S.none();

    std::vector<char> xs(m, 0), ys(n, 0);
    auto idx = S.to_indices();
    std::vector<std::pair<int, int>> pts;
    pts.reserve(idx.size());
    for (int e : idx) {
        pts.emplace_back(e / n, e % n);
        xs[e / n] = 1;
        ys[e % n] = 1;
    }

    // straight means S equals the product of its projections (∅ included)
    c.straight = true;
    for (int i = 0; i < m && c.straight; ++i)
        for (int j = 0; j < n; ++j)
            if (xs[i] && ys[j] && !S.test(i * n + j)) {
                c.straight = false;
                break;
            }
    c.skew = !c.straight;

    c.left_injective = c.right_injective = c.chain = true;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].first == pts[j].first) c.left_injective = false;
            if (pts[i].second == pts[j].second) c.right_injective = false;
            bool le = pts[i].first <= pts[j].first && pts[i].second <= pts[j].second;
            bool ge = pts[i].first >= pts[j].first && pts[i].second >= pts[j].second;
            if (!le && !ge) c.chain = false;
        }
    c.doubly_injective = c.left_injective && c.right_injective;
    c.is_retract = c.empty || c.straight ||
                   (c.skew && c.chain && (c.left_injective || c.right_injective));
    return c;
}

RetractCounts count_retracts(GridShape shape) {
    check_shape(shape);
    const long m = shape.m, n = shape.n;
    RetractCounts r;
    r.sts = 1 + ((BigCount(1) << m) - 1) * ((BigCount(1) << n) - 1);
    r.isc = 0;
    for (long s = 2; s <= std::max(m, n); ++s) {
        r.isc += binomial(m, s) * binomial(n + s - 1, s);
        r.isc += binomial(n, s) * binomial(m + s - 1, s);
        r.isc -= binomial(m, s) * binomial(n, s);
        r.isc -= n * binomial(m, s);
        r.isc -= m * binomial(n, s);
    }
    r.total = r.sts + r.isc;
    return r;
}

BigCount chain_ret_poset_size(int k) {
    if (k < 1) throw InvalidShape("chain_ret_poset_size: k must be >= 1");
    return BigCount(1) << k;
}

namespace {

// Emits masks for all s-element chains with first coordinates `xs` (strictly
// increasing) and second coordinates running over weakly increasing tuples,
// transposed when `transpose` is set. `skip` filters duplicates and straights.
template <class Skip>
void monotone_family(GridShape shape, bool transpose, int s, const Skip& skip,
                     const std::function<void(const DynBitset&)>& emit) {
    const int a = transpose ? shape.n : shape.m;  // strict side
    const int b = transpose ? shape.m : shape.n;  // weak side
    if (s > a) return;
    std::vector<int> xs(s), ys(s);

    // strictly increasing xs over [0,a), weakly increasing ys over [0,b)
    std::function<void(int, int)> gen_ys = [&](int pos, int low) {
        if (pos == s) {
            if (skip(ys)) return;
            DynBitset S(shape.m * shape.n);
            for (int i = 0; i < s; ++i) {
                int x = transpose ? ys[i] : xs[i];
                int y = transpose ? xs[i] : ys[i];
                S.set(x * shape.n + y);
            }
            emit(S);
            return;
        }
        for (int v = low; v < b; ++v) {
            ys[pos] = v;
            gen_ys(pos + 1, v);
        }
    };
    std::function<void(int, int)> gen_xs = [&](int pos, int low) {
        if (pos == s) {
            gen_ys(0, 0);
            return;
        }
        for (int v = low; v + (s - 1 - pos) < a; ++v) {
            xs[pos] = v;
            gen_xs(pos + 1, v + 1);
        }
    };
    gen_xs(0, 0);
}

}  // namespace

void for_each_grid_retract(GridShape shape,
                           const std::function<void(const DynBitset&)>& emit) {
    check_shape(shape);
    const int m = shape.m, n = shape.n;

    // non-empty straight subsets: pairs of non-empty chain subsets
    for (uint64_t am = 1; am < (uint64_t{1} << m); ++am)
        for (uint64_t bm = 1; bm < (uint64_t{1} << n); ++bm) {
            DynBitset S(m * n);
            for (int i = 0; i < m; ++i) {
                if (!((am >> i) & 1)) continue;
                for (int j = 0; j < n; ++j)
                    if ((bm >> j) & 1) S.set(i * n + j);
            }
            emit(S);
        }

    // injective skew chains, by size; the left family owns the doubly
    // injective ones, the right family skips them
    for (int s = 2; s <= std::max(m, n); ++s) {
        monotone_family(
            shape, false, s,
            [](const std::vector<int>& ys) { return ys.front() == ys.back(); },
            emit);
        monotone_family(
            shape, true, s,
            [](const std::vector<int>& ys) {
                if (ys.front() == ys.back()) return true;  // straight
                for (size_t i = 1; i < ys.size(); ++i)
                    if (ys[i] == ys[i - 1]) return false;
                return true;  // strictly increasing: already emitted
            },
            emit);
    }
}

std::vector<DynBitset> grid_retracts(GridShape shape, long max_results) {
    RetractCounts c = count_retracts(shape);
    if (c.total - 1 > max_results)
        throw SizeLimit("grid_retracts: " + c.total.str() + " retracts exceed the cap");
    std::vector<DynBitset> out;
    out.reserve(size_t(c.total - 1));
    for_each_grid_retract(shape, [&](const DynBitset& S) { out.push_back(S); });
    std::sort(out.begin(), out.end());
    return out;
}

MaximalChains maximal_chains(GridShape shape) {
    check_shape(shape);
    const bool flip = shape.m > shape.n;
    const int m = flip ? shape.n : shape.m;  // m <= n from here on
    const int n = flip ? shape.m : shape.n;
    auto at = [&](int i, int j) {  // (i,j) in the m x n orientation
        return flip ? j * shape.n + i : i * shape.n + j;
    };
    const int N = shape.m * shape.n;

    MaximalChains out;
    out.h1.emplace_back(N);  // ∅
    DynBitset diag(N);
    for (int k = 0; k < m; ++k) {
        diag.set(at(k, k));
        out.h1.push_back(diag);
    }
    for (int j = m - 1; j < n; ++j) {
        DynBitset S(N);
        for (int i = 0; i < m; ++i)
            for (int t = 0; t <= j; ++t) S.set(at(i, t));
        out.h1.push_back(S);
    }

    out.h2.emplace_back(N);  // ∅
    DynBitset ideal(N);
    for (int i = 0; i < m; ++i) {
        ideal.set(at(i, 0));
        out.h2.push_back(ideal);
    }
    for (int j = 1; j < n; ++j) {
        DynBitset S(N);
        for (int i = 0; i < m; ++i)
            for (int t = 0; t <= j; ++t) S.set(at(i, t));
        out.h2.push_back(S);
    }
    return out;
}

std::string sci_round(const BigCount& v, int sig) {
    if (sig < 1) throw InvalidShape("sci_round: need at least one digit");
    std::string digits = v.str();
    if (digits == "0") return "0";
    int exponent = int(digits.size()) - 1;
    std::string lead = digits.substr(0, sig);
    while (int(lead.size()) < sig) lead += '0';
    // round half up on the next digit, with carry
    if (int(digits.size()) > sig && digits[sig] >= '5') {
        int i = sig - 1;
        while (i >= 0) {
            if (lead[i] != '9') {
                ++lead[i];
                break;
            }
            lead[i] = '0';
            --i;
        }
        if (i < 0) {
            lead.insert(lead.begin(), '1');
            lead.pop_back();
            ++exponent;
        }
    }
    std::string mantissa = lead.substr(0, 1);
    if (sig > 1) mantissa += "." + lead.substr(1);
    return mantissa + "e" + std::to_string(exponent);
}

}  // namespace retractlab
