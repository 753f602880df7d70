#include "rht/samples.hpp"

#include "rht/cohomology.hpp"
#include "rht/error.hpp"

#include <algorithm>
#include <charconv>

namespace rht {

namespace {

BasisVector unit_vector(std::size_t i) { return BasisVector{{i, Rational(1)}}; }

Integer binomial(int n, int k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Truncated polynomial algebra Q[a]/a^{top+1}, |a| = degree.
FiniteCdga truncated_polynomial(int degree, int top, const std::string& name)
{
    std::vector<BasisElement> basis;
    for (int j = 1; j <= top; ++j)
        basis.push_back({j == 1 ? name : name + std::to_string(j), j * degree});
    std::vector<FiniteCdga::Product> products;
    for (int i = 1; i <= top; ++i)
        for (int j = i; i + j <= top; ++j)
            products.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                unit_vector(static_cast<std::size_t>(i + j))});
    std::string label = "Q[" + name + "]/" + name + "^" + std::to_string(top + 1);
    return FiniteCdga(label, std::move(basis), std::move(products), {});
}

FiniteCdga sphere_algebra(int n) { return FiniteCdga("S" + std::to_string(n), {{"s" + std::to_string(n), n}}, {}, {}); }

int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw ValidationError("malformed number in manifold name: '" + std::string(s) + "'");
    return v;
}

}  // namespace

ManifoldModel sphere_manifold(int n)
{
    if (n < 2)
        throw ValidationError("sphere dimension must be at least 2");
    return ManifoldModel("S" + std::to_string(n), n, std::make_shared<const FiniteCdga>(sphere_algebra(n)), {});
}

ManifoldModel complex_projective(int n)
{
    if (n < 1)
        throw ValidationError("CP^n needs n >= 1");
    auto A = std::make_shared<const FiniteCdga>(truncated_polynomial(2, n, "a"));
    std::vector<PontryaginClass> p;
    for (int i = 1; 2 * i <= n; ++i)
        p.push_back({i, BasisVector{{static_cast<std::size_t>(2 * i), Rational(binomial(n + 1, i))}}});
    return ManifoldModel("CP" + std::to_string(n), 2 * n, A, std::move(p));
}

ManifoldModel product_manifold(const ManifoldModel& a, const ManifoldModel& b)
{
    auto T = std::make_shared<const FiniteCdga>(tensor(a.model(), b.model()));
    const std::size_t nb = b.model().dimension();
    const int m = a.dimension() + b.dimension();
    std::vector<PontryaginClass> classes;
    for (int k = 1; 4 * k <= m; ++k) {
        BasisVector v;
        for (int i = 0; i <= k; ++i) {
            BasisVector pa = i == 0 ? unit_vector(0) : a.pontryagin(i);
            BasisVector pb = i == k ? unit_vector(0) : b.pontryagin(k - i);
            for (const auto& [u, p] : pa)
                for (const auto& [w, q] : pb)
                    v[u * nb + w] += p * q;  // both even degree: no sign
        }
        std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
        if (!v.empty())
            classes.push_back({k, std::move(v)});
    }
    return ManifoldModel(a.name() + "x" + b.name(), m, T, std::move(classes));
}

ManifoldModel named_manifold(std::string_view name)
{
    if (auto x = name.find('x'); x != std::string_view::npos)
        return product_manifold(named_manifold(name.substr(0, x)), named_manifold(name.substr(x + 1)));
    if (name.starts_with("CP"))
        return complex_projective(parse_int(name.substr(2)));
    if (name.starts_with("S"))
        return sphere_manifold(parse_int(name.substr(1)));
    throw ValidationError("unknown manifold '" + std::string(name) + "' (expected S<n>, CP<n> or products like S2xS3)");
}

FiniteCdga contractible_pair(int degree, std::string name)
{
    if (degree < 1)
        throw ValidationError("contractible pair needs a positive degree");
    std::string label = "C(" + std::to_string(degree) + ")";
    return FiniteCdga(label, {{name, degree}, {"d" + name, degree + 1}}, {}, {{1, unit_vector(2)}});
}

FiniteCdga change_basis(const FiniteCdga& A, std::mt19937& rng)
{
    const std::size_t n = A.dimension();
    std::uniform_int_distribution<int> coef(-2, 2);
    // new f_i = sum_j P[j][i] e_j within each degree; old e_j = sum_i Q[i][j] f_i.
    std::vector<BasisVector> P(n), Q(n);
    P[0] = Q[0] = unit_vector(0);
    for (int deg = 1; deg <= A.top_degree(); ++deg) {
        auto idx = A.indices_of_degree(deg);
        if (idx.empty())
            continue;
        for (;;) {
            SparseMatrix m{n, {}};
            for (std::size_t c = 0; c < idx.size(); ++c) {
                BasisVector col{{idx[c], Rational(1)}};
                for (std::size_t r = 0; r < c; ++r)
                    if (int v = coef(rng))
                        col[idx[r]] = v;
                for (std::size_t r = c + 1; r < idx.size(); ++r)
                    if (int v = coef(rng))
                        col[idx[r]] = v;
                m.columns.push_back(std::move(col));
            }
            if (sparse_rank(m) != idx.size())
                continue;
            std::vector<BasisVector> inv;
            for (auto j : idx) {
                auto sol = solve(m, unit_vector(j));
                inv.push_back(std::move(*sol));
            }
            for (std::size_t c = 0; c < idx.size(); ++c)
                P[idx[c]] = m.columns[c];
            for (std::size_t c = 0; c < idx.size(); ++c) {
                BasisVector q;
                for (const auto& [i, v] : inv[c])
                    q[idx[i]] = v;
                Q[idx[c]] = std::move(q);
            }
            break;
        }
    }
    auto to_new = [&](const BasisVector& old) {
        BasisVector out;
        for (const auto& [j, c] : old)
            for (const auto& [i, q] : Q[j])
                out[i] += c * q;
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    std::vector<BasisElement> basis(A.basis().begin() + 1, A.basis().end());
    std::vector<FiniteCdga::Product> products;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (auto v = to_new(A.multiply(P[i], P[j])); !v.empty())
                products.push_back({i, j, std::move(v)});
    std::vector<std::pair<std::size_t, BasisVector>> diff;
    for (std::size_t i = 1; i < n; ++i)
        if (auto v = to_new(A.differentiate(P[i])); !v.empty())
            diff.emplace_back(i, std::move(v));
    return FiniteCdga(A.label(), std::move(basis), std::move(products), std::move(diff));
}

FiniteCdga random_base(std::mt19937& rng, int max_pieces)
{
    std::uniform_int_distribution<int> pieces(1, std::max(1, max_pieces)), kind(0, 4), pair_deg(1, 5), coin(0, 1);
    FiniteCdga A = FiniteCdga::unit();
    const int count = pieces(rng);
    for (int p = 0; p < count; ++p) {
        FiniteCdga piece = FiniteCdga::unit();
        switch (kind(rng)) {
        case 0: piece = sphere_algebra(2); break;
        case 1: piece = sphere_algebra(3); break;
        case 2: piece = sphere_algebra(4); break;
        case 3: piece = truncated_polynomial(2, 2, "a"); break;
        default: piece = truncated_polynomial(4, 2, "q"); break;
        }
        A = tensor(A, piece);
    }
    if (coin(rng))
        A = tensor(A, contractible_pair(pair_deg(rng)));
    return change_basis(A, rng);
}

BasisVector random_cocycle(const FiniteCdga& A, int degree, std::mt19937& rng)
{
    auto idx = A.indices_of_degree(degree);
    SparseMatrix m{A.dimension(), {}};
    for (auto i : idx)
        m.columns.push_back(A.d(i));
    std::uniform_int_distribution<int> coef(-3, 3);
    BasisVector v;
    for (const auto& k : kernel_basis(m)) {
        int c = coef(rng);
        for (const auto& [j, q] : k)
            v[idx[j]] += c * q;
    }
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    return v;
}

}  // namespace rht
