#include "rht/cohomology.hpp"

#include "rht/error.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <thread>

namespace rht {

std::vector<int> BettiTable::support() const
{
    std::vector<int> out;
    for (std::size_t n = 0; n < dims.size(); ++n)
        if (dims[n] != 0)
            out.push_back(static_cast<int>(n));
    return out;
}

namespace {

std::map<TensorKey, std::size_t> index_basis(const std::vector<TensorKey>& basis)
{
    std::map<TensorKey, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        idx.emplace(basis[i], i);
    return idx;
}

SparseVector coordinates_in(const std::map<TensorKey, std::size_t>& idx, const TensorElement& e)
{
    SparseVector v;
    for (const auto& [k, c] : e.terms()) {
        auto it = idx.find(k);
        if (it == idx.end())
            throw DegreeError("element has a term outside the requested degree");
        v[it->second] = c;
    }
    return v;
}

SparseMatrix matrix_between(const RelativeModel& model, const std::vector<TensorKey>& from,
                            const std::vector<TensorKey>& to)
{
    auto idx = index_basis(to);
    SparseMatrix m;
    m.rows = to.size();
    m.columns.reserve(from.size());
    for (const auto& k : from)
        m.columns.push_back(coordinates_in(idx, model.differentiate(k)));
    return m;
}

std::size_t rank_of(const SparseMatrix& m, RankMethod method)
{
    return method == RankMethod::Dense ? dense_rank(m) : sparse_rank(m);
}

unsigned worker_count(unsigned requested)
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return requested == 0 ? hw : requested;
}

TensorElement from_coordinates(const std::vector<TensorKey>& basis, const SparseVector& v)
{
    TensorElement e;
    for (const auto& [i, c] : v)
        e.add_term(basis[i], c);
    return e;
}

}  // namespace

SparseMatrix differential_matrix(const RelativeModel& model, int n)
{
    return matrix_between(model, model.basis_of_degree(n), model.basis_of_degree(n + 1));
}

SparseVector coordinates(const RelativeModel& model, const TensorElement& e, int n)
{
    return coordinates_in(index_basis(model.basis_of_degree(n)), e);
}

BettiTable cohomology(const RelativeModel& model, int cutoff, const CohomologyOptions& options)
{
    BettiTable table;
    table.cutoff = cutoff;
    if (cutoff < 0)
        return table;
    std::vector<std::vector<TensorKey>> bases(static_cast<std::size_t>(cutoff) + 2);
    for (int n = 0; n <= cutoff + 1; ++n)
        bases[static_cast<std::size_t>(n)] = model.basis_of_degree(n);

    // rank[n] = rank of D: C^n -> C^{n+1}; ranks are independent per degree.
    std::vector<std::size_t> rank(static_cast<std::size_t>(cutoff) + 1, 0);
    std::vector<SparseMatrix> mats(rank.size());
    auto job = [&](std::size_t n) {
        mats[n] = matrix_between(model, bases[n], bases[n + 1]);
        rank[n] = rank_of(mats[n], options.method);
    };
    const unsigned workers = std::min<unsigned>(worker_count(options.threads), static_cast<unsigned>(rank.size()));
    if (workers <= 1) {
        for (std::size_t n = 0; n < rank.size(); ++n)
            job(n);
    } else {
        std::vector<std::future<void>> running;
        std::atomic<std::size_t> next{0};
        for (unsigned w = 0; w < workers; ++w)
            running.push_back(std::async(std::launch::async, [&] {
                for (std::size_t n; (n = next.fetch_add(1)) < rank.size();)
                    job(n);
            }));
        for (auto& f : running)
            f.get();
    }

    for (std::size_t n = 0; n < rank.size(); ++n) {
        long dim = static_cast<long>(bases[n].size());
        long b = dim - static_cast<long>(rank[n]) - (n > 0 ? static_cast<long>(rank[n - 1]) : 0L);
        table.dims.push_back(b);
    }

    if (options.representatives) {
        table.representatives.resize(rank.size());
        for (std::size_t n = 0; n < rank.size(); ++n) {
            SpanBuilder span;
            if (n > 0)
                for (const auto& c : mats[n - 1].columns)
                    span.insert(c);
            for (const auto& z : kernel_basis(mats[n]))
                if (span.insert(z))
                    table.representatives[n].push_back(from_coordinates(bases[n], z));
        }
    }
    return table;
}

BettiTable cohomology(const FreeCdga& model, int cutoff, const CohomologyOptions& options)
{
    return cohomology(as_relative(model), cutoff, options);
}

BettiTable cohomology(const FiniteCdga& model, int cutoff, const CohomologyOptions& options)
{
    return cohomology(as_relative(model), cutoff, options);
}

std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b, int cutoff)
{
    std::vector<long> out(static_cast<std::size_t>(std::max(cutoff, -1) + 1), 0);
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

bool is_exact(const RelativeModel& model, const TensorElement& v, int n)
{
    if (v.is_zero())
        return true;
    if (n == 0)
        return false;
    SparseMatrix m = differential_matrix(model, n - 1);
    SpanBuilder span;
    for (const auto& c : m.columns)
        span.insert(c);
    return span.contains(coordinates(model, v, n));
}

bool is_exact(const FiniteCdga& model, const BasisVector& v)
{
    auto deg = model.degree_of(v);
    if (!deg)
        return true;
    RelativeModel rel = as_relative(model);
    return is_exact(rel, rel.from_base(v), *deg);
}

std::vector<DSquaredViolation> check_d_squared(const FreeCdga& model, int cutoff)
{
    std::vector<DSquaredViolation> out;
    for (std::size_t i = 0; i < model.generators().size(); ++i) {
        if (model.generators()[i].degree + 2 > cutoff)
            continue;
        Element dd = model.differentiate(model.d(i));
        if (!dd.is_zero())
            out.push_back({model.generators()[i].name, to_string(dd)});
    }
    return out;
}

std::vector<DSquaredViolation> check_d_squared(const RelativeModel& model, int cutoff)
{
    std::vector<DSquaredViolation> out;
    const auto& A = model.base();
    for (std::size_t u = 1; u < A.dimension(); ++u) {
        if (A.degree(u) + 2 > cutoff)
            continue;
        BasisVector dd = A.differentiate(A.d(u));
        if (!dd.empty())
            out.push_back({A.basis(u).name, A.to_string(dd)});
    }
    for (std::size_t i = 0; i < model.fiber()->size(); ++i) {
        if ((*model.fiber())[i].degree + 2 > cutoff)
            continue;
        TensorElement dd = model.differentiate(model.d(i));
        if (!dd.is_zero())
            out.push_back({(*model.fiber())[i].name, model.to_string(dd)});
    }
    return out;
}

QuasiIsoReport is_quasi_iso(const CdgaMorphism& f, int cutoff, const CohomologyOptions& options)
{
    if (auto bad = f.chain_map_violations(); !bad.empty())
        throw ChainMapError("'" + f.label() + "' is not a chain map: " + bad.front());

    QuasiIsoReport report;
    report.quasi_iso = true;
    const RelativeModel& src = f.source();
    const RelativeModel& tgt = f.target();
    CohomologyOptions opts = options;
    opts.representatives = true;
    BettiTable hs = cohomology(src, cutoff, opts);
    BettiTable ht = cohomology(tgt, cutoff, CohomologyOptions{options.method, false, options.threads});
    for (int n = 0; n <= cutoff; ++n) {
        QuasiIsoDegree deg;
        deg.degree = n;
        deg.source_dim = hs.dims[static_cast<std::size_t>(n)];
        deg.target_dim = ht.dims[static_cast<std::size_t>(n)];
        // Injectivity: images of the representatives stay independent
        // modulo coboundaries of the target.
        SpanBuilder span;
        if (n > 0)
            for (const auto& c : differential_matrix(tgt, n - 1).columns)
                span.insert(c);
        auto tidx = index_basis(tgt.basis_of_degree(n));
        deg.injective = true;
        for (const auto& rep : hs.representatives[static_cast<std::size_t>(n)])
            if (!span.insert(coordinates_in(tidx, f.apply(rep)))) {
                deg.injective = false;
                break;
            }
        report.quasi_iso = report.quasi_iso && deg.iso();
        report.degrees.push_back(deg);
    }
    return report;
}

}  // namespace rht
