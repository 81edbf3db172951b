#include "fockalg/rmatrix.hpp"

#include <algorithm>
#include <set>

namespace fockalg {

Matrix<Poly> verma_matrix(int n, const BosonSpec<Poly>& spec) {
    const BasisIndex& b = basis_index(n, 1);
    int N = static_cast<int>(b.basis.size());
    Matrix<Poly> B(N, N);
    std::vector<GradedOperator<Poly>> lower(n + 1);
    for (int k = 1; k <= n; ++k)
        lower[k] = virasoro_mode<Poly>(-k, Q(1), spec, 1, single_factor(0), spec.tau1, n);
    for (int j = 0; j < N; ++j) {
        FockVector<Poly> v = FockVector<Poly>::vacuum(1);
        const Partition& mu = b.basis[j][0];
        for (auto it = mu.rbegin(); it != mu.rend(); ++it) v = lower[*it](v);
        for (const auto& [key, c] : v.terms) B(b.index.at(key), j) = c;
    }
    return B;
}

namespace {

BosonSpec<Poly> flipped(const BosonSpec<Poly>& s) { return BosonSpec<Poly>{s.tau1, s.eta, -s.kappa}; }

Matrix<Q> eval_poly_matrix(const Matrix<Poly>& m, const Q& x) {
    Matrix<Q> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = m.a[k](x);
    return r;
}

Matrix<RatFunc> solve_by_interpolation(const Matrix<Poly>& Bp, const Matrix<Poly>& Bm, int bound) {
    int N = Bp.rows;
    const int need = 2 * bound + 1, extra = 3;
    std::vector<Q> xs;
    std::vector<Matrix<Q>> vals;
    for (long x = 1; static_cast<int>(xs.size()) < need + extra; ++x) {
        Matrix<Q> P = eval_poly_matrix(Bp, Q(x));
        if (is_zero(determinant(P))) continue;
        vals.push_back(solve(P.transpose(), eval_poly_matrix(Bm, Q(x)).transpose()).transpose());
        xs.emplace_back(x);
    }
    std::vector<Q> fit(xs.begin(), xs.begin() + need);
    Matrix<RatFunc> X(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            std::vector<Q> ys;
            for (int t = 0; t < need; ++t) ys.push_back(vals[t](i, j));
            auto f = rational_reconstruct(fit, ys, bound, bound);
            if (!f) throw std::runtime_error("reflection_block: rational reconstruction failed");
            for (int t = need; t < need + extra; ++t)
                if ((*f)(xs[t]) != vals[t](i, j))
                    throw std::runtime_error("reflection_block: reconstruction fails verification");
            X(i, j) = *f;
        }
    return X;
}

std::map<Partition, int> partition_positions(int k) {
    std::map<Partition, int> pos;
    const auto& ps = partitions_of(k);
    for (size_t i = 0; i < ps.size(); ++i) pos.emplace(ps[i], static_cast<int>(i));
    return pos;
}

Matrix<RatFunc> assemble_full(int n, const std::vector<const Matrix<RatFunc>*>& minus) {
    const BasisIndex& b = basis_index(n, 2);
    int N = static_cast<int>(b.basis.size());
    std::vector<std::map<Partition, int>> pos(n + 1);
    for (int k = 0; k <= n; ++k) pos[k] = partition_positions(k);
    Matrix<RatFunc> Rpm(N, N);
    for (int j = 0; j < N; ++j) {
        const auto& col = b.basis[j];
        int k = size(col[1]);
        const Matrix<RatFunc>& Rk = *minus[k];
        int cj = pos[k].at(col[1]);
        for (int i = 0; i < N; ++i) {
            const auto& row = b.basis[i];
            if (row[0] != col[0]) continue;
            Rpm(i, j) = Rk(pos[k].at(row[1]), cj);
        }
    }
    Matrix<RatFunc> M = convert<RatFunc>(pm_change_of_basis(n, PmDirection::from_pm));
    Matrix<RatFunc> Minv = convert<RatFunc>(pm_change_of_basis(n, PmDirection::to_pm));
    return M * Rpm * Minv;
}

}  // namespace

RMatrixBlock reflection_block(int n, const BosonSpec<Poly>& spec, SolveMethod method) {
    if (n < 0 || n > DEGREE_CAP) throw std::invalid_argument("reflection_block: degree out of range");
    if (is_zero(spec.tau1)) throw std::invalid_argument("reflection_block: tau1 = 0");
    RMatrixBlock blk;
    blk.degree = n;
    blk.side = BlockSide::minus_boson;
    Matrix<Poly> Bp = verma_matrix(n, spec), Bm = verma_matrix(n, flipped(spec));
    if (method == SolveMethod::bareiss) {
        blk.matrix = bareiss_solve(Bp.transpose(), Bm.transpose()).transpose();
    } else {
        int bound = std::max(1, n * partition_count(n));
        blk.matrix = solve_by_interpolation(Bp, Bm, bound);
    }
    return blk;
}

BosonSpec<Poly> geometric_minus_boson(const Q& t1, const Q& t2) {
    Q tau1 = Q(-2) / (t1 * t2);
    return BosonSpec<Poly>{tau1, Poly(std::vector<Q>{Q(0), Q(1, 2)}), Poly(Q(-t1 - t2) / 2)};
}

RMatrixBlock full_r_block(int n, const Q& t1, const Q& t2, SolveMethod method) {
    BosonSpec<Poly> spec = geometric_minus_boson(t1, t2);
    std::vector<Matrix<RatFunc>> store;
    for (int k = 0; k <= n; ++k) store.push_back(reflection_block(k, spec, method).matrix);
    std::vector<const Matrix<RatFunc>*> ptrs;
    for (const auto& m : store) ptrs.push_back(&m);
    return RMatrixBlock{n, assemble_full(n, ptrs), BlockSide::full_tensor};
}

Matrix<Q> swap_matrix(int n) {
    const BasisIndex& b = basis_index(n, 2);
    int N = static_cast<int>(b.basis.size());
    Matrix<Q> S(N, N);
    for (int j = 0; j < N; ++j) {
        MultiPartition sw{b.basis[j][1], b.basis[j][0]};
        S(b.index.at(key_of(sw)), j) = 1;
    }
    return S;
}

Matrix<RatFunc> r_vee(const RMatrixBlock& full) {
    if (full.side != BlockSide::full_tensor) throw std::invalid_argument("r_vee: needs a full-tensor block");
    return convert<RatFunc>(swap_matrix(full.degree)) * full.matrix;
}

GaussFactors gauss_factorize(const RMatrixBlock& full) {
    if (full.side != BlockSide::full_tensor) throw std::invalid_argument("gauss_factorize: needs a full-tensor block");
    int n = full.degree;
    const BasisIndex& b = basis_index(n, 2);
    int N = static_cast<int>(b.basis.size());
    GaussFactors g;
    for (int k = 0; k <= n; ++k) {
        g.block_start.push_back(static_cast<int>(g.order.size()));
        for (int j = 0; j < N; ++j)
            if (size(b.basis[j][0]) == k) g.order.push_back(j);
    }
    g.block_start.push_back(N);
    g.R = Matrix<RatFunc>(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) g.R(i, j) = full.matrix(g.order[i], g.order[j]);
    int K = n + 1;
    auto lo = [&](int k) { return g.block_start[k]; };
    auto sz = [&](int k) { return g.block_start[k + 1] - g.block_start[k]; };
    g.L = Matrix<RatFunc>::identity(N);
    g.S = Matrix<RatFunc>(N, N);
    for (int k = 0; k < K; ++k) {
        for (int j = k; j < K; ++j) {
            Matrix<RatFunc> s = g.R.block(lo(k), lo(j), sz(k), sz(j));
            for (int i = 0; i < k; ++i)
                s = s - g.L.block(lo(k), lo(i), sz(k), sz(i)) * g.S.block(lo(i), lo(j), sz(i), sz(j));
            g.S.set_block(lo(k), lo(j), s);
        }
        Matrix<RatFunc> Skk = g.S.block(lo(k), lo(k), sz(k), sz(k));
        if (is_zero(determinant(Skk))) throw std::domain_error("gauss_factorize: singular diagonal block");
        Matrix<RatFunc> Skk_inv = inverse(Skk);
        for (int j = k + 1; j < K; ++j) {
            Matrix<RatFunc> l = g.R.block(lo(j), lo(k), sz(j), sz(k));
            for (int i = 0; i < k; ++i)
                l = l - g.L.block(lo(j), lo(i), sz(j), sz(i)) * g.S.block(lo(i), lo(k), sz(i), sz(k));
            g.L.set_block(lo(j), lo(k), l * Skk_inv);
        }
    }
    g.U = inverse(g.L);
    return g;
}

DeterminantFactorization factor_on_lattice(const RatFunc& f, const Q& t1, const Q& t2, int bound) {
    DeterminantFactorization out;
    if (f.is_zero()) throw std::domain_error("factor_on_lattice: zero function");
    Poly num = f.num(), den = f.den();
    std::set<Q> seen;
    for (int m = -bound; m <= bound; ++m)
        for (int n = -bound; n <= bound; ++n) {
            Q c = m * t1 + n * t2;
            bool root_here = is_zero(num(c)) || is_zero(den(c));
            if (!root_here) continue;
            if (!seen.insert(c).second) throw std::logic_error("factor_on_lattice: lattice point not unique");
            Poly lin = Poly::var() - Poly(c);
            int zm = 0, pm = 0;
            while (num.degree() > 0 && is_zero(num(c))) {
                num = num / lin;
                ++zm;
            }
            while (den.degree() > 0 && is_zero(den(c))) {
                den = den / lin;
                ++pm;
            }
            if (zm) out.zeros.push_back({m, n, zm});
            if (pm) out.poles.push_back({m, n, pm});
        }
    out.complete = num.is_constant() && den.is_constant();
    out.constant = num.lead() / den.lead();
    return out;
}

RatFunc minus_determinant(int n, const Q& t1, const Q& t2) {
    BosonSpec<Poly> spec = geometric_minus_boson(t1, t2);
    Poly dp = bareiss_determinant(verma_matrix(n, spec));
    Poly dm = bareiss_determinant(verma_matrix(n, flipped(spec)));
    return RatFunc(dm, dp);
}

RatFunc full_determinant(int n, const Q& t1, const Q& t2) {
    RatFunc d(Q(1));
    for (int k = 1; k <= n; ++k) {
        RatFunc dk = minus_determinant(k, t1, t2);
        for (int e = 0; e < partition_count(n - k); ++e) d *= dk;
    }
    return d;
}

RMatrix::RMatrix(const Q& t1, const Q& t2, SolveMethod method) : t1_(t1), t2_(t2), method_(method) {}

const Matrix<RatFunc>& RMatrix::minus_block(int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = minus_.find(n);
    if (it != minus_.end()) return *it->second;
    auto m = std::make_unique<Matrix<RatFunc>>(reflection_block(n, geometric_minus_boson(t1_, t2_), method_).matrix);
    return *minus_.emplace(n, std::move(m)).first->second;
}

const Matrix<RatFunc>& RMatrix::full_block(int n) {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = full_.find(n);
    if (it != full_.end()) return *it->second;
    std::vector<const Matrix<RatFunc>*> ptrs;
    for (int k = 0; k <= n; ++k) ptrs.push_back(&minus_block(k));
    auto m = std::make_unique<Matrix<RatFunc>>(assemble_full(n, ptrs));
    return *full_.emplace(n, std::move(m)).first->second;
}

Matrix<Q> RMatrix::full_at(int n, const Q& u) { return evaluate(full_block(n), u); }

Matrix<Q> RMatrix::on_triple(int n, int i, int j, const Q& u) {
    if (i < 0 || j > 2 || i >= j) throw std::invalid_argument("on_triple: need factors i < j in 0..2");
    const BasisIndex& b = basis_index(n, 3);
    int N = static_cast<int>(b.basis.size());
    std::vector<Matrix<Q>> blocks(n + 1);
    for (int d = 0; d <= n; ++d) blocks[d] = full_at(d, u);
    Matrix<Q> T(N, N);
    for (int c = 0; c < N; ++c) {
        const MultiPartition& mp = b.basis[c];
        MultiPartition pair{mp[i], mp[j]};
        int d = degree(pair);
        const BasisIndex& pb = basis_index(d, 2);
        int pc = pb.index.at(key_of(pair));
        for (int r = 0; r < static_cast<int>(pb.basis.size()); ++r) {
            const Q& x = blocks[d](r, pc);
            if (is_zero(x)) continue;
            MultiPartition img = mp;
            img[i] = pb.basis[r][0];
            img[j] = pb.basis[r][1];
            T(b.index.at(key_of(img)), c) = x;
        }
    }
    return T;
}

}  // namespace fockalg
