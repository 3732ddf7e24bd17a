#include "homalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "errors.hpp"

namespace ts {

namespace {

// Coordinate chart for the degree-d morphism space between two complexes.
// One slot per generator pair whose entry bidegree is inside the ring
// window and carries a nonzero ring dimension; forced-zero bidegrees are
// skipped. A non-forced bidegree outside the window makes the whole space
// unrepresentable.
struct CoordSpace {
    const TateComplex* source;
    const TateComplex* target;
    int degree;
    struct Slot {
        size_t j, k;
        Bidegree bd;
        size_t offset;
        size_t dim;
    };
    std::vector<Slot> slots;
    size_t total = 0;

    CoordSpace(const TateComplex& M, const TateComplex& N, int d)
        : source(&M), target(&N), degree(d) {
        const auto& ring = *M.ring();
        for (size_t j = 0; j < N.size(); ++j)
            for (size_t k = 0; k < M.size(); ++k) {
                Bidegree bd{N.gen(j).bd.p - M.gen(k).bd.p + d, N.gen(j).bd.q - M.gen(k).bd.q};
                if (BigradedRing::forced_zero(bd)) continue;
                if (!ring.in_window(bd))
                    throw WindowOverflow("morphism entry bidegree leaves the ring window");
                size_t dim = ring.dim(bd);
                if (dim == 0) continue;
                slots.push_back({j, k, bd, total, dim});
                total += dim;
            }
    }

    std::vector<Scalar> flatten(const GradedMorphism& f) const {
        const auto& ring = *source->ring();
        std::vector<Scalar> v(total, Scalar::zero(ring.field()));
        for (const auto& s : slots) {
            RingElement e = f.entry(s.j, s.k);
            for (size_t i = 0; i < s.dim; ++i) v[s.offset + i] = e.coeffs()[i];
        }
        return v;
    }

    GradedMorphism unflatten(const std::vector<Scalar>& v) const {
        const auto& ring = *source->ring();
        GradedMorphism f(*source, *target, degree);
        for (const auto& s : slots) {
            std::vector<Scalar> coeffs(v.begin() + s.offset, v.begin() + s.offset + s.dim);
            RingElement e = ring.element(s.bd, coeffs);
            if (!e.is_zero()) f.set_entry(s.j, s.k, e);
        }
        return f;
    }

    GradedMorphism unit(size_t column) const {
        std::vector<Scalar> v(total, Scalar::zero(source->ring()->field()));
        v[column] = Scalar::one(source->ring()->field());
        return unflatten(v);
    }
};

// The closed-map condition as a linear map: f |-> (-1)^d dN f - f dM.
GradedMorphism close_residual(const GradedMorphism& f) {
    GradedMorphism lhs = compose(differential_morphism(f.target()), f);
    if (f.degree() % 2 != 0) lhs = -lhs;
    return lhs - compose(f, differential_morphism(f.source()));
}

Matrix close_matrix(const CoordSpace& dom, const CoordSpace& eq) {
    Matrix A(eq.total, dom.total, dom.source->ring()->field());
    for (size_t c = 0; c < dom.total; ++c) {
        std::vector<Scalar> col = eq.flatten(close_residual(dom.unit(c)));
        for (size_t r = 0; r < eq.total; ++r) A.at(r, c) = col[r];
    }
    return A;
}

int oracle_bound(int bound) {
    if (bound >= 0) return bound;
    if (const char* env = std::getenv("TATE_SLICE_ORACLE_BOUND")) {
        int v = std::atoi(env);
        if (v >= 1 && v <= 30) return v;
    }
    return 20;
}

}  // namespace

GradedMorphism boundary_of(const GradedMorphism& h) {
    int d = h.degree() + 1;
    GradedMorphism lhs = compose(differential_morphism(h.target()), h);
    if (d % 2 != 0) lhs = -lhs;
    return lhs + compose(h, differential_morphism(h.source()));
}

// ---- MorphismSolver ----

int MorphismSolver::add_unknown(const TateComplex& source, const TateComplex& target, int degree) {
    Unknown u{source, target, degree, {}, columns_, 0};
    CoordSpace cs(source, target, degree);
    for (const auto& s : cs.slots) u.slots.push_back({s.j, s.k, s.bd, s.offset, s.dim});
    u.total = cs.total;
    columns_ += u.total;
    unknowns_.push_back(std::move(u));
    return static_cast<int>(unknowns_.size()) - 1;
}

void MorphismSolver::add_equation(std::vector<Term> terms, const GradedMorphism& rhs) {
    for (const auto& t : terms) {
        if (t.unknown < 0 || t.unknown >= static_cast<int>(unknowns_.size()))
            throw ShapeMismatch("equation refers to a missing unknown");
        const Unknown& u = unknowns_[t.unknown];
        TateComplex src = u.source, tgt = u.target;
        if (t.shift_by != 0) {
            src = shift(src, t.shift_by);
            tgt = shift(tgt, t.shift_by);
        }
        if (t.tensor_right) {
            src = tensor(src, *t.tensor_right);
            tgt = tensor(tgt, *t.tensor_right);
        }
        if (t.tensor_left) {
            src = tensor(*t.tensor_left, src);
            tgt = tensor(*t.tensor_left, tgt);
        }
        int deg = u.degree;
        if (t.left) {
            if (!t.left->source().same_as(tgt)) throw ShapeMismatch("left factor does not accept the unknown");
            if (!t.left->target().same_as(rhs.target())) throw ShapeMismatch("left factor misses the equation target");
            deg += t.left->degree();
        } else if (!tgt.same_as(rhs.target())) {
            throw ShapeMismatch("unknown target differs from the equation target");
        }
        if (t.right) {
            if (!t.right->target().same_as(src)) throw ShapeMismatch("right factor does not feed the unknown");
            if (!t.right->source().same_as(rhs.source())) throw ShapeMismatch("right factor misses the equation source");
            deg += t.right->degree();
        } else if (!src.same_as(rhs.source())) {
            throw ShapeMismatch("unknown source differs from the equation source");
        }
        if (deg != rhs.degree()) throw ShapeMismatch("equation term degree mismatch");
    }
    equations_.push_back({std::move(terms), rhs});
}

GradedMorphism MorphismSolver::unit_column(const Unknown& u, size_t column_in_unknown) const {
    const auto& ring = *u.source.ring();
    GradedMorphism f(u.source, u.target, u.degree);
    for (const auto& s : u.slots) {
        if (column_in_unknown < s.offset || column_in_unknown >= s.offset + s.dim) continue;
        std::vector<Scalar> coeffs(s.dim, Scalar::zero(ring.field()));
        coeffs[column_in_unknown - s.offset] = Scalar::one(ring.field());
        f.set_entry(s.j, s.k, ring.element(s.bd, coeffs));
        break;
    }
    return f;
}

void MorphismSolver::assemble(Matrix& A, std::vector<Scalar>& b) const {
    if (unknowns_.empty() && equations_.empty()) {
        A = Matrix(0, 0, Field::prime(2));
        b.clear();
        return;
    }
    const Field& F = unknowns_.empty() ? equations_.front().rhs.source().ring()->field()
                                       : unknowns_.front().source.ring()->field();
    std::vector<CoordSpace> eq_spaces;
    size_t rows = 0;
    for (const auto& e : equations_) {
        eq_spaces.emplace_back(e.rhs.source(), e.rhs.target(), e.rhs.degree());
        rows += eq_spaces.back().total;
    }
    A = Matrix(rows, columns_, F);
    b.assign(rows, Scalar::zero(F));
    size_t row0 = 0;
    for (size_t ei = 0; ei < equations_.size(); ++ei) {
        const auto& e = equations_[ei];
        const auto& space = eq_spaces[ei];
        std::vector<Scalar> rhs_flat = space.flatten(e.rhs);
        for (size_t r = 0; r < space.total; ++r) b[row0 + r] = rhs_flat[r];
        for (const auto& t : e.terms) {
            const Unknown& u = unknowns_[t.unknown];
            for (size_t c = 0; c < u.total; ++c) {
                GradedMorphism v = unit_column(u, c);
                if (t.shift_by != 0) v = shift(v, t.shift_by);
                if (t.tensor_right) v = tensor_id(v, *t.tensor_right);
                if (t.tensor_left) v = id_tensor(*t.tensor_left, v);
                if (t.right) v = compose(v, *t.right);
                if (t.left) v = compose(*t.left, v);
                std::vector<Scalar> col = space.flatten(v.scaled(t.coeff));
                for (size_t r = 0; r < space.total; ++r)
                    A.at(row0 + r, u.offset + c) = A.at(row0 + r, u.offset + c) + col[r];
            }
        }
        row0 += space.total;
    }
}

std::vector<GradedMorphism> MorphismSolver::unflatten(const std::vector<Scalar>& x) const {
    std::vector<GradedMorphism> out;
    for (const auto& u : unknowns_) {
        const auto& ring = *u.source.ring();
        GradedMorphism f(u.source, u.target, u.degree);
        for (const auto& s : u.slots) {
            std::vector<Scalar> coeffs(x.begin() + u.offset + s.offset,
                                       x.begin() + u.offset + s.offset + s.dim);
            RingElement e = ring.element(s.bd, coeffs);
            if (!e.is_zero()) f.set_entry(s.j, s.k, e);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::optional<std::vector<GradedMorphism>> MorphismSolver::solve() const {
    Matrix A(0, 0, Field::prime(2));
    std::vector<Scalar> b;
    assemble(A, b);
    auto x = A.solve(b);
    if (!x) return std::nullopt;
    return unflatten(*x);
}

std::vector<std::vector<GradedMorphism>> MorphismSolver::kernel_basis() const {
    Matrix A(0, 0, Field::prime(2));
    std::vector<Scalar> b;
    assemble(A, b);
    Matrix K = A.kernel_basis();
    std::vector<std::vector<GradedMorphism>> out;
    for (size_t c = 0; c < K.cols(); ++c) {
        std::vector<Scalar> x;
        x.reserve(K.rows());
        for (size_t r = 0; r < K.rows(); ++r) x.push_back(K.at(r, c));
        out.push_back(unflatten(x));
    }
    return out;
}

// ---- hom spaces ----

std::vector<GradedMorphism> chain_maps(const TateComplex& M, const TateComplex& N, int degree) {
    CoordSpace dom(M, N, degree);
    CoordSpace eq(M, N, degree + 1);
    Matrix A = close_matrix(dom, eq);
    Matrix K = A.kernel_basis();
    std::vector<GradedMorphism> out;
    for (size_t c = 0; c < K.cols(); ++c) {
        std::vector<Scalar> x;
        x.reserve(K.rows());
        for (size_t r = 0; r < K.rows(); ++r) x.push_back(K.at(r, c));
        out.push_back(dom.unflatten(x));
    }
    return out;
}

HomSpace hom_space(const TateComplex& M, const TateComplex& N, int degree) {
    HomSpace H;
    H.source_ = M;
    H.target_ = N;
    H.degree_ = degree;
    const Field& F = M.ring()->field();

    CoordSpace dom(M, N, degree);
    for (const auto& s : dom.slots) H.slots_.push_back({s.j, s.k, s.bd, s.offset, s.dim});
    H.total_ = dom.total;

    CoordSpace eq(M, N, degree + 1);
    Matrix K = close_matrix(dom, eq).kernel_basis();
    H.closed_dim_ = static_cast<int>(K.cols());

    CoordSpace htp(M, N, degree - 1);
    Matrix B(dom.total, htp.total, F);
    for (size_t c = 0; c < htp.total; ++c) {
        std::vector<Scalar> col = dom.flatten(boundary_of(htp.unit(c)));
        for (size_t r = 0; r < dom.total; ++r) B.at(r, c) = col[r];
    }
    H.boundary_dim_ = static_cast<int>(B.rank());
    H.dim_ = H.closed_dim_ - H.boundary_dim_;

    // Representatives: closed basis columns independent modulo boundaries.
    Matrix stacked(dom.total, B.cols() + K.cols(), F);
    for (size_t r = 0; r < dom.total; ++r) {
        for (size_t c = 0; c < B.cols(); ++c) stacked.at(r, c) = B.at(r, c);
        for (size_t c = 0; c < K.cols(); ++c) stacked.at(r, B.cols() + c) = K.at(r, c);
    }
    Matrix work = stacked;
    std::vector<size_t> pivots = work.rref();
    std::vector<size_t> rep_cols;
    for (size_t p : pivots)
        if (p >= B.cols()) rep_cols.push_back(p - B.cols());

    H.decode_ = Matrix(dom.total, B.cols() + rep_cols.size(), F);
    for (size_t r = 0; r < dom.total; ++r)
        for (size_t c = 0; c < B.cols(); ++c) H.decode_.at(r, c) = B.at(r, c);
    H.boundary_cols_ = B.cols();
    for (size_t i = 0; i < rep_cols.size(); ++i) {
        std::vector<Scalar> x;
        x.reserve(K.rows());
        for (size_t r = 0; r < K.rows(); ++r) {
            H.decode_.at(r, B.cols() + i) = K.at(r, rep_cols[i]);
            x.push_back(K.at(r, rep_cols[i]));
        }
        H.reps_.push_back(dom.unflatten(x));
    }
    return H;
}

std::vector<Scalar> HomSpace::flatten(const GradedMorphism& f) const {
    const auto& ring = *source_.ring();
    std::vector<Scalar> v(total_, Scalar::zero(ring.field()));
    for (const auto& s : slots_) {
        RingElement e = f.entry(s.j, s.k);
        for (size_t i = 0; i < s.dim; ++i) v[s.offset + i] = e.coeffs()[i];
    }
    return v;
}

std::vector<Scalar> HomSpace::coordinates_of(const GradedMorphism& f) const {
    if (f.degree() != degree_ || !f.source().same_as(source_) || !f.target().same_as(target_))
        throw ShapeMismatch("coordinates_of: map lives in a different hom space");
    if (!close_residual(f).is_zero()) throw NotChainMap("coordinates_of needs a closed map");
    auto x = decode_.solve(flatten(f));
    if (!x) throw NoSolution("closed map is outside the decoded span");
    return std::vector<Scalar>(x->begin() + boundary_cols_, x->end());
}

std::optional<GradedMorphism> is_nullhomotopic(const GradedMorphism& f) {
    if (!close_residual(f).is_zero()) throw NotChainMap("null-homotopy question needs a closed map");
    MorphismSolver solver;
    int w = solver.add_unknown(f.source(), f.target(), f.degree() - 1);
    const Field& F = f.source().ring()->field();
    Scalar sgn = (f.degree() % 2 == 0) ? Scalar::one(F) : -Scalar::one(F);
    std::vector<MorphismSolver::Term> terms;
    terms.push_back({w, differential_morphism(f.target()), std::nullopt, sgn});
    terms.push_back({w, std::nullopt, differential_morphism(f.source()), Scalar::one(F)});
    solver.add_equation(std::move(terms), f);
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

HomotopyTable homotopy_groups(const TateComplex& M, int p_lo, int p_hi, int q_lo, int q_hi) {
    HomotopyTable table;
    for (int q = std::max(0, q_lo); q <= q_hi; ++q)
        for (int p = p_lo; p <= p_hi; ++p) {
            try {
                TateComplex T = tate_object(M.ring(), p, q);
                table.dims[{p, q}] = hom_space(T, M, 0).dim();
            } catch (const WindowOverflow&) {
                table.skipped.push_back({p, q});
            }
        }
    return table;
}

HomotopyTable homotopy_groups(const TateComplex& M) {
    if (M.size() == 0) return {};
    int min_p = M.gen(0).bd.p, max_p = min_p, max_q = 0;
    for (const auto& g : M.generators()) {
        min_p = std::min(min_p, g.bd.p);
        max_p = std::max(max_p, g.bd.p);
        max_q = std::max(max_q, g.bd.q);
    }
    int sym_lo = 0, sym_hi = 0;
    for (const auto& s : M.ring()->symbols()) {
        sym_lo = std::min(sym_lo, s.bd.p);
        sym_hi = std::max(sym_hi, s.bd.p);
    }
    return homotopy_groups(M, min_p - sym_hi, max_p - sym_lo, 0, max_q);
}

// ---- brute-force oracle ----

int brute_oracle_hom(const TateComplex& M, const TateComplex& N, int degree, int bound) {
    const Field& F = M.ring()->field();
    if (!F.finite()) throw FieldNotFinite("the enumeration oracle needs a finite field");
    int b = oracle_bound(bound);
    long long budget = 1LL << b;
    long long p = F.characteristic();

    CoordSpace dom(M, N, degree);
    CoordSpace htp(M, N, degree - 1);
    auto count_space = [&](size_t dim) {
        long long total = 1;
        for (size_t i = 0; i < dim; ++i) {
            if (total > budget / p) throw OracleTooLarge("enumeration exceeds the candidate budget");
            total *= p;
        }
        return total;
    };
    long long n_f = count_space(dom.total);
    long long n_h = count_space(htp.total);

    auto vec_of = [&](const CoordSpace& cs, long long index) {
        std::vector<Scalar> v(cs.total, Scalar::zero(F));
        for (size_t i = 0; i < cs.total; ++i) {
            v[i] = Scalar::from_int(F, index % p);
            index /= p;
        }
        return v;
    };

    long long closed = 0;
    for (long long i = 0; i < n_f; ++i)
        if (close_residual(dom.unflatten(vec_of(dom, i))).is_zero()) ++closed;

    std::set<std::string> boundaries;
    for (long long i = 0; i < n_h; ++i) {
        std::vector<Scalar> img = dom.flatten(boundary_of(htp.unflatten(vec_of(htp, i))));
        std::string key;
        for (const auto& s : img) {
            key += s.str();
            key += ',';
        }
        boundaries.insert(std::move(key));
    }

    auto log_p = [&](long long n) {
        int e = 0;
        while (n > 1) {
            if (n % p != 0) throw Error("oracle count is not a prime power");
            n /= p;
            ++e;
        }
        return e;
    };
    return log_p(closed) - log_p(static_cast<long long>(boundaries.size()));
}

// ---- equivalences ----

bool is_contractible(const TateComplex& M) {
    Minimization mini = minimize(M);
    auto h = is_nullhomotopic(identity_morphism(M));
    if (mini.reduced.size() == 0 && !h)
        throw Error("is_contractible: reduction and null-homotopy search disagree");
    return h.has_value();
}

std::optional<GradedMorphism> homotopy_inverse(const GradedMorphism& f) {
    if (f.degree() != 0) throw NotChainMap("homotopy inverse needs a degree-0 chain map");
    if (!is_chain_map(f)) throw NotChainMap("homotopy inverse input does not commute with the differentials");
    const Field& F = f.source().ring()->field();
    MorphismSolver solver;
    int g = solver.add_unknown(f.target(), f.source(), 0);
    int hM = solver.add_unknown(f.source(), f.source(), -1);
    int hN = solver.add_unknown(f.target(), f.target(), -1);
    Scalar one = Scalar::one(F), minus = -Scalar::one(F);
    GradedMorphism dM = differential_morphism(f.source());
    GradedMorphism dN = differential_morphism(f.target());
    // g f - D(hM) = id, f g - D(hN) = id, and g is closed
    solver.add_equation({{g, std::nullopt, f, one}, {hM, dM, std::nullopt, minus}, {hM, std::nullopt, dM, minus}},
                        identity_morphism(f.source()));
    solver.add_equation({{g, f, std::nullopt, one}, {hN, dN, std::nullopt, minus}, {hN, std::nullopt, dN, minus}},
                        identity_morphism(f.target()));
    solver.add_equation({{g, dM, std::nullopt, one}, {g, std::nullopt, dN, minus}},
                        zero_morphism(f.target(), f.source(), 1));
    auto sol = solver.solve();
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

bool is_isomorphism(const GradedMorphism& f) {
    bool via_inverse = homotopy_inverse(f).has_value();
    bool via_cone = is_contractible(cone(f).cone);
    if (via_cone != via_inverse) throw Error("is_isomorphism: cone and inverse checks disagree");
    return via_cone;
}

bool is_distinguished(const Triangle& T) {
    if (T.f.degree() != 0 || T.g.degree() != 0 || T.h.degree() != 0)
        throw NotChainMap("triangle maps must have degree 0");
    if (!T.f.source().same_as(T.X) || !T.f.target().same_as(T.Y) || !T.g.source().same_as(T.Y) ||
        !T.g.target().same_as(T.Z) || !T.h.source().same_as(T.Z) || !T.h.target().same_as(shift(T.X, 1)))
        throw ShapeMismatch("triangle maps do not match the stated objects");
    if (!is_chain_map(T.f) || !is_chain_map(T.g) || !is_chain_map(T.h))
        throw NotChainMap("triangle maps must commute with the differentials");

    if (!is_nullhomotopic(compose(T.g, T.f))) return false;
    if (!is_nullhomotopic(compose(T.h, T.g))) return false;
    if (!is_nullhomotopic(compose(shift(T.f, 1), T.h))) return false;

    ConeResult c = cone(T.f);
    const Field& F = T.X.ring()->field();
    Scalar one = Scalar::one(F), minus = -Scalar::one(F);
    MorphismSolver solver;
    int xi = solver.add_unknown(c.cone, T.Z, 0);
    int w1 = solver.add_unknown(T.Y, T.Z, -1);
    int w2 = solver.add_unknown(c.cone, shift(T.X, 1), -1);
    GradedMorphism dC = differential_morphism(c.cone);
    GradedMorphism dY = differential_morphism(T.Y);
    GradedMorphism dZ = differential_morphism(T.Z);
    GradedMorphism dX1 = differential_morphism(shift(T.X, 1));
    // xi is a chain map
    solver.add_equation({{xi, dZ, std::nullopt, one}, {xi, std::nullopt, dC, minus}},
                        zero_morphism(c.cone, T.Z, 1));
    // xi . incl = g up to the homotopy w1
    solver.add_equation({{xi, std::nullopt, c.triangle.g, one},
                         {w1, dZ, std::nullopt, minus},
                         {w1, std::nullopt, dY, minus}},
                        T.g);
    // h . xi = proj up to the homotopy w2
    solver.add_equation({{xi, T.h, std::nullopt, one},
                         {w2, dX1, std::nullopt, minus},
                         {w2, std::nullopt, dC, minus}},
                        c.triangle.h);
    auto sol = solver.solve();
    if (!sol) return false;
    return is_isomorphism((*sol)[0]);
}

}  // namespace ts
