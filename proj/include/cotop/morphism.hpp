#pragma once

#include "cotop/coalgebra.hpp"

namespace cotop {

/// Linear map θ: source → target given by a (target.dim × source.dim) matrix.
template <ExactField F>
struct CoalgebraMorphism {
    Coalgebra<F> source;
    Coalgebra<F> target;
    Matrix<F> matrix;

    /// θ*(f) = f ∘ θ on dual coordinates.
    Vector<F> dual(const Vector<F>& functional) const
    {
        const F& fl = source.field();
        Vector<F> out(source.dim(), fl.zero());
        for (std::size_t i = 0; i < source.dim(); ++i)
            for (std::size_t a = 0; a < target.dim(); ++a) out[i] = fl.add(out[i], fl.mul(functional[a], matrix(a, i)));
        return out;
    }
};

/// (θ⊗θ)∘Δ = Δ'∘θ, ε'∘θ = ε, and θ*(f∗g) = θ*(f)∗θ*(g) on dual basis pairs.
template <ExactField F>
ValidationReport validate_morphism(const CoalgebraMorphism<F>& t)
{
    ValidationReport report;
    const auto& S = t.source;
    const auto& T = t.target;
    const F& f = S.field();
    if (t.matrix.rows() != T.dim() || t.matrix.cols() != S.dim()) {
        report.add("shape", {t.matrix.rows(), t.matrix.cols()}, "matrix must be target.dim × source.dim");
        return report;
    }
    for (std::size_t i = 0; i < S.dim(); ++i) {
        bool ok = true;
        for (std::size_t b = 0; b < T.dim() && ok; ++b)
            for (std::size_t c = 0; c < T.dim() && ok; ++c) {
                auto lhs = f.zero(), rhs = f.zero();
                for (std::size_t j = 0; j < S.dim(); ++j)
                    for (std::size_t k = 0; k < S.dim(); ++k)
                        if (!f.is_zero(S.mu(i, j, k)))
                            lhs = f.add(lhs, f.mul(S.mu(i, j, k), f.mul(t.matrix(b, j), t.matrix(c, k))));
                for (std::size_t a = 0; a < T.dim(); ++a) rhs = f.add(rhs, f.mul(t.matrix(a, i), T.mu(a, b, c)));
                ok = f.equal(lhs, rhs);
            }
        if (!ok) report.add("comultiplicative", {i}, "(θ⊗θ)Δ(c_i) ≠ Δ'(θ(c_i))");
        auto e = f.zero();
        for (std::size_t a = 0; a < T.dim(); ++a) e = f.add(e, f.mul(T.counit(a), t.matrix(a, i)));
        if (!f.equal(e, S.counit(i))) report.add("counital", {i}, "ε'(θ(c_i)) ≠ ε(c_i)");
    }
    if (report.ok() && validate_coalgebra(S).ok() && validate_coalgebra(T).ok()) {
        DualAlgebra<F> ds(S), dt(T);
        for (std::size_t a = 0; a < T.dim(); ++a)
            for (std::size_t b = 0; b < T.dim(); ++b) {
                auto ea = unit_vector(f, T.dim(), a), eb = unit_vector(f, T.dim(), b);
                if (t.dual(dt.multiply(ea, eb)) != ds.multiply(t.dual(ea), t.dual(eb)))
                    report.add("dual-ring-morphism", {a, b}, "θ*(f∗g) ≠ θ*(f)∗θ*(g)");
            }
    }
    return report;
}

} // namespace cotop
