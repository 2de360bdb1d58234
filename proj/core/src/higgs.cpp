#include "cohiggs/higgs.hpp"

#include <algorithm>

#include "cohiggs/errors.hpp"

namespace cohiggs {

bool LaurentMat::isZero() const {
    return std::all_of(e_.begin(), e_.end(), [](const LaurentPoly& p) { return p.isZero(); });
}

LaurentMat LaurentMat::operator*(const LaurentMat& o) const {
    if (cols_ != o.rows_) throw Error("laurent matrix product dimension mismatch");
    std::size_t rank = e_.empty() ? 0 : e_[0].rank();
    LaurentMat p(rows_, o.cols_, rank);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                p.at(i, j) = p.at(i, j) + at(i, k) * o.at(k, j);
        }
    return p;
}

LaurentMat LaurentMat::operator-(const LaurentMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("laurent matrix dimension mismatch");
    LaurentMat d = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) d.at(i, j) = d.at(i, j) - o.at(i, j);
    return d;
}

HiggsField HiggsField::make(const ToricSheaf& sheaf,
                            std::map<LatticeVec, std::vector<Rat>, LvLess> terms) {
    const std::size_t n = sheaf.rankE;
    const std::size_t q = sheaf.fan.rank();
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != q) throw Error("term degree rank mismatch");
        if (it->second.size() != n * n * q) throw Error("term tensor size mismatch");
        bool zero = std::all_of(it->second.begin(), it->second.end(),
                                [](const Rat& x) { return x.isZero(); });
        if (zero) {
            it = terms.erase(it);
            continue;
        }
        GradedMapSpace v = preHiggsSpace(sheaf, it->first);
        if (!v.basis.contains(it->second))
            throw InvalidTerm("term at degree " + lvStr(it->first) +
                              " is not an admissible map");
        ++it;
    }
    return makeUnchecked(sheaf, std::move(terms));
}

HiggsField HiggsField::makeUnchecked(const ToricSheaf& sheaf,
                                     std::map<LatticeVec, std::vector<Rat>, LvLess> terms) {
    HiggsField f;
    f.sheaf_ = sheaf;
    for (auto it = terms.begin(); it != terms.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(),
                                [](const Rat& x) { return x.isZero(); });
        it = zero ? terms.erase(it) : std::next(it);
    }
    f.terms_ = std::move(terms);
    return f;
}

LaurentMat contractField(const HiggsField& phi, const LatticeVec& s) {
    const std::size_t n = phi.rankE();
    const std::size_t q = phi.q();
    LaurentMat out(n, n, q);
    for (const auto& [r, tensor] : phi.terms()) {
        Mat c = GradedMapSpace::contract(tensor, n, q, s);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!c.at(i, j).isZero())
                    out.at(i, j) = out.at(i, j) + LaurentPoly::monomial(r, c.at(i, j));
    }
    return out;
}

Mat contractFieldAt(const HiggsField& phi, const LatticeVec& s, const std::vector<Rat>& t) {
    const std::size_t n = phi.rankE();
    const std::size_t q = phi.q();
    if (t.size() != q) throw Error("torus point rank mismatch");
    for (const auto& x : t)
        if (x.isZero()) throw Error("torus point has a zero coordinate");
    Mat out(n, n);
    for (const auto& [r, tensor] : phi.terms()) {
        Rat chi = LaurentPoly::monomial(r, Rat(1)).evalAt(t);
        Mat c = GradedMapSpace::contract(tensor, n, q, s);
        out = out + c * chi;
    }
    return out;
}

namespace {

std::optional<std::pair<LatticeVec, Mat>> firstNonzeroComponent(const LaurentMat& m) {
    // Graded components of a Laurent matrix, smallest degree first.
    std::map<LatticeVec, Mat, LvLess> comps;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [e, c] : m.at(i, j).terms()) {
                auto [it, fresh] = comps.try_emplace(e, Mat(m.rows(), m.cols()));
                it->second.at(i, j) = c;
            }
    for (const auto& [e, mat] : comps)
        if (!mat.isZero()) return std::make_pair(e, mat);
    return std::nullopt;
}

}  // namespace

IntegrabilityResult isIntegrable(const HiggsField& phi) {
    const std::size_t q = phi.q();
    IntegrabilityResult res;
    res.integrable = true;
    std::vector<LaurentMat> contractions;
    contractions.reserve(q);
    for (std::size_t k = 0; k < q; ++k) {
        LatticeVec s(q, Int(0));
        s[k] = 1;
        contractions.push_back(contractField(phi, s));
    }
    for (std::size_t k = 0; k < q && res.integrable; ++k)
        for (std::size_t l = k + 1; l < q && res.integrable; ++l) {
            LaurentMat comm = contractions[k] * contractions[l] - contractions[l] * contractions[k];
            if (!comm.isZero()) {
                res.integrable = false;
                res.certificate = firstNonzeroComponent(comm);
            }
        }
    return res;
}

LatticePolytope higgsPolytope(const HiggsField& phi) {
    std::vector<LatticeVec> supp;
    for (const auto& [r, tensor] : phi.terms()) supp.push_back(r);
    if (supp.empty()) return LatticePolytope(phi.q(), {});
    return convexHull2D(phi.q(), supp);
}

HiggsField restrictToFace(const HiggsField& phi, const LatticePolytope& face) {
    std::map<LatticeVec, std::vector<Rat>, LvLess> kept;
    for (const auto& [r, tensor] : phi.terms())
        if (!face.isEmpty() && face.containsPoint(r)) kept.emplace(r, tensor);
    return HiggsField::makeUnchecked(phi.sheaf(), std::move(kept));
}

IntegrabilitySystem generateIntegrabilitySystem(const ToricSheaf& e, bool traceFreeMode,
                                                const std::optional<LatticePolytope>& filter) {
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    IntegrabilitySystem out;
    out.range = higgsRange(e, traceFreeMode);

    // Declare one unknown per kept degree and basis vector, degrees in lex order.
    std::vector<const GradedMapSpace*> spaces;
    for (const auto& [r, entry] : out.range.points) {
        if (filter && !(filter->containsPoint(r))) continue;
        const GradedMapSpace& sp = out.range.effectiveSpace(r);
        for (std::size_t i = 0; i < sp.dim(); ++i) {
            out.system.vars.push_back(solverVar(r, i));
            out.varKeys.emplace_back(r, i);
        }
        spaces.push_back(&sp);
    }

    // Contractions of every basis tensor by the standard M-basis.
    struct BasisTerm {
        LatticeVec degree;
        std::size_t var;
        std::vector<Mat> contr;  // one per M-basis vector
    };
    std::vector<BasisTerm> basisTerms;
    {
        std::size_t var = 0;
        for (const GradedMapSpace* sp : spaces)
            for (std::size_t i = 0; i < sp->dim(); ++i) {
                BasisTerm bt;
                bt.degree = sp->degree;
                bt.var = var++;
                auto tensor = sp->basisTensor(i);
                for (std::size_t k = 0; k < q; ++k) {
                    LatticeVec s(q, Int(0));
                    s[k] = 1;
                    bt.contr.push_back(GradedMapSpace::contract(tensor, n, q, s));
                }
                basisTerms.push_back(std::move(bt));
            }
    }

    // For each basis pair (s_k, s_l), total degree u and matrix entry, the
    // quadratic coefficient polynomial of chi^u in [Phi_{s_k}, Phi_{s_l}].
    std::vector<MPoly> polys;
    for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = k + 1; l < q; ++l) {
            std::map<LatticeVec, std::vector<MPoly>, LvLess> buckets;
            for (const auto& a : basisTerms)
                for (const auto& b : basisTerms) {
                    Mat m = a.contr[k] * b.contr[l] - a.contr[l] * b.contr[k];
                    if (m.isZero()) continue;
                    LatticeVec u = addLv(a.degree, b.degree);
                    auto [it, fresh] = buckets.try_emplace(u, std::vector<MPoly>(n * n));
                    Monomial mono;
                    if (a.var == b.var)
                        mono = {{a.var, 2}};
                    else if (a.var < b.var)
                        mono = {{a.var, 1}, {b.var, 1}};
                    else
                        mono = {{b.var, 1}, {a.var, 1}};
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j)
                            it->second[i * n + j].addTerm(mono, m.at(i, j));
                }
            for (const auto& [u, entries] : buckets)
                for (const auto& p : entries)
                    if (!p.isZero()) polys.push_back(p.normalized());
        }

    // Deduplicate identical normalized generators, preserving first occurrence.
    for (const auto& p : polys) {
        bool dup = false;
        for (const auto& kept : out.system.polys)
            if (kept == p) {
                dup = true;
                break;
            }
        if (!dup) out.system.polys.push_back(p);
    }
    return out;
}

bool checkWitnessFamily(const PolySystem& sys, const std::map<PolyVar, MPoly>& assignment) {
    return substituteWitness(sys, assignment);
}

HitchinData hitchinData(const HiggsField& phi) {
    const std::size_t q = phi.q();
    const std::size_t n = phi.rankE();
    if (q != 2 || n != 2) throw Error("hitchin data requires a rank-2 field on a surface");

    HitchinData out;
    out.traceComponents.assign(q, LaurentPoly(q));
    out.det20 = out.det11 = out.det02 = LaurentPoly(q);

    for (const auto& [r, x] : phi.terms())
        for (std::size_t k = 0; k < q; ++k) {
            Rat tr = x[tensorIndex(n, q, 0, 0, k)] + x[tensorIndex(n, q, 1, 1, k)];
            if (!tr.isZero())
                out.traceComponents[k] = out.traceComponents[k] + LaurentPoly::monomial(r, tr);
        }

    // det of the 2x2 matrix with N-valued entries: collect the symmetric
    // products n_k n_l with Laurent coefficients.
    for (const auto& [r1, x1] : phi.terms())
        for (const auto& [r2, x2] : phi.terms()) {
            LatticeVec u = addLv(r1, r2);
            for (std::size_t k = 0; k < q; ++k)
                for (std::size_t l = 0; l < q; ++l) {
                    Rat c = x1[tensorIndex(n, q, 0, 0, k)] * x2[tensorIndex(n, q, 1, 1, l)] -
                            x1[tensorIndex(n, q, 0, 1, k)] * x2[tensorIndex(n, q, 1, 0, l)];
                    if (c.isZero()) continue;
                    LaurentPoly mono = LaurentPoly::monomial(u, c);
                    if (k == 0 && l == 0) out.det20 = out.det20 + mono;
                    else if (k == 1 && l == 1) out.det02 = out.det02 + mono;
                    else out.det11 = out.det11 + mono;
                }
        }

    // Certificate det = -(p n1 + q n2)^2: -p^2 = det20, -2pq = det11, -q^2 = det02.
    auto certify = [&]() -> std::optional<std::vector<LaurentPoly>> {
        LaurentPoly zero(q);
        if (!out.det20.isZero()) {
            auto p = isMinusPerfectSquare(out.det20);
            if (!p) return std::nullopt;
            LaurentPoly divisor = *p * Rat(-2);
            auto qq = out.det11.divideExact(divisor);
            if (!qq) return std::nullopt;
            if (!((*qq * *qq * Rat(-1)) == out.det02)) return std::nullopt;
            return std::vector<LaurentPoly>{*p, *qq};
        }
        if (!out.det11.isZero()) return std::nullopt;
        auto qq = isMinusPerfectSquare(out.det02);
        if (!qq) return std::nullopt;
        return std::vector<LaurentPoly>{zero, *qq};
    };
    out.minusSquareRoot = certify();
    return out;
}

std::vector<Rat> minPolyAtPoint(const HiggsField& phi, const LatticeVec& s,
                                const std::vector<Rat>& t) {
    Mat m = contractFieldAt(phi, s, t);
    const std::size_t n = m.rows();

    // Krylov on flattened powers: the first power linearly dependent on the
    // earlier ones yields the minimal polynomial.
    std::vector<std::vector<Rat>> flats;
    Mat power = Mat::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<Rat> flat;
        flat.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.push_back(power.at(i, j));

        Mat prev(0, n * n);
        for (const auto& f : flats) prev.appendRow(f);
        Subspace spanPrev = flats.empty() ? Subspace::zero(n * n) : Subspace::span(n * n, prev);
        if (spanPrev.contains(flat)) {
            // Solve sum a_i flats[i] = flat; the flats are independent, so the
            // augmented rref yields the unique coefficients at the pivots.
            Mat aug(n * n, flats.size() + 1);
            for (std::size_t row = 0; row < n * n; ++row) {
                for (std::size_t i = 0; i < flats.size(); ++i) aug.at(row, i) = flats[i][row];
                aug.at(row, flats.size()) = flat[row];
            }
            std::vector<std::size_t> pivots;
            Mat red = rref(aug, pivots);
            std::vector<Rat> a(flats.size(), Rat(0));
            for (std::size_t rI = 0; rI < red.rows(); ++rI) {
                if (pivots[rI] >= flats.size()) throw Error("minimal polynomial solve failed");
                a[pivots[rI]] = red.at(rI, flats.size());
            }
            std::vector<Rat> coeffs(k + 1);
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = -a[i];
            coeffs[k] = 1;
            return coeffs;
        }
        flats.push_back(flat);
        power = power * m;
    }
    throw Error("minimal polynomial not found");  // unreachable for square matrices
}

std::string polyStr(const std::vector<Rat>& coeffs, const std::string& var) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rat& c = coeffs[k];
        if (c.isZero()) continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string sign = c.sign() < 0 ? " - " : " + ";
        if (out.empty()) sign = c.sign() < 0 ? "-" : "";
        Rat a = c.abs();
        std::string cs = a.str();
        if (mono.empty())
            out += sign + cs;
        else if (cs == "1")
            out += sign + mono;
        else
            out += sign + cs + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace cohiggs
