#include "ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace ts {

bool RingElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool RingElement::operator==(const RingElement& o) const {
    if (bd_ != o.bd_) return is_zero() && o.is_zero();
    if (coeffs_.size() != o.coeffs_.size()) return is_zero() && o.is_zero();
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (bd_ != o.bd_) {
        if (o.is_zero()) return *this;
        if (is_zero()) return o;
        throw ShapeMismatch("adding ring elements of different bidegrees");
    }
    RingElement r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RingElement RingElement::scaled(const Scalar& c) const {
    RingElement r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

std::string RingElement::str() const {
    if (!ring_ || is_zero()) return "0";
    const auto& names = ring_->basis(bd_);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        Scalar one = Scalar::one(ring_->field());
        if (coeffs_[i] == one)
            out << names[i];
        else
            out << coeffs_[i].str() << "*" << names[i];
    }
    return out.str();
}

BigradedRing::BigradedRing(Field base, Window window, std::vector<Symbol> symbols,
                           std::string unit,
                           std::map<std::pair<std::string, std::string>, Expansion> table)
    : base_(base), window_(window), symbols_(std::move(symbols)), unit_(std::move(unit)) {
    if (window_.p_min > window_.p_max || window_.q_max < 0)
        throw MalformedInput("empty ring window");
    if (!in_window({0, 0})) throw MalformedInput("ring window must contain (0,0)");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        const auto& s = symbols_[i];
        if (s.name.empty()) throw MalformedInput("empty basis symbol name");
        if (index_.count(s.name)) throw MalformedInput("duplicate basis symbol: " + s.name);
        index_[s.name] = i;
        basis_[s.bd].push_back(s.name);
        basis_global_[s.bd].push_back(i);
    }
    auto uit = index_.find(unit_);
    if (uit == index_.end()) throw MalformedInput("unit symbol not in basis: " + unit_);
    if (symbols_[uit->second].bd != Bidegree{0, 0})
        throw MalformedInput("unit symbol not in bidegree (0,0)");
    for (const auto& [key, expansion] : table) {
        auto li = index_.find(key.first);
        auto ri = index_.find(key.second);
        if (li == index_.end() || ri == index_.end())
            throw MalformedInput("multiplication table names unknown symbol: " + key.first + "*" +
                                 key.second);
        Bidegree sum = symbols_[li->second].bd + symbols_[ri->second].bd;
        if (!in_window(sum))
            throw MalformedInput("multiplication table entry with out-of-window product: " +
                                 key.first + "*" + key.second);
        RingElement value = zero(sum);
        for (const auto& [name, coeff] : expansion) {
            auto ti = index_.find(name);
            if (ti == index_.end())
                throw MalformedInput("table expansion names unknown symbol: " + name);
            if (symbols_[ti->second].bd != sum)
                throw MalformedInput("table expansion bidegree mismatch at " + key.first + "*" +
                                     key.second + " -> " + name);
            const auto& glob = basis_global_.at(sum);
            size_t pos = std::find(glob.begin(), glob.end(), ti->second) - glob.begin();
            value.coeffs()[pos] = value.coeffs()[pos] + coeff;
        }
        if (!value.is_zero()) table_[{li->second, ri->second}] = std::move(value);
    }
    zero_elt_ = RingElement(this, {0, 0}, {});
}

size_t BigradedRing::dim(Bidegree bd) const {
    auto it = basis_.find(bd);
    return it == basis_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& BigradedRing::basis(Bidegree bd) const {
    static const std::vector<std::string> empty;
    auto it = basis_.find(bd);
    return it == basis_.end() ? empty : it->second;
}

std::optional<Bidegree> BigradedRing::symbol_bidegree(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return symbols_[it->second].bd;
}

RingElement BigradedRing::zero(Bidegree bd) const {
    return RingElement(this, bd, std::vector<Scalar>(dim(bd), Scalar::zero(base_)));
}

RingElement BigradedRing::one() const { return element(unit_); }

RingElement BigradedRing::element(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MalformedInput("unknown basis symbol: " + name);
    Bidegree bd = symbols_[it->second].bd;
    RingElement r = zero(bd);
    const auto& glob = basis_global_.at(bd);
    size_t pos = std::find(glob.begin(), glob.end(), it->second) - glob.begin();
    r.coeffs()[pos] = Scalar::one(base_);
    return r;
}

RingElement BigradedRing::element(Bidegree bd, const std::vector<Scalar>& coeffs) const {
    if (coeffs.size() != dim(bd)) throw ShapeMismatch("coefficient count != basis dimension");
    return RingElement(this, bd, coeffs);
}

size_t BigradedRing::symbol_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MalformedInput("unknown basis symbol: " + name);
    return it->second;
}

size_t BigradedRing::global_index(Bidegree bd, size_t pos) const {
    return basis_global_.at(bd).at(pos);
}

const RingElement& BigradedRing::table_entry(size_t left, size_t right) const {
    auto it = table_.find({left, right});
    return it == table_.end() ? zero_elt_ : it->second;
}

RingElement BigradedRing::mul(const RingElement& x, const RingElement& y) const {
    if ((x.ring() && !same_structure(*x.ring())) || (y.ring() && !same_structure(*y.ring())))
        throw RingMismatch("multiplying elements of different rings");
    Bidegree target = x.bidegree() + y.bidegree();
    if (x.is_zero() || y.is_zero()) return zero(target);
    if (forced_zero(target)) return zero(target);
    if (!in_window(target)) throw WindowOverflow("product bidegree outside ring window");
    RingElement result = zero(target);
    const auto& lglob = basis_global_.at(x.bidegree());
    const auto& rglob = basis_global_.at(y.bidegree());
    for (size_t i = 0; i < lglob.size(); ++i) {
        if (x.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < rglob.size(); ++j) {
            if (y.coeffs()[j].is_zero()) continue;
            const RingElement& e = table_entry(lglob[i], rglob[j]);
            if (e.is_zero()) continue;
            result = result + e.scaled(x.coeffs()[i] * y.coeffs()[j]);
        }
    }
    return result;
}

std::optional<RingElement> BigradedRing::invert(const RingElement& a) const {
    if (a.bidegree() != Bidegree{0, 0} || a.is_zero()) return std::nullopt;
    size_t n = dim({0, 0});
    Matrix L(n, n, base_);
    for (size_t j = 0; j < n; ++j) {
        RingElement bj = zero({0, 0});
        bj.coeffs()[j] = Scalar::one(base_);
        RingElement prod = mul(a, bj);
        for (size_t i = 0; i < n; ++i) L.at(i, j) = prod.coeffs()[i];
    }
    auto sol = L.solve(one().coeffs());
    if (!sol) return std::nullopt;
    RingElement x(this, {0, 0}, *sol);
    if (!(mul(x, a) == one())) return std::nullopt;
    return x;
}

bool BigradedRing::same_structure(const BigradedRing& o) const {
    if (this == &o) return true;
    if (base_ != o.base_ || !(window_ == o.window_) || unit_ != o.unit_) return false;
    if (symbols_.size() != o.symbols_.size()) return false;
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name != o.symbols_[i].name || symbols_[i].bd != o.symbols_[i].bd)
            return false;
    if (table_.size() != o.table_.size()) return false;
    auto it = table_.begin(), jt = o.table_.begin();
    for (; it != table_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

ValidationReport validate_ring(const BigradedRing& H) {
    ValidationReport report;
    for (const auto& s : H.symbols()) {
        if (BigradedRing::forced_zero(s.bd))
            report.push_back("basis symbol '" + s.name + "' in zero region (p=" +
                             std::to_string(s.bd.p) + ", q=" + std::to_string(s.bd.q) + ")");
        else if (!H.in_window(s.bd))
            report.push_back("basis symbol '" + s.name + "' outside window");
    }
    const auto& syms = H.symbols();
    size_t n = syms.size();
    // unit law
    for (size_t i = 0; i < n; ++i) {
        RingElement b = H.element(syms[i].name);
        if (!(H.mul(H.one(), b) == b))
            report.push_back("unit law fails: 1*" + syms[i].name);
        if (!(H.mul(b, H.one()) == b))
            report.push_back("unit law fails: " + syms[i].name + "*1");
    }
    // graded commutativity, sign on p only
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Bidegree sum = syms[i].bd + syms[j].bd;
            if (!H.in_window(sum) && !BigradedRing::forced_zero(sum)) continue;
            RingElement ab = H.mul(H.element(syms[i].name), H.element(syms[j].name));
            RingElement ba = H.mul(H.element(syms[j].name), H.element(syms[i].name));
            if ((syms[i].bd.p * syms[j].bd.p) % 2 != 0) ba = -ba;
            if (!(ab == ba))
                report.push_back("graded commutativity fails: " + syms[i].name + "*" +
                                 syms[j].name);
        }
    // associativity where both association orders stay in reach
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Bidegree ab = syms[i].bd + syms[j].bd;
                Bidegree bc = syms[j].bd + syms[k].bd;
                Bidegree tot = ab + syms[k].bd;
                auto reachable = [&](Bidegree d) {
                    return H.in_window(d) || BigradedRing::forced_zero(d);
                };
                if (!reachable(ab) || !reachable(bc) || !reachable(tot)) continue;
                RingElement left =
                    H.mul(H.mul(H.element(syms[i].name), H.element(syms[j].name)),
                          H.element(syms[k].name));
                RingElement right =
                    H.mul(H.element(syms[i].name),
                          H.mul(H.element(syms[j].name), H.element(syms[k].name)));
                if (!(left == right))
                    report.push_back("associativity fails: (" + syms[i].name + "*" +
                                     syms[j].name + ")*" + syms[k].name);
            }
    return report;
}

RingElement RingMorphism::apply(const RingElement& x) const {
    RingElement acc = target->zero(x.bidegree());
    const auto& names = source->basis(x.bidegree());
    for (size_t i = 0; i < names.size(); ++i) {
        if (x.coeffs()[i].is_zero()) continue;
        auto it = images.find(names[i]);
        if (it == images.end()) throw MalformedInput("ring morphism missing image of " + names[i]);
        acc = acc + it->second.scaled(x.coeffs()[i]);
    }
    return acc;
}

ValidationReport validate_ring_morphism(const RingMorphism& rho) {
    ValidationReport report;
    if (!rho.source || !rho.target) throw MalformedInput("ring morphism without source/target");
    const auto& syms = rho.source->symbols();
    for (const auto& s : syms) {
        auto it = rho.images.find(s.name);
        if (it == rho.images.end()) {
            report.push_back("missing image of basis symbol '" + s.name + "'");
            continue;
        }
        if (it->second.bidegree() != s.bd && !it->second.is_zero())
            report.push_back("bidegree violation: image of '" + s.name + "'");
    }
    if (!report.empty()) return report;  // later checks need well-typed images
    RingElement unit_img = rho.images.at(rho.source->unit_name());
    if (!(unit_img == rho.target->one())) report.push_back("unit not preserved");
    size_t n = syms.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Bidegree sum = syms[i].bd + syms[j].bd;
            if (!rho.source->in_window(sum) && !BigradedRing::forced_zero(sum)) continue;
            RingElement src =
                rho.source->mul(rho.source->element(syms[i].name), rho.source->element(syms[j].name));
            try {
                RingElement lhs = rho.apply(src);
                RingElement rhs =
                    rho.target->mul(rho.images.at(syms[i].name), rho.images.at(syms[j].name));
                if (!(lhs == rhs))
                    report.push_back("multiplicativity fails: " + syms[i].name + "*" +
                                     syms[j].name);
            } catch (const WindowOverflow&) {
                report.push_back("target window cannot hold image of " + syms[i].name + "*" +
                                 syms[j].name);
            }
        }
    return report;
}

namespace {

struct Monomial {
    std::vector<int> e;
    Bidegree bd;
};

std::string monomial_name(const std::vector<PolyGenerator>& gens, const std::vector<int>& e) {
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) out << "*";
        any = true;
        out << gens[i].name;
        if (e[i] > 1) out << "^" << e[i];
    }
    return any ? out.str() : "1";
}

bool killed_by(const std::vector<MonomialRelation>& relations, const std::vector<int>& e) {
    for (const auto& r : relations) {
        bool divides = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (r[i] > e[i]) {
                divides = false;
                break;
            }
        if (divides) return true;
    }
    return false;
}

}  // namespace

RingPtr make_polynomial_ring(const Field& base, const std::vector<PolyGenerator>& gens,
                             const std::vector<MonomialRelation>& relations,
                             const BigradedRing::Window& window) {
    bool char2 = base.finite() && base.characteristic() == 2;
    for (const auto& g : gens) {
        if (BigradedRing::forced_zero(g.bd))
            throw MalformedInput("generator '" + g.name + "' in zero region");
        if (g.bd == Bidegree{0, 0})
            throw MalformedInput("generator '" + g.name + "' in bidegree (0,0) is not finite");
        if (g.bd.q > window.q_max || g.bd.q < 0 || g.bd.p < window.p_min || g.bd.p > window.p_max)
            throw MalformedInput("generator '" + g.name + "' outside window");
    }
    for (const auto& r : relations) {
        if (r.size() != gens.size()) throw MalformedInput("relation exponent count mismatch");
        bool all_zero = true;
        for (int x : r) {
            if (x < 0) throw MalformedInput("negative relation exponent");
            if (x > 0) all_zero = false;
        }
        if (all_zero) throw InconsistentRelations("relation kills the unit");
    }

    // exponent caps keep the enumeration finite
    std::vector<int> cap(gens.size());
    int p_reach = std::max(std::abs(window.p_min), std::abs(window.p_max)) * 2 + 1;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!char2 && gens[i].bd.p % 2 != 0)
            cap[i] = 1;  // odd square dies away from characteristic 2
        else if (gens[i].bd.q > 0)
            cap[i] = window.q_max / gens[i].bd.q;
        else
            cap[i] = p_reach / std::abs(gens[i].bd.p);
    }

    std::vector<Monomial> monomials;
    std::vector<int> e(gens.size(), 0);
    std::function<void(size_t)> enumerate = [&](size_t i) {
        if (i == gens.size()) {
            Bidegree bd{0, 0};
            for (size_t k = 0; k < gens.size(); ++k) {
                bd.p += e[k] * gens[k].bd.p;
                bd.q += e[k] * gens[k].bd.q;
            }
            if (bd.p >= window.p_min && bd.p <= window.p_max && bd.q <= window.q_max &&
                !killed_by(relations, e))
                monomials.push_back({e, bd});
            return;
        }
        for (e[i] = 0; e[i] <= cap[i]; ++e[i]) enumerate(i + 1);
        e[i] = 0;
    };
    enumerate(0);

    std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
        if (a.bd.q != b.bd.q) return a.bd.q < b.bd.q;
        if (a.bd.p != b.bd.p) return a.bd.p < b.bd.p;
        return a.e < b.e;
    });

    std::vector<BigradedRing::Symbol> symbols;
    std::map<std::vector<int>, std::string> by_exponent;
    for (const auto& m : monomials) {
        std::string name = monomial_name(gens, m.e);
        symbols.push_back({name, m.bd});
        by_exponent[m.e] = name;
    }

    std::map<std::pair<std::string, std::string>, BigradedRing::Expansion> table;
    Scalar one = Scalar::one(base);
    for (const auto& u : monomials)
        for (const auto& v : monomials) {
            Bidegree sum = u.bd + v.bd;
            if (sum.p < window.p_min || sum.p > window.p_max || sum.q > window.q_max)
                continue;  // out-of-window products omitted, never an error here
            std::vector<int> w(gens.size());
            bool odd_square = false;
            for (size_t i = 0; i < gens.size(); ++i) {
                w[i] = u.e[i] + v.e[i];
                if (!char2 && gens[i].bd.p % 2 != 0 && w[i] >= 2) odd_square = true;
            }
            if (odd_square || killed_by(relations, w)) continue;  // zero product
            auto it = by_exponent.find(w);
            if (it == by_exponent.end()) continue;  // fell out of enumeration caps
            // reordering sign: right factors crossing left factors of odd p
            long crossings = 0;
            for (size_t a = 0; a < gens.size(); ++a) {
                if (gens[a].bd.p % 2 == 0 || v.e[a] == 0) continue;
                for (size_t b = a + 1; b < gens.size(); ++b)
                    if (gens[b].bd.p % 2 != 0) crossings += (long)v.e[a] * u.e[b];
            }
            Scalar c = (crossings % 2 != 0) ? -one : one;
            table[{by_exponent.at(u.e), by_exponent.at(v.e)}] = {{it->second, c}};
        }

    return std::make_shared<BigradedRing>(base, window, std::move(symbols), "1",
                                          std::move(table));
}

}  // namespace ts
