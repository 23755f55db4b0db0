#include "galmod/group.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "galmod/errors.hpp"

namespace galmod {

i64 global_order_cap() {
    static const i64 cap = [] {
        if (const char* env = std::getenv("GALMOD_CAP")) {
            i64 v = std::atoll(env);
            if (v > 0) return v;
        }
        return static_cast<i64>(1000000);
    }();
    return cap;
}

FinAbGroup FinAbGroup::make(std::vector<i64> factors) {
    for (i64 f : factors)
        if (f <= 1) throw error("FinAbGroup: every factor must be >= 2");
    i64 ord = 1;
    for (i64 f : factors) ord = checked_mul(ord, f);
    if (ord > global_order_cap()) throw cap_exceeded("FinAbGroup: order exceeds cap");

    // Smith normal form of the diagonal relation matrix gives the chain.
    Mat diag(factors.size(), Vec(factors.size(), 0));
    for (std::size_t i = 0; i < factors.size(); ++i) diag[i][i] = factors[i];
    Vec d = snf_diagonal(std::move(diag));
    std::vector<i64> chain;
    for (i64 v : d)
        if (v >= 2) chain.push_back(v);
    return FinAbGroup(std::move(chain));
}

i64 FinAbGroup::order() const {
    i64 ord = 1;
    for (i64 f : factors_) ord = checked_mul(ord, f);
    return ord;
}

ModuleElement FinAbGroup::zero() const {
    return ModuleElement(*this, Vec(factors_.size(), 0));
}

ModuleElement FinAbGroup::element(Vec coords) const {
    return ModuleElement(*this, std::move(coords));
}

ModuleElement FinAbGroup::element_at(i64 index) const {
    Vec c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = index % factors_[i];
        index /= factors_[i];
    }
    return ModuleElement(*this, std::move(c));
}

i64 FinAbGroup::index_of(const ModuleElement& e) const {
    i64 idx = 0, mul = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        idx += e.coords()[i] * mul;
        mul *= factors_[i];
    }
    return idx;
}

std::string FinAbGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << "+";
        os << "Z/" << factors_[i];
    }
    return os.str();
}

ModuleElement::ModuleElement(FinAbGroup parent, Vec coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_.rank())
        throw error("ModuleElement: coordinate count mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] = mod_reduce(coords_[i], parent_.factors()[i]);
}

bool ModuleElement::is_zero() const {
    for (i64 c : coords_)
        if (c != 0) return false;
    return true;
}

i64 ModuleElement::order() const {
    i64 ord = 1;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        i64 d = parent_.factors()[i];
        i64 o = d / std::gcd(coords_[i], d);
        ord = std::lcm(ord, o);
    }
    return ord;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    require_same_parent(parent_, o.parent_, "add");
    Vec c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return ModuleElement(parent_, std::move(c));
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    require_same_parent(parent_, o.parent_, "sub");
    Vec c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
    return ModuleElement(parent_, std::move(c));
}

ModuleElement ModuleElement::operator-() const {
    Vec c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return ModuleElement(parent_, std::move(c));
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    return parent_ == o.parent_ && coords_ == o.coords_;
}

std::string ModuleElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << ")";
    return os.str();
}

ModuleElement scale(i64 n, const ModuleElement& a) {
    Vec c(a.coords().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mul_mod(n, a.coords()[i], a.parent().factors()[i]);
    return ModuleElement(a.parent(), std::move(c));
}

void Endomorphism::reduce() {
    const auto& d = parent_.factors();
    for (std::size_t i = 0; i < a_.size(); ++i)
        for (std::size_t j = 0; j < a_[i].size(); ++j)
            a_[i][j] = mod_reduce(a_[i][j], d[i]);
}

Endomorphism Endomorphism::make(FinAbGroup parent, Mat a) {
    const auto& d = parent.factors();
    const std::size_t k = d.size();
    if (a.size() != k) throw bad_endomorphism("Endomorphism: matrix size mismatch");
    for (const auto& row : a)
        if (row.size() != k) throw bad_endomorphism("Endomorphism: matrix size mismatch");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            i64 need = d[i] / std::gcd(d[i], d[j]);
            if (mod_reduce(a[i][j], need) != 0)
                throw bad_endomorphism("Endomorphism: entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") is not well defined");
        }
    Endomorphism e(std::move(parent), std::move(a));
    e.reduce();
    return e;
}

Endomorphism Endomorphism::identity(const FinAbGroup& g) {
    return Endomorphism(g, identity_mat(g.rank()));
}

Endomorphism Endomorphism::zero(const FinAbGroup& g) {
    return Endomorphism(g, Mat(g.rank(), Vec(g.rank(), 0)));
}

Endomorphism Endomorphism::scalar(const FinAbGroup& g, i64 n) {
    Mat m(g.rank(), Vec(g.rank(), 0));
    for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = mod_reduce(n, g.factors()[i]);
    Endomorphism e(g, std::move(m));
    e.reduce();
    return e;
}

ModuleElement Endomorphism::operator()(const ModuleElement& x) const {
    require_same_parent(parent_, x.parent(), "apply");
    const auto& d = parent_.factors();
    Vec c(d.size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        i128 s = 0;
        for (std::size_t j = 0; j < d.size(); ++j)
            s += static_cast<i128>(a_[i][j]) * x.coords()[j];
        c[i] = static_cast<i64>(s % d[i]);
    }
    return ModuleElement(parent_, std::move(c));
}

Endomorphism Endomorphism::operator*(const Endomorphism& o) const {
    require_same_parent(parent_, o.parent_, "compose");
    Endomorphism e(parent_, mat_mul(a_, o.a_));
    e.reduce();
    return e;
}

Endomorphism Endomorphism::operator+(const Endomorphism& o) const {
    require_same_parent(parent_, o.parent_, "add");
    Mat m = a_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += o.a_[i][j];
    Endomorphism e(parent_, std::move(m));
    e.reduce();
    return e;
}

Endomorphism Endomorphism::operator-(const Endomorphism& o) const {
    require_same_parent(parent_, o.parent_, "sub");
    Mat m = a_;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= o.a_[i][j];
    Endomorphism e(parent_, std::move(m));
    e.reduce();
    return e;
}

bool Endomorphism::is_zero() const {
    for (const auto& row : a_)
        for (i64 v : row)
            if (v != 0) return false;
    return true;
}

bool Endomorphism::is_identity() const {
    for (std::size_t i = 0; i < a_.size(); ++i)
        for (std::size_t j = 0; j < a_[i].size(); ++j) {
            i64 want = (i == j) ? mod_reduce(1, parent_.factors()[i]) : 0;
            if (a_[i][j] != want) return false;
        }
    return true;
}

bool Endomorphism::is_invertible() const {
    // Bijective iff the kernel {x in M : Ax = 0} is trivial: the solution
    // lattice of Ax == 0 (mod d_i) must equal the diagonal relation lattice.
    const auto& d = parent_.factors();
    if (d.empty()) return true;
    Vec mods(d.begin(), d.end());
    Mat ker = congruence_kernel(a_, mods, mods);
    // kernel subgroup has order |M| / det(ker); bijective iff it is trivial
    return hnf_det(ker) == parent_.order();
}

bool Endomorphism::operator==(const Endomorphism& o) const {
    return parent_ == o.parent_ && a_ == o.a_;
}

void require_same_parent(const FinAbGroup& a, const FinAbGroup& b, const char* op) {
    if (!(a == b)) throw parent_mismatch(std::string("parent mismatch in ") + op);
}

}  // namespace galmod
