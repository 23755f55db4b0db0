#pragma once

#include <compare>
#include <string>
#include <vector>

#include "galmod/mat.hpp"

namespace galmod {

class ModuleElement;

/// Global order cap for exhaustive procedures, overridable through the
/// GALMOD_CAP environment variable (read once at startup).
i64 global_order_cap();

/// A finite abelian group in invariant-factor form: Z/d1 + ... + Z/dk
/// with 2 <= d1 | d2 | ... | dk.  The empty list is the trivial group.
class FinAbGroup {
public:
    FinAbGroup() = default;

    /// Normalizes an arbitrary factor list (each >= 2) into the
    /// divisibility chain via the Smith normal form of the diagonal
    /// relation matrix.
    static FinAbGroup make(std::vector<i64> factors);

    const std::vector<i64>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    i64 order() const;
    i64 exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    ModuleElement zero() const;
    ModuleElement element(Vec coords) const;   // reduces coordinates
    ModuleElement element_at(i64 index) const; // mixed-radix enumeration
    i64 index_of(const ModuleElement& e) const;

    bool operator==(const FinAbGroup&) const = default;

    std::string to_string() const;

private:
    explicit FinAbGroup(std::vector<i64> f) : factors_(std::move(f)) {}
    std::vector<i64> factors_;
};

/// A point of a FinAbGroup: one residue per invariant factor.
class ModuleElement {
public:
    ModuleElement(FinAbGroup parent, Vec coords);

    const FinAbGroup& parent() const { return parent_; }
    const Vec& coords() const { return coords_; }
    bool is_zero() const;
    i64 order() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    bool operator==(const ModuleElement& o) const;

    std::string to_string() const;

private:
    FinAbGroup parent_;
    Vec coords_;
};

ModuleElement scale(i64 n, const ModuleElement& a);

/// An endomorphism of a FinAbGroup given by an integer matrix; row i is
/// taken mod d_i.  Well-definedness requires d_i | a_ij * d_j for all
/// i, j, which is checked at construction.
class Endomorphism {
public:
    static Endomorphism make(FinAbGroup parent, Mat a);
    static Endomorphism identity(const FinAbGroup& g);
    static Endomorphism zero(const FinAbGroup& g);
    /// Multiplication by the integer n.
    static Endomorphism scalar(const FinAbGroup& g, i64 n);

    const FinAbGroup& parent() const { return parent_; }
    const Mat& matrix() const { return a_; }

    ModuleElement operator()(const ModuleElement& x) const;
    Endomorphism operator*(const Endomorphism& o) const;  // composition
    Endomorphism operator+(const Endomorphism& o) const;
    Endomorphism operator-(const Endomorphism& o) const;

    bool is_zero() const;
    bool is_identity() const;
    /// True when the matrix induces a bijection of the group.
    bool is_invertible() const;

    bool operator==(const Endomorphism& o) const;

private:
    Endomorphism(FinAbGroup parent, Mat a) : parent_(std::move(parent)), a_(std::move(a)) {}
    void reduce();
    FinAbGroup parent_;
    Mat a_;
};

void require_same_parent(const FinAbGroup& a, const FinAbGroup& b, const char* op);

}  // namespace galmod
